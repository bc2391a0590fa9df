from dataclasses import dataclass, field

import numpy as np

from src.designs.steiner import TripleSystem
from src.utils.errors import ConfigError, DesignError

ALL = None


@dataclass
class StarFamily:
    anchors: tuple
    members: list = field(default_factory=list)  # (center, (w_1, ..., w_c))

    @property
    def c(self) -> int:
        return len(self.anchors)

    @property
    def w_sets(self):
        return [frozenset(ws) | {u} for u, ws in self.members]

    def __len__(self):
        return len(self.members)

    def guaranteed(self, m: int) -> int:
        return (m - 1) // (self.c * self.c + 1)

    def to_dict(self):
        return {
            "anchors": list(self.anchors),
            "c": self.c,
            "members": [{"center": u, "w": list(ws)} for u, ws in self.members],
        }


def find_disjoint_stars(sts: TripleSystem, anchors, want=ALL, d=None) -> StarFamily:
    # Greedy stars through the anchors v_1..v_c with pairwise disjoint
    # W-sets {w_1..w_c, u}. Centers are taken in ascending label from the
    # candidate set, which starts as V minus the anchors minus Q and loses
    # W_l and Q^(l) after every star.
    anchors = tuple(int(v) for v in anchors)
    c = len(anchors)
    if c == 0:
        raise ConfigError("At least one anchor is required")
    if d is not None and c > d:
        raise ConfigError(f"{c} anchors exceed the degree bound d={d}")
    if len(set(anchors)) != c:
        raise DesignError(f"Anchors are not distinct: {anchors}")
    for v in anchors:
        if not sts.has_vertex(v):
            raise DesignError(f"Anchor {v} is not a vertex of the system")
    if want is not None and want < 0:
        raise ConfigError(f"want must be non-negative, got {want}")

    alive = np.array(sts.vertex_mask, dtype=bool, copy=True)
    alive[list(anchors)] = False
    # Q: third vertices of anchor pairs
    for i in range(c):
        for j in range(i + 1, c):
            z = sts.third_vertex(anchors[i], anchors[j])
            if z is not None:
                alive[z] = False

    family = StarFamily(anchors=anchors)
    candidates = np.flatnonzero(alive)
    for u in candidates.tolist():
        if want is not None and len(family) >= want:
            break
        if not alive[u]:
            continue
        ws = [sts.third_vertex(v, u) for v in anchors]
        alive[u] = False
        if any(w is None for w in ws):
            # partial systems only: u does not see every anchor
            continue
        family.members.append((u, tuple(ws)))
        alive[ws] = False
        for i, v in enumerate(anchors):
            for j, w in enumerate(ws):
                if i != j:
                    z = sts.third_vertex(v, w)
                    if z is not None:
                        alive[z] = False
    return family


def check_star_family(sts: TripleSystem, family: StarFamily):
    # Problems found, empty when every member is a star and W-sets are disjoint.
    problems = []
    seen = set(family.anchors)
    for u, ws in family.members:
        for v, w in zip(family.anchors, ws):
            if not sts.has_triple(v, w, u):
                problems.append(f"{{{v}, {w}, {u}}} is not a triple")
        w_set = set(ws) | {u}
        if len(w_set) != family.c + 1:
            problems.append(f"W-set of center {u} repeats a vertex")
        if w_set & seen:
            problems.append(f"W-set of center {u} meets an anchor or an earlier W-set")
        seen |= w_set
    return problems
