from collections import deque
from dataclasses import dataclass, field

import numpy as np

from src.designs.steiner import TripleSystem
from src.hypertrees.hypertree import Hypertree
from src.utils.errors import PackingShortfall

# ================= CONFIG =================
DEFAULT_RESEEDS = 3
ROOT_RETRIES = 25


def _component_plans(forest: Hypertree):
    # Split F into components, each as (root, [(x, a, b), ...]) where edge
    # {x, a, b} is reached through the already placed vertex x (BFS order).
    seen = set()
    plans = []
    for start in forest.vertices:
        if start in seen:
            continue
        seen.add(start)
        steps, queue = [], deque([start])
        size = 1
        used_edges = set()
        while queue:
            x = queue.popleft()
            for e in forest.incidence[x]:
                if e in used_edges:
                    continue
                used_edges.add(e)
                a, b = forest.others(e, x)
                steps.append((x, a, b))
                seen.update((a, b))
                queue.extend((a, b))
                size += 2
        plans.append((start, steps, size))
    return plans


@dataclass
class PackingResult:
    copies: list = field(default_factory=list)  # per copy: F-vertex -> host vertex
    attempts: int = 0
    components: int = 0
    vertices_used: int = 0

    def stats(self):
        return {
            "copies": len(self.copies),
            "attempts": self.attempts,
            "components": self.components,
            "vertices_used": self.vertices_used,
        }


def _place_component(stilde, plan, used, rng):
    root, steps, _ = plan
    triples = stilde.triple_array
    for _ in range(ROOT_RETRIES):
        free = np.flatnonzero(~used)
        if len(free) == 0:
            return None
        image = {root: int(rng.choice(free))}
        used[image[root]] = True
        placed = [image[root]]
        for x, a, b in steps:
            hx = image[x]
            incident = stilde.incident(hx)
            if not incident:
                break
            rows = triples[list(incident)]
            others = rows[rows != hx].reshape(-1, 2)
            open_rows = np.flatnonzero(~used[others].any(axis=1))
            if len(open_rows) == 0:
                break
            pick = others[int(rng.choice(open_rows))]
            if rng.random() < 0.5:
                pick = pick[::-1]
            image[a], image[b] = int(pick[0]), int(pick[1])
            used[pick] = True
            placed.extend((image[a], image[b]))
        else:
            return image
        used[placed] = False
    return None


def pack_forest(stilde: TripleSystem, forest: Hypertree, copies_needed: int, seed, reseeds=DEFAULT_RESEEDS):
    # Greedy randomized packing of copies_needed vertex-disjoint copies of F
    # into the partial system S~. Components of all copies are placed largest
    # first; each gets a random free root image and then grows edge by edge
    # through triples whose two other vertices are still free. A component
    # that cannot be finished is retried from another root; a stuck attempt
    # restarts with a fresh stream, and after `reseeds` attempts the caller
    # gets PackingShortfall.
    r = forest.n
    room = stilde.num_vertices()
    if copies_needed * r > room:
        raise PackingShortfall(f"need {copies_needed} x {r} vertices, S~ has {room}")
    if copies_needed == 0 or r == 0:
        return PackingResult(copies=[{} for _ in range(copies_needed)])

    plans = _component_plans(forest)
    order = sorted(
        ((c, i) for c in range(copies_needed) for i in range(len(plans))),
        key=lambda ci: (-plans[ci[1]][2], ci[0], ci[1]),
    )

    placed_best = 0
    for attempt in range(reseeds):
        rng = np.random.default_rng([int(seed), attempt])
        used = ~np.asarray(stilde.vertex_mask, dtype=bool)
        copies = [{} for _ in range(copies_needed)]
        done = 0
        for c, i in order:
            image = _place_component(stilde, plans[i], used, rng)
            if image is None:
                break
            copies[c].update(image)
            done += 1
        else:
            return PackingResult(
                copies=copies,
                attempts=attempt + 1,
                components=len(order),
                vertices_used=copies_needed * r,
            )
        placed_best = max(placed_best, done)
    raise PackingShortfall(f"placed at best {placed_best}/{len(order)} components after {reseeds} attempt(s)")


def check_packing(stilde: TripleSystem, forest: Hypertree, copies):
    # Problems found; empty when copies are disjoint valid embeddings of F.
    problems = []
    seen = set()
    for c, image in enumerate(copies):
        if set(image) != set(forest.vertices):
            problems.append(f"copy {c} does not map every vertex of F")
            continue
        values = set(image.values())
        if len(values) != len(image):
            problems.append(f"copy {c} is not injective")
        if values & seen:
            problems.append(f"copy {c} reuses a host vertex")
        seen |= values
        for v in values:
            if not stilde.has_vertex(v):
                problems.append(f"copy {c} uses {v} outside S~")
                break
        for e in forest.edges:
            x, y, z = (image[v] for v in e)
            if not stilde.has_triple(x, y, z):
                problems.append(f"copy {c} sends {e} to the non-triple {(x, y, z)}")
    return problems
