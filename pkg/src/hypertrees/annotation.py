from collections import deque
from dataclasses import dataclass, field

from src.hypertrees.hypertree import Hypertree
from src.utils.errors import HypertreeError

RED = "red"
BLUE = "blue"


@dataclass
class RootedAnnotation:
    root: int
    father: dict = field(default_factory=dict)  # vertex -> father (root absent)
    father_edge: dict = field(default_factory=dict)  # vertex -> index of the edge to its father
    child_edges: dict = field(default_factory=dict)  # vertex -> edges hanging below it
    celibate_of_edge: list = field(default_factory=list)
    color: dict = field(default_factory=dict)
    progeny_size: dict = field(default_factory=dict)
    order: list = field(default_factory=list)  # BFS order from the root

    def is_red(self, v) -> bool:
        return self.color[v] == RED

    def is_celibate(self, v) -> bool:
        e = self.father_edge.get(v)
        return e is not None and self.celibate_of_edge[e] == v

    def sons(self, t: Hypertree, v):
        return [x for e in self.child_edges[v] for x in t.others(e, v)]

    def to_dict(self):
        return {
            "root": self.root,
            "celibate_of_edge": list(self.celibate_of_edge),
            "red": sorted(v for v, c in self.color.items() if c == RED),
            "progeny_size": {str(v): s for v, s in sorted(self.progeny_size.items())},
        }


def default_root(t: Hypertree) -> int:
    candidates = [v for v in t.vertices if t.degree(v) >= 2]
    return min(candidates) if candidates else t.vertices[0]


def annotate(t: Hypertree, root=None) -> RootedAnnotation:
    # Root t, pick one celibate vertex per edge (smallest label among the
    # degree-one vertices other than the root) and color: celibate blue,
    # root red, everything else opposite to its father.
    if t.n == 0:
        raise HypertreeError("Cannot annotate an empty hypertree")
    has_branching = any(t.degree(v) >= 2 for v in t.vertices)
    if root is None:
        root = default_root(t)
    elif root not in t.incidence:
        raise HypertreeError(f"Root {root} is not a vertex of the tree")
    elif t.degree(root) < 2 and has_branching:
        raise HypertreeError(f"Root {root} has degree {t.degree(root)}; a vertex of degree >= 2 is required")

    ann = RootedAnnotation(root=root)
    ann.child_edges = {v: [] for v in t.vertices}

    # BFS for father relations
    seen = {root}
    queue = deque([root])
    while queue:
        v = queue.popleft()
        ann.order.append(v)
        for e in t.incidence[v]:
            if e == ann.father_edge.get(v):
                continue
            ann.child_edges[v].append(e)
            for x in t.others(e, v):
                if x in seen:
                    raise HypertreeError(f"Vertex {x} reached twice; not a hypertree")
                seen.add(x)
                ann.father[x] = v
                ann.father_edge[x] = e
                queue.append(x)
    if len(seen) != t.n:
        raise HypertreeError(f"Only {len(seen)} of {t.n} vertices reachable from the root")

    for idx, e in enumerate(t.edges):
        lonely = [v for v in e if t.degree(v) == 1 and v != root]
        if not lonely:
            raise HypertreeError(f"Edge {e} has no degree-one vertex; not a subdivision tree")
        ann.celibate_of_edge.append(min(lonely))

    celibate = set(ann.celibate_of_edge)
    for v in ann.order:
        if v in celibate:
            ann.color[v] = BLUE
        elif v == root:
            ann.color[v] = RED
        else:
            ann.color[v] = BLUE if ann.color[ann.father[v]] == RED else RED

    for v in ann.order:
        ann.progeny_size[v] = 1
    for v in reversed(ann.order):
        if v != root:
            ann.progeny_size[ann.father[v]] += ann.progeny_size[v]
    return ann


def check_coloring(t: Hypertree, ann: RootedAnnotation) -> list:
    # Problems with the red/blue invariants, empty when the coloring is proper.
    problems = []
    for idx, e in enumerate(t.edges):
        reds = [v for v in e if ann.color[v] == RED]
        if len(reds) != 1:
            problems.append(f"edge {e} has {len(reds)} red vertices")
        if ann.color[ann.celibate_of_edge[idx]] != BLUE:
            problems.append(f"celibate vertex of {e} is not blue")
    return problems
