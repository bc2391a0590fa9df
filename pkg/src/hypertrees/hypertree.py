from dataclasses import dataclass, field

import networkx as nx
import numpy as np
from scipy.sparse import coo_matrix
from scipy.sparse.csgraph import connected_components

from src.utils.errors import HypertreeError


def _norm_edge(edge):
    return tuple(sorted(int(v) for v in edge))


class Hypertree:
    """
    3-uniform hypergraph on an explicit vertex set (labels need not be
    0..n-1, so fragments of a larger tree keep their original labels).
    The constructor only checks that edges are well formed; tree-ness is
    the job of validate_hypertree.
    """

    def __init__(self, edges, vertices=None, n=None):
        edges = tuple(_norm_edge(e) for e in edges)
        if vertices is None:
            if n is not None:
                vertices = range(int(n))
            else:
                vertices = {v for e in edges for v in e}
        self.vertices = tuple(sorted(int(v) for v in vertices))
        self.edges = edges

        vset = set(self.vertices)
        if len(vset) != len(self.vertices):
            raise HypertreeError("Repeated vertex label")
        incidence = {v: [] for v in self.vertices}
        for idx, e in enumerate(edges):
            if len(e) != 3 or len(set(e)) != 3:
                raise HypertreeError(f"Edge #{idx} is not a 3-set: {e}")
            for v in e:
                if v not in vset:
                    raise HypertreeError(f"Edge #{idx} uses unknown vertex {v}")
                incidence[v].append(idx)
        self.incidence = {v: tuple(lst) for v, lst in incidence.items()}

    @classmethod
    def single_vertex(cls, v):
        return cls((), vertices=(v,))

    @property
    def n(self) -> int:
        return len(self.vertices)

    def degree(self, v) -> int:
        return len(self.incidence[v])

    def max_degree(self) -> int:
        return max((len(lst) for lst in self.incidence.values()), default=0)

    def others(self, edge_index, v):
        # the two vertices of the edge other than v
        return tuple(x for x in self.edges[edge_index] if x != v)

    def relabel(self, mapping):
        return Hypertree(
            [tuple(mapping[v] for v in e) for e in self.edges],
            vertices=[mapping[v] for v in self.vertices],
        )

    def to_dict(self):
        return {"n": self.n, "vertices": list(self.vertices), "edges": [list(e) for e in self.edges]}

    def __eq__(self, other):
        return (
            isinstance(other, Hypertree)
            and self.vertices == other.vertices
            and sorted(self.edges) == sorted(other.edges)
        )

    def __hash__(self):
        return hash((self.vertices, tuple(sorted(self.edges))))

    def __repr__(self):
        return f"Hypertree(n={self.n}, edges={len(self.edges)})"


def max_degree(t: Hypertree) -> int:
    return t.max_degree()


# ===============================
# VALIDATION
# ===============================
@dataclass
class HypertreeReport:
    ok: bool
    violation: str = None  # malformed | cycle | disconnected | size
    message: str = "ok"

    def to_dict(self):
        return {"ok": self.ok, "violation": self.violation, "message": self.message}


def validate_hypertree(edges, n, vertices=None) -> HypertreeReport:
    # ok iff the vertex-edge incidence graph is a tree (connected, links =
    # nodes - 1), which is the unique-path definition, and |E| = (n-1)/2.
    vertices = list(range(int(n))) if vertices is None else sorted(vertices)
    index = {v: i for i, v in enumerate(vertices)}
    edges = [tuple(e) for e in edges]

    for i, e in enumerate(edges):
        if len(e) != 3 or len(set(e)) != 3:
            return HypertreeReport(False, "malformed", f"edge #{i} is not a 3-set: {e}")
        for v in e:
            if v not in index:
                return HypertreeReport(False, "malformed", f"edge #{i} uses unknown vertex {v}")

    nv, ne = len(vertices), len(edges)
    if nv == 0:
        return HypertreeReport(False, "size", "empty vertex set")
    nodes = nv + ne
    rows = np.array([index[v] for e in edges for v in e], dtype=np.int64)
    cols = np.repeat(np.arange(nv, nv + ne, dtype=np.int64), 3)
    graph = coo_matrix((np.ones(len(rows), dtype=np.int8), (rows, cols)), shape=(nodes, nodes))
    n_components, _ = connected_components(graph, directed=False)

    # A forest on `nodes` nodes with c components has exactly nodes - c links.
    if len(rows) > nodes - n_components:
        return HypertreeReport(False, "cycle", "some pair of vertices is joined by two paths")
    if n_components > 1:
        return HypertreeReport(False, "disconnected", f"{n_components} components")
    if ne != (nv - 1) // 2 or nv % 2 == 0:
        return HypertreeReport(False, "size", f"{ne} edges on {nv} vertices, expected (n-1)/2")
    return HypertreeReport(True)


def check_hypertree(t: Hypertree) -> Hypertree:
    report = validate_hypertree(t.edges, t.n, vertices=t.vertices)
    if not report.ok:
        raise HypertreeError(f"Not a hypertree ({report.violation}): {report.message}")
    return t


def is_subdivision_tree(t: Hypertree) -> bool:
    # every edge carries a degree-one vertex
    return all(any(t.degree(v) == 1 for v in e) for e in t.edges)


# ===============================
# GRAPH TREES
# ===============================
@dataclass
class GraphTree:
    order: int
    edges: list = field(default_factory=list)

    def __post_init__(self):
        self.edges = [tuple(sorted((int(a), int(b)))) for a, b in self.edges]

    def to_networkx(self):
        g = nx.Graph()
        g.add_nodes_from(range(self.order))
        g.add_edges_from(self.edges)
        return g

    def degrees(self):
        deg = [0] * self.order
        for a, b in self.edges:
            deg[a] += 1
            deg[b] += 1
        return deg

    def is_valid(self) -> bool:
        if self.order < 1 or len(self.edges) != self.order - 1:
            return False
        if any(not (0 <= v < self.order) for e in self.edges for v in e):
            return False
        return nx.is_tree(self.to_networkx())

    def to_dict(self):
        return {"order": self.order, "edges": [list(e) for e in self.edges]}


def subdivide(t: GraphTree) -> Hypertree:
    # 3-uniform subdivision: edge j = {x, y} of t becomes {x, y, z_xy} with
    # z_xy = order + j. The result has 2*order - 1 vertices.
    if not t.is_valid():
        raise HypertreeError(f"Not a graph tree: order={t.order}, edges={len(t.edges)}")
    edges = [(x, y, t.order + j) for j, (x, y) in enumerate(t.edges)]
    return Hypertree(edges, n=2 * t.order - 1)


def counterexample_tree(s: int = 3) -> Hypertree:
    # Edges {u, v_i, w_i} for 1 <= i <= s-1 plus {w_1, x, y}, on 2s+1 vertices.
    # Labels: u=0, v_i=2i-1, w_i=2i, x=2s-1, y=2s. It fits in no STS(2s+1).
    if s < 3:
        raise HypertreeError(f"The counterexample needs s >= 3, got {s}")
    edges = [(0, 2 * i - 1, 2 * i) for i in range(1, s)]
    edges.append((2, 2 * s - 1, 2 * s))
    return Hypertree(edges, n=2 * s + 1)
