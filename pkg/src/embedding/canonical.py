from collections import deque
from dataclasses import dataclass, field

from src.hypertrees.hypertree import Hypertree

SINGLE_VERTEX_KEY = "v[]"


def _incidence_adjacency(p: Hypertree):
    # Nodes 0..n-1 are the tree's vertices (in p.vertices order), n.. its edges.
    index = {v: i for i, v in enumerate(p.vertices)}
    n = p.n
    adj = [[] for _ in range(n + len(p.edges))]
    for j, e in enumerate(p.edges):
        node = n + j
        for v in e:
            adj[index[v]].append(node)
            adj[node].append(index[v])
    return adj


def _tree_centers(adj):
    n = len(adj)
    if n == 0:
        return []
    deg = [len(a) for a in adj]
    leaves = [i for i, d in enumerate(deg) if d <= 1]
    removed = len(leaves)
    while removed < n:
        new_leaves = []
        for u in leaves:
            deg[u] = 0
            for v in adj[u]:
                if deg[v] > 0:
                    deg[v] -= 1
                    if deg[v] == 1:
                        new_leaves.append(v)
        removed += len(new_leaves)
        leaves = new_leaves
    return leaves if leaves else [0]


def _rooted_codes(root, adj, n_vertices):
    # AHU codes of every node for the incidence tree rooted at `root`, built
    # bottom-up over the BFS order so deep trees never hit the recursion limit.
    parent = {root: -1}
    order = [root]
    queue = deque([root])
    while queue:
        u = queue.popleft()
        for v in adj[u]:
            if v not in parent:
                parent[v] = u
                order.append(v)
                queue.append(v)
    codes = {}
    for u in reversed(order):
        children = sorted(codes[v] for v in adj[u] if v != parent[u])
        tag = "v" if u < n_vertices else "e"
        codes[u] = f"{tag}[{''.join(children)}]"
    return codes, parent


def canonical_form(p: Hypertree):
    # (key, order): the canonical key of p and its vertices listed in
    # canonical order. Two isomorphic trees get the same key, and matching
    # their orders position by position is an isomorphism.
    if p.n == 0:
        return "", []
    if not p.edges:
        return SINGLE_VERTEX_KEY, list(p.vertices)

    adj = _incidence_adjacency(p)
    best = None
    for c in _tree_centers(adj):
        codes, parent = _rooted_codes(c, adj, p.n)
        if best is None or codes[c] < best[0]:
            best = (codes[c], c, codes, parent)
    key, root, codes, parent = best

    order = []
    queue = deque([root])
    while queue:
        u = queue.popleft()
        if u < p.n:
            order.append(p.vertices[u])
        children = sorted((v for v in adj[u] if v != parent[u]), key=lambda x: codes[x])
        queue.extend(children)
    return key, order


def canonical_key(p: Hypertree) -> str:
    return canonical_form(p)[0]


# ===============================
# ISOMORPHISM CLASSES
# ===============================
@dataclass
class IsoClass:
    key: str
    representative: Hypertree  # labels 0..size-1 in canonical order
    members: list = field(default_factory=list)  # indices into the subtree list
    orders: dict = field(default_factory=dict)  # member index -> canonical vertex order

    @property
    def size(self) -> int:
        return self.representative.n

    @property
    def l_i(self) -> int:
        return len(self.members)

    def member_map(self, member):
        # member vertex -> representative vertex
        return {v: i for i, v in enumerate(self.orders[member])}


@dataclass
class IsoClassPartition:
    classes: list
    l: int
    k: int

    @property
    def t(self) -> int:
        return len(self.classes)

    def polya_ok(self) -> bool:
        # fewer classes than 3^k, the count bound for trees on k vertices
        return self.t < 3**self.k

    def class_of(self, member):
        for i, cls in enumerate(self.classes):
            if member in cls.orders:
                return i
        raise KeyError(member)

    def to_dict(self):
        return {
            "t": self.t,
            "l": self.l,
            "polya_ok": self.polya_ok(),
            "classes": [
                {"key": c.key, "size": c.size, "l_i": c.l_i, "members": list(c.members)} for c in self.classes
            ],
        }


def partition_classes(subtrees, k: int) -> IsoClassPartition:
    # Group the subtrees by canonical key, in order of first appearance.
    # Accepts a Decomposition or a plain list of Hypertree fragments.
    subtrees = getattr(subtrees, "subtrees", subtrees)
    by_key = {}
    classes = []
    for idx, p in enumerate(subtrees):
        key, order = canonical_form(p)
        if key not in by_key:
            relabel = {v: i for i, v in enumerate(order)}
            by_key[key] = IsoClass(key=key, representative=p.relabel(relabel))
            classes.append(by_key[key])
        cls = by_key[key]
        cls.members.append(idx)
        cls.orders[idx] = tuple(order)
    return IsoClassPartition(classes=classes, l=len(subtrees), k=k)
