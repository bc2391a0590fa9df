import itertools
import math
import time
from dataclasses import dataclass

from src.embedding.certificate import Embedding, certify
from src.hypertrees.annotation import default_root
from src.hypertrees.hypertree import Hypertree
from src.utils.errors import ConfigError, SizeLimitExceeded

FOUND = "FOUND"
NONE = "NONE"
BUDGET_EXCEEDED = "BUDGET_EXCEEDED"

# ================= CONFIG =================
DEFAULT_NODE_LIMIT = 2_000_000
DEFAULT_TIME_LIMIT = 60.0
MAX_ISO_VERTICES = 9
MAX_NAIVE_MAPS = 2_000_000


@dataclass
class SearchBudget:
    node_limit: int = DEFAULT_NODE_LIMIT
    time_limit: float = DEFAULT_TIME_LIMIT

    def __post_init__(self):
        if self.node_limit <= 0 or self.time_limit <= 0:
            raise ConfigError(f"Search limits must be positive: {self}")


@dataclass
class OracleResult:
    status: str
    embedding: Embedding = None
    nodes: int = 0

    def to_dict(self):
        out = {"status": self.status, "nodes": self.nodes}
        if self.embedding is not None:
            out.update(self.embedding.to_dict())
        return out


class _OutOfBudget(Exception):
    pass


def _edge_order(t: Hypertree, root):
    # BFS from the root: each edge meets the earlier ones in exactly one vertex
    steps, seen_edges, queue = [], set(), [root]
    while queue:
        x = queue.pop(0)
        for e in t.incidence[x]:
            if e not in seen_edges:
                seen_edges.add(e)
                a, b = t.others(e, x)
                steps.append((x, a, b))
                queue.extend((a, b))
    return steps


def brute_embed(t: Hypertree, sts, budget: SearchBudget = None) -> OracleResult:
    # Backtracking over the tree's edges in BFS order: the root tries every
    # host vertex, then each edge is matched to a triple (ascending index)
    # through the image of its placed vertex, in both orientations. NONE is
    # only reported after the whole space is exhausted.
    budget = budget or SearchBudget()
    if t.n == 0:
        return OracleResult(FOUND, Embedding(vertex_map={}))
    host_vertices = sts.vertices()
    if len(host_vertices) < t.n:
        return OracleResult(NONE)

    root = default_root(t)
    steps = _edge_order(t, root)
    deadline = time.monotonic() + budget.time_limit
    image, used = {}, set()
    nodes = 0

    def tick():
        nonlocal nodes
        nodes += 1
        if nodes > budget.node_limit or (nodes % 1024 == 0 and time.monotonic() > deadline):
            raise _OutOfBudget

    def search(pos):
        if pos == len(steps):
            return True
        x, a, b = steps[pos]
        hx = image[x]
        for idx in sts.incident(hx):
            p, q = (v for v in sts.triple(idx) if v != hx)
            if p in used or q in used:
                continue
            for ha, hb in ((p, q), (q, p)):
                tick()
                image[a], image[b] = ha, hb
                used.update((ha, hb))
                if search(pos + 1):
                    return True
                used.difference_update((ha, hb))
                del image[a], image[b]
        return False

    try:
        for h in host_vertices:
            tick()
            image[root] = h
            used.add(h)
            if search(0):
                return OracleResult(FOUND, certify(t, sts, image), nodes)
            used.discard(h)
            del image[root]
    except _OutOfBudget:
        return OracleResult(BUDGET_EXCEEDED, nodes=nodes)
    return OracleResult(NONE, nodes=nodes)


def _degree_groups(t: Hypertree):
    groups = {}
    for v in t.vertices:
        groups.setdefault(t.degree(v), []).append(v)
    return groups


def exhaustive_isomorphic(a: Hypertree, b: Hypertree) -> bool:
    # True iff some vertex bijection maps E(a) onto E(b). Tries every
    # bijection that preserves degrees (all others cannot work).
    for t in (a, b):
        if t.n > MAX_ISO_VERTICES:
            raise SizeLimitExceeded(f"isomorphism oracle is limited to {MAX_ISO_VERTICES} vertices, got {t.n}")
    if a.n != b.n or len(a.edges) != len(b.edges):
        return False
    ga, gb = _degree_groups(a), _degree_groups(b)
    if {d: len(vs) for d, vs in ga.items()} != {d: len(vs) for d, vs in gb.items()}:
        return False

    target = {frozenset(e) for e in b.edges}
    degrees = sorted(ga)
    sources = [ga[d] for d in degrees]
    for parts in itertools.product(*(itertools.permutations(gb[d]) for d in degrees)):
        mapping = {}
        for src, dst in zip(sources, parts):
            mapping.update(zip(src, dst))
        if all(frozenset(mapping[v] for v in e) in target for e in a.edges):
            return True
    return False


def naive_embedding_count(host, forest: Hypertree, pinned=None) -> int:
    # Count embeddings by trying every injective map V(F) -> V(host); the
    # slow independent cross-check for the counting module.
    host_vertices = host.vertices()
    total_maps = math.perm(len(host_vertices), forest.n)
    if total_maps > MAX_NAIVE_MAPS:
        raise SizeLimitExceeded(f"{total_maps} candidate maps exceed {MAX_NAIVE_MAPS}")
    pinned = pinned or {}
    verts = list(forest.vertices)
    count = 0
    for images in itertools.permutations(host_vertices, len(verts)):
        mapping = dict(zip(verts, images))
        if any(mapping[v] != h for v, h in pinned.items()):
            continue
        if all(host.has_triple(*(mapping[v] for v in e)) for e in forest.edges):
            count += 1
    return count
