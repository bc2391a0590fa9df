import numpy as np

from src.embedding.certificate import Embedding, certify
from src.hypertrees.annotation import default_root
from src.hypertrees.hypertree import Hypertree


def greedy_capacity(m: int) -> int:
    # edge count below which the greedy never gets stuck
    return (m + 1) // 4


def greedy_embed(t: Hypertree, sts, seed=None) -> Embedding:
    # Baseline without decomposition: place edges in BFS order from the
    # default root, each on a random host triple through the image of its
    # already placed vertex whose two other vertices are unused. Returns None
    # when some edge finds no such triple.
    rng = np.random.default_rng(seed)
    if t.n == 0:
        return Embedding(vertex_map={})
    vertices = np.asarray(sts.vertices(), dtype=np.int64)
    if len(vertices) < t.n:
        return None
    used = np.zeros(sts.m, dtype=bool)
    root = default_root(t)
    image = {root: int(rng.choice(vertices))}
    used[image[root]] = True

    triples = sts.triple_array
    queue = [root]
    seen_edges = set()
    while queue:
        x = queue.pop(0)
        for e in t.incidence[x]:
            if e in seen_edges:
                continue
            seen_edges.add(e)
            a, b = t.others(e, x)
            hx = image[x]
            rows = triples[list(sts.incident(hx))]
            if len(rows) == 0:
                return None
            others = rows[rows != hx].reshape(-1, 2)
            open_rows = np.flatnonzero(~used[others].any(axis=1))
            if len(open_rows) == 0:
                return None
            pick = others[int(rng.choice(open_rows))]
            if rng.random() < 0.5:
                pick = pick[::-1]
            image[a], image[b] = int(pick[0]), int(pick[1])
            used[pick] = True
            queue.extend((a, b))
    return certify(t, sts, image)
