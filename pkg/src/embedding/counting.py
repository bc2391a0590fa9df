from collections import deque

from src.designs.steiner import TripleSystem
from src.hypertrees.hypertree import Hypertree
from src.utils.errors import SizeLimitExceeded

# ================= CONFIG =================
MAX_HOST_VERTICES = 15
MAX_FOREST_VERTICES = 7


def _guard(host: TripleSystem, forest: Hypertree):
    if host.num_vertices() > MAX_HOST_VERTICES:
        raise SizeLimitExceeded(f"host has {host.num_vertices()} > {MAX_HOST_VERTICES} vertices")
    if forest.n > MAX_FOREST_VERTICES:
        raise SizeLimitExceeded(f"forest has {forest.n} > {MAX_FOREST_VERTICES} vertices")


def _assignment_order(forest: Hypertree):
    # component by component in BFS order, so every edge closes as early as possible
    order, seen = [], set()
    for start in forest.vertices:
        if start in seen:
            continue
        seen.add(start)
        queue = deque([start])
        while queue:
            x = queue.popleft()
            order.append(x)
            for e in forest.incidence[x]:
                for y in forest.others(e, x):
                    if y not in seen:
                        seen.add(y)
                        queue.append(y)
    return order


def _is_induced(host, forest, image):
    edge_set = {frozenset(e) for e in forest.edges}
    back = {h: v for v, h in image.items()}
    verts = list(image)
    for i, a in enumerate(verts):
        for b in verts[i + 1 :]:
            z = host.third_vertex(image[a], image[b])
            if z is not None and z in back and frozenset((a, b, back[z])) not in edge_set:
                return False
    return True


def iter_embeddings(host: TripleSystem, forest: Hypertree, pinned=None, induced=False):
    # Every injective map V(F) -> V(host) sending each edge of F onto a host
    # triple, honoring the pins. A vertex that closes an edge has exactly one
    # possible image (the third vertex of its two placed partners); every
    # other vertex ranges over all free host vertices.
    _guard(host, forest)
    pinned = dict(pinned or {})
    for v, h in pinned.items():
        if v not in forest.incidence or not host.has_vertex(h):
            return
    order = _assignment_order(forest)
    host_vertices = host.vertices()
    image, used = {}, set()

    def candidates(v):
        for e in forest.incidence[v]:
            a, b = forest.others(e, v)
            if a in image and b in image:
                z = host.third_vertex(image[a], image[b])
                return [] if z is None else [z]
        return host_vertices

    def consistent(v, h):
        for e in forest.incidence[v]:
            a, b = forest.others(e, v)
            if a in image and b in image and host.third_vertex(image[a], image[b]) != h:
                return False
        return True

    def search(pos):
        if pos == len(order):
            if not induced or _is_induced(host, forest, image):
                yield dict(image)
            return
        v = order[pos]
        options = [pinned[v]] if v in pinned else candidates(v)
        for h in options:
            if h in used or not consistent(v, h):
                continue
            image[v] = h
            used.add(h)
            yield from search(pos + 1)
            used.discard(h)
            del image[v]

    yield from search(0)


def count_labeled_embeddings(host: TripleSystem, forest: Hypertree, pinned=None, induced=False) -> int:
    return sum(1 for _ in iter_embeddings(host, forest, pinned=pinned, induced=induced))


def embeddings_through(host: TripleSystem, forest: Hypertree, x, induced=False) -> int:
    # |E_x|: an injective map hits x through at most one vertex of F
    return sum(count_labeled_embeddings(host, forest, pinned={a: x}, induced=induced) for a in forest.vertices)


def embeddings_through_pair(host: TripleSystem, forest: Hypertree, x, y) -> int:
    # |E_{x,y}|
    total = 0
    for a in forest.vertices:
        for b in forest.vertices:
            if a != b:
                total += count_labeled_embeddings(host, forest, pinned={a: x, b: y})
    return total


def copies_through(host: TripleSystem, forest: Hypertree, x) -> int:
    # |D_x|: distinct vertex sets through x spanned by some embedding
    sets = set()
    for a in forest.vertices:
        for image in iter_embeddings(host, forest, pinned={a: x}):
            sets.add(frozenset(image.values()))
    return len(sets)


def _as_host(forest: Hypertree) -> tuple:
    relabel = {v: i for i, v in enumerate(forest.vertices)}
    own = forest.relabel(relabel)
    return TripleSystem(own.n, own.edges), own


def automorphism_count(forest: Hypertree) -> int:
    host, own = _as_host(forest)
    return count_labeled_embeddings(host, own)


def _components(forest: Hypertree) -> int:
    roots, seen = 0, set()
    for v in forest.vertices:
        if v not in seen:
            roots += 1
            stack = [v]
            seen.add(v)
            while stack:
                x = stack.pop()
                for e in forest.incidence[x]:
                    for y in forest.others(e, x):
                        if y not in seen:
                            seen.add(y)
                            stack.append(y)
    return roots


def count_trend(host: TripleSystem, forest: Hypertree, epsilon: float):
    # Compare |E_x| with r (1-eps)^f |V|^(f+lambda-1) on a tiny host and check
    # |E_x induced| / |Aut F| <= |D_x| <= |E_x| / |Aut F| at every vertex.
    # Induced embeddings (no extra host triple on the image) are a subset of
    # the embeddings with a unique image edge set.
    r, f = forest.n, len(forest.edges)
    lam = _components(forest)
    size = host.num_vertices()
    leading = r * (1 - epsilon) ** f * size ** (f + lam - 1)
    aut = automorphism_count(forest)
    rows = []
    for x in host.vertices():
        e_x = embeddings_through(host, forest, x)
        e_x_induced = embeddings_through(host, forest, x, induced=True)
        d_x = copies_through(host, forest, x)
        rows.append(
            {
                "x": x,
                "E_x": e_x,
                "E_x_induced": e_x_induced,
                "D_x": d_x,
                "bounds_ok": e_x_induced <= d_x * aut <= e_x,
            }
        )
    mean_e = sum(row["E_x"] for row in rows) / len(rows) if rows else 0.0
    return {
        "r": r,
        "f": f,
        "components": lam,
        "host_vertices": size,
        "aut": aut,
        "leading": leading,
        "mean_E_x": mean_e,
        "ratio": mean_e / leading if leading else None,
        "bounds_ok": all(row["bounds_ok"] for row in rows),
        "vertices": rows,
    }
