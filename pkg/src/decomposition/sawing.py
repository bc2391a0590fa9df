import math
from dataclasses import dataclass, field

from src.hypertrees.annotation import RootedAnnotation
from src.hypertrees.hypertree import Hypertree, validate_hypertree
from src.utils.errors import DanglingReference, HypertreeError

SUBTREE = "subtree"
CENTER = "center"
CELIBATE = "celibate"


@dataclass
class Star:
    center: int
    rays: list  # (v_i, w_i) per edge {v_i, w_i, center}
    edge_indices: list  # edge of T carrying each ray, same order
    father_ray_index: int = None  # 0 when v_1 is the father of the center
    progeny_at_cut: int = 0

    @property
    def degree(self) -> int:
        return len(self.rays)

    def anchors(self):
        return [v for v, _ in self.rays]

    def celibates(self):
        return [w for _, w in self.rays]

    def edges(self):
        return [tuple(sorted((v, w, self.center))) for v, w in self.rays]

    def to_dict(self):
        return {
            "center": self.center,
            "rays": [{"v": v, "w": w, "edge": e} for (v, w), e in zip(self.rays, self.edge_indices)],
            "father_ray_index": self.father_ray_index,
            "progeny_at_cut": self.progeny_at_cut,
        }


@dataclass
class Decomposition:
    n: int
    k: int
    stars: list = field(default_factory=list)
    subtrees: list = field(default_factory=list)  # Hypertree fragments, original labels
    isolated: set = field(default_factory=set)
    provenance: dict = field(default_factory=dict)  # vertex -> (role, index)

    @property
    def e(self) -> int:
        return len(self.stars)

    @property
    def l(self) -> int:
        return len(self.subtrees)

    def subtree_of(self, v):
        role, idx = self.provenance.get(v, (None, None))
        return idx if role == SUBTREE else None

    def to_dict(self):
        return {
            "n": self.n,
            "k": self.k,
            "e": self.e,
            "l": self.l,
            "stars": [s.to_dict() for s in self.stars],
            "subtrees": [p.to_dict() for p in self.subtrees],
            "isolated": sorted(self.isolated),
        }


# ===============================
# SAWING
# ===============================
def saw(t: Hypertree, ann: RootedAnnotation, k: int) -> Decomposition:
    # Repeatedly cut a star around a deep red vertex u of the remaining tree
    # H_j: u and the celibate w_i go to I, the components hanging below the
    # sons v_i go to P, and H_{j+1} is what stays connected to the root.
    # Ends when the root is cut (everything removed) or when the root's
    # progeny drops to k or below (the rest of H_j joins P).
    if k < 1:
        raise HypertreeError(f"k must be positive, got {k}")
    if set(ann.order) != set(t.vertices):
        raise HypertreeError("Annotation does not match the tree's vertex set")
    for v, e in ann.father_edge.items():
        if v not in t.edges[e] or ann.father[v] not in t.edges[e]:
            raise HypertreeError(f"Father edge of {v} does not contain it and its father")

    dec = Decomposition(n=t.n, k=k)
    root = ann.root
    d = max(t.max_degree(), 2)
    alive_e = set(range(len(t.edges)))
    alive_v = set(t.vertices)
    prog = dict(ann.progeny_size)

    def sons(v):
        return [x for e in ann.child_edges[v] if e in alive_e for x in t.others(e, v)]

    def cut_below(v):
        # remove v and everything hanging below it, returning the fragment
        verts, edges, stack = [], [], [v]
        while stack:
            x = stack.pop()
            verts.append(x)
            for e in ann.child_edges[x]:
                if e in alive_e:
                    edges.append(t.edges[e])
                    stack.extend(t.others(e, x))
        alive_v.difference_update(verts)
        alive_e.difference_update(i for x in verts for i in ann.child_edges[x])
        return Hypertree(edges, vertices=verts)

    def add_subtree(fragment):
        idx = len(dec.subtrees)
        dec.subtrees.append(fragment)
        for x in fragment.vertices:
            dec.provenance[x] = (SUBTREE, idx)

    while alive_v:
        if prog[root] <= k:
            edges = [t.edges[e] for e in sorted(alive_e)]
            add_subtree(Hypertree(edges, vertices=alive_v))
            break

        # (a) walk the branch of largest progeny
        b = root
        nxt = None
        while True:
            children = sons(b)
            if not children:
                nxt = None
                break
            nxt = max(children, key=lambda x: (prog[x], -x))
            if prog[nxt] > k:
                b = nxt
            else:
                break
        u = b if ann.is_red(b) else nxt
        if u is None or not ann.is_red(u):
            raise HypertreeError(f"No red vertex to saw around below {b} (k={k} too small for this tree?)")
        if u != root and prog[u] < math.ceil((k - d) / (d - 1)):
            raise HypertreeError(f"Center {u} has progeny {prog[u]}, below (k-d)/(d-1)")

        # (b) the star at u, father ray first
        j = len(dec.stars)
        rays, edge_ids = [], []
        father_ray = None
        if u != root:
            fe = ann.father_edge[u]
            v1 = ann.father[u]
            w1 = next(x for x in t.edges[fe] if x not in (u, v1))
            rays.append((v1, w1))
            edge_ids.append(fe)
            father_ray = 0
        for e in ann.child_edges[u]:
            if e not in alive_e:
                continue
            c = ann.celibate_of_edge[e]
            v = next(x for x in t.edges[e] if x not in (u, c))
            rays.append((v, c))
            edge_ids.append(e)
        star = Star(u, rays, edge_ids, father_ray_index=father_ray, progeny_at_cut=prog[u])
        dec.stars.append(star)
        removed = prog[u] + (1 if u != root else 0)

        # (c) u and the celibate vertices become isolated
        dec.isolated.add(u)
        dec.provenance[u] = (CENTER, j)
        for _, w in rays:
            dec.isolated.add(w)
            dec.provenance[w] = (CELIBATE, j)
        alive_v.difference_update([u] + [w for _, w in rays])
        alive_e.difference_update(edge_ids)

        # (d) components below the sons v_i join P
        for i, (v, _) in enumerate(rays):
            if i != father_ray:
                add_subtree(cut_below(v))

        # (e) H_{j+1}: shrink the progeny of u's ancestors
        if u == root:
            break
        x = ann.father[u]
        while True:
            prog[x] -= removed
            if x == root:
                break
            x = ann.father[x]

    return dec


# ===============================
# CHECKS
# ===============================
@dataclass
class DecompositionReport:
    ok: bool
    violated: list = field(default_factory=list)  # property numbers 1..6
    partition_errors: list = field(default_factory=list)
    messages: list = field(default_factory=list)

    def to_dict(self):
        return {
            "ok": self.ok,
            "violated": list(self.violated),
            "partition_errors": list(self.partition_errors),
            "messages": list(self.messages),
        }


def check_decomposition(t: Hypertree, dec: Decomposition, k: int, d: int) -> DecompositionReport:
    # Re-check the six decomposition properties and the exact edge/vertex
    # partition. Property (3) is waived when there are no stars.
    n = t.n
    e, l, size_i = dec.e, dec.l, len(dec.isolated)
    violated, messages, partition = [], [], []

    too_big = [i for i, p in enumerate(dec.subtrees) if p.n > k]
    if too_big:
        violated.append(1)
        messages.append(f"(1) subtree {too_big[0]} has {dec.subtrees[too_big[0]].n} > k={k} vertices")
    if size_i > 2 * d * d * n / k:
        violated.append(2)
        messages.append(f"(2) |I|={size_i} > 2d^2 n/k = {2 * d * d * n / k:.3f}")
    if e >= 1 and size_i < l:
        violated.append(3)
        messages.append(f"(3) |I|={size_i} < l={l}")
    if l < e:
        violated.append(4)
        messages.append(f"(4) l={l} < e={e}")
    if l < n / (k + 3):
        violated.append(5)
        messages.append(f"(5) l={l} < n/(k+3) = {n / (k + 3):.3f}")

    star_vertices = set()
    anchors = set()
    for s in dec.stars:
        star_vertices.add(s.center)
        star_vertices.update(s.celibates())
        anchors.update(s.anchors())
    if dec.isolated != star_vertices or anchors & dec.isolated:
        violated.append(6)
        messages.append("(6) I is not exactly the star centers and celibate vertices, or meets some v_i")

    # edge partition
    tree_edges = {}
    for idx, edge in enumerate(t.edges):
        tree_edges[edge] = idx
    used = []
    for s in dec.stars:
        used.extend(s.edges())
        centers_meet = [set(x) - {s.center} for x in s.edges()]
        flat = [v for part in centers_meet for v in part]
        if len(flat) != len(set(flat)):
            partition.append(f"star at {s.center} has edges meeting outside the center")
    for p in dec.subtrees:
        used.extend(p.edges)
    unknown = [x for x in used if x not in tree_edges]
    if unknown:
        partition.append(f"edge {unknown[0]} is not an edge of the tree")
    if len(used) != len(set(used)):
        partition.append("some edge is used twice")
    if set(used) != set(tree_edges):
        partition.append(f"{len(set(tree_edges) - set(used))} edge(s) of the tree are not covered")

    # vertex partition
    covered = list(dec.isolated)
    for p in dec.subtrees:
        covered.extend(p.vertices)
    if len(covered) != len(set(covered)) or set(covered) != set(t.vertices):
        partition.append("I and the subtree vertex sets do not partition V(T)")

    for i, p in enumerate(dec.subtrees):
        report = validate_hypertree(p.edges, p.n, vertices=p.vertices)
        if not report.ok:
            partition.append(f"subtree {i} is not a hypertree ({report.violation})")

    centers = {s.center for s in dec.stars}
    for edge in t.edges:
        if len(centers.intersection(edge)) > 1:
            partition.append(f"two star centers share the edge {edge}")
            break

    ok = not violated and not partition
    return DecompositionReport(ok=ok, violated=violated, partition_errors=partition, messages=messages)


def reassembly_plan(dec: Decomposition):
    # For each star in order: where each anchor v_i lives, as
    # (ray index, v_i, subtree index) entries.
    plan = []
    for j, star in enumerate(dec.stars):
        entries = []
        for i, v in enumerate(star.anchors()):
            idx = dec.subtree_of(v)
            if idx is None or v not in dec.subtrees[idx].incidence:
                raise DanglingReference(f"star {j} anchor v_{i + 1}={v} is not in any subtree")
            entries.append({"ray": i, "v": v, "subtree": idx})
        plan.append({"star": j, "center": star.center, "attachments": entries})
    return plan


def decomposition_summary(dec: Decomposition, n: int, k: int, d: int):
    return {
        "n": n,
        "k": k,
        "d": d,
        "e": dec.e,
        "l": dec.l,
        "isolated": len(dec.isolated),
        "largest_subtree": max((p.n for p in dec.subtrees), default=0),
        "isolated_bound": 2 * d * d * n / k,
        "subtree_count_bound": n / (k + 3),
    }
