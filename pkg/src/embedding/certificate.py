from dataclasses import dataclass, field

from src.designs.steiner import TripleSystem
from src.hypertrees.hypertree import Hypertree


@dataclass
class Embedding:
    vertex_map: dict  # tree vertex -> host vertex
    certificate: list = field(default_factory=list)  # per tree edge: (edge index, image triple, host triple index)

    def to_dict(self):
        return {
            "vertex_map": {str(v): h for v, h in sorted(self.vertex_map.items())},
            "certificate": [
                {"edge": idx, "image": list(triple), "host_triple": block} for idx, triple, block in self.certificate
            ],
        }


def certify(t: Hypertree, host: TripleSystem, vertex_map: dict) -> Embedding:
    # Attach the per-edge witnesses; edges that miss the host get block None.
    certificate = []
    for idx, e in enumerate(t.edges):
        image = tuple(sorted(vertex_map[v] for v in e))
        block = host.block_of(image[0], image[1]) if host.has_triple(*image) else None
        certificate.append((idx, image, block))
    return Embedding(vertex_map=dict(vertex_map), certificate=certificate)


@dataclass
class CertificateReport:
    ok: bool
    problems: list = field(default_factory=list)

    def to_dict(self):
        return {"ok": self.ok, "problems": list(self.problems)}


def verify_certificate(t: Hypertree, host: TripleSystem, emb: Embedding, reservoir=None, dec=None) -> CertificateReport:
    """
    Independent re-check of an embedding: total and injective on V(T),
    every image triple is a host triple (looked up in the pair table), one
    witness per tree edge with the right triple index. With a reservoir and
    a decomposition also the partition contract: I lands in R, the
    subtrees outside R.
    """
    problems = []
    vmap = emb.vertex_map
    missing = [v for v in t.vertices if v not in vmap]
    if missing:
        problems.append(f"{len(missing)} tree vertex/vertices unmapped, first {missing[0]}")
    extra = [v for v in vmap if v not in t.incidence]
    if extra:
        problems.append(f"vertex map has non-tree key {extra[0]}")
    images = list(vmap.values())
    if len(set(images)) != len(images):
        problems.append("vertex map is not injective")
    out_of_range = [h for h in images if not host.has_vertex(h)]
    if out_of_range:
        problems.append(f"image {out_of_range[0]} is not a host vertex")

    if len(emb.certificate) != len(t.edges):
        problems.append(f"certificate has {len(emb.certificate)} entries for {len(t.edges)} edges")
    witnessed = {}
    for idx, triple, block in emb.certificate:
        witnessed[idx] = (tuple(sorted(triple)), block)
    if not problems:
        for idx, e in enumerate(t.edges):
            x, y, z = sorted(vmap[v] for v in e)
            if host.third_vertex(x, y) != z:
                problems.append(f"edge {e} maps to {(x, y, z)}, not a host triple")
                continue
            if idx not in witnessed:
                problems.append(f"edge {idx} has no witness")
                continue
            triple, block = witnessed[idx]
            if triple != (x, y, z) or block != host.block_of(x, y):
                problems.append(f"witness for edge {idx} does not match its image")

    if reservoir is not None and dec is not None and not missing:
        in_r = reservoir.members
        if any(vmap[v] not in in_r for v in dec.isolated):
            problems.append("some isolated vertex is mapped outside the reservoir")
        for p in dec.subtrees:
            if any(vmap[v] in in_r for v in p.vertices):
                problems.append("some subtree vertex is mapped into the reservoir")
                break

    return CertificateReport(ok=not problems, problems=problems)
