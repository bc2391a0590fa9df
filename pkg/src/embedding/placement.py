from dataclasses import dataclass, field

from src.decomposition.sawing import Decomposition
from src.embedding.canonical import IsoClassPartition
from src.embedding.certificate import Embedding, certify
from src.embedding.forest import SampleForest, supply_check
from src.reservoir.reservoir import Reservoir, r_bound
from src.stars.star_finder import ALL, find_disjoint_stars
from src.utils.errors import StarStarvation, SupplyShortfall


@dataclass
class Placement:
    per_subtree: dict = field(default_factory=dict)  # subtree index -> {vertex: host}
    vertex_map: dict = field(default_factory=dict)

    def to_dict(self):
        return {str(i): {str(v): h for v, h in m.items()} for i, m in sorted(self.per_subtree.items())}


def realize_P(packed, partition: IsoClassPartition, sample: SampleForest) -> Placement:
    # Hand every subtree its own placed copy of its class representative.
    # Supply for class i is (number of packed copies) x lambda_i component
    # slots; a member's vertices go through the canonical relabeling onto
    # the slot's F-vertices and then through the packing onto the host.
    rows = supply_check(sample, partition, len(packed))
    short = [row for row in rows if not row["ok"]]
    if short:
        raise SupplyShortfall(f"class {short[0]['class']} has {short[0]['supply']} slots for {short[0]['needed']} members")

    slots_by_class = {}
    for slot in sample.slots:
        slots_by_class.setdefault(slot.class_index, []).append(slot)

    placement = Placement()
    for i, cls in enumerate(partition.classes):
        supply = [(copy, slot) for copy in range(len(packed)) for slot in slots_by_class.get(i, [])]
        for member, (copy, slot) in zip(cls.members, supply):
            to_rep = cls.member_map(member)
            image = {v: packed[copy][slot.offset + j] for v, j in to_rep.items()}
            placement.per_subtree[member] = image
            placement.vertex_map.update(image)
    return placement


def attach_stars(sts, reservoir: Reservoir, dec: Decomposition, placement: Placement, d=None, t=None):
    # Reattach the stars in order. For star j the anchors are the images of
    # v_1..v_c; among the disjoint stars through them take the first whose
    # W-set lies in R and is still unused, and send u_j and the w_{j,i} there.
    # Returns (Embedding, availability rows); raises StarStarvation when some
    # star finds nothing.
    vertex_map = dict(placement.vertex_map)
    used = set(vertex_map.values())
    in_r = reservoir.members
    m = sts.num_vertices()
    availability = []
    for j, star in enumerate(dec.stars):
        anchors = [vertex_map[v] for v in star.anchors()]
        family = find_disjoint_stars(sts, anchors, want=ALL, d=d)
        inside = [(u, ws) for u, ws in family.members if u in in_r and all(w in in_r for w in ws)]
        free = [(u, ws) for u, ws in inside if u not in used and not any(w in used for w in ws)]
        c = star.degree
        availability.append(
            {
                "star": j,
                "c": c,
                "family": len(family),
                "in_reservoir": len(inside),
                "unused": len(free),
                "r": r_bound(reservoir.epsilon, c, m),
                "claimed": ((d or c) + 1) * j,
            }
        )
        if not free:
            raise StarStarvation(f"star {j} (c={c}): {len(inside)} W-set(s) in R, none unused")
        u_img, ws = free[0]
        vertex_map[star.center] = u_img
        used.add(u_img)
        for w, w_img in zip(star.celibates(), ws):
            vertex_map[w] = w_img
            used.add(w_img)

    emb = certify(t, sts, vertex_map) if t is not None else Embedding(vertex_map=vertex_map)
    return emb, availability
