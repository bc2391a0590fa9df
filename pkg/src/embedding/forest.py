import math
from dataclasses import dataclass, field
from fractions import Fraction

from src.embedding.canonical import IsoClassPartition
from src.hypertrees.hypertree import Hypertree
from src.utils.errors import ConfigError


def _ceil_div(a: int, b: int) -> int:
    return -(-a // b)


def full_sample_size(k: int) -> int:
    return k * 3**k


def effective_sample_size(k: int, l: int, override=None) -> int:
    if override is not None:
        return int(override)
    return max(1, min(full_sample_size(k), l))


def class_multiplicities(partition: IsoClassPartition, s: int):
    # lambda_i = ceil(s * l_i / l)
    return [_ceil_div(s * cls.l_i, partition.l) for cls in partition.classes]


def _compact(value: int):
    # huge integers are reported by order of magnitude only
    return value if value < 10**15 else f"~1e{len(str(value)) - 1}"


def forest_bounds(partition: IsoClassPartition, n: int, mu: float, s=None):
    # The two upper bounds on r = |V(F)| for a sample of size s (default
    # k * 3^k): r <= k(k+4) 3^k and r <= (s n / l)(1 + mu/2).
    k = partition.k
    s = full_sample_size(k) if s is None else s
    lambdas = class_multiplicities(partition, s)
    r = sum(lam * cls.size for lam, cls in zip(lambdas, partition.classes))
    bound_a = k * (k + 4) * 3**k
    # exact rationals: s can be far beyond float range
    bound_b = Fraction(s * n, partition.l) * (1 + Fraction(str(mu)) / 2)
    return {
        "sample_size": _compact(s),
        "r": _compact(r),
        "bound_a": _compact(bound_a),
        "bound_b": _compact(math.floor(bound_b)),
        "r_le_bound_a": bool(r <= bound_a),
        "r_le_bound_b": bool(r <= bound_b),
    }


@dataclass
class ComponentSlot:
    class_index: int
    copy_index: int  # which of the lambda_i copies of T_i
    offset: int  # F-vertex of the representative's vertex 0


@dataclass
class SampleForest:
    forest: Hypertree  # F on 0..r-1
    slots: list = field(default_factory=list)
    lambdas: list = field(default_factory=list)
    sample_size: int = 1
    copies_needed: int = 1
    bounds: dict = field(default_factory=dict)

    @property
    def r(self) -> int:
        return self.forest.n

    @property
    def f(self) -> int:
        return len(self.forest.edges)

    @property
    def components(self) -> int:
        return len(self.slots)

    def component_vertices(self, slot_index, partition):
        slot = self.slots[slot_index]
        size = partition.classes[slot.class_index].size
        return list(range(slot.offset, slot.offset + size))

    def to_dict(self):
        return {
            "r": self.r,
            "f": self.f,
            "components": self.components,
            "lambdas": list(self.lambdas),
            "sample_size": self.sample_size,
            "copies_needed": self.copies_needed,
            "bounds": self.bounds,
        }


def build_sample_forest(partition: IsoClassPartition, k: int, n=None, mu=0.5, sample_size=None, strict=False):
    # F = lambda_1 T_1 + ... + lambda_t T_t for the effective sample size s,
    # with copies_needed = ceil(l / s) so that copies_needed * lambda_i >= l_i.
    # The k * 3^k bounds are computed arithmetically; strict mode insists on them.
    if partition.l == 0:
        return SampleForest(forest=Hypertree((), vertices=()), sample_size=1, copies_needed=0)
    s = effective_sample_size(k, partition.l, sample_size)
    lambdas = class_multiplicities(partition, s)
    edges, slots, offset = [], [], 0
    for i, (lam, cls) in enumerate(zip(lambdas, partition.classes)):
        rep = cls.representative
        for c in range(lam):
            edges.extend(tuple(offset + v for v in e) for e in rep.edges)
            slots.append(ComponentSlot(class_index=i, copy_index=c, offset=offset))
            offset += rep.n
    forest = Hypertree(edges, n=offset)

    n = n if n is not None else sum(cls.size * cls.l_i for cls in partition.classes)
    bounds = forest_bounds(partition, n, mu)
    if strict and not (bounds["r_le_bound_a"] and bounds["r_le_bound_b"]):
        raise ConfigError(f"Sample forest bounds fail under the strict hierarchy: {bounds}")
    return SampleForest(
        forest=forest,
        slots=slots,
        lambdas=lambdas,
        sample_size=s,
        copies_needed=_ceil_div(partition.l, s),
        bounds=bounds,
    )


def supply_check(sample: SampleForest, partition: IsoClassPartition, copies: int):
    # per class: (supply, needed); supply = copies * lambda_i
    return [
        {"class": i, "supply": copies * lam, "needed": cls.l_i, "ok": copies * lam >= cls.l_i}
        for i, (lam, cls) in enumerate(zip(sample.lambdas, partition.classes))
    ]
