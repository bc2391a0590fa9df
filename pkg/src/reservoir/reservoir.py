from dataclasses import dataclass, field

import numpy as np

from src.designs.steiner import TripleSystem
from src.stars.star_finder import ALL, find_disjoint_stars
from src.utils.errors import ConfigError

# ================= CONFIG =================
DEFAULT_TOLERANCE = 0.15
TOLERANCE_MIN_M = 500
DEFAULT_DEGREE_SAMPLE = 200


def r_bound(epsilon: float, c: int, m: int) -> float:
    # W-sets through a c-tuple expected to lie in R, halved
    return epsilon ** (c + 1) * m / (2 * (c * c + 1))


@dataclass
class Reservoir:
    members: frozenset
    epsilon: float
    seed: int
    draws: np.ndarray  # per-vertex uniforms; v in R iff draws[v] < epsilon
    host: TripleSystem
    complement_view: TripleSystem  # S~: triples of S avoiding R

    @property
    def mask(self):
        out = np.zeros(self.host.m, dtype=bool)
        if self.members:
            out[sorted(self.members)] = True
        return out

    def __contains__(self, v):
        return v in self.members

    def __len__(self):
        return len(self.members)

    def to_dict(self):
        return {
            "epsilon": self.epsilon,
            "seed": self.seed,
            "size": len(self.members),
            "complement_vertices": self.complement_view.num_vertices(),
            "complement_triples": self.complement_view.num_triples(),
        }


def draw_reservoir(sts: TripleSystem, epsilon: float, seed) -> Reservoir:
    # Independent Bernoulli(epsilon) membership per vertex. One uniform is
    # drawn per label, so the same seed with a larger epsilon gives a superset.
    if not (0.0 <= epsilon <= 1.0):
        raise ConfigError(f"epsilon must lie in [0, 1], got {epsilon}")
    rng = np.random.default_rng(seed)
    draws = rng.random(sts.m)
    in_r = (draws < epsilon) & sts.vertex_mask
    members = frozenset(int(v) for v in np.flatnonzero(in_r))
    complement = sts.induced(sts.vertex_mask & ~in_r)
    return Reservoir(
        members=members,
        epsilon=float(epsilon),
        seed=seed,
        draws=draws,
        host=sts,
        complement_view=complement,
    )


# ===============================
# AUDIT
# ===============================
@dataclass
class ReservoirAudit:
    m: int
    epsilon: float
    size: int
    size_dev: float
    complement_dev: float
    degree_target: float
    degree_dev: float  # max relative deviation over sampled vertices
    degree_within: float  # fraction of sampled vertices within tolerance
    sampled_vertices: int
    tolerance: float
    star_coverage: list = field(default_factory=list)

    def below_r(self):
        return [row for row in self.star_coverage if row["in_reservoir"] < row["r"]]

    def within_tolerance(self, tolerance=None, min_m=TOLERANCE_MIN_M) -> bool:
        # items (1)-(3) only; item (4) is reported, never gated
        if self.m < min_m:
            return True
        tol = self.tolerance if tolerance is None else tolerance
        return self.size_dev <= tol and self.complement_dev <= tol and self.degree_dev <= tol

    def to_dict(self):
        return {
            "m": self.m,
            "epsilon": self.epsilon,
            "size": self.size,
            "size_dev": self.size_dev,
            "complement_dev": self.complement_dev,
            "degree_target": self.degree_target,
            "degree_dev": self.degree_dev,
            "degree_within": self.degree_within,
            "sampled_vertices": self.sampled_vertices,
            "tolerance": self.tolerance,
            "star_coverage": self.star_coverage,
            "below_r": len(self.below_r()),
        }


def _relative(actual, expected):
    if expected == 0:
        return 0.0 if actual == 0 else float("inf")
    return abs(actual - expected) / expected


def audit_reservoir(
    res: Reservoir,
    sample_tuples: int,
    d: int,
    seed,
    c=None,
    sample_vertices=DEFAULT_DEGREE_SAMPLE,
    tolerance=DEFAULT_TOLERANCE,
) -> ReservoirAudit:
    # Measure the four reservoir properties: size, complement size, degrees
    # in S~ against (1-eps)^2 m/2, and for sampled anchor tuples how many
    # disjoint W-sets lie inside R compared with r(c).
    sts = res.host
    m = sts.num_vertices()
    eps = res.epsilon
    rng = np.random.default_rng(seed)

    size = len(res.members)
    size_dev = _relative(size, eps * m)
    complement_dev = _relative(res.complement_view.num_vertices(), (1 - eps) * m)

    target = (1 - eps) ** 2 * m / 2
    outside = np.asarray(res.complement_view.vertices(), dtype=np.int64)
    if len(outside) and sample_vertices:
        picked = rng.choice(outside, size=min(sample_vertices, len(outside)), replace=False)
        degrees = res.complement_view.degrees()[picked]
        devs = np.abs(degrees - target) / target if target > 0 else np.zeros(len(picked))
        degree_dev = float(devs.max())
        degree_within = float((devs <= tolerance).mean())
        sampled = len(picked)
    else:
        degree_dev, degree_within, sampled = 0.0, 1.0, 0

    coverage = []
    vertices = np.asarray(sts.vertices(), dtype=np.int64)
    in_r = res.mask
    for _ in range(sample_tuples):
        width = int(c) if c is not None else int(rng.integers(1, d + 1))
        width = min(width, len(vertices))
        anchors = [int(v) for v in rng.choice(vertices, size=width, replace=False)]
        family = find_disjoint_stars(sts, anchors, want=ALL, d=d)
        inside = sum(1 for ws in family.w_sets if in_r[sorted(ws)].all())
        coverage.append(
            {
                "anchors": anchors,
                "c": width,
                "family": len(family),
                "in_reservoir": inside,
                "r": r_bound(eps, width, m),
            }
        )

    return ReservoirAudit(
        m=m,
        epsilon=eps,
        size=size,
        size_dev=size_dev,
        complement_dev=complement_dev,
        degree_target=target,
        degree_dev=degree_dev,
        degree_within=degree_within,
        sampled_vertices=sampled,
        tolerance=tolerance,
        star_coverage=coverage,
    )
