import math
from dataclasses import asdict, dataclass

from src.utils.errors import ConfigError

# ================= CONFIG =================
DEFAULT_RETRY_BUDGET = 20
DEFAULT_RESERVOIR_TOLERANCE = 0.15
DEFAULT_TOLERANCE_MIN_M = 500
DEFAULT_PACK_RESEEDS = 3


@dataclass
class PipelineConfig:
    d: int = 4
    mu: float = 0.5
    epsilon: float = 0.1
    k: int = 20
    seed: int = 0
    retry_budget: int = DEFAULT_RETRY_BUDGET
    strict_hierarchy: bool = False
    sample_size: int = None  # None -> min(k * 3^k, l)
    reservoir_tolerance: float = DEFAULT_RESERVOIR_TOLERANCE
    tolerance_min_m: int = DEFAULT_TOLERANCE_MIN_M
    pack_reseeds: int = DEFAULT_PACK_RESEEDS

    def validate(self):
        if self.d < 2:
            raise ConfigError(f"d must be >= 2, got {self.d}")
        if self.mu <= 0:
            raise ConfigError(f"mu must be positive, got {self.mu}")
        if not (0.0 < self.epsilon < 1.0):
            raise ConfigError(f"epsilon must lie in (0, 1), got {self.epsilon}")
        if self.k < 1:
            raise ConfigError(f"k must be positive, got {self.k}")
        if self.retry_budget < 1:
            raise ConfigError(f"retry_budget must be >= 1, got {self.retry_budget}")
        if self.pack_reseeds < 1:
            raise ConfigError(f"pack_reseeds must be >= 1, got {self.pack_reseeds}")
        if self.sample_size is not None and self.sample_size < 1:
            raise ConfigError(f"sample_size must be >= 1, got {self.sample_size}")
        if self.strict_hierarchy:
            failed = [row["check"] for row in self.hierarchy_report() if not row["ok"]]
            if failed:
                raise ConfigError(f"Strict hierarchy violated: {', '.join(failed)}")
        return self

    def k_floor(self) -> float:
        # smallest k the strict regime accepts: 8 d^5 / eps^(d+1)
        return 8 * self.d**5 / self.epsilon ** (self.d + 1)

    def hierarchy_report(self):
        # 1 > 1/d >> mu >> eps >> 1/k, read as strict inequalities, plus the
        # lower bound on k. Returned as rows so callers can report without
        # failing.
        rows = [
            ("1/d < 1", 1 / self.d < 1),
            ("mu < 1/d", self.mu < 1 / self.d),
            ("epsilon < mu", self.epsilon < self.mu),
            ("1/k < epsilon", 1 / self.k < self.epsilon),
            ("k >= 8 d^5 / eps^(d+1)", self.k >= self.k_floor()),
        ]
        return [{"check": name, "ok": bool(ok)} for name, ok in rows]

    def required_m(self, n: int) -> int:
        # 1e-9 absorbs float noise such as 1.1 * 10 = 11.000000000000002
        return math.ceil((1 + self.mu) * n - 1e-9)

    def to_dict(self):
        return asdict(self)
