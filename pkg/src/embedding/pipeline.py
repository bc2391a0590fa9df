from dataclasses import dataclass, field

from src.decomposition.sawing import decomposition_summary, saw
from src.embedding.canonical import partition_classes
from src.embedding.certificate import Embedding, verify_certificate
from src.embedding.config import PipelineConfig
from src.embedding.forest import build_sample_forest
from src.embedding.packing import pack_forest
from src.embedding.placement import attach_stars, realize_P
from src.hypertrees.annotation import annotate
from src.hypertrees.hypertree import Hypertree, is_subdivision_tree, validate_hypertree
from src.reservoir.reservoir import audit_reservoir, draw_reservoir
from src.utils.console import say
from src.utils.errors import PipelineRetry, PreconditionError
from src.utils.seeds import stage_seed

SUCCESS = "success"
FAILURE = "failure"


@dataclass
class EmbedResult:
    status: str
    embedding: Embedding = None
    retries: int = 0
    stage_stats: dict = field(default_factory=dict)
    attempts: list = field(default_factory=list)  # diagnostics of failed attempts
    reservoir: object = None
    decomposition: object = None

    @property
    def ok(self) -> bool:
        return self.status == SUCCESS

    def to_dict(self):
        out = {
            "status": self.status,
            "retries": self.retries,
            "stage_stats": self.stage_stats,
            "attempts": self.attempts,
        }
        if self.embedding is not None:
            out.update(self.embedding.to_dict())
        return out


def check_preconditions(t: Hypertree, sts, cfg: PipelineConfig):
    report = validate_hypertree(t.edges, t.n, vertices=t.vertices)
    if not report.ok:
        raise PreconditionError(f"Not a hypertree ({report.violation}): {report.message}")
    if not is_subdivision_tree(t):
        raise PreconditionError("Not a subdivision tree: some edge has no degree-one vertex")
    if t.max_degree() > cfg.d:
        raise PreconditionError(f"Max degree {t.max_degree()} exceeds d={cfg.d}")
    m = sts.num_vertices()
    if m < cfg.required_m(t.n):
        raise PreconditionError(f"m={m} < (1+mu)n = {(1 + cfg.mu) * t.n:.2f}")


def embed(t: Hypertree, sts, cfg: PipelineConfig = None) -> EmbedResult:
    """
    annotate -> saw -> classes -> sample forest, then per attempt:
    reservoir -> (audit gate) -> pack -> realize -> attach -> certificate.
    Recoverable stage failures redraw the reservoir, up to retry_budget
    attempts. A success is only returned with a certificate that re-checks.
    """
    cfg = (cfg or PipelineConfig()).validate()
    check_preconditions(t, sts, cfg)

    ann = annotate(t)
    dec = saw(t, ann, cfg.k)
    partition = partition_classes(dec, cfg.k)
    sample = build_sample_forest(
        partition, cfg.k, n=t.n, mu=cfg.mu, sample_size=cfg.sample_size, strict=cfg.strict_hierarchy
    )
    m = sts.num_vertices()
    stats = {
        "decomposition": decomposition_summary(dec, t.n, cfg.k, cfg.d),
        "classes": {"t": partition.t, "l": partition.l, "polya_ok": partition.polya_ok()},
        "forest": sample.to_dict(),
        "hierarchy": cfg.hierarchy_report(),
    }

    attempts = []
    for attempt in range(cfg.retry_budget):
        res = draw_reservoir(sts, cfg.epsilon, stage_seed(cfg.seed, "reservoir", attempt))
        if m >= cfg.tolerance_min_m:
            audit = audit_reservoir(res, 0, cfg.d, stage_seed(cfg.seed, "audit", attempt), tolerance=cfg.reservoir_tolerance)
            if not audit.within_tolerance(cfg.reservoir_tolerance, cfg.tolerance_min_m):
                attempts.append({"attempt": attempt, "stage": "reservoir", "detail": "audit outside tolerance"})
                continue
        try:
            packed = pack_forest(
                res.complement_view,
                sample.forest,
                sample.copies_needed,
                stage_seed(cfg.seed, "pack", attempt),
                reseeds=cfg.pack_reseeds,
            )
            placement = realize_P(packed.copies, partition, sample)
            emb, availability = attach_stars(sts, res, dec, placement, d=cfg.d, t=t)
        except PipelineRetry as exc:
            say(f"⚠️ attempt {attempt}: {exc}")
            attempts.append({"attempt": attempt, "stage": exc.stage, "detail": exc.detail})
            continue

        report = verify_certificate(t, sts, emb, reservoir=res, dec=dec)
        if not report.ok:
            attempts.append({"attempt": attempt, "stage": "certificate", "detail": "; ".join(report.problems)})
            continue

        stats.update(
            {
                "reservoir": res.to_dict(),
                "packing": packed.stats(),
                "stars": availability,
            }
        )
        say(f"✅ embedded n={t.n} into m={m} after {attempt + 1} attempt(s)")
        return EmbedResult(
            status=SUCCESS,
            embedding=emb,
            retries=attempt,
            stage_stats=stats,
            attempts=attempts,
            reservoir=res,
            decomposition=dec,
        )

    say(f"❌ no embedding of n={t.n} into m={m} within {cfg.retry_budget} attempt(s)")
    return EmbedResult(status=FAILURE, retries=cfg.retry_budget, stage_stats=stats, attempts=attempts, decomposition=dec)
