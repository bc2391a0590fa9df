import pytest
from hypothesis import HealthCheck, given, settings, strategies as st

from src.designs.steiner import build_sts, smallest_admissible_order
from src.embedding.certificate import verify_certificate
from src.embedding.config import PipelineConfig
from src.embedding.pipeline import FAILURE, SUCCESS, check_preconditions, embed
from src.hypertrees.generator import random_subdivision_tree
from src.hypertrees.hypertree import Hypertree
from src.utils.errors import ConfigError, PreconditionError
from src.utils.seeds import stage_seed

SPIDER_CFG = PipelineConfig(d=3, mu=0.5, epsilon=0.6, k=4, seed=3, retry_budget=200)


def test_spider_into_sts15(spider, sts15):
    result = embed(spider, sts15, SPIDER_CFG)
    assert result.status == SUCCESS
    assert result.ok
    report = verify_certificate(spider, sts15, result.embedding, reservoir=result.reservoir, dec=result.decomposition)
    assert report.ok, report.problems
    images_of_i = {result.embedding.vertex_map[v] for v in result.decomposition.isolated}
    assert images_of_i <= result.reservoir.members
    assert result.stage_stats["decomposition"]["e"] == 1
    assert result.retries == len(result.attempts)


def test_embed_is_reproducible(spider, sts15):
    a = embed(spider, sts15, SPIDER_CFG).to_dict()
    b = embed(spider, sts15, SPIDER_CFG).to_dict()
    assert a == b


def test_starved_reservoir_fails_after_budget(spider, sts15):
    cfg = PipelineConfig(d=3, mu=0.5, epsilon=0.01, k=4, seed=0, retry_budget=5)
    result = embed(spider, sts15, cfg)
    assert result.status == FAILURE
    assert result.retries == 5
    assert len(result.attempts) == 5
    assert {a["stage"] for a in result.attempts} <= {"pack_forest", "attach_stars"}
    assert "vertex_map" not in result.to_dict()


def test_host_too_small(counterexample, fano):
    with pytest.raises(PreconditionError, match="m=7"):
        embed(counterexample, fano, PipelineConfig(d=2))


def test_degree_above_bound(spider, sts15):
    with pytest.raises(PreconditionError, match="Max degree"):
        check_preconditions(spider, sts15, PipelineConfig(d=2))


def test_not_a_subdivision_tree(sts15):
    core = Hypertree([(0, 1, 2), (0, 3, 4), (1, 5, 6), (2, 7, 8)], n=9)
    with pytest.raises(PreconditionError, match="subdivision"):
        embed(core, sts15, PipelineConfig(d=3))


def test_not_a_hypertree(sts15):
    broken = Hypertree([(0, 1, 2), (3, 4, 5)], n=7)
    with pytest.raises(PreconditionError, match="Not a hypertree"):
        embed(broken, sts15)


def test_bad_config_is_rejected(spider, sts15):
    with pytest.raises(ConfigError):
        embed(spider, sts15, PipelineConfig(epsilon=1.5))


def test_strict_hierarchy_rejects_desk_constants(spider, sts15):
    with pytest.raises(ConfigError, match="Strict hierarchy"):
        embed(spider, sts15, PipelineConfig(d=3, strict_hierarchy=True))


@settings(deadline=None, max_examples=15, suppress_health_check=[HealthCheck.too_slow])
@given(
    st.integers(min_value=3, max_value=20).map(lambda s: 2 * s + 1),
    st.integers(min_value=0, max_value=2**32 - 1),
)
def test_every_success_carries_a_valid_certificate(n, seed):
    cfg = PipelineConfig(d=3, mu=1.0, epsilon=0.4, k=6, seed=seed, retry_budget=10)
    t = random_subdivision_tree(n, 3, seed)
    sts = build_sts(smallest_admissible_order(cfg.required_m(n)))
    result = embed(t, sts, cfg)
    if result.ok:
        report = verify_certificate(t, sts, result.embedding, reservoir=result.reservoir, dec=result.decomposition)
        assert report.ok, report.problems
    else:
        assert result.retries == cfg.retry_budget


@pytest.mark.slow
def test_demo_config_embeds():
    from run_pipeline import CONFIG, N

    cfg = CONFIG.validate()
    t = random_subdivision_tree(N, cfg.d, stage_seed(cfg.seed, "tree"))
    sts = build_sts(smallest_admissible_order(cfg.required_m(t.n)))
    result = embed(t, sts, cfg)
    assert result.status == SUCCESS
    report = verify_certificate(t, sts, result.embedding, reservoir=result.reservoir, dec=result.decomposition)
    assert report.ok, report.problems
