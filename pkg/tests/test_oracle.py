import pytest

from src.designs.steiner import build_sts
from src.embedding.certificate import verify_certificate
from src.hypertrees.hypertree import Hypertree
from src.oracle.brute import (
    BUDGET_EXCEEDED,
    FOUND,
    NONE,
    SearchBudget,
    brute_embed,
    exhaustive_isomorphic,
)
from src.oracle.enumerate import enumerate_hypertrees
from src.utils.errors import ConfigError, SizeLimitExceeded

STAR7 = Hypertree([(0, 1, 2), (0, 3, 4), (0, 5, 6)], n=7)
PATH7 = Hypertree([(0, 1, 2), (2, 3, 4), (4, 5, 6)], n=7)


def test_counterexample_does_not_fit_fano(counterexample, fano):
    result = brute_embed(counterexample, fano)
    assert result.status == NONE
    assert result.embedding is None
    assert result.nodes > 0


def test_spider_fits_fano(spider, fano):
    result = brute_embed(spider, fano)
    assert result.status == FOUND
    assert verify_certificate(spider, fano, result.embedding).ok
    assert "vertex_map" in result.to_dict()


def test_path_fits_sts9(sts9):
    result = brute_embed(PATH7, sts9)
    assert result.status == FOUND
    assert verify_certificate(PATH7, sts9, result.embedding).ok


def test_tiny_budget(spider, fano):
    result = brute_embed(spider, fano, SearchBudget(node_limit=1))
    assert result.status == BUDGET_EXCEEDED
    assert result.to_dict() == {"status": BUDGET_EXCEEDED, "nodes": 2}


def test_host_too_small(spider):
    assert brute_embed(spider, build_sts(3)).status == NONE


def test_budget_must_be_positive():
    with pytest.raises(ConfigError):
        SearchBudget(node_limit=0)
    with pytest.raises(ConfigError):
        SearchBudget(time_limit=-1.0)


def test_isomorphism_oracle(spider):
    assert exhaustive_isomorphic(STAR7, STAR7.relabel({v: (v + 3) % 7 for v in range(7)}))
    assert not exhaustive_isomorphic(STAR7, PATH7)
    assert exhaustive_isomorphic(STAR7, spider)
    assert not exhaustive_isomorphic(STAR7, Hypertree([(0, 1, 2), (2, 3, 4)], n=5))
    with pytest.raises(SizeLimitExceeded):
        exhaustive_isomorphic(Hypertree([(i, i + 1, i + 2) for i in range(0, 10, 2)], n=11), STAR7)


def test_enumeration_counts():
    assert len(enumerate_hypertrees(1)) == 1
    assert len(enumerate_hypertrees(3)) == 1
    assert len(enumerate_hypertrees(5)) == 15
    assert len(enumerate_hypertrees(7)) == 735
    assert enumerate_hypertrees(4) == []


def test_enumeration_limit():
    with pytest.raises(SizeLimitExceeded):
        enumerate_hypertrees(9)
