import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from src.decomposition.sawing import saw
from src.embedding.canonical import partition_classes
from src.embedding.forest import (
    build_sample_forest,
    class_multiplicities,
    effective_sample_size,
    forest_bounds,
    full_sample_size,
    supply_check,
)
from src.hypertrees.annotation import annotate
from src.hypertrees.generator import random_subdivision_tree
from src.hypertrees.hypertree import Hypertree
from src.utils.errors import ConfigError


def _partition(t, k):
    return partition_classes(saw(t, annotate(t), k), k)


def test_sample_sizes():
    assert full_sample_size(4) == 324
    assert effective_sample_size(4, 3) == 3
    assert effective_sample_size(4, 1000) == 324
    assert effective_sample_size(4, 3, override=2) == 2


def test_spider_forest(spider):
    part = _partition(spider, 4)
    sample = build_sample_forest(part, 4, n=spider.n)
    assert sample.sample_size == 3
    assert sample.lambdas == [3]
    assert sample.r == 3
    assert sample.f == 0
    assert sample.components == 3
    assert sample.copies_needed == 1
    assert all(row["ok"] for row in supply_check(sample, part, sample.copies_needed))


def test_override_needs_more_copies(spider):
    part = _partition(spider, 4)
    sample = build_sample_forest(part, 4, sample_size=1)
    assert sample.lambdas == [1]
    assert sample.copies_needed == 3
    assert supply_check(sample, part, 3)[0] == {"class": 0, "supply": 3, "needed": 3, "ok": True}
    assert not supply_check(sample, part, 2)[0]["ok"]


def test_counterexample_forest(counterexample):
    part = _partition(counterexample, 3)
    sample = build_sample_forest(part, 3, n=counterexample.n)
    assert sample.lambdas == [1, 1]
    assert sample.r == 4
    assert list(sample.forest.edges) == [(0, 1, 2)]
    assert [slot.offset for slot in sample.slots] == [0, 3]
    assert sample.component_vertices(1, part) == [3]


def test_full_bounds_for_spider(spider):
    part = _partition(spider, 4)
    bounds = forest_bounds(part, spider.n, 0.5)
    assert bounds["sample_size"] == 324
    assert bounds["r"] == 324
    assert bounds["bound_a"] == 2592
    assert bounds["bound_b"] == 945
    assert bounds["r_le_bound_a"] and bounds["r_le_bound_b"]


def test_strict_mode_raises_on_failed_bound(spider):
    part = _partition(spider, 4)
    build_sample_forest(part, 4, n=spider.n, strict=True)
    with pytest.raises(ConfigError):
        build_sample_forest(part, 4, n=1, strict=True)


def test_huge_sample_sizes_are_compacted(spider):
    bounds = forest_bounds(_partition(spider, 4), spider.n, 0.5, s=10**20)
    assert bounds["sample_size"] == "~1e20"
    assert bounds["r_le_bound_b"]


def test_empty_partition():
    part = partition_classes([], 5)
    sample = build_sample_forest(part, 5)
    assert sample.r == 0
    assert sample.copies_needed == 0


@settings(deadline=None, max_examples=40)
@given(
    st.integers(min_value=10, max_value=150).map(lambda s: 2 * s + 1),
    st.sampled_from([6, 8, 12]),
    st.one_of(st.none(), st.integers(min_value=1, max_value=40)),
    st.integers(min_value=0, max_value=2**32 - 1),
)
def test_supply_inequality(n, k, override, seed):
    t = random_subdivision_tree(n, 3, seed)
    part = _partition(t, k)
    sample = build_sample_forest(part, k, n=n, sample_size=override)
    assert all(row["ok"] for row in supply_check(sample, part, sample.copies_needed))
    assert sample.r == sum(lam * cls.size for lam, cls in zip(sample.lambdas, part.classes))


@pytest.mark.parametrize("k", [4, 6, 9, 12])
def test_bound_a_on_synthetic_partitions(k):
    rng = np.random.default_rng(k)
    pieces = []
    for _ in range(60):
        size = 2 * int(rng.integers(0, (k - 1) // 2 + 1)) + 1
        if size == 1:
            pieces.append(Hypertree.single_vertex(0))
        else:
            pieces.append(random_subdivision_tree(size, 3, int(rng.integers(2**31))))
    part = partition_classes(pieces, k)
    n = sum(p.n for p in pieces)
    bounds = forest_bounds(part, n, 0.5)
    assert bounds["r_le_bound_a"]
    assert class_multiplicities(part, 1) == [1] * part.t
