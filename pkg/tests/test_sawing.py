import pytest
from hypothesis import given, settings, strategies as st

from src.decomposition.sawing import (
    CELIBATE,
    CENTER,
    SUBTREE,
    Decomposition,
    Star,
    check_decomposition,
    decomposition_summary,
    reassembly_plan,
    saw,
)
from src.hypertrees.annotation import annotate
from src.hypertrees.generator import random_subdivision_tree
from src.hypertrees.hypertree import Hypertree
from src.utils.errors import DanglingReference, HypertreeError


def _saw(t, k):
    ann = annotate(t)
    return ann, saw(t, ann, k)


def test_spider_cut_at_root(spider):
    _, dec = _saw(spider, 4)
    assert dec.e == 1
    star = dec.stars[0]
    assert star.center == 0
    assert star.father_ray_index is None
    assert star.rays == [(4, 1), (5, 2), (6, 3)]
    assert dec.isolated == {0, 1, 2, 3}
    assert [p.vertices for p in dec.subtrees] == [(4,), (5,), (6,)]
    assert dec.provenance[0] == (CENTER, 0)
    assert dec.provenance[2] == (CELIBATE, 0)
    assert dec.provenance[5] == (SUBTREE, 1)
    assert check_decomposition(spider, dec, 4, 3).ok


def test_counterexample_cut_at_root(counterexample):
    _, dec = _saw(counterexample, 3)
    assert dec.e == 1
    assert dec.stars[0].rays == [(2, 1), (4, 3)]
    assert dec.isolated == {0, 1, 3}
    assert sorted(p.n for p in dec.subtrees) == [1, 3]
    assert dec.subtree_of(5) == dec.subtree_of(2)
    report = check_decomposition(counterexample, dec, 3, 2)
    assert report.ok, report.messages


def test_small_tree_is_one_subtree(counterexample):
    _, dec = _saw(counterexample, 7)
    assert dec.e == 0
    assert dec.l == 1
    assert dec.subtrees[0] == counterexample
    assert dec.isolated == set()
    assert check_decomposition(counterexample, dec, 7, 2).ok


def test_oversized_subtree_violates_first_property(counterexample):
    _, dec = _saw(counterexample, 3)
    report = check_decomposition(counterexample, dec, 2, 2)
    assert not report.ok
    assert 1 in report.violated


def test_missing_subtree_breaks_partition(spider):
    _, dec = _saw(spider, 4)
    dec.subtrees.pop()
    report = check_decomposition(spider, dec, 4, 3)
    assert not report.ok
    assert report.partition_errors


def test_reassembly_plan(spider):
    _, dec = _saw(spider, 4)
    plan = reassembly_plan(dec)
    assert plan == [
        {
            "star": 0,
            "center": 0,
            "attachments": [
                {"ray": 0, "v": 4, "subtree": 0},
                {"ray": 1, "v": 5, "subtree": 1},
                {"ray": 2, "v": 6, "subtree": 2},
            ],
        }
    ]


def test_reassembly_plan_reports_dangling_anchor():
    dec = Decomposition(n=3, k=1, stars=[Star(0, [(1, 2)], [0])], isolated={0, 2})
    with pytest.raises(DanglingReference):
        reassembly_plan(dec)


def test_saw_rejects_bad_k(spider):
    with pytest.raises(HypertreeError):
        saw(spider, annotate(spider), 0)


def test_saw_rejects_foreign_annotation(spider, counterexample):
    other = Hypertree([(0, 1, 2)], n=3)
    with pytest.raises(HypertreeError):
        saw(other, annotate(spider), 4)


def test_summary_and_dump(spider):
    _, dec = _saw(spider, 4)
    summary = decomposition_summary(dec, spider.n, 4, 3)
    assert summary["e"] == 1
    assert summary["l"] == 3
    assert summary["isolated"] == 4
    assert summary["largest_subtree"] == 1
    dump = dec.to_dict()
    assert dump["isolated"] == [0, 1, 2, 3]
    assert dump["stars"][0]["rays"][0] == {"v": 4, "w": 1, "edge": 0}


def _check_father_rays(t, ann, dec):
    for s in dec.stars:
        if s.center == ann.root:
            assert s.father_ray_index is None
        else:
            assert s.father_ray_index == 0
            assert s.anchors()[0] == ann.father[s.center]


@settings(deadline=None, max_examples=60)
@given(
    st.integers(min_value=1, max_value=200).map(lambda s: 2 * s + 1),
    st.sampled_from([3, 4, 5]),
    st.sampled_from([20, 50]),
    st.integers(min_value=0, max_value=2**32 - 1),
)
def test_random_trees_satisfy_all_properties(n, d, k, seed):
    t = random_subdivision_tree(n, d, seed)
    ann, dec = _saw(t, k)
    report = check_decomposition(t, dec, k, d)
    assert report.ok, report.messages + report.partition_errors
    _check_father_rays(t, ann, dec)
    reassembly_plan(dec)


@pytest.mark.slow
def test_property_sweep_large_trees():
    checked = 0
    for d in (3, 4, 5):
        for k in (20, 50):
            for seed in range(170):
                n = 2 * (seed * 37 % 1000) + 1
                t = random_subdivision_tree(max(n, 3), d, seed)
                ann, dec = _saw(t, k)
                report = check_decomposition(t, dec, k, d)
                assert report.ok, (n, d, k, seed, report.messages, report.partition_errors)
                checked += 1
    assert checked >= 1000
