import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from src.designs.steiner import (
    SteinerTripleSystem,
    TripleSystem,
    build_bose,
    build_skolem,
    build_sts,
    degree_census,
    pair_slot,
    smallest_admissible_order,
    third_vertex,
    validate,
)
from src.utils.errors import DesignError

ADMISSIBLE = [3, 7, 9, 13, 15, 19, 21, 25, 27, 31, 33, 37, 39]


@pytest.mark.parametrize("m", ADMISSIBLE)
def test_constructed_systems_validate(m):
    sts = build_sts(m)
    report = validate(sts.triples, m)
    assert report.ok, report.message
    assert sts.num_triples() == m * (m - 1) // 6
    assert (degree_census(sts) == (m - 1) // 2).all()


def test_every_pair_has_exactly_one_third(sts15):
    m = sts15.m
    for x in range(m):
        for y in range(x + 1, m):
            z = sts15.third_vertex(x, y)
            assert z not in (x, y)
            assert sts15.has_triple(x, y, z)
            assert sts15.third_vertex(x, z) == y
            assert sts15.triple(sts15.block_of(x, y)) == tuple(sorted((x, y, z)))


def test_bose_and_skolem_reject_wrong_residues():
    with pytest.raises(DesignError):
        build_bose(7)
    with pytest.raises(DesignError):
        build_skolem(9)
    with pytest.raises(DesignError):
        build_skolem(1)


@pytest.mark.parametrize("m", [1, 2, 4, 5, 6, 8, 10, 11, 12])
def test_build_sts_rejects_inadmissible_order(m):
    with pytest.raises(DesignError, match="m ≡ 1 or 3 mod 6 required"):
        build_sts(m)


def test_validate_reports_doubled_pair_and_missing_triples():
    triples = [(0, 1, 2), (0, 1, 3)]
    report = validate(triples, 7)
    assert not report.ok
    assert report.doubly_covered_count == 1
    assert set(report.first_doubly_covered) == {0, 1}
    assert report.uncovered_count > 0
    assert "expected m(m-1)/6 = 7" in report.message


def test_validate_reports_inadmissible_order():
    report = validate([], 4)
    assert not report.ok
    assert "not 1 or 3 mod 6" in report.message


def test_validate_raises_on_malformed_triple():
    with pytest.raises(DesignError):
        validate([(0, 0, 1)], 7)
    with pytest.raises(DesignError):
        validate([(0, 1, 9)], 7)


def test_fano_fixture_matches_third_vertex(fano):
    assert fano.third_vertex(0, 1) == 3
    assert third_vertex(fano, 4, 5) == 0
    assert fano.block_of(0, 1) is not None


def test_partial_system_leaves_pairs_uncovered():
    partial = TripleSystem(7, [(0, 1, 2)])
    assert partial.third_vertex(0, 1) == 2
    assert partial.third_vertex(3, 4) is None
    assert partial.block_of(3, 4) is None
    assert not partial.has_triple(3, 4, 5)


def test_partial_system_rejects_repeated_pair():
    with pytest.raises(DesignError, match="more than one triple"):
        TripleSystem(7, [(0, 1, 2), (0, 1, 3)])


def test_steiner_system_rejects_incomplete_list():
    with pytest.raises(DesignError):
        SteinerTripleSystem(7, [(0, 1, 2)])


def test_pair_lookup_rejects_bad_pairs(sts7):
    with pytest.raises(DesignError):
        sts7.third_vertex(2, 2)
    with pytest.raises(DesignError):
        sts7.third_vertex(0, 7)


def test_induced_keeps_labels_and_inner_triples(sts15):
    keep = list(range(10))
    sub = sts15.induced(keep)
    assert sub.m == 15
    assert sub.vertices() == keep
    expected = [t for t in sts15.triples if all(v < 10 for v in t)]
    assert sub.triples == expected
    assert all(sub.degree(v) == 0 for v in range(10, 15))


def test_induced_accepts_boolean_mask(sts9):
    mask = np.zeros(9, dtype=bool)
    mask[[0, 1, 2, 3]] = True
    sub = sts9.induced(mask)
    assert sub.num_vertices() == 4
    assert sub.triples == [t for t in sts9.triples if set(t) <= {0, 1, 2, 3}]


def test_pair_slot_is_a_bijection():
    m = 9
    slots = {pair_slot(m, x, y) for x in range(m) for y in range(x + 1, m)}
    assert slots == set(range(m * (m - 1) // 2))
    assert pair_slot(m, 5, 2) == pair_slot(m, 2, 5)


@pytest.mark.parametrize("lower,expected", [(0, 3), (3, 3), (4, 7), (8, 9), (10, 13), (14, 15), (16, 19), (92, 93)])
def test_smallest_admissible_order(lower, expected):
    assert smallest_admissible_order(lower) == expected


@settings(deadline=None, max_examples=25)
@given(st.integers(min_value=1, max_value=12))
def test_constructions_are_regular(n):
    m = smallest_admissible_order(6 * n - 5)
    sts = build_sts(m)
    degrees = sts.degrees()
    assert degrees.min() == degrees.max() == (m - 1) // 2
