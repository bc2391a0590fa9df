from hypothesis import given, settings, strategies as st

from src.designs.steiner import build_sts
from src.embedding.certificate import verify_certificate
from src.embedding.greedy import greedy_capacity, greedy_embed
from src.hypertrees.generator import random_subdivision_tree
from src.hypertrees.hypertree import Hypertree


def test_capacity():
    assert greedy_capacity(7) == 2
    assert greedy_capacity(15) == 4
    assert greedy_capacity(99) == 25


def test_spider_in_sts15(spider, sts15):
    for seed in range(20):
        emb = greedy_embed(spider, sts15, seed)
        assert emb is not None
        assert verify_certificate(spider, sts15, emb).ok


def test_host_smaller_than_tree(spider):
    assert greedy_embed(spider, build_sts(3), 0) is None


def test_empty_and_single_vertex(fano):
    assert greedy_embed(Hypertree((), n=1), fano, 0).vertex_map.keys() == {0}
    assert greedy_embed(Hypertree((), vertices=()), fano, 0).vertex_map == {}


def test_seeded(spider, sts15):
    assert greedy_embed(spider, sts15, 5).vertex_map == greedy_embed(spider, sts15, 5).vertex_map


@settings(deadline=None, max_examples=40)
@given(
    st.sampled_from([15, 31, 63, 99]),
    st.integers(min_value=0, max_value=2**32 - 1),
)
def test_never_stuck_below_capacity(m, seed):
    edges = greedy_capacity(m)
    n = 2 * edges + 1
    t = random_subdivision_tree(n, 3, seed)
    sts = build_sts(m)
    emb = greedy_embed(t, sts, seed)
    assert emb is not None
    assert verify_certificate(t, sts, emb).ok
