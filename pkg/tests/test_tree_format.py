import pytest

from src.hypertrees.generator import random_bounded_tree, random_subdivision_tree
from src.hypertrees.hypertree import subdivide
from src.hypertrees.tree_format import (
    format_hypertree,
    read_graph_tree,
    read_hypertree,
    write_graph_tree,
    write_hypertree,
)
from src.utils.errors import ParseError


def test_hypertree_file_round_trip(tmp_path):
    t = random_subdivision_tree(41, 3, 5)
    back = read_hypertree(write_hypertree(t, tmp_path / "t.ht"))
    assert back == t


def test_graph_tree_file_round_trip(tmp_path):
    g = random_bounded_tree(12, 3, 2)
    back = read_graph_tree(write_graph_tree(g, tmp_path / "g.gt"))
    assert back.order == 12
    assert back.edges == g.edges


def test_fixtures_parse(fixtures_dir, counterexample, spider):
    assert read_hypertree(fixtures_dir / "counterexample.ht") == counterexample
    assert read_hypertree(fixtures_dir / "spider.ht") == spider
    sample = subdivide(read_graph_tree(fixtures_dir / "sample.gt"))
    assert sample.n == 11
    assert sample.max_degree() == 3


def test_format_hypertree_header(single_edge):
    assert format_hypertree(single_edge) == "3\n0 1 2\n"


@pytest.mark.parametrize(
    "body,line",
    [
        ("", 1),
        ("x\n", 1),
        ("7\n0 1\n", 2),
        ("7\n0 1 2\n0 3 3\n", 3),
        ("7\n0 1 2\n0 3 9\n", 3),
    ],
)
def test_hypertree_parse_errors(tmp_path, body, line):
    path = tmp_path / "bad.ht"
    path.write_text(body, encoding="utf-8")
    with pytest.raises(ParseError) as info:
        read_hypertree(path)
    assert info.value.line == line


def test_hypertree_parse_rejects_cycle(tmp_path):
    path = tmp_path / "cycle.ht"
    path.write_text("7\n0 1 2\n2 3 4\n4 5 0\n", encoding="utf-8")
    with pytest.raises(ParseError, match="cycle"):
        read_hypertree(path)


def test_graph_tree_parse_rejects_cycle(tmp_path):
    path = tmp_path / "cycle.gt"
    path.write_text("3\n0 1\n1 2\n2 0\n", encoding="utf-8")
    with pytest.raises(ParseError):
        read_graph_tree(path)
