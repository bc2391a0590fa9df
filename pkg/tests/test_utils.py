import numpy as np
import pytest

from src.utils.console import say, set_quiet
from src.utils.json_loader import dump_json, dumps, file_digest, load_json, read_lines
from src.utils.seeds import STAGES, stage_seed


def test_stage_seeds_are_stable_and_distinct():
    assert stage_seed(7, "reservoir", 3) == stage_seed(7, "reservoir", 3)
    seeds = {stage_seed(7, stage) for stage in STAGES}
    assert len(seeds) == len(STAGES)
    assert stage_seed(7, "pack", 0) != stage_seed(7, "pack", 1)
    assert stage_seed(7, "tree") != stage_seed(8, "tree")
    assert 0 <= stage_seed(2**40, "trial", 99) < 2**63


def test_unknown_stage():
    with pytest.raises(KeyError):
        stage_seed(0, "nope")


def test_dumps_sorts_keys_and_handles_numpy():
    text = dumps({"b": np.int64(2), "a": np.array([1.5]), "c": {3, 1}})
    assert text == '{"a": [1.5], "b": 2, "c": [1, 3]}'
    with pytest.raises(TypeError):
        dumps({"x": object()})


def test_json_files(tmp_path):
    path = tmp_path / "sub" / "out.json"
    dump_json({"k": 1}, path)
    assert load_json(path) == {"k": 1}
    assert len(file_digest(path)) == 64
    empty = tmp_path / "empty.json"
    empty.write_text("")
    with pytest.raises(ValueError):
        load_json(empty)


def test_read_lines_skips_comments(tmp_path):
    path = tmp_path / "t.txt"
    path.write_text("# header\n3\n\n0 1 2  # edge\n")
    assert read_lines(path) == [(2, "3"), (4, "0 1 2")]


def test_quiet_switch(capsys):
    set_quiet(False)
    say("hello")
    assert capsys.readouterr().err == "hello\n"
    set_quiet(True)
    say("hidden")
    assert capsys.readouterr().err == ""
