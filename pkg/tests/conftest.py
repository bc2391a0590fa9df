import sys
from pathlib import Path

import pytest

ROOT = Path(__file__).resolve().parents[1]
if str(ROOT) not in sys.path:
    sys.path.insert(0, str(ROOT))

from src.designs.steiner import build_sts  # noqa: E402
from src.designs.sts_format import read_sts  # noqa: E402
from src.hypertrees.hypertree import Hypertree, counterexample_tree  # noqa: E402
from src.utils.console import set_quiet  # noqa: E402

FIXTURES = ROOT / "data" / "fixtures"


@pytest.fixture(autouse=True)
def quiet_console():
    set_quiet(True)
    yield
    set_quiet(False)


@pytest.fixture
def fixtures_dir():
    return FIXTURES


@pytest.fixture
def fano():
    return read_sts(FIXTURES / "fano.sts")


@pytest.fixture
def sts7():
    return build_sts(7)


@pytest.fixture
def sts9():
    return build_sts(9)


@pytest.fixture
def sts15():
    return build_sts(15)


@pytest.fixture
def counterexample():
    return counterexample_tree(3)


@pytest.fixture
def spider():
    # subdivided K_{1,3}: centre 0, middles 1..3, leaves 4..6
    return Hypertree([(0, 1, 4), (0, 2, 5), (0, 3, 6)], n=7)


@pytest.fixture
def single_edge():
    return Hypertree([(0, 1, 2)], n=3)
