from pathlib import Path
import sys
import pytest

src_dir = (Path(__file__).parent / "../src").resolve()
if str(src_dir) not in sys.path:
    sys.path.insert(0, str(src_dir))

from spherical_classes.matgrp import make_group
from spherical_classes.rootsys import build_root_system

example_dir = (Path(__file__).parent / "../doc/examples").resolve()

def get_example(fname):
    path = example_dir / fname
    assert path.is_file()
    return path


def pytest_addoption(parser):
    parser.addoption("--run-slow", action="store_true", default=False,
                     help="also run the exhaustive checks marked slow")


def pytest_collection_modifyitems(config, items):
    if config.getoption("--run-slow"):
        return
    skip_slow = pytest.mark.skip(reason="needs --run-slow")
    for item in items:
        if "slow" in item.keywords:
            item.add_marker(skip_slow)


@pytest.fixture(scope="session")
def rootsys():
    """Factory for cached root systems."""
    return build_root_system


@pytest.fixture(scope="session")
def sp4():
    """Sp4 over F_5, small enough for exhaustive class enumeration."""
    return make_group('C', 2, 5)


@pytest.fixture(scope="session")
def sl2():
    return make_group('A', 1, 3)
