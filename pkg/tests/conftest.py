import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from grothext import fileformat  # noqa: E402
from grothext.catgen import gen_cluster_A  # noqa: E402

DATA = Path(__file__).parent / "data"


@pytest.fixture
def a2():
    return fileformat.load(DATA / "modkA2.json")


@pytest.fixture
def a2_path():
    return DATA / "modkA2.json"


@pytest.fixture
def cluster2():
    return gen_cluster_A(2)
