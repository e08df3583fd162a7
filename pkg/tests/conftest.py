import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from harmonic_atlas import catalog_build, default_grid


@pytest.fixture(scope="session")
def catalog():
    return catalog_build()


@pytest.fixture(scope="session")
def grid():
    return default_grid()
