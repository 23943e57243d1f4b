import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from mcstandards.instances import example1, example2  # noqa: E402
from mcstandards.standards import compute_standards  # noqa: E402


@pytest.fixture(scope="session")
def ex1():
    return example1()


@pytest.fixture(scope="session")
def ex2():
    return example2()


@pytest.fixture(scope="session")
def s1(ex1):
    return compute_standards(ex1, 10)


@pytest.fixture(scope="session")
def s2(ex2):
    return compute_standards(ex2, 10)
