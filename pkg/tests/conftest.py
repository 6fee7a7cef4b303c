import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from quiverhom.counterexample import counterexample_algebra, dual_numbers  # noqa: E402
from quiverhom.exactla import FieldSpec  # noqa: E402

ARROWS = [("a", "1", "2"), ("b", "2", "3"), ("c", "3", "4"), ("d", "1", "3")]
VERTICES = ["1", "2", "3", "4"]


@pytest.fixture(scope="session")
def R():
    return counterexample_algebra()


@pytest.fixture(scope="session")
def R2():
    return counterexample_algebra(FieldSpec.prime(2))


@pytest.fixture(scope="session")
def dualnum():
    return dual_numbers()
