import random

import pytest

from skewred.ffield import make_field


@pytest.fixture(scope="session")
def f4():
    return make_field(2, 1, 2)


@pytest.fixture(scope="session")
def f16():
    return make_field(2, 1, 4)


@pytest.fixture(scope="session")
def f64_e2():
    # q = 4, s = 3: exercises e > 1 and a nontrivial fixed subfield
    return make_field(2, 2, 3)


@pytest.fixture(scope="session")
def f729():
    # odd characteristic: p = 3, q = 3, s = 6
    return make_field(3, 1, 6)


@pytest.fixture(scope="session")
def f212():
    return make_field(2, 1, 12)


@pytest.fixture
def rng():
    return random.Random(0xC0FFEE)
