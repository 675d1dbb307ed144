from fractions import Fraction

import pytest
from hypothesis import settings

from homalg.corpus import load_example

settings.register_profile("homalg", max_examples=60, deadline=None)
settings.load_profile("homalg")


def e(n, i, scale=1):
    """Basis vector e_i (0-based) of a dim-n space."""
    return tuple(Fraction(scale if k == i else 0) for k in range(n))


def vec(*coords):
    return tuple(Fraction(c) for c in coords)


@pytest.fixture(scope="session")
def m4():
    return load_example("malcev4")


@pytest.fixture(scope="session")
def m4_aut():
    return load_example("malcev4_aut")


@pytest.fixture(scope="session")
def m5():
    return load_example("malcev5")


@pytest.fixture(scope="session")
def nil2():
    return load_example("nil2_hom")
