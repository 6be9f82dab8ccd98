import pytest

from algebra.fields import get_field
from algebra.polynomials import poly_ring


@pytest.fixture
def q():
    return get_field("q")


@pytest.fixture
def f2():
    return get_field("f2")


@pytest.fixture
def f3():
    return get_field("f3")


@pytest.fixture
def f5():
    return get_field("f5")


@pytest.fixture
def ring2(q):
    return poly_ring(2, q)


@pytest.fixture
def ring3(q):
    return poly_ring(3, q)


@pytest.fixture
def x(ring2):
    """Образующие Q[x1, x2]"""
    return ring2.gens()
