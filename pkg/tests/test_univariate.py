from math import comb

import pytest
from hypothesis import assume, given, settings, strategies as st

from algebra.exceptions import RingMismatchError, ZeroPolynomialError
from algebra.fields import get_field
from algebra.parser import parse_poly
from algebra.univariate import UniPoly, hasse_derivative_uni, resultant, sylvester_matrix, uni_gcd


def test_from_multi(q):
    f = UniPoly.from_multi(parse_poly("(x1-2)^3", q, nvars=1))
    assert f == UniPoly.from_ints(q, [-8, 12, -6, 1])
    assert f.is_monic()
    assert f(q.from_int(2)) == 0
    with pytest.raises(RingMismatchError):
        UniPoly.from_multi(parse_poly("x1*x2", q))


def test_from_roots(q):
    assert UniPoly.from_roots(q, [q.from_int(1), q.from_int(2)]) == UniPoly.from_ints(q, [2, -3, 1])


@pytest.mark.parametrize("i,expected", [
    (0, [0, 0, 0, 1]),
    (1, [0, 0, 3]),
    (2, [0, 3]),
    (3, [1]),
    (4, []),
])
def test_hasse_derivative_of_cube(q, i, expected):
    cube = UniPoly.from_ints(q, [0, 0, 0, 1])
    assert hasse_derivative_uni(cube, i) == UniPoly.from_ints(q, expected)


def test_hasse_derivative_survives_characteristic(f3):
    cube = UniPoly.from_ints(f3, [0, 0, 0, 1])
    assert hasse_derivative_uni(cube, 1).is_zero()
    assert hasse_derivative_uni(cube, 3) == UniPoly.from_ints(f3, [1])


def test_gcd(q):
    f = UniPoly.from_ints(q, [2, -3, 1])
    g = UniPoly.from_ints(q, [3, -4, 1])
    assert uni_gcd(f, g) == UniPoly.from_ints(q, [-1, 1])
    assert uni_gcd(f, UniPoly(q, [])) == f
    with pytest.raises(ZeroPolynomialError):
        uni_gcd(UniPoly(q, []), UniPoly(q, []))


def test_resultant_of_linear_factors(q):
    f = UniPoly.from_ints(q, [-1, 1])
    g = UniPoly.from_ints(q, [-3, 1])
    assert resultant(f, g) == 2
    assert len(sylvester_matrix(f, g)) == 2


def test_resultant_of_common_root(q):
    f = UniPoly.from_ints(q, [2, -3, 1])
    g = UniPoly.from_ints(q, [3, -4, 1])
    assert resultant(f, g) == 0


coefficients = st.lists(st.integers(-6, 6), min_size=1, max_size=6)


@settings(max_examples=60, deadline=None)
@given(f=coefficients, i=st.integers(0, 4), j=st.integers(0, 4))
def test_hasse_composition(f, i, j):
    q = get_field("q")
    f = UniPoly.from_ints(q, f)
    composed = hasse_derivative_uni(hasse_derivative_uni(f, i), j)
    assert composed == hasse_derivative_uni(f, i + j).scale(q.from_int(comb(i + j, i)))


@settings(max_examples=100, deadline=None)
@given(f=st.lists(st.integers(0, 4), min_size=1, max_size=4), g=coefficients)
def test_resultant_vanishes_iff_common_factor(f, g):
    f5 = get_field("f5")
    f = UniPoly.from_ints(f5, f + [1])
    g = UniPoly.from_ints(f5, g)
    assume(not g.is_zero())
    assert (resultant(f, g) == 0) == (uni_gcd(f, g).degree >= 1)


@settings(max_examples=60, deadline=None)
@given(f=coefficients, g=coefficients)
def test_divmod(f, g):
    q = get_field("q")
    f, g = UniPoly.from_ints(q, f), UniPoly.from_ints(q, g)
    assume(not g.is_zero())
    quotient, remainder = f.divmod(g)
    assert quotient * g + remainder == f
    assert remainder.degree < g.degree or g.degree == 0 and remainder.is_zero()
