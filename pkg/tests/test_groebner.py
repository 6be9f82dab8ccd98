import pytest
from hypothesis import given, settings, strategies as st

from algebra.fields import get_field
from algebra.groebner import buchberger, normal_form_with_quotients, s_polynomial
from algebra.ideals import ideals_equal
from algebra.polynomials import MultiPoly, poly_ring


def test_linear_forms(x):
    x1, x2 = x
    gb = buchberger([x1 - x2, x1 + x2])
    assert sorted(gb.leading_monomials()) == [(0, 1), (1, 0)]
    assert gb.contains(x1**5 + x2)


def test_reduced_basis_is_monic(x):
    x1, x2 = x
    gb = buchberger([2 * x1**2 + 4 * x1 * x2, 3 * x1 * x2 - x2**2])
    assert all(g.leading_term()[1] == 1 for g in gb)
    assert gb.is_homogeneous()
    assert not gb.is_unit_ideal()


def test_unit_ideal(x):
    x1, x2 = x
    gb = buchberger([x1 + 1, x1])
    assert gb.is_unit_ideal()
    assert len(gb) == 1


def test_twisted_cubic_ideal(ring3):
    x1, x2, x3 = ring3.gens()
    gb = buchberger([x1 * x3 - x2**2, x2 - x1**2, x3 - x1**3], order="lex")
    assert gb.contains(x2**3 - x3**2)


def test_s_polynomial(x):
    x1, x2 = x
    assert s_polynomial(x1**2, x1 * x2) == 0


def test_order_independent_membership(x):
    x1, x2 = x
    generators = [x1**2 - x2**2, x1 * x2]
    for order in ("grevlex", "lex"):
        gb = buchberger(generators, order=order)
        assert gb.contains(x1**3)
        assert not gb.contains(x1**2)


def test_empty_generators_need_ring(ring2):
    assert len(buchberger([], ring=ring2)) == 0
    with pytest.raises(ValueError):
        buchberger([])


@settings(max_examples=30, deadline=None)
@given(st.lists(st.dictionaries(st.tuples(st.integers(0, 2), st.integers(0, 2)), st.integers(0, 4), max_size=4), min_size=1, max_size=3))
def test_generators_reduce_to_zero(generators):
    ring = poly_ring(2, get_field("f5"))
    generators = [MultiPoly(ring, {mono: ring.coerce(c) for mono, c in terms.items()}) for terms in generators]
    gb = buchberger(generators)
    for f in generators:
        remainder, _ = normal_form_with_quotients(f, gb)
        assert remainder.is_zero()


@settings(max_examples=30, deadline=None)
@given(
    st.lists(st.dictionaries(st.tuples(st.integers(0, 2), st.integers(0, 2)), st.integers(0, 4), max_size=4), min_size=1, max_size=3),
    st.sampled_from(["grevlex", "lex"]),
)
def test_reduced_basis_is_fixed_point(generators, order):
    ring = poly_ring(2, get_field("f5"))
    generators = [MultiPoly(ring, {mono: ring.coerce(c) for mono, c in terms.items()}) for terms in generators]
    gb = buchberger(generators, order=order, ring=ring)
    assert buchberger(gb.generators, order=order, ring=ring) == gb
    assert ideals_equal(gb, buchberger(list(reversed(generators)), order=order, ring=ring))
