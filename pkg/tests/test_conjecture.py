import random

import pytest
from hypothesis import given, settings, strategies as st

from algebra.fields import get_field
from algebra.univariate import UniPoly
from casas.conjecture import (
    brute_force_counterexample,
    check_polynomial,
    monic_polynomials,
    pure_power_root,
    resultant_profile,
)
from casas.exceptions import DegreeOutOfRangeError, InfiniteFieldError, NotMonicError, SearchSpaceTooLargeError


def test_pure_power(q):
    verdict = check_polynomial(UniPoly.from_ints(q, [-8, 12, -6, 1]))
    assert verdict.is_pure_power
    assert verdict.root == "2"
    assert verdict.gcd_nontrivial == [True, True]
    assert not verdict.counterexample
    assert verdict.field == "q"


def test_characteristic_two_counterexample(f2):
    f = UniPoly.from_ints(f2, [0, 0, 1, 1])
    verdict = check_polynomial(f)
    assert verdict.gcd_nontrivial == [True, True]
    assert not verdict.is_pure_power
    assert verdict.counterexample
    assert resultant_profile(f) == [0, 0]


def test_no_common_factor(q):
    f = UniPoly.from_ints(q, [1, 0, 1])
    verdict = check_polynomial(f)
    assert verdict.gcd_nontrivial == [False]
    assert not verdict.counterexample
    assert resultant_profile(f) == [4]


@pytest.mark.parametrize("field,coefficients,root", [
    ("f3", [2, 0, 0, 1], 1),
    ("f2", [1, 0, 1], 1),
    ("f5", [1, 0, 0, 0, 0, 1], 4),
    ("q", [1, 2, 1], -1),
    ("f3", [1, 0, 0, 1, 0, 1], None),
])
def test_pure_power_root(field, coefficients, root):
    field = get_field(field)
    assert pure_power_root(UniPoly.from_ints(field, coefficients)) == (None if root is None else field.from_int(root))


def test_requires_monic(q):
    with pytest.raises(NotMonicError):
        check_polynomial(UniPoly.from_ints(q, [1, 2]))
    with pytest.raises(DegreeOutOfRangeError):
        check_polynomial(UniPoly.from_ints(q, [1]))


def test_monic_polynomials(f2):
    polynomials = list(monic_polynomials(2, f2))
    assert polynomials == [UniPoly.from_ints(f2, c) for c in ([0, 0, 1], [0, 1, 1], [1, 0, 1], [1, 1, 1])]


def test_brute_force(f2, f3):
    assert brute_force_counterexample(3, f2) == UniPoly.from_ints(f2, [0, 0, 1, 1])
    assert brute_force_counterexample(3, f3) is None


def test_brute_force_limits(q, f3):
    with pytest.raises(InfiniteFieldError):
        brute_force_counterexample(3, q)
    with pytest.raises(SearchSpaceTooLargeError):
        brute_force_counterexample(5, f3, limit=100)


@settings(max_examples=60, deadline=None)
@given(coefficients=st.lists(st.integers(0, 6), min_size=1, max_size=5), p=st.sampled_from([2, 3, 5, 7]))
def test_resultants_match_gcds(coefficients, p):
    field = get_field(f"f{p}")
    f = UniPoly.from_ints(field, coefficients + [1])
    verdict = check_polynomial(f)
    assert [field.is_zero(r) for r in resultant_profile(f)] == verdict.gcd_nontrivial


@settings(max_examples=40, deadline=None)
@given(root=st.integers(-5, 5), d=st.integers(1, 6), p=st.sampled_from([0, 2, 3, 5]))
def test_pure_powers_are_never_counterexamples(root, d, p):
    field = get_field("q" if p == 0 else f"f{p}")
    a = field.from_int(root)
    f = UniPoly(field, [field.neg(a), field.one]) ** d
    verdict = check_polynomial(f)
    assert verdict.is_pure_power
    assert all(verdict.gcd_nontrivial)
    assert not verdict.counterexample


def _random_monic(rng: random.Random, field, degree: int) -> UniPoly:
    # каждый третий многочлен с кратным корнем, чтобы gcd бывали нетривиальными
    if degree >= 2 and rng.randrange(3) == 0:
        root = field.from_int(rng.randint(-3, 3))
        rest = UniPoly.from_ints(field, [rng.randint(-3, 3) for _ in range(degree - 2)] + [1])
        return UniPoly.from_roots(field, [root, root]) * rest
    return UniPoly.from_ints(field, [rng.randint(-3, 3) for _ in range(degree)] + [1])


@pytest.mark.parametrize("name", ["q", "f11"])
def test_resultants_match_gcds_on_seeded_sample(name):
    field = get_field(name)
    rng = random.Random(20240611)
    nontrivial = 0
    for _ in range(200):
        f = _random_monic(rng, field, rng.randint(2, 6))
        verdict = check_polynomial(f)
        assert [field.is_zero(r) for r in resultant_profile(f)] == verdict.gcd_nontrivial, f
        nontrivial += any(verdict.gcd_nontrivial)
    assert nontrivial > 0
