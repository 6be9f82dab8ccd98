import pytest

from algebra.derivations import (
    count_squarefree,
    elementary_symmetric,
    hasse_derivation_multi,
    variables_product,
)
from algebra.fields import get_field
from algebra.polynomials import poly_ring


def test_hasse_of_product(ring3):
    x1, x2, x3 = ring3.gens()
    product = variables_product(ring3)
    assert product == x1 * x2 * x3
    assert hasse_derivation_multi(product, 1) == x1 * x2 + x1 * x3 + x2 * x3
    assert hasse_derivation_multi(product, 3) == 1
    assert hasse_derivation_multi(product, -1).is_zero()


@pytest.mark.parametrize("i", range(5))
def test_hasse_of_product_is_elementary_symmetric(ring3, i):
    product = variables_product(ring3)
    assert hasse_derivation_multi(product, i) == elementary_symmetric(ring3, 3 - i)


def test_hasse_on_leading_variables_only(ring3):
    x1, x2, x3 = ring3.gens()
    lower = variables_product(ring3, 2)
    assert lower == x1 * x2
    assert hasse_derivation_multi(x1 * x2 * x3, 1, nvars=2) == x1 * x3 + x2 * x3
    assert hasse_derivation_multi(lower, 1, nvars=2) == x1 + x2


def test_hasse_binomial_weights(ring2):
    x1, x2 = ring2.gens()
    # HD^2(x1^3 x2) = C(3,2) x1 x2 + C(3,1) C(1,1) x1^2
    assert hasse_derivation_multi(x1**3 * x2, 2) == 3 * x1 * x2 + 3 * x1**2


def test_count_squarefree(ring3):
    for k in range(-1, 5):
        assert len(elementary_symmetric(ring3, k)) == count_squarefree(3, k)


@pytest.mark.parametrize("d", range(1, 8))
def test_hasse_of_product_up_to_seven_variables(d):
    ring = poly_ring(d, get_field("q"))
    product = variables_product(ring)
    for i in range(d):
        assert hasse_derivation_multi(product, i) == elementary_symmetric(ring, d - i)
