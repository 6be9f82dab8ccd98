from itertools import product

import pytest

from algebra.fields import get_field
from casas.exceptions import DegreeOutOfRangeError, InvalidIndicesError
from casas.recursion import verify_prefix_lifting, verify_recursion, verify_swap_identity, x_n_factor


@pytest.mark.parametrize("field", ["q", "f2", "f3"])
@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_recursion_holds(n, field):
    field = get_field(field)
    assert all(verify_recursion(n, i, j, field) for i, j in product(range(1, n + 1), range(1, n + 2)))


def test_x_n_factor(ring3, q):
    x1, x2, x3 = ring3.gens()
    assert x_n_factor(3, 1, q) == x3 - x1
    assert x_n_factor(3, 3, q) == -x3
    assert x_n_factor(3, 4, q) == x3


@pytest.mark.parametrize("n,i,j,error", [
    (1, 1, 1, DegreeOutOfRangeError),
    (3, 4, 1, InvalidIndicesError),
    (3, 1, 5, InvalidIndicesError),
])
def test_recursion_rejects(n, i, j, error):
    with pytest.raises(error):
        verify_recursion(n, i, j)


@pytest.mark.parametrize("n", [2, 3, 4])
def test_swap_identity(n):
    report = verify_swap_identity(n)
    assert report.passed
    assert [check.name for check in report.checks] == [f"tau_{l}{n}" for l in range(1, n + 1)]


def test_prefix_lifting():
    report = verify_prefix_lifting(3, 1)
    assert report.passed
    assert [check.name for check in report.checks] == ["hypothesis", "conclusion", "implication"]


def test_prefix_lifting_over_bad_prime():
    # над F_2 полные S_2 не все регулярны, импликация тогда выполняется тривиально
    report = verify_prefix_lifting(3, 2, get_field("f2"))
    hypothesis = report.checks[0]
    assert not hypothesis.passed
    assert hypothesis.witness.conjecture_degree == 3
    assert report.checks[2].passed


def test_prefix_lifting_rejects_length():
    with pytest.raises(InvalidIndicesError):
        verify_prefix_lifting(3, 3)
