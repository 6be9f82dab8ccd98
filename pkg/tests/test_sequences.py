from itertools import product

import pytest

from algebra.endomorphisms import swap_endo
from algebra.fields import get_field
from algebra.parser import parse_poly
from algebra.polynomials import poly_ring
from casas.exceptions import DegreeOutOfRangeError, InvalidIndicesError, UnreducedIndicesError
from casas.sequences import (
    SequenceKind,
    build_prefix,
    build_S,
    build_S_hat,
    lower_indices,
    multiplier,
    reduce_indices,
    transpose_index,
)


def test_build_S(q):
    sequence = build_S(3, (3, 3), q)
    assert [str(f) for f in sequence] == ["x1*x2", "x1 + x2"]
    assert sequence.kind == SequenceKind.FULL
    assert sequence.degrees == [2, 1]
    assert sequence.regenerate() == sequence


def test_build_S_applies_phi(q):
    x1, x2 = build_S(3, (1, 3), q).ring.gens()
    assert build_S(3, (1, 3), q).elements == (-x1 * (x2 - x1), x1 + x2)


def test_build_prefix(q):
    prefix = build_prefix(4, (4, 4), q)
    assert len(prefix) == 2
    assert prefix.ring.nvars == 3
    assert prefix.elements == build_S(4, (4, 4, 1), q).elements[:2]


@pytest.mark.parametrize("d,indices,error", [
    (3, (1,), InvalidIndicesError),
    (3, (1, 4), InvalidIndicesError),
    (3, (0, 1), InvalidIndicesError),
    (1, (), DegreeOutOfRangeError),
])
def test_build_S_rejects(q, d, indices, error):
    with pytest.raises(error):
        build_S(d, indices, q)


def test_build_S_hat(ring3, q):
    x1, x2, x3 = ring3.gens()
    sequence = build_S_hat(3, (4, 4), q)
    assert sequence.kind == SequenceKind.TRUNCATED
    assert sequence.elements == (x1 * x2 * x3, x1 * x2 + x1 * x3 + x2 * x3)
    assert sequence.leading_coefficients() == [x1 * x2, x1 + x2]
    assert all(f.degree_in() <= 1 for f in build_S_hat(3, (1, 2), q))


def test_build_S_hat_requires_reduced_indices(q):
    with pytest.raises(UnreducedIndicesError):
        build_S_hat(3, (3, 1), q)


@pytest.mark.parametrize("j,expected", [(1, "x2 + x3 - 3*x1"), (3, "x1 + x2 - 3*x3"), (4, "x1 + x2 + x3")])
def test_multiplier(ring3, q, j, expected):
    assert multiplier(3, j, q) == parse_poly(expected, q, ring=ring3)


def test_multiplier_rejects(q):
    with pytest.raises(InvalidIndicesError):
        multiplier(3, 5, q)


def test_lower_indices():
    assert lower_indices((4, 1, 4), 3) == (3, 1, 3)


@pytest.mark.parametrize("j,expected", [(1, 3), (3, 1), (2, 2), (4, 4)])
def test_transpose_index(j, expected):
    assert transpose_index(j, 1, 3) == expected


def test_reduce_indices():
    reduction = reduce_indices(3, (3, 1))
    assert reduction.swap == (2, 3)
    assert reduction.indices == [2, 1]
    assert reduction.lower == [2, 1]

    with_last = reduce_indices(3, (3, 1, 3))
    assert with_last.indices == [2, 1, 2]

    untouched = reduce_indices(3, (4, 1))
    assert untouched.swap is None
    assert untouched.lower == [3, 1]


def test_reduction_swap_conjugates_sequences(q):
    reduction = reduce_indices(3, (3, 1, 2))
    tau = reduction.swap_endo(q)
    assert tau == swap_endo(3, 2, 3, q)
    original = build_S(4, (3, 1, 2), q)
    reduced = build_S(4, tuple(reduction.indices), q)
    assert tuple(tau(f) for f in original) == reduced.elements


@pytest.mark.parametrize("indices", [(1,), (1, 2, 3, 4), (5, 1)])
def test_reduce_indices_rejects(indices):
    with pytest.raises(InvalidIndicesError):
        reduce_indices(3, indices)


@pytest.mark.parametrize("n", [2, 3, 4, pytest.param(5, marks=pytest.mark.slow)])
def test_leading_coefficients_are_lower_sequence(n):
    field = get_field("q")
    ring = poly_ring(n, field)
    allowed = [j for j in range(1, n + 2) if j != n]
    for indices in product(allowed, repeat=n - 1):
        lower = build_S(n, lower_indices(indices, n), field)
        expected = [f.embed(ring) for f in lower]
        assert build_S_hat(n, indices, field).leading_coefficients() == expected, indices
