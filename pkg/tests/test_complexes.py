from itertools import product

import pytest

from algebra.hilbert import hilbert_series
from algebra.ideals import ideal_of
from algebra.polynomials import poly_ring
from koszul.complexes import (
    ChainComplex,
    InductiveStep,
    c_complex,
    coker_iota,
    coker_iota_1,
    d_complex,
    exterior_labels,
    exterior_module,
    hat_complex,
    koszul_complex,
    koszul_matrix,
    lower_complex,
    truncated_complex,
)
from koszul.exceptions import ComplexError, GradingError
from koszul.homology import homology_dim
from koszul.proof import default_degree_bound
from koszul.modules import Submodule


def test_exterior_labels():
    assert exterior_labels(3, 2) == [(1, 2), (1, 3), (2, 3)]
    assert exterior_labels(3, 0) == [()]
    assert exterior_labels(2, 3) == []


def test_exterior_module_shifts(ring2):
    module = exterior_module(ring2, [3, 2, 1], 2, cap=0)
    assert module.shifts == (5, 4, 3)
    assert module.caps == (0, 0, 0)
    assert exterior_module(ring2, [1, 1], 1, cap=-4).caps == (-1, -1)


def test_koszul_complex_of_variables(ring2):
    x1, x2 = ring2.gens()
    cx = koszul_complex(ring2.gens())
    assert [module.rank for module in cx.modules] == [1, 2, 1]
    assert cx.differential(2).entries == ((-x2,), (x1,))
    assert cx.differential(1).entries == ((x1, x2),)
    assert cx.differential(0) is None and cx.differential(3) is None
    assert cx.dimensions(2) == [3, 4, 1]


def test_koszul_complex_truncated(ring2):
    cx = koszul_complex(ring2.gens(), length=1)
    assert cx.length == 1
    with pytest.raises(GradingError):
        koszul_complex(ring2.gens(), length=3)
    with pytest.raises(GradingError):
        koszul_complex([])


def test_complex_rejects_nonzero_square(ring2):
    x1, x2 = ring2.gens()
    modules = [exterior_module(ring2, [1, 1], level) for level in range(3)]
    d1 = koszul_matrix(modules[1], modules[0], [x1, x2])
    d2 = koszul_matrix(modules[2], modules[1], [x2, x1])
    with pytest.raises(ComplexError):
        ChainComplex(modules, [d1, d2], name="broken")
    with pytest.raises(GradingError):
        ChainComplex(modules, [d1], name="short")


@pytest.fixture
def step(q):
    return InductiveStep(3, (4, 4), q)


def test_inductive_step(step, ring3):
    x1, x2, x3 = ring3.gens()
    assert step.a == [x1 * x2 * x3, x1 * x2 + x1 * x3 + x2 * x3]
    assert step.b == [x1 * x2, x1 + x2]
    assert step.c == [ring3.zero(), x1 * x2]
    assert step.alpha == [3, 2] and step.beta == [2, 1]
    assert step.lower_indices == (3, 3)
    assert all(a == b * x3 + c for a, b, c in zip(step.a, step.b, step.c))
    assert step.syzygies() == [(-(x1 + x2), x1 * x2)]


@pytest.mark.parametrize("j_n,expected", [(1, 1), (2, 1), (3, -3), (4, 1)])
def test_inductive_step_scalar(step, j_n, expected):
    assert step.scalar(j_n) == expected


def test_hat_complex_resolves_quotient(q):
    cx = hat_complex(3, (4, 4), q)
    series = hilbert_series(ideal_of(cx.differential(1).entries[0]))
    for m in range(6):
        assert homology_dim(cx, 0, m).dimension == series.coefficient(m)
        assert homology_dim(cx, 1, m).dimension == 0


@pytest.mark.slow
@pytest.mark.parametrize("n", [3, 4])
def test_hat_complex_is_acyclic(q, n):
    allowed = [j for j in range(1, n + 2) if j != n]
    for indices in product(allowed, repeat=n - 1):
        cx = hat_complex(n, indices, q)
        for i in (1, 2):
            for m in range(default_degree_bound(n) + 1):
                assert homology_dim(cx, i, m).dimension == 0, (indices, i, m)


def test_hat_complex_cached(q):
    assert hat_complex(3, (4, 4), q) is hat_complex(3, (4, 4), q)
    assert hat_complex(3, (4, 4), q, length=1).length == 1


@pytest.mark.parametrize("k", [1, 2, 3])
def test_truncated_complex_caps(q, k):
    cx = truncated_complex(3, (4, 4), k, q)
    assert [module.caps[0] for module in cx.modules] == [k, k - 1, max(k - 2, -1)]


def test_truncated_complex_zero(q, ring3):
    x1, x2, x3 = ring3.gens()
    cx = truncated_complex(3, (4, 4), 0, q)
    assert isinstance(cx.modules[1], Submodule)
    assert cx.modules[2].is_zero()
    assert cx.modules[1].contains((-(x1 + x2), x1 * x2))
    assert not cx.modules[1].contains((x1**2, ring3.zero()))
    with pytest.raises(GradingError):
        truncated_complex(3, (4, 4), -1, q)


def test_lower_complex(q, ring3):
    x1, x2 = ring3.var(1), ring3.var(2)
    cx = lower_complex(3, (4, 4), q)
    assert cx.differential(1).entries == ((x1 * x2, x1 + x2),)
    assert all(cap == 0 for module in cx.modules for cap in module.caps)


def test_coker_complexes(q):
    short, full = coker_iota_1(3, (4, 4), q), coker_iota(3, (4, 4), q)
    assert short.modules[2].is_zero()
    assert not full.modules[2].is_zero()
    assert homology_dim(short, 0, 1).dimension == homology_dim(lower_complex(3, (4, 4), q), 0, 1).dimension


def test_c_complex(q, ring3):
    x1, x2 = ring3.var(1), ring3.var(2)
    cx = c_complex(3, (4, 4), 0, q)
    assert cx.differential(1).entries == ((x1**2 * x2**2,),)
    assert cx.modules[1].shifts == (4,)
    assert c_complex(3, (4, 4), 1, q).modules[0].caps == (1,)
    with pytest.raises(GradingError):
        c_complex(3, (4, 4), 2, q)


def test_d_complex(q, ring3):
    x1, x2, x3 = ring3.gens()
    cx = d_complex(3, (4, 4), q)
    module = cx.modules[1]
    assert len(module.generators()) == 2
    assert module.contains((-(x1 + x2) * x3, x1 * x2 * x3))
    assert not module.contains((x3, ring3.zero()))


def test_complexes_over_prime_field(f3):
    ring = poly_ring(3, f3)
    cx = hat_complex(3, (4, 4), f3)
    assert cx.ring == ring
    assert homology_dim(cx, 1, 4).dimension == 0
