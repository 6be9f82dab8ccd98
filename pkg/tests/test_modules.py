import pytest

from koszul.exceptions import CapViolationError, GradingError
from koszul.matrices import CoefficientExtraction, PolyMatrix
from koszul.modules import FreeModule, Submodule


@pytest.fixture
def capped(ring2):
    """e1 с x2-степенью не выше 0 и свободная e2, обе сдвинуты на 1"""
    return FreeModule(ring2, [(1,), (2,)], [1, 1], caps=[0, None])


def test_graded_piece(capped):
    assert capped.dimension(0) == 0
    assert capped.dimension(1) == 2
    assert capped.graded_piece(2) == [((1,), (1, 0)), ((2,), (1, 0)), ((2,), (0, 1))]
    assert capped.capped and not capped.is_zero()


def test_generators_respect_caps(ring2, capped):
    x1, x2 = ring2.gens()
    assert capped.generators() == [(ring2.one(), ring2.zero()), (ring2.zero(), ring2.one())]
    assert len(capped.with_caps([1, None]).generators()) == 3
    assert capped.contains((x1, x2))
    assert not capped.contains((x2, x1))


def test_vector_coordinates(ring2, capped):
    x1, x2 = ring2.gens()
    element = (x1, 2 * x2)
    vector = capped.vector(element, 2)
    assert vector == {0: 1, 2: 2}
    assert capped.element(vector, 2) == element
    assert capped.element_degree(element) == 2


def test_vector_errors(ring2, capped):
    x1, x2 = ring2.gens()
    with pytest.raises(CapViolationError):
        capped.vector((x2, ring2.zero()), 2)
    with pytest.raises(GradingError):
        capped.vector((x1**2, ring2.zero()), 2)
    with pytest.raises(GradingError):
        capped.element_degree((x1, x2**2))


def test_zero_module(ring2):
    assert FreeModule.zero_module(ring2).rank == 0
    assert FreeModule(ring2, [(1,)], [0], caps=[-1]).is_zero()
    with pytest.raises(GradingError):
        FreeModule(ring2, [(1,), (1,)], [0, 0])


def test_submodule_over_lower_ring(ring2):
    x1, x2 = ring2.gens()
    ambient = FreeModule(ring2, [()], [0])
    over_x1 = Submodule(ambient, [(x1,)])
    assert [over_x1.dimension(m) for m in range(4)] == [0, 1, 1, 1]
    assert over_x1.contains((x1**3,))
    assert not over_x1.contains((x1 * x2,))
    assert len(over_x1.basis(2)) == 1

    full = Submodule(ambient, [(x1,)], base_nvars=2)
    assert full.dimension(2) == 2
    assert full.contains((x1 * x2,))


def test_submodule_rejects_capped_generators(ring2):
    x2 = ring2.var(2)
    with pytest.raises(CapViolationError):
        Submodule(FreeModule(ring2, [()], [0], caps=[0]), [(x2,)])


def test_poly_matrix(ring2):
    x1, x2 = ring2.gens()
    source, target = FreeModule(ring2, [(1,), (2,)], [1, 1]), FreeModule(ring2, [()], [0])
    d = PolyMatrix(source, target, [[x1, x2]])
    assert d((x2, -x1)) == (ring2.zero(),)
    assert d.shape == (1, 2)
    assert d.image_vector({0: 1}, 2) == target.vector((x1**2,), 2)
    with pytest.raises(GradingError):
        PolyMatrix(source, target, [[x1, x1 * x2]])
    with pytest.raises(GradingError):
        PolyMatrix(source, target, [[x1]])


def test_poly_matrix_compose(ring2):
    x1, x2 = ring2.gens()
    free = FreeModule(ring2, [()], [0])
    shifted = FreeModule(ring2, [()], [1])
    times_x1 = PolyMatrix.diagonal(free, free, x1)
    times_x2 = PolyMatrix.diagonal(free, free, x2)
    assert times_x1.compose(times_x2) == PolyMatrix.diagonal(free, free, x1 * x2)
    assert PolyMatrix.identity(shifted).is_zero() is False
    assert PolyMatrix.zero(free, shifted, degree=1).is_zero()


def test_coefficient_extraction(ring2):
    x1, x2 = ring2.gens()
    source = FreeModule(ring2, [()], [1], caps=[1])
    target = FreeModule(ring2, [()], [0], caps=[0])
    extract = CoefficientExtraction(source, target, power=1, degree=-2)
    assert extract((x1 * x2 + x1**2,)) == (x1,)
    assert not extract.linear_over_ring
    halved = CoefficientExtraction(source, target, power=1, degree=-2, divisor=ring2.field.from_int(2))
    assert halved((x1 * x2,)) == (x1.scale(ring2.field.inv(ring2.field.from_int(2))),)
    with pytest.raises(GradingError):
        CoefficientExtraction(source, target, power=1, degree=-1)
