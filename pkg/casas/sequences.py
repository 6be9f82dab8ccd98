"""
Последовательности S_{d-1}(j_1..j_{d-1}) и усеченные последовательности Ŝ_n(j_1..j_{n-1}).

    S_{d-1}(J) = (Phi#_{j_1}(HD^0 x), Phi#_{j_2}(HD^1 x), ..., Phi#_{j_{d-1}}(HD^{d-2} x)) в R_{d-1},

где x = x_1...x_{d-1}. Гипотеза Касаса-Альверо в степени d равносильна регулярности S_{d-1}(J)
при всех J из [1, d]^{d-1}.

    >>> [str(f) for f in build_S(3, (3, 3), get_field("q"))]
    ['x1*x2', 'x1 + x2']
"""
try:
    from enum import StrEnum
except ImportError:  # Python < 3.11
    from enum import Enum

    class StrEnum(str, Enum):
        __str__ = str.__str__
        __format__ = str.__format__
from typing import Iterator

from pydantic import BaseModel

from algebra.derivations import hasse_derivation_multi, variables_product
from algebra.endomorphisms import RingEndo, phi_endo, swap_endo
from algebra.fields import Field
from algebra.polynomials import MultiPoly, PolyRing, leading_coeff_in_last_var, poly_ring
from casas.exceptions import DegreeOutOfRangeError, InvalidIndicesError, UnreducedIndicesError


class SequenceKind(StrEnum):
    FULL = "full"
    TRUNCATED = "truncated"


class PolySequence:
    __slots__ = ("d", "indices", "kind", "field", "elements")

    def __init__(self, d: int, indices, kind: SequenceKind, field: Field, elements):
        self.d = d
        self.indices = tuple(indices)
        self.kind = kind
        self.field = field
        self.elements = tuple(elements)

    @property
    def ring(self) -> PolyRing:
        return self.elements[0].ring

    @property
    def degrees(self) -> list[int]:
        return [f.degree() for f in self.elements]

    def regenerate(self) -> "PolySequence":
        if self.kind == SequenceKind.FULL:
            return build_S(self.d, self.indices, self.field)
        return build_S_hat(self.d, self.indices, self.field)

    def leading_coefficients(self) -> list[MultiPoly]:
        """λ_{n,1} поэлементно: коэффициенты при x_n"""
        return [leading_coeff_in_last_var(f, 1) for f in self.elements]

    def __iter__(self) -> Iterator[MultiPoly]:
        return iter(self.elements)

    def __len__(self) -> int:
        return len(self.elements)

    def __getitem__(self, index: int) -> MultiPoly:
        return self.elements[index]

    def __eq__(self, other) -> bool:
        if not isinstance(other, PolySequence):
            return NotImplemented
        return (self.kind, self.d, self.indices, self.elements) == (other.kind, other.d, other.indices, other.elements)

    def __hash__(self) -> int:
        return hash((self.kind, self.d, self.indices))

    def __repr__(self) -> str:
        elements = ", ".join(str(f) for f in self.elements)
        return f"PolySequence({self.kind}, d={self.d}, indices={self.indices}: {elements})"


def sequence_element(ring: PolyRing, nvars: int, i: int, j: int) -> MultiPoly:
    """Phi#_{nvars,j}(HD^{i-1}_{nvars} x_1...x_{nvars})"""
    product = variables_product(ring, nvars)
    derivative = hasse_derivation_multi(product, i - 1, nvars=nvars)
    return phi_endo(nvars, j, ring.field, ring=ring).apply(derivative)


def _validate(indices, length: int, high: int) -> tuple[int, ...]:
    indices = tuple(indices)
    if len(indices) != length or any(not 1 <= j <= high for j in indices):
        raise InvalidIndicesError(indices, length, 1, high)
    return indices


def build_prefix(d: int, indices, field: Field) -> PolySequence:
    """Первые len(indices) элементов S_{d-1}(J) в R_{d-1}"""
    if d < 2:
        raise DegreeOutOfRangeError("d", d, 2)
    indices = tuple(indices)
    if len(indices) > d - 1:
        raise InvalidIndicesError(indices, d - 1, 1, d)
    indices = _validate(indices, len(indices), d)
    ring = poly_ring(d - 1, field)
    elements = [sequence_element(ring, d - 1, i, j) for i, j in enumerate(indices, start=1)]
    return PolySequence(d, indices, SequenceKind.FULL, field, elements)


def build_S(d: int, indices, field: Field) -> PolySequence:
    if d < 2:
        raise DegreeOutOfRangeError("d", d, 2)
    return build_prefix(d, _validate(indices, d - 1, d), field)


def build_S_hat(n: int, indices, field: Field) -> PolySequence:
    """
    Ŝ_n(J): первые n-1 элементов S_n(J, j_n) в R_n. Каждый элемент линеен по x_n,
    если среди индексов нет n.
    """
    if n < 2:
        raise DegreeOutOfRangeError("n", n, 2)
    indices = _validate(indices, n - 1, n + 1)
    if n in indices:
        raise UnreducedIndicesError(indices, n)
    ring = poly_ring(n, field)
    elements = [sequence_element(ring, n, i, j) for i, j in enumerate(indices, start=1)]
    return PolySequence(n, indices, SequenceKind.TRUNCATED, field, elements)


def multiplier(n: int, j: int, field: Field) -> MultiPoly:
    """g = Phi#_{n,j}(HD^{n-1}_n x_1...x_n), последний элемент S_n(J, j)"""
    if not 1 <= j <= n + 1:
        raise InvalidIndicesError((j,), 1, 1, n + 1)
    return sequence_element(poly_ring(n, field), n, n, j)


def lower_indices(indices, n: int) -> tuple[int, ...]:
    """Индексы последовательности старших коэффициентов: n + 1 заменяется на n"""
    return tuple(n if j == n + 1 else j for j in indices)


class IndexReduction(BaseModel):
    n: int
    # транспозиция (l, n) или None, если приводить нечего
    swap: tuple[int, int] | None
    indices: list[int]
    lower: list[int]

    def swap_endo(self, field: Field) -> RingEndo:
        if self.swap is None:
            return RingEndo.identity(poly_ring(self.n, field))
        return swap_endo(self.n, *self.swap, field)


def transpose_index(j: int, l: int, n: int) -> int:
    """τ = (l n) на индексах, n + 1 неподвижен"""
    if j == l:
        return n
    if j == n:
        return l
    return j


def reduce_indices(n: int, indices) -> IndexReduction:
    """
    Приводит набор (j_1..j_{n-1}[, j_n]) к виду без j_i = n среди первых n-1 индексов
    сопряжением транспозицией tau_{ln}, где l - наименьшее число из [1, n], не встречающееся
    среди j_1..j_{n-1} (оно есть: n-1 индексов не покрывают n значений).
    """
    indices = tuple(indices)
    if len(indices) not in (n - 1, n) or any(not 1 <= j <= n + 1 for j in indices):
        raise InvalidIndicesError(indices, n, 1, n + 1)
    head = indices[: n - 1]
    if n not in head:
        return IndexReduction(n=n, swap=None, indices=list(indices), lower=list(lower_indices(head, n)))
    l = next(k for k in range(1, n + 1) if k not in head)
    reduced = tuple(transpose_index(j, l, n) for j in indices)
    return IndexReduction(n=n, swap=(l, n), indices=list(reduced), lower=list(lower_indices(reduced[: n - 1], n)))
