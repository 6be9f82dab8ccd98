"""
Операции с идеалами поверх базисов Грёбнера: проверка регулярности последовательности
по ряду Гильберта и идеал-частное (I : g).
"""
import logging
from typing import Iterable

from pydantic import BaseModel

from algebra.constants import DEFAULT_ORDER
from algebra.exceptions import NotHomogeneousError, ZeroPolynomialError
from algebra.groebner import GroebnerBasis, buchberger
from algebra.hilbert import HilbertSeries, complete_intersection_numerator, hilbert_series, int_poly_sub
from algebra.polynomials import MultiPoly

logger = logging.getLogger("algebra")


class RegularityVerdict(BaseModel):
    regular: bool
    degrees: list[int]
    series: HilbertSeries
    expected_numerator: list[int]
    # первая градуированная степень, в которой размерности расходятся
    witness_degree: int | None = None
    quotient_dimension: int | None = None


def element_degrees(elements: Iterable[MultiPoly]) -> list[int]:
    degrees = []
    for f in elements:
        homogeneous, degree = f.is_homogeneous()
        if not homogeneous or not degree:
            raise NotHomogeneousError(f)
        degrees.append(degree)
    return degrees


def is_regular_sequence(elements: Iterable[MultiPoly], gb: GroebnerBasis | None = None) -> RegularityVerdict:
    """
    Однородные элементы положительной степени f_1..f_m образуют регулярную последовательность
    тогда и только тогда, когда числитель ряда Гильберта R/(f) равен prod (1 - t^{deg f_i}).
    """
    elements = list(elements)
    degrees = element_degrees(elements)
    gb = gb or buchberger(elements)
    series = hilbert_series(gb)
    expected = complete_intersection_numerator(degrees)
    difference = int_poly_sub(series.numerator, expected)
    witness = next((k for k, c in enumerate(difference) if c), None)
    return RegularityVerdict(
        regular=witness is None,
        degrees=degrees,
        series=series,
        expected_numerator=expected,
        witness_degree=witness,
        quotient_dimension=series.vector_space_dimension(),
    )


def colon_ideal(gb: GroebnerBasis, g: MultiPoly) -> GroebnerBasis:
    """
    (I : g) = (I ∩ (g)) / g. Пересечение находится исключением вспомогательной переменной t:
    I ∩ (g) = (t I + (1 - t) g) ∩ R.
    """
    if g.is_zero():
        raise ZeroPolynomialError("colon_ideal")
    ring = gb.ring
    extended = ring.extend()
    t = extended.var(extended.nvars)
    lifted = [t * f.embed(extended) for f in gb.generators]
    lifted.append((1 - t) * g.embed(extended))
    elimination = buchberger(lifted, order="elim", ring=extended)
    intersection = [f.restrict(ring) for f in elimination.generators if f.degree_in() <= 0]
    quotients = [f.exact_divide(g) for f in intersection]
    logger.debug("Идеал-частное: %d образующих пересечения", len(intersection))
    return buchberger(quotients, order=gb.order, ring=ring)


def ideals_equal(first: GroebnerBasis, second: GroebnerBasis) -> bool:
    if first.order != second.order:
        second = buchberger(second.generators, order=first.order, ring=second.ring)
    return first.generators == second.generators


def ideal_of(elements: Iterable[MultiPoly], order: str = DEFAULT_ORDER) -> GroebnerBasis:
    return buchberger(elements, order=order)
