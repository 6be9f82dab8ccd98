"""
Ряды Гильберта фактор-колец по однородным идеалам, вычисляемые по идеалу старших мономов.

Ряд хранится числителем N(t) с целыми коэффициентами, знаменатель (1 - t)^n подразумевается.
"""
from functools import lru_cache
from itertools import combinations
from math import comb

from pydantic import BaseModel

from algebra.exceptions import NotHomogeneousError
from algebra.groebner import GroebnerBasis
from algebra.polynomials import grevlex_key, mono_coprime, mono_div, mono_divides, mono_lcm
from algebra.types import Monomial


def _trim(coefficients: list[int]) -> list[int]:
    while len(coefficients) > 1 and coefficients[-1] == 0:
        coefficients.pop()
    return coefficients


def int_poly_mul(a: list[int], b: list[int]) -> list[int]:
    result = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                result[i + j] += x * y
    return _trim(result)


def int_poly_add(a: list[int], b: list[int]) -> list[int]:
    size = max(len(a), len(b))
    a, b = a + [0] * (size - len(a)), b + [0] * (size - len(b))
    return _trim([x + y for x, y in zip(a, b)])


def int_poly_sub(a: list[int], b: list[int]) -> list[int]:
    return int_poly_add(a, [-c for c in b])


def shift(a: list[int], power: int) -> list[int]:
    return _trim([0] * power + a)


def complete_intersection_numerator(degrees) -> list[int]:
    """prod (1 - t^{d_i})"""
    result = [1]
    for d in degrees:
        result = int_poly_mul(result, [1] + [0] * (d - 1) + [-1])
    return result


class HilbertSeries(BaseModel):
    numerator: list[int]
    nvars: int

    def coefficient(self, degree: int) -> int:
        """Размерность однородной компоненты степени `degree`"""
        if degree < 0:
            return 0
        n = self.nvars
        total = 0
        for k, c in enumerate(self.numerator):
            if c and k <= degree:
                total += c * (comb(degree - k + n - 1, n - 1) if n else int(k == degree))
        return total

    def reduced(self) -> tuple[list[int], int]:
        """Сокращает (1 - t): возвращает (h(t), размерность Крулля)"""
        h, dimension = list(self.numerator), self.nvars
        if not any(h):
            return [0], 0
        while dimension and sum(h) == 0 and any(h):
            # деление на (1 - t) схемой Горнера
            quotient, carry = [], 0
            for c in h[:-1]:
                carry += c
                quotient.append(carry)
            h, dimension = _trim(quotient or [0]), dimension - 1
        return h, dimension

    @property
    def dimension(self) -> int:
        return self.reduced()[1]

    def vector_space_dimension(self) -> int | None:
        """dim_K фактор-кольца, если оно конечномерно, иначе None"""
        h, dimension = self.reduced()
        if dimension:
            return None
        return sum(h)


def _minimalize(monomials) -> tuple[Monomial, ...]:
    unique = sorted(set(monomials), key=lambda m: (sum(m), m))
    minimal = []
    for mono in unique:
        if not any(mono_divides(other, mono) for other in minimal):
            minimal.append(mono)
    return tuple(sorted(minimal))


@lru_cache(maxsize=65536)
def _numerator(generators: tuple[Monomial, ...]) -> tuple[int, ...]:
    if not generators:
        return (1,)
    if any(not any(mono) for mono in generators):
        return (0,)
    if all(mono_coprime(a, b) for a, b in combinations(generators, 2)):
        return tuple(complete_intersection_numerator(sum(mono) for mono in generators))

    # опорный моном - степень самой частой переменной среди несвободных образующих
    mixed = [mono for mono in generators if sum(1 for e in mono if e) > 1]
    counts = [sum(1 for mono in mixed if mono[k]) for k in range(len(generators[0]))]
    variable = max(range(len(counts)), key=lambda k: (counts[k], -k))
    exponent = min(mono[variable] for mono in mixed if mono[variable])
    pivot = tuple(exponent if k == variable else 0 for k in range(len(counts)))

    # 0 -> S/(I:p)(-deg p) -> S/I -> S/(I + p) -> 0
    with_pivot = _minimalize(generators + (pivot,))
    colon = _minimalize(mono_div(mono_lcm(mono, pivot), pivot) for mono in generators)
    return tuple(int_poly_add(list(_numerator(with_pivot)), shift(list(_numerator(colon)), exponent)))


def monomial_ideal_numerator(monomials, nvars: int) -> list[int]:
    if not monomials:
        return [1]
    return list(_numerator(_minimalize(tuple(m) for m in monomials)))


def _require_homogeneous(gb: GroebnerBasis) -> None:
    for g in gb.generators:
        if not g.is_homogeneous()[0]:
            raise NotHomogeneousError(g)


def hilbert_series(gb: GroebnerBasis) -> HilbertSeries:
    _require_homogeneous(gb)
    numerator = monomial_ideal_numerator(gb.leading_monomials(), gb.ring.nvars)
    return HilbertSeries(numerator=numerator, nvars=gb.ring.nvars)


def krull_dimension(gb: GroebnerBasis) -> int:
    """Наибольшее множество переменных, в мономах от которых нет ни одного старшего монома"""
    _require_homogeneous(gb)
    if gb.is_unit_ideal():
        return 0
    leads = gb.leading_monomials()
    n = gb.ring.nvars
    for size in range(n, -1, -1):
        for subset in combinations(range(n), size):
            inside = set(subset)
            if not any(all(k in inside for k, e in enumerate(mono) if e) for mono in leads):
                return size
    return 0


def standard_monomials(gb: GroebnerBasis, degree: int) -> list[Monomial]:
    """Мономы степени `degree`, не делящиеся ни на один старший моном (базис фактора)"""
    leads = gb.leading_monomials()
    return [mono for mono in monomials_of_degree(gb.ring.nvars, degree) if not any(mono_divides(m, mono) for m in leads)]


def monomials_of_degree(nvars: int, degree: int) -> list[Monomial]:
    """Мономы степени `degree` по убыванию в grevlex"""
    if nvars == 0:
        return [()] if degree == 0 else []
    if degree < 0:
        return []
    result = []

    def build(prefix: tuple[int, ...], left: int, slots: int):
        if slots == 1:
            result.append(prefix + (left,))
            return
        for e in range(left, -1, -1):
            build(prefix + (e,), left - e, slots - 1)

    build((), degree, nvars)
    return sorted(result, key=grevlex_key, reverse=True)
