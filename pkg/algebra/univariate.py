"""
Многочлены от одной переменной (плотное представление, коэффициенты от младшего к старшему):
производные Хассе-Шмидта, НОД Евклида и результант через матрицу Сильвестра.
"""
from itertools import zip_longest
from math import comb

from algebra.exceptions import RingMismatchError, ZeroPolynomialError
from algebra.fields import Field
from algebra.linalg import determinant
from algebra.polynomials import MultiPoly, PolyRing, poly_ring
from algebra.types import Scalar


class UniPoly:
    __slots__ = ("field", "coefficients")

    def __init__(self, field: Field, coefficients):
        coefficients = list(coefficients)
        while coefficients and field.is_zero(coefficients[-1]):
            coefficients.pop()
        self.field = field
        self.coefficients = tuple(coefficients)

    @classmethod
    def from_ints(cls, field: Field, coefficients) -> "UniPoly":
        return cls(field, [field.from_int(c) for c in coefficients])

    @classmethod
    def from_roots(cls, field: Field, roots) -> "UniPoly":
        result = cls(field, [field.one])
        for root in roots:
            result = result * cls(field, [field.neg(root), field.one])
        return result

    @classmethod
    def from_multi(cls, f: MultiPoly) -> "UniPoly":
        if f.ring.nvars != 1:
            raise RingMismatchError(f.ring, poly_ring(1, f.field))
        degree = max((mono[0] for mono in f.terms), default=-1)
        coefficients = [f.terms.get((k,), f.field.zero) for k in range(degree + 1)]
        return cls(f.field, coefficients)

    def to_multi(self, ring: PolyRing | None = None) -> MultiPoly:
        ring = ring or poly_ring(1, self.field)
        return MultiPoly(ring, {(k,): c for k, c in enumerate(self.coefficients)})

    @property
    def degree(self) -> int:
        """Степень; у нулевого многочлена -1"""
        return len(self.coefficients) - 1

    def is_zero(self) -> bool:
        return not self.coefficients

    def leading_coefficient(self) -> Scalar:
        if not self.coefficients:
            raise ZeroPolynomialError("leading_coefficient")
        return self.coefficients[-1]

    def is_monic(self) -> bool:
        return bool(self.coefficients) and self.field.is_one(self.coefficients[-1])

    def coefficient(self, power: int) -> Scalar:
        if 0 <= power < len(self.coefficients):
            return self.coefficients[power]
        return self.field.zero

    def _check_field(self, other: "UniPoly") -> None:
        if other.field != self.field:
            raise RingMismatchError(self.field, other.field)

    def __add__(self, other: "UniPoly") -> "UniPoly":
        self._check_field(other)
        zero, add = self.field.zero, self.field.add
        pairs = zip_longest(self.coefficients, other.coefficients, fillvalue=zero)
        return UniPoly(self.field, [add(a, b) for a, b in pairs])

    def __neg__(self) -> "UniPoly":
        return UniPoly(self.field, [self.field.neg(c) for c in self.coefficients])

    def __sub__(self, other: "UniPoly") -> "UniPoly":
        return self + (-other)

    def __mul__(self, other: "UniPoly") -> "UniPoly":
        self._check_field(other)
        if self.is_zero() or other.is_zero():
            return UniPoly(self.field, [])
        field = self.field
        result = [field.zero] * (len(self.coefficients) + len(other.coefficients) - 1)
        for i, a in enumerate(self.coefficients):
            for j, b in enumerate(other.coefficients):
                result[i + j] = field.add(result[i + j], field.mul(a, b))
        return UniPoly(field, result)

    def __pow__(self, exponent: int) -> "UniPoly":
        result = UniPoly(self.field, [self.field.one])
        for _ in range(exponent):
            result = result * self
        return result

    def scale(self, value: Scalar) -> "UniPoly":
        return UniPoly(self.field, [self.field.mul(c, value) for c in self.coefficients])

    def monic(self) -> "UniPoly":
        return self.scale(self.field.inv(self.leading_coefficient()))

    def divmod(self, divisor: "UniPoly") -> tuple["UniPoly", "UniPoly"]:
        self._check_field(divisor)
        if divisor.is_zero():
            raise ZeroPolynomialError("divmod")
        field = self.field
        remainder = list(self.coefficients)
        shift = len(remainder) - len(divisor.coefficients)
        quotient = [field.zero] * max(shift + 1, 0)
        inv = field.inv(divisor.leading_coefficient())
        for k in range(shift, -1, -1):
            coeff = field.mul(remainder[k + divisor.degree], inv)
            quotient[k] = coeff
            if field.is_zero(coeff):
                continue
            for i, c in enumerate(divisor.coefficients):
                remainder[k + i] = field.sub(remainder[k + i], field.mul(coeff, c))
        return UniPoly(field, quotient), UniPoly(field, remainder[: max(divisor.degree, 0)])

    def __call__(self, value: Scalar) -> Scalar:
        result = self.field.zero
        for coeff in reversed(self.coefficients):
            result = self.field.add(self.field.mul(result, value), coeff)
        return result

    def __eq__(self, other) -> bool:
        if not isinstance(other, UniPoly):
            return NotImplemented
        return self.field == other.field and self.coefficients == other.coefficients

    def __hash__(self) -> int:
        return hash(self.coefficients)

    def __str__(self) -> str:
        return str(self.to_multi())

    def __repr__(self) -> str:
        return f"UniPoly({self}, field={self.field})"


def hasse_derivative_uni(f: UniPoly, i: int) -> UniPoly:
    """f_i = sum C(k, i) a_k X^{k-i}; биномиальные коэффициенты считаются в Z и затем отображаются в поле"""
    field = f.field
    return UniPoly(
        field,
        [field.mul(field.from_int(comb(k, i)), a) for k, a in enumerate(f.coefficients) if k >= i],
    )


def uni_gcd(f: UniPoly, g: UniPoly) -> UniPoly:
    if f.is_zero() and g.is_zero():
        raise ZeroPolynomialError("gcd")
    while not g.is_zero():
        f, g = g, f.divmod(g)[1]
    return f.monic()


def sylvester_matrix(f: UniPoly, g: UniPoly) -> list[list[Scalar]]:
    """Строки g идут первыми: так Res(X - a, X - b) = b - a"""
    m, n = f.degree, g.degree
    size = m + n
    zero = f.field.zero
    rows = []
    for poly, count in ((g, m), (f, n)):
        high_to_low = list(reversed(poly.coefficients))
        for shift in range(count):
            row = [zero] * size
            row[shift : shift + len(high_to_low)] = high_to_low
            rows.append(row)
    return rows


def resultant(f: UniPoly, g: UniPoly) -> Scalar:
    if f.is_zero() or g.is_zero():
        raise ZeroPolynomialError("resultant")
    f._check_field(g)
    if f.degree + g.degree == 0:
        return f.field.one
    return determinant(sylvester_matrix(f, g), f.field)
