"""
Разреженные многочлены от нескольких переменных над точным полем.

Многочлен - словарь "вектор показателей -> ненулевой коэффициент". Переменные
нумеруются с единицы (`x1..xn`), последняя переменная кольца играет роль x_n:
вложение R_{n-1} в R_n - это те же показатели с нулевым последним.

Мономиальные порядки задаются ключами сортировки в реестре `orders`: чем больше ключ,
тем старше моном. По умолчанию используется grevlex.
"""
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Iterator

try:
    from typing import Self
except ImportError:  # Python < 3.11
    from typing_extensions import Self

from pydantic import BaseModel, ConfigDict

from algebra.constants import DEFAULT_ORDER, VARIABLE_PREFIX
from algebra.exceptions import (
    IndexOutOfRangeError,
    InexactDivisionError,
    RingMismatchError,
    ZeroPolynomialError,
)
from algebra.fields import Field
from algebra.types import Monomial, Scalar


def grevlex_key(mono: Monomial) -> tuple:
    return sum(mono), tuple(-e for e in reversed(mono))


def lex_key(mono: Monomial) -> tuple:
    return mono


def elimination_key(mono: Monomial) -> tuple:
    # блочный порядок: сначала степень по последней переменной, затем grevlex по остальным
    return mono[-1], grevlex_key(mono[:-1])


orders: dict[str, Callable[[Monomial], tuple]] = {
    "grevlex": grevlex_key,
    "lex": lex_key,
    "elim": elimination_key,
}


def mono_mul(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x + y for x, y in zip(a, b))


def mono_divides(a: Monomial, b: Monomial) -> bool:
    return all(x <= y for x, y in zip(a, b))


def mono_div(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x - y for x, y in zip(a, b))


def mono_lcm(a: Monomial, b: Monomial) -> Monomial:
    return tuple(max(x, y) for x, y in zip(a, b))


def mono_coprime(a: Monomial, b: Monomial) -> bool:
    return all(not (x and y) for x, y in zip(a, b))


class PolyRing(BaseModel):
    model_config = ConfigDict(frozen=True)

    nvars: int
    field: Field

    def var(self, index: int) -> "MultiPoly":
        if not 1 <= index <= self.nvars:
            raise IndexOutOfRangeError("l", index, 1, self.nvars)
        mono = tuple(int(k == index - 1) for k in range(self.nvars))
        return MultiPoly(self, {mono: self.field.one}, _clean=True)

    def gens(self) -> list["MultiPoly"]:
        return [self.var(index) for index in range(1, self.nvars + 1)]

    def zero(self) -> "MultiPoly":
        return MultiPoly(self, {}, _clean=True)

    def one(self) -> "MultiPoly":
        return self.constant(1)

    def constant(self, value: Scalar) -> "MultiPoly":
        return MultiPoly(self, {(0,) * self.nvars: self.coerce(value)})

    def monomial(self, exponents: Monomial, coeff: Scalar = 1) -> "MultiPoly":
        return MultiPoly(self, {tuple(exponents): self.coerce(coeff)})

    def coerce(self, value: Scalar) -> Scalar:
        if isinstance(value, Fraction):
            return self.field.from_fraction(value)
        return self.field.from_int(value)

    def extend(self, extra: int = 1) -> "PolyRing":
        return poly_ring(self.nvars + extra, self.field)

    def lower(self) -> "PolyRing":
        return poly_ring(self.nvars - 1, self.field)

    def __str__(self) -> str:
        return f"{self.field}[{VARIABLE_PREFIX}1..{VARIABLE_PREFIX}{self.nvars}]"


@lru_cache
def poly_ring(nvars: int, field: Field) -> PolyRing:
    return PolyRing(nvars=nvars, field=field)


class MultiPoly:
    """
    Неизменяемый многочлен. Нулевые коэффициенты не хранятся, итерация по термам идет
    от старшего к младшему в порядке grevlex.
    """
    __slots__ = ("ring", "terms", "_sorted")

    def __init__(self, ring: PolyRing, terms: dict[Monomial, Scalar] | None = None, *, _clean: bool = False):
        self.ring = ring
        if _clean or not terms:
            self.terms = terms or {}
        else:
            is_zero = ring.field.is_zero
            self.terms = {mono: coeff for mono, coeff in terms.items() if not is_zero(coeff)}
        self._sorted = {}

    @property
    def field(self) -> Field:
        return self.ring.field

    def _check_ring(self, other: "MultiPoly") -> None:
        if other.ring is not self.ring and other.ring != self.ring:
            raise RingMismatchError(self.ring, other.ring)

    def _lift(self, other) -> "MultiPoly":
        if isinstance(other, MultiPoly):
            self._check_ring(other)
            return other
        return self.ring.constant(other)

    # арифметика

    def __add__(self, other) -> "MultiPoly":
        other = self._lift(other)
        add, is_zero = self.field.add, self.field.is_zero
        terms = dict(self.terms)
        for mono, coeff in other.terms.items():
            if mono in terms:
                value = add(terms[mono], coeff)
                if is_zero(value):
                    del terms[mono]
                else:
                    terms[mono] = value
            else:
                terms[mono] = coeff
        return MultiPoly(self.ring, terms, _clean=True)

    __radd__ = __add__

    def __neg__(self) -> "MultiPoly":
        neg = self.field.neg
        return MultiPoly(self.ring, {mono: neg(coeff) for mono, coeff in self.terms.items()}, _clean=True)

    def __sub__(self, other) -> "MultiPoly":
        return self + (-self._lift(other))

    def __rsub__(self, other) -> "MultiPoly":
        return self._lift(other) - self

    def __mul__(self, other) -> "MultiPoly":
        if not isinstance(other, MultiPoly):
            return self.scale(self.ring.coerce(other))
        self._check_ring(other)
        if not self.terms or not other.terms:
            return self.ring.zero()
        mul, add = self.field.mul, self.field.add
        terms: dict[Monomial, Scalar] = {}
        for a, ca in self.terms.items():
            for b, cb in other.terms.items():
                mono = tuple(x + y for x, y in zip(a, b))
                value = mul(ca, cb)
                terms[mono] = add(terms[mono], value) if mono in terms else value
        return MultiPoly(self.ring, terms)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "MultiPoly":
        result, base = self.ring.one(), self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def scale(self, value: Scalar) -> "MultiPoly":
        if self.field.is_zero(value):
            return self.ring.zero()
        mul = self.field.mul
        return MultiPoly(self.ring, {mono: mul(coeff, value) for mono, coeff in self.terms.items()}, _clean=True)

    def mul_term(self, mono: Monomial, coeff: Scalar) -> "MultiPoly":
        mul = self.field.mul
        return MultiPoly(
            self.ring,
            {mono_mul(m, mono): mul(c, coeff) for m, c in self.terms.items()},
            _clean=True,
        )

    def exact_divide(self, divisor: "MultiPoly") -> "MultiPoly":
        self._check_ring(divisor)
        if divisor.is_zero():
            raise ZeroPolynomialError("exact_divide")
        lead_mono, lead_coeff = divisor.leading_term()
        inv = self.field.inv(lead_coeff)
        quotient, remainder = self.ring.zero(), self
        while not remainder.is_zero():
            mono, coeff = remainder.leading_term()
            if not mono_divides(lead_mono, mono):
                raise InexactDivisionError(self, divisor)
            step = mono_div(mono, lead_mono), self.field.mul(coeff, inv)
            quotient = quotient + self.ring.monomial(*step)
            remainder = remainder - divisor.mul_term(*step)
        return quotient

    def monic(self, order: str = DEFAULT_ORDER) -> "MultiPoly":
        _, coeff = self.leading_term(order)
        return self.scale(self.field.inv(coeff))

    def map_coefficients(self, func: Callable[[Scalar], Scalar], ring: PolyRing | None = None) -> "MultiPoly":
        ring = ring or self.ring
        return MultiPoly(ring, {mono: func(coeff) for mono, coeff in self.terms.items()})

    # структура

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return all(not any(mono) for mono in self.terms)

    def degree(self) -> int | None:
        if not self.terms:
            return None
        return max(sum(mono) for mono in self.terms)

    def is_homogeneous(self) -> tuple[bool, int | None]:
        """Нулевой многочлен считается однородным степени None (минус бесконечность)"""
        degrees = {sum(mono) for mono in self.terms}
        if not degrees:
            return True, None
        if len(degrees) == 1:
            return True, degrees.pop()
        return False, None

    def degree_in(self, index: int | None = None) -> int:
        """Степень по переменной x_index (по умолчанию - по последней); у нуля -1"""
        position = (index or self.ring.nvars) - 1
        return max((mono[position] for mono in self.terms), default=-1)

    def coefficient_in_last_var(self, power: int) -> "MultiPoly":
        """Коэффициент при x_n^power как элемент R_{n-1}, вложенного в R_n"""
        return MultiPoly(
            self.ring,
            {mono[:-1] + (0,): coeff for mono, coeff in self.terms.items() if mono[-1] == power},
            _clean=True,
        )

    def sorted_terms(self, order: str = DEFAULT_ORDER) -> list[tuple[Monomial, Scalar]]:
        if order not in self._sorted:
            key = orders[order]
            self._sorted[order] = sorted(self.terms.items(), key=lambda item: key(item[0]), reverse=True)
        return self._sorted[order]

    def leading_term(self, order: str = DEFAULT_ORDER) -> tuple[Monomial, Scalar]:
        if not self.terms:
            raise ZeroPolynomialError("leading_term")
        if order in self._sorted:
            return self._sorted[order][0]
        key = orders[order]
        mono = max(self.terms, key=key)
        return mono, self.terms[mono]

    def leading_monomial(self, order: str = DEFAULT_ORDER) -> Monomial:
        return self.leading_term(order)[0]

    def embed(self, ring: PolyRing) -> "MultiPoly":
        """Переносит многочлен в кольцо с большим числом переменных (новые переменные - в конце)"""
        pad = (0,) * (ring.nvars - self.ring.nvars)
        return MultiPoly(ring, {mono + pad: coeff for mono, coeff in self.terms.items()}, _clean=True)

    def restrict(self, ring: PolyRing) -> "MultiPoly":
        """Обратная к embed операция: отбрасывает последние переменные, которые не должны встречаться"""
        size = ring.nvars
        if any(any(mono[size:]) for mono in self.terms):
            raise IndexOutOfRangeError("nvars", ring.nvars, self.ring.nvars, self.ring.nvars)
        return MultiPoly(ring, {mono[:size]: coeff for mono, coeff in self.terms.items()}, _clean=True)

    def __iter__(self) -> Iterator[tuple[Monomial, Scalar]]:
        return iter(self.sorted_terms())

    def __len__(self) -> int:
        return len(self.terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, MultiPoly):
            return self.ring == other.ring and self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            return self == self.ring.constant(other)
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.ring.nvars, frozenset(self.terms.items())))

    def __reduce__(self):
        return MultiPoly, (self.ring, self.terms), None

    def __str__(self) -> str:
        return render(self)

    def __repr__(self) -> str:
        return f"MultiPoly({self}, ring={self.ring})"


def leading_coeff_in_last_var(f: MultiPoly, power: int | None = None) -> MultiPoly:
    """
    lambda_{n,k}: коэффициент при x_n^k. Без `power` - lambda_n, коэффициент при старшей
    степени x_n (не гомоморфизм).
    """
    if power is None:
        power = f.degree_in()
    return f.coefficient_in_last_var(power)


def render_monomial(mono: Monomial) -> str:
    factors = []
    for index, exponent in enumerate(mono, start=1):
        if exponent == 1:
            factors.append(f"{VARIABLE_PREFIX}{index}")
        elif exponent:
            factors.append(f"{VARIABLE_PREFIX}{index}^{exponent}")
    return "*".join(factors)


def render(f: MultiPoly) -> str:
    """Текстовая форма вида `x1^2*x2 - 3*x3`, разбираемая обратно parser.parse_poly"""
    if f.is_zero():
        return "0"
    field = f.field
    chunks = []
    for mono, coeff in f:
        negative = isinstance(coeff, Fraction) and coeff < 0
        text = field.render(-coeff if negative else coeff, bare=True)
        body = render_monomial(mono)
        if body:
            text = body if text == "1" else f"{text}*{body}"
        if not chunks:
            chunks.append(f"-{text}" if negative else text)
        else:
            chunks.append(f"- {text}" if negative else f"+ {text}")
    return " ".join(chunks)
