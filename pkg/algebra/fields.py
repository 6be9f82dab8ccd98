"""
Точные поля коэффициентов: рациональные числа и простые поля F_p.

Элементы хранятся "голыми" значениями python (Fraction для Q, int из [0, p) для F_p),
а вся арифметика идет через объект поля. Так многочленам не нужно знать, над каким
полем они заданы, а элементы остаются неизменяемыми и дешевыми при передаче в процессы.

    >>> f7 = get_field("f7")
    >>> f7.inv(3)
    5
    >>> get_field("q").render(Fraction(5, 6))
    '5/6'
"""
import random
from abc import ABC, abstractmethod
try:
    from enum import StrEnum
except ImportError:  # Python < 3.11
    from enum import Enum

    class StrEnum(str, Enum):
        __str__ = str.__str__
        __format__ = str.__format__
from fractions import Fraction
from functools import lru_cache
from typing import Iterator

from pydantic import BaseModel, ConfigDict
from sympy import isprime

from algebra.constants import MAX_MODULUS, PRIME_FIELD_PREFIX, RATIONALS_NAME
from algebra.exceptions import (
    ElementParseError,
    FieldDivisionByZeroError,
    ModulusTooLargeError,
    NotPrimeModulusError,
    UnknownFieldError,
)
from algebra.types import Scalar


class FieldKind(StrEnum):
    RATIONALS = "rationals"
    PRIME = "prime-field"


class Field(BaseModel, ABC):
    model_config = ConfigDict(frozen=True)

    kind: FieldKind
    characteristic: int

    @property
    @abstractmethod
    def name(self) -> str: ...

    @property
    @abstractmethod
    def zero(self) -> Scalar: ...

    @property
    @abstractmethod
    def one(self) -> Scalar: ...

    @abstractmethod
    def from_int(self, value: int) -> Scalar: ...

    @abstractmethod
    def from_fraction(self, value: Fraction) -> Scalar: ...

    @abstractmethod
    def add(self, a: Scalar, b: Scalar) -> Scalar: ...

    @abstractmethod
    def sub(self, a: Scalar, b: Scalar) -> Scalar: ...

    @abstractmethod
    def mul(self, a: Scalar, b: Scalar) -> Scalar: ...

    @abstractmethod
    def neg(self, a: Scalar) -> Scalar: ...

    @abstractmethod
    def inv(self, a: Scalar) -> Scalar: ...

    @abstractmethod
    def render(self, a: Scalar, bare: bool = False) -> str: ...

    @abstractmethod
    def parse(self, text: str) -> Scalar: ...

    @abstractmethod
    def random_element(self, rng: random.Random, bound: int = 10) -> Scalar: ...

    def div(self, a: Scalar, b: Scalar) -> Scalar:
        return self.mul(a, self.inv(b))

    def is_zero(self, a: Scalar) -> bool:
        return a == 0

    def is_one(self, a: Scalar) -> bool:
        return a == 1

    def pow(self, a: Scalar, exponent: int) -> Scalar:
        if exponent < 0:
            return self.pow(self.inv(a), -exponent)
        result = self.one
        while exponent:
            if exponent & 1:
                result = self.mul(result, a)
            a = self.mul(a, a)
            exponent >>= 1
        return result

    def __str__(self) -> str:
        return self.name


class RationalField(Field):
    kind: FieldKind = FieldKind.RATIONALS
    characteristic: int = 0

    @property
    def name(self) -> str:
        return RATIONALS_NAME

    @property
    def zero(self) -> Fraction:
        return Fraction(0)

    @property
    def one(self) -> Fraction:
        return Fraction(1)

    def from_int(self, value: int) -> Fraction:
        return Fraction(value)

    def from_fraction(self, value: Fraction) -> Fraction:
        return Fraction(value)

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a

    def inv(self, a):
        if a == 0:
            raise FieldDivisionByZeroError(self)
        return 1 / Fraction(a)

    def render(self, a, bare: bool = False) -> str:
        a = Fraction(a)
        if a.denominator == 1:
            return str(a.numerator)
        return f"{a.numerator}/{a.denominator}"

    def parse(self, text: str) -> Fraction:
        try:
            return Fraction(text.strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise ElementParseError(text, self) from exc

    def random_element(self, rng: random.Random, bound: int = 10) -> Fraction:
        return Fraction(rng.randint(-bound, bound), rng.randint(1, bound))


class PrimeField(Field):
    kind: FieldKind = FieldKind.PRIME

    @property
    def name(self) -> str:
        return f"{PRIME_FIELD_PREFIX}{self.characteristic}"

    @property
    def modulus(self) -> int:
        return self.characteristic

    @property
    def zero(self) -> int:
        return 0

    @property
    def one(self) -> int:
        return 1

    def from_int(self, value: int) -> int:
        return value % self.characteristic

    def from_fraction(self, value: Fraction) -> int:
        value = Fraction(value)
        return self.div(self.from_int(value.numerator), self.from_int(value.denominator))

    def add(self, a, b):
        return (a + b) % self.characteristic

    def sub(self, a, b):
        return (a - b) % self.characteristic

    def mul(self, a, b):
        return (a * b) % self.characteristic

    def neg(self, a):
        return -a % self.characteristic

    def inv(self, a):
        if a % self.characteristic == 0:
            raise FieldDivisionByZeroError(self)
        return pow(a, -1, self.characteristic)

    def render(self, a, bare: bool = False) -> str:
        if bare:
            return str(a)
        return f"{a} mod {self.characteristic}"

    def parse(self, text: str) -> int:
        body, _, modulus = text.strip().partition("mod")
        if modulus and modulus.strip() != str(self.characteristic):
            raise ElementParseError(text, self)
        try:
            return self.from_fraction(Fraction(body.strip()))
        except (ValueError, FieldDivisionByZeroError) as exc:
            raise ElementParseError(text, self) from exc

    def random_element(self, rng: random.Random, bound: int = 10) -> int:
        return rng.randrange(self.characteristic)

    def elements(self) -> Iterator[int]:
        return iter(range(self.characteristic))


def prime_field(modulus: int) -> PrimeField:
    if modulus >= MAX_MODULUS:
        raise ModulusTooLargeError(modulus, MAX_MODULUS)
    if not isprime(modulus):
        raise NotPrimeModulusError(modulus)
    return PrimeField(characteristic=modulus)


@lru_cache
def get_field(name: str) -> Field:
    """
    Возвращает поле по его имени: `q` - рациональные числа, `f<p>` - F_p.
    Допускаются варианты `Q`, `F7`, `f_7`.
    """
    key = name.strip().lower().replace("_", "")
    if key == RATIONALS_NAME:
        return RationalField()
    if key.startswith(PRIME_FIELD_PREFIX) and key[1:].isdigit():
        return prime_field(int(key[1:]))
    raise UnknownFieldError(name)


def characteristic(field: Field) -> int:
    return field.characteristic
