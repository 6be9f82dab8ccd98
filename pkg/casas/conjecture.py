"""
Гипотеза Касаса-Альверо для явно заданного многочлена: унитарный f степени d, у которого
gcd(f, f_i) нетривиален при всех i = 1..d-1, обязан быть степенью (X - a)^d.
"""
import logging
from itertools import product

from pydantic import BaseModel, computed_field

from algebra.fields import Field, FieldKind
from algebra.univariate import UniPoly, hasse_derivative_uni, resultant, uni_gcd
from algebra.types import Scalar
from casas.exceptions import (
    DegreeOutOfRangeError,
    InfiniteFieldError,
    NotMonicError,
    SearchSpaceTooLargeError,
)

logger = logging.getLogger("casas")


class ConjectureVerdict(BaseModel):
    polynomial: str
    field: str
    degree: int
    # флаг i-1 относится к gcd(f, f_i)
    gcd_nontrivial: list[bool]
    is_pure_power: bool
    root: str | None = None

    @computed_field
    @property
    def counterexample(self) -> bool:
        return all(self.gcd_nontrivial) and not self.is_pure_power


def _require_monic(f: UniPoly) -> None:
    if f.degree < 1:
        raise DegreeOutOfRangeError("deg f", f.degree, 1)
    if not f.is_monic():
        raise NotMonicError(f)


def pure_power_root(f: UniPoly) -> Scalar | None:
    """
    Корень a, если f = (X - a)^d. При d = p^k m, p ∤ m, коэффициент при X^{d - p^k} у (X - a)^d
    равен -m a^{p^k}, а a^{p^k} = a в F_p. Поэтому кандидат единственный: a = -a_{d-p^k} / m.
    """
    field, d = f.field, f.degree
    p, power, m = field.characteristic, 1, d
    if p:
        while m % p == 0:
            m //= p
            power *= p
    candidate = field.div(field.neg(f.coefficient(d - power)), field.from_int(m))
    if UniPoly(field, [field.neg(candidate), field.one]) ** d == f:
        return candidate
    return None


def check_polynomial(f: UniPoly) -> ConjectureVerdict:
    _require_monic(f)
    field, d = f.field, f.degree
    flags = []
    for i in range(1, d):
        derivative = hasse_derivative_uni(f, i)
        # gcd(f, 0) = f нетривиален
        flags.append(derivative.is_zero() or uni_gcd(f, derivative).degree >= 1)
    root = pure_power_root(f)
    return ConjectureVerdict(
        polynomial=str(f),
        field=field.name,
        degree=d,
        gcd_nontrivial=flags,
        is_pure_power=root is not None,
        root=None if root is None else field.render(root, bare=True),
    )


def resultant_profile(f: UniPoly) -> list[Scalar]:
    """(Res(f, f_i))_{i=1..d-1}; нули в точности там, где gcd(f, f_i) нетривиален"""
    _require_monic(f)
    field = f.field
    profile = []
    for i in range(1, f.degree):
        derivative = hasse_derivative_uni(f, i)
        profile.append(field.zero if derivative.is_zero() else resultant(f, derivative))
    return profile


def monic_polynomials(d: int, field: Field):
    """Унитарные многочлены степени d над F_p в лексикографическом порядке (a_0..a_{d-1})"""
    for coefficients in product(range(field.characteristic), repeat=d):
        yield UniPoly(field, list(coefficients) + [field.one])


def brute_force_counterexample(d: int, field: Field, limit: int = 10**7) -> UniPoly | None:
    if field.kind == FieldKind.RATIONALS:
        raise InfiniteFieldError(field)
    if d < 1:
        raise DegreeOutOfRangeError("d", d, 1)
    size = field.characteristic**d
    if size > limit:
        raise SearchSpaceTooLargeError(size, limit)
    for f in monic_polynomials(d, field):
        if check_polynomial(f).counterexample:
            logger.info("Контрпример над %s: %s", field, f)
            return f
    return None
