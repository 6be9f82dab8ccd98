"""
Алгоритм Бухбергера с критериями Гебауэра-Мёллера и нормальной стратегией выбора пар.

Результат - приведенный базис: старшие коэффициенты равны единице, ни один терм элемента
не делится на старший моном другого элемента, элементы упорядочены по убыванию старших мономов.
"""
import logging
from fractions import Fraction
from math import gcd, lcm
from typing import Iterable, Iterator

from algebra.constants import DEFAULT_ORDER
from algebra.exceptions import RingMismatchError
from algebra.fields import FieldKind
from algebra.polynomials import (
    MultiPoly,
    PolyRing,
    mono_coprime,
    mono_div,
    mono_divides,
    mono_lcm,
    mono_mul,
    orders,
)
from algebra.types import Monomial

logger = logging.getLogger("algebra")


class GroebnerBasis:
    __slots__ = ("ring", "order", "generators")

    def __init__(self, ring: PolyRing, order: str, generators: Iterable[MultiPoly]):
        self.ring = ring
        self.order = order
        self.generators = tuple(generators)

    def leading_monomials(self) -> list[Monomial]:
        return [g.leading_monomial(self.order) for g in self.generators]

    def normal_form(self, f: MultiPoly) -> MultiPoly:
        return normal_form(f, self)

    def contains(self, f: MultiPoly) -> bool:
        return normal_form(f, self).is_zero()

    def is_homogeneous(self) -> bool:
        return all(g.is_homogeneous()[0] for g in self.generators)

    def is_unit_ideal(self) -> bool:
        return any(g.is_constant() for g in self.generators)

    def __iter__(self) -> Iterator[MultiPoly]:
        return iter(self.generators)

    def __len__(self) -> int:
        return len(self.generators)

    def __eq__(self, other) -> bool:
        if not isinstance(other, GroebnerBasis):
            return NotImplemented
        return self.ring == other.ring and self.order == other.order and self.generators == other.generators

    def __hash__(self) -> int:
        return hash(self.generators)

    def __repr__(self) -> str:
        return f"GroebnerBasis([{', '.join(map(str, self.generators))}], order={self.order})"


def _reduce(
    f: MultiPoly, divisors: list[MultiPoly], order: str, track: bool = False
) -> tuple[MultiPoly, list[dict[Monomial, object]] | None]:
    """Полная редукция f по списку делителей; при track=True возвращает частные"""
    field, ring = f.field, f.ring
    key = orders[order]
    leads = [(g.leading_term(order), g) for g in divisors]
    quotients = [{} for _ in divisors] if track else None
    is_zero, mul, sub, div = field.is_zero, field.mul, field.sub, field.div
    zero = field.zero
    work = dict(f.terms)
    remainder = {}
    while work:
        mono = max(work, key=key)
        coeff = work[mono]
        for index, ((lead_mono, lead_coeff), g) in enumerate(leads):
            if not mono_divides(lead_mono, mono):
                continue
            factor = div(coeff, lead_coeff)
            shift = mono_div(mono, lead_mono)
            for m, c in g.terms.items():
                target = mono_mul(m, shift)
                value = sub(work.get(target, zero), mul(factor, c))
                if is_zero(value):
                    work.pop(target, None)
                else:
                    work[target] = value
            if track:
                bucket = quotients[index]
                bucket[shift] = field.add(bucket.get(shift, zero), factor)
            break
        else:
            remainder[mono] = work.pop(mono)
    return MultiPoly(ring, remainder, _clean=True), quotients


def normal_form(f: MultiPoly, gb: GroebnerBasis) -> MultiPoly:
    if f.ring != gb.ring:
        raise RingMismatchError(gb.ring, f.ring)
    return _reduce(f, list(gb.generators), gb.order)[0]


def normal_form_with_quotients(f: MultiPoly, gb: GroebnerBasis) -> tuple[MultiPoly, list[MultiPoly]]:
    """f = sum q_i g_i + r; возвращает (r, [q_i])"""
    if f.ring != gb.ring:
        raise RingMismatchError(gb.ring, f.ring)
    remainder, quotients = _reduce(f, list(gb.generators), gb.order, track=True)
    return remainder, [MultiPoly(f.ring, q) for q in quotients]


def primitive(f: MultiPoly) -> MultiPoly:
    """Над Q - целые коэффициенты с содержимым 1; над F_p многочлен не меняется"""
    if f.field.kind != FieldKind.RATIONALS or f.is_zero():
        return f
    values = [Fraction(c) for c in f.terms.values()]
    denominator = lcm(*(v.denominator for v in values))
    content = gcd(*(int(v * denominator) for v in values))
    return f.scale(Fraction(denominator, content))


def s_polynomial(f: MultiPoly, g: MultiPoly, order: str = DEFAULT_ORDER) -> MultiPoly:
    (mf, cf), (mg, cg) = f.leading_term(order), g.leading_term(order)
    common = mono_lcm(mf, mg)
    field = f.field
    return f.mul_term(mono_div(common, mf), field.inv(cf)) - g.mul_term(mono_div(common, mg), field.inv(cg))


class _PairQueue:
    """Хранилище критических пар с обновлением по Гебауэру-Мёллеру"""

    def __init__(self, order: str):
        self.order = order
        self.basis: list[MultiPoly] = []
        self.leads: list[Monomial] = []
        self.active: list[bool] = []
        self.pairs: list[tuple[int, int, Monomial]] = []

    def update(self, h: MultiPoly) -> None:
        new = len(self.basis)
        lead = h.leading_monomial(self.order)
        candidates = [(i, mono_lcm(self.leads[i], lead)) for i, alive in enumerate(self.active) if alive]

        # критерий цепочки среди новых пар
        kept = []
        for position, (i, common) in enumerate(candidates):
            if mono_coprime(self.leads[i], lead):
                kept.append((i, common))
                continue
            others = candidates[position + 1 :] + kept
            if not any(mono_divides(other, common) for _, other in others):
                kept.append((i, common))
        # среди пар с одинаковым НОК оставляем одну
        unique: dict[Monomial, tuple[int, Monomial]] = {}
        for i, common in kept:
            unique.setdefault(common, (i, common))
        fresh = [
            (i, new, common)
            for i, common in sorted(unique.values())
            if not mono_coprime(self.leads[i], lead)
        ]

        # критерий для старых пар
        self.pairs = [
            (i, j, common)
            for i, j, common in self.pairs
            if not (
                mono_divides(lead, common)
                and mono_lcm(self.leads[i], lead) != common
                and mono_lcm(self.leads[j], lead) != common
            )
        ]
        self.pairs.extend(fresh)

        for i, alive in enumerate(self.active):
            if alive and mono_divides(lead, self.leads[i]):
                self.active[i] = False
        self.basis.append(h)
        self.leads.append(lead)
        self.active.append(True)

    def pop(self) -> tuple[int, int]:
        # нормальная стратегия: наименьшая степень НОК, при равенстве - наименьший номер пары
        best = min(range(len(self.pairs)), key=lambda k: (sum(self.pairs[k][2]), self.pairs[k][:2]))
        i, j, _ = self.pairs.pop(best)
        return i, j

    def current(self) -> list[MultiPoly]:
        return [g for g, alive in zip(self.basis, self.active) if alive]


def buchberger(
    generators: Iterable[MultiPoly], order: str = DEFAULT_ORDER, ring: PolyRing | None = None
) -> GroebnerBasis:
    generators = [g for g in generators]
    ring = ring or (generators[0].ring if generators else None)
    if ring is None:
        raise ValueError("Для пустого набора образующих необходимо указать кольцо")
    for g in generators:
        if g.ring != ring:
            raise RingMismatchError(ring, g.ring)
    generators = [primitive(g) for g in generators if not g.is_zero()]

    queue = _PairQueue(order)
    for g in generators:
        h = _reduce(g, queue.current(), order)[0]
        if not h.is_zero():
            queue.update(h.monic(order))

    reductions = 0
    while queue.pairs:
        i, j = queue.pop()
        s = s_polynomial(queue.basis[i], queue.basis[j], order)
        h = _reduce(s, queue.current(), order)[0]
        reductions += 1
        if not h.is_zero():
            queue.update(h.monic(order))
    logger.debug("Базис Грёбнера: %d редукций, %d элементов до приведения", reductions, len(queue.current()))
    return GroebnerBasis(ring, order, _interreduce(queue.current(), order))


def _interreduce(basis: list[MultiPoly], order: str) -> list[MultiPoly]:
    key = orders[order]
    minimal: list[MultiPoly] = []
    for g in sorted(basis, key=lambda p: key(p.leading_monomial(order))):
        lead = g.leading_monomial(order)
        if not any(mono_divides(h.leading_monomial(order), lead) for h in minimal):
            minimal.append(g)
    reduced = []
    for index, g in enumerate(minimal):
        others = minimal[:index] + minimal[index + 1 :]
        reduced.append(_reduce(g, others, order)[0].monic(order))
    return sorted(reduced, key=lambda p: key(p.leading_monomial(order)), reverse=True)
