from itertools import combinations
from math import comb

from algebra.polynomials import MultiPoly, PolyRing
from algebra.types import Monomial


def _compositions(bounds: Monomial, total: int):
    """Все (j_1..j_k) с 0 <= j_l <= bounds[l] и суммой total"""
    if not bounds:
        if total == 0:
            yield ()
        return
    head, rest = bounds[0], bounds[1:]
    capacity = sum(rest)
    for j in range(max(0, total - capacity), min(head, total) + 1):
        for tail in _compositions(rest, total - j):
            yield (j,) + tail


def hasse_derivation_multi(f: MultiPoly, i: int, nvars: int | None = None) -> MultiPoly:
    """
    HD^i_k: на мономе x^alpha дает сумму C(alpha_1, j_1)...C(alpha_k, j_k) x^{alpha - j}
    по всем j_1 + ... + j_k = i. Действует на первые `nvars` переменных (по умолчанию на все).
    При i < 0 результат нулевой.
    """
    ring, field = f.ring, f.field
    if i < 0:
        return ring.zero()
    k = nvars or ring.nvars
    terms = {}
    for mono, coeff in f.terms.items():
        head, tail = mono[:k], mono[k:]
        for js in _compositions(head, i):
            weight = 1
            for alpha, j in zip(head, js):
                weight *= comb(alpha, j)
            target = tuple(a - j for a, j in zip(head, js)) + tail
            value = field.mul(coeff, field.from_int(weight))
            terms[target] = field.add(terms[target], value) if target in terms else value
    return MultiPoly(ring, terms)


def variables_product(ring: PolyRing, k: int | None = None) -> MultiPoly:
    """x_1 x_2 ... x_k"""
    k = ring.nvars if k is None else k
    return ring.monomial(tuple(int(index < k) for index in range(ring.nvars)))


def elementary_symmetric(ring: PolyRing, k: int, nvars: int | None = None) -> MultiPoly:
    """e_k(x_1..x_n), n = `nvars` или все переменные кольца; при k > n или k < 0 - ноль"""
    n = ring.nvars if nvars is None else nvars
    if k < 0 or k > n:
        return ring.zero()
    one = ring.field.one
    terms = {}
    for subset in combinations(range(n), k):
        terms[tuple(int(index in subset) for index in range(ring.nvars))] = one
    return MultiPoly(ring, terms, _clean=True)


def count_squarefree(n: int, k: int) -> int:
    return comb(n, k) if 0 <= k <= n else 0
