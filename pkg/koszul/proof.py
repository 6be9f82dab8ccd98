"""
Пошаговая проверка индуктивного шага n -> n + 1 в конечном диапазоне степеней.

Цель шага: g = Phi#_{n,j_n}(HD^{n-1}_n x_n) - не делитель нуля в R_n/(Ŝ_n(J)), т.е.
умножение на g инъективно на H_0(K̂^n). Это проверяется напрямую (идеал-частное и
построчно по степеням), а промежуточные утверждения рассуждения - фильтрация K̂^n_k,
сечение Λ̃, диаграммы с комплексами C^n_k и D^n_1 - проверяются каждое отдельно.
"""
import logging
try:
    from enum import StrEnum
except ImportError:  # Python < 3.11
    from enum import Enum

    class StrEnum(str, Enum):
        __str__ = str.__str__
        __format__ = str.__format__
from itertools import product
from typing import Callable

from algebra.fields import Field, get_field
from algebra.ideals import colon_ideal, ideal_of, ideals_equal, is_regular_sequence
from algebra.polynomials import MultiPoly, render
from casas.exceptions import InvalidIndicesError
from casas.recursion import verify_recursion
from casas.sequences import build_S, reduce_indices, transpose_index
from executors import map_tasks
from koszul.chain_maps import (
    ChainMap,
    c_inclusion,
    iota_chain_map,
    iota_d,
    k0_d_inclusion,
    lambda_chain_map,
    mu_chain_map,
    nu_chain_map,
    quotient_map,
    quotient_map_2,
    rho_0,
    rho_1,
    section_map,
)
from koszul.complexes import (
    ChainComplex,
    _step,
    c_complex,
    coker_iota,
    coker_iota_1,
    d_complex,
    hat_complex,
    lower_complex,
    truncated_complex,
)
from koszul.exceptions import CharacteristicObstructionError
from koszul.homology import homology_dim, homology_row_failure, induced_map_rank, ses_verify
from schemas import VerificationReport, Witness

logger = logging.getLogger("koszul")

DEFAULT_FILTRATION_DEPTH = 3


class InjectivityMethod(StrEnum):
    COLON_IDEAL = "colon-ideal"
    PER_DEGREE = "per-degree"
    BOTH = "both"


def default_degree_bound(n: int) -> int:
    return n * (n + 1) // 2 - 1


def _bound(n: int, degree_bound: int | None) -> int:
    return default_degree_bound(n) if degree_bound is None else degree_bound


def _first_degree(bound: int, probe: Callable[[int], Witness | None]) -> Witness | None:
    return next((witness for m in range(bound + 1) if (witness := probe(m)) is not None), None)


def _vanishing(cx: ChainComplex, i: int, bound: int) -> Witness | None:
    def probe(m: int) -> Witness | None:
        homology = homology_dim(cx, i, m)
        if not homology.dimension:
            return None
        return Witness(homological_index=i, graded_degree=m, vector=homology.witness, note=f"dim H_{i}({cx.name}) = {homology.dimension}")

    return _first_degree(bound, probe)


def _injectivity(chain_map: ChainMap, bound: int, surjective: bool = False) -> Witness | None:
    def probe(m: int) -> Witness | None:
        induced = induced_map_rank(chain_map, 0, m)
        if not induced.injective:
            return Witness(homological_index=0, graded_degree=m, vector=induced.kernel_witness, note=f"{chain_map.name}_* не инъективно")
        if surjective and not induced.surjective:
            return Witness(homological_index=0, graded_degree=m, note=f"{chain_map.name}_* не сюръективно")
        return None

    return _first_degree(bound, probe)


def _square(report: VerificationReport, name: str, left: ChainMap, right: ChainMap) -> None:
    """Коммутативность квадрата как равенство двух составных отображений"""
    disagreement = left.disagreement(right)
    witness = None
    if disagreement is not None:
        position, generator = disagreement
        witness = Witness(homological_index=position, vector=left.source.modules[position].render(generator))
    report.add(name, disagreement is None, method="exact", detail=f"{left.name} = {right.name}", witness=witness)


def _with_indices(report: VerificationReport, indices) -> VerificationReport:
    for check in report.checks:
        if check.witness is not None and check.witness.indices is None:
            check.witness.indices = list(indices)
    return report


def filtration_check(n: int, indices, K: int, degree_bound: int | None = None, field: Field | None = None) -> VerificationReport:
    """
    Фильтрация K̂^n_0 ⊂ K̂^n_1 ⊂ ... ⊂ K̂^n_K: точность коротких последовательностей комплексов
    и строк H_0, обращение H_1 в ноль, H_0(coker ι_1) = H_0(K^{n-1}) и стабилизация
    dim H_0(K̂^n_K)_m = dim H_0(K̂^n)_m при m <= K.
    """
    field = field or get_field("q")
    bound = _bound(n, degree_bound)
    report = VerificationReport(subject=f"filtration, n={n}, J={tuple(indices)}, K={K}, field={field}")

    iota_1, q = iota_chain_map(n, indices, 1, field), quotient_map(n, indices, field)
    report.extend(
        ses_verify(iota_1.source, iota_1.target, q.target, iota_1, q, bound, name="0 -> K̂_0 -> K̂_1 -> coker ι_1"),
        prefix="ses_1",
    )
    report.add("h0_row_1", (witness := homology_row_failure(iota_1, q, bound)) is None, method="rank", witness=witness)

    lower = lower_complex(n, indices, field)
    for k in range(2, K + 1):
        iota_k, lam = iota_chain_map(n, indices, k, field), lambda_chain_map(n, indices, k, field)
        report.extend(ses_verify(iota_k.source, iota_k.target, lower, iota_k, lam, bound, name=f"Λ_{k}"), prefix=f"ses_{k}")
        report.add(f"h0_row_{k}", (witness := homology_row_failure(iota_k, lam, bound)) is None, method="rank", witness=witness)

    for k in range(K + 1):
        witness = _vanishing(truncated_complex(n, indices, k, field), 1, bound)
        report.add(f"h1_vanishes_{k}", witness is None, method="rank", witness=witness)

    coker = coker_iota_1(n, indices, field)
    mismatch = next(
        (m for m in range(bound + 1) if homology_dim(coker, 0, m).dimension != homology_dim(lower, 0, m).dimension),
        None,
    )
    report.add(
        "coker_h0_matches_lower",
        mismatch is None,
        method="rank",
        witness=None if mismatch is None else Witness(homological_index=0, graded_degree=mismatch),
    )

    full = hat_complex(n, indices, field, length=1)
    truncated = truncated_complex(n, indices, K, field)
    unstable = next(
        (m for m in range(min(K, bound) + 1) if homology_dim(truncated, 0, m).dimension != homology_dim(full, 0, m).dimension),
        None,
    )
    report.add(
        "stabilization",
        unstable is None,
        method="rank",
        detail=f"H_0(K̂_{K}) = H_0(K̂) в степенях <= {min(K, bound)}",
        witness=None if unstable is None else Witness(homological_index=0, graded_degree=unstable),
    )
    return _with_indices(report, indices)


def multiplication_injectivity(
    n: int,
    indices,
    g: MultiPoly,
    method: InjectivityMethod = InjectivityMethod.BOTH,
    degree_bound: int | None = None,
    field: Field | None = None,
) -> VerificationReport:
    """Инъективность умножения на g на R_n/(Ŝ_n(J)) = H_0(K̂^n)"""
    field = field or get_field("q")
    bound = _bound(n, degree_bound)
    step = _step(n, indices, field)
    report = VerificationReport(subject=f"multiplication by {g}, n={n}, J={step.indices}, field={field}")

    verdict = is_regular_sequence(step.a)
    report.add(
        "hat_regular",
        verdict.regular,
        method="hilbert-series",
        witness=None if verdict.regular else Witness(graded_degree=verdict.witness_degree, conjecture_degree=n + 1),
    )

    colon_passed = per_degree_passed = None
    if method in (InjectivityMethod.COLON_IDEAL, InjectivityMethod.BOTH):
        gb = ideal_of(step.a)
        colon = colon_ideal(gb, g)
        colon_passed = ideals_equal(colon, gb)
        witness = None
        if not colon_passed:
            extra = next(f for f in colon if not gb.contains(f))
            witness = Witness(polynomial=render(extra), conjecture_degree=n + 1, note="g * f лежит в идеале, f - нет")
        report.add("colon_ideal", colon_passed, method=InjectivityMethod.COLON_IDEAL, detail="(I : g) = I", witness=witness)

    if method in (InjectivityMethod.PER_DEGREE, InjectivityMethod.BOTH):
        mu = mu_chain_map(hat_complex(n, indices, field, length=1), g)
        witness = _injectivity(mu, bound)
        if witness is not None:
            witness.conjecture_degree = n + 1
        per_degree_passed = witness is None
        report.add(
            "per_degree",
            per_degree_passed,
            method=InjectivityMethod.PER_DEGREE,
            detail=f"степени H_0 <= {bound}",
            witness=witness,
        )

    if method == InjectivityMethod.BOTH:
        report.add("method_agreement", not colon_passed or per_degree_passed, method="exact")
    return _with_indices(report, step.indices)


def h0_mult_injectivity(
    n: int,
    indices,
    j_n: int,
    method: InjectivityMethod = InjectivityMethod.BOTH,
    degree_bound: int | None = None,
    field: Field | None = None,
) -> VerificationReport:
    """
    g = Phi#_{n,j_n}(HD^{n-1}_n x_n) - не делитель нуля по модулю Ŝ_n(J). Отказ означает
    нерегулярность S_n(J, j_n), то есть нарушение гипотезы в степени n + 1.
    """
    g = _step(n, indices, field).multiplier(j_n)
    report = multiplication_injectivity(n, indices, g, method, degree_bound, field)
    report.subject = f"h0 injectivity, n={n}, J={tuple(indices)}, j_n={j_n}, field={field or get_field('q')}"
    return report


def section_check(n: int, indices, j_n: int, field: Field | None = None) -> VerificationReport:
    field = field or get_field("q")
    step = _step(n, indices, field)
    scalar = step.scalar(j_n)
    report = VerificationReport(subject=f"section, n={n}, J={step.indices}, j_n={j_n}, field={field}")
    try:
        section = section_map(n, indices, j_n, field)
    except CharacteristicObstructionError as exc:
        logger.info("n=%d, J=%s, j_n=%d: %s", n, step.indices, j_n, exc)
        report.refuse("section", method="exact", detail=str(exc), witness=Witness(indices=list(step.indices), note=f"lambda_n1(g) = {field.render(scalar, bare=True)}"))
        return report
    g = step.multiplier(j_n)
    mu = mu_chain_map(c_complex(n, indices, 0, field), g, target=c_complex(n, indices, 1, field))
    identity = mu_chain_map(mu.source, step.ring.one(), name="id")
    _square(report, "section_identity", mu.then(section), identity)
    return _with_indices(report, step.indices)


def diagram_check(n: int, indices, j_n: int, degree_bound: int | None = None, field: Field | None = None) -> VerificationReport:
    """
    Диаграммы с комплексами C^n_0, C^n_1, D^n_1: факторизации ρ_0, ρ_1 и изоморфизмы на H_0,
    квадраты с вложениями и с μ, точность строк H_0 для K̂^n_0 -> K̂^n_1 -> coker ι_1 и
    D^n_1 -> K̂^n_2 -> coker ι, обращение H_1(coker ι) в ноль, инъективность ν_* и,
    наконец, инъективность μ_*: H_0(K̂^n_1) -> H_0(K̂^n_2).
    """
    field = field or get_field("q")
    bound = _bound(n, degree_bound)
    step = _step(n, indices, field)
    g = step.multiplier(j_n)
    report = VerificationReport(subject=f"diagram, n={n}, J={step.indices}, j_n={j_n}, field={field}")

    r0, r1 = rho_0(n, indices, field), rho_1(n, indices, field)
    report.add("rho_0_iso", (witness := _injectivity(r0, bound, surjective=True)) is None, method="rank", witness=witness)
    report.add("rho_1_iso", (witness := _injectivity(r1, bound, surjective=True)) is None, method="rank", witness=witness)

    c_incl, k0_d = c_inclusion(n, indices, field), k0_d_inclusion(n, indices, field)
    iota_1, iota_2, i_d = iota_chain_map(n, indices, 1, field), iota_chain_map(n, indices, 2, field), iota_d(n, indices, field)
    _square(report, "inclusions_rho", r0.then(k0_d), c_incl.then(r1))
    _square(report, "inclusions_iota", k0_d.then(i_d), iota_1.then(iota_2))

    k0, k1, k2 = (truncated_complex(n, indices, k, field) for k in range(3))
    mu_c = mu_chain_map(c_complex(n, indices, 0, field), g, target=c_complex(n, indices, 1, field), name="μ_C")
    mu_0d = mu_chain_map(k0, g, target=d_complex(n, indices, field), name="μ_0D")
    mu_12 = mu_chain_map(k1, g, target=k2, name="μ_12")
    q, q2 = quotient_map(n, indices, field), quotient_map_2(n, indices, field)
    nu = nu_chain_map(n, indices, j_n, field, on="coker")
    _square(report, "mu_rho", mu_c.then(r1), r0.then(mu_0d))
    _square(report, "mu_iota", mu_0d.then(i_d), iota_1.then(mu_12))
    _square(report, "mu_quotient", mu_12.then(q2), q.then(nu))

    report.extend(ses_verify(i_d.source, k2, coker_iota(n, indices, field), i_d, q2, bound, name="0 -> D_1 -> K̂_2 -> coker ι"), prefix="d_row")
    report.add("h0_row_k1", (witness := homology_row_failure(iota_1, q, bound)) is None, method="rank", witness=witness)
    report.add("h0_row_d", (witness := homology_row_failure(i_d, q2, bound)) is None, method="rank", witness=witness)
    report.add("coker_h1_vanishes", (witness := _vanishing(coker_iota(n, indices, field), 1, bound)) is None, method="rank", witness=witness)

    report.add("mu_c_injective", (witness := _injectivity(mu_c, bound)) is None, method="rank", witness=witness)
    report.add("mu_0d_injective", (witness := _injectivity(mu_0d, bound)) is None, method="rank", witness=witness)

    scalar = step.scalar(j_n)
    if field.is_zero(scalar):
        report.add(
            "nu_injective",
            False,
            method="exact",
            detail="ν - умножение на lambda_n1(g) = 0",
            witness=Witness(note=f"lambda_n1(g) = 0 в {field}: ломается правый квадрат, ν_* = 0"),
        )
    else:
        lower_nu = nu_chain_map(n, indices, j_n, field)
        report.add("nu_injective", (witness := _injectivity(lower_nu, bound)) is None, method="rank", detail=f"lambda_n1(g) = {field.render(scalar, bare=True)}", witness=witness)

    report.add("mu_12_injective", (witness := _injectivity(mu_12, bound)) is None, method="rank", witness=witness)
    return _with_indices(report, step.indices)


def induction_ladder_check(
    n: int,
    indices,
    j_n: int,
    K: int,
    degree_bound: int | None = None,
    field: Field | None = None,
) -> VerificationReport:
    """Квадраты μ o ι = ι o μ, Λ_{k+1} o μ = ν o Λ_k и инъективность μ_* на H_0(K̂^n_{k-1})"""
    field = field or get_field("q")
    bound = _bound(n, degree_bound)
    step = _step(n, indices, field)
    g = step.multiplier(j_n)
    nu = nu_chain_map(n, indices, j_n, field)
    report = VerificationReport(subject=f"induction ladder, n={n}, J={step.indices}, j_n={j_n}, K={K}, field={field}")

    def mu(k: int) -> ChainMap:
        return mu_chain_map(truncated_complex(n, indices, k - 1, field), g, target=truncated_complex(n, indices, k, field), name=f"μ_{k}")

    for k in range(2, K + 1):
        lower_mu, upper_mu = mu(k), mu(k + 1)
        iota_k, iota_next = iota_chain_map(n, indices, k, field), iota_chain_map(n, indices, k + 1, field)
        lam, lam_next = lambda_chain_map(n, indices, k, field), lambda_chain_map(n, indices, k + 1, field)
        _square(report, f"iota_square_{k}", iota_k.then(upper_mu), lower_mu.then(iota_next))
        _square(report, f"lambda_square_{k}", upper_mu.then(lam_next), lam.then(nu))
        report.add(f"mu_injective_{k}", (witness := _injectivity(lower_mu, bound)) is None, method="rank", witness=witness)
    return _with_indices(report, step.indices)


def _verify_tuple(task: tuple[int, tuple[int, ...], tuple[int, ...], str, int, int]) -> VerificationReport:
    n, indices, j_values, field_name, bound, depth = task
    field = get_field(field_name)
    report = VerificationReport(subject=f"n={n}, J={indices}")
    verdict = is_regular_sequence(_step(n, indices, field).a)
    report.add(
        "hat_regular",
        verdict.regular,
        method="hilbert-series",
        witness=None if verdict.regular else Witness(indices=list(indices), graded_degree=verdict.witness_degree),
    )
    report.extend(filtration_check(n, indices, depth, bound, field), prefix="filtration")
    for j_n in j_values:
        prefix = f"j{j_n}"
        report.extend(section_check(n, indices, j_n, field), prefix=f"{prefix}.section")
        report.extend(diagram_check(n, indices, j_n, bound, field), prefix=f"{prefix}.diagram")
        report.extend(h0_mult_injectivity(n, indices, j_n, InjectivityMethod.BOTH, bound, field), prefix=f"{prefix}.h0")
        full = indices + (j_n,)
        regular = is_regular_sequence(build_S(n + 1, full, field).elements)
        report.add(
            f"{prefix}.full_regular",
            regular.regular,
            method="hilbert-series",
            witness=None if regular.regular else Witness(indices=list(full), graded_degree=regular.witness_degree, conjecture_degree=n + 1),
        )
    logger.debug("n=%d, J=%s над %s: passed=%s", n, indices, field, report.passed)
    return report


def verify_proof(
    n: int,
    indices=None,
    j_n: int | None = None,
    field: Field | None = None,
    degree_bound: int | None = None,
    workers: int = 1,
    depth: int = DEFAULT_FILTRATION_DEPTH,
) -> VerificationReport:
    """
    Проход по индуктивному шагу: рекуррентные тождества, регулярность Ŝ_n, фильтрация,
    сечение, диаграммы, инъективность на H_0 обоими методами и регулярность полной S_n.
    Наборы с j_i = n приводятся транспозицией (вместе с j_n). j_n передается либо
    последним из n индексов, либо аргументом `j_n`, но не обоими способами сразу.
    """
    if indices is not None and len(indices) == n and j_n is not None:
        raise InvalidIndicesError(indices, n - 1, 1, n + 1)
    field = field or get_field("q")
    bound = _bound(n, degree_bound)
    report = VerificationReport(subject=f"inductive step n={n} -> {n + 1}, field={field}, degree_bound={bound}")

    broken = next(
        ((i, j) for i, j in product(range(1, n + 1), range(1, n + 2)) if not verify_recursion(n, i, j, field)),
        None,
    )
    report.add("recursion", broken is None, method="exact", witness=None if broken is None else Witness(indices=list(broken), note="(i, j)"))

    if indices is None:
        allowed = [j for j in range(1, n + 2) if j != n]
        tuples = [(combo, None) for combo in product(allowed, repeat=n - 1)]
    else:
        reduction = reduce_indices(n, indices)
        if len(reduction.indices) == n:
            j_n = reduction.indices[-1]
            reduction.swap = None
        tuples = [(tuple(reduction.indices[: n - 1]), reduction.swap)]
    tasks = []
    for combo, swap in tuples:
        if j_n is None:
            j_values = tuple(range(1, n + 2))
        else:
            j_values = (j_n if swap is None else transpose_index(j_n, swap[0], n),)
        tasks.append((n, combo, j_values, field.name, bound, depth))

    for task, result in zip(tasks, map_tasks(_verify_tuple, tasks, workers)):
        report.extend(result, prefix=f"J={','.join(map(str, task[1]))}")
    return report
