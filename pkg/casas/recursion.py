"""
Тождества, на которых держится индуктивный шаг:

  - рекуррентное соотношение
        Phi#_{n,j}(HD^{i-1}_n x_n) = Phi#_{n,j}(x_n) Phi#_{n,j}(HD^{i-1}_{n-1} x_{n-1})
                                     + Phi#_{n,j}(HD^{i-2}_{n-1} x_{n-1}),
    из которого видно, что элементы Ŝ_n линейны по x_n;
  - сопряжение транспозицией tau_{ln}, позволяющее считать, что среди j_1..j_{n-1} нет n;
  - подъем регулярности префиксов с R_{n-1} на R_n.
"""
import logging
from itertools import product

from algebra.derivations import hasse_derivation_multi, variables_product
from algebra.endomorphisms import phi_endo, swap_endo
from algebra.fields import Field, get_field
from algebra.ideals import is_regular_sequence
from algebra.polynomials import MultiPoly, poly_ring
from casas.exceptions import DegreeOutOfRangeError, InvalidIndicesError
from casas.sequences import build_prefix, sequence_element, transpose_index
from schemas import VerificationReport, Witness

logger = logging.getLogger("casas")


def x_n_factor(n: int, j: int, field: Field) -> MultiPoly:
    """Phi#_{n,j}(x_n): x_n - x_j при j < n, -x_n при j = n, x_n при j = n + 1"""
    ring = poly_ring(n, field)
    x_n = ring.var(n)
    if j == n:
        return -x_n
    if j == n + 1:
        return x_n
    return x_n - ring.var(j)


def verify_recursion(n: int, i: int, j: int, field: Field | None = None) -> bool:
    field = field or get_field("q")
    if n < 2:
        raise DegreeOutOfRangeError("n", n, 2)
    if not 1 <= i <= n or not 1 <= j <= n + 1:
        raise InvalidIndicesError((i, j), 2, 1, n + 1)
    ring = poly_ring(n, field)
    phi = phi_endo(n, j, field, ring=ring)

    lhs = phi(hasse_derivation_multi(variables_product(ring), i - 1))
    lower_product = variables_product(ring, n - 1)
    head = phi(hasse_derivation_multi(lower_product, i - 1, nvars=n - 1))
    tail = phi(hasse_derivation_multi(lower_product, i - 2, nvars=n - 1))

    factor = phi(ring.var(n))
    if factor != x_n_factor(n, j, field):
        logger.info("Phi#_{%d,%d}(x_%d) = %s имеет неожиданный вид", n, j, n, factor)
        return False
    return lhs == factor * head + tail


def verify_swap_identity(n: int, field: Field | None = None) -> VerificationReport:
    """tau_{ln}(Phi#_{n,j}(HD^{i-1}_n x_n)) = Phi#_{n,tau(j)}(HD^{i-1}_n x_n) для всех l, i, j"""
    field = field or get_field("q")
    ring = poly_ring(n, field)
    report = VerificationReport(subject=f"swap identity, n={n}, field={field}")
    for l in range(1, n + 1):
        tau = swap_endo(n, l, n, field, ring=ring)
        broken = next(
            (
                (i, j)
                for i, j in product(range(1, n + 1), range(1, n + 2))
                if tau(sequence_element(ring, n, i, j)) != sequence_element(ring, n, i, transpose_index(j, l, n))
            ),
            None,
        )
        witness = None if broken is None else Witness(indices=list(broken), note=f"l={l}: (i, j)")
        report.add(f"tau_{l}{n}", broken is None, method="exact", witness=witness)
    return report


def _all_prefixes_regular(d: int, length: int, field: Field) -> tuple[bool, list[int] | None]:
    for indices in product(range(1, d + 1), repeat=length):
        if not is_regular_sequence(build_prefix(d, indices, field).elements).regular:
            return False, list(indices)
    return True, None


def verify_prefix_lifting(n: int, length: int, field: Field | None = None) -> VerificationReport:
    """
    Регулярность префиксов длины `length` всех последовательностей S_{n-1} в R_{n-1}
    влечет регулярность префиксов той же длины всех S_n в R_n. Проверяются обе стороны
    и сама импликация.
    """
    field = field or get_field("q")
    if not 1 <= length <= n - 1:
        raise InvalidIndicesError((length,), 1, 1, n - 1)
    report = VerificationReport(subject=f"prefix lifting, n={n}, length={length}, field={field}")

    hypothesis, hypothesis_witness = _all_prefixes_regular(n, length, field)
    conclusion, conclusion_witness = _all_prefixes_regular(n + 1, length, field)
    report.add(
        "hypothesis",
        hypothesis,
        method="hilbert-series",
        detail=f"префиксы S_{n - 1} в R_{n - 1}",
        witness=None if hypothesis else Witness(indices=hypothesis_witness, conjecture_degree=n),
    )
    report.add(
        "conclusion",
        conclusion,
        method="hilbert-series",
        detail=f"префиксы S_{n} в R_{n}",
        witness=None if conclusion else Witness(indices=conclusion_witness, conjecture_degree=n + 1),
    )
    report.add("implication", not hypothesis or conclusion, method="exact")
    return report
