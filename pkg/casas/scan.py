import logging
from itertools import islice, product
from math import factorial
from typing import Any, Callable, Iterator

try:
    from typing import Self
except ImportError:  # Python < 3.11
    from typing_extensions import Self

from pydantic import BaseModel, computed_field
from sympy import primerange

from algebra.fields import Field, get_field, prime_field
from algebra.ideals import is_regular_sequence
from casas.conjecture import brute_force_counterexample
from casas.constants import INDEX_PREFIX, LOOKUP_SEP
from casas.exceptions import DegreeOutOfRangeError, InvalidFilterError
from casas.lookups import lookups
from casas.sequences import build_S
from executors import map_tasks
from schemas import VerificationReport, Witness

logger = logging.getLogger("casas")


class TupleVerdict(BaseModel):
    indices: list[int]
    regular: bool
    witness_degree: int | None = None
    quotient_dimension: int | None = None


class DegreeReport(BaseModel):
    d: int
    field: str
    verdicts: list[TupleVerdict]

    @computed_field
    @property
    def passed(self) -> bool:
        return all(verdict.regular for verdict in self.verdicts)

    def failures(self) -> list[TupleVerdict]:
        return [verdict for verdict in self.verdicts if not verdict.regular]


def check_tuple(task: tuple[int, str, tuple[int, ...]]) -> TupleVerdict:
    d, field_name, indices = task
    sequence = build_S(d, indices, get_field(field_name))
    verdict = is_regular_sequence(sequence.elements)
    logger.debug("S_%d%s над %s: regular=%s", d - 1, indices, field_name, verdict.regular)
    return TupleVerdict(
        indices=list(indices),
        regular=verdict.regular,
        witness_degree=verdict.witness_degree,
        quotient_dimension=verdict.quotient_dimension,
    )


def _parse_filter(key: str, value: Any, length: int) -> tuple[int, Callable]:
    name, _, lookup = key.partition(LOOKUP_SEP)
    lookup = lookup or "exact"
    if not name.startswith(INDEX_PREFIX) or not name[1:].isdigit() or lookup not in lookups:
        raise InvalidFilterError(key)
    position = int(name[1:])
    if not 1 <= position <= length:
        raise InvalidFilterError(key)
    operation = lookups[lookup]
    return position - 1, lambda indices: operation(indices[position - 1], value)


class DegreeScan:
    """
    Перебор наборов индексов J из [1, d]^{d-1} для проверки регулярности S_{d-1}(J).

    Промежуточные методы - over(), workers(), filter(), срезы - ничего не вычисляют
    и возвращают копию. Терминальные - count(), run(), first_failure(), exists_failure().

        >>> DegreeScan(4).over(get_field("f3")).filter(j1=1, j2__in=(1, 2)).count()
        8
        >>> DegreeScan(3).over(get_field("f2"))[:4].run().passed
        False

    Наборы перебираются в лексикографическом порядке, поэтому первый найденный
    нерегулярный набор - наименьший.
    """

    def __init__(self, d: int):
        if d < 3:
            raise DegreeOutOfRangeError("d", d, 3)
        self._d = d
        self._field: Field = get_field("q")
        self._workers = 1
        self._predicates: list[Callable[[tuple[int, ...]], bool]] = []
        self._offset = 0
        self._limit: int | None = None
        self._sliced = False

    def _clone(self) -> Self:
        clone = self.__class__(self._d)
        clone._field = self._field
        clone._workers = self._workers
        clone._predicates = list(self._predicates)
        clone._offset = self._offset
        clone._limit = self._limit
        clone._sliced = self._sliced
        return clone

    def over(self, field: Field) -> Self:
        clone = self._clone()
        clone._field = field
        return clone

    def workers(self, workers: int) -> Self:
        clone = self._clone()
        clone._workers = max(1, workers)
        return clone

    def filter(self, **kw: Any) -> Self:
        self._validate_sliced()
        clone = self._clone()
        for key, value in kw.items():
            _, predicate = _parse_filter(key, value, self._d - 1)
            clone._predicates.append(predicate)
        return clone

    def tuples(self) -> Iterator[tuple[int, ...]]:
        candidates = product(range(1, self._d + 1), repeat=self._d - 1)
        matching = (indices for indices in candidates if all(p(indices) for p in self._predicates))
        stop = None if self._limit is None else self._offset + self._limit
        return islice(matching, self._offset, stop)

    def count(self) -> int:
        return sum(1 for _ in self.tuples())

    def _tasks(self) -> Iterator[tuple[int, str, tuple[int, ...]]]:
        return ((self._d, self._field.name, indices) for indices in self.tuples())

    def run(self) -> DegreeReport:
        verdicts = map_tasks(check_tuple, self._tasks(), self._workers)
        verdicts.sort(key=lambda verdict: verdict.indices)
        return DegreeReport(d=self._d, field=self._field.name, verdicts=verdicts)

    def first_failure(self) -> TupleVerdict | None:
        if self._workers > 1:
            failures = self.run().failures()
            return failures[0] if failures else None
        for task in self._tasks():
            verdict = check_tuple(task)
            if not verdict.regular:
                logger.info("S_%d%s над %s не регулярна", self._d - 1, task[2], self._field)
                return verdict
        return None

    def exists_failure(self) -> bool:
        return self.first_failure() is not None

    def __getitem__(self, k: int | slice) -> Self:
        self._validate_sliced()
        if not isinstance(k, (int, slice)):
            raise TypeError(f"Индекс должен быть целым числом или объектом slice, а не {type(k).__name__}.")
        if isinstance(k, slice):
            if k.step is not None:
                raise ValueError("Использование шага среза не предусмотрено")
            start, stop = k.start or 0, k.stop
        else:
            start, stop = k, k + 1
        if start < 0 or (stop is not None and stop < 0):
            raise ValueError("Отрицательные индексы не поддерживаются")
        clone = self._clone()
        clone._offset = start
        clone._limit = None if stop is None else max(0, stop - start)
        clone._sliced = True
        return clone

    def _validate_sliced(self) -> None:
        """После взятия среза фильтровать перебор уже нельзя"""
        if self._sliced:
            raise TypeError("Невозможно изменить перебор после того, как срез был взят.")


def verify_degree(d: int, field: Field | None = None, workers: int = 1) -> VerificationReport:
    field = field or get_field("q")
    scan = DegreeScan(d).over(field).workers(workers)
    result = scan.run()
    report = VerificationReport(subject=f"degree {d} over {field}")

    failures = result.failures()
    witness = None
    if failures:
        least = failures[0]
        witness = Witness(indices=least.indices, graded_degree=least.witness_degree, conjecture_degree=d)
    report.add(
        "regularity",
        not failures,
        method="hilbert-series",
        detail=f"{len(result.verdicts)} наборов, нерегулярных: {len(failures)}",
        witness=witness,
    )

    expected = factorial(d - 1)
    wrong = [v for v in result.verdicts if v.regular and v.quotient_dimension != expected]
    report.add(
        "quotient_dimension",
        not wrong,
        method="hilbert-series",
        detail=f"dim R_{d - 1}/(S_{d - 1}) = {expected} для регулярных наборов",
        witness=Witness(indices=wrong[0].indices, note=f"dim = {wrong[0].quotient_dimension}") if wrong else None,
    )
    return report


class PrimeFailure(BaseModel):
    prime: int
    indices: list[int]
    witness_degree: int | None
    # повторная проверка набора прошла независимо от перебора
    reverified: bool
    counterexample: str | None = None


class BadPrimeReport(BaseModel):
    d: int
    prime_bound: int
    primes_scanned: list[int]
    failing: list[PrimeFailure]
    # плохие простые без контрпримера над самим F_p (он может жить лишь над расширением)
    unresolved: list[int]
    # найден контрпример над F_p, а перебор наборов прошел; признак ошибки в вычислениях
    inconsistent: list[int]

    @computed_field
    @property
    def bad_primes(self) -> list[int]:
        return [failure.prime for failure in self.failing]

    @computed_field
    @property
    def passed(self) -> bool:
        return not self.inconsistent


def scan_bad_primes(
    d: int,
    prime_bound: int,
    workers: int = 1,
    brute_force_limit: int = 10**7,
) -> BadPrimeReport:
    if d < 3:
        raise DegreeOutOfRangeError("d", d, 3)
    primes = [int(p) for p in primerange(2, prime_bound + 1)]
    failing, unresolved, inconsistent = [], [], []
    for p in primes:
        field = prime_field(p)
        failure = DegreeScan(d).over(field).workers(workers).first_failure()
        counterexample = None
        if p**d <= brute_force_limit:
            counterexample = brute_force_counterexample(d, field, limit=brute_force_limit)
        else:
            logger.info("F_%d: перебор %d многочленов пропущен", p, p**d)

        if failure is None:
            if counterexample is not None:
                logger.error("F_%d: найден контрпример %s, но все наборы регулярны", p, counterexample)
                inconsistent.append(p)
            continue

        reverified = not check_tuple((d, field.name, tuple(failure.indices))).regular
        if counterexample is None:
            logger.warning("F_%d: нерегулярный набор %s без контрпримера над F_%d", p, failure.indices, p)
            unresolved.append(p)
        failing.append(
            PrimeFailure(
                prime=p,
                indices=failure.indices,
                witness_degree=failure.witness_degree,
                reverified=reverified,
                counterexample=None if counterexample is None else str(counterexample),
            )
        )
    return BadPrimeReport(
        d=d,
        prime_bound=prime_bound,
        primes_scanned=primes,
        failing=failing,
        unresolved=unresolved,
        inconsistent=inconsistent,
    )
