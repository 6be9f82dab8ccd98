"""
Командная строка: каждая проверка - отдельная подкоманда.

Отчет (JSON или текст) печатается в stdout, диагностика - в stderr. Коды выхода:
0 - все проверки прошли, 1 - найден математический свидетель (он есть в отчете),
2 - ошибка параметров или разбора входа.
"""
import argparse
import json
import logging
import sys
import time
from typing import Callable, Literal

from pydantic import BaseModel, Field, PositiveInt, ValidationError, model_validator

from algebra.exceptions import (
    ElementParseError,
    IndexOutOfRangeError,
    ModulusTooLargeError,
    NotHomogeneousError,
    NotPrimeModulusError,
    PolynomialParseError,
    RingMismatchError,
    UnknownFieldError,
)
from algebra.fields import get_field
from algebra.ideals import element_degrees
from algebra.parser import parse_poly
from algebra.polynomials import poly_ring
from algebra.univariate import UniPoly
from casas.conjecture import ConjectureVerdict, check_polynomial, resultant_profile
from casas.exceptions import (
    DegreeOutOfRangeError,
    InfiniteFieldError,
    InvalidIndicesError,
    NotMonicError,
    SearchSpaceTooLargeError,
    UnreducedIndicesError,
)
from casas.scan import scan_bad_primes, verify_degree
from config import settings
from exceptions import ConfigurationError
from koszul.complexes import ChainComplex, hat_complex, koszul_complex, truncated_complex
from koszul.exceptions import CapViolationError, GradingError, TruncationIndexError
from koszul.homology import HomologyReport, homology_dim
from koszul.proof import DEFAULT_FILTRATION_DEPTH, default_degree_bound, verify_proof
from schemas import Report, VerificationReport

__version__ = "0.1.0"

logger = logging.getLogger("cli")

EXIT_OK, EXIT_WITNESS, EXIT_USAGE = 0, 1, 2

USAGE_ERRORS = (
    ConfigurationError,
    ValidationError,
    UnknownFieldError,
    ElementParseError,
    PolynomialParseError,
    NotPrimeModulusError,
    ModulusTooLargeError,
    IndexOutOfRangeError,
    NotHomogeneousError,
    RingMismatchError,
    InvalidIndicesError,
    UnreducedIndicesError,
    NotMonicError,
    DegreeOutOfRangeError,
    SearchSpaceTooLargeError,
    InfiniteFieldError,
    TruncationIndexError,
    GradingError,
    CapViolationError,
)


class RunConfig(BaseModel):
    """Параметры запуска: флаги командной строки поверх `settings`"""

    command: Literal["check-poly", "verify-degree", "scan-bad-primes", "koszul", "verify-proof"]
    field: str
    polynomial: str | None = None
    d: int | None = None
    n: int | None = None
    # None - все наборы
    indices: list[int] | None = None
    j_n: int | None = None
    k: int | None = Field(default=None, ge=0)
    polys: list[str] | None = None
    nvars: PositiveInt | None = None
    degree_bound: int | None = None
    prime_bound: int | None = None
    depth: PositiveInt = DEFAULT_FILTRATION_DEPTH
    workers: PositiveInt = 1
    output: Literal["json", "text"] = "json"
    seed: int = 0
    timing: bool = False

    @model_validator(mode="after")
    def _consistent(self) -> "RunConfig":
        if self.prime_bound is not None and self.command != "scan-bad-primes":
            raise ConfigurationError("--bound", self.prime_bound, "используется только в scan-bad-primes")
        if self.degree_bound is not None and self.degree_bound < 0:
            raise ConfigurationError("--degree-bound", self.degree_bound, "граница должна быть неотрицательной")
        if self.command == "check-poly" and not self.polynomial:
            raise ConfigurationError("polynomial", self.polynomial, "не задан многочлен")
        if self.command in ("verify-degree", "scan-bad-primes") and self.d is None:
            raise ConfigurationError("d", self.d, "не задана степень")
        if self.command == "verify-proof" and self.n is None:
            raise ConfigurationError("--n", self.n, "не задано n")
        if self.command == "koszul":
            if (self.polys is None) == (self.n is None):
                raise ConfigurationError("--polys", self.polys, "нужно ровно одно из --n и --polys")
            if self.n is not None and self.indices is None:
                raise ConfigurationError("--indices", "all", "для комплекса нужен конкретный набор индексов")
        return self

    def echo(self) -> dict:
        """Конфигурация для отчета; от числа процессов и формата вывода результат не зависит"""
        return self.model_dump(mode="json", exclude={"command", "workers", "output", "timing"}, exclude_none=True)


class PolynomialCheck(BaseModel):
    verdict: ConjectureVerdict
    # Res(f, f_i), i = 1..d-1
    resultants: list[str]
    # нули результантов совпадают с нетривиальными gcd
    consistent: bool


class HomologyTable(BaseModel):
    name: str
    ranks: list[int]
    degree_bound: int
    homology: list[HomologyReport] = Field(default_factory=list)


def cmd_check_poly(config: RunConfig) -> tuple[bool, BaseModel]:
    field = get_field(config.field)
    f = UniPoly.from_multi(parse_poly(config.polynomial, field, nvars=1))
    verdict = check_polynomial(f)
    profile = resultant_profile(f)
    vanishing = [field.is_zero(value) for value in profile]
    result = PolynomialCheck(
        verdict=verdict,
        resultants=[field.render(value, bare=True) for value in profile],
        consistent=vanishing == verdict.gcd_nontrivial,
    )
    if not result.consistent:
        logger.error("%s: результанты %s расходятся с gcd %s", f, vanishing, verdict.gcd_nontrivial)
    return result.consistent and not verdict.counterexample, result


def cmd_verify_degree(config: RunConfig) -> tuple[bool, BaseModel]:
    report = verify_degree(config.d, get_field(config.field), workers=config.workers)
    return report.passed, report


def cmd_scan_bad_primes(config: RunConfig) -> tuple[bool, BaseModel]:
    bound = settings.scan.prime_bound if config.prime_bound is None else config.prime_bound
    report = scan_bad_primes(config.d, bound, workers=config.workers, brute_force_limit=settings.scan.brute_force_limit)
    return report.passed, report


def _homology_table(cx: ChainComplex, bound: int) -> HomologyTable:
    table = HomologyTable(name=cx.name, ranks=[module.rank for module in cx.modules], degree_bound=bound)
    for i in range(cx.length + 1):
        for degree in range(bound + 1):
            table.homology.append(homology_dim(cx, i, degree))
    return table


def cmd_koszul(config: RunConfig) -> tuple[bool, BaseModel]:
    field = get_field(config.field)
    if config.polys is not None:
        if config.nvars is None:
            raise ConfigurationError("--nvars", None, "для --polys нужно число переменных")
        ring = poly_ring(config.nvars, field)
        elements = [parse_poly(text, field, ring=ring) for text in config.polys]
        cx = koszul_complex(elements, name="K(f)")
        # цоколь полного пересечения лежит в степени sum(deg f_i - 1)
        bound = sum(element_degrees(elements)) if config.degree_bound is None else config.degree_bound
    else:
        if config.k is None:
            cx = hat_complex(config.n, config.indices, field)
        else:
            cx = truncated_complex(config.n, config.indices, config.k, field)
        bound = default_degree_bound(config.n) if config.degree_bound is None else config.degree_bound
    return True, _homology_table(cx, bound)


def cmd_verify_proof(config: RunConfig) -> tuple[bool, BaseModel]:
    report = verify_proof(
        config.n,
        indices=config.indices,
        j_n=config.j_n,
        field=get_field(config.field),
        degree_bound=config.degree_bound,
        workers=config.workers,
        depth=config.depth,
    )
    return report.passed, report


HANDLERS: dict[str, Callable[[RunConfig], tuple[bool, BaseModel]]] = {
    "check-poly": cmd_check_poly,
    "verify-degree": cmd_verify_degree,
    "scan-bad-primes": cmd_scan_bad_primes,
    "koszul": cmd_koszul,
    "verify-proof": cmd_verify_proof,
}


def _indices(text: str) -> list[int] | None:
    if text == "all":
        return None
    try:
        return [int(part) for part in text.split(",") if part.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"ожидается список через запятую или `all`, получено {text!r}")


def _polys(text: str) -> list[str]:
    return [part.strip() for part in text.split(",") if part.strip()]


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--field", help="q или fP, P - простое (по умолчанию из CA_FIELD)")
    common.add_argument("--workers", type=int, help="число процессов (по умолчанию CA_WORKERS)")
    common.add_argument("--output", choices=["json", "text"])
    common.add_argument("--seed", type=int)
    common.add_argument("--timing", action="store_true", help="добавить время работы в отчет")
    common.add_argument("--log-level", help="уровень логирования в stderr")

    parser = argparse.ArgumentParser(prog="casas-alvero", description="Проверки гипотезы Касаса-Альверо")
    parser.add_argument("--version", action="version", version=__version__)
    commands = parser.add_subparsers(dest="command", required=True)

    check_poly = commands.add_parser("check-poly", parents=[common], help="проверить унитарный многочлен от x1")
    check_poly.add_argument("polynomial")

    degree = commands.add_parser("verify-degree", parents=[common], help="регулярность S_{d-1}(J) для всех J")
    degree.add_argument("d", type=int)

    primes = commands.add_parser("scan-bad-primes", parents=[common], help="плохие простые для степени d")
    primes.add_argument("--d", type=int, required=True)
    primes.add_argument("--bound", dest="prime_bound", type=int)

    koszul = commands.add_parser("koszul", parents=[common], help="размерности гомологий комплекса Кошуля")
    koszul.add_argument("--n", type=int)
    koszul.add_argument("--indices", type=_indices)
    koszul.add_argument("--k", type=int, help="усечение K̂^n_k вместо полного K̂^n")
    koszul.add_argument("--polys", type=_polys, help="однородные многочлены через запятую")
    koszul.add_argument("--nvars", type=int)
    koszul.add_argument("--degree-bound", type=int)

    proof = commands.add_parser("verify-proof", parents=[common], help="проход по индуктивному шагу n -> n + 1")
    proof.add_argument("--n", type=int, required=True)
    proof.add_argument("--indices", type=_indices, default=None, help="j_1..j_{n-1} или `all`")
    proof.add_argument("--jn", dest="j_n", type=int, help="j_n после приведения (по умолчанию все)")
    proof.add_argument("--degree-bound", type=int)
    proof.add_argument("--depth", type=int, default=DEFAULT_FILTRATION_DEPTH, help="глубина фильтрации K")
    return parser


def run_config(args: argparse.Namespace) -> RunConfig:
    values = {key: value for key, value in vars(args).items() if value is not None and key != "log_level"}
    values.setdefault("field", settings.field)
    values.setdefault("workers", settings.workers)
    values.setdefault("output", settings.output)
    values.setdefault("seed", settings.seed)
    if values["command"] in ("koszul", "verify-proof"):
        values.setdefault("degree_bound", settings.koszul.degree_bound)
    return RunConfig(**{key: value for key, value in values.items() if value is not None})


def render_text(report: Report) -> str:
    lines = [f"{report.command}: {'pass' if report.passed else 'FAIL'}"]
    result = report.result
    if isinstance(result, VerificationReport):
        lines.append(result.subject)
        for check in result.checks:
            line = f"  [{check.status}] {check.name}"
            if check.witness is not None:
                line += f"  {check.witness.model_dump_json(exclude_none=True)}"
            lines.append(line)
    else:
        for key, value in result.model_dump(mode="json").items():
            lines.append(f"  {key}: {json.dumps(value, ensure_ascii=False)}")
    if report.wall_clock is not None:
        lines.append(f"wall clock: {report.wall_clock:.3f}s")
    return "\n".join(lines)


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(
        stream=sys.stderr,
        level=(args.log_level or settings.log_level).upper(),
        format="%(asctime)s %(levelname)s %(name)s: %(message)s",
    )
    started = time.perf_counter()
    try:
        config = run_config(args)
        passed, result = HANDLERS[config.command](config)
    except USAGE_ERRORS as exc:
        print(f"{args.command}: {exc}", file=sys.stderr)
        return EXIT_USAGE

    report = Report(
        command=config.command,
        config=config.echo(),
        passed=passed,
        result=result,
        version=__version__,
        wall_clock=round(time.perf_counter() - started, 3) if config.timing else None,
    )
    if config.output == "text":
        print(render_text(report))
    else:
        print(report.model_dump_json(indent=2, by_alias=True))
    if not passed:
        logger.info("%s: есть непройденные проверки", config.command)
    return EXIT_OK if passed else EXIT_WITNESS


if __name__ == "__main__":
    sys.exit(main())
