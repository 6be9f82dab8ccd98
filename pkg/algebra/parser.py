"""
Разбор текстовой формы многочленов (`x1^2*x2 - 3*x3`, `(x1-2)^3`) через sympy.
"""
import re
from fractions import Fraction
from tokenize import TokenError

from sympy import Float, Poly, Symbol
from sympy.core.sympify import SympifyError
from sympy.parsing.sympy_parser import convert_xor, parse_expr, standard_transformations
from sympy.polys.polyerrors import PolynomialError

from algebra.constants import VARIABLE_PREFIX
from algebra.exceptions import FieldDivisionByZeroError, PolynomialParseError
from algebra.fields import Field
from algebra.polynomials import MultiPoly, PolyRing, poly_ring

VARIABLE_RE = re.compile(rf"\b{VARIABLE_PREFIX}(\d+)\b")
IDENTIFIER_RE = re.compile(r"[A-Za-z_][A-Za-z_0-9]*")

transformations = standard_transformations + (convert_xor,)


def infer_nvars(text: str) -> int:
    return max((int(index) for index in VARIABLE_RE.findall(text)), default=1)


def _validate_identifiers(text: str, nvars: int) -> None:
    for match in IDENTIFIER_RE.finditer(text):
        name = match.group()
        index = VARIABLE_RE.fullmatch(name)
        if index is None:
            raise PolynomialParseError(text, f"неизвестный символ `{name}`", match.start())
        if not 1 <= int(index.group(1)) <= nvars:
            raise PolynomialParseError(text, f"переменная `{name}` вне кольца из {nvars} переменных", match.start())


def parse_poly(text: str, field: Field, nvars: int | None = None, ring: PolyRing | None = None) -> MultiPoly:
    """
    Разбирает многочлен в кольце `ring` (или K[x1..xn], где n - `nvars` либо наибольший
    индекс переменной в тексте). Ошибки разбора сообщают позицию, если ее можно установить.
    """
    if ring is None:
        ring = poly_ring(nvars or infer_nvars(text), field)
    if not text.strip():
        raise PolynomialParseError(text, "пустая строка", 0)
    _validate_identifiers(text, ring.nvars)

    symbols = [Symbol(f"{VARIABLE_PREFIX}{index}") for index in range(1, ring.nvars + 1)]
    local_dict = {str(symbol): symbol for symbol in symbols}
    try:
        expr = parse_expr(text, local_dict=local_dict, transformations=transformations)
    except (SyntaxError, TokenError, SympifyError) as exc:
        position = getattr(exc, "offset", None)
        raise PolynomialParseError(text, "синтаксическая ошибка", position - 1 if position else None) from exc

    if expr.has(Float):
        raise PolynomialParseError(text, "допускаются только точные коэффициенты")
    try:
        poly = Poly(expr, *symbols, domain="QQ")
    except (PolynomialError, SympifyError, TypeError, ValueError) as exc:
        raise PolynomialParseError(text, "выражение не является многочленом") from exc

    terms = {}
    try:
        for mono, coeff in poly.terms():
            terms[tuple(int(e) for e in mono)] = field.from_fraction(Fraction(int(coeff.p), int(coeff.q)))
    except FieldDivisionByZeroError as exc:
        raise PolynomialParseError(text, f"знаменатель обращается в ноль в поле {field}") from exc
    return MultiPoly(ring, terms)
