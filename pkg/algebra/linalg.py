"""
Точная линейная алгебра над полем коэффициентов.

Векторы разреженные: словарь "номер столбца -> ненулевое значение". Над F_p используется
обычное исключение по модулю p, над Q - исключение без дробей: строки хранятся целыми,
после каждого шага содержимое (НОД коэффициентов) сокращается.
"""
from fractions import Fraction
from math import gcd, lcm

from algebra.fields import Field, FieldKind
from algebra.types import Scalar

Vector = dict[int, Scalar]


def _integral(vector: Vector, tag: Vector | None) -> tuple[Vector, Vector | None]:
    """Домножает вектор (и метку) на общий знаменатель и делит на содержимое"""
    denominator = lcm(*(Fraction(v).denominator for v in vector.values()))
    numerators = {k: int(Fraction(v) * denominator) for k, v in vector.items()}
    content = gcd(*numerators.values())
    scale = Fraction(denominator, content)
    numerators = {k: v // content for k, v in numerators.items()}
    if tag is not None:
        tag = {k: Fraction(v) * scale for k, v in tag.items()}
    return numerators, tag


class Echelon:
    """
    Инкрементальная ступенчатая форма. Каждая строка может нести метку - линейную комбинацию
    исходных векторов, из которой она получена. Если добавляемый вектор оказывается
    зависимым, `add` возвращает его метку после редукции: это элемент ядра.

        >>> echelon = Echelon(get_field("q"))
        >>> echelon.add({0: 1, 1: 2}, tag={0: 1})
        >>> relation = echelon.add({0: 2, 1: 4}, tag={1: 1})  # пропорционально {0: -2, 1: 1}
    """

    def __init__(self, field: Field):
        self.field = field
        self._integer = field.kind == FieldKind.RATIONALS
        self._rows: dict[int, tuple[Vector, Vector | None]] = {}

    @property
    def rank(self) -> int:
        return len(self._rows)

    def _combine(self, a: Vector, ca: Scalar, b: Vector, cb: Scalar) -> Vector:
        """ca * a - cb * b"""
        field = self.field
        result = {k: field.mul(ca, v) for k, v in a.items()} if not field.is_one(ca) else dict(a)
        for k, v in b.items():
            value = field.sub(result.get(k, field.zero), field.mul(cb, v))
            if field.is_zero(value):
                result.pop(k, None)
            else:
                result[k] = value
        return result

    def reduce(self, vector: Vector, tag: Vector | None = None) -> tuple[Vector, Vector | None]:
        field = self.field
        vector = {k: v for k, v in vector.items() if not field.is_zero(v)}
        if self._integer and vector:
            vector, tag = _integral(vector, tag)
        while vector:
            column = min(vector)
            if column not in self._rows:
                break
            row, row_tag = self._rows[column]
            pivot, value = row[column], vector[column]
            if self._integer:
                factor = gcd(pivot, value)
                ca, cb = pivot // factor, value // factor
            else:
                ca, cb = field.one, field.div(value, pivot)
            vector = self._combine(vector, ca, row, cb)
            if tag is not None:
                tag = self._combine(tag, ca, row_tag or {}, cb)
            if self._integer and vector:
                vector, tag = _integral(vector, tag)
        return vector, tag

    def add(self, vector: Vector, tag: Vector | None = None) -> Vector | None:
        """Добавляет вектор; для зависимого вектора возвращает редуцированную метку"""
        vector, tag = self.reduce(vector, tag)
        if not vector:
            return tag if tag is not None else {}
        self._rows[min(vector)] = (vector, tag)
        return None

    def contains(self, vector: Vector) -> bool:
        return not self.reduce(vector)[0]


def rank(vectors: list[Vector], field: Field) -> int:
    echelon = Echelon(field)
    for vector in vectors:
        echelon.add(vector)
    return echelon.rank


def kernel(columns: list[Vector], field: Field) -> list[Vector]:
    """Базис ядра отображения, заданного образами базисных векторов `columns`"""
    echelon = Echelon(field)
    result = []
    for index, column in enumerate(columns):
        relation = echelon.add(column, tag={index: field.one})
        if relation is not None:
            result.append(_normalize(relation, field))
    return result


def _normalize(vector: Vector, field: Field) -> Vector:
    vector = {k: v for k, v in vector.items() if not field.is_zero(v)}
    if field.kind == FieldKind.RATIONALS:
        # целые взаимно простые координаты, первая ненулевая положительна
        integral, _ = _integral(vector, None) if vector else ({}, None)
        sign = -1 if integral and integral[min(integral)] < 0 else 1
        return {k: Fraction(sign * v) for k, v in sorted(integral.items())}
    return dict(sorted(vector.items()))


def determinant(matrix: list[list[Scalar]], field: Field) -> Scalar:
    """
    Определитель по Барейссу. Над Q строки предварительно приводятся к целым числам,
    все деления в процессе точные.
    """
    if not matrix:
        return field.one
    if field.kind == FieldKind.RATIONALS:
        rows, scale = [], Fraction(1)
        for row in matrix:
            denominator = lcm(*(Fraction(v).denominator for v in row))
            rows.append([int(Fraction(v) * denominator) for v in row])
            scale /= denominator
        return Fraction(_bareiss(rows, lambda a, b: a // b, lambda a: a)) * scale
    p = field.characteristic
    rows = [[v % p for v in row] for row in matrix]
    value = _bareiss(rows, lambda a, b: a * pow(b, -1, p) % p, lambda a: a % p)
    return field.from_int(value)


def _bareiss(rows: list[list[int]], divide, normalize) -> int:
    size = len(rows)
    sign, previous = 1, 1
    for k in range(size - 1):
        if not rows[k][k]:
            swap = next((i for i in range(k + 1, size) if rows[i][k]), None)
            if swap is None:
                return 0
            rows[k], rows[swap] = rows[swap], rows[k]
            sign = -sign
        pivot = rows[k][k]
        for i in range(k + 1, size):
            for j in range(k + 1, size):
                rows[i][j] = divide(normalize(rows[i][j] * pivot - rows[i][k] * rows[k][j]), previous)
            rows[i][k] = 0
        previous = pivot
    return sign * rows[-1][-1]
