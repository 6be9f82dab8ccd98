"""
Однородные отображения свободных модулей.

PolyMatrix - R_n-линейное отображение, заданное матрицей многочленов (строки - базис
образа, столбцы - базис прообраза). CoefficientExtraction - R_{n-1}-линейное отображение
lambda_{n,k}: в каждой координате берется коэффициент при x_n^k (и, для сечения Λ̃, делится
на скаляр). ComposedMap - композиция.

Степень отображения согласована со сдвигами: элемент f e_c степени deg f + shift_c переходит
в элемент степени deg f + shift_c + degree.
"""
from abc import ABC, abstractmethod

from algebra.linalg import Vector
from algebra.polynomials import MultiPoly
from algebra.types import Scalar
from koszul.exceptions import GradingError
from koszul.modules import FreeModule
from koszul.types import Element


class ModuleMap(ABC):
    source: FreeModule
    target: FreeModule
    degree: int
    # R_n-линейность позволяет проверять коммутативность на образующих e_I
    linear_over_ring: bool = True

    @abstractmethod
    def apply(self, element: Element) -> Element: ...

    def __call__(self, element: Element) -> Element:
        return self.apply(element)

    def then(self, other: "ModuleMap") -> "ModuleMap":
        """other o self"""
        return ComposedMap(self, other)

    def image_vector(self, vector: Vector, degree: int) -> Vector:
        element = self.source.element(vector, degree)
        return self.target.vector(self.apply(element), degree + self.degree)


class PolyMatrix(ModuleMap):
    def __init__(self, source: FreeModule, target: FreeModule, entries, degree: int = 0):
        entries = tuple(tuple(row) for row in entries)
        if len(entries) != target.rank or any(len(row) != source.rank for row in entries):
            raise GradingError(f"матрица {len(entries)}x? не соответствует рангам {target.rank}x{source.rank}")
        for r, row in enumerate(entries):
            for c, entry in enumerate(row):
                homogeneous, entry_degree = entry.is_homogeneous()
                expected = source.shifts[c] + degree - target.shifts[r]
                if not homogeneous or (entry_degree is not None and entry_degree != expected):
                    raise GradingError(f"элемент матрицы ({r}, {c}) = {entry} должен иметь степень {expected}")
        self.source = source
        self.target = target
        self.entries = entries
        self.degree = degree

    @classmethod
    def zero(cls, source: FreeModule, target: FreeModule, degree: int = 0) -> "PolyMatrix":
        zero = source.ring.zero()
        return cls(source, target, [[zero] * source.rank for _ in range(target.rank)], degree)

    @classmethod
    def diagonal(cls, source: FreeModule, target: FreeModule, g: MultiPoly, degree: int | None = None) -> "PolyMatrix":
        """Умножение на g покоординатно; базисы должны совпадать"""
        if source.labels != target.labels:
            raise GradingError("умножение на элемент между модулями с разными базисами")
        if degree is None:
            degree = g.degree() or 0
        zero = source.ring.zero()
        rows = [[g if r == c else zero for c in range(source.rank)] for r in range(target.rank)]
        return cls(source, target, rows, degree)

    @classmethod
    def identity(cls, source: FreeModule, target: FreeModule | None = None) -> "PolyMatrix":
        return cls.diagonal(source, target or source, source.ring.one(), degree=0)

    @property
    def shape(self) -> tuple[int, int]:
        return self.target.rank, self.source.rank

    def apply(self, element: Element) -> Element:
        zero = self.target.ring.zero()
        result = []
        for row in self.entries:
            total = zero
            for entry, coordinate in zip(row, element):
                if not entry.is_zero() and not coordinate.is_zero():
                    total = total + entry * coordinate
            result.append(total)
        return tuple(result)

    def compose(self, other: "PolyMatrix") -> "PolyMatrix":
        """self o other"""
        zero = self.source.ring.zero()
        rows = []
        for row in self.entries:
            new_row = []
            for c in range(other.source.rank):
                total = zero
                for k, entry in enumerate(row):
                    inner = other.entries[k][c]
                    if not entry.is_zero() and not inner.is_zero():
                        total = total + entry * inner
                new_row.append(total)
            rows.append(new_row)
        return PolyMatrix(other.source, self.target, rows, self.degree + other.degree)

    def is_zero(self) -> bool:
        return all(entry.is_zero() for row in self.entries for entry in row)

    def __eq__(self, other) -> bool:
        if not isinstance(other, PolyMatrix):
            return NotImplemented
        return self.entries == other.entries and self.degree == other.degree

    def __hash__(self) -> int:
        return hash(self.entries)

    def __repr__(self) -> str:
        rows = "; ".join(", ".join(str(entry) for entry in row) for row in self.entries)
        return f"PolyMatrix([{rows}], degree={self.degree})"


class CoefficientExtraction(ModuleMap):
    """
    f e_I -> (коэффициент f при x_n^power) / divisor e_I. Базисы источника и образа совпадают,
    степень задается явно: она определяется сдвигами модулей.
    """
    linear_over_ring = False

    def __init__(self, source: FreeModule, target: FreeModule, power: int, degree: int, divisor: Scalar | None = None):
        if source.labels != target.labels:
            raise GradingError("извлечение коэффициентов между модулями с разными базисами")
        for position, (low, high) in enumerate(zip(source.shifts, target.shifts)):
            if high - low - power != degree:
                raise GradingError(f"сдвиги позиции {position} несовместимы со степенью {degree} при x_n^{power}")
        self.source = source
        self.target = target
        self.power = power
        self.degree = degree
        field = source.ring.field
        self.divisor = field.one if divisor is None else divisor
        self._factor = field.inv(self.divisor)

    def apply(self, element: Element) -> Element:
        if self.power < 0:
            return self.target.zero()
        return tuple(c.coefficient_in_last_var(self.power).scale(self._factor) for c in element)

    def __repr__(self) -> str:
        return f"CoefficientExtraction(x_n^{self.power}, divisor={self.divisor}, degree={self.degree})"


class ComposedMap(ModuleMap):
    def __init__(self, first: ModuleMap, second: ModuleMap):
        if first.target.labels != second.source.labels:
            raise GradingError("композиция отображений с несогласованными модулями")
        self.first = first
        self.second = second
        self.source = first.source
        self.target = second.target
        self.degree = first.degree + second.degree
        self.linear_over_ring = first.linear_over_ring and second.linear_over_ring

    def apply(self, element: Element) -> Element:
        return self.second.apply(self.first.apply(element))

    def __repr__(self) -> str:
        return f"({self.second!r} o {self.first!r})"
