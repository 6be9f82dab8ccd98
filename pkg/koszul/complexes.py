"""
Цепные комплексы градуированных модулей и комплексы индуктивного шага.

Комплекс хранит модули C_0..C_L и дифференциалы d_i: C_i -> C_{i-1}. При построении
проверяется, что d o d = 0 и что образы дифференциалов лежат в модулях-получателях
(с учетом ограничений степени по x_n и подмодулей M, N).

Для Ŝ_n(J) = (a_1..a_{n-1}) каждый элемент линеен по x_n: a_i = b_i x_n + c_i, где
b_i = lambda_{n,1}(a_i) образуют S_{n-1}(J') в R_{n-1}. Все комплексы шага живут внутри
свободных R_n-модулей с базисом e_I, I ⊆ {1..n-1}, |I| <= 2:

    K̂^n        - комплекс Кошуля a_i, без ограничений;
    K̂^n_k      - R_{n-1}[x_n]_k <- R_{n-1}[x_n]_{k-1}^{⊕} <- ⋀² R_{n-1}[x_n]_{k-2}^{⊕};
    K̂^n_0      - R_{n-1} <- M <- 0, M порожден столбцами d_{n-1,2};
    K^{n-1}    - комплекс Кошуля b_i над R_{n-1};
    coker ι_1  - R_{n-1} <- (S_{n-1}) <- 0;
    coker ι    - R_{n-1} <- (S_{n-1}) <- ⋀² R_{n-1}^{⊕} (нулевой d_2);
    C^n_k      - R_{n-1}[x_n]_k <- ⋀² R_{n-1}[x_n]_k^{⊕} <- 0, k = 0, 1;
    D^n_1      - R_{n-1}[x_n]_1 <- N <- 0.
"""
import logging
from functools import lru_cache
from itertools import combinations
from typing import Sequence

from algebra.fields import Field, get_field
from algebra.ideals import element_degrees
from algebra.polynomials import MultiPoly, PolyRing
from algebra.types import Scalar
from casas.sequences import PolySequence, build_S_hat, lower_indices, multiplier
from koszul.exceptions import CapViolationError, ComplexError, GradingError
from koszul.matrices import ModuleMap, PolyMatrix
from koszul.modules import FreeModule, GradedModule, Submodule
from koszul.types import Element, Label

logger = logging.getLogger("koszul")


class ChainComplex:
    def __init__(self, modules: Sequence[GradedModule], differentials: Sequence[ModuleMap], name: str = "complex"):
        modules, differentials = list(modules), list(differentials)
        if len(differentials) != len(modules) - 1:
            raise GradingError(f"{len(modules)} модулей и {len(differentials)} дифференциалов")
        self.modules = modules
        self.differentials = differentials
        self.name = name
        # кэш циклов и границ по (позиция, степень), заполняется в koszul.homology
        self.cache: dict = {}
        self._check()

    @property
    def length(self) -> int:
        return len(self.modules) - 1

    @property
    def ring(self) -> PolyRing:
        return self.modules[0].ring

    def differential(self, i: int) -> ModuleMap | None:
        """d_i: C_i -> C_{i-1}"""
        if not 1 <= i <= self.length:
            return None
        return self.differentials[i - 1]

    def _check(self) -> None:
        for i in range(1, self.length + 1):
            d = self.differentials[i - 1]
            source, target = self.modules[i], self.modules[i - 1]
            if d.degree != 0 or d.source.labels != source.labels or d.target.labels != target.labels:
                raise GradingError(f"d_{i} комплекса {self.name} не согласован с модулями")
            if not d.linear_over_ring and isinstance(source, FreeModule) and not source.capped and source.rank:
                raise GradingError(f"d_{i} комплекса {self.name} не R_n-линеен на свободном модуле")
            lower = self.differential(i - 1)
            for generator in source.generators():
                image = d(generator)
                if not target.contains(image):
                    if isinstance(target, FreeModule):
                        raise CapViolationError(target.render(image), None)
                    raise GradingError(f"образ {target.render(image)} не лежит в {target!r}")
                if lower is not None and any(not c.is_zero() for c in lower(image)):
                    raise ComplexError(i, str(source.render(generator)))
        logger.debug("Комплекс %s: d o d = 0 на образующих", self.name)

    def dimensions(self, degree: int) -> list[int]:
        return [module.dimension(degree) for module in self.modules]

    def __repr__(self) -> str:
        ranks = ", ".join(str(module.rank) for module in self.modules)
        return f"ChainComplex({self.name}: ranks [{ranks}])"


def exterior_labels(m: int, level: int) -> list[Label]:
    return list(combinations(range(1, m + 1), level))


def exterior_module(ring: PolyRing, degrees: Sequence[int], level: int, cap: int | None = None, offset: int = 0) -> FreeModule:
    """⋀^level свободного модуля с образующими степеней `degrees`; сдвиг e_I равен сумме степеней"""
    labels = exterior_labels(len(degrees), level)
    shifts = [sum(degrees[i - 1] for i in label) + offset for label in labels]
    caps = None if cap is None else [max(cap, -1)] * len(labels)
    return FreeModule(ring, labels, shifts, caps)


def koszul_matrix(source: FreeModule, target: FreeModule, elements: Sequence[MultiPoly]) -> PolyMatrix:
    """d(e_{i_1} ∧ ... ∧ e_{i_l}) = sum_t (-1)^{t+1} f_{i_t} e_{I без i_t}"""
    zero = source.ring.zero()
    index = {label: row for row, label in enumerate(target.labels)}
    rows = [[zero] * source.rank for _ in target.labels]
    for column, label in enumerate(source.labels):
        for t, i in enumerate(label):
            face = label[:t] + label[t + 1:]
            rows[index[face]][column] = elements[i - 1] if t % 2 == 0 else -elements[i - 1]
    return PolyMatrix(source, target, rows)


def koszul_complex(seq: PolySequence | Sequence[MultiPoly], length: int | None = None, name: str = "K") -> ChainComplex:
    """
    Комплекс Кошуля однородных f_1..f_m, обрезанный на позиции `length`:

        >>> ring = poly_ring(2, get_field("q"))
        >>> koszul_complex(ring.gens()).differential(2)
        PolyMatrix([-x2; x1], degree=0)
    """
    elements = list(seq)
    if not elements:
        raise GradingError("комплекс Кошуля пустой последовательности")
    degrees = element_degrees(elements)
    length = len(elements) if length is None else length
    if not 0 <= length <= len(elements):
        raise GradingError(f"длина {length} для последовательности из {len(elements)} элементов")
    ring = elements[0].ring
    modules = [exterior_module(ring, degrees, level) for level in range(length + 1)]
    differentials = [koszul_matrix(modules[level], modules[level - 1], elements) for level in range(1, length + 1)]
    return ChainComplex(modules, differentials, name=name)


class InductiveStep:
    """
    Данные шага n -> n + 1 для Ŝ_n(J): a_i, b_i = lambda_{n,1}(a_i), c_i = a_i - b_i x_n,
    степени alpha_i = deg a_i и beta_i = alpha_i - 1 = deg b_i.
    """

    def __init__(self, n: int, indices, field: Field):
        self.sequence = build_S_hat(n, indices, field)
        self.n = n
        self.indices = self.sequence.indices
        self.field = field
        self.ring = self.sequence.ring
        self.a = list(self.sequence.elements)
        self.b = self.sequence.leading_coefficients()
        self.c = [f.coefficient_in_last_var(0) for f in self.a]
        self.alpha = self.sequence.degrees
        self.beta = [degree - 1 for degree in self.alpha]
        self.lower_indices = lower_indices(self.indices, n)

    @property
    def rank(self) -> int:
        return len(self.a)

    def module(self, level: int, cap: int | None, degrees: Sequence[int] | None = None, offset: int = 0) -> FreeModule:
        return exterior_module(self.ring, self.alpha if degrees is None else degrees, level, cap, offset)

    def syzygies(self) -> list[Element]:
        """Столбцы d_{n-1,2}: b_i e_j - b_j e_i"""
        zero = self.ring.zero()
        result = []
        for i, j in exterior_labels(self.rank, 2):
            coordinates = [zero] * self.rank
            coordinates[j - 1] = self.b[i - 1]
            coordinates[i - 1] = -self.b[j - 1]
            result.append(tuple(coordinates))
        return result

    def multiplier(self, j_n: int) -> MultiPoly:
        return multiplier(self.n, j_n, self.field)

    def scalar(self, j_n: int) -> Scalar:
        """
        lambda_{n,1}(g): -n при j_n = n, иначе 1. Знак минус идет от g = x_1 + ... + x_{n-1} - n x_n
        при j_n = n. Обратимость скаляра от знака не зависит.
        """
        coefficient = self.multiplier(j_n).coefficient_in_last_var(1)
        return coefficient.terms.get((0,) * self.n, self.field.zero)

    def __repr__(self) -> str:
        return f"InductiveStep(n={self.n}, indices={self.indices}, field={self.field})"


@lru_cache(maxsize=256)
def inductive_step(n: int, indices: tuple[int, ...], field_name: str) -> InductiveStep:
    return InductiveStep(n, indices, get_field(field_name))


def _step(n: int, indices, field: Field | None) -> InductiveStep:
    return inductive_step(n, tuple(indices), (field or get_field("q")).name)


@lru_cache(maxsize=256)
def _hat(step: InductiveStep, length: int) -> ChainComplex:
    return koszul_complex(step.a, length=length, name=f"K̂^{step.n}")


def hat_complex(n: int, indices, field: Field | None = None, length: int | None = None) -> ChainComplex:
    step = _step(n, indices, field)
    return _hat(step, step.rank if length is None else length)


@lru_cache(maxsize=256)
def _truncated(step: InductiveStep, k: int) -> ChainComplex:
    name = f"K̂^{step.n}_{k}"
    if k == 0:
        base, ambient = step.module(0, 0), step.module(1, 0)
        left = step.module(2, -1)
        modules = [base, Submodule(ambient, step.syzygies()), left]
        differentials = [koszul_matrix(ambient, base, step.a), PolyMatrix.zero(left, ambient)]
        return ChainComplex(modules, differentials, name=name)
    modules = [step.module(level, k - level) for level in range(3)]
    differentials = [koszul_matrix(modules[level], modules[level - 1], step.a) for level in (1, 2)]
    return ChainComplex(modules, differentials, name=name)


def truncated_complex(n: int, indices, k: int, field: Field | None = None) -> ChainComplex:
    if k < 0:
        raise GradingError(f"усечение k={k} < 0")
    return _truncated(_step(n, indices, field), k)


@lru_cache(maxsize=256)
def _lower(step: InductiveStep) -> ChainComplex:
    modules = [step.module(level, 0, degrees=step.beta) for level in range(3)]
    differentials = [koszul_matrix(modules[level], modules[level - 1], step.b) for level in (1, 2)]
    return ChainComplex(modules, differentials, name=f"K^{step.n - 1}")


def lower_complex(n: int, indices, field: Field | None = None) -> ChainComplex:
    """K^{n-1}(J'): комплекс Кошуля старших коэффициентов b_i, вложенный в R_n"""
    return _lower(_step(n, indices, field))


def _ideal_complex(step: InductiveStep, left: FreeModule, name: str) -> ChainComplex:
    base = FreeModule(step.ring, [()], [0], [0])
    ideal = Submodule(base, [(b,) for b in step.b])
    return ChainComplex([base, ideal, left], [PolyMatrix.identity(base), PolyMatrix.zero(left, base)], name=name)


@lru_cache(maxsize=256)
def _coker_iota_1(step: InductiveStep) -> ChainComplex:
    return _ideal_complex(step, step.module(2, -1, degrees=step.beta), "coker ι_1")


@lru_cache(maxsize=256)
def _coker_iota(step: InductiveStep) -> ChainComplex:
    return _ideal_complex(step, step.module(2, 0, degrees=step.beta), "coker ι")


def coker_iota_1(n: int, indices, field: Field | None = None) -> ChainComplex:
    """Коядро ι_1: K̂^n_0 -> K̂^n_1, реализованное как R_{n-1} <- (S_{n-1}(J')) <- 0"""
    return _coker_iota_1(_step(n, indices, field))


def coker_iota(n: int, indices, field: Field | None = None) -> ChainComplex:
    """Коядро D^n_1 -> K̂^n_2: R_{n-1} <- (S_{n-1}(J')) <- ⋀² R_{n-1}^{⊕}"""
    return _coker_iota(_step(n, indices, field))


@lru_cache(maxsize=256)
def _c_complex(step: InductiveStep, k: int) -> ChainComplex:
    base = step.module(0, k)
    pairs = step.module(2, k, offset=-1)
    row = [step.b[i - 1] * step.c[j - 1] - step.b[j - 1] * step.c[i - 1] for i, j in pairs.labels]
    empty = FreeModule.zero_module(step.ring)
    differentials = [PolyMatrix(pairs, base, [row]), PolyMatrix.zero(empty, pairs)]
    return ChainComplex([base, pairs, empty], differentials, name=f"C^{step.n}_{k}")


def c_complex(n: int, indices, k: int, field: Field | None = None) -> ChainComplex:
    if k not in (0, 1):
        raise GradingError(f"C^n_k определен при k = 0, 1, передано k={k}")
    return _c_complex(_step(n, indices, field), k)


@lru_cache(maxsize=256)
def _d_complex(step: InductiveStep) -> ChainComplex:
    base, ambient = step.module(0, 1), step.module(1, 1)
    x_n = step.ring.var(step.n)
    syzygies = step.syzygies()
    generators = syzygies + [tuple(x_n * coordinate for coordinate in element) for element in syzygies]
    left = step.module(2, -1)
    modules = [base, Submodule(ambient, generators), left]
    differentials = [koszul_matrix(ambient, base, step.a), PolyMatrix.zero(left, ambient)]
    return ChainComplex(modules, differentials, name=f"D^{step.n}_1")


def d_complex(n: int, indices, field: Field | None = None) -> ChainComplex:
    """D^n_1: R_{n-1}[x_n]_1 <- N <- 0, N порожден столбцами d_{n-1,2} и их x_n-кратными"""
    return _d_complex(_step(n, indices, field))
