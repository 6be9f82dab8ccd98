"""
Цепные отображения между комплексами индуктивного шага.

При построении ChainMap проверяет, что компоненты переводят модули в модули (включая
ограничения по x_n и подмодули M, N) и коммутируют с дифференциалами. Проверка идет на
образующих над R_{n-1}; для свободных модулей без ограничений допускаются только
R_n-линейные компоненты, и тогда достаточно проверить e_I.
"""
import logging
from typing import Sequence

from algebra.fields import Field
from algebra.polynomials import MultiPoly
from koszul.complexes import (
    ChainComplex,
    _step,
    c_complex,
    coker_iota,
    coker_iota_1,
    d_complex,
    lower_complex,
    truncated_complex,
)
from koszul.exceptions import (
    CapViolationError,
    ChainMapError,
    CharacteristicObstructionError,
    GradingError,
    TruncationIndexError,
)
from koszul.matrices import CoefficientExtraction, ComposedMap, ModuleMap, PolyMatrix
from koszul.modules import FreeModule
from koszul.types import Element

logger = logging.getLogger("koszul")


class ChainMap:
    def __init__(self, source: ChainComplex, target: ChainComplex, components: Sequence[ModuleMap], name: str = "f"):
        components = list(components)
        if not len(components) == len(source.modules) == len(target.modules):
            raise GradingError(f"у отображения `{name}` {len(components)} компонент")
        degrees = {component.degree for component in components}
        if len(degrees) != 1:
            raise GradingError(f"компоненты `{name}` разных степеней {sorted(degrees)}")
        self.source = source
        self.target = target
        self.components = components
        self.degree = degrees.pop()
        self.name = name
        self._check()

    def _check(self) -> None:
        for i, (component, source, target) in enumerate(zip(self.components, self.source.modules, self.target.modules)):
            if component.source.labels != source.labels or component.target.labels != target.labels:
                raise GradingError(f"компонента {i} отображения `{self.name}` не согласована с модулями")
            if not component.linear_over_ring and isinstance(source, FreeModule) and not source.capped and source.rank:
                raise GradingError(f"компонента {i} отображения `{self.name}` не R_n-линейна")
            d_source, d_target = self.source.differential(i), self.target.differential(i)
            for generator in source.generators():
                image = component(generator)
                if not target.contains(image):
                    raise CapViolationError(str(target.render(image)), None)
                if i and d_target(image) != self.components[i - 1](d_source(generator)):
                    raise ChainMapError(self.name, i, str(source.render(generator)))
        logger.debug("Отображение %s: %s -> %s коммутирует с дифференциалами", self.name, self.source.name, self.target.name)

    def __call__(self, i: int, element: Element) -> Element:
        return self.components[i](element)

    def then(self, other: "ChainMap", name: str | None = None) -> "ChainMap":
        """other o self"""
        if other.source is not self.target:
            raise GradingError(f"композиция `{other.name} o {self.name}` не определена")
        components = [ComposedMap(first, second) for first, second in zip(self.components, other.components)]
        return ChainMap(self.source, other.target, components, name or f"{other.name} o {self.name}")

    def disagreement(self, other: "ChainMap") -> tuple[int, Element] | None:
        """Первая (позиция, образующая), на которой отображения различаются"""
        if other.source is not self.source or other.target is not self.target:
            raise GradingError(f"отображения `{self.name}` и `{other.name}` между разными комплексами")
        for i, module in enumerate(self.source.modules):
            for generator in module.generators():
                if self.components[i](generator) != other.components[i](generator):
                    return i, generator
        return None

    def agrees_with(self, other: "ChainMap") -> bool:
        return self.disagreement(other) is None

    def __repr__(self) -> str:
        return f"ChainMap({self.name}: {self.source.name} -> {self.target.name}, degree={self.degree})"


def identity_map(source: ChainComplex, target: ChainComplex, name: str = "ι") -> ChainMap:
    """Вложение комплексов с совпадающими базисами и сдвигами"""
    components = [PolyMatrix.identity(a.ambient, b.ambient) for a, b in zip(source.modules, target.modules)]
    return ChainMap(source, target, components, name)


def mu_chain_map(cx: ChainComplex, g: MultiPoly, target: ChainComplex | None = None, name: str = "μ") -> ChainMap:
    """Умножение на однородный g покоординатно: cx -> target (по умолчанию в себя)"""
    target = cx if target is None else target
    homogeneous, _ = g.is_homogeneous()
    if not homogeneous:
        raise GradingError(f"множитель {g} неоднороден")
    growth = max(g.degree_in(), 0)
    for source_module, target_module in zip(cx.modules, target.modules):
        for cap, target_cap in zip(source_module.ambient.caps, target_module.ambient.caps):
            if cap is None or cap < 0 or target_cap is None:
                continue
            if cap + growth > target_cap:
                raise CapViolationError(f"{g} * x_n^{cap}", target_cap)
    components = [PolyMatrix.diagonal(a.ambient, b.ambient, g) for a, b in zip(cx.modules, target.modules)]
    return ChainMap(cx, target, components, name)


def iota_chain_map(n: int, indices, k: int, field: Field | None = None) -> ChainMap:
    """ι_k: K̂^n_{k-1} -> K̂^n_k"""
    if k < 1:
        raise TruncationIndexError("ι", k, 1)
    return identity_map(truncated_complex(n, indices, k - 1, field), truncated_complex(n, indices, k, field), f"ι_{k}")


def lambda_chain_map(n: int, indices, k: int, field: Field | None = None) -> ChainMap:
    """Λ_{n,k}: K̂^n_k -> K^{n-1}, коэффициенты при x_n^k, x_n^{k-1}, x_n^{k-2}"""
    if k < 2:
        raise TruncationIndexError("Λ", k, 2)
    source, target = truncated_complex(n, indices, k, field), lower_complex(n, indices, field)
    components = [
        CoefficientExtraction(a.ambient, b.ambient, power=k - i, degree=-k)
        for i, (a, b) in enumerate(zip(source.modules, target.modules))
    ]
    return ChainMap(source, target, components, f"Λ_{k}")


def quotient_map(n: int, indices, field: Field | None = None) -> ChainMap:
    """q: K̂^n_1 -> coker ι_1 = (R_{n-1} <- (S_{n-1}) <- 0)"""
    step = _step(n, indices, field)
    source, target = truncated_complex(n, indices, 1, field), coker_iota_1(n, indices, field)
    row = PolyMatrix(source.modules[1].ambient, target.modules[1].ambient, [step.b], degree=-1)
    components = [
        CoefficientExtraction(source.modules[0], target.modules[0], power=1, degree=-1),
        row,
        PolyMatrix.zero(source.modules[2], target.modules[2], degree=-1),
    ]
    return ChainMap(source, target, components, "q")


def quotient_map_2(n: int, indices, field: Field | None = None) -> ChainMap:
    """q': K̂^n_2 -> coker ι = (R_{n-1} <- (S_{n-1}) <- ⋀² R_{n-1}^{⊕})"""
    step = _step(n, indices, field)
    source, target = truncated_complex(n, indices, 2, field), coker_iota(n, indices, field)
    leading = step.module(1, 0, degrees=step.beta)
    middle = ComposedMap(
        CoefficientExtraction(source.modules[1], leading, power=1, degree=-2),
        PolyMatrix(leading, target.modules[1].ambient, [step.b]),
    )
    components = [
        CoefficientExtraction(source.modules[0], target.modules[0], power=2, degree=-2),
        middle,
        CoefficientExtraction(source.modules[2], target.modules[2], power=0, degree=-2),
    ]
    return ChainMap(source, target, components, "q'")


def nu_chain_map(n: int, indices, j_n: int, field: Field | None = None, on: str = "lower") -> ChainMap:
    """
    ν: умножение на скаляр lambda_{n,1}(g). on="lower" - на K^{n-1}, on="coker" - из
    coker ι_1 в coker ι.
    """
    step = _step(n, indices, field)
    scalar = step.ring.constant(step.scalar(j_n))
    if on == "lower":
        return mu_chain_map(lower_complex(n, indices, field), scalar, name="ν")
    if on == "coker":
        return mu_chain_map(coker_iota_1(n, indices, field), scalar, target=coker_iota(n, indices, field), name="ν")
    raise GradingError(f"ν определено на `lower` и `coker`, передано `{on}`")


def section_map(n: int, indices, j_n: int, field: Field | None = None) -> ChainMap:
    """
    Λ̃: C^n_1 -> C^n_0, коэффициент при x_n, деленный на lambda_{n,1}(g). Существует, только
    если этот скаляр обратим в поле коэффициентов.
    """
    step = _step(n, indices, field)
    scalar = step.scalar(j_n)
    if step.field.is_zero(scalar):
        raise CharacteristicObstructionError(-n if j_n == n else 1, step.field)
    source, target = c_complex(n, indices, 1, field), c_complex(n, indices, 0, field)
    components = [
        CoefficientExtraction(source.modules[0], target.modules[0], power=1, degree=-1, divisor=scalar),
        CoefficientExtraction(source.modules[1], target.modules[1], power=1, degree=-1, divisor=scalar),
        PolyMatrix.zero(source.modules[2], target.modules[2], degree=-1),
    ]
    return ChainMap(source, target, components, "Λ̃")


def _rho(n: int, indices, k: int, field: Field | None) -> ChainMap:
    step = _step(n, indices, field)
    source = c_complex(n, indices, k, field)
    target = truncated_complex(n, indices, 0, field) if k == 0 else d_complex(n, indices, field)
    pairs, ambient = source.modules[1], target.modules[1].ambient
    zero = step.ring.zero()
    rows = [[zero] * pairs.rank for _ in range(ambient.rank)]
    for column, (i, j) in enumerate(pairs.labels):
        rows[j - 1][column] = step.b[i - 1]
        rows[i - 1][column] = -step.b[j - 1]
    components = [
        PolyMatrix.identity(source.modules[0], target.modules[0].ambient),
        PolyMatrix(pairs, ambient, rows),
        PolyMatrix.zero(source.modules[2], target.modules[2].ambient),
    ]
    return ChainMap(source, target, components, f"ρ_{k}")


def rho_0(n: int, indices, field: Field | None = None) -> ChainMap:
    """ρ_0: C^n_0 -> K̂^n_0, факторизация δ_0 через M"""
    return _rho(n, indices, 0, field)


def rho_1(n: int, indices, field: Field | None = None) -> ChainMap:
    """ρ_1: C^n_1 -> D^n_1, факторизация δ_1 через N"""
    return _rho(n, indices, 1, field)


def iota_d(n: int, indices, field: Field | None = None) -> ChainMap:
    """D^n_1 -> K̂^n_2"""
    return identity_map(d_complex(n, indices, field), truncated_complex(n, indices, 2, field), "ι_D")


def c_inclusion(n: int, indices, field: Field | None = None) -> ChainMap:
    """C^n_0 ⊂ C^n_1"""
    return identity_map(c_complex(n, indices, 0, field), c_complex(n, indices, 1, field), "ι_C")


def k0_d_inclusion(n: int, indices, field: Field | None = None) -> ChainMap:
    """K̂^n_0 ⊂ D^n_1"""
    return identity_map(truncated_complex(n, indices, 0, field), d_complex(n, indices, field), "ι_0D")
