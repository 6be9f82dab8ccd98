"""
Гомологии комплексов и индуцированные отображения в одной градуированной степени.

Все вычисления - точный ранг над полем коэффициентов на однородных компонентах:
циклы Z_i = ker d_i, границы B_i = im d_{i+1}, dim H_i = dim Z_i - dim B_i.
Векторы записываются в координатах объемлющего свободного модуля.
"""
import logging

from pydantic import BaseModel, computed_field

from algebra.fields import Field
from algebra.linalg import Echelon, Vector, kernel, rank
from koszul.chain_maps import ChainMap
from koszul.complexes import ChainComplex
from koszul.exceptions import GradingError
from schemas import VerificationReport, Witness

logger = logging.getLogger("koszul")


class HomologyReport(BaseModel):
    homological_index: int
    graded_degree: int
    dimension: int
    cycles: int
    boundaries: int
    # цикл, не являющийся границей
    witness: list[str] | None = None


class InducedMapReport(BaseModel):
    homological_index: int
    graded_degree: int
    source_dimension: int
    target_dimension: int
    rank: int
    # цикл, который переходит в границу, не будучи границей сам
    kernel_witness: list[str] | None = None

    @computed_field
    @property
    def injective(self) -> bool:
        return self.rank == self.source_dimension

    @computed_field
    @property
    def surjective(self) -> bool:
        return self.rank == self.target_dimension


def _combine(vectors: list[Vector], coefficients: Vector, field: Field) -> Vector:
    result: Vector = {}
    for index, coefficient in coefficients.items():
        for key, value in vectors[index].items():
            total = field.add(result.get(key, field.zero), field.mul(coefficient, value))
            if field.is_zero(total):
                result.pop(key, None)
            else:
                result[key] = total
    return result


def _echelon(vectors: list[Vector], field: Field) -> Echelon:
    echelon = Echelon(field)
    for vector in vectors:
        echelon.add(vector)
    return echelon


def _validate_index(cx: ChainComplex, i: int) -> None:
    if not 0 <= i <= cx.length:
        raise GradingError(f"позиция {i} вне комплекса {cx.name} длины {cx.length}")


def cycles(cx: ChainComplex, i: int, degree: int) -> list[Vector]:
    """Базис Z_i в степени `degree`"""
    key = "cycles", i, degree
    if key not in cx.cache:
        basis = cx.modules[i].basis(degree)
        d = cx.differential(i)
        if d is None:
            cx.cache[key] = basis
        else:
            field = cx.ring.field
            images = [d.image_vector(vector, degree) for vector in basis]
            cx.cache[key] = [_combine(basis, relation, field) for relation in kernel(images, field)]
    return cx.cache[key]


def boundaries(cx: ChainComplex, i: int, degree: int) -> list[Vector]:
    """Образы базиса C_{i+1} под d_{i+1}; могут быть линейно зависимы"""
    key = "boundaries", i, degree
    if key not in cx.cache:
        d = cx.differential(i + 1)
        if d is None:
            cx.cache[key] = []
        else:
            cx.cache[key] = [d.image_vector(vector, degree) for vector in cx.modules[i + 1].basis(degree)]
    return cx.cache[key]


def _render(cx: ChainComplex, i: int, vector: Vector, degree: int) -> list[str]:
    ambient = cx.modules[i].ambient
    return ambient.render(ambient.element(vector, degree))


def homology_dim(cx: ChainComplex, i: int, degree: int) -> HomologyReport:
    _validate_index(cx, i)
    field = cx.ring.field
    z, b = cycles(cx, i, degree), boundaries(cx, i, degree)
    echelon = _echelon(b, field)
    dimension = len(z) - echelon.rank
    witness = None
    if dimension:
        vector = next(vector for vector in z if not echelon.contains(vector))
        witness = _render(cx, i, vector, degree)
    return HomologyReport(
        homological_index=i,
        graded_degree=degree,
        dimension=dimension,
        cycles=len(z),
        boundaries=echelon.rank,
        witness=witness,
    )


def induced_map_rank(chain_map: ChainMap, i: int, degree: int) -> InducedMapReport:
    """Ранг f_*: H_i(source)_degree -> H_i(target)_{degree + deg f}"""
    source, target = chain_map.source, chain_map.target
    _validate_index(source, i)
    field = source.ring.field
    component = chain_map.components[i]
    target_degree = degree + chain_map.degree

    z = cycles(source, i, degree)
    source_boundaries = _echelon(boundaries(source, i, degree), field)
    target_boundaries = boundaries(target, i, target_degree)
    target_cycles = cycles(target, i, target_degree)

    echelon = Echelon(field)
    for vector in target_boundaries:
        echelon.add(vector, tag={})
    base_rank = echelon.rank
    witness = None
    for index, vector in enumerate(z):
        relation = echelon.add(component.image_vector(vector, degree), tag={index: field.one})
        if relation is None or witness is not None:
            continue
        candidate = _combine(z, relation, field)
        if candidate and not source_boundaries.contains(candidate):
            witness = _render(source, i, candidate, degree)

    target_rank = rank(target_boundaries, field)
    return InducedMapReport(
        homological_index=i,
        graded_degree=degree,
        source_dimension=len(z) - source_boundaries.rank,
        target_dimension=len(target_cycles) - target_rank,
        rank=echelon.rank - base_rank,
        kernel_witness=witness,
    )


def _position_failure(left: ChainComplex, mid: ChainComplex, right: ChainComplex, incl: ChainMap, proj: ChainMap, i: int, degree: int) -> Witness | None:
    field = mid.ring.field
    left_degree = degree - incl.degree
    right_degree = degree + proj.degree
    incl_i, proj_i = incl.components[i], proj.components[i]

    def failure(note: str, vector: list[str] | None = None) -> Witness:
        return Witness(homological_index=i, graded_degree=degree, vector=vector, note=note)

    left_basis = left.modules[i].basis(left_degree)
    included = [incl_i.image_vector(vector, left_degree) for vector in left_basis]
    included_echelon = _echelon(included, field)
    if included_echelon.rank != len(left_basis):
        return failure("вложение не инъективно")

    mid_basis = mid.modules[i].basis(degree)
    projected = [proj_i.image_vector(vector, degree) for vector in mid_basis]
    projected_rank = rank(projected, field)
    if projected_rank != right.modules[i].dimension(right_degree):
        return failure("проекция не сюръективна")

    if any(proj_i.image_vector(vector, degree) for vector in included):
        return failure("композиция проекции и вложения не равна нулю")

    if len(mid_basis) - projected_rank != included_echelon.rank:
        for relation in kernel(projected, field):
            vector = _combine(mid_basis, relation, field)
            if not included_echelon.contains(vector):
                return failure("ядро проекции больше образа вложения", _render(mid, i, vector, degree))
    return None


def ses_verify(
    left: ChainComplex,
    mid: ChainComplex,
    right: ChainComplex,
    incl: ChainMap,
    proj: ChainMap,
    degree_bound: int,
    name: str = "ses",
) -> VerificationReport:
    """
    Точность 0 -> left -> mid -> right -> 0 в каждой позиции и каждой степени mid до
    `degree_bound`: вложение инъективно, проекция сюръективна, ker = im.
    """
    if incl.source is not left or incl.target is not mid or proj.source is not mid or proj.target is not right:
        raise GradingError(f"отображения последовательности {name} не согласованы с комплексами")
    report = VerificationReport(subject=f"{name}: 0 -> {left.name} -> {mid.name} -> {right.name} -> 0")
    for i in range(len(mid.modules)):
        witness = next(
            (
                found
                for degree in range(degree_bound + 1)
                if (found := _position_failure(left, mid, right, incl, proj, i, degree)) is not None
            ),
            None,
        )
        if witness is not None:
            logger.info("%s: позиция %d, степень %s: %s", name, i, witness.graded_degree, witness.note)
        report.add(f"position_{i}", witness is None, method="rank", detail=f"степени <= {degree_bound}", witness=witness)
    return report


def homology_row_failure(incl: ChainMap, proj: ChainMap, degree_bound: int, i: int = 0) -> Witness | None:
    """
    Точность H_i(A) -> H_i(B) -> H_i(C) как строки 0 -> . -> . -> . -> 0 в степенях B до
    `degree_bound`; цепная композиция proj o incl предполагается нулевой.
    """
    for degree in range(degree_bound + 1):
        left = induced_map_rank(incl, i, degree - incl.degree)
        right = induced_map_rank(proj, i, degree)
        middle = homology_dim(proj.source, i, degree).dimension
        note = None
        if not left.injective:
            note = f"{incl.name}_* не инъективно"
        elif not right.surjective:
            note = f"{proj.name}_* не сюръективно"
        elif left.rank + right.rank != middle:
            note = "ядро не совпадает с образом"
        if note is not None:
            return Witness(homological_index=i, graded_degree=degree, vector=left.kernel_witness, note=note)
    return None
