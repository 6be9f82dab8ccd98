"""
Градуированные модули над R_n = K[x_1..x_n], заданные своими однородными компонентами.

FreeModule - свободный модуль с базисом e_I (I - упорядоченный набор индексов), сдвигами
степеней образующих и, возможно, ограничением степени по x_n в каждой координате: так
кодируются R_{n-1}[x_n]_k^{⊕m}. Submodule - R_{n-1}-подмодуль свободного модуля, заданный
образующими (например, образ d_{n-1,2}).

Однородная компонента степени m описывается координатами (позиция базиса, моном) объемлющего
свободного модуля, а элементы подмодулей - разреженными векторами в этих координатах.
"""
from functools import cached_property
from typing import TypeAlias

from algebra.hilbert import monomials_of_degree
from algebra.linalg import Echelon, Vector
from algebra.polynomials import MultiPoly, PolyRing, render
from algebra.types import Monomial
from koszul.exceptions import CapViolationError, GradingError
from koszul.types import Element, Label


class FreeModule:
    def __init__(self, ring: PolyRing, labels, shifts, caps=None):
        labels = tuple(tuple(label) for label in labels)
        shifts = tuple(shifts)
        caps = tuple(caps) if caps is not None else (None,) * len(labels)
        if len(set(labels)) != len(labels) or not len(labels) == len(shifts) == len(caps):
            raise GradingError(f"базис {labels} со сдвигами {shifts} и ограничениями {caps}")
        self.ring = ring
        self.labels = labels
        self.shifts = shifts
        self.caps = caps
        self._pieces: dict[int, tuple[list[tuple[int, Monomial]], dict[tuple[int, Monomial], int]]] = {}

    @classmethod
    def zero_module(cls, ring: PolyRing) -> "FreeModule":
        return cls(ring, [], [])

    @property
    def rank(self) -> int:
        return len(self.labels)

    @property
    def ambient(self) -> "FreeModule":
        return self

    @property
    def capped(self) -> bool:
        return any(cap is not None for cap in self.caps)

    def is_zero(self) -> bool:
        return all(cap is not None and cap < 0 for cap in self.caps)

    def with_caps(self, caps) -> "FreeModule":
        return FreeModule(self.ring, self.labels, self.shifts, caps)

    def with_shifts(self, shifts) -> "FreeModule":
        return FreeModule(self.ring, self.labels, shifts, self.caps)

    def same_basis(self, other: "FreeModule") -> bool:
        return self.ring == other.ring and self.labels == other.labels

    def _piece(self, degree: int):
        if degree not in self._pieces:
            coordinates = []
            for position, (shift, cap) in enumerate(zip(self.shifts, self.caps)):
                if cap is not None and cap < 0:
                    continue
                for mono in monomials_of_degree(self.ring.nvars, degree - shift):
                    if cap is None or mono[-1] <= cap:
                        coordinates.append((position, mono))
            self._pieces[degree] = coordinates, {key: index for index, key in enumerate(coordinates)}
        return self._pieces[degree]

    def graded_piece(self, degree: int) -> list[tuple[Label, Monomial]]:
        """Базис однородной компоненты степени `degree`: пары (e_I, моном)"""
        return [(self.labels[position], mono) for position, mono in self._piece(degree)[0]]

    def dimension(self, degree: int) -> int:
        return len(self._piece(degree)[0])

    def spanning(self, degree: int) -> list[Vector]:
        one = self.ring.field.one
        return [{index: one} for index in range(self.dimension(degree))]

    basis = spanning

    def zero(self) -> Element:
        return (self.ring.zero(),) * self.rank

    def unit(self, position: int, poly: MultiPoly | None = None) -> Element:
        coordinates = list(self.zero())
        coordinates[position] = self.ring.one() if poly is None else poly
        return tuple(coordinates)

    def generators(self) -> list[Element]:
        """
        Образующие над R_{n-1}: x_n^a e_I, a <= cap, для ограниченных координат и e_I для
        свободных (над R_n)
        """
        x_n = self.ring.var(self.ring.nvars)
        result = []
        for position, cap in enumerate(self.caps):
            powers = [0] if cap is None else range(cap + 1)
            result.extend(self.unit(position, x_n**a) for a in powers)
        return result

    def contains(self, element: Element) -> bool:
        return all(
            cap is None or coordinate.degree_in() <= cap
            for coordinate, cap in zip(element, self.caps)
        )

    def element_degree(self, element: Element) -> int | None:
        degree = None
        for coordinate, shift in zip(element, self.shifts):
            homogeneous, poly_degree = coordinate.is_homogeneous()
            if not homogeneous:
                raise GradingError(f"неоднородная координата {coordinate}")
            if poly_degree is None:
                continue
            if degree is not None and degree != poly_degree + shift:
                raise GradingError(f"координаты элемента {self.render(element)} разных степеней")
            degree = poly_degree + shift
        return degree

    def vector(self, element: Element, degree: int) -> Vector:
        index = self._piece(degree)[1]
        result = {}
        for position, coordinate in enumerate(element):
            for mono, coeff in coordinate.terms.items():
                key = position, mono
                if key not in index:
                    cap = self.caps[position]
                    if cap is not None and mono[-1] > cap:
                        raise CapViolationError(self.render(element), cap)
                    raise GradingError(f"элемент {self.render(element)} не лежит в степени {degree}")
                result[index[key]] = coeff
        return result

    def element(self, vector: Vector, degree: int) -> Element:
        coordinates = self._piece(degree)[0]
        terms: list[dict] = [{} for _ in range(self.rank)]
        for index, coeff in vector.items():
            position, mono = coordinates[index]
            terms[position][mono] = coeff
        return tuple(MultiPoly(self.ring, part) for part in terms)

    def render(self, element: Element) -> list[str]:
        return [render(coordinate) for coordinate in element]

    def __eq__(self, other) -> bool:
        if not isinstance(other, FreeModule):
            return NotImplemented
        return (self.ring, self.labels, self.shifts, self.caps) == (other.ring, other.labels, other.shifts, other.caps)

    def __hash__(self) -> int:
        return hash((self.labels, self.shifts, self.caps))

    def __repr__(self) -> str:
        caps = "" if not self.capped else f", caps={list(self.caps)}"
        return f"FreeModule(rank={self.rank}, shifts={list(self.shifts)}{caps})"


class Submodule:
    """
    Подмодуль свободного модуля, порожденный однородными элементами над R_{base_nvars}
    (по умолчанию над R_{n-1}). Однородная компонента натягивается на m * gen, где m - мономы
    от первых base_nvars переменных.
    """

    def __init__(self, ambient: FreeModule, generators, base_nvars: int | None = None):
        self.ambient = ambient
        self.base_nvars = ambient.ring.nvars - 1 if base_nvars is None else base_nvars
        self._generators: list[tuple[Element, int]] = []
        for element in generators:
            if not ambient.contains(element):
                raise CapViolationError(ambient.render(element), None)
            degree = ambient.element_degree(element)
            if degree is not None:
                self._generators.append((tuple(element), degree))
        self._spanning: dict[int, list[Vector]] = {}
        self._echelons: dict[int, Echelon] = {}

    @property
    def ring(self) -> PolyRing:
        return self.ambient.ring

    @property
    def labels(self):
        return self.ambient.labels

    @property
    def rank(self) -> int:
        return self.ambient.rank

    def generators(self) -> list[Element]:
        return [element for element, _ in self._generators]

    @cached_property
    def _pad(self) -> tuple[int, ...]:
        return (0,) * (self.ring.nvars - self.base_nvars)

    def spanning(self, degree: int) -> list[Vector]:
        if degree not in self._spanning:
            one = self.ring.field.one
            vectors = []
            for element, generator_degree in self._generators:
                for mono in monomials_of_degree(self.base_nvars, degree - generator_degree):
                    multiple = tuple(c.mul_term(mono + self._pad, one) for c in element)
                    vectors.append(self.ambient.vector(multiple, degree))
            self._spanning[degree] = vectors
        return self._spanning[degree]

    def _echelon(self, degree: int) -> Echelon:
        if degree not in self._echelons:
            echelon = Echelon(self.ring.field)
            for vector in self.spanning(degree):
                echelon.add(vector)
            self._echelons[degree] = echelon
        return self._echelons[degree]

    def basis(self, degree: int) -> list[Vector]:
        echelon = Echelon(self.ring.field)
        return [vector for vector in self.spanning(degree) if echelon.add(vector) is None]

    def dimension(self, degree: int) -> int:
        return self._echelon(degree).rank

    def contains(self, element: Element) -> bool:
        if not self.ambient.contains(element):
            return False
        degree = self.ambient.element_degree(element)
        if degree is None:
            return True
        return self._echelon(degree).contains(self.ambient.vector(element, degree))

    def zero(self) -> Element:
        return self.ambient.zero()

    def render(self, element: Element) -> list[str]:
        return self.ambient.render(element)

    def __repr__(self) -> str:
        return f"Submodule({len(self._generators)} образующих в {self.ambient!r})"


def graded_piece(module: FreeModule, total_degree: int) -> list[tuple[Label, Monomial]]:
    return module.graded_piece(total_degree)


GradedModule: TypeAlias = FreeModule | Submodule
