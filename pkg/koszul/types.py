from typing import TypeAlias

from algebra.polynomials import MultiPoly

# базисный элемент e_{i1} ∧ ... ∧ e_{ik}: возрастающий набор индексов
Label: TypeAlias = tuple[int, ...]

# элемент свободного модуля: координаты в базисе e_I
Element: TypeAlias = tuple[MultiPoly, ...]
