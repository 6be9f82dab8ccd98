from fractions import Fraction
from typing import TypeAlias

# элемент Q - Fraction, элемент F_p - int из [0, p)
Scalar: TypeAlias = Fraction | int

Monomial: TypeAlias = tuple[int, ...]
