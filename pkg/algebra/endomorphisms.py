"""
Эндоморфизмы колец многочленов, заданные образами переменных: автоморфизмы Phi#_{d,j}
и транспозиции переменных tau_{lm}.
"""
from algebra.exceptions import IndexOutOfRangeError, RingMismatchError
from algebra.fields import Field
from algebra.polynomials import MultiPoly, PolyRing, poly_ring


class RingEndo:
    __slots__ = ("ring", "images")

    def __init__(self, ring: PolyRing, images):
        images = tuple(images)
        if len(images) != ring.nvars:
            raise IndexOutOfRangeError("images", len(images), ring.nvars, ring.nvars)
        for image in images:
            if image.ring != ring:
                raise RingMismatchError(ring, image.ring)
        self.ring = ring
        self.images = images

    @classmethod
    def identity(cls, ring: PolyRing) -> "RingEndo":
        return cls(ring, ring.gens())

    def apply(self, f: MultiPoly) -> MultiPoly:
        if f.ring != self.ring:
            raise RingMismatchError(self.ring, f.ring)
        powers: dict[tuple[int, int], MultiPoly] = {}

        def power(index: int, exponent: int) -> MultiPoly:
            key = index, exponent
            if key not in powers:
                powers[key] = self.images[index] ** exponent
            return powers[key]

        result = self.ring.zero()
        for mono, coeff in f.terms.items():
            term = self.ring.constant(coeff)
            for index, exponent in enumerate(mono):
                if exponent:
                    term = term * power(index, exponent)
            result = result + term
        return result

    __call__ = apply

    def compose(self, other: "RingEndo") -> "RingEndo":
        """(self o other)(x) = self(other(x))"""
        return RingEndo(self.ring, [self.apply(image) for image in other.images])

    def is_identity(self) -> bool:
        return self.images == tuple(self.ring.gens())

    def is_linear_homogeneous(self) -> bool:
        return all(image.is_homogeneous() == (True, 1) for image in self.images)

    def __eq__(self, other) -> bool:
        if not isinstance(other, RingEndo):
            return NotImplemented
        return self.ring == other.ring and self.images == other.images

    def __hash__(self) -> int:
        return hash(self.images)

    def __repr__(self) -> str:
        mapping = ", ".join(f"x{index} -> {image}" for index, image in enumerate(self.images, start=1))
        return f"RingEndo({mapping})"


def phi_endo(d: int, j: int, field: Field, ring: PolyRing | None = None) -> RingEndo:
    """
    Phi#_{d,j}: x_l -> x_l - x_j (l != j), x_j -> -x_j для j <= d; при j = d + 1 - тождество.
    Действует на первые d переменных `ring` (по умолчанию K[x1..xd]), остальные неподвижны.
    """
    ring = ring or poly_ring(d, field)
    if not 1 <= d <= ring.nvars:
        raise IndexOutOfRangeError("d", d, 1, ring.nvars)
    if not 1 <= j <= d + 1:
        raise IndexOutOfRangeError("j", j, 1, d + 1)
    gens = ring.gens()
    if j == d + 1:
        return RingEndo(ring, gens)
    pivot = gens[j - 1]
    images = []
    for index, x in enumerate(gens, start=1):
        if index > d:
            images.append(x)
        elif index == j:
            images.append(-x)
        else:
            images.append(x - pivot)
    return RingEndo(ring, images)


def swap_endo(n: int, l: int, m: int, field: Field, ring: PolyRing | None = None) -> RingEndo:
    ring = ring or poly_ring(n, field)
    for name, value in (("l", l), ("m", m)):
        if not 1 <= value <= n:
            raise IndexOutOfRangeError(name, value, 1, n)
    gens = ring.gens()
    gens[l - 1], gens[m - 1] = gens[m - 1], gens[l - 1]
    return RingEndo(ring, gens)
