"""
Representation Tuples: the images L_1..L_2g of the twists about a_1, b_1, ..., a_g, b_g
L_{2i-1} is the image of t_{a_i}, L_{2i} the image of t_{b_i}
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from .errors import DimensionMismatch, DomainError
from .exact_linalg import Matrix, identity
from .generators import standard_tuple


@dataclass(frozen=True, slots=True)
class RepresentationTuple:
    g: int
    m: int
    matrices: tuple[Matrix, ...]

    def __post_init__(self):
        if self.g < 1:
            raise DomainError(f"genus must be at least 1, got {self.g}")
        if self.m < 2 * self.g:
            raise DomainError(f"ambient dimension {self.m} below 2g = {2 * self.g}")
        if len(self.matrices) != 2 * self.g:
            raise DimensionMismatch(f"expected {2 * self.g} matrices, got {len(self.matrices)}")
        for j, mat in enumerate(self.matrices, start=1):
            if mat.shape != (self.m, self.m):
                raise DimensionMismatch(f"L{j} is {mat.shape}, expected {(self.m, self.m)}")
            if not mat.is_invertible():
                raise DomainError(f"L{j} is not invertible")

    @classmethod
    def standard(cls, g: int, m: int | None = None) -> RepresentationTuple:
        m = 2 * g if m is None else m
        return cls(g, m, tuple(standard_tuple(g, m)))

    @classmethod
    def trivial(cls, g: int, m: int | None = None) -> RepresentationTuple:
        m = 2 * g if m is None else m
        return cls(g, m, (identity(m),) * (2 * g))

    def L(self, j: int) -> Matrix:
        """1-based accessor matching the L_j notation"""
        return self.matrices[j - 1]

    def conjugated(self, p: Matrix) -> RepresentationTuple:
        """{P·L_j·P^-1}"""
        p_inv = p.inverse()
        return RepresentationTuple(self.g, self.m, tuple(p @ mat @ p_inv for mat in self.matrices))

    def replace(self, j: int, matrix: Matrix) -> RepresentationTuple:
        mats = list(self.matrices)
        mats[j - 1] = matrix
        return RepresentationTuple(self.g, self.m, tuple(mats))


def random_invertible(n: int, rng: random.Random, bound: int = 5, denominators: int = 1) -> Matrix:
    """A random invertible rational matrix with numerators in [-bound, bound]"""
    while True:
        candidate = Matrix.of([
            [Fraction(rng.randint(-bound, bound), rng.randint(1, denominators)) for _ in range(n)]
            for _ in range(n)
        ])
        if candidate.is_invertible():
            return candidate


def random_conjugate(t: RepresentationTuple, rng: random.Random, bound: int = 5, denominators: int = 3) -> tuple[RepresentationTuple, Matrix]:
    """Conjugate every L_j by one random invertible M; returns the new tuple and M"""
    m = random_invertible(t.m, rng, bound, denominators)
    return t.conjugated(m), m
