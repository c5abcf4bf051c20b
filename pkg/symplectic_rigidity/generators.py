"""
Symplectic Generators: the standard Dehn-twist matrices and the transvection map
Homology basis order is (a1, b1, a2, b2, ..., ag, bg); vectors are columns
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Literal

from .errors import DimensionMismatch, DomainError
from .exact_linalg import Matrix, block_diagonal, identity

Kind = Literal["a", "b"]

_BASIS_CLASS = re.compile(r"^\s*([ab])(\d+)\s*$")
_VECTOR_CLASS = re.compile(r"^\s*\[\s*(-?\d+(?:\s*,\s*-?\d+)*)\s*\]\s*$")


@dataclass(frozen=True, slots=True)
class HomologyClass:
    """Integer vector in H_1 with respect to (a1, b1, ..., ag, bg)"""

    g: int
    coords: tuple[int, ...]

    def __post_init__(self):
        if self.g < 1:
            raise DomainError(f"genus must be at least 1, got {self.g}")
        if len(self.coords) != 2 * self.g:
            raise DimensionMismatch(f"class needs {2 * self.g} coordinates, got {len(self.coords)}")

    @classmethod
    def basis(cls, g: int, i: int, kind: Kind) -> HomologyClass:
        _check_index(g, i)
        coords = [0] * (2 * g)
        coords[2 * (i - 1) + (0 if kind == "a" else 1)] = 1
        return cls(g, tuple(coords))

    @classmethod
    def parse(cls, text: str, g: int) -> HomologyClass:
        """Parse "a1", "b3" or "[c1,...,c2g]" """
        if match := _BASIS_CLASS.match(text):
            return cls.basis(g, int(match.group(2)), match.group(1))
        if match := _VECTOR_CLASS.match(text):
            return cls(g, tuple(int(x) for x in match.group(1).split(",")))
        raise ValueError(f"not a homology class: {text!r}")

    def __add__(self, other: HomologyClass) -> HomologyClass:
        _check_same_genus(self, other)
        return HomologyClass(self.g, tuple(x + y for x, y in zip(self.coords, other.coords)))

    def __neg__(self) -> HomologyClass:
        return HomologyClass(self.g, tuple(-x for x in self.coords))

    def __sub__(self, other: HomologyClass) -> HomologyClass:
        return self + (-other)

    @property
    def is_zero(self) -> bool:
        return not any(self.coords)

    def as_basis_name(self) -> str | None:
        """"a3" / "b1" when the class is a basis element, else None"""
        if sorted(self.coords) != [0] * (2 * self.g - 1) + [1]:
            return None
        pos = self.coords.index(1)
        return f"{'ab'[pos % 2]}{pos // 2 + 1}"

    def __str__(self) -> str:
        return self.as_basis_name() or "[" + ",".join(str(x) for x in self.coords) + "]"


@dataclass(frozen=True, slots=True)
class GeneratorSet:
    """The (extended) standard twist images Ã_i, B̃_i acting on Q^m"""

    g: int
    m: int
    A: tuple[Matrix, ...]
    B: tuple[Matrix, ...]

    def as_tuple(self) -> list[Matrix]:
        """[A1, B1, A2, B2, ...] in the L-ordering"""
        return [x for pair in zip(self.A, self.B) for x in pair]


def _check_index(g: int, i: int) -> None:
    if g < 1:
        raise DomainError(f"genus must be at least 1, got {g}")
    if not 1 <= i <= g:
        raise DomainError(f"index {i} outside 1..{g}")


def _check_same_genus(*classes: HomologyClass) -> None:
    genera = {c.g for c in classes}
    if len(genera) > 1:
        raise DimensionMismatch(f"classes of different genera {sorted(genera)}")


def standard_blocks() -> tuple[Matrix, Matrix]:
    """U and Û"""
    return Matrix.of([[1, 1], [0, 1]]), Matrix.of([[1, 0], [-1, 1]])


def twist_matrix(g: int, i: int, kind: Kind, m: int | None = None) -> Matrix:
    """A_i / B_i for m = 2g, the extended Ã_i / B̃_i = Diag(A_i, I) for m > 2g"""
    _check_index(g, i)
    m = 2 * g if m is None else m
    if m < 2 * g:
        raise DomainError(f"ambient dimension {m} below 2g = {2 * g}")
    if kind not in ("a", "b"):
        raise DomainError(f"kind must be 'a' or 'b', got {kind!r}")
    u, u_hat = standard_blocks()
    block = u if kind == "a" else u_hat
    return block_diagonal(identity(2 * (i - 1)), block, identity(m - 2 * i))


def generator_set(g: int, m: int | None = None) -> GeneratorSet:
    m = 2 * g if m is None else m
    return GeneratorSet(
        g, m,
        tuple(twist_matrix(g, i, "a", m) for i in range(1, g + 1)),
        tuple(twist_matrix(g, i, "b", m) for i in range(1, g + 1)),
    )


def standard_tuple(g: int, m: int | None = None) -> list[Matrix]:
    return generator_set(g, m).as_tuple()


def symplectic_form(g: int) -> Matrix:
    """J = Diag([[0,1],[-1,0]], ...), so ω(a_i, b_i) = +1"""
    if g < 1:
        raise DomainError(f"genus must be at least 1, got {g}")
    j = Matrix.of([[0, 1], [-1, 0]])
    return block_diagonal(*[j] * g)


def intersection_pairing(c: HomologyClass, d: HomologyClass) -> int:
    """ω(c, d) = cᵀ J d"""
    _check_same_genus(c, d)
    total = 0
    for i in range(c.g):
        total += c.coords[2 * i] * d.coords[2 * i + 1] - c.coords[2 * i + 1] * d.coords[2 * i]
    return total


def transvection_power(c: HomologyClass, exponent: int) -> Matrix:
    """T_c^e = I + e·c·cᵀ·J, i.e. x ↦ x + e·ω(c, x)·c"""
    n = 2 * c.g
    # row vector cᵀJ: ω(c, e_k)
    functional = [Fraction(0)] * n
    for i in range(c.g):
        functional[2 * i + 1] = Fraction(c.coords[2 * i])
        functional[2 * i] = Fraction(-c.coords[2 * i + 1])
    return Matrix.of([
        [Fraction(int(r == k)) + exponent * c.coords[r] * functional[k] for k in range(n)]
        for r in range(n)
    ])


def transvection(c: HomologyClass) -> Matrix:
    """Action of the twist about a curve in class c on homology"""
    return transvection_power(c, 1)


def is_symplectic(matrix: Matrix, g: int) -> bool:
    """Mᵀ·J·M == J"""
    if matrix.shape != (2 * g, 2 * g):
        raise DimensionMismatch(f"expected a {2 * g}x{2 * g} matrix, got {matrix.shape}")
    j = symplectic_form(g)
    return matrix.transpose() @ j @ matrix == j
