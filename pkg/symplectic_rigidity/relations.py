"""
Relations: braid, commutation and lantern relations checked as exact matrix identities
A written word w1 w2 maps to the product M(w1)·M(w2)
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from functools import reduce
from typing import Literal, Sequence

from .errors import DimensionMismatch, DomainError
from .exact_linalg import Matrix, identity
from .generators import HomologyClass, standard_tuple, transvection, transvection_power
from .representation import RepresentationTuple

logger = logging.getLogger(__name__)

Expected = Literal["braid", "commute"]


def _same_square(x: Matrix, y: Matrix) -> None:
    if not x.is_square or x.shape != y.shape:
        raise DimensionMismatch(f"need two square matrices of one size, got {x.shape} and {y.shape}")


def check_braid(x: Matrix, y: Matrix) -> bool:
    """XYX == YXY"""
    _same_square(x, y)
    return x @ y @ x == y @ x @ y


def check_commute(x: Matrix, y: Matrix) -> bool:
    _same_square(x, y)
    return x @ y == y @ x


def _product(matrices: Sequence[Matrix], n: int) -> Matrix:
    return reduce(lambda acc, mat: acc @ mat, matrices, identity(n))


def _lantern_classes(classes: Sequence[HomologyClass]) -> int:
    if len(classes) != 7:
        raise DomainError(f"a lantern needs 7 classes, got {len(classes)}")
    genera = {c.g for c in classes}
    if len(genera) != 1:
        raise DimensionMismatch(f"classes of different genera {sorted(genera)}")
    return genera.pop()


def check_lantern(classes: Sequence[HomologyClass]) -> bool:
    """T_a·T_b·T_c·T_d == T_x·T_y·T_z for classes (a, b, c, d, x, y, z)"""
    g = _lantern_classes(classes)
    twists = [transvection(c) for c in classes]
    return _product(twists[:4], 2 * g) == _product(twists[4:], 2 * g)


def check_lantern_rewritten(classes: Sequence[HomologyClass]) -> bool:
    """T_d == (T_e'·T_e^-1)(T_x·T_a^-1)(T_y·T_b^-1) for classes (d, e, a, b, e', x, y)

    The positional order is the order of check_lantern for the lantern
    t_d t_e t_a t_b = t_e' t_x t_y, so both checks take the same input.
    """
    g = _lantern_classes(classes)
    d, e, a, b, e_prev, x, y = classes
    rhs = _product([
        transvection(e_prev), transvection_power(e, -1),
        transvection(x), transvection_power(a, -1),
        transvection(y), transvection_power(b, -1),
    ], 2 * g)
    return transvection(d) == rhs


def standard_lantern(g: int = 3) -> list[HomologyClass]:
    """(a1, a2, a3, a1+a2+a3 | a1+a2, a2+a3, a1+a3) in genus g >= 3"""
    if g < 3:
        raise DomainError(f"the standard lantern needs genus at least 3, got {g}")
    a1, a2, a3 = (HomologyClass.basis(g, i, "a") for i in (1, 2, 3))
    return [a1, a2, a3, a1 + a2 + a3, a1 + a2, a2 + a3, a1 + a3]


def check_lantern_eigenvalue(value: Fraction | int) -> bool:
    """Scalar shadow of the lantern on a common eigenvector: λ^4 == λ^3 with λ != 0"""
    value = Fraction(value)
    if value == 0:
        raise DomainError("an eigenvalue of an invertible matrix cannot be 0")
    return value ** 4 == value ** 3


def check_minus_identity(g: int) -> bool:
    """(A1·B1·A2·B2···Ag·Bg)^3 == -I"""
    if g < 1:
        raise DomainError(f"genus must be at least 1, got {g}")
    chain = _product(standard_tuple(g), 2 * g)
    return chain.power(3) == -identity(2 * g)


@dataclass(frozen=True, slots=True)
class RelationViolation:
    j: int
    k: int
    expected: Expected

    def __str__(self) -> str:
        return f"L{self.j}, L{self.k}: {self.expected} relation fails"


@dataclass(frozen=True)
class RelationReport:
    g: int
    checked: int
    violations: list[RelationViolation] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations


def expected_relation(j: int, k: int) -> Expected:
    """Braid for the pairs (a_i, b_i), commutation for every other pair"""
    return "braid" if j % 2 == 1 and k == j + 1 else "commute"


def relation_profile(t: RepresentationTuple) -> RelationReport:
    violations = []
    checked = 0
    for j in range(1, 2 * t.g + 1):
        for k in range(j + 1, 2 * t.g + 1):
            expected = expected_relation(j, k)
            check = check_braid if expected == "braid" else check_commute
            checked += 1
            if not check(t.L(j), t.L(k)):
                violations.append(RelationViolation(j, k, expected))
    if violations:
        logger.info("relation profile: %d of %d pairs violated", len(violations), checked)
    return RelationReport(t.g, checked, violations)
