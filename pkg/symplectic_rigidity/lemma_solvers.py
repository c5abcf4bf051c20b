"""
Lemma Solvers: exact solutions of the braid/commutation constraint systems
A linear stage is solved as a nullspace; what survives is a 2x2 block reduced to one polynomial in one unknown
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from typing import Literal

from sympy import QQ, Poly, expand, groebner, solve, symbols

from .errors import DegenerateStep, DimensionMismatch, DomainError
from .exact_linalg import (
    T,
    Matrix,
    Subspace,
    as_fraction,
    as_rational,
    char_poly,
    commutant_dimension,
    fixed_space_dimension,
    identity,
    linear_solution_space,
    rational_roots,
    render_poly,
)
from .generators import standard_blocks, twist_matrix
from .relations import check_braid, check_commute

logger = logging.getLogger(__name__)

Role = Literal["a", "b"]
GeneratorChoice = Literal["both", "a_only", "b_only"]

a, b = symbols("a b")


# ---------------------------------------------------------------------------
# The 2x2 system: X commutes with C and braids with D
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class UniquenessCertificate:
    """Everything needed to re-check that the 2x2 system has exactly one invertible solution

    The linear stage leaves X = a·basis[0] + b·basis[1]. One residual entry
    is affine in b with constant nonzero slope, so b = substitution(a); the
    remaining entries become polynomials in a alone whose gcd carries every
    solution over the complex numbers. `elimination` is the same polynomial
    read off a lex Groebner basis of all four entries.
    """

    commute_with: Matrix
    braid_with: Matrix
    linear_basis: tuple[Matrix, Matrix]
    substitution_entry: tuple[int, int]
    substitution: Poly
    equations: tuple[Poly, ...]
    common_factor: Poly
    elimination: Poly
    roots: tuple[tuple[Fraction, int], ...]
    residual: Poly
    rejected: tuple[tuple[Fraction, str], ...]
    solutions: tuple[Matrix, ...]

    @property
    def unique(self) -> bool:
        # a constant residual means no root outside Q was left unexamined
        return len(self.solutions) == 1 and self.residual.degree() == 0

    @property
    def solution(self) -> Matrix:
        if not self.unique:
            raise DegenerateStep(0, f"expected one invertible solution, found {len(self.solutions)}")
        return self.solutions[0]


def _parametrized(basis: tuple[Matrix, Matrix], x: Fraction, y: Fraction) -> Matrix:
    return basis[0].scale(x) + basis[1].scale(y)


def _solve_2x2(commute_with: Matrix, braid_with: Matrix) -> UniquenessCertificate:
    if commute_with.shape != (2, 2) or braid_with.shape != (2, 2):
        raise DimensionMismatch("the block system is defined for 2x2 matrices")
    eye = identity(2)
    linear = linear_solution_space((2, 2), [[(eye, commute_with), (-commute_with, eye)]])
    if len(linear) != 2:
        raise DegenerateStep(0, f"centralizer of the commuting block has dimension {len(linear)}, expected 2")
    basis = (linear[0], linear[1])
    x = basis[0].to_sympy() * a + basis[1].to_sympy() * b
    d = braid_with.to_sympy()
    entries = [expand(e) for e in x * d * x - d * x * d]

    # entries are at most quadratic in (a, b); find one affine in b with constant slope
    chosen = None
    for index, entry in enumerate(entries):
        slope = entry.diff(b)
        if slope.is_number and slope != 0:
            chosen = index
            break
    if chosen is None:
        raise DegenerateStep(0, "no residual entry determines the second unknown")
    (value,) = solve(entries[chosen], b)
    substitution = Poly(value, a, domain=QQ)
    logger.debug("entry %s gives b = %s", divmod(chosen, 2), render_poly(substitution))

    equations = []
    for entry in entries:
        poly = Poly(expand(entry.subs(b, value)), a, domain=QQ)
        if not poly.is_zero:
            equations.append(poly)
    if not equations:
        raise DegenerateStep(0, "the braid constraint leaves a one-parameter family")
    common = reduce(lambda p, q: p.gcd(q), equations).monic()

    eliminated = groebner([e for e in entries if e != 0], b, a, order="lex", domain=QQ)
    univariate = [Poly(p, a, domain=QQ).monic() for p in eliminated.exprs if not p.has(b)]
    if univariate != [common]:
        raise DegenerateStep(0, "the elimination ideal disagrees with the gcd of the substituted entries")

    roots, leftover = rational_roots(common)
    rejected: list[tuple[Fraction, str]] = []
    solutions: list[Matrix] = []
    for root, _ in roots:
        candidate = _parametrized(basis, root, as_fraction(substitution.eval(as_rational(root))))
        if candidate.determinant() == 0:
            rejected.append((root, "X is singular"))
        elif not (check_commute(candidate, commute_with) and check_braid(candidate, braid_with)):
            rejected.append((root, "re-substitution fails"))
        else:
            solutions.append(candidate)

    return UniquenessCertificate(
        commute_with=commute_with,
        braid_with=braid_with,
        linear_basis=basis,
        substitution_entry=divmod(chosen, 2),
        substitution=substitution,
        equations=tuple(equations),
        common_factor=common,
        elimination=univariate[0],
        roots=tuple(roots),
        residual=leftover,
        rejected=tuple(rejected),
        solutions=tuple(solutions),
    )


def solve_2x2_braid_centralizer() -> tuple[Matrix, UniquenessCertificate]:
    """The unique invertible X with XU = UX and XÛX = ÛXÛ (it is U)"""
    u, u_hat = standard_blocks()
    certificate = _solve_2x2(u, u_hat)
    return certificate.solution, certificate


# ---------------------------------------------------------------------------
# The 2g x 2g block system
# ---------------------------------------------------------------------------


def _check_block_args(g: int, k: int, role: str) -> None:
    if g < 1:
        raise DomainError(f"genus must be at least 1, got {g}")
    if not 1 <= k <= g:
        raise DomainError(f"block index {k} outside 1..{g}")
    if role not in ("a", "b"):
        raise DomainError(f"role must be 'a' or 'b', got {role!r}")


def _linear_constraints(g: int, k: int) -> list[list[tuple[Matrix, Matrix]]]:
    eye = identity(2 * g)
    constraints = []
    for i in range(1, g + 1):
        if i == k:
            continue
        for kind in ("a", "b"):
            m = twist_matrix(g, i, kind)
            constraints.append([(eye, m), (-m, eye)])
    return constraints


def linear_stage_dimension(g: int, k: int, role: Role = "a") -> int:
    """Dimension of {X : X commutes with A_i, B_i for every i != k}; always 4 + (g - 1)

    The role does not enter the linear stage; it is accepted so callers can
    pass the same triple everywhere.
    """
    _check_block_args(g, k, role)
    return len(linear_solution_space((2 * g, 2 * g), _linear_constraints(g, k)))


@dataclass(frozen=True)
class BlockCertificate:
    g: int
    k: int
    role: Role
    linear_dimension: int
    off_diagonal_zero: bool
    complement_scalar_blocks: bool
    block_free: bool
    block: UniquenessCertificate
    solution: Matrix


def _vec(matrix: Matrix) -> tuple[Fraction, ...]:
    return tuple(x for row in matrix.entries for x in row)


def block_constraint_certificate(g: int, k: int, role: Role) -> BlockCertificate:
    """Solve the block system and keep every intermediate fact for inspection"""
    _check_block_args(g, k, role)
    n = 2 * g
    linear = linear_solution_space((n, n), _linear_constraints(g, k))
    inside = [2 * (k - 1), 2 * (k - 1) + 1]
    outside = [i for i in range(n) if i not in inside]

    # X2 = 0 and X3 = 0
    off_diagonal_zero = all(
        x.submatrix(inside, outside).is_zero() and x.submatrix(outside, inside).is_zero()
        for x in linear
    )
    if not off_diagonal_zero:
        raise DegenerateStep(k, "off-diagonal blocks survive the linear stage")

    # X4 lies in Diag(c_i I2), whose only unipotent member is I
    patterns = []
    for j in range(g - 1):
        entries = [Fraction(0)] * (len(outside) ** 2)
        for p in (2 * j, 2 * j + 1):
            entries[p * len(outside) + p] = Fraction(1)
        patterns.append(entries)
    complement_scalar_blocks = True
    if outside:
        scalar_blocks = Subspace.span(patterns, len(outside) ** 2)
        complement = Subspace.span([_vec(x.submatrix(outside, outside)) for x in linear], len(outside) ** 2)
        complement_scalar_blocks = complement == scalar_blocks
    if not complement_scalar_blocks:
        raise DegenerateStep(k, "complement of the block is not block-scalar")

    # X1 is unconstrained by the linear stage
    block_span = Subspace.span([_vec(x.submatrix(inside, inside)) for x in linear], 4)
    block_free = block_span.dim == 4
    if not block_free:
        raise DegenerateStep(k, "the linear stage constrains the 2x2 block")

    u, u_hat = standard_blocks()
    block = _solve_2x2(u, u_hat) if role == "a" else _solve_2x2(u_hat, u)
    x1 = block.solution

    grid = identity(n).tolist()
    for i, row in enumerate(inside):
        for j, col in enumerate(inside):
            grid[row][col] = x1[i, j]
    solution = Matrix.of(grid)
    if not check_block_solution(solution, g, k, role):
        raise DegenerateStep(k, "assembled block solution fails re-substitution")
    logger.debug("block system g=%d k=%d role=%s solved, linear stage dim %d", g, k, role, len(linear))
    return BlockCertificate(
        g=g,
        k=k,
        role=role,
        linear_dimension=len(linear),
        off_diagonal_zero=off_diagonal_zero,
        complement_scalar_blocks=complement_scalar_blocks,
        block_free=block_free,
        block=block,
        solution=solution,
    )


def solve_block_constraint(g: int, k: int, role: Role) -> Matrix:
    """The unique X solving the role's constraint system: A_k for "a", B_k for "b" """
    return block_constraint_certificate(g, k, role).solution


def _is_unipotent(x: Matrix) -> bool:
    return char_poly(x) == Poly((T - 1) ** x.rows, T, domain=QQ)


def check_block_solution(x: Matrix, g: int, k: int, role: Role) -> bool:
    """Re-substitute X into all four constraints

    For role "a": X unipotent, X commutes with every A_i and with B_j (j != k),
    and X braids with B_k. Role "b" swaps the letters.
    """
    _check_block_args(g, k, role)
    if x.shape != (2 * g, 2 * g):
        raise DimensionMismatch(f"expected a {2 * g}x{2 * g} matrix, got {x.shape}")
    own, other = ("a", "b") if role == "a" else ("b", "a")
    if not _is_unipotent(x):
        return False
    for i in range(1, g + 1):
        if not check_commute(x, twist_matrix(g, i, own)):
            return False
        partner = twist_matrix(g, i, other)
        if i == k:
            if not check_braid(x, partner):
                return False
        elif not check_commute(x, partner):
            return False
    return True


# ---------------------------------------------------------------------------
# Rectangular fixed spaces
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ZeroSpaceReport:
    g: int
    shape: tuple[int, int]
    generators: GeneratorChoice
    right_fixed: int
    left_fixed: int
    commutant: int

    @property
    def expected(self) -> tuple[int, int, int]:
        return 0, 0, self.g

    @property
    def holds(self) -> bool:
        return (self.right_fixed, self.left_fixed, self.commutant) == self.expected


def zero_space_checks(g: int, shape: tuple[int, int], generators: GeneratorChoice = "both") -> ZeroSpaceReport:
    """Fixed-space dimensions for X (2g x k), Y (k x 2g) and the commutant of the chosen generators

    `shape` is the shape of X; Y has the transposed shape.
    """
    if g < 1:
        raise DomainError(f"genus must be at least 1, got {g}")
    rows, cols = shape
    if rows != 2 * g:
        raise DimensionMismatch(f"X must have {2 * g} rows, got shape {shape}")
    if cols < 1:
        raise DomainError(f"X needs at least one column, got shape {shape}")
    kinds = {"both": ("a", "b"), "a_only": ("a",), "b_only": ("b",)}.get(generators)
    if kinds is None:
        raise DomainError(f"generators must be both, a_only or b_only, got {generators!r}")
    matrices = [twist_matrix(g, i, kind) for i in range(1, g + 1) for kind in kinds]
    right = fixed_space_dimension(matrices, "right", (rows, cols))
    left = fixed_space_dimension(matrices, "left", (cols, rows))
    commutant, _ = commutant_dimension(matrices)
    return ZeroSpaceReport(g, (rows, cols), generators, right, left, commutant)

