"""
Exact Linear Algebra: dense matrices, subspaces and polynomials over the rationals
Matrices are sympy DomainMatrix objects over QQ; polynomials are sympy Poly objects over QQ
"""

from __future__ import annotations

import logging
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Iterable, Literal, Sequence

from sympy import QQ, Poly, Rational, Symbol
from sympy.polys.matrices import DomainMatrix
from sympy.polys.matrices.exceptions import DMNonInvertibleMatrixError

from .errors import DimensionMismatch, DomainError, SingularMatrixError

logger = logging.getLogger(__name__)

ExactScalar = Fraction
ExactPolynomial = Poly
Vector = tuple[Fraction, ...]

T = Symbol("t")

_SCALAR_PATTERN = re.compile(r"^\s*[+-]?\d+(\s*/\s*\d+)?\s*$")


def parse_scalar(text: str) -> Fraction:
    """Parse "p" or "p/q" into an exact scalar"""
    if not isinstance(text, str) or not _SCALAR_PATTERN.match(text):
        raise ValueError(f"not a rational literal: {text!r}")
    return Fraction(text.replace(" ", ""))


def format_scalar(value: Fraction) -> str:
    return str(Fraction(value))


def _to_qq(value: Any) -> Any:
    if QQ.of_type(value):
        return value
    if isinstance(value, str):
        value = parse_scalar(value)
    value = Fraction(value)
    return QQ(value.numerator, value.denominator)


def _from_qq(value: Any) -> Fraction:
    return Fraction(int(value.numerator), int(value.denominator))


def as_rational(value: Fraction | int) -> Rational:
    value = Fraction(value)
    return Rational(value.numerator, value.denominator)


def as_fraction(value: Rational) -> Fraction:
    """sympy Rational (or Integer) to Fraction"""
    return Fraction(int(value.p), int(value.q))


# ---------------------------------------------------------------------------
# Matrices
# ---------------------------------------------------------------------------


class Matrix:
    """Immutable dense rational matrix, row-major, backed by a DomainMatrix over QQ"""

    __slots__ = ("_rep", "_entries")

    def __init__(self, rep: DomainMatrix):
        if rep.domain != QQ:
            rep = rep.convert_to(QQ)
        self._rep = rep.to_dense()
        self._entries: tuple[tuple[Fraction, ...], ...] | None = None

    # -- construction -------------------------------------------------------

    @classmethod
    def of(cls, grid: Sequence[Sequence[int | Fraction | str]], cols: int | None = None) -> Matrix:
        """Build from nested rows; strings are parsed as rational literals"""
        rows = [[_to_qq(x) for x in row] for row in grid]
        if cols is None:
            cols = len(rows[0]) if rows else 0
        if any(len(row) != cols for row in rows):
            raise DimensionMismatch(f"entries do not form a {len(rows)}x{cols} grid")
        return cls(DomainMatrix(rows, (len(rows), cols), QQ))

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence[Fraction]], rows: int | None = None) -> Matrix:
        if not columns:
            return cls.of([[] for _ in range(rows or 0)], cols=0)
        height = len(columns[0])
        if any(len(c) != height for c in columns):
            raise DimensionMismatch("columns of different lengths")
        return cls.of([[c[r] for c in columns] for r in range(height)], cols=len(columns))

    @property
    def rows(self) -> int:
        return self._rep.shape[0]

    @property
    def cols(self) -> int:
        return self._rep.shape[1]

    @property
    def shape(self) -> tuple[int, int]:
        return self._rep.shape

    @property
    def entries(self) -> tuple[tuple[Fraction, ...], ...]:
        if self._entries is None:
            self._entries = tuple(tuple(_from_qq(x) for x in row) for row in self._rep.to_list())
        return self._entries

    def column(self, j: int) -> Vector:
        return tuple(row[j] for row in self.entries)

    def columns(self) -> list[Vector]:
        return [self.column(j) for j in range(self.cols)]

    def __getitem__(self, index: tuple[int, int]) -> Fraction:
        r, c = index
        return self.entries[r][c]

    def tolist(self) -> list[list[Fraction]]:
        return [list(row) for row in self.entries]

    def to_sympy(self):
        """The same matrix as a sympy Matrix, for symbolic work"""
        return self._rep.to_Matrix()

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.shape == other.shape and self._rep.to_list() == other._rep.to_list()

    def __hash__(self) -> int:
        return hash((self.shape, self.entries))

    def __repr__(self) -> str:
        return f"Matrix.of({[[format_scalar(x) for x in row] for row in self.entries]!r})"

    # -- arithmetic -----------------------------------------------------------

    def _same_shape(self, other: Matrix) -> None:
        if self.shape != other.shape:
            raise DimensionMismatch(f"shape {self.shape} vs {other.shape}")

    def __add__(self, other: Matrix) -> Matrix:
        self._same_shape(other)
        return Matrix(self._rep + other._rep)

    def __sub__(self, other: Matrix) -> Matrix:
        self._same_shape(other)
        return Matrix(self._rep - other._rep)

    def __neg__(self) -> Matrix:
        return Matrix(-self._rep)

    def scale(self, factor: int | Fraction) -> Matrix:
        return Matrix(self._rep * _to_qq(factor))

    def __matmul__(self, other: Matrix) -> Matrix:
        if self.cols != other.rows:
            raise DimensionMismatch(f"cannot multiply {self.shape} by {other.shape}")
        if self.cols == 0:
            return zeros(self.rows, other.cols)
        return Matrix(self._rep * other._rep)

    def apply(self, vector: Sequence[Fraction]) -> Vector:
        if len(vector) != self.cols:
            raise DimensionMismatch(f"vector of length {len(vector)} for {self.shape} matrix")
        return (self @ Matrix.from_columns([vector], self.cols)).column(0)

    def transpose(self) -> Matrix:
        return Matrix(self._rep.transpose())

    def trace(self) -> Fraction:
        self._require_square()
        return sum((self.entries[i][i] for i in range(self.rows)), Fraction(0))

    def submatrix(self, rows: range | Sequence[int], cols: range | Sequence[int]) -> Matrix:
        rows, cols = list(rows), list(cols)
        if not rows or not cols:
            return zeros(len(rows), len(cols))
        return Matrix(self._rep.extract(rows, cols))

    # -- predicates -----------------------------------------------------------

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def _require_square(self) -> None:
        if not self.is_square:
            raise DimensionMismatch(f"square matrix required, got {self.shape}")

    def is_zero(self) -> bool:
        return all(not x for row in self._rep.to_list() for x in row)

    def is_identity(self) -> bool:
        return self.is_square and self == identity(self.rows)

    # -- derived quantities ---------------------------------------------------

    def rank(self) -> int:
        return rref(self)[1]

    def determinant(self) -> Fraction:
        self._require_square()
        if self.rows == 0:
            return Fraction(1)
        return _from_qq(self._rep.det())

    def inverse(self) -> Matrix:
        self._require_square()
        if self.rows == 0:
            return self
        try:
            return Matrix(self._rep.inv())
        except (DMNonInvertibleMatrixError, ZeroDivisionError):
            raise SingularMatrixError("matrix is not invertible") from None

    def is_invertible(self) -> bool:
        return self.is_square and self.rank() == self.rows

    def power(self, exponent: int) -> Matrix:
        """M^e; negative exponents go through the inverse"""
        self._require_square()
        base = self if exponent >= 0 else self.inverse()
        return Matrix(base._rep.pow(abs(exponent)))

    def __pow__(self, exponent: int) -> Matrix:
        return self.power(exponent)

    def conjugate_by(self, p: Matrix) -> Matrix:
        """P^-1 · M · P"""
        return p.inverse() @ self @ p

    def __str__(self) -> str:
        cells = [[format_scalar(x) for x in row] for row in self.entries]
        width = max((len(c) for row in cells for c in row), default=1)
        return "\n".join("[" + " ".join(c.rjust(width) for c in row) + "]" for row in cells)


def identity(n: int) -> Matrix:
    return Matrix(DomainMatrix.eye(n, QQ))


def zeros(rows: int, cols: int) -> Matrix:
    return Matrix.of([[0] * cols for _ in range(rows)], cols=cols)


def diagonal(values: Iterable[int | Fraction]) -> Matrix:
    values = [_to_qq(v) for v in values]
    return Matrix(DomainMatrix.diag(values, QQ))


def block_diagonal(*blocks: Matrix) -> Matrix:
    """Diag(B1, B2, ...) for square or rectangular blocks"""
    rows = sum(b.rows for b in blocks)
    cols = sum(b.cols for b in blocks)
    grid = [[QQ.zero] * cols for _ in range(rows)]
    r0 = c0 = 0
    for block in blocks:
        for i, row in enumerate(block._rep.to_list()):
            grid[r0 + i][c0:c0 + block.cols] = row
        r0 += block.rows
        c0 += block.cols
    return Matrix(DomainMatrix(grid, (rows, cols), QQ))


# ---------------------------------------------------------------------------
# Row reduction and kernels
# ---------------------------------------------------------------------------


def rref(matrix: Matrix) -> tuple[Matrix, int]:
    """Reduced row-echelon form and rank"""
    if matrix.rows == 0 or matrix.cols == 0:
        return matrix, 0
    reduced, pivots = matrix._rep.rref()
    return Matrix(reduced), len(pivots)


def _span_rows(rows: list[list[Any]], ambient_dim: int) -> Subspace:
    if not rows:
        return Subspace.zero(ambient_dim)
    reduced, pivots = DomainMatrix(rows, (len(rows), ambient_dim), QQ).rref()
    if not pivots:
        return Subspace.zero(ambient_dim)
    basis = reduced.to_dense().to_list()[:len(pivots)]
    return Subspace(ambient_dim, Matrix(DomainMatrix(basis, (len(pivots), ambient_dim), QQ).transpose()))


def kernel(matrix: Matrix) -> Subspace:
    """{v : Mv = 0} in canonical form"""
    if matrix.cols == 0:
        return Subspace.zero(0)
    if matrix.rows == 0 or matrix.is_zero():
        return Subspace.full(matrix.cols)
    null = matrix._rep.nullspace()
    return _span_rows(null.to_dense().to_list(), matrix.cols)


# ---------------------------------------------------------------------------
# Subspaces
# ---------------------------------------------------------------------------


@dataclass(frozen=True, slots=True)
class Subspace:
    """A subspace of Q^n, held by its unique column-reduced echelon basis"""

    ambient_dim: int
    basis: Matrix

    @classmethod
    def span(cls, vectors: Iterable[Sequence[Fraction]], ambient_dim: int) -> Subspace:
        rows = [[_to_qq(x) for x in v] for v in vectors]
        if any(len(v) != ambient_dim for v in rows):
            raise DimensionMismatch(f"vectors must have length {ambient_dim}")
        return _span_rows(rows, ambient_dim)

    @classmethod
    def zero(cls, ambient_dim: int) -> Subspace:
        return cls(ambient_dim, Matrix.from_columns([], ambient_dim))

    @classmethod
    def full(cls, ambient_dim: int) -> Subspace:
        return cls(ambient_dim, identity(ambient_dim))

    @property
    def dim(self) -> int:
        return self.basis.cols

    @property
    def vectors(self) -> list[Vector]:
        return self.basis.columns()

    def contains(self, vector: Sequence[Fraction]) -> bool:
        if len(vector) != self.ambient_dim:
            raise DimensionMismatch(f"vector of length {len(vector)} in Q^{self.ambient_dim}")
        return Subspace.span(self.vectors + [tuple(vector)], self.ambient_dim).dim == self.dim

    def __contains__(self, vector: Sequence[Fraction]) -> bool:
        return self.contains(vector)

    def is_subspace_of(self, other: Subspace) -> bool:
        return all(other.contains(v) for v in self.vectors)

    def is_invariant_under(self, matrix: Matrix) -> bool:
        if self.dim == 0:
            return True
        return self.is_spanning(matrix @ self.basis)

    def is_spanning(self, images: Matrix) -> bool:
        """True iff every column of `images` lies in the subspace"""
        return Subspace.span(self.vectors + images.columns(), self.ambient_dim).dim == self.dim

    def annihilator(self) -> Subspace:
        """{y : y·v = 0 for all v in V}"""
        if self.dim == 0:
            return Subspace.full(self.ambient_dim)
        return kernel(self.basis.transpose())

    def __str__(self) -> str:
        inner = ", ".join("(" + ",".join(format_scalar(x) for x in v) + ")" for v in self.vectors)
        return f"span{{{inner}}} in Q^{self.ambient_dim}"


def intersect(v: Subspace, w: Subspace) -> Subspace:
    """V ∩ W as the common kernel of both annihilators"""
    if v.ambient_dim != w.ambient_dim:
        raise DimensionMismatch(f"ambient dimensions {v.ambient_dim} and {w.ambient_dim}")
    equations = v.annihilator().vectors + w.annihilator().vectors
    if not equations:
        return Subspace.full(v.ambient_dim)
    return kernel(Matrix.of(equations, cols=v.ambient_dim))


def is_invariant(space: Subspace, matrix: Matrix) -> bool:
    return space.is_invariant_under(matrix)


def invariant_closure(space: Subspace, matrices: Sequence[Matrix]) -> Subspace:
    """Smallest subspace containing `space` and closed under every matrix"""
    for m in matrices:
        if m.rows != space.ambient_dim or m.cols != space.ambient_dim:
            raise DimensionMismatch(f"{m.shape} matrix acting on Q^{space.ambient_dim}")
    current = space
    while current.dim:
        images = [v for m in matrices for v in (m @ current.basis).columns()]
        grown = Subspace.span(current.vectors + images, space.ambient_dim)
        if grown.dim == current.dim:
            break
        current = grown
    return current


# ---------------------------------------------------------------------------
# Polynomials and spectra
# ---------------------------------------------------------------------------


def render_poly(poly: Poly) -> str:
    """Plain-text form with ^ for powers, e.g. "t^2 - 2*t + 1" """
    return str(poly.as_expr()).replace("**", "^")


def char_poly(matrix: Matrix) -> Poly:
    """det(tI - M) as a monic polynomial in t over QQ"""
    if not matrix.is_square:
        raise DimensionMismatch(f"characteristic polynomial of a {matrix.shape} matrix")
    if matrix.rows == 0:
        return Poly(1, T, domain=QQ)
    coefficients = matrix._rep.charpoly()
    return Poly([QQ.to_sympy(c) for c in coefficients], T, domain=QQ)


@dataclass(frozen=True, slots=True)
class EigenReport:
    """Rational eigenvalues with algebraic multiplicities, plus what is left over"""

    eigenvalues: tuple[tuple[Fraction, int], ...]
    residual: Poly

    @property
    def splits(self) -> bool:
        return self.residual.degree() == 0

    def multiplicity(self, value: Fraction | int) -> int:
        return dict(self.eigenvalues).get(Fraction(value), 0)


def rational_roots(poly: Poly) -> tuple[list[tuple[Fraction, int]], Poly]:
    """Rational roots with multiplicities from the factorization over QQ; returns (roots, monic residual)"""
    if poly.is_zero:
        raise DomainError("the zero polynomial has every number as a root")
    _, factors = poly.factor_list()
    roots: list[tuple[Fraction, int]] = []
    residual = Poly(1, poly.gen, domain=QQ)
    for factor, mult in factors:
        if factor.degree() == 1:
            lead, const = factor.all_coeffs()
            roots.append((as_fraction(-const / lead), mult))
        else:
            residual = residual * factor ** mult
    roots.sort()
    return roots, residual.monic()


def rational_eigen(matrix: Matrix) -> EigenReport:
    """Rational eigenvalues of M and the unfactored residual of char_poly"""
    roots, residual = rational_roots(char_poly(matrix))
    return EigenReport(tuple(roots), residual)


def eigenvalue_multiplicity(matrix: Matrix, value: Fraction | int) -> int:
    """λ_#: multiplicity of λ in the characteristic polynomial"""
    return rational_eigen(matrix).multiplicity(value)


def generalized_kernel(matrix: Matrix, value: Fraction | int, k: int) -> Subspace:
    """ker((M - λI)^k)"""
    if not matrix.is_square:
        raise DimensionMismatch(f"generalized kernel of a {matrix.shape} matrix")
    if k < 1:
        raise DomainError(f"power must be at least 1, got {k}")
    shifted = matrix - identity(matrix.rows).scale(value)
    return kernel(shifted.power(k))


def jordan_chain_dimensions(matrix: Matrix, value: Fraction | int) -> list[int]:
    """dim ker((M - λI)^k) for k = 1, 2, ... up to the first repeat"""
    dims: list[int] = []
    k = 1
    while True:
        d = generalized_kernel(matrix, value, k).dim
        if dims and d == dims[-1]:
            return dims
        dims.append(d)
        if d == matrix.rows:
            return dims
        k += 1


# ---------------------------------------------------------------------------
# Linear matrix equations
# ---------------------------------------------------------------------------

Term = tuple[Matrix, Matrix]


def linear_solution_space(shape: tuple[int, int], constraints: Sequence[Sequence[Term]]) -> list[Matrix]:
    """Basis of {X of the given shape : Σ P·X·Q = 0 for every constraint}

    Each constraint is a list of (P, Q) terms; the unknown X is flattened
    row-major so that X[a][b] is variable a*cols + b.
    """
    n_rows, n_cols = shape
    n_vars = n_rows * n_cols
    equations: list[list[Any]] = []
    for terms in constraints:
        out_rows, out_cols = terms[0][0].rows, terms[0][1].cols
        block = [[QQ.zero] * n_vars for _ in range(out_rows * out_cols)]
        for p, q in terms:
            if p.cols != n_rows or q.rows != n_cols or (p.rows, q.cols) != (out_rows, out_cols):
                raise DimensionMismatch(f"term {p.shape}·X{shape}·{q.shape} does not fit")
            p_rows, q_rows = p._rep.to_list(), q._rep.to_list()
            for r in range(out_rows):
                for a in range(n_rows):
                    par = p_rows[r][a]
                    if not par:
                        continue
                    for b in range(n_cols):
                        for c, qbc in enumerate(q_rows[b]):
                            if qbc:
                                block[r * out_cols + c][a * n_cols + b] += par * qbc
        equations.extend(row for row in block if any(row))
    if equations:
        space = kernel(Matrix(DomainMatrix(equations, (len(equations), n_vars), QQ)))
    else:
        space = Subspace.full(n_vars)
    return [
        Matrix.of([v[a * n_cols:(a + 1) * n_cols] for a in range(n_rows)], cols=n_cols)
        for v in space.vectors
    ]


def _require_square_family(matrices: Sequence[Matrix], size: int | None) -> int:
    sizes = {m.rows for m in matrices} | {m.cols for m in matrices}
    if size is not None:
        sizes.add(size)
    if len(sizes) != 1:
        raise DimensionMismatch(f"matrices of mixed sizes {sorted(sizes)}")
    return sizes.pop()


def commutant_dimension(matrices: Sequence[Matrix], size: int | None = None) -> tuple[int, list[Matrix]]:
    """Dimension and basis of {Z : ZM = MZ for all M}"""
    n = _require_square_family(matrices, size)
    eye = identity(n)
    basis = linear_solution_space((n, n), [[(eye, m), (-m, eye)] for m in matrices])
    return len(basis), basis


def fixed_space_dimension(
    matrices: Sequence[Matrix],
    side: Literal["left", "right"],
    shape: tuple[int, int],
) -> int:
    """dim{X : MX = X ∀M} (right) or dim{Y : YM = Y ∀M} (left) for X, Y of `shape`"""
    n = _require_square_family(matrices, shape[0] if side == "right" else shape[1])
    eye = identity(n)
    if side == "right":
        other = identity(shape[1])
        constraints = [[(m - eye, other)] for m in matrices]
    elif side == "left":
        other = identity(shape[0])
        constraints = [[(other, m - eye)] for m in matrices]
    else:
        raise DomainError(f"side must be 'left' or 'right', got {side!r}")
    return len(linear_solution_space(shape, constraints))
