"""
Classification: what the rigidity theorems say about a homomorphism into GL(n)
Dimension thresholds for the whole group, spectral constraints on a single twist image, and the flag criterion
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Sequence

from .errors import DimensionMismatch, DomainError
from .exact_linalg import EigenReport, Matrix, Subspace, kernel, identity, rational_eigen, render_poly

logger = logging.getLogger(__name__)


class VerdictKind(str, Enum):
    TRIVIAL_ONLY = "TrivialOnly"
    ABELIAN_IMAGE_Z10 = "AbelianImageZ10"
    TRIVIAL_OR_SYMPLECTIC = "TrivialOrSymplectic"
    BELOW_FAITHFULNESS = "BelowFaithfulness"
    TORELLI_DERIVED_KILLED = "TorelliDerivedKilled"
    NO_STATEMENT = "NoStatement"


@dataclass(frozen=True, slots=True)
class Verdict:
    kind: VerdictKind
    citation: str
    # derived-series index, only for TorelliDerivedKilled
    k: int | None = None

    def __str__(self) -> str:
        label = self.kind.value if self.k is None else f"{self.kind.value}({self.k})"
        return f"{label}: {self.citation}"


@dataclass(frozen=True)
class ClassificationVerdict:
    g: int
    n: int
    verdicts: list[Verdict] = field(default_factory=list)

    @property
    def kinds(self) -> list[VerdictKind]:
        return [v.kind for v in self.verdicts]

    def has(self, kind: VerdictKind) -> bool:
        return kind in self.kinds

    @property
    def torelli_index(self) -> int | None:
        return next((v.k for v in self.verdicts if v.kind is VerdictKind.TORELLI_DERIVED_KILLED), None)


def _trivial_only(g: int, n: int) -> str:
    return (
        f"n = {n} <= 2g-1 = {2 * g - 1}: every homomorphism factors through the abelianization, "
        f"which is trivial for genus {g} >= 3, so the image is trivial"
    )


def _abelian_z10(g: int, n: int) -> str:
    return (
        f"n = {n} <= 2g-1 = {2 * g - 1}: every homomorphism factors through the abelianization, "
        "so in genus 2 the image is a quotient of the cyclic group Z_10 of order 10"
    )


def _trivial_or_symplectic(g: int, n: int) -> str:
    return (
        f"n = 2g = {n}: a homomorphism is either trivial or conjugate to the symplectic "
        "representation on first homology"
    )


def _below_faithfulness(g: int, n: int) -> str:
    return f"n = {n} <= 3g-3 = {3 * g - 3}: there is no injective homomorphism into GL({n}, C)"


def _torelli_killed(g: int, n: int, k: int) -> str:
    return (
        f"n = 2g+{k} with g >= {k}+3: the {k}-th derived subgroup of the Torelli group "
        "(mapping classes acting trivially on first homology) lies in the kernel"
    )


def classify(g: int, n: int) -> ClassificationVerdict:
    """Every statement the threshold theorems make about homomorphisms Mod(S_g) -> GL(n, C)"""
    if g < 2:
        raise DomainError(f"genus must be at least 2, got {g}")
    if n < 1:
        raise DomainError(f"dimension must be at least 1, got {n}")
    verdicts: list[Verdict] = []
    if g >= 3 and n <= 2 * g - 1:
        verdicts.append(Verdict(VerdictKind.TRIVIAL_ONLY, _trivial_only(g, n)))
    if g == 2 and n <= 2 * g - 1:
        verdicts.append(Verdict(VerdictKind.ABELIAN_IMAGE_Z10, _abelian_z10(g, n)))
    if g >= 3 and n == 2 * g:
        verdicts.append(Verdict(VerdictKind.TRIVIAL_OR_SYMPLECTIC, _trivial_or_symplectic(g, n)))
    if g >= 3 and n <= 3 * g - 3:
        verdicts.append(Verdict(VerdictKind.BELOW_FAITHFULNESS, _below_faithfulness(g, n)))
    k = n - 2 * g
    if 0 <= k and g >= k + 3:
        verdicts.append(Verdict(VerdictKind.TORELLI_DERIVED_KILLED, _torelli_killed(g, n, k), k))
    if not verdicts:
        verdicts.append(Verdict(VerdictKind.NO_STATEMENT, f"no threshold statement covers g = {g}, n = {n}"))
    logger.info("classify(%d, %d): %s", g, n, ", ".join(v.kind.value for v in verdicts))
    return ClassificationVerdict(g, n, verdicts)


# ---------------------------------------------------------------------------
# Spectrum of a single twist image
# ---------------------------------------------------------------------------


@dataclass(frozen=True, slots=True)
class SpectrumConstraint:
    name: str
    statement: str


def twist_spectrum_constraints(g: int, m: int) -> list[SpectrumConstraint]:
    """Constraints on the image of a nonseparating twist under any homomorphism into GL(m, C)"""
    if g < 1 or m < 1:
        raise DomainError(f"need g >= 1 and m >= 1, got g={g}, m={m}")
    constraints = []
    if g >= 3:
        constraints.append(SpectrumConstraint(
            "small-multiplicity",
            f"an eigenvalue of multiplicity <= {2 * g - 3} equals 1 and its eigenspace has that dimension",
        ))
    if g >= 3 and m <= 4 * g - 5:
        constraints.append(SpectrumConstraint("two-eigenvalues", "at most two distinct eigenvalues"))
    if g >= 4 and m == 2 * g:
        constraints.append(SpectrumConstraint(
            "single-eigenvalue",
            f"exactly one eigenvalue, equal to 1 when its eigenspace has dimension {2 * g - 1}",
        ))
    return constraints


@dataclass(frozen=True, slots=True)
class ConstraintCheck:
    name: str
    # None when the rational part of the spectrum cannot decide
    holds: bool | None
    detail: str


@dataclass(frozen=True)
class SpectrumReport:
    g: int
    m: int
    eigen: EigenReport
    checks: list[ConstraintCheck]

    @property
    def violations(self) -> list[ConstraintCheck]:
        return [c for c in self.checks if c.holds is False]

    @property
    def ok(self) -> bool:
        return not self.violations

    @property
    def undecided(self) -> list[ConstraintCheck]:
        return [c for c in self.checks if c.holds is None]


def _eigenspace_dim(matrix: Matrix, value: Fraction) -> int:
    return kernel(matrix - identity(matrix.rows).scale(value)).dim


def _small_multiplicity(matrix: Matrix, g: int, eigen: EigenReport) -> ConstraintCheck:
    bound = 2 * g - 3
    for value, mult in eigen.eigenvalues:
        if mult > bound:
            continue
        if value != 1:
            return ConstraintCheck("small-multiplicity", False, f"eigenvalue {value} has multiplicity {mult} <= {bound}")
        dim = _eigenspace_dim(matrix, value)
        if dim != mult:
            return ConstraintCheck(
                "small-multiplicity", False, f"eigenvalue 1 has multiplicity {mult} but eigenspace dimension {dim}"
            )
    residual = eigen.residual.degree()
    if residual == 0:
        return ConstraintCheck("small-multiplicity", True, "all eigenvalues rational")
    # roots of the residual are irrational, so each multiplicity is bounded by its degree
    if residual <= bound:
        return ConstraintCheck(
            "small-multiplicity", False, f"irrational eigenvalues of multiplicity <= {residual} <= {bound}"
        )
    return ConstraintCheck("small-multiplicity", None, f"residual {render_poly(eigen.residual)} of degree {residual}")


def _two_eigenvalues(eigen: EigenReport) -> ConstraintCheck:
    # a nonconstant residual without rational roots has at least two distinct roots
    extra = 2 if eigen.residual.degree() > 0 else 0
    count = len(eigen.eigenvalues) + extra
    if count > 2:
        return ConstraintCheck("two-eigenvalues", False, f"at least {count} distinct eigenvalues")
    if eigen.residual.degree() > 2:
        return ConstraintCheck("two-eigenvalues", None, f"residual {render_poly(eigen.residual)} not factored")
    return ConstraintCheck("two-eigenvalues", True, f"{count} distinct eigenvalue(s)")


def _single_eigenvalue(matrix: Matrix, g: int, eigen: EigenReport) -> ConstraintCheck:
    # a lone eigenvalue of multiplicity m is trace/m, hence rational
    if eigen.residual.degree() > 0 or len(eigen.eigenvalues) != 1:
        return ConstraintCheck("single-eigenvalue", False, "more than one eigenvalue")
    value, _ = eigen.eigenvalues[0]
    dim = _eigenspace_dim(matrix, value)
    if dim == 2 * g - 1 and value != 1:
        return ConstraintCheck(
            "single-eigenvalue", False, f"eigenspace of dimension {dim} belongs to eigenvalue {value} != 1"
        )
    return ConstraintCheck("single-eigenvalue", True, f"only eigenvalue {value}, eigenspace dimension {dim}")


def check_twist_spectrum(matrix: Matrix, g: int) -> SpectrumReport:
    """Apply the spectral constraints to a concrete matrix claimed to be a twist image"""
    if not matrix.is_square:
        raise DimensionMismatch(f"square matrix required, got {matrix.shape}")
    m = matrix.rows
    eigen = rational_eigen(matrix)
    checks = []
    for constraint in twist_spectrum_constraints(g, m):
        if constraint.name == "small-multiplicity":
            checks.append(_small_multiplicity(matrix, g, eigen))
        elif constraint.name == "two-eigenvalues":
            checks.append(_two_eigenvalues(eigen))
        else:
            checks.append(_single_eigenvalue(matrix, g, eigen))
    report = SpectrumReport(g, m, eigen, checks)
    if report.violations:
        logger.info("twist spectrum violates %s", ", ".join(c.name for c in report.violations))
    return report


# ---------------------------------------------------------------------------
# Flag criterion
# ---------------------------------------------------------------------------


@dataclass(frozen=True, slots=True)
class FlagVerdict:
    applicable: bool
    conclusion: str
    reason: str


def flag_criterion(flag: Sequence[Subspace], matrices: Sequence[Matrix], h: int) -> FlagVerdict:
    """Triviality from an invariant flag 0 = W_0 ⊂ ... ⊂ W_k = Q^m with small quotients

    The matrices stand for the images of a generating set of the genus-h
    mapping class group.
    """
    if h < 2:
        raise DomainError(f"genus must be at least 2, got {h}")
    if not flag:
        raise DomainError("a flag needs at least one subspace")
    m = flag[0].ambient_dim
    if any(w.ambient_dim != m for w in flag) or any(x.shape != (m, m) for x in matrices):
        raise DimensionMismatch(f"flag and matrices must all live in dimension {m}")

    def not_applicable(reason: str) -> FlagVerdict:
        return FlagVerdict(False, "criterion not applicable", reason)

    if flag[0].dim != 0:
        return not_applicable("the flag does not start at 0")
    if flag[-1].dim != m:
        return not_applicable(f"the flag does not end at the whole space Q^{m}")
    for i, (lower, upper) in enumerate(zip(flag, flag[1:]), start=1):
        if not lower.is_subspace_of(upper):
            return not_applicable(f"W_{i - 1} is not contained in W_{i}")
        if upper.dim - lower.dim > 2 * h - 1:
            return not_applicable(f"dim W_{i}/W_{i - 1} = {upper.dim - lower.dim} exceeds {2 * h - 1}")
    for i, w in enumerate(flag):
        for j, x in enumerate(matrices, start=1):
            if not w.is_invariant_under(x):
                return not_applicable(f"W_{i} is not invariant under matrix {j}")
    if h >= 3:
        return FlagVerdict(True, "image trivial", "every quotient has dimension at most 2h-1")
    return FlagVerdict(True, "image a quotient of Z_10", "every quotient has dimension at most 3")
