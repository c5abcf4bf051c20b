"""
Symplectic Rigidity: exact linear algebra for twist matrices and their low-dimensional representations
"""

from .classification import ClassificationVerdict, VerdictKind, classify
from .errors import (
    DegenerateStep,
    DimensionMismatch,
    DomainError,
    HypothesisViolation,
    InputFormatError,
    SingularMatrixError,
    ToolkitError,
    WordSyntaxError,
)
from .exact_linalg import ExactPolynomial, Matrix, Subspace
from .generators import HomologyClass, twist_matrix
from .normalize import normalize, recognize, verify_hypotheses
from .representation import RepresentationTuple
from .words import TwistWord, evaluate_word, parse_word

__all__ = [
    "ClassificationVerdict",
    "DegenerateStep",
    "DimensionMismatch",
    "DomainError",
    "ExactPolynomial",
    "HomologyClass",
    "HypothesisViolation",
    "InputFormatError",
    "Matrix",
    "RepresentationTuple",
    "SingularMatrixError",
    "Subspace",
    "ToolkitError",
    "TwistWord",
    "VerdictKind",
    "WordSyntaxError",
    "classify",
    "evaluate_word",
    "normalize",
    "parse_word",
    "recognize",
    "twist_matrix",
    "verify_hypotheses",
]
