"""
Errors: one hierarchy for every failure the toolkit reports
Callers catch ToolkitError; the CLI maps it onto exit code 2 (or 1 for failed checks)
"""

from __future__ import annotations

from typing import Any


class ToolkitError(Exception):
    """Base class for all toolkit errors"""


class DimensionMismatch(ToolkitError, ValueError):
    """Shapes, ambient dimensions or genera disagree"""


class DomainError(ToolkitError, ValueError):
    """An argument lies outside its declared range"""


class SingularMatrixError(ToolkitError, ZeroDivisionError):
    """An inverse was requested of a singular matrix"""


class HypothesisViolation(ToolkitError):
    """A representation tuple does not satisfy the normalization hypotheses"""

    def __init__(self, clause: str, report: Any = None):
        super().__init__(f"hypothesis violated: {clause}")
        self.clause = clause
        self.report = report


class DegenerateStep(ToolkitError):
    """A condition guaranteed for genuine twist images failed during normalization"""

    def __init__(self, step: int, condition: str):
        super().__init__(f"degenerate step k={step}: {condition}")
        self.step = step
        self.condition = condition


class WordSyntaxError(ToolkitError, ValueError):
    """A twist word could not be parsed"""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (at byte {offset})")
        self.offset = offset


class InputFormatError(ToolkitError, ValueError):
    """Malformed JSON or matrix literal; `path` names the offending field"""

    def __init__(self, message: str, path: str = ""):
        super().__init__(f"{path}: {message}" if path else message)
        self.path = path
