"""
Formats: JSON input and output for matrices and representation tuples
Entries travel as strings "p" or "p/q" so nothing is ever rounded
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import Annotated, Any

from pydantic import AfterValidator, BaseModel, ConfigDict, Field, ValidationError

from .errors import DimensionMismatch, DomainError, InputFormatError
from .exact_linalg import Matrix, format_scalar, parse_scalar
from .representation import RepresentationTuple


def _rational_literal(text: str) -> str:
    try:
        parse_scalar(text)
    except ZeroDivisionError:
        raise ValueError("zero denominator") from None
    return text


Entry = Annotated[str, AfterValidator(_rational_literal)]


class MatrixModel(BaseModel):
    model_config = ConfigDict(extra="forbid", strict=True)

    rows: int = Field(ge=0)
    cols: int = Field(ge=0)
    entries: list[list[Entry]]


class TupleModel(BaseModel):
    model_config = ConfigDict(extra="forbid", strict=True)

    g: int = Field(ge=1)
    m: int = Field(ge=2)
    matrices: list[MatrixModel]


def _path(loc: tuple[Any, ...], prefix: str = "") -> str:
    parts = [prefix] if prefix else []
    return ".".join(parts + [str(p) for p in loc])


def _validated(model: type[BaseModel], data: Any, prefix: str = "") -> Any:
    try:
        return model.model_validate(data)
    except ValidationError as exc:
        first = exc.errors()[0]
        raise InputFormatError(first["msg"], _path(first["loc"], prefix)) from exc


def _to_matrix(model: MatrixModel, prefix: str = "") -> Matrix:
    here = f"{prefix}." if prefix else ""
    if len(model.entries) != model.rows:
        raise InputFormatError(f"expected {model.rows} rows, got {len(model.entries)}", f"{here}entries")
    for r, row in enumerate(model.entries):
        if len(row) != model.cols:
            raise InputFormatError(f"expected {model.cols} entries, got {len(row)}", f"{here}entries.{r}")
    return Matrix.of([[parse_scalar(x) for x in row] for row in model.entries], cols=model.cols)


def matrix_from_json(data: Any) -> Matrix:
    return _to_matrix(_validated(MatrixModel, data))


def tuple_from_json(data: Any) -> RepresentationTuple:
    model = _validated(TupleModel, data)
    if len(model.matrices) != 2 * model.g:
        raise InputFormatError(f"expected {2 * model.g} matrices for g = {model.g}", "matrices")
    matrices = []
    for j, mat in enumerate(model.matrices):
        if (mat.rows, mat.cols) != (model.m, model.m):
            raise InputFormatError(f"expected a {model.m}x{model.m} matrix", f"matrices.{j}")
        matrices.append(_to_matrix(mat, f"matrices.{j}"))
    try:
        return RepresentationTuple(model.g, model.m, tuple(matrices))
    except (DimensionMismatch, DomainError) as exc:
        raise InputFormatError(str(exc), "matrices") from exc


def matrix_to_json(matrix: Matrix) -> dict[str, Any]:
    return {
        "rows": matrix.rows,
        "cols": matrix.cols,
        "entries": [[format_scalar(x) for x in row] for row in matrix.entries],
    }


def tuple_to_json(t: RepresentationTuple) -> dict[str, Any]:
    return {"g": t.g, "m": t.m, "matrices": [matrix_to_json(x) for x in t.matrices]}


def load_json(path: str | Path) -> Any:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise InputFormatError(f"cannot read {path}: {exc.strerror}") from exc
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputFormatError(f"invalid JSON at line {exc.lineno} column {exc.colno}: {exc.msg}") from exc


def read_matrix(path: str | Path) -> Matrix:
    return matrix_from_json(load_json(path))


def read_tuple(path: str | Path) -> RepresentationTuple:
    return tuple_from_json(load_json(path))


def dumps(data: Any) -> str:
    return json.dumps(data, indent=2)
