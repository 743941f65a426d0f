"""JSON file formats and DOT emission.

Two file kinds. An order file is either an explicit matrix or a cyclic
weight vector:

    {"kind": "matrix", "m": [[0, 1], [1, 0]]}
    {"kind": "cyclic", "weights": [1, 1, 1, 1]}

An equivariant-data file carries the matrix, the twist vector and the
permutation images:

    {"m": [[...], ...], "a": [...], "nu": [...]}

Emission is canonical (fixed key order, one matrix row per line) so that
re-emitting a parsed file reproduces it byte for byte.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path
from typing import Optional, Sequence

from .conjugation import EquivariantData, equivariant_data
from .errors import InputFileError
from .gorenstein import cyclic_order
from .orders import ExponentMatrix, Permutation, Vector
from .tilting import Quiver


def _as_int(value, what: str) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise InputFileError(f"{what} must be an integer, got {value!r}")
    return value


def _as_int_vector(value, what: str) -> tuple[int, ...]:
    if not isinstance(value, list) or not value:
        raise InputFileError(f"{what} must be a non-empty list of integers")
    return tuple(_as_int(x, what) for x in value)


def _as_int_matrix(value, what: str) -> tuple[tuple[int, ...], ...]:
    if not isinstance(value, list) or not value:
        raise InputFileError(f"{what} must be a non-empty list of rows")
    return tuple(_as_int_vector(row, f"{what} row") for row in value)


@dataclass(frozen=True)
class OrderSource:
    """Parsed order file: an explicit matrix or a cyclic weight vector."""

    kind: str
    matrix: Optional[tuple[tuple[int, ...], ...]] = None
    weights: Optional[tuple[int, ...]] = None


def _load_json(path) -> dict:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise InputFileError(f"cannot read {path}: {exc}") from exc
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputFileError(f"{path} is not valid JSON: {exc}") from exc
    if not isinstance(data, dict):
        raise InputFileError(f"{path} must hold a JSON object")
    return data


def read_order_file(path) -> OrderSource:
    data = _load_json(path)
    kind = data.get("kind")
    if kind == "matrix":
        if "m" not in data:
            raise InputFileError('kind "matrix" requires field "m"')
        matrix = _as_int_matrix(data["m"], '"m"')
        if any(len(row) != len(matrix) for row in matrix):
            raise InputFileError('"m" must be square')
        return OrderSource(kind="matrix", matrix=matrix)
    if kind == "cyclic":
        if "weights" not in data:
            raise InputFileError('kind "cyclic" requires field "weights"')
        weights = _as_int_vector(data["weights"], '"weights"')
        if any(x < 0 for x in weights):
            raise InputFileError('"weights" must be non-negative')
        return OrderSource(kind="cyclic", weights=weights)
    raise InputFileError('field "kind" must be "matrix" or "cyclic"')


def order_matrix(source: OrderSource) -> ExponentMatrix:
    """The exponent matrix of a parsed order file (may raise DomainError)."""
    if source.kind == "cyclic":
        m, _ = cyclic_order(source.weights)
        return m
    return ExponentMatrix.from_rows(source.matrix)


def _matrix_lines(rows: Sequence[Sequence[int]]) -> list[str]:
    body = [f"    {json.dumps(list(row))}" for row in rows]
    return ["  [", ",\n".join(body), "  ]"]


def order_file_text(source: OrderSource) -> str:
    if source.kind == "cyclic":
        return (
            "{\n"
            '  "kind": "cyclic",\n'
            f'  "weights": {json.dumps(list(source.weights))}\n'
            "}\n"
        )
    open_, body, close = _matrix_lines(source.matrix)
    return f'{{\n  "kind": "matrix",\n  "m":\n{open_}\n{body}\n{close}\n}}\n'


def write_order_file(path, source: OrderSource) -> None:
    Path(path).write_text(order_file_text(source))


def read_equivariant_file(path) -> EquivariantData:
    """Parse and validate an equivariant-data file (schema errors -> InputFileError)."""
    data = _load_json(path)
    for field in ("m", "a", "nu"):
        if field not in data:
            raise InputFileError(f'missing field "{field}"')
    matrix = _as_int_matrix(data["m"], '"m"')
    twist = _as_int_vector(data["a"], '"a"')
    images = _as_int_vector(data["nu"], '"nu"')
    n = len(matrix)
    if any(len(row) != n for row in matrix):
        raise InputFileError('"m" must be square')
    if len(twist) != n or len(images) != n:
        raise InputFileError('"a" and "nu" must match the matrix size')
    if sorted(images) != list(range(n)):
        raise InputFileError('"nu" must be a bijection of 0..n-1')
    return equivariant_data(matrix, twist, Permutation(images))


def equivariant_file_text(ed: EquivariantData) -> str:
    open_, body, close = _matrix_lines(ed.matrix)
    return (
        "{\n"
        f'  "m":\n{open_}\n{body}\n{close},\n'
        f'  "a": {json.dumps(list(ed.twist))},\n'
        f'  "nu": {json.dumps(list(ed.perm.images))}\n'
        "}\n"
    )


def write_equivariant_file(path, ed: EquivariantData) -> None:
    Path(path).write_text(equivariant_file_text(ed))


def vector_label(vec: Vector) -> str:
    """Node label for an exponent vector; the zero vector is plain "0"."""
    if all(x == 0 for x in vec):
        return "0"
    return "(" + ",".join(str(x) for x in vec) + ")"


def quiver_dot(q: Quiver) -> str:
    """Deterministic DOT text: vertices then arrows, in their sorted order."""
    lines = ["digraph hasse {"]
    lines.extend(f'  "{vector_label(v)}";' for v in q.vertices)
    lines.extend(
        f'  "{vector_label(a)}" -> "{vector_label(b)}";' for a, b in q.arrows
    )
    lines.append("}")
    return "\n".join(lines) + "\n"


def rational_str(x: Fraction) -> str:
    """Exact rational rendering: "num/den", or just "num" for integers."""
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"
