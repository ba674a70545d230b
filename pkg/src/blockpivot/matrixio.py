"""Matrix file format: a single JSON document per matrix.

Layout: an object with keys ``field`` ("real" or "complex"), ``n1``,
``n2`` (the block partition), and ``entries`` — the (n1+n2)^2 entries in
row-major order.  Real files store plain numbers; complex files store
two-element [re, im] arrays.  Numbers are serialized with Python's
shortest round-trip decimal representation, so parse(print(M)) is
bitwise exact.  Non-finite values are rejected in both directions.
"""

from __future__ import annotations

import json
import math
from pathlib import Path

import numpy as np

from .blockmat import BlockMatrix
from .errors import InvalidInputError

__all__ = [
    "matrix_to_json",
    "matrix_from_json",
    "save_matrix",
    "load_matrix",
    "vector_from_json",
]


def matrix_to_json(bm: BlockMatrix) -> str:
    """Serialize a BlockMatrix to its JSON document."""
    flat = bm.data.reshape(-1)
    if bm.field_tag == "complex":
        entries = [[float(z.real), float(z.imag)] for z in flat]
    else:
        entries = [float(x) for x in flat]
    doc = {"field": bm.field_tag, "n1": bm.n1, "n2": bm.n2, "entries": entries}
    return json.dumps(doc, allow_nan=False)


def _reject_constant(name: str):
    raise InvalidInputError(f"entries contain the non-finite value {name}")


def _parse_document(text: str) -> dict:
    try:
        doc = json.loads(text, parse_constant=_reject_constant)
    except json.JSONDecodeError as exc:
        raise InvalidInputError(f"not a valid matrix document: {exc}") from exc
    if not isinstance(doc, dict):
        raise InvalidInputError("matrix document must be a JSON object")
    return doc


def _parse_count(doc: dict, key: str) -> int:
    if key not in doc:
        raise InvalidInputError(f"missing required key: {key}")
    value = doc[key]
    if isinstance(value, bool) or not isinstance(value, int) or value < 0:
        raise InvalidInputError(f"{key} must be a nonnegative integer, got {value!r}")
    return value


def _parse_real_scalar(value, where: str) -> float:
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise InvalidInputError(f"{where} must be a number, got {value!r}")
    out = float(value)
    if not math.isfinite(out):
        raise InvalidInputError(f"{where} is not finite")
    return out


def _parse_complex_scalar(value, where: str) -> complex:
    if isinstance(value, (int, float)) and not isinstance(value, bool):
        return complex(_parse_real_scalar(value, where), 0.0)
    if not (isinstance(value, list) and len(value) == 2):
        raise InvalidInputError(f"{where} must be a [re, im] pair, got {value!r}")
    return complex(
        _parse_real_scalar(value[0], f"{where}[0]"),
        _parse_real_scalar(value[1], f"{where}[1]"),
    )


def matrix_from_json(text: str) -> BlockMatrix:
    """Parse a matrix document; diagnostics name the offending field."""
    doc = _parse_document(text)
    if "field" not in doc:
        raise InvalidInputError("missing required key: field")
    field = doc["field"]
    if field not in ("real", "complex"):
        raise InvalidInputError(f"field must be 'real' or 'complex', got {field!r}")
    n1 = _parse_count(doc, "n1")
    n2 = _parse_count(doc, "n2")
    if "entries" not in doc:
        raise InvalidInputError("missing required key: entries")
    entries = doc["entries"]
    if not isinstance(entries, list):
        raise InvalidInputError("entries must be an array")
    n = n1 + n2
    if len(entries) != n * n:
        raise InvalidInputError(
            f"entries has length {len(entries)}, expected {n * n} for partition ({n1}, {n2})"
        )
    if field == "real":
        values = [_parse_real_scalar(v, f"entries[{i}]") for i, v in enumerate(entries)]
        data = np.array(values, dtype=np.float64).reshape(n, n)
    else:
        values = [_parse_complex_scalar(v, f"entries[{i}]") for i, v in enumerate(entries)]
        data = np.array(values, dtype=np.complex128).reshape(n, n)
    return BlockMatrix(n1, n2, data)


def save_matrix(bm: BlockMatrix, path) -> None:
    Path(path).write_text(matrix_to_json(bm) + "\n", encoding="utf-8")


def load_matrix(path) -> BlockMatrix:
    p = Path(path)
    if not p.exists():
        raise InvalidInputError(f"no such file: {p}")
    return matrix_from_json(p.read_text(encoding="utf-8"))


def vector_from_json(text: str, field: str, length: int, name: str = "vector") -> np.ndarray:
    """Parse a JSON array of scalars in the matrix entry encoding."""
    try:
        raw = json.loads(text, parse_constant=_reject_constant)
    except json.JSONDecodeError as exc:
        raise InvalidInputError(f"{name} is not a valid JSON array: {exc}") from exc
    if not isinstance(raw, list):
        raise InvalidInputError(f"{name} must be a JSON array")
    if len(raw) != length:
        raise InvalidInputError(f"{name} has length {len(raw)}, expected {length}")
    if field == "real":
        return np.array(
            [_parse_real_scalar(v, f"{name}[{i}]") for i, v in enumerate(raw)],
            dtype=np.float64,
        )
    return np.array(
        [_parse_complex_scalar(v, f"{name}[{i}]") for i, v in enumerate(raw)],
        dtype=np.complex128,
    )
