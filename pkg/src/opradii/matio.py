"""Matrix file I/O.

The interchange format is JSON with explicit shape and entries as [re, im]
pairs:

    {"rows": 2, "cols": 2, "data": [[[0.0, 0.0], [1.0, 0.0]],
                                    [[0.0, 0.0], [0.0, 0.0]]]}

Kept deliberately dumb so that files are diffable and writable by hand.
Validation errors name the offending field.
"""

from __future__ import annotations

import json
import os
import tempfile

import numpy as np

from .linalg import as_matrix

__all__ = ["matrix_to_obj", "matrix_from_obj", "load_matrix", "save_matrix"]


def matrix_to_obj(M: np.ndarray) -> dict:
    M = as_matrix(M, square=False, name="matrix")
    rows, cols = M.shape
    data = [[[float(M[i, j].real), float(M[i, j].imag)] for j in range(cols)] for i in range(rows)]
    return {"rows": rows, "cols": cols, "data": data}


def _expect_int(obj: dict, field: str) -> int:
    if field not in obj:
        raise ValueError(f"field {field!r}: missing")
    v = obj[field]
    if isinstance(v, bool) or not isinstance(v, int):
        raise ValueError(f"field {field!r}: expected an integer, got {type(v).__name__}")
    if v < 1:
        raise ValueError(f"field {field!r}: must be positive, got {v}")
    return v


def matrix_from_obj(obj, name: str = "matrix") -> np.ndarray:
    if not isinstance(obj, dict):
        raise ValueError(f"{name}: expected a JSON object, got {type(obj).__name__}")
    rows = _expect_int(obj, "rows")
    cols = _expect_int(obj, "cols")
    if "data" not in obj:
        raise ValueError("field 'data': missing")
    data = obj["data"]
    if not isinstance(data, list) or len(data) != rows:
        raise ValueError(f"field 'data': expected {rows} rows, got {len(data) if isinstance(data, list) else type(data).__name__}")
    M = np.zeros((rows, cols), dtype=np.complex128)
    for i, row in enumerate(data):
        if not isinstance(row, list) or len(row) != cols:
            raise ValueError(f"field 'data'[{i}]: expected {cols} entries")
        for j, entry in enumerate(row):
            if (
                not isinstance(entry, list)
                or len(entry) != 2
                or any(isinstance(x, bool) or not isinstance(x, (int, float)) for x in entry)
            ):
                raise ValueError(f"field 'data'[{i}][{j}]: expected a [re, im] pair of numbers")
            M[i, j] = complex(entry[0], entry[1])
    if not np.all(np.isfinite(M)):
        raise ValueError("field 'data': entries must be finite")
    return M


def load_matrix(path: str) -> np.ndarray:
    with open(path, "r", encoding="utf-8") as fh:
        try:
            obj = json.load(fh)
        except json.JSONDecodeError as exc:
            raise ValueError(f"{path}: not valid JSON ({exc})") from None
    return matrix_from_obj(obj, name=path)


def save_matrix(path: str, M: np.ndarray) -> None:
    text = json.dumps(matrix_to_obj(M), indent=2) + "\n"
    directory = os.path.dirname(os.path.abspath(path))
    fd, tmp = tempfile.mkstemp(dir=directory, prefix=".matrix-", suffix=".tmp")
    try:
        with os.fdopen(fd, "w", encoding="utf-8") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise
