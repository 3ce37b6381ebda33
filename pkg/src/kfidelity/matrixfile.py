"""JSON matrix interchange: ``{"dim": d, "re": [[...]], "im": [[...]]}``."""
from __future__ import annotations

import json
import math
from pathlib import Path

import numpy as np


class MatrixFileError(ValueError):
    """Malformed matrix file."""


def matrix_to_dict(M) -> dict:
    M = np.asarray(M, dtype=complex)
    return {"dim": int(M.shape[0]), "re": M.real.tolist(), "im": M.imag.tolist()}


def matrix_from_dict(obj) -> np.ndarray:
    if not isinstance(obj, dict):
        raise MatrixFileError("top level must be an object")
    try:
        d, re = obj["dim"], obj["re"]
    except KeyError as e:
        raise MatrixFileError(f"missing key {e}") from None
    im = obj.get("im")
    if not isinstance(d, int) or isinstance(d, bool) or d < 1:
        raise MatrixFileError(f"'dim' must be a positive integer, got {d!r}")
    parts = []
    for name, rows in (("re", re), ("im", im if im is not None else [[0.0] * d] * d)):
        if not isinstance(rows, list) or len(rows) != d:
            raise MatrixFileError(f"'{name}' must have {d} rows")
        for row in rows:
            if not isinstance(row, list) or len(row) != d:
                raise MatrixFileError(f"'{name}' rows must have {d} entries")
            for x in row:
                if isinstance(x, bool) or not isinstance(x, (int, float)) or not math.isfinite(x):
                    raise MatrixFileError(f"'{name}' has a non-finite or non-numeric entry {x!r}")
        parts.append(np.array(rows, dtype=float))
    return parts[0] + 1j * parts[1]


def read_matrix(path) -> np.ndarray:
    try:
        text = Path(path).read_text()
    except OSError as e:
        raise MatrixFileError(f"cannot read {path}: {e.strerror}") from None
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as e:
        raise MatrixFileError(f"{path}: invalid JSON ({e.msg})") from None
    return matrix_from_dict(obj)


def dumps_matrix(M) -> str:
    return json.dumps(matrix_to_dict(M))


def write_matrix(path, M) -> None:
    Path(path).write_text(dumps_matrix(M) + "\n")
