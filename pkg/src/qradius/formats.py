"""JSON vector/matrix files and number formatting used by the command line.

VectorFile::

    {"dim": n, "entries": [[re, im], ...]}

MatrixFile::

    {"n": n, "rows": [[[re, im], ...], ...], "gram": <optional, same shape as rows>}
"""
from __future__ import annotations

import json
import math

import numpy as np

__all__ = [
    "FormatError",
    "parse_complex_list",
    "load_vector",
    "load_matrix",
    "vector_doc",
    "matrix_doc",
    "dumps",
    "fmt_real",
]


class FormatError(ValueError):
    """A vector or matrix document is malformed."""


def _complex(item, where):
    if (not isinstance(item, (list, tuple)) or len(item) != 2
            or not all(isinstance(v, (int, float)) and not isinstance(v, bool) for v in item)):
        raise FormatError(f"{where}: expected [re, im], got {item!r}")
    re, im = float(item[0]), float(item[1])
    if not (math.isfinite(re) and math.isfinite(im)):
        raise FormatError(f"{where}: non-finite number")
    return complex(re, im)


def parse_complex_list(items, where="entries"):
    if not isinstance(items, list):
        raise FormatError(f"{where}: expected a list")
    return np.array([_complex(v, f"{where}[{i}]") for i, v in enumerate(items)], dtype=np.complex128)


def _parse_rows(rows, n, where):
    if not isinstance(rows, list) or len(rows) != n:
        raise FormatError(f"{where}: expected {n} rows")
    out = np.empty((n, n), dtype=np.complex128)
    for i, row in enumerate(rows):
        r = parse_complex_list(row, f"{where}[{i}]")
        if r.shape[0] != n:
            raise FormatError(f"{where}[{i}]: expected {n} entries, got {r.shape[0]}")
        out[i] = r
    return out


def _read(path):
    try:
        with open(path) as fh:
            doc = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise FormatError(f"{path}: {exc}") from None
    if not isinstance(doc, dict):
        raise FormatError(f"{path}: top level must be an object")
    return doc


def _size(doc, key, path):
    n = doc.get(key)
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise FormatError(f"{path}: '{key}' must be a positive integer")
    return n


def load_vector(path):
    doc = _read(path)
    dim = _size(doc, "dim", path)
    v = parse_complex_list(doc.get("entries"), f"{path}: entries")
    if v.shape[0] != dim:
        raise FormatError(f"{path}: dim is {dim} but {v.shape[0]} entries given")
    return v


def load_matrix(path):
    """Return ``(matrix, gram_or_None)`` from a MatrixFile."""
    doc = _read(path)
    n = _size(doc, "n", path)
    A = _parse_rows(doc.get("rows"), n, f"{path}: rows")
    G = _parse_rows(doc["gram"], n, f"{path}: gram") if "gram" in doc else None
    return A, G


def vector_doc(v):
    v = np.asarray(v, dtype=np.complex128)
    return {"dim": int(v.shape[0]), "entries": [[float(z.real), float(z.imag)] for z in v]}


def matrix_doc(A, gram=None):
    A = np.asarray(A, dtype=np.complex128)
    doc = {"n": int(A.shape[0]), "rows": [[[float(z.real), float(z.imag)] for z in row] for row in A]}
    if gram is not None:
        doc["gram"] = matrix_doc(gram)["rows"]
    return doc


def dumps(doc):
    # float repr is the shortest string that round-trips, at most 17 significant digits
    return json.dumps(doc, indent=2, allow_nan=False)


def fmt_real(x):
    """Shortest round-trip decimal for ``x``, with integral values written without ``.0``."""
    s = repr(float(x))
    if s.endswith(".0"):
        s = s[:-2]
    if s == "-0":
        s = "0"
    return s
