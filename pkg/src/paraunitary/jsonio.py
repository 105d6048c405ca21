"""JSON wire formats and canonical serialization.

Payloads are plain dicts/lists of Python scalars.  ``canonical_dumps``
emits byte-stable output: object keys sorted, floats at a fixed 17
significant digits, no whitespace.
"""

from __future__ import annotations

import json

import numpy as np

from .laurent import LaurentOp
from .numfield import InputError, Subspace, as_matrix, orthonormal_basis
from .ppu import FactorList
from .star_algebra import StarAlgebra, generate_algebra


def canonical_dumps(obj) -> str:
    parts: list[str] = []
    _emit(obj, parts)
    return "".join(parts)


def _emit(obj, parts: list[str]) -> None:
    if isinstance(obj, bool) or isinstance(obj, np.bool_):
        parts.append("true" if obj else "false")
    elif isinstance(obj, (int, np.integer)):
        parts.append(str(int(obj)))
    elif isinstance(obj, (float, np.floating)):
        v = float(obj)
        if not np.isfinite(v):
            raise InputError("non-finite float in JSON payload")
        parts.append(format(v, ".17g"))
    elif isinstance(obj, str):
        parts.append(json.dumps(obj))
    elif obj is None:
        parts.append("null")
    elif isinstance(obj, dict):
        parts.append("{")
        for i, key in enumerate(sorted(obj)):
            if not isinstance(key, str):
                raise InputError("JSON object keys must be strings")
            if i:
                parts.append(",")
            parts.append(json.dumps(key))
            parts.append(":")
            _emit(obj[key], parts)
        parts.append("}")
    elif isinstance(obj, (list, tuple)):
        parts.append("[")
        for i, item in enumerate(obj):
            if i:
                parts.append(",")
            _emit(item, parts)
        parts.append("]")
    else:
        raise InputError(f"cannot serialize {type(obj).__name__}")


def matrix_to_json(m) -> dict:
    a = as_matrix(m)
    return {
        "rows": a.shape[0],
        "cols": a.shape[1],
        "data": [
            [[float(x.real), float(x.imag)] for x in row] for row in a
        ],
    }


def matrix_from_json(obj) -> np.ndarray:
    try:
        rows, cols, data = int(obj["rows"]), int(obj["cols"]), obj["data"]
    except (TypeError, KeyError) as exc:
        raise InputError("matrix JSON needs rows, cols, data") from exc
    if rows < 0 or cols < 0 or len(data) != rows:
        raise InputError("matrix JSON shape mismatch")
    out = np.zeros((rows, cols), dtype=np.complex128)
    for i, row in enumerate(data):
        if len(row) != cols:
            raise InputError("matrix JSON shape mismatch")
        for j, entry in enumerate(row):
            re, im = entry
            out[i, j] = complex(float(re), float(im))
    return as_matrix(out)


def subspace_to_json(s: Subspace) -> dict:
    return matrix_to_json(s.frame)


def subspace_from_json(obj) -> Subspace:
    """Columns are a spanning set; they are orthonormalized on load."""
    return orthonormal_basis(matrix_from_json(obj))


def algebra_to_json(a: StarAlgebra) -> dict:
    return {"dim": a.dim, "generators": [matrix_to_json(g) for g in a.generators]}


def algebra_from_json(obj) -> StarAlgebra:
    try:
        dim, gens = int(obj["dim"]), obj["generators"]
    except (TypeError, KeyError) as exc:
        raise InputError("algebra JSON needs dim and generators") from exc
    if dim < 1:
        raise InputError("algebra dimension must be positive")
    return generate_algebra(dim, [matrix_from_json(g) for g in gens])


def laurent_to_json(op: LaurentOp) -> dict:
    return {
        "dim": op.dim,
        "coeffs": {str(e): matrix_to_json(c) for e, c in op.coeffs.items()},
    }


def laurent_from_json(obj) -> LaurentOp:
    try:
        dim, coeffs = int(obj["dim"]), obj["coeffs"]
    except (TypeError, KeyError) as exc:
        raise InputError("Laurent JSON needs dim and coeffs") from exc
    parsed = {}
    for key, mat in coeffs.items():
        try:
            e = int(key)
        except ValueError as exc:
            raise InputError(f"bad exponent key {key!r}") from exc
        parsed[e] = matrix_from_json(mat)
    return LaurentOp(dim, parsed)


def factor_list_to_json(fl: FactorList) -> dict:
    return {
        "shift": fl.shift,
        "factors": [subspace_to_json(m.subspace) for m in fl.factors],
    }
