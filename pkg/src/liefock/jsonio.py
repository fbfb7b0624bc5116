"""Deterministic JSON emission.

Key order follows dict insertion order (reports are built in a fixed order)
and floats are rendered with 17 significant digits, so identical inputs give
byte-identical output.
"""

import json
import math

import numpy as np


def _format_float(x: float) -> str:
    if math.isnan(x) or math.isinf(x):
        raise ValueError("non-finite float cannot be serialized")
    return format(x, ".17g")


def _emit(value, out: list) -> None:
    if value is None:
        out.append("null")
    elif value is True:
        out.append("true")
    elif value is False:
        out.append("false")
    elif isinstance(value, str):
        out.append(json.dumps(value))
    elif isinstance(value, (int, np.integer)):
        out.append(str(int(value)))
    elif isinstance(value, (float, np.floating)):
        out.append(_format_float(float(value)))
    elif isinstance(value, (list, tuple)):
        out.append("[")
        for pos, item in enumerate(value):
            if pos:
                out.append(",")
            _emit(item, out)
        out.append("]")
    elif isinstance(value, np.ndarray):
        _emit(value.tolist(), out)
    elif isinstance(value, dict):
        out.append("{")
        for pos, (key, item) in enumerate(value.items()):
            if pos:
                out.append(",")
            if not isinstance(key, str):
                raise TypeError(f"JSON object keys must be strings, got {type(key)}")
            out.append(json.dumps(key))
            out.append(":")
            _emit(item, out)
        out.append("}")
    else:
        raise TypeError(f"cannot serialize {type(value)} to JSON")


def dumps(value) -> str:
    out: list = []
    _emit(value, out)
    return "".join(out)


def complex_pair(z) -> list:
    z = complex(z)
    return [float(z.real), float(z.imag)]


def vector_pairs(vec) -> list:
    return [complex_pair(z) for z in np.asarray(vec, dtype=complex)]


def matrix_pairs(mat) -> list:
    return [vector_pairs(row) for row in np.asarray(mat, dtype=complex)]
