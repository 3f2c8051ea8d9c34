"""Deterministic text encodings for CLI payloads.

Complex scalars travel as "re+imi" strings (an accepted spelling uses j),
matrices as nested [re, im] pairs, and JSON documents with sorted keys so
identical runs produce identical bytes.
"""

from __future__ import annotations

import json

import numpy as np


def parse_complex(text: str) -> complex:
    """Read a complex literal, allowing either i or j for the unit."""
    cleaned = str(text).strip().replace(" ", "")
    cleaned = cleaned.replace("i", "j").replace("I", "j").replace("J", "j")
    try:
        return complex(cleaned)
    except ValueError as exc:
        raise ValueError(f"not a complex literal: {text!r}") from exc


def format_complex(z) -> str:
    z = complex(z)
    return "%.12g%+.12gi" % (z.real, z.imag)


def format_real(x) -> float:
    """Round-trip-safe float for JSON payloads."""
    return float(x)


def matrix_to_json(matrix) -> list:
    arr = np.asarray(matrix, dtype=complex)
    if arr.ndim != 2:
        raise ValueError("expected a 2-d matrix")
    return [[[float(v.real), float(v.imag)] for v in row] for row in arr]


def matrix_from_json(data) -> np.ndarray:
    arr = np.array([[complex(re, im) for re, im in row] for row in data])
    return arr


def dump_json(payload) -> str:
    return json.dumps(payload, sort_keys=True, indent=2) + "\n"


def parse_grid(text: str) -> np.ndarray:
    """Read "start:stop:step" into an inclusive grid."""
    parts = str(text).split(":")
    if len(parts) != 3:
        raise ValueError(f"grid must be start:stop:step, got {text!r}")
    start, stop, step = (float(p) for p in parts)
    if step <= 0:
        raise ValueError("grid step must be positive")
    count = int(np.floor((stop - start) / step + 1e-9)) + 1
    if count < 1:
        raise ValueError("empty grid")
    return start + step * np.arange(count)
