"""Single-mode statistical mechanics of a phase-interpolated gas.

Everything is per mode at dimensionless energy eta (energy times inverse
temperature).  The mean occupation

    f(eta, q) = 1 / (exp(eta) - q)

interpolates between the three classical cases q = 1, -1, 0.  Two
independent routes that reproduce it exactly:

  * the geometric series  sum_j q^j exp(-eta (j+1)),  convergent for
    |q| exp(-eta) < 1, whose terms alternate in sign at q = -1;

  * a finite ladder of k levels with bracket weights [n] and Boltzmann
    factors, whenever q is a k-th root of unity other than 1.  The q = 1
    point is excluded: there the cutoff ladder is a plain truncated boson
    and differs from the closed form, which the residual report shows.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from .errors import DivergenceError, SingularPointError
from .qcalc import QParams, qnumber


@dataclass(frozen=True)
class ModeSpec:
    """One mode: dimensionless energy eta, phase q, optional ladder cutoff k."""
    eta: float
    q: complex
    k: int | None = None

    def __post_init__(self):
        if self.k is not None and self.k < 2:
            raise ValueError("ladder cutoff k must be >= 2")
        if self.k is None and self.eta <= 0:
            raise ValueError("the infinite ladder needs eta > 0")


def partition_mode(spec: ModeSpec) -> float:
    """Geometric partition sum over the ladder levels."""
    x = math.exp(-spec.eta)
    if spec.k is None:
        return 1 / (1 - x)
    if abs(1 - x) < 1e-15:
        return float(spec.k)
    return (1 - x ** spec.k) / (1 - x)


def occupation(spec: ModeSpec) -> complex:
    """Closed-form mean occupation 1 / (exp(eta) - q)."""
    den = math.exp(spec.eta) - complex(spec.q)
    if abs(den) < 1e-14:
        raise SingularPointError("exp(eta) equals q; occupation diverges")
    return 1 / den


class FiniteSumResult(NamedTuple):
    value: complex
    closed_form: complex
    residual: float


def occupation_finite_sum(spec: ModeSpec) -> FiniteSumResult:
    """Mean bracket value over the k-level ladder, compared to the closed form.

    The residual vanishes identically when q^k = 1 with q != 1; otherwise it
    reports how far the truncated ladder sits from the closed form.
    """
    if spec.k is None:
        raise ValueError("finite sum needs a ladder cutoff k")
    x = math.exp(-spec.eta)
    params = QParams.one_param(spec.q)
    z = partition_mode(spec)
    total = sum(qnumber(n, params) * x ** n for n in range(spec.k)) / z
    closed = occupation(spec)
    return FiniteSumResult(complex(total), complex(closed), abs(total - closed))


class SeriesResult(NamedTuple):
    value: complex
    tail_bound: float


def occupation_series(spec: ModeSpec, trunc: int = 500) -> SeriesResult:
    """Mean occupation as the geometric series sum_j q^j exp(-eta (j+1))."""
    x = math.exp(-spec.eta)
    ratio = abs(complex(spec.q)) * x
    if ratio >= 1:
        raise DivergenceError(f"|q| exp(-eta) = {ratio:.6g} >= 1; series diverges")
    q = complex(spec.q)
    total = 0j
    term = x
    for _ in range(trunc):
        total += term
        term *= q * x
        if abs(term) < 1e-18:
            break
    tail = abs(term) / (1 - ratio)
    return SeriesResult(total, float(tail))


def gas_scan(etas, q, k: int = None) -> np.ndarray:
    """Rows (eta, partition sum, occupation) over an energy grid."""
    out = np.zeros((len(etas), 3), dtype=complex)
    for row, eta in enumerate(etas):
        spec = ModeSpec(float(eta), complex(q), k)
        out[row] = (eta, partition_mode(spec), occupation(spec))
    return out
