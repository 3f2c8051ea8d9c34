"""Deformed coherent states, overlaps and resolution-of-identity checks.

A coherent state collects the lowering-operator eigenvector coefficients

    |z>  ~  sum_n  z^n / sqrt([n]!)  |n>,

truncated where the coefficients drop below a tail tolerance.  Truncation is
the only approximation: on every level except the last the eigenvalue
equation holds to machine precision, and the boundary defect is exactly the
amplitude stranded on the top level.

Squared norms and overlaps sum to the absolute-bracket exponential series,
so normalizability requires |z|^2 inside that series' convergence radius.

The resolution of identity over the complex plane reduces, after the angular
integral kills all off-diagonal matrix elements, to the moment problem

    integral_0^R  x^n  w(x) dx  =  [n]!

which the geometric-grid integral solves exactly when the reciprocal
exponential weight is sampled one grid step inward (w(x) dx mapped to the
atom masses (1-q) x_k w(q x_k)).  Sampling on the grid itself scales every
moment by q^(n+1), a failure mode kept accessible for comparison.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.integrate import quad

from .errors import ConventionError, DegenerateParameterError, DivergenceError, TruncationError
from .fock import FockRep
from .qcalc import (
    QParams,
    Scheme,
    convergence_radius,
    jackson_integral,
    qexp_reciprocal,
    qexp_terms,
    qfactorial,
    qnumber,
)

MAX_LEVELS = 200


@dataclass(frozen=True)
class CoherentState:
    params: QParams
    z: complex
    coeffs: np.ndarray
    dim: int
    norm_sq: float
    tail_bound: float
    normalized: bool


def build_cs(params: QParams, z, dim: int = None, normalize: bool = False,
             tail_tol: float = 1e-12) -> CoherentState:
    """Coherent state at z, truncated automatically unless dim is forced."""
    z = complex(z)
    radius = convergence_radius(params)
    if abs(z) ** 2 >= radius:
        raise DivergenceError(
            f"|z|^2 = {abs(z) ** 2:.6g} outside the normalizability radius {radius:.6g}")
    coeffs = [1 + 0j]
    n = 0
    while True:
        n += 1
        if dim is not None:
            if n >= dim:
                break
        elif abs(coeffs[-1]) ** 2 <= tail_tol and n >= 2:
            break
        elif n >= MAX_LEVELS:
            raise TruncationError(
                f"coefficients still {abs(coeffs[-1]) ** 2:.3e} after {MAX_LEVELS} levels")
        b = qnumber(n, params)
        if b == 0:
            # bracket hit zero: the ladder ends here on its own
            coeffs.extend([0j] * ((dim or n + 1) - n))
            break
        coeffs.append(coeffs[-1] * z / np.sqrt(complex(b)))
    coeffs = np.array(coeffs[:dim] if dim else coeffs, dtype=complex)
    norm_sq = float(np.sum(np.abs(coeffs) ** 2))
    d = coeffs.size
    top = abs(coeffs[-1])
    tail_bound = float(top * (math.sqrt(abs(qnumber(d - 1, params))) + abs(z)))
    if normalize:
        coeffs = coeffs / math.sqrt(norm_sq)
        tail_bound /= math.sqrt(norm_sq)
    coeffs.setflags(write=False)
    return CoherentState(params, z, coeffs, d, norm_sq, tail_bound, normalize)


def eigenstate_residual(cs: CoherentState, rep: FockRep,
                        include_boundary: bool = False) -> float:
    """Max entry of (a - z) applied to the state.

    Without the boundary the residual is pure floating-point noise; with it
    the truncation defect |z c_top| shows up on the last level.
    """
    if rep.dim != cs.dim:
        raise ConventionError("representation and state have different level counts")
    if rep.params != cs.params:
        raise ConventionError("representation and state use different parameters")
    r = rep.a @ cs.coeffs - cs.z * cs.coeffs
    if not include_boundary:
        r = r[:cs.dim - 1]
    return float(np.max(np.abs(r)))


def overlap(cs1: CoherentState, cs2: CoherentState) -> complex:
    """Inner product <z1|z2>; equals the absolute-bracket exponential at z1* z2."""
    if cs1.params != cs2.params:
        raise ConventionError("states use different parameters")
    n = min(cs1.dim, cs2.dim)
    return complex(np.vdot(cs1.coeffs[:n], cs2.coeffs[:n]))


def overlap_series(cs1: CoherentState, cs2: CoherentState) -> complex:
    """Closed-form overlap through the exponential series, for cross-checks."""
    if cs1.params != cs2.params:
        raise ConventionError("states use different parameters")
    val, _ = qexp_terms(np.conj(cs1.z) * cs2.z, cs1.params, variant="type2",
                        trunc=max(cs1.dim, cs2.dim) + 50)
    scale = 1.0
    if cs1.normalized:
        scale /= math.sqrt(cs1.norm_sq)
    if cs2.normalized:
        scale /= math.sqrt(cs2.norm_sq)
    return complex(val) * scale


def _require_sub_unit_q(params):
    if params.scheme is not Scheme.ONE_PARAM:
        raise DegenerateParameterError("the geometric-grid identity needs the one-param scheme")
    q = complex(params.q)
    if abs(q.imag) > 1e-14 or not 0 < q.real < 1:
        raise DegenerateParameterError("the geometric-grid identity needs 0 < q < 1")
    return q.real


def resolution_check_jackson(params: QParams, levels: int = 12,
                             shifted: bool = True) -> np.ndarray:
    """Matrix of the identity resolution over coherent projectors.

    Off-diagonal entries vanish in the angular integral and are reported as
    exact zeros; each diagonal entry is the n-th geometric-grid moment of
    the reciprocal exponential weight over [n]!, which is one when the
    weight is sampled one grid step inward.  shifted=False samples on the
    grid itself and exposes the systematic q^(n+1) defect.
    """
    q = _require_sub_unit_q(params)
    a = 1 / (1 - q)
    m = np.zeros((levels, levels), dtype=complex)
    for n in range(levels):
        arg = (lambda x: x ** n * qexp_reciprocal(q * x, q)) if shifted else \
              (lambda x: x ** n * qexp_reciprocal(x, q))
        mom = jackson_integral(arg, a, q, tol=1e-14)
        m[n, n] = mom / qfactorial(n, params)
    return m


def jackson_atoms(params: QParams, tol: float = 1e-18):
    """Positions and masses of the discrete moment measure, sum m_k x_k^n = [n]!."""
    q = _require_sub_unit_q(params)
    a = 1 / (1 - q)
    xs, ms = [], []
    x = a
    for _ in range(2000):
        mass = (1 - q) * x * qexp_reciprocal(q * x, q).real
        xs.append(x)
        ms.append(mass)
        if mass < tol and len(ms) > 3:
            break
        x *= q
    return np.array(xs), np.array(ms)


def weight_moment_check(params: QParams, weight=None, n_max: int = 8,
                        upper: float = None, atoms=None) -> np.ndarray:
    """Residuals |moment_n - |[n]|!| of a candidate resolution weight.

    Either a continuum density (integrated with quad against pi x^n) or a
    discrete atom measure (xs, masses) may be supplied.
    """
    if (weight is None) == (atoms is None):
        raise ValueError("supply exactly one of weight or atoms")
    out = np.zeros(n_max + 1)
    for n in range(n_max + 1):
        target = abs(qfactorial(n, params))
        if atoms is not None:
            xs, ms = atoms
            mom = float(np.sum(ms * np.asarray(xs) ** n))
        else:
            hi = upper
            if hi is None:
                r = convergence_radius(params)
                hi = r if math.isfinite(r) else np.inf
            mom, _ = quad(lambda x: math.pi * weight(x) * x ** n, 0, hi)
        out[n] = abs(mom - target)
    return out


def weight_series(params: QParams, y, trunc: int = 200):
    """Formal series reconstruction of the weight transform at y.

    Returns the partial sum of |[n]|! (iy)^n / (pi n!) and a flag telling
    whether the term ratios indicate convergence.
    """
    y = complex(y)
    total = 0j
    term = 1 / math.pi + 0j
    ratios = []
    prev = abs(term)
    for n in range(trunc):
        total += term
        b = abs(qnumber(n + 1, params))
        term = term * b * 1j * y / (n + 1)
        cur = abs(term)
        if prev > 0:
            ratios.append(cur / prev)
        prev = cur
    converged = bool(ratios and ratios[-1] < 1 and abs(term) < 1e-10 * max(1.0, abs(total)))
    return total, converged
