"""Bracket arithmetic and deformed special functions.

Three bracket schemes are supported.  For a nonnegative integer n,

    one-param   [n] = (1 - q^n) / (1 - q)           [n+1] - q [n] = 1
    two-param   [n] = (q^n - p^-n) / (q - p^-1)     [n+1] - q [n] = p^-n
    symmetric   [n] = (q^n - q^-n) / (q - q^-1)     [n+1] - q [n] = q^-n

Each closed form degenerates when its denominator vanishes; in that case the
equivalent finite geometric sum is used, so integer brackets are defined for
every parameter value except p = 0 (two-param) and q = 0 (symmetric).
Within 1e-12 of q = 1 (and p = 1) the undeformed value n is returned directly
to avoid catastrophic cancellation.

On top of the brackets the module provides bracket factorials, the two
deformed exponential series (denominators [n]! and |[n]|!), the related
infinite-product representation, the q-difference quotient and the Jackson
integral with its exponential-weight moments.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from enum import Enum

from .errors import (
    DegenerateParameterError,
    DivergenceError,
    NonConvergenceError,
    SingularPointError,
    TruncationError,
)

DEFAULT_TOL = 1e-10

# closed forms switch to the undeformed/limit value inside this window
_LIMIT_WINDOW = 1e-12


class Scheme(Enum):
    ONE_PARAM = "one-param"
    TWO_PARAM = "two-param"
    SYMMETRIC = "symmetric"


@dataclass(frozen=True)
class QParams:
    """Deformation parameter pack: scheme, q, optional second parameter p, optional root order k.

    When ``k`` is given the deformation parameter is pinned to the primitive
    root of unity q = exp(2*pi*i/k).
    """

    scheme: Scheme
    q: complex
    p: complex | None = None
    k: int | None = None

    def __post_init__(self):
        if self.scheme is Scheme.TWO_PARAM:
            if self.p is None:
                raise DegenerateParameterError("two-param scheme needs p")
            if self.p == 0:
                raise DegenerateParameterError("p = 0 has no inverse")
        elif self.p is not None:
            raise DegenerateParameterError(f"{self.scheme.value} scheme takes no p")
        if self.k is not None:
            if self.k < 2:
                raise DegenerateParameterError("root order k must be >= 2")
            if abs(self.q ** self.k - 1) > 1e-9 or abs(abs(self.q) - 1) > 1e-9:
                raise DegenerateParameterError("k set but q is not the matching root of unity")

    @classmethod
    def one_param(cls, q) -> "QParams":
        return cls(Scheme.ONE_PARAM, complex(q))

    @classmethod
    def two_param(cls, q, p) -> "QParams":
        return cls(Scheme.TWO_PARAM, complex(q), complex(p))

    @classmethod
    def symmetric(cls, q) -> "QParams":
        return cls(Scheme.SYMMETRIC, complex(q))

    @classmethod
    def root_of_unity(cls, k: int, scheme: Scheme = Scheme.SYMMETRIC) -> "QParams":
        q = cmath.exp(2j * cmath.pi / k)
        if scheme is Scheme.TWO_PARAM:
            raise DegenerateParameterError("root_of_unity supports one-param and symmetric schemes")
        return cls(scheme, q, None, k)


def qnumber(n: int, params: QParams, heading_variant: bool = False) -> complex:
    """Bracket [n] of a nonnegative integer under the given scheme.

    ``heading_variant`` selects the alternative two-param numerator
    q^n - p^n instead of q^n - p^-n; it exists only for comparison and is
    rejected for the other schemes.
    """
    if n < 0 or n != int(n):
        raise ValueError("bracket argument must be a nonnegative integer")
    n = int(n)
    q = complex(params.q)
    if heading_variant:
        if params.scheme is not Scheme.TWO_PARAM:
            raise DegenerateParameterError("heading variant is defined for the two-param scheme only")
        p = complex(params.p)
        den = q - 1 / p
        if abs(den) < _LIMIT_WINDOW:
            raise DegenerateParameterError("heading variant has no limit at q = 1/p")
        return (q ** n - p ** n) / den

    if params.k is not None:
        # exact arithmetic at the pinned root of unity: brackets are periodic
        # in n mod k and vanish identically where the numerator phase closes
        k = params.k
        r = n % k
        if params.scheme is Scheme.ONE_PARAM:
            if r == 0:
                return 0j
            return ((1 - cmath.exp(2j * cmath.pi * r / k))
                    / (1 - cmath.exp(2j * cmath.pi / k)))
        if params.scheme is Scheme.SYMMETRIC and k > 2:
            if (2 * r) % k == 0:
                return 0j
            return complex(math.sin(2 * math.pi * r / k) / math.sin(2 * math.pi / k))
        # symmetric k = 2 sits at a degenerate denominator; the generic sum
        # form below realizes its limit

    if params.scheme is Scheme.ONE_PARAM:
        if abs(1 - q) < _LIMIT_WINDOW:
            return complex(n)
        return (1 - q ** n) / (1 - q)

    if params.scheme is Scheme.TWO_PARAM:
        pinv = 1 / complex(params.p)
        if abs(1 - q) < _LIMIT_WINDOW and abs(1 - pinv) < _LIMIT_WINDOW:
            return complex(n)
        if abs(q - pinv) < _LIMIT_WINDOW:
            # telescoping sum form, exact at the degenerate point
            return sum(q ** j * pinv ** (n - 1 - j) for j in range(n)) + 0j
        return (q ** n - pinv ** n) / (q - pinv)

    # symmetric
    if q == 0:
        raise DegenerateParameterError("symmetric bracket needs q != 0")
    qinv = 1 / q
    if abs(q - qinv) < _LIMIT_WINDOW:
        # q near +1 or -1; the sum form realizes both limits
        return sum(q ** (n - 1 - 2 * j) for j in range(n)) + 0j
    return (q ** n - q ** (-n)) / (q - qinv)


def qfactorial(n: int, params: QParams) -> complex:
    """Bracket factorial [n]! = [1][2]...[n], with [0]! = 1."""
    if n < 0:
        raise ValueError("factorial argument must be nonnegative")
    out = 1 + 0j
    for j in range(1, int(n) + 1):
        out *= qnumber(j, params)
    return out


def convergence_radius(params: QParams) -> float:
    """Convergence radius of the deformed exponential series.

    one-param: 1/|1-q| for |q| < 1, infinite for |q| > 1.
    two-param: 1/|q - 1/p|.
    symmetric: infinite off the unit circle; 0 on it (no guarantee there).
    Degenerate denominators give an infinite radius (undeformed limit).
    """
    q = complex(params.q)
    if params.scheme is Scheme.ONE_PARAM:
        if abs(1 - q) < _LIMIT_WINDOW:
            return math.inf
        if abs(q) < 1:
            return 1 / abs(1 - q)
        if abs(q) > 1:
            return math.inf
        return 0.0
    if params.scheme is Scheme.TWO_PARAM:
        den = abs(q - 1 / complex(params.p))
        return math.inf if den < _LIMIT_WINDOW else 1 / den
    if abs(abs(q) - 1) < _LIMIT_WINDOW:
        return math.inf if abs(q - 1) < _LIMIT_WINDOW else 0.0
    return math.inf


def qexp(x, params: QParams, variant: str = "type1", trunc: int = 200,
         tol: float = DEFAULT_TOL) -> complex:
    """Deformed exponential as a truncated power series.

    ``variant`` selects the denominator: "type1" uses the bracket factorial
    [n]!, "type2" its entrywise absolute value |[n]|!.  The argument must lie
    strictly inside the convergence radius; after ``trunc`` terms the
    geometric tail estimate must fall below ``tol`` relative to the partial
    sum, otherwise a TruncationError is raised.
    """
    value, tail = qexp_terms(x, params, variant=variant, trunc=trunc)
    if tail > tol * max(1.0, abs(value)):
        raise TruncationError(
            f"tail bound {tail:.3e} above tolerance {tol:.3e} after {trunc} terms")
    return value


def qexp_terms(x, params: QParams, variant: str = "type1", trunc: int = 200):
    """Partial sum of the deformed exponential and its estimated tail bound."""
    if variant not in ("type1", "type2"):
        raise ValueError("variant must be 'type1' or 'type2'")
    x = complex(x)
    radius = convergence_radius(params)
    if math.isfinite(radius) and abs(x) >= radius:
        raise DivergenceError(
            f"|x| = {abs(x):.6g} outside the convergence radius {radius:.6g}")

    total = 1 + 0j
    term = 1 + 0j
    ratio = 0.0
    for n in range(1, trunc + 1):
        b = qnumber(n, params)
        if variant == "type2":
            b = abs(b)
        if b == 0:
            raise DegenerateParameterError(f"bracket [{n}] vanishes; series undefined")
        term *= x / b
        total += term
        ratio = abs(x / b)
        if abs(term) < 1e-18 * max(1.0, abs(total)) and ratio < 1:
            break
    if math.isfinite(radius):
        ratio = max(ratio, abs(x) / radius)
    tail = abs(term) * ratio / (1 - ratio) if ratio < 1 else math.inf
    return total, tail


def qexp_reciprocal(x, q) -> complex:
    """Reciprocal of the one-param deformed exponential via its infinite product.

    1/exp_q(x) = prod_{k>=0} (1 - q^k (1-q) x), an entire function of x,
    valid for |q| < 1.  Used as an analytic continuation beyond the series
    radius.
    """
    q = complex(q)
    if abs(q) >= 1:
        raise DegenerateParameterError("product form needs |q| < 1")
    x = complex(x)
    out = 1 + 0j
    factor = (1 - q) * x
    for _ in range(100000):
        if abs(factor) < 1e-18:
            break
        out *= 1 - factor
        factor *= q
    else:
        raise NonConvergenceError("product did not terminate")
    return out


def qexp_product(x, q) -> complex:
    """One-param deformed exponential via the infinite product (|q| < 1)."""
    rec = qexp_reciprocal(x, q)
    if rec == 0:
        raise SingularPointError("product has a zero factor at this argument")
    return 1 / rec


def qderivative(f, x, q) -> complex:
    """q-difference quotient (f(x) - f(qx)) / (x (1 - q))."""
    q = complex(q)
    x = complex(x)
    if x == 0:
        raise SingularPointError("q-derivative is singular at x = 0")
    if abs(1 - q) < _LIMIT_WINDOW:
        raise DegenerateParameterError("q-derivative needs q != 1")
    return (f(x) - f(q * x)) / (x * (1 - q))


def jackson_integral(f, a, q, tol: float = 1e-12, max_terms: int = 200000) -> complex:
    """Jackson integral of f over (0, a] for 0 < q < 1.

    Evaluates a (1-q) sum_{k>=0} q^k f(q^k a), stopping once the geometric
    tail estimate drops below ``tol`` relative to the accumulated sum.
    """
    q = float(q)
    a = float(a)
    if not 0 < q < 1:
        raise DegenerateParameterError("Jackson integral needs 0 < q < 1")
    if a <= 0:
        raise ValueError("upper limit must be positive")
    total = 0j
    weight = 1.0
    grew = 0
    small = 0
    last = math.inf
    for _ in range(max_terms):
        term = weight * complex(f(weight * a))
        total += term
        tail = abs(term) * q / (1 - q)
        # the integrand may vanish at isolated atoms, so a single small
        # tail estimate is not trusted
        small = small + 1 if tail < tol * max(1.0, abs(total)) else 0
        if small >= 3:
            return a * (1 - q) * total
        grew = grew + 1 if abs(term) > last else 0
        if grew > 60:
            raise NonConvergenceError("Jackson terms keep growing; integrand unbounded near 0?")
        last = abs(term)
        weight *= q
    raise NonConvergenceError(f"no convergence within {max_terms} Jackson terms")


def jackson_exp_moment(n: int, q, tol: float = 1e-12) -> complex:
    """n-th Jackson moment of the reciprocal exponential weight; equals [n]!.

    Computes the Jackson integral of x^n * (1/exp_q(q x)) from 0 to the
    series radius 1/(1-q).  The weight is sampled one geometric step inside
    the grid (argument q*x): with the unshifted argument every moment comes
    out scaled by q^(n+1), which breaks the factorial identity.
    """
    q = float(q)
    if not 0 < q < 1:
        raise DegenerateParameterError("moment identity needs 0 < q < 1")
    a = 1 / (1 - q)

    def f(x):
        return x ** n * qexp_reciprocal(q * x, q)

    return jackson_integral(f, a, q, tol=tol)
