"""Phase-commuting coordinates, twisted partial derivatives and exterior forms.

Coordinates obey x_i x_j = q[i,j] x_j x_i with reciprocal phases
q[i,j] q[j,i] = 1, so every word has a unique normal order
x_0^m0 x_1^m1 ... and polynomials are dictionaries keyed by exponent tuples.

The partial derivative along direction i acts on a normal-ordered monomial by

    d_i x^mu = (prod_{k<i} q[i,k]^(-mu_k)) * [mu_i] * x^(mu - e_i)

with [m] the one-param bracket at the direction's own parameter p[i].  The
phase collects the crossings needed to carry the derivative past the
coordinates standing left of x_i.  Derivatives then commute up to the
transposed phase, d_j d_i = q[j,i] d_i d_j.

One-form words canonicalize by moving differentials into increasing order:
an adjacent out-of-order pair (dx_b, dx_a) with b > a swaps at the cost of
the factor -q[a,b], and repeated differentials vanish.  The exterior
derivative prepends the new differential,

    d(f dx_J) = sum_i (d_i f) dx_i ^ dx_J,

and coefficients always stay to the left of the differential word, so no
coordinate ever crosses a differential.  With these three rules d(d(w)) = 0
identically, which the tests exercise on random inputs.
"""

from __future__ import annotations

import numpy as np

from .errors import ConventionError, DegenerateParameterError
from .qcalc import QParams, qnumber

_CLEAN = 1e-15


class CoordinateAlgebra:
    """Phase matrix and per-direction bracket parameters of the coordinate ring."""

    def __init__(self, q, p=1.0):
        q = np.atleast_2d(np.asarray(q, dtype=complex))
        d = q.shape[0]
        if q.shape != (d, d):
            raise ValueError("phase matrix must be square")
        if np.max(np.abs(q * q.T - 1)) > 1e-12:
            raise DegenerateParameterError("phases must satisfy q[i,j] q[j,i] = 1")
        if np.max(np.abs(np.diag(q) - 1)) > 1e-12:
            raise DegenerateParameterError("diagonal phases must be 1")
        p = np.broadcast_to(np.asarray(p, dtype=complex), (d,)).copy()
        self.d = d
        self.q = q
        self.p = p
        self._brackets = [QParams.one_param(pi) for pi in p]

    def bracket(self, m: int, i: int) -> complex:
        return qnumber(m, self._brackets[i])

    def __eq__(self, other):
        return (isinstance(other, CoordinateAlgebra) and self.d == other.d
                and np.array_equal(self.q, other.q) and np.array_equal(self.p, other.p))


def normal_order(algebra: CoordinateAlgebra, word) -> tuple[complex, tuple]:
    """Phase and exponent tuple of an arbitrary generator word.

    Bubble sorts the word, collecting q[i,j] each time x_i hops left past
    x_j with i > j.  The result is order-independent because the phases are
    reciprocal.
    """
    word = list(word)
    phase = 1 + 0j
    changed = True
    while changed:
        changed = False
        for a in range(len(word) - 1):
            if word[a] > word[a + 1]:
                phase *= algebra.q[word[a], word[a + 1]]
                word[a], word[a + 1] = word[a + 1], word[a]
                changed = True
    mu = [0] * algebra.d
    for i in word:
        mu[i] += 1
    return phase, tuple(mu)


class NCPolynomial:
    """Finite sum of normal-ordered monomials with complex coefficients."""

    def __init__(self, algebra: CoordinateAlgebra, terms=None):
        self.algebra = algebra
        self.terms = {}
        for mu, c in (terms or {}).items():
            if abs(c) > _CLEAN:
                self.terms[tuple(mu)] = self.terms.get(tuple(mu), 0) + complex(c)

    @classmethod
    def monomial(cls, algebra, exponents, coeff=1.0):
        exponents = tuple(int(e) for e in exponents)
        if len(exponents) != algebra.d or any(e < 0 for e in exponents):
            raise ValueError("bad exponent tuple")
        return cls(algebra, {exponents: coeff})

    @classmethod
    def from_word(cls, algebra, word, coeff=1.0):
        phase, mu = normal_order(algebra, word)
        return cls(algebra, {mu: coeff * phase})

    def _check(self, other):
        if self.algebra != other.algebra:
            raise ConventionError("operands live in different coordinate algebras")

    def __add__(self, other):
        self._check(other)
        out = dict(self.terms)
        for mu, c in other.terms.items():
            out[mu] = out.get(mu, 0) + c
        return NCPolynomial(self.algebra, out)

    def __sub__(self, other):
        return self + (-1) * other

    def __rmul__(self, scalar):
        return NCPolynomial(self.algebra,
                            {mu: complex(scalar) * c for mu, c in self.terms.items()})

    def __mul__(self, other):
        if np.isscalar(other):
            return self.__rmul__(other)
        self._check(other)
        q = self.algebra.q
        out = {}
        for mu, a in self.terms.items():
            for nu, b in other.terms.items():
                phase = 1 + 0j
                for i in range(self.algebra.d):
                    if mu[i] == 0:
                        continue
                    for j in range(i):
                        if nu[j]:
                            phase *= q[i, j] ** (mu[i] * nu[j])
                key = tuple(m + n for m, n in zip(mu, nu))
                out[key] = out.get(key, 0) + a * b * phase
        return NCPolynomial(self.algebra, out)

    def max_coeff(self) -> float:
        return max((abs(c) for c in self.terms.values()), default=0.0)

    def is_zero(self, tol: float = 1e-12) -> bool:
        return self.max_coeff() <= tol

    def __repr__(self):
        if not self.terms:
            return "NCPolynomial(0)"
        bits = [f"{c:.4g}*x^{mu}" for mu, c in sorted(self.terms.items())]
        return "NCPolynomial(" + " + ".join(bits) + ")"


def generators(algebra: CoordinateAlgebra):
    """The list of coordinate polynomials x_0 .. x_{d-1}."""
    out = []
    for i in range(algebra.d):
        e = [0] * algebra.d
        e[i] = 1
        out.append(NCPolynomial.monomial(algebra, e))
    return out


def derivative(poly: NCPolynomial, i: int) -> NCPolynomial:
    """Twisted partial derivative along direction i."""
    alg = poly.algebra
    if not 0 <= i < alg.d:
        raise ValueError("direction out of range")
    out = {}
    for mu, c in poly.terms.items():
        if mu[i] == 0:
            continue
        phase = 1 + 0j
        for k in range(i):
            if mu[k]:
                phase *= alg.q[i, k] ** (-mu[k])
        key = tuple(m - (1 if k == i else 0) for k, m in enumerate(mu))
        out[key] = out.get(key, 0) + c * phase * alg.bracket(mu[i], i)
    return NCPolynomial(alg, out)


def _canonical_dx(algebra, word, coeff):
    """Sort a differential word into increasing order, tracking the swap phases."""
    word = list(word)
    changed = True
    while changed:
        changed = False
        for a in range(len(word) - 1):
            if word[a] == word[a + 1]:
                return None, 0
            if word[a] > word[a + 1]:
                coeff *= -algebra.q[word[a + 1], word[a]]
                word[a], word[a + 1] = word[a + 1], word[a]
                changed = True
    return tuple(word), coeff


class NCForm:
    """Sum of terms (monomial coefficient) * dx_{j1} ^ ... ^ dx_{jk}, j1 < ... < jk."""

    def __init__(self, algebra: CoordinateAlgebra, terms=None):
        self.algebra = algebra
        self.terms = {}
        for (mu, word), c in (terms or {}).items():
            if abs(c) <= _CLEAN:
                continue
            word, c = _canonical_dx(algebra, word, c)
            if word is None:
                continue
            key = (tuple(mu), word)
            val = self.terms.get(key, 0) + complex(c)
            if abs(val) > _CLEAN:
                self.terms[key] = val
            else:
                self.terms.pop(key, None)

    @classmethod
    def from_polynomial(cls, poly: NCPolynomial):
        return cls(poly.algebra, {(mu, ()): c for mu, c in poly.terms.items()})

    def _check(self, other):
        if self.algebra != other.algebra:
            raise ConventionError("operands live in different coordinate algebras")

    def __add__(self, other):
        self._check(other)
        out = dict(self.terms)
        for key, c in other.terms.items():
            out[key] = out.get(key, 0) + c
        return NCForm(self.algebra, out)

    def __sub__(self, other):
        return self + (-1) * other

    def __rmul__(self, scalar):
        return NCForm(self.algebra,
                      {key: complex(scalar) * c for key, c in self.terms.items()})

    def left_multiply(self, poly: NCPolynomial) -> "NCForm":
        """Module action of the coordinate ring from the left."""
        if poly.algebra != self.algebra:
            raise ConventionError("operands live in different coordinate algebras")
        out = {}
        for (mu, word), c in self.terms.items():
            prod = poly * NCPolynomial(self.algebra, {mu: c})
            for nu, b in prod.terms.items():
                key = (nu, word)
                out[key] = out.get(key, 0) + b
        return NCForm(self.algebra, out)

    def degree_terms(self, k: int) -> dict:
        return {key: c for key, c in self.terms.items() if len(key[1]) == k}

    def max_coeff(self) -> float:
        return max((abs(c) for c in self.terms.values()), default=0.0)

    def is_zero(self, tol: float = 1e-12) -> bool:
        return self.max_coeff() <= tol

    def __repr__(self):
        if not self.terms:
            return "NCForm(0)"
        bits = [f"{c:.4g}*x^{mu}*dx{list(w)}" for (mu, w), c in sorted(self.terms.items())]
        return "NCForm(" + " + ".join(bits) + ")"


def exterior_derivative(obj) -> NCForm:
    """d acting on a polynomial or form; the new differential lands in front."""
    if isinstance(obj, NCPolynomial):
        obj = NCForm.from_polynomial(obj)
    alg = obj.algebra
    out = {}
    for (mu, word), c in obj.terms.items():
        poly = NCPolynomial(alg, {mu: c})
        for i in range(alg.d):
            der = derivative(poly, i)
            for nu, b in der.terms.items():
                canon, b2 = _canonical_dx(alg, (i,) + word, b)
                if canon is None:
                    continue
                key = (nu, canon)
                out[key] = out.get(key, 0) + b2
    return NCForm(alg, out)
