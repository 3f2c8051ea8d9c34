"""Exact nilpotent Grassmann calculus over cyclotomic scalars, orders 2 and 3.

Scalars live in an exact ring: order 2 uses plain rationals (the phase is
-1), order 3 uses rationals extended by the primitive cube root q (with
q^2 = -1 - q) and by a square root s of 1 + q, which is the bracket [2]
appearing in the three-level ladder.  No floating point enters anywhere in
this module, so every identity check is an exact yes or no.

The graded variables satisfy

    xi^k = xibar^k = 0,        xi xibar = r0 xibar xi,

where the exchange phase r0 = q^e is fixed to -1 at order 2 and is a free
convention e in {0, 1, 2} at order 3.  Level projectors E_rs = |r><s| carry
grade g = (r - s) mod k and pass through the variables as

    xi E = q^g E xi,       xibar E = q^g E xibar.

Canonical words put xibar powers first, xi powers second, one optional
projector last; elements are dictionaries from such words to scalars.

Integration picks the top variable power.  At order 2 the inner integral
carries the classic anticommuting-measure sign (the measure crosses the
xibar's standing in front), normalized so that the double integral of
xibar xi is -1; at order 3 the convention is phase-free.  With these
orientations the coherent projector resolves the identity exactly at both
orders, with weight coefficients solved in closed form.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple

import numpy as np

from .errors import ConventionError, UnsolvableResolutionError


class CyclotomicScalar:
    """Exact scalar: a rational for order 2, a + b q + (u + v q) s for order 3."""

    __slots__ = ("k", "c")

    def __init__(self, k: int, c):
        if k not in (2, 3):
            raise ValueError("order must be 2 or 3")
        c = tuple(Fraction(x) for x in c)
        want = 1 if k == 2 else 4
        if len(c) != want:
            raise ValueError(f"order {k} scalar needs {want} components")
        self.k = k
        self.c = c

    @classmethod
    def from_rational(cls, k, value):
        if k == 2:
            return cls(2, (value,))
        return cls(3, (value, 0, 0, 0))

    @classmethod
    def zero(cls, k):
        return cls.from_rational(k, 0)

    @classmethod
    def one(cls, k):
        return cls.from_rational(k, 1)

    @classmethod
    def q_power(cls, k, e):
        """q^e at the order-k root: (-1)^e for k = 2, cube-root powers for k = 3."""
        e = e % k
        if k == 2:
            return cls(2, (1 if e == 0 else -1,))
        if e == 0:
            return cls(3, (1, 0, 0, 0))
        if e == 1:
            return cls(3, (0, 1, 0, 0))
        return cls(3, (-1, -1, 0, 0))

    @classmethod
    def root_s(cls, k):
        """The adjoined square root of 1 + q (only meaningful at order 3)."""
        if k != 3:
            raise ValueError("s exists only at order 3")
        return cls(3, (0, 0, 1, 0))

    def _match(self, other):
        if not isinstance(other, CyclotomicScalar):
            other = CyclotomicScalar.from_rational(self.k, other)
        if other.k != self.k:
            raise ConventionError("mixed scalar orders")
        return other

    def __add__(self, other):
        other = self._match(other)
        return CyclotomicScalar(self.k, tuple(x + y for x, y in zip(self.c, other.c)))

    __radd__ = __add__

    def __neg__(self):
        return CyclotomicScalar(self.k, tuple(-x for x in self.c))

    def __sub__(self, other):
        return self + (-self._match(other))

    @staticmethod
    def _qq_mul(x1, y1, x2, y2):
        # (x1 + y1 q)(x2 + y2 q) with q^2 = -1 - q
        return (x1 * x2 - y1 * y2, x1 * y2 + y1 * x2 - y1 * y2)

    def __mul__(self, other):
        other = self._match(other)
        if self.k == 2:
            return CyclotomicScalar(2, (self.c[0] * other.c[0],))
        a1, b1, u1, v1 = self.c
        a2, b2, u2, v2 = other.c
        pa = self._qq_mul(a1, b1, a2, b2)
        ps = self._qq_mul(u1, v1, u2, v2)
        # s^2 = 1 + q multiplies the uv part back into the q-plane
        x, y = ps
        ssq = (x - y, x)
        cross1 = self._qq_mul(a1, b1, u2, v2)
        cross2 = self._qq_mul(u1, v1, a2, b2)
        return CyclotomicScalar(3, (pa[0] + ssq[0], pa[1] + ssq[1],
                                    cross1[0] + cross2[0], cross1[1] + cross2[1]))

    __rmul__ = __mul__

    def inverse(self) -> "CyclotomicScalar":
        if self.k == 2:
            if self.c[0] == 0:
                raise ZeroDivisionError("zero scalar")
            return CyclotomicScalar(2, (1 / self.c[0],))
        a, b, u, v = self.c
        # conjugate in s: (A + B s)(A - B s) = A^2 - B^2 (1 + q), a q-plane number
        conj = CyclotomicScalar(3, (a, b, -u, -v))
        norm = self * conj
        x, y = norm.c[0], norm.c[1]
        den = x * x - x * y + y * y
        if den == 0:
            raise ZeroDivisionError("zero scalar")
        # (x + y q)^-1 = ((x - y) - y q) / (x^2 - x y + y^2)
        inv_plane = CyclotomicScalar(3, ((x - y) / den, -y / den, 0, 0))
        return conj * inv_plane

    def is_zero(self) -> bool:
        return all(x == 0 for x in self.c)

    def __eq__(self, other):
        if not isinstance(other, CyclotomicScalar):
            try:
                other = CyclotomicScalar.from_rational(self.k, other)
            except (TypeError, ValueError):
                return NotImplemented
        return self.k == other.k and self.c == other.c

    def __hash__(self):
        return hash((self.k, self.c))

    def to_complex(self) -> complex:
        if self.k == 2:
            return complex(self.c[0])
        q = np.exp(2j * np.pi / 3)
        s = np.sqrt(1 + q)
        a, b, u, v = (complex(x) for x in self.c)
        return a + b * q + (u + v * q) * s

    def __repr__(self):
        if self.k == 2:
            return f"CyclotomicScalar(2, {self.c[0]})"
        a, b, u, v = self.c
        return f"CyclotomicScalar(3, {a} + {b}*q + ({u} + {v}*q)*s)"


@dataclass(frozen=True)
class GradedAlgebra:
    """Order k and exchange exponent e (xi xibar = q^e xibar xi)."""

    k: int
    reorder_exp: int = None

    def __post_init__(self):
        if self.k not in (2, 3):
            raise ValueError("order must be 2 or 3")
        e = self.reorder_exp
        if e is None:
            e = 1
        if self.k == 2 and e % 2 != 1:
            raise ValueError("order 2 forces the anticommuting exchange, e = 1")
        object.__setattr__(self, "reorder_exp", e % self.k)

    def scalar(self, value) -> CyclotomicScalar:
        return CyclotomicScalar.from_rational(self.k, value)

    def q(self, e=1) -> CyclotomicScalar:
        return CyclotomicScalar.q_power(self.k, e)

    def r0(self, power=1) -> CyclotomicScalar:
        return CyclotomicScalar.q_power(self.k, self.reorder_exp * power)

    def ladder(self, r: int) -> CyclotomicScalar:
        """Raising amplitude |r> -> |r+1>: the square roots of the brackets."""
        if self.k == 2:
            steps = [CyclotomicScalar.one(2)]
        else:
            steps = [CyclotomicScalar.one(3), CyclotomicScalar.root_s(3)]
        if 0 <= r < self.k - 1:
            return steps[r]
        return CyclotomicScalar.zero(self.k)


def _merge(terms, key, value):
    if key in terms:
        value = terms[key] + value
    if value.is_zero():
        terms.pop(key, None)
    else:
        terms[key] = value


class GradedElement:
    """Operator-valued element: dict (m, n, op) -> scalar for xibar^m xi^n op.

    op is None for pure variable words or a pair (r, s) for the projector
    E_rs standing at the right end.
    """

    def __init__(self, algebra: GradedAlgebra, terms=None):
        self.algebra = algebra
        self.terms = {}
        for key, val in (terms or {}).items():
            if not val.is_zero():
                _merge(self.terms, key, val)

    @classmethod
    def one(cls, algebra):
        return cls(algebra, {(0, 0, None): algebra.scalar(1)})

    @classmethod
    def variable(cls, algebra, kind: str):
        if kind == "xi":
            return cls(algebra, {(0, 1, None): algebra.scalar(1)})
        if kind == "xibar":
            return cls(algebra, {(1, 0, None): algebra.scalar(1)})
        raise ValueError("kind must be 'xi' or 'xibar'")

    @classmethod
    def projector(cls, algebra, r: int, s: int):
        if not (0 <= r < algebra.k and 0 <= s < algebra.k):
            raise ValueError("projector indices out of range")
        return cls(algebra, {(0, 0, (r, s)): algebra.scalar(1)})

    def _check(self, other):
        if self.algebra != other.algebra:
            raise ConventionError("mixed graded algebras")

    def __add__(self, other):
        self._check(other)
        out = dict(self.terms)
        for key, val in other.terms.items():
            _merge(out, key, val)
        return GradedElement(self.algebra, out)

    def __sub__(self, other):
        return self + other.scale(self.algebra.scalar(-1))

    def scale(self, scalar: CyclotomicScalar) -> "GradedElement":
        return GradedElement(self.algebra,
                             {k: scalar * v for k, v in self.terms.items()})

    def __mul__(self, other):
        self._check(other)
        alg = self.algebra
        k = alg.k
        out = {}
        for (m1, n1, op1), c1 in self.terms.items():
            for (m2, n2, op2), c2 in other.terms.items():
                m, n = m1 + m2, n1 + n2
                if m >= k or n >= k:
                    continue
                coeff = c1 * c2
                if op1 is not None:
                    # walk the projector right across the second word
                    g = (op1[0] - op1[1]) % k
                    coeff = coeff * CyclotomicScalar.q_power(k, -g * (m2 + n2))
                # xi's of the first word hop the xibar's of the second
                coeff = coeff * alg.r0(n1 * m2)
                if op1 is None:
                    op = op2
                elif op2 is None:
                    op = op1
                elif op1[1] == op2[0]:
                    op = (op1[0], op2[1])
                else:
                    continue
                _merge(out, (m, n, op), coeff)
        return GradedElement(alg, out)

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other):
        return (isinstance(other, GradedElement) and self.algebra == other.algebra
                and self.terms == other.terms)

    def coefficient(self, m, n, op=None) -> CyclotomicScalar:
        return self.terms.get((m, n, op), CyclotomicScalar.zero(self.algebra.k))

    def max_abs(self) -> float:
        return max((abs(v.to_complex()) for v in self.terms.values()), default=0.0)

    def __repr__(self):
        if not self.terms:
            return "GradedElement(0)"
        bits = []
        for (m, n, op), v in sorted(self.terms.items(),
                                    key=lambda item: (item[0][0], item[0][1], str(item[0][2]))):
            word = "xibar^%d xi^%d" % (m, n)
            if op is not None:
                word += " E%d%d" % op
            bits.append(f"({v!r}) {word}")
        return "GradedElement(" + " + ".join(bits) + ")"


class KetElement:
    """Column element: dict (m, n, r) -> scalar for xibar^m xi^n |r>."""

    def __init__(self, algebra: GradedAlgebra, terms=None):
        self.algebra = algebra
        self.terms = {}
        for key, val in (terms or {}).items():
            if not val.is_zero():
                _merge(self.terms, key, val)

    @classmethod
    def level(cls, algebra, r: int):
        return cls(algebra, {(0, 0, r): algebra.scalar(1)})

    def _check(self, other):
        if self.algebra != other.algebra:
            raise ConventionError("mixed graded algebras")

    def __add__(self, other):
        self._check(other)
        out = dict(self.terms)
        for key, val in other.terms.items():
            _merge(out, key, val)
        return KetElement(self.algebra, out)

    def __sub__(self, other):
        return self + other.scale(self.algebra.scalar(-1))

    def scale(self, scalar) -> "KetElement":
        return KetElement(self.algebra, {k: scalar * v for k, v in self.terms.items()})

    def __eq__(self, other):
        return (isinstance(other, KetElement) and self.algebra == other.algebra
                and self.terms == other.terms)

    def is_zero(self) -> bool:
        return not self.terms


class BraElement:
    """Row element: dict (r, m, n) -> scalar for <r| xibar^m xi^n."""

    def __init__(self, algebra: GradedAlgebra, terms=None):
        self.algebra = algebra
        self.terms = {}
        for key, val in (terms or {}).items():
            if not val.is_zero():
                _merge(self.terms, key, val)

    @classmethod
    def level(cls, algebra, r: int):
        return cls(algebra, {(r, 0, 0): algebra.scalar(1)})

    def scale(self, scalar) -> "BraElement":
        return BraElement(self.algebra, {k: scalar * v for k, v in self.terms.items()})

    def __add__(self, other):
        if self.algebra != other.algebra:
            raise ConventionError("mixed graded algebras")
        out = dict(self.terms)
        for key, val in other.terms.items():
            _merge(out, key, val)
        return BraElement(self.algebra, out)

    def __eq__(self, other):
        return (isinstance(other, BraElement) and self.algebra == other.algebra
                and self.terms == other.terms)


def left_multiply_variable(kind: str, ket: KetElement) -> KetElement:
    """xi or xibar times a ket; xi pays the exchange phase per xibar crossed."""
    alg = ket.algebra
    out = {}
    for (m, n, r), c in ket.terms.items():
        if kind == "xibar":
            if m + 1 >= alg.k:
                continue
            _merge(out, (m + 1, n, r), c)
        elif kind == "xi":
            if n + 1 >= alg.k:
                continue
            _merge(out, (m, n + 1, r), c * alg.r0(m))
        else:
            raise ValueError("kind must be 'xi' or 'xibar'")
    return KetElement(alg, out)


def apply_raising(ket: KetElement) -> KetElement:
    """Ladder-up operator; grade +1, so it pays q^-1 per variable it crosses."""
    alg = ket.algebra
    out = {}
    for (m, n, r), c in ket.terms.items():
        amp = alg.ladder(r)
        if amp.is_zero():
            continue
        phase = CyclotomicScalar.q_power(alg.k, -(m + n))
        _merge(out, (m, n, r + 1), c * amp * phase)
    return KetElement(alg, out)


def apply_lowering(ket: KetElement) -> KetElement:
    """Ladder-down operator; grade -1, so it pays q^+1 per variable it crosses."""
    alg = ket.algebra
    out = {}
    for (m, n, r), c in ket.terms.items():
        if r == 0:
            continue
        amp = alg.ladder(r - 1)
        if amp.is_zero():
            continue
        phase = CyclotomicScalar.q_power(alg.k, m + n)
        _merge(out, (m, n, r - 1), c * amp * phase)
    return KetElement(alg, out)


def coherent_ket(algebra: GradedAlgebra) -> KetElement:
    """Lowering-operator eigenvector with eigenvalue xi, written out literally."""
    one = algebra.scalar(1)
    if algebra.k == 2:
        return KetElement(algebra, {(0, 0, 0): one, (0, 1, 1): -one})
    q2 = algebra.q(2)
    s = CyclotomicScalar.root_s(3)
    return KetElement(algebra, {(0, 0, 0): one, (0, 1, 1): q2, (0, 2, 2): -s})


def coherent_bra(algebra: GradedAlgebra) -> BraElement:
    one = algebra.scalar(1)
    if algebra.k == 2:
        return BraElement(algebra, {(0, 0, 0): one, (1, 1, 0): -one})
    q = algebra.q(1)
    s = CyclotomicScalar.root_s(3)
    return BraElement(algebra, {(0, 0, 0): one, (1, 1, 0): q, (2, 2, 0): -s})


def generator_ket(algebra: GradedAlgebra) -> KetElement:
    """The same eigenvector built by the raising-series route, for cross-checks.

    Applies sum_j f_j (raise . xi)^j to the bottom level with the sign pattern
    f = (1, 1) or (1, 1, -1).
    """
    fs = (1, 1) if algebra.k == 2 else (1, 1, -1)
    total = KetElement(algebra, {})
    cur = KetElement.level(algebra, 0)
    for j, f in enumerate(fs):
        total = total + cur.scale(algebra.scalar(f))
        if j < len(fs) - 1:
            cur = apply_raising(left_multiply_variable("xi", cur))
    return total


def pairing(bra: BraElement, ket: KetElement) -> GradedElement:
    """<bra| ket>: a projector-free graded element."""
    if bra.algebra != ket.algebra:
        raise ConventionError("mixed graded algebras")
    alg = bra.algebra
    out = {}
    for (rb, m1, n1), c1 in bra.terms.items():
        for (m2, n2, rk), c2 in ket.terms.items():
            if rb != rk:
                continue
            m, n = m1 + m2, n1 + n2
            if m >= alg.k or n >= alg.k:
                continue
            _merge(out, (m, n, None), c1 * c2 * alg.r0(n1 * m2))
    return GradedElement(alg, out)


def outer_product(ket: KetElement, bra: BraElement) -> GradedElement:
    """|ket><bra| with the middle projector walked to the right end."""
    if bra.algebra != ket.algebra:
        raise ConventionError("mixed graded algebras")
    alg = ket.algebra
    k = alg.k
    out = {}
    for (m1, n1, r), c1 in ket.terms.items():
        for (s, m2, n2), c2 in bra.terms.items():
            m, n = m1 + m2, n1 + n2
            if m >= k or n >= k:
                continue
            g = (r - s) % k
            coeff = (c1 * c2 * CyclotomicScalar.q_power(k, -g * (m2 + n2))
                     * alg.r0(n1 * m2))
            _merge(out, (m, n, (r, s)), coeff)
    return GradedElement(alg, out)


def integrate(x: GradedElement, var: str) -> GradedElement:
    """Single graded integral: picks the top power of one variable.

    Order 2 integrates over xi with the sign (-1)^m from carrying the
    measure past the xibar's in front; order 3 is phase-free.  The xibar
    integral never crosses anything.
    """
    alg = x.algebra
    top = alg.k - 1
    out = {}
    for (m, n, op), c in x.terms.items():
        if var == "xi":
            if n != top:
                continue
            if alg.k == 2 and m % 2 == 1:
                c = -c
            _merge(out, (m, 0, op), c)
        elif var == "xibar":
            if m != top:
                continue
            _merge(out, (0, n, op), c)
        else:
            raise ValueError("var must be 'xi' or 'xibar'")
    return GradedElement(alg, out)


def double_integrate(x: GradedElement) -> GradedElement:
    """Integral over xi first, then xibar."""
    return integrate(integrate(x, "xi"), "xibar")


class OverlapResult(NamedTuple):
    computed: GradedElement
    reference: GradedElement
    difference: GradedElement


def graded_overlap(k: int, reorder_exp: int = None) -> OverlapResult:
    """Coherent bra-ket pairing against its closed-form counterpart.

    At order 2 the two agree exactly.  At order 3 the closed form matches in
    degree two only under the exchange convention r0 = q, and its degree-one
    coefficient differs by a cube-root phase under every convention; the
    difference element reports this honestly.
    """
    alg = GradedAlgebra(k, reorder_exp)
    computed = pairing(coherent_bra(alg), coherent_ket(alg))
    one = alg.scalar(1)
    if k == 2:
        reference = GradedElement(alg, {(0, 0, None): one, (1, 1, None): one})
    else:
        reference = GradedElement(alg, {
            (0, 0, None): one,
            (1, 1, None): alg.q(2),
            (2, 2, None): -(alg.q(1) * alg.r0()),
        })
    return OverlapResult(computed, reference, computed - reference)


class ResolutionResult(NamedTuple):
    matrix: list
    h: tuple
    is_identity: bool
    defect: GradedElement


def _weight_element(alg: GradedAlgebra, h) -> GradedElement:
    terms = {}
    for a, ha in enumerate(h):
        if not isinstance(ha, CyclotomicScalar):
            ha = alg.scalar(ha)
        # (xibar xi)^a = r0^(a(a-1)/2) xibar^a xi^a
        coeff = ha * alg.r0(a * (a - 1) // 2)
        _merge(terms, (a, a, None), coeff)
    return GradedElement(alg, terms)


def _as_matrix(alg: GradedAlgebra, op: GradedElement):
    k = alg.k
    mat = [[CyclotomicScalar.zero(k) for _ in range(k)] for _ in range(k)]
    leftover = {}
    for (m, n, tag), c in op.terms.items():
        if m == 0 and n == 0 and tag is not None:
            mat[tag[0]][tag[1]] = c
        else:
            leftover[(m, n, tag)] = c
    return mat, GradedElement(alg, leftover)


def graded_resolution(k: int, h=None, reorder_exp: int = None,
                      solve: bool = False) -> ResolutionResult:
    """Double integral of weight * |coherent><coherent| as an exact matrix.

    With solve=True the weight coefficients are determined so the result is
    the identity; the order-2 solution is the alternating exponential
    (1, -1) and the order-3 one follows the exchange convention.
    """
    alg = GradedAlgebra(k, reorder_exp)
    outer = outer_product(coherent_ket(alg), coherent_bra(alg))

    def build(hs):
        return double_integrate(_weight_element(alg, hs) * outer)

    if solve:
        if h is not None:
            raise ValueError("give either h or solve=True, not both")
        cols = []
        for a in range(k):
            basis = [alg.scalar(1 if b == a else 0) for b in range(k)]
            mat, leftover = _as_matrix(alg, build(basis))
            if not leftover.is_zero():
                raise UnsolvableResolutionError(
                    "variable words survive the double integral",
                    residual=leftover.max_abs())
            for r in range(k):
                for s in range(k):
                    if r != s and not mat[r][s].is_zero():
                        raise UnsolvableResolutionError(
                            "off-diagonal projector coefficients remain",
                            residual=mat[r][s].to_complex())
            cols.append([mat[r][r] for r in range(k)])
        # each level must receive total weight one: sum_a h_a cols[a][r] = 1
        hsolved = _solve_exact(alg, cols)
        h = hsolved
    elif h is None:
        if k == 2:
            h = (alg.scalar(1), alg.scalar(-1))
        else:
            q, r0 = alg.q(1), alg.r0()
            h = (-(q * r0 * r0), r0, r0 * r0)
    h = tuple(x if isinstance(x, CyclotomicScalar) else alg.scalar(x) for x in h)
    op = build(h)
    mat, leftover = _as_matrix(alg, op)
    ident = leftover.is_zero()
    if ident:
        for r in range(k):
            for s in range(k):
                want = alg.scalar(1 if r == s else 0)
                if mat[r][s] != want:
                    ident = False
    defect_terms = dict(leftover.terms)
    for r in range(k):
        for s in range(k):
            want = alg.scalar(1 if r == s else 0)
            diff = mat[r][s] - want
            if not diff.is_zero():
                defect_terms[(0, 0, (r, s))] = diff
    return ResolutionResult(mat, h, ident, GradedElement(alg, defect_terms))


def _solve_exact(alg, cols):
    """Solve sum_a h_a cols[a][r] = 1 for all r by exact elimination."""
    k = alg.k
    rows = [[cols[a][r] for a in range(k)] + [alg.scalar(1)] for r in range(k)]
    for col in range(k):
        pivot = next((r for r in range(col, k) if not rows[r][col].is_zero()), None)
        if pivot is None:
            raise UnsolvableResolutionError("weight system is singular")
        rows[col], rows[pivot] = rows[pivot], rows[col]
        inv = rows[col][col].inverse()
        rows[col] = [inv * x for x in rows[col]]
        for r in range(k):
            if r != col and not rows[r][col].is_zero():
                f = rows[r][col]
                rows[r] = [x - f * y for x, y in zip(rows[r], rows[col])]
    return tuple(rows[a][k] for a in range(k))


@dataclass(frozen=True)
class SuperCoherentState:
    """Product of an ordinary oscillator coherent factor and a graded one."""

    z: complex
    amplitudes: np.ndarray
    graded: KetElement
    algebra: GradedAlgebra


def supercoherent(z, k: int = 3, reorder_exp: int = None,
                  boson_levels: int = 16) -> SuperCoherentState:
    """Literal construction: Poisson amplitudes tensor the graded eigenvector."""
    alg = GradedAlgebra(k, reorder_exp)
    z = complex(z)
    amps = np.zeros(boson_levels, dtype=complex)
    amps[0] = 1
    for m in range(1, boson_levels):
        amps[m] = amps[m - 1] * z / np.sqrt(m)
    amps.setflags(write=False)
    return SuperCoherentState(z, amps, coherent_ket(alg), alg)


def supercoherent_displaced(z, k: int = 3, reorder_exp: int = None,
                            boson_levels: int = 16) -> SuperCoherentState:
    """Displacement route: exp(z b+) on the vacuum, graded factor by raising series."""
    alg = GradedAlgebra(k, reorder_exp)
    z = complex(z)
    vec = np.zeros(boson_levels, dtype=complex)
    vec[0] = 1
    cur = vec.copy()
    for j in range(1, 4 * boson_levels):
        nxt = np.zeros_like(cur)
        nxt[1:] = cur[:-1] * np.sqrt(np.arange(1, boson_levels)) * z / j
        cur = nxt
        vec = vec + cur
        if np.max(np.abs(cur)) < 1e-18:
            break
    vec.setflags(write=False)
    return SuperCoherentState(z, vec, generator_ket(alg), alg)


def z3_cyclic_canonical(word):
    """Canonical rotation of a cubic-algebra word, or None when it vanishes.

    Words of length three rotate freely at the cost of one cube-root phase
    per step; the representative is the smallest rotation and the returned
    exponent j means the input equals q^j times it.  Repeated-letter cubes
    and any word longer than three vanish.
    """
    word = tuple(word)
    if len(word) >= 4:
        return None
    if len(word) == 3 and len(set(word)) == 1:
        return None
    if len(word) < 3:
        return 0, word
    best = None
    for j in range(3):
        rot = word[j:] + word[:j]
        if best is None or rot < best[1]:
            best = (j, rot)
    return best[0] % 3, best[1]


def z3_word_product(w1, w2):
    """Concatenate two cubic-algebra words and canonicalize."""
    return z3_cyclic_canonical(tuple(w1) + tuple(w2))
