"""Two-site deformation matrices, braid and Yang-Baxter checks, deformed wedges.

A two-site matrix acts on the product of two d-dimensional factors.  Storage
is row-major in both double indices,

    entries[(i*d + j), (k*d + l)] = coefficient of e_k (x) e_l
                                    in the image of e_i (x) e_j,

so the stored matrix is the transpose of the operator acting on column
vectors.  Products of stored matrices therefore compose left to right in
application order, which matches how chained products are written throughout
this module: in ``A @ B`` the factor ``A`` acts first.

Wedge operators on n factors are built from nested chains of the lifted
two-site matrix.  Appending factor m+1 to an existing m-factor wedge applies

    A(m) = sum_{k=0..m} (-s)^k  L[m-1] L[m-2] ... L[m-k]        (left nesting)

with L[p] the two-site matrix at adjacent slots (p, p+1), sign s = +1 for the
alternating (form) convention and -1 for the all-plus (state) convention.
Prepending uses the mirrored chains C(j).  Left and right nesting agree
whenever the two-site matrix satisfies the braid relation.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from enum import Enum
from functools import reduce

import numpy as np

from .errors import AssociativityError, ConventionError

# braid residual above this means nested wedges are ambiguous
BRAID_TOL = 1e-9


def _as_matrix(entries, d: int) -> np.ndarray:
    out = np.array(entries, dtype=complex)
    if out.shape != (d * d, d * d):
        raise ValueError(f"expected shape {(d * d, d * d)}, got {out.shape}")
    out.setflags(write=False)
    return out


@dataclass(frozen=True)
class DeformationMatrix:
    """Two-site deformation matrix in the storage convention above."""

    d: int
    entries: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "entries", _as_matrix(self.entries, self.d))

    def as_operator(self) -> np.ndarray:
        """Matrix acting on column vectors of the two-site product space."""
        return self.entries.T

    def blocks(self) -> np.ndarray:
        """Stored entries reshaped to [i, j, k, l]."""
        return self.entries.reshape(self.d, self.d, self.d, self.d)


class SymmetryMatrix(DeformationMatrix):
    """Two-site matrix used on the symmetric side of the wedge pairing."""


def permutation_matrix(d: int) -> DeformationMatrix:
    """Plain flip e_i (x) e_j -> e_j (x) e_i."""
    m = np.zeros((d * d, d * d), dtype=complex)
    for i in range(d):
        for j in range(d):
            m[i * d + j, j * d + i] = 1
    return DeformationMatrix(d, m)


def multiparametric_deformation(d: int, q) -> DeformationMatrix:
    """Flip matrix with one phase per ordered pair: e_i (x) e_j -> q[i,j] e_j (x) e_i.

    Diagonal pairs map to themselves with weight one; q[i,i] is ignored.
    Satisfies the braid relation for arbitrary entries.
    """
    q = np.asarray(q, dtype=complex)
    if q.shape != (d, d):
        raise ValueError("q must be a d x d array")
    m = np.zeros((d * d, d * d), dtype=complex)
    for i in range(d):
        for j in range(d):
            m[i * d + j, j * d + i] = 1 if i == j else q[i, j]
    return DeformationMatrix(d, m)


def multiparametric_symmetry(d: int, p, q) -> SymmetryMatrix:
    """Companion of the multiparametric flip with tunable diagonal weights p[i]."""
    q = np.asarray(q, dtype=complex)
    p = np.asarray(p, dtype=complex)
    if q.shape != (d, d) or p.shape != (d,):
        raise ValueError("need q of shape d x d and p of shape d")
    m = np.zeros((d * d, d * d), dtype=complex)
    for i in range(d):
        for j in range(d):
            m[i * d + j, j * d + i] = p[i] if i == j else q[i, j]
    return SymmetryMatrix(d, m)


def reciprocal_phase_matrix(d: int, seed=None) -> np.ndarray:
    """Random unimodular phase array with q[j,i] = 1/q[i,j] and unit diagonal."""
    rng = np.random.RandomState(seed)
    theta = rng.uniform(-np.pi, np.pi, size=(d, d))
    theta = np.triu(theta, 1)
    theta = theta - theta.T
    return np.exp(1j * theta)


def lift(mat: DeformationMatrix, position: int, n: int) -> np.ndarray:
    """Embed a two-site stored matrix at adjacent slots (position, position+1) of n."""
    if not 0 <= position <= n - 2:
        raise ValueError("position out of range")
    d = mat.d
    left = np.eye(d ** position, dtype=complex)
    right = np.eye(d ** (n - position - 2), dtype=complex)
    return np.kron(np.kron(left, mat.entries), right)


def braid_residual(lam: DeformationMatrix) -> float:
    """Max deviation of L12 L23 L12 = L23 L12 L23 on three factors."""
    a = lift(lam, 0, 3)
    b = lift(lam, 1, 3)
    return float(np.max(np.abs(a @ b @ a - b @ a @ b)))


def ybe_residual(lam: DeformationMatrix) -> float:
    """Max deviation of the Yang-Baxter equation for R = flip after lam.

    R12 R13 R23 = R23 R13 R12, with R13 the flip-conjugated copy acting on
    the outer pair of three factors.
    """
    d = lam.d
    perm = permutation_matrix(d)
    r = lam.entries @ perm.entries
    r12 = np.kron(r, np.eye(d, dtype=complex))
    r23 = np.kron(np.eye(d, dtype=complex), r)
    s12 = np.kron(perm.entries, np.eye(d, dtype=complex))
    r13 = s12 @ r23 @ s12
    return float(np.max(np.abs(r12 @ r13 @ r23 - r23 @ r13 @ r12)))


def wedge_symmetry_residual(lam: DeformationMatrix, sym: SymmetryMatrix,
                            variant: str = "minus_plus") -> float:
    """Residual of the two-site pairing between a wedge matrix and its partner.

    "minus_plus" checks (E - S)(E + L) = 0, "plus_minus" checks
    (E + S)(E - L) = 0; products are written in application order.
    """
    if lam.d != sym.d:
        raise ConventionError("matrix sizes differ")
    e = np.eye(lam.d ** 2, dtype=complex)
    if variant == "minus_plus":
        m = (e - sym.entries) @ (e + lam.entries)
    elif variant == "plus_minus":
        m = (e + sym.entries) @ (e - lam.entries)
    else:
        raise ValueError("variant must be 'minus_plus' or 'plus_minus'")
    return float(np.max(np.abs(m)))


class WedgeConvention(Enum):
    FORM_MINUS = "form-minus"
    STAT_PLUS = "stat-plus"
    QUON_PHASE = "quon-phase"


def _resolve_base(convention, lam, q, d):
    """Stored two-site matrix, chain sign and default normalization."""
    if convention is WedgeConvention.QUON_PHASE:
        if q is None:
            raise ConventionError("quon-phase wedge needs the phase q")
        if lam is not None:
            d = lam.d
        if d is None:
            raise ConventionError("quon-phase wedge needs the factor dimension d")
        base = complex(q) * permutation_matrix(d).entries
        return DeformationMatrix(d, base), +1
    if lam is None:
        raise ConventionError(f"{convention.value} wedge needs a deformation matrix")
    sign = -1 if convention is WedgeConvention.FORM_MINUS else +1
    return lam, sign


def _norm_factor(norm, n):
    if norm in (None, "none"):
        return 1.0
    if norm == "factorial":
        return 1.0 / math.factorial(n)
    if norm == "sqrt_factorial":
        return 1.0 / math.sqrt(math.factorial(n))
    if norm == "sqrt_n":
        return 1.0 / math.sqrt(n)
    raise ValueError("norm must be none, factorial, sqrt_factorial or sqrt_n")


def _two_site_apply(blocks: np.ndarray, tensor: np.ndarray, position: int) -> np.ndarray:
    """Apply a stored two-site matrix at the given slot of a shaped tensor."""
    d = blocks.shape[0]
    n = tensor.ndim
    t = tensor.reshape(d ** position, d, d, -1)
    out = np.einsum("aijb,ijkl->aklb", t, blocks)
    return out.reshape((d,) * n)


def _apply_append_chain(blocks, tensor, m, sign):
    """A(m): append chain acting on slots m-1 down to m-k of an (m+1)-factor tensor."""
    acc = tensor.copy()
    cur = tensor
    coeff = 1.0
    for k in range(1, m + 1):
        cur = _two_site_apply(blocks, cur, m - k)
        coeff *= sign
        acc = acc + coeff * cur
    return acc


def _apply_prepend_chain(blocks, tensor, j, n, sign):
    """C(j): prepend chain acting on slots j-1 up to j+k-2 of an n-factor tensor."""
    acc = tensor.copy()
    cur = tensor
    coeff = 1.0
    for k in range(1, n - j + 1):
        cur = _two_site_apply(blocks, cur, j - 2 + k)
        coeff *= sign
        acc = acc + coeff * cur
    return acc


def _apply_wedge(blocks, tensor, n, sign, nesting):
    if nesting == "left":
        for m in range(1, n):
            tensor = _apply_append_chain(blocks, tensor, m, sign)
    elif nesting == "right":
        for j in range(n - 1, 0, -1):
            tensor = _apply_prepend_chain(blocks, tensor, j, n, sign)
    else:
        raise ValueError("nesting must be 'left' or 'right'")
    return tensor


def wedge_operator(n: int, lam: DeformationMatrix = None,
                   convention: WedgeConvention = WedgeConvention.FORM_MINUS,
                   nesting: str = "left", q=None, d: int = None,
                   norm: str = None) -> np.ndarray:
    """Dense n-factor wedge operator in the stored convention.

    Left nesting is the stored product A(1) A(2) ... A(n-1); right nesting is
    C(n-1) ... C(1).  The default normalization is none for the alternating
    convention and 1/n! for the all-plus and phase conventions.
    """
    if n < 1:
        raise ValueError("need at least one factor")
    base, sign = _resolve_base(convention, lam, q, d)
    if norm is None and convention is not WedgeConvention.FORM_MINUS:
        norm = "factorial"
    dd = base.d
    dim = dd ** n
    out = np.eye(dim, dtype=complex)
    if nesting == "left":
        for m in range(1, n):
            a = np.eye(dim, dtype=complex)
            chain = np.eye(dim, dtype=complex)
            coeff = 1.0
            for k in range(1, m + 1):
                chain = chain @ lift(base, m - k, n)
                coeff *= sign
                a = a + coeff * chain
            out = out @ a
    elif nesting == "right":
        for j in range(n - 1, 0, -1):
            c = np.eye(dim, dtype=complex)
            chain = np.eye(dim, dtype=complex)
            coeff = 1.0
            for k in range(1, n - j + 1):
                chain = chain @ lift(base, j - 2 + k, n)
                coeff *= sign
                c = c + coeff * chain
            out = out @ c
    else:
        raise ValueError("nesting must be 'left' or 'right'")
    return _norm_factor(norm, n) * out


def inversions(perm) -> int:
    """Number of inverted pairs in one-line notation."""
    return sum(perm[a] > perm[b] for a in range(len(perm))
               for b in range(a + 1, len(perm)))


def permutation_operator(perm, d: int) -> np.ndarray:
    """Operator moving tensor factor a to slot perm[a], acting on column vectors."""
    n = len(perm)
    e = np.eye(d ** n, dtype=complex).reshape((d,) * (2 * n))
    m = np.moveaxis(e, list(range(n)), list(perm))
    return m.reshape(d ** n, d ** n)


def q_symmetrizer(n: int, q, d: int = 2, norm: str = "factorial") -> np.ndarray:
    """Phase-weighted sum over all factor permutations, q^inversions each.

    Independent of the chain construction; at q = 1 and q = -1 it reduces to
    the symmetrizer and antisymmetrizer.
    """
    q = complex(q)
    dim = d ** n
    total = np.zeros((dim, dim), dtype=complex)
    for perm in itertools.permutations(range(n)):
        total += q ** inversions(perm) * permutation_operator(perm, d)
    return _norm_factor(norm, n) * total


def deformed_wedge(factors, lam: DeformationMatrix = None,
                   convention: WedgeConvention = WedgeConvention.FORM_MINUS,
                   q=None, nesting: str = "left", norm: str = None) -> np.ndarray:
    """Wedge of one-factor vectors, returned as a flat product-space vector.

    For the alternating convention with three or more factors the two-site
    matrix must satisfy the braid relation, otherwise left and right nesting
    disagree and an AssociativityError is raised.
    """
    factors = [np.asarray(f, dtype=complex).reshape(-1) for f in factors]
    if not factors:
        raise ValueError("need at least one factor")
    dd = factors[0].size
    if any(f.size != dd for f in factors):
        raise ConventionError("factors have mixed dimensions")
    base, sign = _resolve_base(convention, lam, q, dd)
    if base.d != dd:
        raise ConventionError("factor dimension does not match the matrix")
    if norm is None and convention is WedgeConvention.QUON_PHASE:
        norm = "sqrt_factorial"
    n = len(factors)
    tensor = reduce(np.kron, factors).reshape((dd,) * n)
    if convention is WedgeConvention.FORM_MINUS and n >= 3:
        br = braid_residual(base)
        if br > BRAID_TOL:
            left = _apply_wedge(base.blocks(), tensor, n, sign, "left")
            right = _apply_wedge(base.blocks(), tensor, n, sign, "right")
            gap = float(np.max(np.abs(left - right)))
            raise AssociativityError(
                f"braid residual {br:.3e}; nested wedges differ by {gap:.3e}")
    out = _apply_wedge(base.blocks(), tensor, n, sign, nesting)
    return _norm_factor(norm, n) * out.reshape(-1)


def wedge_append(wedge: np.ndarray, vec, lam: DeformationMatrix) -> np.ndarray:
    """Extend an m-factor wedge by one factor on the right (alternating convention)."""
    d = lam.d
    wedge = np.asarray(wedge, dtype=complex).reshape(-1)
    m = round(math.log(wedge.size, d))
    if d ** m != wedge.size:
        raise ConventionError("wedge length is not a power of the factor dimension")
    t = np.kron(wedge, np.asarray(vec, dtype=complex).reshape(-1))
    t = t.reshape((d,) * (m + 1))
    return _apply_append_chain(lam.blocks(), t, m, -1).reshape(-1)


def wedge_prepend(vec, wedge: np.ndarray, lam: DeformationMatrix) -> np.ndarray:
    """Extend an m-factor wedge by one factor on the left (alternating convention)."""
    d = lam.d
    wedge = np.asarray(wedge, dtype=complex).reshape(-1)
    m = round(math.log(wedge.size, d))
    if d ** m != wedge.size:
        raise ConventionError("wedge length is not a power of the factor dimension")
    t = np.kron(np.asarray(vec, dtype=complex).reshape(-1), wedge)
    t = t.reshape((d,) * (m + 1))
    return _apply_prepend_chain(lam.blocks(), t, 1, m + 1, -1).reshape(-1)


def wedge_space_dimension(p: int, lam: DeformationMatrix, tol: float = 1e-9,
                          seed: int = 0) -> int:
    """Dimension of the span of all p-factor wedges (numerical rank).

    Small spaces use the dense operator and a full SVD.  Larger ones push a
    Gaussian sketch through the chain pipeline; the sketch width exceeds the
    undeformed dimension with margin, which is the generic rank for flat
    deformations.
    """
    if p < 1:
        raise ValueError("need at least one factor")
    d = lam.d
    dim = d ** p
    if p == 1:
        return d
    if dim <= 512:
        w = wedge_operator(p, lam)
        s = np.linalg.svd(w, compute_uv=False)
        cut = tol * max(s[0], 1.0)
        return int((s > cut).sum())
    k = min(dim, 2 * math.comb(d, p) + 20)
    rng = np.random.RandomState(seed)
    cols = []
    blocks = lam.blocks()
    for _ in range(k):
        g = rng.randn(dim) + 1j * rng.randn(dim)
        t = _apply_wedge(blocks, g.reshape((d,) * p), p, -1, "left")
        cols.append(t.reshape(-1))
    s = np.linalg.svd(np.array(cols).T, compute_uv=False)
    cut = tol * max(s[0], math.sqrt(dim))
    return int((s > cut).sum())


def two_particle_wavefunction(f1, f2, q, grid) -> np.ndarray:
    """Two-particle amplitude interpolating between the exchange classes.

    psi(x, y) = (f1(x) f2(y) + q f2(x) f1(y)) / sqrt(2) on the grid product;
    q = 1 and q = -1 give the symmetric and antisymmetric combinations, q = 0
    the distinguishable product.
    """
    grid = np.asarray(grid)
    a1 = np.asarray([f1(x) for x in grid], dtype=complex)
    a2 = np.asarray([f2(x) for x in grid], dtype=complex)
    return (np.outer(a1, a2) + complex(q) * np.outer(a2, a1)) / math.sqrt(2)
