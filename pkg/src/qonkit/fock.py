"""Truncated ladder-operator representations built from bracket values.

On the number basis |0>, ..., |D-1> the lowering operator carries square
roots of brackets, a|n> = sqrt([n]) |n-1>, and its raising partner is the
formal transpose (no conjugation, so complex deformation parameters keep the
algebra exact at the cost of a non-Hermitian pairing).  Alongside the plain
number operator the representation exposes the bracket diagonal [N] and the
step diagonal [N+1] - q [N], which is what the reordering identity

    a adag - q adag a = [N+1] - q [N]

produces on the right-hand side.  All relation residuals are evaluated on
the leading (D-1)-block, because the truncation makes a adag wrong in the
top corner by construction.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .qcalc import QParams, Scheme, qnumber


def _frozen(arr):
    arr = np.asarray(arr, dtype=complex)
    arr.setflags(write=False)
    return arr


@dataclass(frozen=True)
class FockRep:
    """Matrices of one deformed mode on a D-level number basis."""

    params: QParams
    dim: int
    a: np.ndarray
    a_dag: np.ndarray
    n_op: np.ndarray
    q_num_op: np.ndarray
    q_num_step: np.ndarray
    warnings: tuple = field(default_factory=tuple)


def build_rep(params: QParams, dim: int) -> FockRep:
    """Representation on dim levels; collects warnings for sign-indefinite brackets."""
    if dim < 2:
        raise ValueError("need at least two levels")
    brackets = [qnumber(n, params) for n in range(dim + 1)]
    warnings = []
    real_params = abs(complex(params.q).imag) < 1e-14 and (
        params.p is None or abs(complex(params.p).imag) < 1e-14)
    if real_params:
        for n in range(1, dim):
            if brackets[n].real < -1e-14:
                warnings.append(
                    f"bracket [{n}] = {brackets[n].real:.6g} is negative; "
                    "the raising operator is only a formal transpose")
                break
    a = np.zeros((dim, dim), dtype=complex)
    for n in range(1, dim):
        a[n - 1, n] = np.sqrt(complex(brackets[n]))
    a_dag = a.T.copy()
    n_op = np.diag(np.arange(dim, dtype=complex))
    q_num_op = np.diag(np.array(brackets[:dim], dtype=complex))
    q = complex(params.q)
    step = np.diag(np.array([brackets[n + 1] - q * brackets[n] for n in range(dim)],
                            dtype=complex))
    return FockRep(params, dim, _frozen(a), _frozen(a_dag), _frozen(n_op),
                   _frozen(q_num_op), _frozen(step), tuple(warnings))


def verify_algebra(rep: FockRep) -> dict:
    """Residual of each defining relation on the truncation-safe block.

    Residuals are scaled by the largest constituent term, so schemes whose
    brackets grow with the level are judged at working precision instead of
    by their raw magnitudes.
    """
    a, ad = rep.a, rep.a_dag
    delta, step, nop = rep.q_num_op, rep.q_num_step, rep.n_op
    q = complex(rep.params.q)
    rels = {
        "q_commutator": (a @ ad, -q * (ad @ a), -step),
        "lowering_chain": (a @ delta, -q * (delta @ a), -(step @ a)),
        "raising_chain": (delta @ ad, -q * (ad @ delta), -(ad @ step)),
        "number_lowering": (a @ nop, -(nop @ a), -a),
        "number_raising": (ad @ nop, -(nop @ ad), ad),
    }
    cut = rep.dim - 1
    out = {}
    for name, terms in rels.items():
        blocks = [t[:cut, :cut] for t in terms]
        total = sum(blocks)
        scale = max(1.0, max(np.max(np.abs(b)) for b in blocks))
        out[name] = float(np.max(np.abs(total)) / scale)
    return out


def nilpotency_residual(k: int, dim: int = None, scheme: Scheme = Scheme.ONE_PARAM,
                        exponent: int = None) -> float:
    """Norm of a^e and its transpose at the order-k root of unity, e = k by default.

    The default scheme keeps every bracket below k nonzero, so the ladder
    dies exactly at the k-th power for all k >= 2.  The symmetric scheme is
    available too; there the even orders already truncate at k/2 and k = 2
    is degenerate (no truncation at all).
    """
    if k < 2:
        raise ValueError("root order must be >= 2")
    if dim is None:
        dim = 2 * k + 2
    if exponent is None:
        exponent = k
    params = QParams.root_of_unity(k, scheme)
    rep = build_rep(params, dim)
    low = np.linalg.matrix_power(rep.a, exponent)
    high = np.linalg.matrix_power(rep.a_dag, exponent)
    return float(max(np.max(np.abs(low)), np.max(np.abs(high))))
