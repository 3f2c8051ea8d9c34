"""Property suite covering every identity the package claims, one check per area.

Each check draws its own deterministic random data, runs the relevant module
operations at a fixed tolerance, and reports the worst residual it saw.  The
CLI and the test suite both consume these results, so the pass/fail verdicts
printed by either are the same computation.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import braid, coherent, fock, graded, ncforms, quonstat
from .qcalc import QParams, Scheme, jackson_exp_moment, qfactorial, qnumber


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    max_residual: float
    tolerance: float
    details: str

    def line(self) -> str:
        verdict = "PASS" if self.passed else "FAIL"
        return (f"{verdict} {self.name}: max residual {self.max_residual:.3e} "
                f"(tolerance {self.tolerance:.1e}) {self.details}")


def _result(name, tol, residuals, details=""):
    worst = float(max(residuals)) if residuals else 0.0
    return CheckResult(name, bool(worst < tol), worst, tol, details)


def check_braid(seed: int = 0) -> CheckResult:
    """Random unimodular two-site matrices satisfy the braid and flip-braid
    identities, and the paired symmetry products vanish."""
    tol = 1e-12
    rng = np.random.default_rng(seed)
    residuals = []
    for trial in range(50):
        d = int(rng.integers(2, 5))
        q = braid.reciprocal_phase_matrix(d, seed=rng.integers(0, 2**31))
        lam = braid.multiparametric_deformation(d, q)
        residuals.append(braid.braid_residual(lam))
        residuals.append(braid.ybe_residual(lam))
        sym_free = braid.multiparametric_symmetry(
            d, np.exp(1j * rng.uniform(-np.pi, np.pi, size=d)), q)
        residuals.append(braid.wedge_symmetry_residual(lam, sym_free, "plus_minus"))
        sym_unit = braid.multiparametric_symmetry(d, np.ones(d), q)
        residuals.append(braid.wedge_symmetry_residual(lam, sym_unit, "minus_plus"))
    return _result("braid_relations", tol, residuals, "50 random draws, d <= 4")


def check_symmetrizer() -> CheckResult:
    """Weighted symmetrizers reduce to the classical projectors at the
    endpoint weights and the three-factor expansion matches term by term."""
    tol = 1e-12
    residuals = []
    d = 2
    for n in range(2, 6):
        dim = d**n
        perms = _permutations(n)
        for q, sign in ((1.0, 1), (-1.0, -1)):
            proj = braid.q_symmetrizer(n, q, d=d, norm="factorial")
            brute = np.zeros((dim, dim), dtype=complex)
            for perm in perms:
                brute += (sign ** braid.inversions(perm)
                          ) * braid.permutation_operator(perm, d)
            brute /= math.factorial(n)
            residuals.append(np.max(np.abs(proj - brute)))
            residuals.append(np.max(np.abs(proj @ proj - proj)))
    q = 0.37
    full = braid.q_symmetrizer(3, q, d=d, norm="none")
    swaps = {perm: braid.permutation_operator(perm, d)
             for perm in [(1, 0, 2), (0, 2, 1)]}
    expansion = (np.eye(d**3)
                 + q * (swaps[(1, 0, 2)] + swaps[(0, 2, 1)])
                 + q**2 * (swaps[(1, 0, 2)] @ swaps[(0, 2, 1)]
                           + swaps[(0, 2, 1)] @ swaps[(1, 0, 2)])
                 + q**3 * (swaps[(1, 0, 2)] @ swaps[(0, 2, 1)] @ swaps[(1, 0, 2)]))
    residuals.append(np.max(np.abs(full - expansion)))
    return _result("symmetrizer_limits", tol, residuals, "n <= 5 endpoint projectors")


def _permutations(n):
    import itertools

    return list(itertools.permutations(range(n)))


def check_exterior(seed: int = 0) -> CheckResult:
    """The exterior differential squares to zero on random polynomials."""
    tol = 1e-12
    rng = np.random.default_rng(seed)
    residuals = []
    for trial in range(50):
        d = int(rng.integers(2, 5))
        phases = braid.reciprocal_phase_matrix(d, seed=rng.integers(0, 2**31))
        algebra = ncforms.CoordinateAlgebra(phases)
        poly = _random_poly(algebra, rng, degree=2)
        dd = ncforms.exterior_derivative(ncforms.exterior_derivative(poly))
        residuals.append(dd.max_coeff())
    return _result("exterior_square_zero", tol, residuals, "50 random polynomials")


def _random_poly(algebra, rng, degree):
    d = algebra.d
    poly = None
    for _ in range(4):
        exps = [0] * d
        for _ in range(degree):
            exps[int(rng.integers(0, d))] += 1
        coeff = complex(rng.normal(), rng.normal())
        term = ncforms.NCPolynomial.monomial(algebra, tuple(exps), coeff)
        poly = term if poly is None else poly + term
    return poly


def check_oscillator(seed: int = 0) -> CheckResult:
    """Deformed ladder relations and the number-operator commutators hold on
    the untruncated block at dimension 16."""
    tol = 1e-12
    rng = np.random.default_rng(seed)
    residuals = []
    for trial in range(20):
        kind = trial % 3
        if kind == 0:
            params = QParams.one_param(rng.uniform(0.2, 0.9))
        elif kind == 1:
            params = QParams.two_param(rng.uniform(0.3, 1.5), rng.uniform(0.3, 1.5))
        else:
            params = QParams.symmetric(rng.uniform(1.1, 2.0))
        rep = fock.build_rep(params, 16)
        residuals.extend(fock.verify_algebra(rep).values())
    return _result("oscillator_relations", tol, residuals, "20 draws at dim 16")


def check_nilpotency() -> CheckResult:
    """Ladder operators at a primitive root of unity vanish at the root order."""
    tol = 1e-12
    residuals = [fock.nilpotency_residual(k) for k in range(2, 9)]
    return _result("root_of_unity_nilpotency", tol, residuals, "orders 2..8")


def check_jackson() -> CheckResult:
    """Grid moments of the reciprocal exponential weight reproduce the
    deformed factorials and the 12-level resolution matrix is the identity."""
    tol = 1e-8
    residuals = []
    for q in (0.3, 0.5, 0.9):
        params = QParams.one_param(q)
        for n in range(21):
            target = abs(qfactorial(n, params))
            got = jackson_exp_moment(n, q)
            residuals.append(abs(got - target) / max(1.0, target))
    diag_tol = 1e-6
    diag_worst = 0.0
    for q in (0.3, 0.5, 0.9):
        mat = coherent.resolution_check_jackson(QParams.one_param(q), levels=12)
        diag_worst = max(diag_worst, float(np.max(np.abs(mat - np.eye(12)))))
    ok = diag_worst < diag_tol
    res = _result("jackson_moments", tol, residuals,
                  f"12-level diagonal off by {diag_worst:.3e}")
    return CheckResult(res.name, bool(res.passed and ok), res.max_residual,
                       res.tolerance, res.details)


def check_coherent(seed: int = 0) -> CheckResult:
    """Eigenvector defect stays below the tail bound, the overlap series
    matches the coefficient inner product, and the overlap is continuous."""
    tol = 1e-10
    rng = np.random.default_rng(seed)
    residuals = []
    bound_ok = True
    for _ in range(30):
        q = rng.uniform(0.3, 0.8)
        params = QParams.one_param(q)
        radius = 1.0 / (1.0 - q)
        z = (np.sqrt(0.8 * radius * rng.uniform(0.05, 1.0))
             * np.exp(1j * rng.uniform(-np.pi, np.pi)))
        cs = coherent.build_cs(params, z)
        rep = fock.build_rep(params, cs.dim)
        defect = coherent.eigenstate_residual(cs, rep, include_boundary=True)
        if defect > cs.tail_bound + 1e-15:
            bound_ok = False
        other = coherent.build_cs(params, 0.9 * z, dim=cs.dim)
        residuals.append(abs(coherent.overlap(cs, other)
                             - coherent.overlap_series(cs, other)))
        near = coherent.build_cs(params, z + 1e-12 * (1 + 1j), dim=cs.dim,
                                 normalize=True)
        norm_cs = coherent.build_cs(params, z, dim=cs.dim, normalize=True)
        residuals.append(abs(coherent.overlap(norm_cs, near) - 1.0))
    details = "30 draws; tail bound " + ("held" if bound_ok else "violated")
    res = _result("coherent_identities", tol, residuals, details)
    return CheckResult(res.name, bool(res.passed and bound_ok), res.max_residual,
                       res.tolerance, res.details)


def check_quon() -> CheckResult:
    """Finite-ladder occupation sums equal the closed form at every root
    order, endpoint statistics come out exactly, and the series converges
    inside its own tail bound."""
    tol = 1e-12
    residuals = []
    for k in range(2, 9):
        q = np.exp(2j * np.pi / k)
        for eta in (0.4, 1.0, 2.3):
            spec = quonstat.ModeSpec(eta, q, k=k)
            residuals.append(quonstat.occupation_finite_sum(spec).residual)
    for eta in (0.5, 1.0, 2.0):
        fermi = quonstat.occupation(quonstat.ModeSpec(eta, -1.0, k=2))
        residuals.append(abs(fermi - 1.0 / (math.exp(eta) + 1.0)))
        bose = quonstat.occupation(quonstat.ModeSpec(eta, 1.0))
        residuals.append(abs(bose - 1.0 / (math.exp(eta) - 1.0)))
    series_ok = True
    for q in (-1.0, -0.4, 0.0, 0.5, 0.9):
        for eta in (0.5, 1.5):
            spec = quonstat.ModeSpec(eta, q)
            got = quonstat.occupation_series(spec)
            if abs(got.value - quonstat.occupation(spec)) > got.tail_bound + 1e-12:
                series_ok = False
    details = "orders 2..8; series " + ("within bound" if series_ok else "broke bound")
    res = _result("quon_statistics", tol, residuals, details)
    return CheckResult(res.name, bool(res.passed and series_ok), res.max_residual,
                       res.tolerance, res.details)


def check_graded() -> CheckResult:
    """Exact sector: order-2 resolution and overlap, order-3 solved weights
    under every exchange convention, cyclic word rules, and the two
    supercoherent constructions."""
    failures = []
    res2 = graded.graded_resolution(2)
    if not res2.is_identity:
        failures.append("order-2 resolution")
    if not graded.graded_overlap(2).difference.is_zero():
        failures.append("order-2 overlap")
    q = graded.CyclotomicScalar.q_power(3, 1)
    one = graded.CyclotomicScalar.one(3)
    want0 = (-q, one, one)
    for e in (0, 1, 2):
        res3 = graded.graded_resolution(3, reorder_exp=e, solve=True)
        if not res3.is_identity:
            failures.append(f"order-3 resolution e={e}")
        if e == 0 and res3.h != want0:
            failures.append("order-3 closed-form weights")
        ov = graded.graded_overlap(3, e)
        deg1_match = ov.difference.coefficient(1, 1).is_zero()
        deg2_match = ov.difference.coefficient(2, 2).is_zero()
        if deg1_match:
            failures.append(f"degree-1 overlap unexpectedly matched e={e}")
        if deg2_match != (e == 1):
            failures.append(f"degree-2 overlap pattern e={e}")
    if graded.z3_cyclic_canonical((2, 0, 1)) != (1, (0, 1, 2)):
        failures.append("cyclic canonicalization")
    if graded.z3_cyclic_canonical((1, 1, 1)) is not None:
        failures.append("repeated-letter cube")
    if graded.z3_word_product((0, 1), (2, 0)) is not None:
        failures.append("long word truncation")
    lit = graded.supercoherent(0.6 + 0.2j)
    dis = graded.supercoherent_displaced(0.6 + 0.2j)
    amp_gap = float(np.max(np.abs(lit.amplitudes - dis.amplitudes)))
    if lit.graded != dis.graded or amp_gap > 1e-12:
        failures.append("supercoherent routes")
    details = "exact equalities" if not failures else "; ".join(failures)
    return CheckResult("graded_sector", not failures, 0.0 if not failures else 1.0,
                       0.0, details)


def check_classical() -> CheckResult:
    """Removing the deformation recovers the ordinary oscillator, the plain
    exponential coefficients, and classical calculus, at first order in the
    deformation distance."""
    tol = 1e-12
    residuals = []
    params = QParams.one_param(1.0)
    rep = fock.build_rep(params, 12)
    comm = rep.a @ rep.a_dag - rep.a_dag @ rep.a
    residuals.append(float(np.max(np.abs((comm - np.eye(12))[:11, :11]))))

    z = 0.7 - 0.3j
    cs = coherent.build_cs(params, z, dim=18)
    glauber = np.array([z**n / math.sqrt(math.factorial(n)) for n in range(18)])
    residuals.append(float(np.max(np.abs(cs.coeffs - glauber))))

    algebra = ncforms.CoordinateAlgebra(np.ones((3, 3)))
    poly = ncforms.NCPolynomial.monomial(algebra, (2, 1, 0), 1.0)
    form = ncforms.exterior_derivative(poly)
    want = {((1, 1, 0), (0,)): 2.0, ((2, 0, 0), (1,)): 1.0}
    for key, val in want.items():
        residuals.append(abs(form.terms.get(key, 0.0) - val))

    ratio_ok = True
    prev = None
    for eps in (1e-2, 1e-3, 1e-4):
        p = QParams.one_param(1.0 - eps)
        err = max(abs(qnumber(n, p) - n) for n in range(7))
        if err / eps > 20.0:
            ratio_ok = False
        if prev is not None and err > prev:
            ratio_ok = False
        prev = err
    details = "first-order convergence " + ("held" if ratio_ok else "failed")
    res = _result("classical_limits", tol, residuals, details)
    return CheckResult(res.name, bool(res.passed and ratio_ok), res.max_residual,
                       res.tolerance, res.details)


def run_all(seed: int = 0):
    return [
        check_braid(seed),
        check_symmetrizer(),
        check_exterior(seed),
        check_oscillator(seed),
        check_nilpotency(),
        check_jackson(),
        check_coherent(seed),
        check_quon(),
        check_graded(),
        check_classical(),
    ]
