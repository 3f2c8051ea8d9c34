"""Command-line front end.

One binary with a subcommand per module area.  Numeric flags are decimal
strings, complex flags are "re+imi" literals (j is accepted for the unit),
and every run records its seed.  Output formats: human-readable text
(default), deterministic JSON (identical flags and seed give identical
bytes), or CSV.  With --outdir each command additionally writes its JSON
report, its CSV table, and a rendered PNG figure into the directory.

Exit status: 0 when every reported residual passes its tolerance, 1 when a
relation fails (the report names it), 2 for bad flags.
"""

from __future__ import annotations

import argparse
import math
import os
import sys

import numpy as np

from . import __version__, acceptance, braid, coherent, fock, graded, ncforms, quonstat
from .errors import QonkitError
from .qcalc import (
    QParams,
    Scheme,
    convergence_radius,
    jackson_exp_moment,
    qexp_terms,
    qfactorial,
    qnumber,
)
from .serialize import (
    dump_json,
    format_complex,
    matrix_from_json,
    matrix_to_json,
    parse_complex,
    parse_grid,
)

_SCHEMES = {
    "one-param": Scheme.ONE_PARAM,
    "two-param": Scheme.TWO_PARAM,
    "symmetric": Scheme.SYMMETRIC,
}


def _tolerance(args, default: float) -> float:
    if getattr(args, "tol", None) is not None:
        return args.tol
    env = os.environ.get("QONKIT_TOL")
    if env:
        return float(env)
    return default


def _params(args) -> QParams:
    scheme = _SCHEMES[args.scheme]
    if getattr(args, "k", None):
        return QParams.root_of_unity(args.k, scheme)
    if scheme is Scheme.TWO_PARAM:
        if args.p is None:
            raise QonkitError("two-param scheme needs --p")
        return QParams.two_param(args.q, args.p)
    if scheme is Scheme.SYMMETRIC:
        return QParams.symmetric(args.q)
    return QParams.one_param(args.q)


def _emit(args, name, payload, text_lines, csv_data=None, figure=None) -> None:
    fmt = args.format
    if fmt == "json":
        sys.stdout.write(dump_json(payload))
    elif fmt == "csv" and csv_data is not None:
        from .report import csv_text

        sys.stdout.write(csv_text(*csv_data))
    else:
        for line in text_lines:
            sys.stdout.write(line + "\n")
    if args.outdir:
        from . import report

        outdir = report.ensure_outdir(args.outdir)
        with open(os.path.join(outdir, name + ".json"), "w") as fh:
            fh.write(dump_json(payload))
        if csv_data is not None:
            report.write_csv(os.path.join(outdir, name + ".csv"), *csv_data)
        if figure is not None:
            figure(os.path.join(outdir, name + ".png"))


def _verdict(passed: bool) -> str:
    return "PASS" if passed else "FAIL"


def cmd_qcalc(args) -> int:
    params = _params(args)
    n = args.n
    brackets = [qnumber(m, params, heading_variant=args.heading_variant)
                for m in range(n + 1)]
    facts = [qfactorial(m, params) for m in range(n + 1)]
    payload = {
        "command": "qcalc",
        "scheme": args.scheme,
        "q": format_complex(params.q),
        "p": format_complex(params.p) if params.p is not None else None,
        "k": params.k,
        "n": n,
        "q_number": format_complex(brackets[n]),
        "q_factorial": format_complex(facts[n]),
        "radius": convergence_radius(params),
        "seed": args.seed,
    }
    lines = [
        f"scheme: {args.scheme}  q: {payload['q']}",
        f"[{n}] = {payload['q_number']}",
        f"[{n}]! = {payload['q_factorial']}",
        f"series radius: {payload['radius']}",
    ]
    if args.exp_at is not None:
        value, tail = qexp_terms(args.exp_at, params, variant="type1",
                                 trunc=args.D * 16)
        value2, _ = qexp_terms(args.exp_at, params, variant="type2",
                               trunc=args.D * 16)
        payload["exp_at"] = format_complex(args.exp_at)
        payload["exp_type1"] = format_complex(value)
        payload["exp_type2"] = format_complex(value2)
        payload["exp_tail"] = float(tail)
        lines.append(f"exp({payload['exp_at']}): type1 {payload['exp_type1']}"
                     f"  type2 {payload['exp_type2']}")
    header = ["n", "q_number_real", "q_number_imag", "q_factorial_real",
              "q_factorial_imag"]
    rows = [[m, complex(brackets[m]).real, complex(brackets[m]).imag,
             complex(facts[m]).real, complex(facts[m]).imag]
            for m in range(n + 1)]

    def figure(path):
        from . import report

        report.curve_figure(path, list(range(n + 1)),
                            {"|[n]|": [abs(b) for b in brackets],
                             "|[n]!|": [abs(f) for f in facts]},
                            "n", "magnitude", "deformed integers")

    _emit(args, "qcalc", payload, lines, (header, rows), figure)
    return 0


def cmd_braid_check(args) -> int:
    tol = _tolerance(args, 1e-12)
    rng = np.random.default_rng(args.seed)
    rows = []
    failing = None
    worst = 0.0
    for trial in range(args.trials):
        if args.preset == "classical":
            lam = braid.permutation_matrix(args.d)
            phases = np.ones((args.d, args.d))
        else:
            phases = braid.reciprocal_phase_matrix(
                args.d, seed=int(rng.integers(0, 2**31)))
            lam = braid.multiparametric_deformation(args.d, phases)
        checks = {
            "braid": braid.braid_residual(lam),
            "yang_baxter": braid.ybe_residual(lam),
        }
        sym = braid.multiparametric_symmetry(args.d, np.ones(args.d), phases)
        checks["pairing_plus_minus"] = braid.wedge_symmetry_residual(
            lam, sym, "plus_minus")
        checks["pairing_minus_plus"] = braid.wedge_symmetry_residual(
            lam, sym, "minus_plus")
        for relation, residual in checks.items():
            rows.append([trial, relation, float(residual)])
            worst = max(worst, float(residual))
            if residual >= tol and failing is None:
                failing = f"{relation} (trial {trial})"
    payload = {
        "command": "braid-check",
        "preset": args.preset,
        "d": args.d,
        "trials": args.trials,
        "seed": args.seed,
        "tolerance": tol,
        "max_residual": worst,
        "passed": failing is None,
        "failing_relation": failing,
        "residuals": [{"trial": t, "relation": r, "residual": v}
                      for t, r, v in rows],
    }
    lines = [f"{r}: {v:.3e}" for t, r, v in rows[:8]]
    if len(rows) > 8:
        lines.append(f"... {len(rows) - 8} more")
    lines.append(f"{_verdict(failing is None)} max residual {worst:.3e} "
                 f"(tolerance {tol:.1e})")
    if failing:
        lines.append(f"failing relation: {failing}")

    def figure(path):
        from . import report

        report.residual_figure(path, [f"{r}#{t}" for t, r, v in rows],
                               [v for _, _, v in rows], tol,
                               "two-site relation residuals")

    _emit(args, "braid-check", payload, lines,
          (["trial", "relation", "residual"], rows), figure)
    return 0 if failing is None else 1


def cmd_ncforms_check(args) -> int:
    tol = _tolerance(args, 1e-12)
    if args.demo:
        return _ncforms_demo(args)
    rng = np.random.default_rng(args.seed)
    rows = []
    worst = 0.0
    for trial in range(args.trials):
        phases = braid.reciprocal_phase_matrix(
            args.dims, seed=int(rng.integers(0, 2**31)))
        algebra = ncforms.CoordinateAlgebra(phases)
        poly = None
        for _ in range(4):
            exps = [0] * args.dims
            for _ in range(args.degree):
                exps[int(rng.integers(0, args.dims))] += 1
            term = ncforms.NCPolynomial.monomial(
                algebra, tuple(exps), complex(rng.normal(), rng.normal()))
            poly = term if poly is None else poly + term
        residual = ncforms.exterior_derivative(
            ncforms.exterior_derivative(poly)).max_coeff()
        rows.append([trial, float(residual)])
        worst = max(worst, float(residual))
    passed = worst < tol
    payload = {
        "command": "ncforms-check",
        "dims": args.dims,
        "degree": args.degree,
        "trials": args.trials,
        "seed": args.seed,
        "tolerance": tol,
        "max_residual": worst,
        "passed": passed,
        "failing_relation": None if passed else "differential_square",
        "residuals": [{"trial": t, "residual": v} for t, v in rows],
    }
    lines = [f"differential square on {args.trials} random polynomials "
             f"({args.dims} coordinates, degree {args.degree})",
             f"{_verdict(passed)} max residual {worst:.3e} (tolerance {tol:.1e})"]

    def figure(path):
        from . import report

        report.residual_figure(path, [f"trial {t}" for t, _ in rows],
                               [v for _, v in rows], tol,
                               "coefficients of the squared differential")

    _emit(args, "ncforms-check", payload, lines,
          (["trial", "residual"], rows), figure)
    return 0 if passed else 1


def _ncforms_demo(args) -> int:
    phases = np.array([[1.0, 1j], [-1j, 1.0]])
    algebra = ncforms.CoordinateAlgebra(phases)
    x0, x1 = ncforms.generators(algebra)
    prod = x1 * x0
    word = ncforms.NCPolynomial.from_word(algebra, [1, 0, 1])
    dform = ncforms.exterior_derivative(x0 * x1)
    dd = ncforms.exterior_derivative(dform)
    payload = {
        "command": "ncforms-check",
        "demo": True,
        "seed": args.seed,
        "exchange_phase": format_complex(phases[0, 1]),
        "reordered_product": {str(k): format_complex(v)
                              for k, v in sorted(prod.terms.items())},
        "normal_ordered_word": {str(k): format_complex(v)
                                for k, v in sorted(word.terms.items())},
        "differential_terms": {str(k): format_complex(v)
                               for k, v in sorted(dform.terms.items(),
                                                  key=lambda kv: str(kv[0]))},
        "square_max_coeff": dd.max_coeff(),
    }
    lines = ["two coordinates with exchange phase i:",
             f"  x1 x0 reordered: {payload['reordered_product']}",
             f"  x1 x0 x1 normal ordered: {payload['normal_ordered_word']}",
             f"  d(x0 x1) terms: {payload['differential_terms']}",
             f"  d(d(x0 x1)) max coefficient: {dd.max_coeff():.3e}"]
    _emit(args, "ncforms-check", payload, lines)
    return 0


def cmd_fock_verify(args) -> int:
    tol = _tolerance(args, 1e-12)
    if args.matrix:
        rep, source = _load_rep(args.matrix)
    else:
        rep = fock.build_rep(_params(args), args.D)
        source = "constructed"
    residuals = fock.verify_algebra(rep)
    failing = None
    for relation, residual in residuals.items():
        if residual >= tol and failing is None:
            failing = relation
    worst = max(residuals.values())
    payload = {
        "command": "fock-verify",
        "source": source,
        "scheme": rep.params.scheme.name.lower().replace("_", "-"),
        "q": format_complex(rep.params.q),
        "p": format_complex(rep.params.p) if rep.params.p is not None else None,
        "k": rep.params.k,
        "D": rep.dim,
        "seed": args.seed,
        "tolerance": tol,
        "residuals": {k: float(v) for k, v in sorted(residuals.items())},
        "warnings": list(rep.warnings),
        "max_residual": float(worst),
        "passed": failing is None,
        "failing_relation": failing,
    }
    lines = [f"{k}: {v:.3e}" for k, v in sorted(residuals.items())]
    lines += [f"warning: {w}" for w in rep.warnings]
    lines.append(f"{_verdict(failing is None)} max residual {worst:.3e} "
                 f"(tolerance {tol:.1e})")
    if failing:
        lines.append(f"failing relation: {failing}")
    if args.export:
        with open(args.export, "w") as fh:
            fh.write(dump_json(_rep_payload(rep)))
        lines.append(f"matrices written to {args.export}")
    names = sorted(residuals)
    rows = [[name, float(residuals[name])] for name in names]

    def figure(path):
        from . import report

        report.residual_figure(path, names, [residuals[n] for n in names],
                               tol, "ladder relation residuals")

    _emit(args, "fock-verify", payload, lines,
          (["relation", "residual"], rows), figure)
    return 0 if failing is None else 1


def _rep_payload(rep) -> dict:
    return {
        "scheme": rep.params.scheme.name.lower().replace("_", "-"),
        "q": format_complex(rep.params.q),
        "p": format_complex(rep.params.p) if rep.params.p is not None else None,
        "k": rep.params.k,
        "dim": rep.dim,
        "matrices": {
            "a": matrix_to_json(rep.a),
            "a_dag": matrix_to_json(rep.a_dag),
            "n_op": matrix_to_json(rep.n_op),
            "q_num_op": matrix_to_json(rep.q_num_op),
            "q_num_step": matrix_to_json(rep.q_num_step),
        },
    }


def _load_rep(path):
    import json

    with open(path) as fh:
        data = json.load(fh)
    scheme = _SCHEMES[data["scheme"]]
    q = parse_complex(data["q"])
    if data.get("k"):
        params = QParams.root_of_unity(data["k"], scheme)
    elif scheme is Scheme.TWO_PARAM:
        params = QParams.two_param(q, parse_complex(data["p"]))
    elif scheme is Scheme.SYMMETRIC:
        params = QParams.symmetric(q)
    else:
        params = QParams.one_param(q)
    mats = {key: matrix_from_json(val) for key, val in data["matrices"].items()}
    rep = fock.FockRep(params=params, dim=data["dim"], a=mats["a"],
                       a_dag=mats["a_dag"], n_op=mats["n_op"],
                       q_num_op=mats["q_num_op"], q_num_step=mats["q_num_step"],
                       warnings=())
    return rep, path


def cmd_cs_resolution(args) -> int:
    tol = _tolerance(args, 1e-6)
    params = QParams.one_param(args.q.real if args.q.imag == 0 else args.q)
    levels = args.levels
    mat = coherent.resolution_check_jackson(params, levels=levels,
                                            shifted=not args.unshifted)
    diag = np.real(np.diag(mat))
    diag_residual = float(np.max(np.abs(mat - np.eye(levels))))
    moment_rows = []
    moment_worst = 0.0
    for n in range(args.moments + 1):
        target = abs(qfactorial(n, params))
        got = complex(jackson_exp_moment(n, params.q.real)).real
        rel = abs(got - target) / max(1.0, target)
        moment_rows.append([n, float(got), float(target), float(rel)])
        moment_worst = max(moment_worst, rel)
    passed = diag_residual < tol and moment_worst < 1e-8
    failing = None
    if diag_residual >= tol:
        failing = "resolution_diagonal"
    elif moment_worst >= 1e-8:
        failing = "weight_moments"
    payload = {
        "command": "cs-resolution",
        "q": format_complex(params.q),
        "levels": levels,
        "shifted": not args.unshifted,
        "seed": args.seed,
        "tolerance": tol,
        "diagonal": [float(v) for v in diag],
        "diagonal_residual": diag_residual,
        "moment_max_relative_error": float(moment_worst),
        "moments": [{"n": n, "value": v, "target": t, "relative_error": r}
                    for n, v, t, r in moment_rows],
        "passed": passed,
        "failing_relation": failing,
    }
    lines = [f"level weight sums (first {min(levels, 6)}): "
             + ", ".join(f"{v:.9f}" for v in diag[:6]),
             f"diagonal residual: {diag_residual:.3e} (tolerance {tol:.1e})",
             f"moment relative error (n <= {args.moments}): {moment_worst:.3e}",
             _verdict(passed)]
    if failing:
        lines.append(f"failing relation: {failing}")

    def figure(path):
        from . import report

        report.curve_figure(path, list(range(levels)),
                            {"level weight sum": diag},
                            "level", "weight sum",
                            "coherent resolution diagonal")

    _emit(args, "cs-resolution", payload, lines,
          (["n", "moment", "target", "relative_error"], moment_rows), figure)
    return 0 if passed else 1


def cmd_quon_dist(args) -> int:
    tol = _tolerance(args, 1e-12)
    if args.k is not None:
        q = -1.0 + 0j if args.k == 2 else np.exp(2j * np.pi / args.k)
    else:
        q = args.q
    if args.eta_grid:
        etas = parse_grid(args.eta_grid)
    else:
        etas = np.array([args.eta])
    table = quonstat.gas_scan(etas, q, k=args.k)
    rows = [[float(e.real), float(z.real), float(f.real), float(f.imag)]
            for e, z, f in table]
    check = None
    if args.k is not None and abs(q - 1) > 1e-12:
        worst = 0.0
        for eta in etas:
            worst = max(worst, quonstat.occupation_finite_sum(
                quonstat.ModeSpec(float(eta), q, k=args.k)).residual)
        check = float(worst)
    passed = check is None or check < tol
    payload = {
        "command": "quon-dist",
        "q": format_complex(q),
        "k": args.k,
        "seed": args.seed,
        "tolerance": tol,
        "rows": [{"eta": r[0], "partition": r[1], "occupation_real": r[2],
                  "occupation_imag": r[3]} for r in rows],
        "closed_form_residual": check,
        "passed": passed,
        "failing_relation": None if passed else "occupation_closed_form",
    }
    lines = [f"eta {r[0]:.4f}: partition {r[1]:.9f}  "
             f"occupation {format_complex(complex(r[2], r[3]))}" for r in rows[:10]]
    if len(rows) > 10:
        lines.append(f"... {len(rows) - 10} more rows")
    if check is not None:
        lines.append(f"closed-form residual: {check:.3e}")
    lines.append(_verdict(passed))

    def figure(path):
        from . import report

        report.curve_figure(path, [r[0] for r in rows],
                            {"occupation": [r[2] for r in rows],
                             "partition": [r[1] for r in rows]},
                            "eta", "value", "mode statistics")

    _emit(args, "quon-dist", payload, lines,
          (["eta", "partition", "occupation_real", "occupation_imag"], rows),
          figure)
    return 0 if passed else 1


def cmd_graded_check(args) -> int:
    res = graded.graded_resolution(args.k, reorder_exp=args.reorder,
                                   solve=args.solve)
    ov = graded.graded_overlap(args.k, args.reorder)
    h_exact = [repr(h) for h in res.h]
    h_numeric = [format_complex(h.to_complex()) for h in res.h]
    deg_match = {}
    for deg in range(1, args.k):
        deg_match[f"degree_{deg}"] = ov.difference.coefficient(deg, deg).is_zero()
    passed = res.is_identity
    payload = {
        "command": "graded-check",
        "k": args.k,
        "reorder_exp": graded.GradedAlgebra(args.k, args.reorder).reorder_exp,
        "solved": bool(args.solve),
        "seed": args.seed,
        "weights_exact": h_exact,
        "weights_numeric": h_numeric,
        "resolution_is_identity": res.is_identity,
        "overlap_matches_closed_form": deg_match,
        "passed": passed,
        "failing_relation": None if passed else "graded_resolution",
    }
    lines = [f"order {args.k}, exchange exponent {payload['reorder_exp']}"]
    lines += [f"weight h[{i}] = {h}" for i, h in enumerate(h_numeric)]
    lines.append(f"resolution is identity: {res.is_identity}")
    for key, val in deg_match.items():
        lines.append(f"overlap closed form {key}: "
                     + ("matches" if val else "differs"))
    lines.append(_verdict(passed))
    rows = [[i, h] for i, h in enumerate(h_numeric)]

    def figure(path):
        from . import report

        vals = [abs(h.to_complex()) for h in res.h]
        report.curve_figure(path, list(range(len(vals))),
                            {"|h|": vals}, "index", "magnitude",
                            "resolution weight magnitudes")

    _emit(args, "graded-check", payload, lines, (["index", "weight"], rows),
          figure)
    return 0 if passed else 1


def cmd_all_acceptance(args) -> int:
    results = acceptance.run_all(seed=args.seed)
    payload = {
        "command": "all-acceptance",
        "seed": args.seed,
        "results": [{
            "name": r.name,
            "passed": r.passed,
            "max_residual": r.max_residual,
            "tolerance": r.tolerance,
            "details": r.details,
        } for r in results],
        "passed": all(r.passed for r in results),
        "failing_relation": next((r.name for r in results if not r.passed), None),
    }
    lines = [r.line() for r in results]
    lines.append(_verdict(payload["passed"]))
    rows = [[r.name, int(r.passed), r.max_residual, r.tolerance]
            for r in results]

    def figure(path):
        from . import report

        report.residual_figure(path, [r.name for r in results],
                               [max(r.max_residual, 1e-18) for r in results],
                               0.0, "acceptance residuals")

    _emit(args, "all-acceptance", payload, lines,
          (["check", "passed", "max_residual", "tolerance"], rows), figure)
    return 0 if payload["passed"] else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qonkit",
        description="deformed oscillator toolkit: identity checks and tables")
    parser.add_argument("--version", action="version", version=__version__)
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json", "csv"),
                        default="text")
    common.add_argument("--outdir", default=None,
                        help="write JSON, CSV, and a PNG figure here")
    common.add_argument("--tol", type=float, default=None,
                        help="override tolerance (also QONKIT_TOL)")
    common.add_argument("--seed", type=int, default=0)
    sub = parser.add_subparsers(dest="subcommand", required=True)

    pq = sub.add_parser("qcalc", parents=[common],
                        help="deformed integers, factorials, exponentials")
    pq.add_argument("--scheme", choices=tuple(_SCHEMES), default="one-param")
    pq.add_argument("--q", type=parse_complex, default=0.5 + 0j)
    pq.add_argument("--p", type=parse_complex, default=None)
    pq.add_argument("--k", type=int, default=None)
    pq.add_argument("--n", type=int, default=5)
    pq.add_argument("--D", type=int, default=16, help="series truncation scale")
    pq.add_argument("--heading-variant", action="store_true")
    pq.add_argument("--exp-at", type=parse_complex, default=None)
    pq.set_defaults(func=cmd_qcalc)

    pb = sub.add_parser("braid-check", parents=[common],
                        help="braid and Yang-Baxter residuals")
    pb.add_argument("--preset", choices=("multiparametric", "classical"),
                    default="multiparametric")
    pb.add_argument("--d", type=int, default=3)
    pb.add_argument("--trials", type=int, default=10)
    pb.set_defaults(func=cmd_braid_check)

    pn = sub.add_parser("ncforms-check", parents=[common],
                        help="differential calculus consistency")
    pn.add_argument("--dims", type=int, default=3)
    pn.add_argument("--degree", type=int, default=2)
    pn.add_argument("--trials", type=int, default=20)
    pn.add_argument("--demo", action="store_true",
                    help="print a small worked example instead")
    pn.set_defaults(func=cmd_ncforms_check)

    pf = sub.add_parser("fock-verify", parents=[common],
                        help="ladder relation residual table")
    pf.add_argument("--scheme", choices=tuple(_SCHEMES), default="one-param")
    pf.add_argument("--q", type=parse_complex, default=0.5 + 0j)
    pf.add_argument("--p", type=parse_complex, default=None)
    pf.add_argument("--k", type=int, default=None)
    pf.add_argument("--D", type=int, default=8)
    pf.add_argument("--export", default=None,
                    help="write the representation matrices to this JSON file")
    pf.add_argument("--matrix", default=None,
                    help="load matrices from a previously exported JSON file")
    pf.set_defaults(func=cmd_fock_verify)

    pc = sub.add_parser("cs-resolution", parents=[common],
                        help="coherent resolution-of-unity checks")
    pc.add_argument("--q", type=parse_complex, default=0.5 + 0j)
    pc.add_argument("--levels", type=int, default=12)
    pc.add_argument("--moments", type=int, default=12)
    pc.add_argument("--unshifted", action="store_true",
                    help="use the unshifted weight (exposes the grid defect)")
    pc.set_defaults(func=cmd_cs_resolution)

    pd = sub.add_parser("quon-dist", parents=[common],
                        help="mode partition function and occupation")
    pd.add_argument("--k", type=int, default=None,
                    help="root order; the phase becomes exp(2 pi i / k)")
    pd.add_argument("--q", type=parse_complex, default=0.5 + 0j)
    pd.add_argument("--eta", type=float, default=1.0)
    pd.add_argument("--eta-grid", default=None,
                    help="start:stop:step grid over eta")
    pd.set_defaults(func=cmd_quon_dist)

    pg = sub.add_parser("graded-check", parents=[common],
                        help="exact nilpotent-variable identities")
    pg.add_argument("--k", type=int, choices=(2, 3), default=3)
    pg.add_argument("--reorder", type=int, default=None,
                    help="exchange exponent e in xi xibar = q^e xibar xi")
    pg.add_argument("--solve", action="store_true",
                    help="solve for the resolution weights instead of using "
                         "the closed form")
    pg.set_defaults(func=cmd_graded_check)

    pa = sub.add_parser("all-acceptance", parents=[common],
                        help="run the full property suite")
    pa.set_defaults(func=cmd_all_acceptance)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except QonkitError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 1
    except (ValueError, OSError) as exc:
        sys.stderr.write(f"usage error: {exc}\n")
        return 2


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
