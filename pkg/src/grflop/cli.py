"""Command-line verification frontend.

Every subcommand runs one verification (or reports one computation) and emits
a text or JSON report; JSON reports carry a top-level schema version, contain
only exact numbers (integers, or rationals rendered as strings), and are byte
identical across repeated runs and parallelism widths.

Exit codes: 0 all requested checks pass, 1 a mathematical check failed,
2 usage or input error.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from fractions import Fraction

from . import bundles, bwb, gamma, localmodel, quantum, schubert, weights
from .weights import InputError

SCHEMA = 1

# Which library operations each subcommand exercises (each operation has
# exactly one home; the test suite enforces coverage).
COMMAND_TABLE = {
    "bwb": ("bundles.normalize", "bwb.bwb_irreducible", "bwb.cohomology",
            "bwb.euler_characteristic", "weights.weyl_dimension"),
    "vanish": ("bwb.verify_vanishing", "bundles.sym_conormal",
               "bundles.tensor_summands", "weights.sym_power_compositions"),
    "schubert mult": ("schubert.product", "weights.lr_coefficients"),
    "schubert integrate": ("schubert.integrate",),
    "schubert chern": ("schubert.chern_character", "schubert.hrr_euler"),
    "quantum mult": ("quantum.quantum_product",),
    "quantum semisimple": ("quantum.semisimplicity_certificate",
                           "quantum.multiplication_matrix"),
    "quantum assoc": ("quantum.associativity_check",),
    "localmodel presentation": ("localmodel.presentation",),
    "localmodel betti": ("localmodel.poincare_polynomial_bar",
                         "schubert.poincare_polynomial"),
    "localmodel compare": ("localmodel.compare_sides",),
    "localmodel kirwan": ("localmodel.kirwan",),
    "gamma roundtrip": ("gamma.gamma_class", "gamma.psi_transform",
                        "gamma.extract_ch"),
    "flop datum": ("localmodel.flop_datum",),
    "flop checks": ("schubert.semismall_check",
                    "schubert.k_equivalence_rank_check",
                    "schubert.crepancy_check"),
}


def _ambient_args(parser):
    parser.add_argument("--r", type=int, required=True)
    parser.add_argument("--n", type=int, required=True)


def _format_arg(parser):
    parser.add_argument("--format", choices=("text", "json"), default="text")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="grflop",
        description="exact verification toolkit for simple Grassmannian flops")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("bwb", help="cohomology of a bundle expression")
    _ambient_args(p)
    p.add_argument("--bundle", required=True,
                   help="expression over S, Sv, Q, Qv, O with + * sym dual schur")
    _format_arg(p)

    p = sub.add_parser("vanish", help="H^1 vanishing sweep")
    _ambient_args(p)
    p.add_argument("--kmax", type=int, default=3)
    p.add_argument("--control", action="store_true",
                   help="flip the conormal generator to force failures")
    p.add_argument("--jobs", type=int, default=1)
    _format_arg(p)

    p = sub.add_parser("schubert", help="classical Schubert calculus")
    ssub = p.add_subparsers(dest="subcommand", required=True)
    q = ssub.add_parser("mult")
    _ambient_args(q)
    q.add_argument("--a", required=True, help="partition, e.g. 2,1")
    q.add_argument("--b", required=True)
    _format_arg(q)
    q = ssub.add_parser("integrate")
    _ambient_args(q)
    q.add_argument("--cls", required=True,
                   help='JSON terms, e.g. {"2,2": "3/2"}')
    _format_arg(q)
    q = ssub.add_parser("chern")
    _ambient_args(q)
    q.add_argument("--bundle", required=True)
    q.add_argument("--up-to", type=int, default=None, dest="up_to")
    _format_arg(q)

    p = sub.add_parser("quantum", help="quantum Schubert calculus")
    qsub = p.add_subparsers(dest="subcommand", required=True)
    q = qsub.add_parser("mult")
    _ambient_args(q)
    q.add_argument("--a", required=True)
    q.add_argument("--b", required=True)
    _format_arg(q)
    q = qsub.add_parser("semisimple")
    _ambient_args(q)
    q.add_argument("--q0", default="1")
    _format_arg(q)
    q = qsub.add_parser("assoc")
    _ambient_args(q)
    _format_arg(q)

    p = sub.add_parser("localmodel", help="projective local model cohomology")
    lsub = p.add_subparsers(dest="subcommand", required=True)
    for name in ("presentation", "betti"):
        q = lsub.add_parser(name)
        _ambient_args(q)
        q.add_argument("--side", choices=localmodel.SIDES, default="minus")
        _format_arg(q)
    q = lsub.add_parser("compare")
    _ambient_args(q)
    _format_arg(q)
    q = lsub.add_parser("kirwan")
    _ambient_args(q)
    q.add_argument("--side", choices=localmodel.SIDES, default="minus")
    q.add_argument("--poly", required=True,
                   help="JSON list of CohClass terms by power of the "
                        'equivariant parameter, e.g. [{}, {"0": "1"}]')
    _format_arg(q)

    p = sub.add_parser("gamma", help="Gamma-class transform checks")
    gsub = p.add_subparsers(dest="subcommand", required=True)
    q = gsub.add_parser("roundtrip")
    _ambient_args(q)
    q.add_argument("--samples", type=int, default=20)
    q.add_argument("--seed", type=int, default=0)
    _format_arg(q)

    p = sub.add_parser("flop", help="flop datum and arithmetic checks")
    fsub = p.add_subparsers(dest="subcommand", required=True)
    for name in ("datum", "checks"):
        q = fsub.add_parser(name)
        _ambient_args(q)
        _format_arg(q)

    return parser


# ---------------------------------------------------------------------------
# Handlers: each returns (passed, report dict)
# ---------------------------------------------------------------------------

def _cmd_bwb(args):
    expr = bundles.parse_expr(args.bundle, args.r, args.n)
    summands = bundles.normalize(expr)
    report = {
        "params": {"r": args.r, "n": args.n, "bundle": args.bundle},
        "summands": bundles.summands_to_json(summands),
        "rank": bundles.total_rank(summands),
        "cohomology": {str(d): h for d, h in bwb.cohomology(expr).items()},
        "euler_characteristic": bwb.euler_characteristic(expr),
    }
    return True, report


def _cmd_vanish(args):
    report = bwb.verify_vanishing(args.r, args.n, args.kmax,
                                  control=args.control, jobs=args.jobs)
    return report.all_pass, report.to_json()


def _cmd_schubert_mult(args):
    a = schubert.sigma(weights.parse_partition(args.a), args.r, args.n)
    b = schubert.sigma(weights.parse_partition(args.b), args.r, args.n)
    prod = a * b
    return True, {
        "params": {"r": args.r, "n": args.n, "a": args.a, "b": args.b},
        "product": prod.to_json(),
    }


def _cmd_schubert_integrate(args):
    terms = json.loads(args.cls)
    cls = schubert.CohClass(args.r, args.n, {
        weights.parse_partition(k): Fraction(v) for k, v in terms.items()})
    return True, {
        "params": {"r": args.r, "n": args.n, "cls": cls.to_json()},
        "integral": str(schubert.integrate(cls)),
    }


def _cmd_schubert_chern(args):
    expr = bundles.parse_expr(args.bundle, args.r, args.n)
    ch = schubert.chern_character(expr, up_to=args.up_to)
    return True, {
        "params": {"r": args.r, "n": args.n, "bundle": args.bundle,
                   "up_to": args.up_to},
        "chern_character": ch.to_json(),
        "hrr_euler": schubert.hrr_euler(expr),
    }


def _cmd_quantum_mult(args):
    prod = quantum.quantum_product(
        weights.parse_partition(args.a), weights.parse_partition(args.b),
        args.r, args.n)
    return True, {
        "params": {"r": args.r, "n": args.n, "a": args.a, "b": args.b},
        "product": prod.to_json(),
    }


def _cmd_quantum_semisimple(args):
    cert = quantum.semisimplicity_certificate(args.r, args.n, Fraction(args.q0))
    return cert.certified, cert.to_json()


def _cmd_quantum_assoc(args):
    ok = quantum.associativity_check(args.r, args.n)
    return ok, {"params": {"r": args.r, "n": args.n}, "associative": ok}


def _cmd_localmodel_presentation(args):
    rel = localmodel.presentation(args.r, args.n, args.side)
    return True, {
        "params": {"r": args.r, "n": args.n, "side": args.side},
        "relation_coefficients": [c.to_json() for c in rel],
    }


def _cmd_localmodel_betti(args):
    poly = localmodel.poincare_polynomial_bar(args.r, args.n, args.side)
    base = schubert.poincare_polynomial(args.r, args.n)
    return True, {
        "params": {"r": args.r, "n": args.n, "side": args.side},
        "poincare_base": base,
        "poincare_total_space": poly,
    }


def _cmd_localmodel_compare(args):
    ok = localmodel.compare_sides(args.r, args.n)
    return ok, {
        "params": {"r": args.r, "n": args.n},
        "betti_minus": localmodel.poincare_polynomial_bar(args.r, args.n, "minus"),
        "betti_plus": localmodel.poincare_polynomial_bar(args.r, args.n, "plus"),
        "sides_agree": ok,
    }


def _cmd_localmodel_kirwan(args):
    coeffs = json.loads(args.poly)
    classes = [schubert.CohClass(args.r, args.n, {
        weights.parse_partition(k): Fraction(v) for k, v in entry.items()})
        for entry in coeffs]
    g = localmodel.EquivariantPolynomial(args.r, args.n, classes)
    image = localmodel.kirwan(g, args.side)
    return True, {
        "params": {"r": args.r, "n": args.n, "side": args.side,
                   "poly": args.poly},
        "image": image.to_json(),
    }


def _cmd_gamma_roundtrip(args):
    r, n = args.r, args.n
    rng = random.Random(args.seed)
    box = weights.partitions_in_box(r, n - r)
    failures = 0
    for _ in range(args.samples):
        comps = []
        for k in range(r * (n - r) + 1):
            terms = {lam: rng.randint(-3, 3) for lam in box if sum(lam) == k}
            comps.append(schubert.CohClass(r, n, terms))
        alpha = gamma.ChVector(r, n, tuple(comps))
        if gamma.extract_ch(gamma.psi_transform(alpha)) != alpha:
            failures += 1
        perturbed = gamma.gamma_class(r, n) + gamma.SymbolicSeries(
            r, n, {gamma.zeta_symbol(2): schubert.sigma((1,), r, n)})
        if gamma.extract_ch(gamma.psi_transform(alpha, perturbed)) != alpha:
            failures += 1
    ok = failures == 0
    return ok, {
        "params": {"r": r, "n": n, "samples": args.samples, "seed": args.seed},
        "round_trips": args.samples,
        "zeta_perturbed_round_trips": args.samples,
        "failures": failures,
        "all_pass": ok,
    }


def _cmd_flop_datum(args):
    datum = localmodel.flop_datum(args.r, args.n)
    return True, {"params": {"r": args.r, "n": args.n},
                  "datum": datum.to_json()}


def _cmd_flop_checks(args):
    datum = localmodel.flop_datum(args.r, args.n)
    results = [schubert.semismall_check(datum),
               schubert.k_equivalence_rank_check(datum),
               schubert.crepancy_check(args.r, args.n)]
    ok = all(res.passed for res in results)
    return ok, {
        "params": {"r": args.r, "n": args.n},
        "datum": datum.to_json(),
        "checks": [res.to_json() for res in results],
        "all_pass": ok,
    }


_HANDLERS = {
    "bwb": _cmd_bwb,
    "vanish": _cmd_vanish,
    "schubert mult": _cmd_schubert_mult,
    "schubert integrate": _cmd_schubert_integrate,
    "schubert chern": _cmd_schubert_chern,
    "quantum mult": _cmd_quantum_mult,
    "quantum semisimple": _cmd_quantum_semisimple,
    "quantum assoc": _cmd_quantum_assoc,
    "localmodel presentation": _cmd_localmodel_presentation,
    "localmodel betti": _cmd_localmodel_betti,
    "localmodel compare": _cmd_localmodel_compare,
    "localmodel kirwan": _cmd_localmodel_kirwan,
    "gamma roundtrip": _cmd_gamma_roundtrip,
    "flop datum": _cmd_flop_datum,
    "flop checks": _cmd_flop_checks,
}


def _render_text(report: dict, passed: bool, out) -> None:
    def walk(value, indent=""):
        if isinstance(value, dict):
            for key in value:
                child = value[key]
                if isinstance(child, (dict, list)):
                    out.write(f"{indent}{key}:\n")
                    walk(child, indent + "  ")
                else:
                    out.write(f"{indent}{key}: {child}\n")
        elif isinstance(value, list):
            for child in value:
                if isinstance(child, (dict, list)):
                    out.write(f"{indent}-\n")
                    walk(child, indent + "  ")
                else:
                    out.write(f"{indent}- {child}\n")

    walk(report)
    out.write("result: PASS\n" if passed else "result: FAIL\n")


def run(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout if stdout is not None else sys.stdout
    stderr = stderr if stderr is not None else sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code else 0
    key = args.command
    if getattr(args, "subcommand", None):
        key = f"{args.command} {args.subcommand}"
    handler = _HANDLERS[key]
    try:
        passed, report = handler(args)
    except (InputError, ValueError, json.JSONDecodeError) as exc:
        stderr.write(f"error: {exc}\n")
        return 2
    report = {"schema": SCHEMA, "command": key, **report, "pass": passed}
    if args.format == "json":
        stdout.write(json.dumps(report, indent=2, sort_keys=True) + "\n")
    else:
        _render_text(report, passed, stdout)
    return 0 if passed else 1


def main() -> None:
    raise SystemExit(run())


if __name__ == "__main__":
    main()
