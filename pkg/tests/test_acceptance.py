"""Acceptance suite: one test per criterion, one printed line per criterion.

Run with `pytest tests/test_acceptance.py -v -s` to see the lines; every
check is exact (integers and rationals only, no tolerances anywhere).
"""

import io
import json
import random
from fractions import Fraction

from grflop import bwb, cli, gamma, localmodel, quantum, schubert
from grflop.bundles import Ambient, normalize, tensor_summands
from grflop.gamma import ChVector, SymbolicSeries, extract_ch, psi_transform, zeta_symbol
from grflop.schubert import CohClass, FlopDatum, sigma
from grflop.weights import partitions_in_box


def _report(number, name, ok):
    print(f"acceptance {number} ({name}): {'PASS' if ok else 'FAIL'}")
    assert ok, f"acceptance criterion {number} ({name}) failed"


def test_criterion_1_vanishing_sweep():
    ok = True
    boundary_seen = False
    for n in range(2, 6):
        for r in range(1, n):
            report = bwb.verify_vanishing(r, n, 4)
            ok = ok and report.all_pass
            sub = normalize(Ambient(r, n).S)
            for check in report.checks:
                if check.family == "sub_times_sym" and check.summand:
                    alpha = tuple(int(x) for x in check.summand
                                  .split("alpha=[")[1].split("]")[0].split(","))
                    beta = tuple(int(x) for x in check.summand
                                 .split("beta=[")[1].split("]")[0].split(","))
                    for (a, _b) in tensor_summands(sub, {(alpha, beta): 1}):
                        if a[-1] == -1:
                            boundary_seen = True
    _report(1, "H^1 vanishing sweep r<n<=5, k<=4 incl. -1 boundary",
            ok and boundary_seen)


def test_criterion_2_negative_control():
    g12 = Ambient(1, 2)
    direct = bwb.cohomology(g12.S * g12.S) == {1: 1}
    control = bwb.verify_vanishing(1, 2, 2, control=True)
    _report(2, "negative control H^1(Gr(1,2), S(x)S) = 1 detected",
            direct and not control.all_pass and len(control.failures()) > 0)


def test_criterion_3_bwb_vs_riemann_roch():
    rng = random.Random(2024)
    ambients = [(r, n) for n in range(2, 5) for r in range(1, n)]
    count = 0
    ok = True
    while count < 200:
        r, n = rng.choice(ambients)
        expr = _random_expr(Ambient(r, n), rng)
        ok = ok and (bwb.euler_characteristic(expr) == schubert.hrr_euler(expr))
        count += 1
    _report(3, "euler characteristic: Bott == Riemann-Roch on 200 expressions",
            ok and count >= 200)


def _random_expr(amb, rng, depth=0):
    gens = [amb.S, amb.Sv, amb.Q, amb.Qv, amb.O()]
    if depth >= 2:
        return rng.choice(gens)
    kind = rng.randrange(6)
    if kind == 0:
        return rng.choice(gens)
    if kind == 1:
        return _random_expr(amb, rng, depth + 1) + _random_expr(amb, rng, depth + 1)
    if kind == 2:
        return _random_expr(amb, rng, depth + 1) * _random_expr(amb, rng, depth + 1)
    if kind == 3:
        return _random_expr(amb, rng, depth + 1).dual()
    if kind == 4:
        base = rng.choice(gens)
        if rng.random() < 0.4:
            base = base + rng.choice(gens)
        return base.sym(rng.randint(0, 3))
    return rng.choice(gens).schur(rng.choice([(1,), (2,), (1, 1), (2, 1)]))


def test_criterion_4_dimension_bookkeeping():
    ok = True
    for n in range(2, 11):
        for r in range(1, n):
            d = FlopDatum(r, n)
            ok = ok and d.dim_z == r * (n - r)
            ok = ok and d.dim_x == r * (n - r) + r * n
            ok = ok and schubert.semismall_check(d).passed
            ok = ok and 2 * r * (n - r) <= r * (n - r) + r * n
            ok = ok and schubert.k_equivalence_rank_check(d).passed
            ok = ok and r * n > r * (n - r) - 2
    _report(4, "dimension bookkeeping and inequalities r<n<=10", ok)


def test_criterion_5_crepancy():
    ok = True
    for n in range(2, 7):
        for r in range(1, n):
            ok = ok and schubert.crepancy_check(r, n).passed
    _report(5, "crepancy c_1(T) + c_1(S^n) = 0 for r<n<=6", ok)


def test_criterion_6_local_model_cohomology():
    ok = True
    for n in range(2, 6):
        for r in range(1, n):
            ok = ok and localmodel.compare_sides(r, n)
    for (r, n) in [(1, 2), (2, 4)]:
        box = partitions_in_box(r, n - r)
        for lam in box:
            for k in range(r * n + 1):
                coeffs = [schubert.zero(r, n)] * k + [sigma(lam, r, n)]
                image = localmodel.kirwan(
                    localmodel.EquivariantPolynomial(r, n, coeffs))
                expected = [schubert.zero(r, n)] * (r * n + 1)
                expected[k] = sigma(lam, r, n)
                ok = ok and image == localmodel.ProjBundleClass(
                    r, n, "minus", expected)
        rng = random.Random(97)
        for _ in range(10):
            def rand_poly():
                return localmodel.EquivariantPolynomial(r, n, [
                    CohClass(r, n, {rng.choice(box): rng.randint(-2, 2)})
                    for _ in range(rng.randint(1, r * n + 2))])
            g, h = rand_poly(), rand_poly()
            ok = ok and (localmodel.kirwan(g * h)
                         == localmodel.kirwan(g) * localmodel.kirwan(h))
    _report(6, "local model Betti agreement r<n<=5; Kirwan surjective and "
               "multiplicative", ok)


def test_criterion_7_quantum():
    ok = quantum.quantum_product((1,), (1,), 1, 2) == quantum.QClass(
        1, 2, {(): {1: 1}})
    ok = ok and quantum.quantum_product((1,), (2, 2), 2, 4) == quantum.QClass(
        2, 4, {(1,): {1: 1}})
    ok = ok and quantum.associativity_check(2, 4)
    for n in range(2, 7):
        for r in range(1, n):
            cert = quantum.semisimplicity_certificate(r, n, 1)
            ok = ok and cert.certified and len(cert.gcd_witness) == 1
    _report(7, "quantum anchors, associativity, semisimplicity r<n<=6 at q=1",
            ok)


def test_criterion_8_gamma_round_trip():
    rng = random.Random(888)
    ok = True
    trips = 0
    for (r, n) in [(1, 2), (1, 3), (2, 4)]:
        box = partitions_in_box(r, n - r)
        perturbed = gamma.gamma_class(r, n) + SymbolicSeries(
            r, n, {zeta_symbol(2): Fraction(5, 2) * sigma((1,), r, n)})
        for _ in range(17):
            comps = []
            for k in range(r * (n - r) + 1):
                terms = {lam: rng.randint(-3, 3)
                         for lam in box if sum(lam) == k}
                comps.append(CohClass(r, n, terms))
            alpha = ChVector(r, n, tuple(comps))
            ok = ok and extract_ch(psi_transform(alpha)) == alpha
            ok = ok and extract_ch(psi_transform(alpha, perturbed)) == alpha
            trips += 1
    _report(8, "Gamma transform round trip on 51 vectors + zeta invariance",
            ok and trips >= 51)


def test_criterion_9_determinism():
    def run(argv):
        out = io.StringIO()
        cli.run(argv, stdout=out, stderr=io.StringIO())
        return out.getvalue()

    commands = [
        ["bwb", "--r", "2", "--n", "4", "--bundle", "sym 2 (Sv) * Q",
         "--format", "json"],
        ["vanish", "--r", "2", "--n", "4", "--kmax", "3", "--format", "json"],
        ["schubert", "mult", "--r", "2", "--n", "4", "--a", "2,1", "--b", "1",
         "--format", "json"],
        ["schubert", "integrate", "--r", "2", "--n", "4",
         "--cls", '{"2,2": "1"}', "--format", "json"],
        ["schubert", "chern", "--r", "2", "--n", "4", "--bundle", "S",
         "--format", "json"],
        ["quantum", "mult", "--r", "2", "--n", "4", "--a", "2,1", "--b", "2,2",
         "--format", "json"],
        ["quantum", "semisimple", "--r", "2", "--n", "4", "--format", "json"],
        ["quantum", "assoc", "--r", "1", "--n", "4", "--format", "json"],
        ["localmodel", "presentation", "--r", "2", "--n", "4", "--side",
         "plus", "--format", "json"],
        ["localmodel", "betti", "--r", "2", "--n", "4", "--format", "json"],
        ["localmodel", "compare", "--r", "2", "--n", "4", "--format", "json"],
        ["localmodel", "kirwan", "--r", "1", "--n", "2",
         "--poly", '[{}, {}, {}, {"0": "1"}]', "--format", "json"],
        ["gamma", "roundtrip", "--r", "1", "--n", "3", "--format", "json"],
        ["flop", "datum", "--r", "2", "--n", "4", "--format", "json"],
        ["flop", "checks", "--r", "2", "--n", "4", "--format", "json"],
    ]
    ok = True
    for argv in commands:
        first, second = run(argv), run(argv)
        ok = ok and first == second and json.loads(first)["schema"] == 1
    widths = {run(["vanish", "--r", "2", "--n", "4", "--kmax", "4",
                   "--format", "json", "--jobs", str(j)]) for j in (1, 3, 5)}
    ok = ok and len(widths) == 1
    _report(9, "byte-identical JSON across runs and parallelism widths", ok)
