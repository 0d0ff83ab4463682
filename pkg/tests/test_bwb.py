import json
import random

import pytest

from grflop import bwb, schubert
from grflop.bundles import Ambient, normalize, tensor_summands
from grflop.bwb import (
    ALL_ZERO, bwb_irreducible, cohomology, euler_characteristic,
    verify_vanishing,
)
from grflop.weights import InputError


def test_line_bundle_anchors():
    res = bwb_irreducible(1, 2, (1,), (0,))
    assert (res.degree, res.dimension) == (0, 2)
    assert bwb_irreducible(1, 2, (-1,), (0,)).is_zero
    res = bwb_irreducible(1, 2, (-2,), (0,))
    assert (res.degree, res.dimension) == (1, 1)


def test_multiplicity_scales_dimension():
    res = bwb_irreducible(1, 2, (1,), (0,), multiplicity=3)
    assert res.dimension == 6


def test_cohomology_anchors():
    g12, g24 = Ambient(1, 2), Ambient(2, 4)
    assert cohomology(g12.tangent) == {0: 3}
    assert cohomology(g24.O()) == {0: 1}
    assert cohomology(g12.S * g12.S) == {1: 1}
    assert cohomology(g24.tangent) == {0: 15}


def test_euler_characteristic_anchors():
    g12, g24 = Ambient(1, 2), Ambient(2, 4)
    assert euler_characteristic(g12.Sv) == 2
    assert euler_characteristic(g12.S * g12.S) == -1
    assert euler_characteristic(g24.O()) == 1


def test_bott_alternative():
    # every irreducible summand has at most one nonzero degree, bounded by dim
    rng = random.Random(11)
    for _ in range(300):
        n = rng.randint(2, 5)
        r = rng.randint(1, n - 1)
        alpha = tuple(sorted((rng.randint(-3, 3) for _ in range(r)),
                             reverse=True))
        beta = tuple(sorted((rng.randint(-3, 3) for _ in range(n - r)),
                            reverse=True))
        res = bwb_irreducible(r, n, alpha, beta)
        if not res.is_zero:
            assert 0 <= res.degree <= r * (n - r)
            assert res.dimension >= 1


def test_serre_duality():
    # H^i(E) = H^{dim - i}(E^v (x) K), K the n-th power of det S
    rng = random.Random(5)
    for _ in range(200):
        n = rng.randint(2, 4)
        r = rng.randint(1, n - 1)
        dim = r * (n - r)
        alpha = tuple(sorted((rng.randint(-3, 3) for _ in range(r)),
                             reverse=True))
        beta = tuple(sorted((rng.randint(-3, 3) for _ in range(n - r)),
                            reverse=True))
        summands = {(alpha, beta): 1}
        canonical = {((-n,) * r, (0,) * (n - r)): 1}
        twisted = tensor_summands(
            {(tuple(-x for x in reversed(alpha)),
              tuple(-x for x in reversed(beta))): 1}, canonical)
        lhs = bwb.cohomology_of_summands(summands, r, n)
        rhs = bwb.cohomology_of_summands(twisted, r, n)
        assert lhs == {dim - d: h for d, h in rhs.items()}, (r, n, alpha, beta)


def test_bwb_matches_riemann_roch():
    rng = random.Random(3)
    for _ in range(60):
        n = rng.randint(2, 4)
        r = rng.randint(1, n - 1)
        expr = _random_expr(Ambient(r, n), rng)
        assert euler_characteristic(expr) == schubert.hrr_euler(expr), expr


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
    lam = rng.choice([(1,), (2,), (1, 1), (2, 1)])
    return rng.choice(gens).schur(lam)


def test_vanishing_sweep_small():
    for (r, n, kmax) in [(1, 2, 3), (2, 3, 2), (1, 3, 3)]:
        report = verify_vanishing(r, n, kmax)
        assert report.all_pass
        assert report.failures() == []
        families = {c.family for c in report.checks}
        assert families == {"tangent_direct", "normal_direct",
                            "sub_times_sym", "subdual_times_sym",
                            "end_times_sym"}


def test_vanishing_sweep_covers_boundary_weights():
    # the checked bundles must include summands whose last alpha entry is -1
    r, n = 2, 4
    sub = normalize(Ambient(r, n).S)
    report = verify_vanishing(r, n, 2)
    seen = set()
    for check in report.checks:
        if check.family == "sub_times_sym" and check.summand:
            alpha = tuple(int(x) for x in
                          check.summand.split("alpha=[")[1].split("]")[0].split(","))
            beta = tuple(int(x) for x in
                         check.summand.split("beta=[")[1].split("]")[0].split(","))
            for (a, b) in tensor_summands(sub, {(alpha, beta): 1}):
                seen.add(a[-1])
    assert -1 in seen


def test_vanishing_control_fails():
    report = verify_vanishing(1, 2, 2, control=True)
    assert not report.all_pass
    assert any(c.h1_dim > 0 for c in report.checks)
    # and the machinery pins the nonvanishing H^1 of S (x) S itself
    g12 = Ambient(1, 2)
    assert cohomology(g12.S * g12.S) == {1: 1}


def test_vanishing_jobs_deterministic():
    a = verify_vanishing(2, 4, 3, jobs=1)
    b = verify_vanishing(2, 4, 3, jobs=4)
    assert json.dumps(a.to_json()) == json.dumps(b.to_json())


def test_vanishing_report_json_shape():
    report = verify_vanishing(1, 2, 1)
    data = report.to_json()
    assert set(data) == {"params", "checks", "all_pass"}
    assert data["all_pass"] is True
    for check in data["checks"]:
        assert set(check) == {"family", "k", "composition", "summand",
                              "h1_dim", "pass"}


def test_input_errors():
    with pytest.raises(InputError):
        verify_vanishing(2, 2, 1)
    with pytest.raises(InputError):
        verify_vanishing(1, 2, 0)
    with pytest.raises(InputError):
        bwb_irreducible(1, 2, (1, 0), (0,))


def test_all_zero_constant():
    assert ALL_ZERO.is_zero and ALL_ZERO.dimension == 0
