"""Borel-Weil-Bott cohomology on Gr(r,n) and the H^1-vanishing sweep.

An irreducible summand (alpha; beta) determines the GL(n) weight
w = (alpha, -reversed(beta)); the dotted Weyl action "add rho, sort,
subtract rho" with rho = (n-1, ..., 1, 0) either hits a repeated entry
(all cohomology vanishes) or lands in a unique degree equal to the number
of inversions removed by sorting.  The convention is pinned by the anchor
cases H^0(P^1, O(1)) = 2 and O(-1) acyclic; only degrees and dimensions
are contractual, not the GL(n) weight convention itself.

The vanishing sweep checks, for k = 1..k_max, that H^1 of the deformation-
theoretic bundles vanishes: directly for the tangent and normal bundles
tensored with symmetric conormal powers, and for the per-composition tensor
families that dominate them.  With control=True the conormal is deliberately
replaced by copies of S, producing recorded failures; this exercises the
failure path of the checker.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from . import bundles, weights
from .weights import InputError


@dataclass(frozen=True)
class BwbResult:
    """Cohomology of one irreducible summand: at most one degree survives."""

    degree: int | None
    weight: tuple | None
    dimension: int

    @property
    def is_zero(self) -> bool:
        return self.degree is None


ALL_ZERO = BwbResult(None, None, 0)


@lru_cache(maxsize=None)
def _bott(w: tuple) -> BwbResult:
    n = len(w)
    rho = tuple(range(n - 1, -1, -1))
    shifted = [w[i] + rho[i] for i in range(n)]
    if len(set(shifted)) < n:
        return ALL_ZERO
    inversions = 0
    for i in range(n):
        for j in range(i + 1, n):
            if shifted[i] < shifted[j]:
                inversions += 1
    shifted.sort(reverse=True)
    weight = tuple(shifted[i] - rho[i] for i in range(n))
    return BwbResult(inversions, weight, weights.weyl_dimension(weight, n))


def bwb_irreducible(r: int, n: int, alpha, beta, multiplicity: int = 1) -> BwbResult:
    """Cohomology of Schur_alpha(S^v) (x) Schur_beta(Q) on Gr(r,n)."""
    if not (1 <= r < n):
        raise InputError(f"need 1 <= r < n, got ({r},{n})")
    alpha = weights.glweight(alpha, r)
    beta = weights.glweight(beta, n - r)
    w = alpha + tuple(-x for x in reversed(beta))
    res = _bott(w)
    if res.is_zero or multiplicity == 1:
        return res
    return BwbResult(res.degree, res.weight, res.dimension * multiplicity)


def cohomology_of_summands(summands: dict, r: int, n: int) -> dict:
    """Total cohomology {degree: dimension} of a summand multiset."""
    out: dict = {}
    for (alpha, beta), mult in summands.items():
        res = bwb_irreducible(r, n, alpha, beta, mult)
        if not res.is_zero:
            out[res.degree] = out.get(res.degree, 0) + res.dimension
    return {d: out[d] for d in sorted(out)}


def cohomology(expr: bundles.BundleExpr) -> dict:
    """Sheaf cohomology of a bundle expression; omitted degrees are zero."""
    r, n = expr.ambient
    return cohomology_of_summands(bundles.normalize(expr), r, n)


def euler_characteristic(expr: bundles.BundleExpr) -> int:
    return sum((-1) ** d * h for d, h in cohomology(expr).items())


def h1_of_summands(summands: dict, r: int, n: int) -> int:
    return cohomology_of_summands(summands, r, n).get(1, 0)


# ---------------------------------------------------------------------------
# The vanishing sweep
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class VanishingCheck:
    family: str
    k: int
    composition: tuple | None
    summand: str | None
    h1_dim: int

    @property
    def passed(self) -> bool:
        return self.h1_dim == 0

    def to_json(self) -> dict:
        return {
            "family": self.family,
            "k": self.k,
            "composition": list(self.composition) if self.composition is not None else None,
            "summand": self.summand,
            "h1_dim": self.h1_dim,
            "pass": self.passed,
        }


@dataclass
class VanishingReport:
    r: int
    n: int
    k_max: int
    control: bool
    checks: list

    @property
    def all_pass(self) -> bool:
        return all(c.passed for c in self.checks)

    def failures(self) -> list:
        return [c for c in self.checks if not c.passed]

    def to_json(self) -> dict:
        return {
            "params": {"r": self.r, "n": self.n, "k_max": self.k_max,
                       "control": self.control},
            "checks": [c.to_json() for c in self.checks],
            "all_pass": self.all_pass,
        }


def _summand_str(alpha, beta):
    return str(bundles.IrreducibleSummand(alpha, beta, 1))


@lru_cache(maxsize=None)
def _sym_factors(gen_key, exponents, r, n):
    """Tensor product of Sym^{l_t} of one generator, for a sorted exponent
    multiset; gen_key selects the conormal generator."""
    gen = {_conormal_summand(gen_key, r, n): 1}
    out = {((0,) * r, (0,) * (n - r)): 1}
    for e in exponents:
        if e == 0:
            continue
        piece = bundles._sym_irreducible(e, *next(iter(gen)))
        out = bundles.tensor_summands(out, piece)
    return out


def _conormal_summand(gen_key, r, n):
    if gen_key == "Sv":
        return ((1,) + (0,) * (r - 1), (0,) * (n - r))
    return ((0,) * (r - 1) + (-1,), (0,) * (n - r))


def _checks_for_k(r: int, n: int, k: int, gen_key: str) -> list:
    conormal_gen = {_conormal_summand(gen_key, r, n): 1}
    amb = bundles.Ambient(r, n)
    tangent = bundles.normalize(amb.tangent)
    sub = bundles.normalize(amb.S)
    subdual = bundles.normalize(amb.Sv)
    endo = bundles.tensor_summands(sub, subdual)
    conormal = {key: n for key in conormal_gen}
    normal = bundles.dual_summands(conormal)

    def sym_conormal_power(l):
        if gen_key == "Sv":
            return bundles.sym_conormal(r, n, l)
        return bundles.sym_summands(l, conormal)

    checks = [
        VanishingCheck(
            "tangent_direct", k, None, None,
            h1_of_summands(
                bundles.tensor_summands(tangent, sym_conormal_power(k)), r, n)),
        VanishingCheck(
            "normal_direct", k, None, None,
            h1_of_summands(
                bundles.tensor_summands(normal, sym_conormal_power(k + 1)), r, n)),
    ]
    for family, base, total in (
            ("sub_times_sym", sub, k + 1),
            ("subdual_times_sym", subdual, k),
            ("end_times_sym", endo, k)):
        for comp in weights.sym_power_compositions(total, n):
            factors = _sym_factors(
                gen_key, tuple(sorted(comp, reverse=True)), r, n)
            for (alpha, beta), mult in sorted(factors.items()):
                piece = bundles.tensor_summands(base, {(alpha, beta): mult})
                checks.append(VanishingCheck(
                    family, k, comp, _summand_str(alpha, beta),
                    h1_of_summands(piece, r, n)))
    return checks


def verify_vanishing(r: int, n: int, k_max: int, control: bool = False,
                     jobs: int = 1) -> VanishingReport:
    """Record H^1 of every bundle in the vanishing families for k <= k_max.

    Families, with F running over the summands of the per-composition tensor
    products of symmetric powers of the conormal generator:

    - tangent_direct:  T (x) Sym^k(conormal)
    - normal_direct:   normal (x) Sym^{k+1}(conormal)
    - sub_times_sym:       S (x) F,        compositions of k+1
    - subdual_times_sym:   S^v (x) F,      compositions of k
    - end_times_sym:       S (x) S^v (x) F, compositions of k

    Failures are recorded, never raised.  jobs > 1 fans the per-k blocks out
    to worker threads; the report ordering is independent of jobs.
    """
    if not (1 <= r < n):
        raise InputError(f"need 1 <= r < n, got ({r},{n})")
    if k_max < 1:
        raise InputError("k_max must be >= 1")
    if jobs < 1:
        raise InputError("jobs must be >= 1")
    gen_key = "S" if control else "Sv"
    ks = list(range(1, k_max + 1))
    if jobs == 1 or len(ks) == 1:
        blocks = [_checks_for_k(r, n, k, gen_key) for k in ks]
    else:
        from concurrent.futures import ThreadPoolExecutor
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            blocks = list(pool.map(
                lambda k: _checks_for_k(r, n, k, gen_key), ks))
    checks = [check for block in blocks for check in block]
    return VanishingReport(r, n, k_max, control, checks)
