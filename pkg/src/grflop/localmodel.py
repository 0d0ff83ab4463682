"""Cohomology of the compactified local models P(E_side + O) over Gr(r,n).

The side 'minus' carries E = S tensor an n-dimensional space (n copies of S);
the side 'plus' carries the mirror bundle on the identified Grassmannian.  By
the projective-bundle theorem H^*(P(E+O)) = H^*(Gr)[p] / (sum_i c_i(E) p^{rn+1-i})
with p the relative hyperplane class; classes are polynomials in p of degree
at most rn with Schubert-class coefficients, reduced greedily from the top by
the monic relation.

The Kirwan map sends the equivariant parameter to p and reduces; it is
surjective and multiplicative.  The two sides are compared through their own
presentations (graded dimension counts of each quotient ring), not through a
shared formula, so agreement is a computed fact rather than a tautology.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import factorial

from . import bundles, schubert, weights
from .schubert import CohClass, FlopDatum, unit, zero
from .weights import InputError

SIDES = ("minus", "plus")


def _check_side(side: str):
    if side not in SIDES:
        raise InputError(f"side must be one of {SIDES}, got {side!r}")


@lru_cache(maxsize=None)
def presentation(r: int, n: int, side: str = "minus"):
    """Relation coefficients (c_0, ..., c_{rn}) of the projective bundle.

    c_i is the i-th Chern class of E_side; c_0 = 1 and c(E + O) = c(E).  The
    minus side expands the total Chern class of n copies of the tautological
    subbundle by ring multiplication; the plus side reconstructs its Chern
    classes from power sums of the mirror bundle's Chern character through
    Newton's identities, providing an independently computed presentation.
    """
    _check_side(side)
    if not (1 <= r < n):
        raise InputError(f"need 1 <= r < n, got ({r},{n})")
    rank = r * n
    if side == "minus":
        # total Chern class c(S)^n, expanded degree by degree
        c_sub = [unit(r, n)] + [
            (-1) ** i * schubert.sigma((1,) * i, r, n) for i in range(1, r + 1)]
        total = [unit(r, n)]
        for _ in range(n):
            total = _poly_chern_mul(total, c_sub, r * (n - r))
        coeffs = total
    else:
        # Chern classes from Newton's identities on the power sums of ch(E')
        amb = bundles.Ambient(r, n)
        ch_e = n * schubert.chern_character(amb.S)
        top = r * (n - r)
        p = [zero(r, n)] + [ch_e.component(m) * factorial(m)
                            for m in range(1, top + 1)]
        coeffs = [unit(r, n)]
        for i in range(1, top + 1):
            acc = zero(r, n)
            for j in range(1, i + 1):
                acc = acc + (-1) ** (j - 1) * p[j] * coeffs[i - j]
            coeffs.append(acc * Fraction(1, i))
    out = list(coeffs[:rank + 1])
    while len(out) < rank + 1:
        out.append(zero(r, n))
    return tuple(out)


def _poly_chern_mul(a, b, top):
    out = [zero(a[0].r, a[0].n) for _ in range(top + 1)]
    for i, ai in enumerate(a):
        if i > top:
            break
        for j, bj in enumerate(b):
            if i + j > top:
                break
            out[i + j] = out[i + j] + ai * bj
    return out


class ProjBundleClass:
    """Polynomial in p with CohClass coefficients, reduced mod the relation."""

    __slots__ = ("r", "n", "side", "coeffs")

    def __init__(self, r: int, n: int, side: str, coeffs):
        _check_side(side)
        self.r, self.n, self.side = r, n, side
        rank = r * n
        cs = list(coeffs)
        cs = _reduce(cs, presentation(r, n, side), rank)
        while len(cs) < rank + 1:
            cs.append(zero(r, n))
        self.coeffs = tuple(cs)

    @property
    def ambient(self):
        return (self.r, self.n, self.side)

    def _check(self, other):
        if self.ambient != other.ambient:
            raise InputError(
                f"ambient mismatch: {self.ambient} vs {other.ambient}")

    def __add__(self, other):
        self._check(other)
        return ProjBundleClass(self.r, self.n, self.side,
                               [a + b for a, b in zip(self.coeffs, other.coeffs)])

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, CohClass)):
            return ProjBundleClass(self.r, self.n, self.side,
                                   [c * other for c in self.coeffs])
        self._check(other)
        prod = [zero(self.r, self.n)
                for _ in range(len(self.coeffs) + len(other.coeffs) - 1)]
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                prod[i + j] = prod[i + j] + a * b
        return ProjBundleClass(self.r, self.n, self.side, prod)

    __rmul__ = __mul__

    def __eq__(self, other):
        return (isinstance(other, ProjBundleClass)
                and self.ambient == other.ambient
                and self.coeffs == other.coeffs)

    def __hash__(self):
        return hash((self.ambient, self.coeffs))

    def __bool__(self):
        return any(self.coeffs)

    def to_json(self):
        return [[k, c.to_json()] for k, c in enumerate(self.coeffs) if c]

    def __repr__(self):
        bits = [f"({c})*p^{k}" if k else f"({c})"
                for k, c in enumerate(self.coeffs) if c]
        return " + ".join(bits) if bits else "0"


def _reduce(coeffs, rel, rank):
    """Rewrite p^{rank+1} = -sum_{i>=1} c_i p^{rank+1-i}, top degree first."""
    cs = list(coeffs)
    for d in range(len(cs) - 1, rank, -1):
        lead = cs[d]
        if not lead:
            continue
        cs[d] = lead._like({})
        for i in range(1, rank + 1):
            cs[d - i] = cs[d - i] - rel[i] * lead
    return cs[:rank + 1]


class EquivariantPolynomial:
    """Polynomial in the equivariant parameter with CohClass coefficients."""

    __slots__ = ("r", "n", "coeffs")

    def __init__(self, r: int, n: int, coeffs):
        self.r, self.n = r, n
        cs = [c if isinstance(c, CohClass) else Fraction(c) * unit(r, n)
              for c in coeffs]
        while cs and not cs[-1]:
            cs.pop()
        self.coeffs = tuple(cs)

    def _check(self, other):
        if (self.r, self.n) != (other.r, other.n):
            raise InputError("ambient mismatch")

    def __add__(self, other):
        self._check(other)
        size = max(len(self.coeffs), len(other.coeffs))
        def get(cs, i):
            return cs[i] if i < len(cs) else zero(self.r, self.n)
        return EquivariantPolynomial(
            self.r, self.n,
            [get(self.coeffs, i) + get(other.coeffs, i) for i in range(size)])

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, CohClass)):
            return EquivariantPolynomial(
                self.r, self.n, [c * other for c in self.coeffs])
        self._check(other)
        if not self.coeffs or not other.coeffs:
            return EquivariantPolynomial(self.r, self.n, [])
        prod = [zero(self.r, self.n)
                for _ in range(len(self.coeffs) + len(other.coeffs) - 1)]
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                prod[i + j] = prod[i + j] + a * b
        return EquivariantPolynomial(self.r, self.n, prod)

    __rmul__ = __mul__

    def __eq__(self, other):
        return (isinstance(other, EquivariantPolynomial)
                and (self.r, self.n) == (other.r, other.n)
                and self.coeffs == other.coeffs)

    def __repr__(self):
        bits = [f"({c})*L^{k}" if k else f"({c})"
                for k, c in enumerate(self.coeffs) if c]
        return " + ".join(bits) if bits else "0"


def kirwan(g: EquivariantPolynomial, side: str = "minus") -> ProjBundleClass:
    """Substitute the equivariant parameter by p and reduce."""
    return ProjBundleClass(g.r, g.n, side, list(g.coeffs))


def poincare_polynomial_bar(r: int, n: int, side: str = "minus"):
    """Poincare polynomial of P(E_side + O): base times fiber P^{rn}."""
    _check_side(side)
    base = schubert.poincare_polynomial(r, n)
    rank = r * n
    out = [0] * (len(base) + 2 * rank)
    for i, c in enumerate(base):
        for k in range(rank + 1):
            out[i + 2 * k] += c
    return out


def _betti_from_presentation(r: int, n: int, side: str):
    """Graded dimensions of the quotient ring, from its own presentation:
    checks the relation is monic of pure degree, then counts the monomial
    basis sigma_lambda p^k by degree."""
    rel = presentation(r, n, side)
    rank = r * n
    if rel[0] != unit(r, n):
        raise AssertionError("presentation is not monic")
    for i, c in enumerate(rel):
        if c and not all(sum(lam) == i for lam in c.terms):
            raise AssertionError("relation coefficient of impure degree")
    out = [0] * (2 * (r * (n - r) + rank) + 1)
    for lam in weights.partitions_in_box(r, n - r):
        for k in range(rank + 1):
            out[2 * (sum(lam) + k)] += 1
    return out


def compare_sides(r: int, n: int) -> bool:
    """Betti numbers of the two compactified sides agree, each side computed
    through its own presentation and checked against the bundle formula."""
    minus = _betti_from_presentation(r, n, "minus")
    plus = _betti_from_presentation(r, n, "plus")
    return (minus == plus
            and minus == poincare_polynomial_bar(r, n, "minus")
            and plus == poincare_polynomial_bar(r, n, "plus"))


def flop_datum(r: int, n: int) -> FlopDatum:
    return FlopDatum(r, n)
