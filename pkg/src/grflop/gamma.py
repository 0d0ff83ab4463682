"""Formal Gamma-class transform and Chern-character extraction.

SymbolicSeries is a finite sum of cohomology classes tagged by monomials in
formal symbols: half-integer powers of z, nonnegative powers of log z, powers
of 2*pi*sqrt(-1), of the Euler-Mascheroni constant, and of zeta values; the
symbols are algebraically independent (zeta(2) is deliberately NOT rewritten
as a power of pi, since the extraction argument is pure term-matching and an
identification would contaminate the extraction slots).

The transform sends a Chern-character vector alpha to

    z^{-mu} z^{rho} (Gamma cup (2 pi i)^{deg/2} alpha)

where Gamma is the Gamma class of the tangent bundle, rho = c_1(T) acts by
cup product with log z bookkeeping, and z^{-mu} grades by z^{dim/2 - deg/2};
the common factor z^{dim/2} is removed at the end, leaving integer z-powers.
Because every Gamma-class term beyond 1 carries a gamma or zeta tag, the
coefficient of (2 pi i)^k z^{-k} log(z)^0 free of those tags is exactly ch_k,
and extract_ch inverts the transform on the nose.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import NamedTuple

from . import bundles, schubert
from .schubert import CohClass, unit, zero
from .weights import InputError


class Monomial(NamedTuple):
    """Exponent vector of the formal symbols; zeta is a sorted tuple of
    (weight, exponent) pairs with positive exponents."""

    z: Fraction = Fraction(0)
    logz: int = 0
    twopii: int = 0
    gamma_em: int = 0
    zeta: tuple = ()

    def __mul__(self, other):
        zmap = dict(self.zeta)
        for m, e in other.zeta:
            zmap[m] = zmap.get(m, 0) + e
        return Monomial(self.z + other.z, self.logz + other.logz,
                        self.twopii + other.twopii,
                        self.gamma_em + other.gamma_em,
                        tuple(sorted((m, e) for m, e in zmap.items() if e)))

    def is_symbol_free(self) -> bool:
        return self.gamma_em == 0 and not self.zeta

    def to_json(self) -> dict:
        return {"z": str(self.z), "logz": self.logz, "twopii": self.twopii,
                "gammaEM": self.gamma_em,
                "zeta": {str(m): e for m, e in self.zeta}}


ONE = Monomial()


def zeta_symbol(m: int, exponent: int = 1) -> Monomial:
    if m < 2:
        raise InputError("zeta symbols start at weight 2")
    return Monomial(zeta=((m, exponent),))


class SymbolicSeries:
    """Finite sum of (monomial, CohClass) terms over a fixed Gr(r,n)."""

    __slots__ = ("r", "n", "terms")

    def __init__(self, r: int, n: int, terms=None):
        self.r, self.n = r, n
        clean = {}
        for mono, cls in (terms or {}).items():
            if cls.ambient != (r, n):
                raise InputError("class ambient does not match series ambient")
            if cls:
                clean[mono] = cls
        self.terms = clean

    @property
    def ambient(self):
        return (self.r, self.n)

    def _check(self, other):
        if self.ambient != other.ambient:
            raise InputError("ambient mismatch")

    def __add__(self, other):
        self._check(other)
        terms = dict(self.terms)
        for mono, cls in other.terms.items():
            acc = terms.get(mono, zero(self.r, self.n)) + cls
            if acc:
                terms[mono] = acc
            else:
                terms.pop(mono, None)
        return SymbolicSeries(self.r, self.n, terms)

    def __sub__(self, other):
        return self + other.scale(-1)

    def scale(self, c) -> "SymbolicSeries":
        return SymbolicSeries(self.r, self.n,
                              {m: cls * Fraction(c) for m, cls in self.terms.items()})

    def __mul__(self, other) -> "SymbolicSeries":
        self._check(other)
        out: dict = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                prod = c1 * c2
                if not prod:
                    continue
                key = m1 * m2
                acc = out.get(key, zero(self.r, self.n)) + prod
                if acc:
                    out[key] = acc
                else:
                    out.pop(key, None)
        return SymbolicSeries(self.r, self.n, out)

    def coefficient(self, mono: Monomial) -> CohClass:
        return self.terms.get(mono, zero(self.r, self.n))

    def __eq__(self, other):
        return (isinstance(other, SymbolicSeries)
                and self.ambient == other.ambient and self.terms == other.terms)

    def __len__(self):
        return len(self.terms)

    def to_json(self) -> list:
        keyed = sorted(self.terms.items(),
                       key=lambda kv: (kv[0].z, kv[0].logz, kv[0].twopii,
                                       kv[0].gamma_em, kv[0].zeta))
        return [{"class": cls.to_json(), "monomial": mono.to_json()}
                for mono, cls in keyed]

    def __repr__(self):
        bits = []
        for mono, cls in sorted(self.terms.items(),
                                key=lambda kv: (kv[0].z, kv[0].logz,
                                                kv[0].twopii, kv[0].gamma_em,
                                                kv[0].zeta)):
            tags = []
            if mono.z:
                tags.append(f"z^{mono.z}")
            if mono.logz:
                tags.append(f"logz^{mono.logz}")
            if mono.twopii:
                tags.append(f"twopii^{mono.twopii}")
            if mono.gamma_em:
                tags.append(f"gammaEM^{mono.gamma_em}")
            for m, e in mono.zeta:
                tags.append(f"zeta({m})^{e}")
            bits.append("[" + " ".join(tags) + "]*(" + repr(cls) + ")"
                        if tags else "(" + repr(cls) + ")")
        return " + ".join(bits) if bits else "0"


def _series_unit(r, n):
    return SymbolicSeries(r, n, {ONE: unit(r, n)})


@dataclass(frozen=True)
class ChVector:
    """Chern character data: homogeneous classes ch_0, ..., ch_top."""

    r: int
    n: int
    components: tuple

    def __post_init__(self):
        top = self.r * (self.n - self.r)
        if len(self.components) != top + 1:
            raise InputError(f"expected {top + 1} components")
        for k, cls in enumerate(self.components):
            if cls.ambient != (self.r, self.n):
                raise InputError("component ambient mismatch")
            if cls and cls.degrees() != [k]:
                raise InputError(f"component {k} is not homogeneous of degree {k}")

    @property
    def ambient(self):
        return (self.r, self.n)

    @classmethod
    def from_class(cls, total: CohClass) -> "ChVector":
        r, n = total.ambient
        return cls(r, n, tuple(total.component(k)
                               for k in range(r * (n - r) + 1)))

    @classmethod
    def of_bundle(cls, expr) -> "ChVector":
        return cls.from_class(schubert.chern_character(expr))

    def total(self) -> CohClass:
        out = zero(self.r, self.n)
        for c in self.components:
            out = out + c
        return out

    def to_json(self):
        return {"ambient": [self.r, self.n],
                "components": [c.to_json() for c in self.components]}


# ---------------------------------------------------------------------------
# The Gamma class
# ---------------------------------------------------------------------------

@lru_cache(maxsize=None)
def gamma_class(r: int, n: int) -> SymbolicSeries:
    """Gamma class of the tangent bundle as a symbolic series (z-free).

    Built from log Gamma(1+x) = -gamma x + sum_{m>=2} zeta(m) (-x)^m / m on
    the power sums of the tangent Chern roots; the degree-0 part is 1 and
    every higher term carries a gamma or zeta symbol.
    """
    amb = bundles.Ambient(r, n)
    ch_t = schubert.chern_character(amb.tangent)
    top = r * (n - r)
    log_gamma = SymbolicSeries(r, n)
    for m in range(1, top + 1):
        pm = ch_t.component(m) * factorial(m)
        if not pm:
            continue
        if m == 1:
            log_gamma = log_gamma + SymbolicSeries(
                r, n, {Monomial(gamma_em=1): -1 * pm})
        else:
            coeff = Fraction((-1) ** m, m)
            log_gamma = log_gamma + SymbolicSeries(
                r, n, {zeta_symbol(m): coeff * pm})
    # exponentiate; terms beyond the top cohomological degree vanish
    out = _series_unit(r, n)
    term = _series_unit(r, n)
    for k in range(1, top + 1):
        term = (term * log_gamma).scale(Fraction(1, k))
        if not term.terms:
            break
        out = out + term
    return out


# ---------------------------------------------------------------------------
# The transform and the extraction
# ---------------------------------------------------------------------------

def psi_transform(alpha: ChVector, gamma: SymbolicSeries | None = None) -> SymbolicSeries:
    """z^{-mu} z^{rho} (Gamma cup (2 pi i)^{deg/2} alpha), common z^{dim/2}
    factor removed.

    A perturbed Gamma series may be passed in place of the canonical one (the
    zeta-independence of the extraction is a testable property).
    """
    r, n = alpha.r, alpha.n
    if gamma is None:
        gamma = gamma_class(r, n)
    elif gamma.ambient != (r, n):
        raise InputError("gamma series ambient mismatch")
    top = r * (n - r)
    # (2 pi i)^{deg/2} alpha
    tagged = SymbolicSeries(r, n, {
        Monomial(twopii=k): alpha.components[k]
        for k in range(top + 1) if alpha.components[k]})
    cup = gamma * tagged
    # z^{rho}: multiply by sum_k (log z)^k rho^k / k!
    rho = schubert.chern_character(bundles.Ambient(r, n).tangent).component(1)
    zrho = SymbolicSeries(r, n, {ONE: unit(r, n)})
    power = unit(r, n)
    for k in range(1, top + 1):
        power = power * rho
        if not power:
            break
        zrho = zrho + SymbolicSeries(
            r, n, {Monomial(logz=k): power * Fraction(1, factorial(k))})
    graded = zrho * cup
    # z^{-mu} grading and removal of the common z^{dim/2}
    out: dict = {}
    for mono, cls in graded.terms.items():
        for k in cls.degrees():
            piece = cls.component(k)
            key = Monomial(mono.z - k, mono.logz, mono.twopii,
                           mono.gamma_em, mono.zeta)
            acc = out.get(key, zero(r, n)) + piece
            if acc:
                out[key] = acc
            else:
                out.pop(key, None)
    return SymbolicSeries(r, n, out)


def extract_ch(series: SymbolicSeries) -> ChVector:
    """Read ch_k off the (2 pi i)^k z^{-k} log(z)^0 symbol-free slots."""
    r, n = series.ambient
    top = r * (n - r)
    for mono in series.terms:
        if mono.z.denominator != 1:
            raise InputError(
                "series is not reduced: fractional z-exponent "
                f"{mono.z} (common factor not removed?)")
    components = []
    for k in range(top + 1):
        slot = Monomial(z=Fraction(-k), twopii=k)
        components.append(series.coefficient(slot).component(k))
    return ChVector(r, n, tuple(components))
