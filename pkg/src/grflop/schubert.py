"""Classical cohomology of Gr(r,n) in the Schubert basis.

CohClass is a rational linear combination of Schubert classes sigma_lambda
with lambda inside the r x (n-r) box; sigma_lambda has cohomological degree
2|lambda| and products are Littlewood-Richardson expansions truncated to the
box.  Chern characters are computed on bundle expression trees (never through
the irreducible decomposition, so Riemann-Roch is an independent oracle for
the Bott engine): power sums come from Newton's identities on the elementary
classes c_i(S^v) = sigma_{1^i}, c_i(Q) = sigma_i, symmetric powers from the
Adams-operation recursion, and Schur functors from the Jacobi-Trudi
determinant in symmetric powers.

All coefficients are exact Fractions; expansions are truncated at cohomological
degree 2r(n-r), above which everything vanishes.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial

from . import bundles, weights
from .weights import InputError, format_partition, parse_partition, partition


class CohClass:
    """Rational combination of Schubert classes on a fixed Gr(r,n)."""

    __slots__ = ("r", "n", "terms")

    def __init__(self, r: int, n: int, terms=None):
        if not (1 <= r < n):
            raise InputError(f"need 1 <= r < n, got ({r},{n})")
        self.r = r
        self.n = n
        clean = {}
        for lam, coeff in (terms or {}).items():
            lam = partition(lam)
            if len(lam) > r or (lam and lam[0] > n - r):
                raise InputError(f"{lam} does not fit the {r}x{n - r} box")
            coeff = Fraction(coeff)
            if coeff:
                clean[lam] = coeff
        self.terms = clean

    # -- construction helpers ------------------------------------------------

    @property
    def ambient(self):
        return (self.r, self.n)

    def _like(self, terms):
        out = CohClass.__new__(CohClass)
        out.r, out.n = self.r, self.n
        out.terms = {k: v for k, v in terms.items() if v}
        return out

    def _check(self, other):
        if self.ambient != other.ambient:
            raise InputError(
                f"ambient mismatch: {self.ambient} vs {other.ambient}")

    # -- ring operations -----------------------------------------------------

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = unit(self.r, self.n) * other
        self._check(other)
        terms = dict(self.terms)
        for lam, c in other.terms.items():
            terms[lam] = terms.get(lam, Fraction(0)) + c
        return self._like(terms)

    __radd__ = __add__

    def __neg__(self):
        return self._like({k: -v for k, v in self.terms.items()})

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Fraction(other) * unit(self.r, self.n)
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            c = Fraction(other)
            return self._like({k: v * c for k, v in self.terms.items()})
        self._check(other)
        cols = self.n - self.r
        out: dict = {}
        for lam, a in self.terms.items():
            for mu, b in other.terms.items():
                for nu, c in weights.lr_coefficients(lam, mu, self.r).items():
                    if nu and nu[0] > cols:
                        continue
                    out[nu] = out.get(nu, Fraction(0)) + a * b * c
        return self._like(out)

    __rmul__ = __mul__

    def __pow__(self, exponent: int):
        out = unit(self.r, self.n)
        for _ in range(exponent):
            out = out * self
        return out

    def __eq__(self, other):
        return (isinstance(other, CohClass) and self.ambient == other.ambient
                and self.terms == other.terms)

    def __hash__(self):
        return hash((self.ambient, tuple(sorted(self.terms.items()))))

    def __bool__(self):
        return bool(self.terms)

    # -- grading ---------------------------------------------------------

    def component(self, degree: int):
        """Part of half-degree `degree`, i.e. the |lambda| = degree terms."""
        return self._like(
            {k: v for k, v in self.terms.items() if sum(k) == degree})

    def degrees(self):
        return sorted({sum(k) for k in self.terms})

    def is_homogeneous(self):
        return len(self.degrees()) <= 1

    # -- serialization -----------------------------------------------------

    def to_json(self) -> dict:
        return {"ambient": [self.r, self.n],
                "terms": {format_partition(k): str(v)
                          for k, v in sorted(self.terms.items())}}

    @classmethod
    def from_json(cls, data) -> "CohClass":
        r, n = data["ambient"]
        return cls(r, n, {parse_partition(k): Fraction(v)
                          for k, v in data["terms"].items()})

    def __repr__(self):
        if not self.terms:
            return "0"
        bits = []
        for lam, c in sorted(self.terms.items(), key=lambda kv: (sum(kv[0]), kv[0])):
            name = "s[{}]".format(",".join(map(str, lam))) if lam else "1"
            bits.append(f"{c}*{name}" if name != "1" else f"{c}")
        return " + ".join(bits)


def zero(r: int, n: int) -> CohClass:
    return CohClass(r, n)


def unit(r: int, n: int) -> CohClass:
    return CohClass(r, n, {(): 1})


def sigma(lam, r: int, n: int) -> CohClass:
    return CohClass(r, n, {partition(lam): 1})


def product(a: CohClass, b: CohClass) -> CohClass:
    return a * b


def integrate(a: CohClass) -> Fraction:
    """Coefficient of the point class sigma_{(n-r)^r}."""
    top = ((a.n - a.r),) * a.r
    return a.terms.get(top, Fraction(0))


def poincare_polynomial(r: int, n: int):
    """Coefficient list of the Poincare polynomial in t (index = power)."""
    counts = [0] * (2 * r * (n - r) + 1)
    for lam in weights.partitions_in_box(r, n - r):
        counts[2 * sum(lam)] += 1
    return counts


# ---------------------------------------------------------------------------
# Chern classes and characters
# ---------------------------------------------------------------------------

def chern_classes_sub_dual(r: int, n: int):
    """c_i(S^v) = sigma_{1^i}; index 0 holds the unit."""
    return [unit(r, n)] + [sigma((1,) * i, r, n) for i in range(1, r + 1)]


def chern_classes_quot(r: int, n: int):
    return [unit(r, n)] + [sigma((i,), r, n) for i in range(1, n - r + 1)]


def _power_sums(chern, top):
    """Newton's identities: power sums p_k from elementary classes c_i."""
    r0, n0 = chern[0].ambient
    p = [zero(r0, n0)]
    for k in range(1, top + 1):
        acc = zero(r0, n0)
        for i in range(1, k):
            if i < len(chern):
                acc = acc + (-1) ** (i - 1) * chern[i] * p[k - i]
        if k < len(chern):
            acc = acc + (-1) ** (k - 1) * k * chern[k]
        p.append(acc)
    return p


def _ch_from_chern(chern, rank, r, n):
    top = r * (n - r)
    p = _power_sums(chern, top)
    out = rank * unit(r, n)
    for k in range(1, top + 1):
        out = out + p[k] * Fraction(1, factorial(k))
    return out


def _adams(a: CohClass, i: int) -> CohClass:
    """Adams operation on Chern characters: scale degree 2m by i^m."""
    return a._like({k: v * i ** sum(k) for k, v in a.terms.items()})


def _expr_rank(expr) -> int:
    op = expr.op
    r, n = expr.ambient
    if op in ("gen_S", "gen_Sv"):
        return r
    if op in ("gen_Q", "gen_Qv"):
        return n - r
    if op == "triv":
        return expr.k
    if op == "sum":
        return sum(_expr_rank(p) for p in expr.parts)
    if op == "tensor":
        out = 1
        for p in expr.parts:
            out *= _expr_rank(p)
        return out
    if op == "dual":
        return _expr_rank(expr.parts[0])
    if op == "sym":
        from math import comb
        return comb(_expr_rank(expr.parts[0]) + expr.k - 1, expr.k)
    if op == "schur":
        m = _expr_rank(expr.parts[0])
        if len(expr.lam) > m:
            return 0
        return weights.weyl_dimension(
            weights.weight_from_partition(expr.lam, m), m)
    raise InputError(f"malformed expression node {op!r}")


def _dual_class(a: CohClass) -> CohClass:
    return a._like({k: v * (-1) ** sum(k) for k, v in a.terms.items()})


def _ch_sym_powers(base: CohClass, k_max: int):
    """ch(Sym^j E) for j = 0..k_max via the Adams recursion
    k*ch(Sym^k E) = sum_i psi^i(ch E) ch(Sym^{k-i} E)."""
    r, n = base.ambient
    out = [unit(r, n)]
    adams = [None] + [_adams(base, i) for i in range(1, k_max + 1)]
    for k in range(1, k_max + 1):
        acc = zero(r, n)
        for i in range(1, k + 1):
            acc = acc + adams[i] * out[k - i]
        out.append(acc * Fraction(1, k))
    return out


def chern_character(expr, up_to: int | None = None) -> CohClass:
    """Exact Chern character of a bundle expression.

    Additive over direct sums, multiplicative over tensor products; the
    degree-0 part is the rank.  `up_to` truncates to cohomological degree
    2*up_to (everything is truncated at the dimension regardless).
    """
    r, n = expr.ambient
    out = _ch_expr(expr)
    if up_to is not None:
        out = out._like(
            {k: v for k, v in out.terms.items() if sum(k) <= up_to})
    return out


def _ch_expr(expr) -> CohClass:
    r, n = expr.ambient
    op = expr.op
    if op == "gen_Sv":
        return _ch_from_chern(chern_classes_sub_dual(r, n), r, r, n)
    if op == "gen_S":
        return _dual_class(_ch_from_chern(chern_classes_sub_dual(r, n), r, r, n))
    if op == "gen_Q":
        return _ch_from_chern(chern_classes_quot(r, n), n - r, r, n)
    if op == "gen_Qv":
        return _dual_class(_ch_from_chern(chern_classes_quot(r, n), n - r, r, n))
    if op == "triv":
        return expr.k * unit(r, n)
    if op == "sum":
        acc = zero(r, n)
        for p in expr.parts:
            acc = acc + _ch_expr(p)
        return acc
    if op == "tensor":
        acc = unit(r, n)
        for p in expr.parts:
            acc = acc * _ch_expr(p)
        return acc
    if op == "dual":
        return _dual_class(_ch_expr(expr.parts[0]))
    if op == "sym":
        return _ch_sym_powers(_ch_expr(expr.parts[0]), expr.k)[expr.k]
    if op == "schur":
        lam = expr.lam
        if not lam:
            return unit(r, n)
        rows = len(lam)
        need = max(lam[0] + rows, 1)
        sym = _ch_sym_powers(_ch_expr(expr.parts[0]), need)
        matrix = [[sym[lam[i] - i + j] if 0 <= lam[i] - i + j < len(sym)
                   else zero(r, n)
                   for j in range(rows)] for i in range(rows)]
        return _det(matrix, r, n)
    raise InputError(f"malformed expression node {op!r}")


def _det(matrix, r, n) -> CohClass:
    size = len(matrix)
    if size == 1:
        return matrix[0][0]
    acc = zero(r, n)
    for j in range(size):
        minor = [row[:j] + row[j + 1:] for row in matrix[1:]]
        acc = acc + (-1) ** j * matrix[0][j] * _det(minor, r, n)
    return acc


# ---------------------------------------------------------------------------
# Todd class and Riemann-Roch
# ---------------------------------------------------------------------------

@lru_cache(maxsize=None)
def _todd_log_coefficients(top: int):
    """Coefficients of log(x / (1 - e^{-x})) up to degree `top`."""
    # g = (1 - e^{-x})/x, then f = 1/g and L = log f with L' = f'/g... computed
    # as L' = f' * g / f ... simpler: L' = (1/f) f' = g * f', f = 1/g.
    g = [Fraction((-1) ** i, factorial(i + 1)) for i in range(top + 1)]
    f = _series_inverse(g, top)
    fprime = [f[i + 1] * (i + 1) for i in range(top)]
    gf = _series_mul(fprime, g, top - 1) if top else []
    out = [Fraction(0)] * (top + 1)
    for i, c in enumerate(gf):
        out[i + 1] = c / (i + 1)
    return tuple(out)


def _series_inverse(a, top):
    inv = [Fraction(1) / a[0]]
    for k in range(1, top + 1):
        acc = Fraction(0)
        for i in range(1, k + 1):
            if i < len(a):
                acc += a[i] * inv[k - i]
        inv.append(-acc / a[0])
    return inv


def _series_mul(a, b, top):
    out = [Fraction(0)] * (top + 1)
    for i, ai in enumerate(a):
        if i > top:
            break
        for j, bj in enumerate(b):
            if i + j > top:
                break
            out[i + j] += ai * bj
    return out


def _exp_class(a: CohClass) -> CohClass:
    """exp of a class with zero degree-0 part, truncated at the dimension."""
    r, n = a.ambient
    top = r * (n - r)
    out = unit(r, n)
    term = unit(r, n)
    for k in range(1, top + 1):
        term = term * a * Fraction(1, k)
        if not term:
            break
        out = out + term
    return out


@lru_cache(maxsize=None)
def todd_tangent(r: int, n: int) -> CohClass:
    """Todd class of the tangent bundle, from power sums of ch(T)."""
    amb = bundles.Ambient(r, n)
    ch_t = _ch_expr(amb.tangent)
    top = r * (n - r)
    coeffs = _todd_log_coefficients(top)
    log_td = zero(r, n)
    for m in range(1, top + 1):
        pm = ch_t.component(m) * factorial(m)
        log_td = log_td + coeffs[m] * pm
    return _exp_class(log_td)


def hrr_euler(expr) -> int:
    """Euler characteristic via chi(E) = integral of ch(E).td(T)."""
    r, n = expr.ambient
    chi = integrate(chern_character(expr) * todd_tangent(r, n))
    if chi.denominator != 1:
        raise AssertionError(f"Riemann-Roch integral not an integer: {chi}")
    return int(chi)


# ---------------------------------------------------------------------------
# Flop arithmetic
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class FlopDatum:
    """Dimension bookkeeping for an exceptional Gr(r,n) with normal bundle of
    rank rn inside a total space; derived fields are always recomputed."""

    r: int
    n: int

    def __post_init__(self):
        if not (1 <= self.r < self.n):
            raise InputError(f"need 1 <= r < n, got ({self.r},{self.n})")

    @property
    def dim_z(self) -> int:
        return self.r * (self.n - self.r)

    @property
    def normal_rank(self) -> int:
        return self.r * self.n

    @property
    def dim_x(self) -> int:
        return self.dim_z + self.normal_rank

    def to_json(self) -> dict:
        return {"r": self.r, "n": self.n, "dim_z": self.dim_z,
                "dim_x": self.dim_x, "normal_rank": self.normal_rank}


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    lhs: str
    relation: str
    rhs: str

    def to_json(self) -> dict:
        return {"name": self.name, "pass": self.passed,
                "witness": f"{self.lhs} {self.relation} {self.rhs}"}


def semismall_check(datum: FlopDatum) -> CheckResult:
    """2 dim Z <= dim X: fibers of the contraction are small enough."""
    lhs, rhs = 2 * datum.dim_z, datum.dim_x
    return CheckResult("semismall", lhs <= rhs, str(lhs), "<=", str(rhs))


def k_equivalence_rank_check(datum: FlopDatum) -> CheckResult:
    """normal rank rn exceeds r(n-r) - 2."""
    lhs, rhs = datum.normal_rank, datum.dim_z - 2
    return CheckResult("k_equivalence_rank", lhs > rhs, str(lhs), ">", str(rhs))


def crepancy_check(r: int, n: int) -> CheckResult:
    """c_1(T_Gr) + c_1(S^{+n}) = 0, computed from both Chern characters."""
    amb = bundles.Ambient(r, n)
    c1_tangent = chern_character(amb.tangent).component(1)
    c1_normal = n * chern_character(amb.S).component(1)
    total = c1_tangent + c1_normal
    return CheckResult("crepancy", not total, repr(c1_tangent), "+",
                       repr(c1_normal) + " = " + repr(total))
