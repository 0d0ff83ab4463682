"""Small quantum cohomology of Gr(r,n) and an exact semisimplicity certificate.

Quantum products are computed by the rim-hook recipe: expand classically with
Littlewood-Richardson coefficients allowing up to r rows, then reduce every
shape modulo border strips of length n.  Removals are performed on shifted
first-column hook lengths (beta numbers): removing a strip subtracts n from
one beta number, contributes one power of q, and carries the sign
(-1)^(r - height) where height is the number of rows the strip spans.  The
sign normalization is pinned by sigma_1 * sigma_1 = q on Gr(1,2) and
sigma_1 * sigma_{2,2} = q sigma_1 on Gr(2,4).

The semisimplicity certificate computes the characteristic polynomial of a
multiplication operator at a fixed nonzero q exactly and tests it for square
factors; a squarefree characteristic polynomial forces the operator's minimal
polynomial to have full degree, so the operator generates the (commutative)
ring and the ring is a product of fields.  Multiplication by sigma_1 is tried
first, but sigma_1 need not generate at special q values: on Gr(2,4) at q = 1
its characteristic polynomial is x^2(x^4 - 4) because two different pairs of
fourth roots of unity have equal sums.  The certificate therefore falls back
to a deterministic sequence of integer combinations of Schubert classes; any
squarefree hit is a sound certificate, and only exhausting the sequence
reports "inconclusive" (never a claim of non-semisimplicity).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from . import schubert, weights
from .weights import InputError, format_partition, partition


# q-polynomials are {power: integer coefficient} with no zero values.

def _qp_add(a: dict, b: dict) -> dict:
    out = dict(a)
    for k, v in b.items():
        new = out.get(k, 0) + v
        if new:
            out[k] = new
        else:
            out.pop(k, None)
    return out


def _qp_mul(a: dict, b: dict) -> dict:
    out: dict = {}
    for i, x in a.items():
        for j, y in b.items():
            k = i + j
            new = out.get(k, 0) + x * y
            if new:
                out[k] = new
            else:
                out.pop(k, None)
    return out


def qpoly_str(p: dict) -> str:
    if not p:
        return "0"
    bits = []
    for k in sorted(p, reverse=True):
        c = p[k]
        if k == 0:
            bits.append(str(c))
        else:
            q = "q" if k == 1 else f"q^{k}"
            if c == 1:
                bits.append(q)
            elif c == -1:
                bits.append(f"-{q}")
            else:
                bits.append(f"{c}*{q}")
    out = " + ".join(bits)
    return out.replace("+ -", "- ")


class QClass:
    """Schubert-basis class with integer q-polynomial coefficients."""

    __slots__ = ("r", "n", "terms")

    def __init__(self, r: int, n: int, terms=None):
        if not (1 <= r < n):
            raise InputError(f"need 1 <= r < n, got ({r},{n})")
        self.r, self.n = r, n
        clean = {}
        for lam, poly in (terms or {}).items():
            lam = partition(lam)
            if len(lam) > r or (lam and lam[0] > n - r):
                raise InputError(f"{lam} does not fit the {r}x{n - r} box")
            if isinstance(poly, int):
                poly = {0: poly}
            poly = {k: v for k, v in poly.items() if v}
            if poly:
                clean[lam] = poly
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
        for lam, poly in other.terms.items():
            merged = _qp_add(terms.get(lam, {}), poly)
            if merged:
                terms[lam] = merged
            else:
                terms.pop(lam, None)
        return QClass(self.r, self.n, terms)

    def scale(self, poly: dict) -> "QClass":
        return QClass(self.r, self.n,
                      {lam: _qp_mul(p, poly) for lam, p in self.terms.items()})

    def __mul__(self, other) -> "QClass":
        """Bilinear extension of the rim-hook product."""
        self._check(other)
        out = QClass(self.r, self.n)
        for lam, p in self.terms.items():
            for mu, q in other.terms.items():
                piece = quantum_product(lam, mu, self.r, self.n)
                out = out + piece.scale(_qp_mul(p, q))
        return out

    def __eq__(self, other):
        return (isinstance(other, QClass) and self.ambient == other.ambient
                and self.terms == other.terms)

    def __hash__(self):
        return hash((self.ambient,
                     tuple(sorted((k, tuple(sorted(v.items())))
                                  for k, v in self.terms.items()))))

    def __bool__(self):
        return bool(self.terms)

    def at_q(self, q0) -> dict:
        """Specialize q; returns {partition: Fraction}."""
        q0 = Fraction(q0)
        out = {}
        for lam, poly in self.terms.items():
            val = sum((c * q0 ** k for k, c in poly.items()), Fraction(0))
            if val:
                out[lam] = val
        return out

    def classical(self) -> schubert.CohClass:
        """The q = 0 part as a classical class."""
        return schubert.CohClass(
            self.r, self.n,
            {lam: poly[0] for lam, poly in self.terms.items() if 0 in poly})

    def to_json(self) -> dict:
        return {"ambient": [self.r, self.n],
                "terms": {format_partition(lam): qpoly_str(poly)
                          for lam, poly in sorted(self.terms.items())}}

    def __repr__(self):
        if not self.terms:
            return "0"
        bits = []
        for lam, poly in sorted(self.terms.items(), key=lambda kv: (sum(kv[0]), kv[0])):
            name = "s[{}]".format(",".join(map(str, lam))) if lam else "1"
            bits.append(f"({qpoly_str(poly)})*{name}")
        return " + ".join(bits)


def qsigma(lam, r: int, n: int) -> QClass:
    return QClass(r, n, {partition(lam): {0: 1}})


def _rim_hook_reduce(nu, r: int, n: int):
    """Reduce nu modulo n-strips: returns (core, q_power, sign) or None when
    the reduction dies (the n-core does not fit the box)."""
    beta = [nu[i] + (r - 1 - i) if i < len(nu) else (r - 1 - i)
            for i in range(r)]
    sign = 1
    d = 0
    occupied = set(beta)
    changed = True
    while changed:
        changed = False
        for idx in range(r):
            b = beta[idx]
            if b >= n and (b - n) not in occupied:
                occupied.remove(b)
                occupied.add(b - n)
                # strip height = 1 + number of beta values jumped over
                height = 1 + sum(1 for x in beta if b - n < x < b)
                sign *= (-1) ** (r - height)
                beta[idx] = b - n
                d += 1
                changed = True
    beta.sort(reverse=True)
    core = tuple(beta[i] - (r - 1 - i) for i in range(r))
    core = partition(core)
    if core and core[0] > n - r:
        return None
    return core, d, sign


def quantum_product(lam, mu, r: int, n: int) -> QClass:
    """sigma_lam * sigma_mu in the Schubert basis with q-power coefficients.

    Setting q = 0 recovers the classical product; every term satisfies
    |nu| + n * (q-power) = |lam| + |mu|.
    """
    lam, mu = partition(lam), partition(mu)
    for p in (lam, mu):
        if len(p) > r or (p and p[0] > n - r):
            raise InputError(f"{p} does not fit the {r}x{n - r} box")
    return _quantum_product_cached(lam, mu, r, n)


@lru_cache(maxsize=None)
def _quantum_product_cached(lam, mu, r, n) -> QClass:
    terms: dict = {}
    for nu, c in weights.lr_coefficients(lam, mu, r).items():
        reduced = _rim_hook_reduce(nu, r, n)
        if reduced is None:
            continue
        core, d, sign = reduced
        poly = terms.setdefault(core, {})
        poly[d] = poly.get(d, 0) + sign * c
    return QClass(r, n, terms)


def multiplication_matrix(c: QClass, q0=1, r: int | None = None,
                          n: int | None = None):
    """Matrix of x -> c * x in the Schubert basis with q specialized."""
    if r is None or n is None:
        r, n = c.ambient
    elif c.ambient != (r, n):
        raise InputError("class ambient does not match the requested one")
    basis = weights.partitions_in_box(r, n - r)
    index = {lam: i for i, lam in enumerate(basis)}
    size = len(basis)
    matrix = [[Fraction(0)] * size for _ in range(size)]
    for j, mu in enumerate(basis):
        col = (c * qsigma(mu, r, n)).at_q(q0)
        for lam, val in col.items():
            matrix[index[lam]][j] = val
    return matrix


# ---------------------------------------------------------------------------
# Exact characteristic polynomial and squarefreeness
# ---------------------------------------------------------------------------

def char_poly(matrix):
    """Characteristic polynomial det(xI - M), monic, by Faddeev-LeVerrier.

    Returns coefficients [c_0, ..., c_{N-1}, 1] in ascending degree.
    """
    size = len(matrix)
    coeffs = [Fraction(0)] * size + [Fraction(1)]
    m = [[Fraction(0)] * size for _ in range(size)]
    for k in range(1, size + 1):
        # m <- matrix @ (m + c_{N-k+1} I)
        shifted = [row[:] for row in m]
        for i in range(size):
            shifted[i][i] += coeffs[size - k + 1]
        m = [[sum(matrix[i][t] * shifted[t][j] for t in range(size))
              for j in range(size)] for i in range(size)]
        trace = sum(m[i][i] for i in range(size))
        coeffs[size - k] = -trace / k
    return coeffs


def poly_derivative(coeffs):
    return [coeffs[i] * i for i in range(1, len(coeffs))]


def poly_divmod(a, b):
    a = list(a)
    db = len(b) - 1
    while len(b) > 1 and not b[-1]:
        b = b[:-1]
        db -= 1
    quo = [Fraction(0)] * max(len(a) - db, 1)
    while len(a) - 1 >= db and any(a):
        da = len(a) - 1
        while da >= 0 and not a[da]:
            da -= 1
        if da < db:
            break
        factor = a[da] / b[db]
        quo[da - db] = factor
        for i in range(db + 1):
            a[da - db + i] -= factor * b[i]
        a = a[:da]
        if not a:
            a = [Fraction(0)]
    return quo, a


def poly_gcd(a, b):
    """Monic gcd over the rationals."""
    a = [Fraction(x) for x in a]
    b = [Fraction(x) for x in b]
    while any(b):
        _, rem = poly_divmod(a, b)
        a, b = b, rem
    while len(a) > 1 and not a[-1]:
        a.pop()
    lead = a[-1]
    if lead:
        a = [x / lead for x in a]
    return a


def poly_str(coeffs, var="x") -> str:
    bits = []
    for k in range(len(coeffs) - 1, -1, -1):
        c = coeffs[k]
        if not c:
            continue
        if k == 0:
            bits.append(str(c))
        else:
            v = var if k == 1 else f"{var}^{k}"
            if c == 1:
                bits.append(v)
            elif c == -1:
                bits.append(f"-{v}")
            else:
                bits.append(f"{c}*{v}")
    return (" + ".join(bits) or "0").replace("+ -", "- ")


@dataclass(frozen=True)
class SemisimplicityCertificate:
    r: int
    n: int
    q0: Fraction
    certified: bool
    status: str           # "semisimple" or "inconclusive"
    operator: str
    char_poly: tuple
    gcd_witness: tuple
    attempts: int

    def __bool__(self):
        return self.certified

    def to_json(self) -> dict:
        return {"r": self.r, "n": self.n, "q0": str(self.q0),
                "certified": self.certified, "status": self.status,
                "operator": self.operator, "attempts": self.attempts,
                "char_poly": poly_str(self.char_poly),
                "gcd_with_derivative": poly_str(self.gcd_witness)}


def semisimplicity_certificate(r: int, n: int, q0=1,
                               max_attempts: int = 12) -> SemisimplicityCertificate:
    """Certify semisimplicity of the quantum ring at q = q0 != 0.

    The witness is gcd(P, P') for the characteristic polynomial P of a
    multiplication operator; gcd = 1 certifies a product of fields.  sigma_1
    is tried first, then integer combinations sum_i t^i sigma_{b_i} over the
    basis for t = 2, 3, ... until one has a squarefree characteristic
    polynomial or the attempts are exhausted (status "inconclusive").
    """
    q0 = Fraction(q0)
    if q0 == 0:
        raise InputError("q0 must be nonzero (the classical ring is not semisimple)")
    basis = weights.partitions_in_box(r, n - r)

    def candidates():
        yield qsigma((1,), r, n), "s[1]"
        for t in range(2, max_attempts + 1):
            terms = {lam: {0: t ** i} for i, lam in enumerate(basis)}
            yield QClass(r, n, terms), f"sum_i {t}^i s[b_i]"

    last = None
    for attempt, (cls, desc) in enumerate(candidates(), start=1):
        p = char_poly(multiplication_matrix(cls, q0, r, n))
        witness = poly_gcd(p, poly_derivative(p))
        if len(witness) == 1:
            return SemisimplicityCertificate(
                r, n, q0, True, "semisimple", desc,
                tuple(p), tuple(witness), attempt)
        last = (desc, p, witness, attempt)
    desc, p, witness, attempt = last
    return SemisimplicityCertificate(
        r, n, q0, False, "inconclusive", desc,
        tuple(p), tuple(witness), attempt)


def associativity_check(r: int, n: int) -> bool:
    """Exhaustive (a*b)*c == a*(b*c) over all Schubert basis triples."""
    basis = [qsigma(lam, r, n) for lam in weights.partitions_in_box(r, n - r)]
    for a in basis:
        for b in basis:
            ab = a * b
            for c in basis:
                if (ab * c) != (a * (b * c)):
                    return False
    return True
