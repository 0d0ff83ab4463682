"""Partition and GL(r)-weight combinatorics.

Partitions are weakly decreasing tuples of nonnegative integers with trailing
zeros stripped; GL weights are weakly decreasing integer tuples of a fixed
length (the rank).  Everything downstream (bundle decompositions, Bott
cohomology, Schubert structure constants) reduces to the three operations
here: Littlewood-Richardson expansion, the Weyl dimension formula, and
enumeration of compositions of a symmetric-power exponent.

All functions are pure and all values are plain tuples, so concurrent use is
unrestricted.  The LR cache is keyed on canonicalized inputs and never changes
observable results.
"""

from __future__ import annotations

from functools import lru_cache
from math import comb, factorial

Partition = tuple  # weakly decreasing, nonnegative, no trailing zeros
GLWeight = tuple   # weakly decreasing, fixed length, entries may be negative


class InputError(ValueError):
    """Raised when an argument violates a documented precondition."""


def partition(parts) -> Partition:
    """Canonicalize an iterable into a partition, validating monotonicity."""
    p = tuple(int(x) for x in parts)
    while p and p[-1] == 0:
        p = p[:-1]
    for a, b in zip(p, p[1:]):
        if a < b:
            raise InputError(f"not weakly decreasing: {p}")
    if p and p[-1] < 0:
        raise InputError(f"negative part in partition: {p}")
    return p


def glweight(entries, length=None) -> GLWeight:
    """Validate a weakly decreasing integer sequence of fixed length."""
    w = tuple(int(x) for x in entries)
    if length is not None and len(w) != length:
        raise InputError(f"weight {w} does not have length {length}")
    if not w:
        raise InputError("a GL weight must have positive length")
    for a, b in zip(w, w[1:]):
        if a < b:
            raise InputError(f"not weakly decreasing: {w}")
    return w


def weight_from_partition(p, length) -> GLWeight:
    """Pad a partition with zeros to a weight of the given rank."""
    p = partition(p)
    if len(p) > length:
        raise InputError(f"partition {p} has more than {length} rows")
    return p + (0,) * (length - len(p))


def partition_from_weight(w) -> Partition:
    """Strip trailing zeros from a nonnegative weight."""
    if w and w[-1] < 0:
        raise InputError(f"weight {w} has negative entries")
    return partition(w)


def parse_partition(text: str) -> Partition:
    """Parse the comma-separated serialization; "" and "0" mean empty."""
    text = text.strip()
    if text == "" or text == "0":
        return ()
    return partition(int(piece) for piece in text.split(","))


def format_partition(p) -> str:
    """Serialize a partition; the empty partition prints as "0"."""
    if not p:
        return "0"
    return ",".join(str(x) for x in p)


def size(p) -> int:
    return sum(p)


# ---------------------------------------------------------------------------
# Littlewood-Richardson coefficients
# ---------------------------------------------------------------------------

def _horizontal_strips(shape, k, prev_cum):
    """Add k boxes to `shape` as a horizontal strip.

    Yields (new_shape, cum) where cum[t] counts strip boxes in rows 0..t.
    prev_cum is the cumulative row profile of the previous strip; a strip box
    in row t is admissible only while cum[t] <= prev_cum[t-1] (the lattice
    condition on the reverse reading word).  prev_cum=None disables the check
    (first strip).
    """
    m = len(shape)
    rows = [0] * m

    def place(t, remaining, cum_above):
        if t == m:
            if remaining == 0:
                new_shape = tuple(shape[i] + rows[i] for i in range(m))
                cum, acc = [], 0
                for a in rows:
                    acc += a
                    cum.append(acc)
                yield new_shape, tuple(cum)
            return
        if t == 0:
            hi = remaining
        else:
            # keep the result a partition and the strip horizontal
            hi = min(remaining, shape[t - 1] - shape[t])
        if prev_cum is not None:
            hi = min(hi, (prev_cum[t - 1] if t > 0 else 0) - cum_above)
        for a in range(0, hi + 1):
            rows[t] = a
            yield from place(t + 1, remaining - a, cum_above + a)
        rows[t] = 0

    yield from place(0, k, 0)


@lru_cache(maxsize=None)
def _lr_expand(lam: Partition, mu: Partition, max_rows: int):
    if len(lam) > max_rows:
        return {}
    states = {(lam + (0,) * (max_rows - len(lam)), None): 1}
    for part in mu:
        nxt: dict = {}
        for (shape, prev_cum), mult in states.items():
            for new_shape, cum in _horizontal_strips(shape, part, prev_cum):
                key = (new_shape, cum)
                nxt[key] = nxt.get(key, 0) + mult
        states = nxt
    out: dict = {}
    for (shape, _), mult in states.items():
        nu = partition(shape)
        out[nu] = out.get(nu, 0) + mult
    return out


def lr_coefficients(lam, mu, max_rows: int) -> dict:
    """All nu with at most max_rows rows and c^nu_{lam,mu} != 0.

    Computed by enumerating Littlewood-Richardson skew tableaux: mu's rows are
    added to lam as horizontal strips subject to the lattice-word condition.
    Returns {nu: coefficient}; every |nu| equals |lam| + |mu|.
    """
    if max_rows < 1:
        raise InputError("max_rows must be >= 1")
    lam = partition(lam)
    mu = partition(mu)
    return dict(_lr_expand(lam, mu, max_rows))


def lr_coefficient(lam, mu, nu) -> int:
    """A single c^nu_{lam,mu} (0 when the sizes do not match)."""
    nu = partition(nu)
    if size(nu) != size(partition(lam)) + size(partition(mu)):
        return 0
    return lr_coefficients(lam, mu, max(len(nu), 1)).get(nu, 0)


# ---------------------------------------------------------------------------
# Weyl dimension formula
# ---------------------------------------------------------------------------

def weyl_dimension(mu, n: int) -> int:
    """Dimension of the irreducible GL(n) module with highest weight mu.

    prod_{i<j} (mu_i - mu_j + j - i) / (j - i), evaluated exactly; depends
    only on the successive differences of mu, so a determinant twist does not
    change it.
    """
    mu = glweight(mu, n)
    num = 1
    den = 1
    for i in range(n):
        for j in range(i + 1, n):
            num *= mu[i] - mu[j] + j - i
            den *= j - i
    if num % den != 0:
        raise AssertionError(f"Weyl product not integral for {mu}")
    return num // den


# ---------------------------------------------------------------------------
# Compositions for symmetric powers of direct sums
# ---------------------------------------------------------------------------

def sym_power_compositions(l: int, n: int) -> list:
    """All (l_1, ..., l_n) with nonnegative entries summing to l.

    Enumerated with the leading entry descending; the count is
    binomial(l + n - 1, n - 1).
    """
    if n < 1:
        raise InputError("n must be >= 1")
    if l < 0:
        raise InputError("l must be >= 0")
    if n == 1:
        return [(l,)]
    out = []
    for first in range(l, -1, -1):
        for rest in sym_power_compositions(l - first, n - 1):
            out.append((first,) + rest)
    return out


def composition_count(l: int, n: int) -> int:
    return comb(l + n - 1, n - 1)


def arrangements(multiset, slots: int) -> int:
    """Number of ways to place the parts of a partition into `slots` ordered
    positions, the remaining positions receiving 0."""
    ms = partition(multiset)
    if len(ms) > slots:
        return 0
    counts: dict = {0: slots - len(ms)}
    for x in ms:
        counts[x] = counts.get(x, 0) + 1
    out = factorial(slots)
    for c in counts.values():
        out //= factorial(c)
    return out


def partitions_in_box(rows: int, cols: int) -> list:
    """All partitions fitting in a rows x cols rectangle, sorted by
    (size, lexicographic) for a deterministic basis order."""
    out = [()]
    stack = [()]
    while stack:
        p = stack.pop()
        limit = p[-1] if p else cols
        if len(p) == rows:
            continue
        for part in range(1, limit + 1):
            q = p + (part,)
            out.append(q)
            stack.append(q)
    out.sort(key=lambda p: (sum(p), p))
    return out
