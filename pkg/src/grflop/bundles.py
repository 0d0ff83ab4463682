"""Homogeneous vector bundles on Gr(r,n) as sums of irreducible summands.

A bundle expression is a tree over the generators S, S^v, Q, Q^v and trivial
bundles, combined with direct sum, tensor product, symmetric powers, duals and
Schur functors.  Normalization rewrites any supported expression into a
multiset of irreducible summands (alpha; beta), where alpha is a GL(r) weight
acting through Schur functors of S^v and beta a GL(n-r) weight acting through
Schur functors of Q.  Negative weight entries are handled by determinant
twists so that the Littlewood-Richardson expansion only ever sees partitions.

Symmetric powers and Schur functors of higher-rank irreducibles that are not
determinant twists of a defining bundle would require plethysm and are
rejected with UnsupportedExpressionError.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

from . import weights
from .weights import InputError, partition


class UnsupportedExpressionError(InputError):
    """The decomposition would require general plethysm."""


@dataclass(frozen=True)
class BundleExpr:
    """Immutable expression tree; build with the Ambient factory below."""

    ambient: tuple
    op: str
    k: int = 0
    lam: tuple = ()
    parts: tuple = field(default_factory=tuple)

    def _check(self, other):
        if not isinstance(other, BundleExpr):
            raise InputError(f"cannot combine BundleExpr with {other!r}")
        if other.ambient != self.ambient:
            raise InputError(
                f"ambient mismatch: {self.ambient} vs {other.ambient}")

    def __add__(self, other):
        self._check(other)
        return BundleExpr(self.ambient, "sum", parts=(self, other))

    def __mul__(self, other):
        self._check(other)
        return BundleExpr(self.ambient, "tensor", parts=(self, other))

    def sym(self, k: int):
        if k < 0:
            raise InputError("symmetric power exponent must be >= 0")
        return BundleExpr(self.ambient, "sym", k=k, parts=(self,))

    def dual(self):
        return BundleExpr(self.ambient, "dual", parts=(self,))

    def schur(self, lam):
        return BundleExpr(self.ambient, "schur", lam=partition(lam),
                          parts=(self,))

    def __repr__(self):
        r, n = self.ambient
        return f"<bundle {expr_str(self)} on Gr({r},{n})>"


class Ambient:
    """Generator factory for bundle expressions on a fixed Gr(r,n)."""

    def __init__(self, r: int, n: int):
        if not (1 <= r < n):
            raise InputError(f"need 1 <= r < n, got ({r},{n})")
        self.r = r
        self.n = n
        self.pair = (r, n)

    @property
    def S(self):
        return BundleExpr(self.pair, "gen_S")

    @property
    def Sv(self):
        return BundleExpr(self.pair, "gen_Sv")

    @property
    def Q(self):
        return BundleExpr(self.pair, "gen_Q")

    @property
    def Qv(self):
        return BundleExpr(self.pair, "gen_Qv")

    def O(self, m: int = 1):
        if m < 1:
            raise InputError("trivial rank must be >= 1")
        return BundleExpr(self.pair, "triv", k=m)

    @property
    def V(self):
        # the rank-n trivial bundle from the universal sequence
        return self.O(self.n)

    @property
    def tangent(self):
        return self.Sv * self.Q

    @property
    def normal(self):
        # S tensor the dual n-dimensional frame space: n copies of S
        expr = self.S
        for _ in range(self.n - 1):
            expr = expr + self.S
        return expr

    def __repr__(self):
        return f"Ambient({self.r},{self.n})"


@dataclass(frozen=True, order=True)
class IrreducibleSummand:
    """Schur_alpha(S^v) tensor Schur_beta(Q) with a positive multiplicity."""

    alpha: tuple
    beta: tuple
    multiplicity: int = 1

    def __str__(self):
        a = ",".join(str(x) for x in self.alpha)
        b = ",".join(str(x) for x in self.beta)
        return f"alpha=[{a}] beta=[{b}] mult={self.multiplicity}"


# Internal multiset form: {(alpha, beta): multiplicity}.

def summand_list(summands: dict) -> list:
    """Canonically ordered IrreducibleSummand view of a multiset."""
    return [IrreducibleSummand(a, b, m)
            for (a, b), m in sorted(summands.items())]


def summands_to_json(summands: dict) -> list:
    return [{"alpha": list(a), "beta": list(b), "mult": m}
            for (a, b), m in sorted(summands.items())]


def summand_rank(alpha, beta) -> int:
    return (weights.weyl_dimension(alpha, len(alpha))
            * weights.weyl_dimension(beta, len(beta)))


def total_rank(summands: dict) -> int:
    return sum(summand_rank(a, b) * m for (a, b), m in summands.items())


def _merge(dst: dict, src: dict, scale: int = 1):
    for key, m in src.items():
        new = dst.get(key, 0) + m * scale
        if new:
            dst[key] = new
        else:
            dst.pop(key, None)


def _dual_weight(w):
    return tuple(-x for x in reversed(w))


def dual_summands(summands: dict) -> dict:
    return {(_dual_weight(a), _dual_weight(b)): m
            for (a, b), m in summands.items()}


@lru_cache(maxsize=None)
def _lr_blocks(a, b, rows):
    """LR-expand two weight blocks after shifting to partitions."""
    ca, cb = a[-1], b[-1]
    lam = partition(x - ca for x in a)
    mu = partition(x - cb for x in b)
    shift = ca + cb
    out = {}
    for nu, c in weights.lr_coefficients(lam, mu, rows).items():
        key = tuple(x + shift for x in nu + (0,) * (rows - len(nu)))
        out[key] = c
    return out


def tensor_summands(a: dict, b: dict) -> dict:
    """Tensor product of two summand multisets over the same ambient."""
    keys_a = list(a)
    keys_b = list(b)
    if keys_a and keys_b:
        (a0, b0), (a1, b1) = keys_a[0], keys_b[0]
        if (len(a0), len(b0)) != (len(a1), len(b1)):
            raise InputError("ambient mismatch between summand multisets")
    out: dict = {}
    for (aa, ab), ma in a.items():
        for (ba, bb), mb in b.items():
            alphas = _lr_blocks(aa, ba, len(aa))
            betas = _lr_blocks(ab, bb, len(ab))
            for na, ca in alphas.items():
                for nb, cb in betas.items():
                    _merge(out, {(na, nb): ca * cb * ma * mb})
    return out


# ---------------------------------------------------------------------------
# Symmetric powers and Schur functors of irreducibles
# ---------------------------------------------------------------------------

def _classify_block(w):
    """Split a weight as twist + shape, where shape is one of:
    'zero' (constant weight), 'up' (defining), 'down' (dual defining)."""
    c = w[-1]
    top = tuple(x - c for x in w)
    if all(x == 0 for x in top):
        return "zero", c
    if top == (1,) + (0,) * (len(w) - 1):
        return "up", c
    if all(x == top[0] for x in top[:-1]) and top[-1] == top[0] - 1:
        return "down", top[0] + c
    return None, None


def _sym_irreducible(j: int, alpha, beta):
    """Sym^j of a single irreducible summand, when it avoids plethysm."""
    if j == 0:
        return {((0,) * len(alpha), (0,) * len(beta)): 1}
    if j == 1:
        return {(alpha, beta): 1}
    sa, ca = _classify_block(alpha)
    sb, cb = _classify_block(beta)
    if sa is None or sb is None or (sa != "zero" and sb != "zero"):
        raise UnsupportedExpressionError(
            f"Sym^{j} of ({alpha};{beta}) requires plethysm")

    def scaled(shape, c, length):
        if shape == "zero":
            return (j * c,) * length
        if shape == "up":
            return (j * c + j,) + (j * c,) * (length - 1)
        return (j * c,) * (length - 1) + (j * c - j,)

    return {(scaled(sa, ca, len(alpha)), scaled(sb, cb, len(beta))): 1}


def _sym_single(j: int, alpha, beta, copies: int) -> dict:
    """Sym^j of copies-many copies of one irreducible, via the multiset of
    exponents: Sym(E + E + ...) splits along compositions, and compositions
    with the same multiset contribute the same tensor product."""
    out: dict = {}
    for parts in _bounded_partitions(j, copies):
        count = weights.arrangements(parts, copies)
        piece = {((0,) * len(alpha), (0,) * len(beta)): 1}
        for e in parts:
            piece = tensor_summands(piece, _sym_irreducible(e, alpha, beta))
        _merge(out, piece, count)
    return out


def _bounded_partitions(total: int, max_parts: int):
    """Partitions of `total` with at most max_parts parts."""
    def rec(remaining, largest, length):
        if remaining == 0:
            yield ()
            return
        if length == 0:
            return
        for first in range(min(remaining, largest), 0, -1):
            for rest in rec(remaining - first, first, length - 1):
                yield (first,) + rest
    yield from rec(total, total, max_parts)


def sym_summands(k: int, summands: dict) -> dict:
    """Sym^k of a decomposed bundle, distributing over the direct sum."""
    if not summands:
        raise InputError("cannot take Sym of an empty bundle")
    a0, b0 = next(iter(summands))
    unit = {((0,) * len(a0), (0,) * len(b0)): 1}
    items = sorted(summands.items())

    def rec(idx, remaining):
        if idx == len(items):
            return dict(unit) if remaining == 0 else {}
        (alpha, beta), mult = items[idx]
        out: dict = {}
        for j in range(remaining + 1):
            tail = rec(idx + 1, remaining - j)
            if not tail:
                continue
            head = _sym_single(j, alpha, beta, mult)
            _merge(out, tensor_summands(head, tail))
        return out

    return rec(0, k)


def _schur_of_summands(lam, summands: dict) -> dict:
    """Schur functor of a decomposed bundle, for the plethysm-free cases."""
    items = sorted(summands.items())
    if len(items) != 1:
        raise UnsupportedExpressionError(
            "Schur functors are supported only on irreducible bundles")
    (alpha, beta), mult = items[0]
    r_block, q_block = len(alpha), len(beta)
    zero_a = (0,) * r_block
    zero_b = (0,) * q_block
    if mult != 1:
        # Schur of O^{+m} is a trivial bundle of Weyl-formula rank
        if (alpha, beta) == (zero_a, zero_b):
            if len(lam) > mult:
                return {}
            rank = weights.weyl_dimension(
                weights.weight_from_partition(lam, mult), mult)
            return {(zero_a, zero_b): rank}
        raise UnsupportedExpressionError(
            "Schur functors are supported only on irreducible bundles")
    sa, ca = _classify_block(alpha)
    sb, cb = _classify_block(beta)
    if sa is None or sb is None or (sa != "zero" and sb != "zero"):
        raise UnsupportedExpressionError(
            f"Schur functor of ({alpha};{beta}) requires plethysm")
    if summand_rank(alpha, beta) == 1:
        # on a line bundle only single-row shapes survive
        if len(lam) > 1:
            return {}
        return _sym_irreducible(lam[0] if lam else 0, alpha, beta)
    # a defining bundle (possibly determinant-twisted) on exactly one block;
    # Schur_lam(E (x) det^c) = Schur_lam(E) (x) det^{c|lam|}
    if sa != "zero":
        length, shape, c, block = r_block, sa, ca, "alpha"
    else:
        length, shape, c, block = q_block, sb, cb, "beta"
    if len(lam) > length:
        return {}
    padded = lam + (0,) * (length - len(lam))
    twist = c * sum(lam)
    if shape == "up":
        new = tuple(x + twist for x in padded)
    else:
        # dual defining: Schur_lam(E^v) = dual(Schur_lam(E))
        new = tuple(x + twist for x in _dual_weight(padded))
    if block == "alpha":
        return {(new, zero_b): 1}
    return {(zero_a, new): 1}


# ---------------------------------------------------------------------------
# Normalization of expression trees
# ---------------------------------------------------------------------------

def normalize(expr: BundleExpr) -> dict:
    """Decompose an expression into {(alpha, beta): multiplicity}."""
    if not isinstance(expr, BundleExpr):
        raise InputError(f"not a bundle expression: {expr!r}")
    r, n = expr.ambient
    za = (0,) * r
    zb = (0,) * (n - r)
    op = expr.op
    if op == "gen_S":
        return {(za[:-1] + (-1,), zb): 1}
    if op == "gen_Sv":
        return {((1,) + za[1:], zb): 1}
    if op == "gen_Q":
        return {(za, (1,) + zb[1:]): 1}
    if op == "gen_Qv":
        return {(za, zb[:-1] + (-1,)): 1}
    if op == "triv":
        return {(za, zb): expr.k}
    if op == "sum":
        out: dict = {}
        for part in expr.parts:
            _merge(out, normalize(part))
        return out
    if op == "tensor":
        out = {(za, zb): 1}
        for part in expr.parts:
            out = tensor_summands(out, normalize(part))
        return out
    if op == "dual":
        return dual_summands(normalize(expr.parts[0]))
    if op == "sym":
        return sym_summands(expr.k, normalize(expr.parts[0]))
    if op == "schur":
        return _schur_of_summands(expr.lam, normalize(expr.parts[0]))
    raise InputError(f"malformed expression node {op!r}")


def sym_conormal(r: int, n: int, l: int) -> dict:
    """Decomposition of Sym^l((S^v)^{+n}), the conormal symmetric powers.

    Iterates the Littlewood-Richardson expansion over the compositions
    (l_1, ..., l_n) of l, compositions with equal part multisets being grouped
    since the tensor product does not depend on the order of factors.
    """
    if not (1 <= r < n):
        raise InputError(f"need 1 <= r < n, got ({r},{n})")
    sv = {((1,) + (0,) * (r - 1), (0,) * (n - r)): 1}
    return _sym_single(l, *next(iter(sv)), copies=n)


# ---------------------------------------------------------------------------
# Expression rendering and the CLI mini-grammar
# ---------------------------------------------------------------------------

_GEN_NAMES = {"gen_S": "S", "gen_Sv": "Sv", "gen_Q": "Q", "gen_Qv": "Qv"}


def expr_str(expr: BundleExpr) -> str:
    op = expr.op
    if op in _GEN_NAMES:
        return _GEN_NAMES[op]
    if op == "triv":
        return "O" if expr.k == 1 else "+".join(["O"] * expr.k)
    if op == "sum":
        return "+".join(expr_str(p) for p in expr.parts)
    if op == "tensor":
        def wrap(p):
            return f"({expr_str(p)})" if p.op == "sum" else expr_str(p)
        return "*".join(wrap(p) for p in expr.parts)
    if op == "dual":
        return f"dual({expr_str(expr.parts[0])})"
    if op == "sym":
        return f"sym {expr.k} ({expr_str(expr.parts[0])})"
    if op == "schur":
        lam = ",".join(str(x) for x in expr.lam)
        return f"schur [{lam}] ({expr_str(expr.parts[0])})"
    raise InputError(f"malformed expression node {op!r}")


def _tokenize(text: str):
    text = text.replace("⊗", "*").replace("⊕", "+")
    tokens = []
    i = 0
    while i < len(text):
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if ch in "+*()[],":
            tokens.append(ch)
            i += 1
            continue
        if ch.isalnum() or ch == "-":
            j = i + 1
            while j < len(text) and (text[j].isalnum() or text[j] == "-"):
                j += 1
            tokens.append(text[i:j])
            i = j
            continue
        raise InputError(f"unexpected character {ch!r} in bundle expression")
    return tokens


def parse_expr(text: str, r: int, n: int) -> BundleExpr:
    """Parse the bundle mini-grammar: S, Sv, Q, Qv, O, +, *,
    sym k ( e ), dual( e ), schur [lam] ( e )."""
    amb = Ambient(r, n)
    tokens = _tokenize(text)
    pos = 0

    def peek():
        return tokens[pos] if pos < len(tokens) else None

    def take(expected=None):
        nonlocal pos
        if pos >= len(tokens):
            raise InputError("unexpected end of bundle expression")
        tok = tokens[pos]
        if expected is not None and tok != expected:
            raise InputError(f"expected {expected!r}, found {tok!r}")
        pos += 1
        return tok

    def parse_sum():
        node = parse_product()
        while peek() == "+":
            take("+")
            node = node + parse_product()
        return node

    def parse_product():
        node = parse_atom()
        while peek() == "*":
            take("*")
            node = node * parse_atom()
        return node

    def parse_atom():
        tok = take()
        if tok == "(":
            node = parse_sum()
            take(")")
            return node
        if tok == "S":
            return amb.S
        if tok == "Sv":
            return amb.Sv
        if tok == "Q":
            return amb.Q
        if tok == "Qv":
            return amb.Qv
        if tok == "O":
            return amb.O()
        if tok == "sym":
            k_tok = take()
            try:
                k = int(k_tok)
            except ValueError:
                raise InputError(f"sym expects an integer, found {k_tok!r}")
            take("(")
            node = parse_sum()
            take(")")
            return node.sym(k)
        if tok == "dual":
            take("(")
            node = parse_sum()
            take(")")
            return node.dual()
        if tok == "schur":
            take("[")
            lam = []
            while peek() != "]":
                part = take()
                try:
                    lam.append(int(part))
                except ValueError:
                    raise InputError(
                        f"schur shape expects integers, found {part!r}")
                if peek() == ",":
                    take(",")
            take("]")
            take("(")
            node = parse_sum()
            take(")")
            return node.schur(lam)
        raise InputError(f"unknown token {tok!r} in bundle expression")

    node = parse_sum()
    if pos != len(tokens):
        raise InputError(f"trailing input near {tokens[pos]!r}")
    return node
