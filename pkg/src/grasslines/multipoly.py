"""Sparse exact multivariate polynomials.

Monomials are packed into Python ints: one 16-bit field per variable plus a
field holding the total degree.  Multiplying monomials is integer addition,
and divisibility is a single subtraction against guard bits.  The layout
depends on the order so that, among monomials of one degree, the packed
integer is monotone in the order (decreasing for DegRevLex, increasing for
Lex).
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from typing import Mapping, Sequence

import numpy as np

from .exactfield import FieldSpec

DEGREVLEX = "DegRevLex"
LEX = "Lex"

_W = 16  # bits per exponent field
_MAXEXP = 1 << (_W - 1)


@dataclass(frozen=True)
class MonomialOrder:
    kind: str
    nvars: int

    def __post_init__(self):
        if self.kind not in (DEGREVLEX, LEX):
            raise ValueError(f"unknown monomial order {self.kind!r}")

    @cached_property
    def _shifts(self) -> tuple[int, ...]:
        n = self.nvars
        if self.kind == DEGREVLEX:
            return tuple(_W * i for i in range(n))
        return tuple(_W * (n - 1 - i) for i in range(n))

    @cached_property
    def deg_shift(self) -> int:
        return _W * self.nvars

    @cached_property
    def low_mask(self) -> int:
        return (1 << self.deg_shift) - 1

    @cached_property
    def guard(self) -> int:
        g = 0
        for i in range(self.nvars + 1):
            g |= 1 << (_W * i + _W - 1)
        return g

    def encode(self, exps: Sequence[int]) -> int:
        if len(exps) != self.nvars:
            raise ValueError("exponent vector has wrong length")
        code = 0
        for e, s in zip(exps, self._shifts):
            if not 0 <= e < _MAXEXP:
                raise ValueError(f"exponent {e} out of range")
            code |= e << s
        return code | (sum(exps) << self.deg_shift)

    def decode(self, code: int) -> tuple[int, ...]:
        m = (1 << _W) - 1
        return tuple((code >> s) & m for s in self._shifts)

    def degree(self, code: int) -> int:
        return code >> self.deg_shift

    def key(self, code: int) -> int:
        """Sort key: larger key means larger monomial."""
        if self.kind == DEGREVLEX:
            low = code & self.low_mask
            return (code ^ low) | (self.low_mask - low)
        return code & self.low_mask

    def divides(self, a: int, b: int) -> bool:
        g = self.guard
        return ((b | g) - a) & g == g

    def lcm(self, a: int, b: int) -> int:
        return self.encode([max(x, y) for x, y in zip(self.decode(a), self.decode(b))])

    def coprime(self, a: int, b: int) -> bool:
        return all(not (x and y) for x, y in zip(self.decode(a), self.decode(b)))


@dataclass(frozen=True)
class Monomial:
    exponents: tuple[int, ...]

    @property
    def degree(self) -> int:
        return sum(self.exponents)

    def divides(self, other: Monomial) -> bool:
        return all(a <= b for a, b in zip(self.exponents, other.exponents))

    def __mul__(self, other: Monomial) -> Monomial:
        return Monomial(tuple(a + b for a, b in zip(self.exponents, other.exponents)))


@dataclass(frozen=True)
class PolyRing:
    """Coefficient field, variable names and monomial order."""

    field: FieldSpec
    names: tuple[str, ...]
    order_kind: str = DEGREVLEX

    def __post_init__(self):
        object.__setattr__(self, "names", tuple(self.names))

    @cached_property
    def order(self) -> MonomialOrder:
        return MonomialOrder(self.order_kind, len(self.names))

    @property
    def nvars(self) -> int:
        return len(self.names)

    def zero(self) -> MultiPoly:
        return MultiPoly(self, ())

    def const(self, c) -> MultiPoly:
        return self.from_dict({(0,) * self.nvars: c})

    def gens(self) -> list[MultiPoly]:
        return [self.var(i) for i in range(self.nvars)]

    def var(self, i: int) -> MultiPoly:
        e = [0] * self.nvars
        e[i] = 1
        return self.from_dict({tuple(e): 1})

    def from_dict(self, terms: Mapping[Sequence[int], object]) -> MultiPoly:
        F, order = self.field, self.order
        acc: dict[int, object] = {}
        for exps, c in terms.items():
            c = F(c)
            if c:
                code = order.encode(tuple(exps))
                acc[code] = F.add(acc.get(code, F.zero), c)
        return MultiPoly.from_codes(self, acc)

    def linear_form(self, coeffs: Sequence) -> MultiPoly:
        return self.from_dict({tuple(int(i == j) for j in range(self.nvars)): c
                               for i, c in enumerate(coeffs)})

    def monomials_of_degree(self, d: int) -> list[tuple[int, ...]]:
        """All exponent vectors of total degree ``d``, largest first."""
        out = []

        def rec(prefix, left, k):
            if k == self.nvars - 1:
                out.append(prefix + (left,))
                return
            for e in range(left, -1, -1):
                rec(prefix + (e,), left - e, k + 1)

        if self.nvars == 0:
            return [()] if d == 0 else []
        rec((), d, 0)
        order = self.order
        out.sort(key=lambda e: order.key(order.encode(e)), reverse=True)
        return out


class MultiPoly:
    """Immutable sparse polynomial; ``terms`` is sorted, leading term first."""

    __slots__ = ("ring", "terms", "_hash")

    def __init__(self, ring: PolyRing, terms: tuple):
        self.ring = ring
        self.terms = terms
        self._hash = None

    @classmethod
    def from_codes(cls, ring: PolyRing, acc: Mapping[int, object]) -> MultiPoly:
        key = ring.order.key
        items = sorted(((m, c) for m, c in acc.items() if c), key=lambda t: key(t[0]), reverse=True)
        return cls(ring, tuple(items))

    # -- inspection ---------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    @property
    def field(self) -> FieldSpec:
        return self.ring.field

    def lm(self) -> Monomial:
        return Monomial(self.ring.order.decode(self.terms[0][0]))

    def lc(self):
        return self.terms[0][1]

    def lm_code(self) -> int:
        return self.terms[0][0]

    def items(self) -> list[tuple[tuple[int, ...], object]]:
        dec = self.ring.order.decode
        return [(dec(m), c) for m, c in self.terms]

    def as_dict(self) -> dict[tuple[int, ...], object]:
        return dict(self.items())

    def degree(self) -> int:
        if not self.terms:
            return -1
        deg = self.ring.order.degree
        return max(deg(m) for m, _ in self.terms)

    def is_homogeneous(self) -> bool:
        if not self.terms:
            return True
        deg = self.ring.order.degree
        d = deg(self.terms[0][0])
        return all(deg(m) == d for m, _ in self.terms)

    def coefficient(self, exps: Sequence[int]):
        code = self.ring.order.encode(tuple(exps))
        for m, c in self.terms:
            if m == code:
                return c
        return self.field.zero

    # -- arithmetic -----------------------------------------------------------

    def _check(self, other: MultiPoly):
        if self.ring != other.ring:
            raise ValueError("polynomials live in different rings")

    def _coerce(self, other) -> MultiPoly:
        if isinstance(other, MultiPoly):
            self._check(other)
            return other
        return self.ring.const(other)

    def __add__(self, other) -> MultiPoly:
        other = self._coerce(other)
        F = self.field
        acc = dict(self.terms)
        for m, c in other.terms:
            acc[m] = F.add(acc.get(m, F.zero), c)
        return MultiPoly.from_codes(self.ring, acc)

    __radd__ = __add__

    def __neg__(self) -> MultiPoly:
        F = self.field
        return MultiPoly(self.ring, tuple((m, F.neg(c)) for m, c in self.terms))

    def __sub__(self, other) -> MultiPoly:
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> MultiPoly:
        return self._coerce(other) - self

    def __mul__(self, other) -> MultiPoly:
        if not isinstance(other, MultiPoly):
            return self.scale(self.field(other))
        self._check(other)
        F = self.field
        p = F.p
        acc: dict[int, object] = {}
        get = acc.get
        if p:
            for m1, c1 in self.terms:
                for m2, c2 in other.terms:
                    m = m1 + m2
                    acc[m] = (get(m, 0) + c1 * c2) % p
        else:
            for m1, c1 in self.terms:
                for m2, c2 in other.terms:
                    m = m1 + m2
                    acc[m] = get(m, 0) + c1 * c2
        return MultiPoly.from_codes(self.ring, acc)

    def __rmul__(self, other) -> MultiPoly:
        return self.scale(self.field(other))

    def __pow__(self, k: int) -> MultiPoly:
        out = self.ring.const(1)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def scale(self, c) -> MultiPoly:
        F = self.field
        if not c:
            return self.ring.zero()
        return MultiPoly(self.ring, tuple((m, F.mul(a, c)) for m, a in self.terms))

    def mul_monomial(self, exps: Sequence[int], c=1) -> MultiPoly:
        code = self.ring.order.encode(tuple(exps))
        F = self.field
        c = F(c)
        if not c:
            return self.ring.zero()
        return MultiPoly(self.ring, tuple((m + code, F.mul(a, c)) for m, a in self.terms))

    def monic(self) -> MultiPoly:
        if not self.terms:
            return self
        return self.scale(self.field.inv(self.lc()))

    def __eq__(self, other):
        if isinstance(other, MultiPoly):
            return self.ring == other.ring and self.terms == other.terms
        if not self.terms:
            return other == 0
        return False

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.ring, self.terms))
        return self._hash

    # -- evaluation -----------------------------------------------------------

    def eval(self, point: Sequence):
        """Term-by-term evaluation at a point of field elements."""
        if len(point) != self.ring.nvars:
            raise ValueError("point has wrong length")
        F = self.field
        point = [F(x) for x in point]
        total = F.zero
        for exps, c in self.items():
            t = c
            for x, e in zip(point, exps):
                if e:
                    t = F.mul(t, x ** e if not F.p else pow(x, e, F.p))
            total = F.add(total, t)
        return total

    def eval_horner(self, point: Sequence):
        """Recursive Horner evaluation in the first variable (consistency check)."""
        if len(point) != self.ring.nvars:
            raise ValueError("point has wrong length")
        F = self.field
        point = [F(x) for x in point]

        def rec(terms: list[tuple[tuple[int, ...], object]], k: int):
            if not terms:
                return F.zero
            if k == len(point):
                acc = F.zero
                for _, c in terms:
                    acc = F.add(acc, c)
                return acc
            by_e: dict[int, list] = {}
            for exps, c in terms:
                by_e.setdefault(exps[k], []).append((exps, c))
            top = max(by_e)
            acc = F.zero
            for e in range(top, -1, -1):
                acc = F.add(F.mul(acc, point[k]), rec(by_e.get(e, []), k + 1))
            return acc

        return rec(self.items(), 0)

    def substitute(self, images: Sequence[MultiPoly]) -> MultiPoly:
        """Replace variable ``i`` by ``images[i]`` (all in one target ring)."""
        if len(images) != self.ring.nvars:
            raise ValueError("need one image per variable")
        target = images[0].ring
        out = target.zero()
        powers: dict[tuple[int, int], MultiPoly] = {}
        for exps, c in self.items():
            t = target.const(c)
            for i, e in enumerate(exps):
                if e:
                    if (i, e) not in powers:
                        powers[i, e] = images[i] ** e
                    t = t * powers[i, e]
            out = out + t
        return out

    # -- display --------------------------------------------------------------

    def __repr__(self):
        if not self.terms:
            return "0"
        F = self.field
        parts = []
        for exps, c in self.items():
            mono = "*".join(n if e == 1 else f"{n}^{e}"
                            for n, e in zip(self.ring.names, exps) if e)
            c = F.signed(c)
            if not mono:
                parts.append(str(c))
            elif c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append("-" + mono)
            else:
                parts.append(f"{c}*{mono}")
        return " + ".join(parts).replace("+ -", "- ")


def poly_arith(f: MultiPoly, g: MultiPoly, op: str) -> MultiPoly:
    if op == "add":
        return f + g
    if op == "sub":
        return f - g
    if op == "mul":
        return f * g
    raise ValueError(f"unknown operation {op!r}")


def poly_eval(f: MultiPoly, point: Sequence):
    return f.eval(point)


def eval_many(polys: Sequence[MultiPoly], points: np.ndarray) -> np.ndarray:
    """Evaluate homogeneous-or-not polynomials at many points over F_p.

    Returns an array of shape ``(len(polys), len(points))``.  Works by
    collecting the union of monomials once and doing one matrix product.
    """
    if not polys:
        return np.zeros((0, len(points)), dtype=np.int64)
    ring = polys[0].ring
    F = ring.field
    if not F.p:
        return np.array([[f.eval(list(pt)) for pt in points] for f in polys], dtype=object)
    p = F.p
    pts = np.asarray(points, dtype=np.int64) % p
    monos = sorted({m for f in polys for m, _ in f.terms})
    index = {m: i for i, m in enumerate(monos)}
    dec = ring.order.decode
    vals = np.ones((len(pts), len(monos)), dtype=np.int64)
    for j, m in enumerate(monos):
        for v, e in enumerate(dec(m)):
            for _ in range(e):
                vals[:, j] = vals[:, j] * pts[:, v] % p
    C = np.zeros((len(polys), len(monos)), dtype=np.int64)
    for i, f in enumerate(polys):
        for m, c in f.terms:
            C[i, index[m]] = c
    return F.matmul(C, vals.T)


# -- symbolic determinants ------------------------------------------------------

LAPLACE = "Laplace"
TWO_BLOCK = "TwoBlockLaplace"


def _laplace(M: Sequence[Sequence[MultiPoly]]) -> MultiPoly:
    n = len(M)
    ring = M[0][0].ring
    memo: dict[tuple[int, ...], MultiPoly] = {}

    # minors on the last k rows, keyed by the column subset
    def minor(cols: tuple[int, ...]) -> MultiPoly:
        k = len(cols)
        if k == 0:
            return ring.const(1)
        if cols in memo:
            return memo[cols]
        r = n - k
        acc = ring.zero()
        for pos, c in enumerate(cols):
            entry = M[r][c]
            if not entry:
                continue
            sub = minor(cols[:pos] + cols[pos + 1:])
            if not sub:
                continue
            term = entry * sub
            acc = acc - term if pos % 2 else acc + term
        memo[cols] = acc
        return acc

    return minor(tuple(range(n)))


def _variables_used(row: Sequence[MultiPoly]) -> set[int]:
    used = set()
    for f in row:
        for exps, _ in f.items():
            used.update(i for i, e in enumerate(exps) if e)
    return used


def sym_det(M: Sequence[Sequence[MultiPoly]], strategy: str = LAPLACE, split: int | None = None) -> MultiPoly:
    """Exact determinant of a square matrix of polynomials.

    ``TwoBlockLaplace`` expands along the first ``split`` rows (default half):
    det = sum over column subsets S of sign(S) * det(top[:, S]) * det(bottom[:, S^c]).
    The two row blocks must involve disjoint sets of variables.
    """
    n = len(M)
    if any(len(r) != n for r in M):
        raise ValueError("matrix is not square")
    if n == 0:
        raise ValueError("empty matrix")
    if strategy == LAPLACE:
        return _laplace(M)
    if strategy != TWO_BLOCK:
        raise ValueError(f"unknown strategy {strategy!r}")
    k = n // 2 if split is None else split
    top, bottom = M[:k], M[k:]
    vt = set().union(*(_variables_used(r) for r in top))
    vb = set().union(*(_variables_used(r) for r in bottom))
    if vt & vb:
        raise ValueError("row blocks share variables; TwoBlockLaplace does not apply")
    ring = M[0][0].ring
    cache_b: dict[tuple[int, ...], MultiPoly] = {}
    acc = ring.zero()
    allc = tuple(range(n))
    for S in combinations(allc, k):
        dt = _laplace([[r[c] for c in S] for r in top]) if k else ring.const(1)
        if not dt:
            continue
        comp = tuple(c for c in allc if c not in S)
        if comp not in cache_b:
            cache_b[comp] = _laplace([[r[c] for c in comp] for r in bottom]) if comp else ring.const(1)
        db = cache_b[comp]
        if not db:
            continue
        sign = (sum(range(k)) + sum(S)) % 2
        term = dt * db
        acc = acc - term if sign else acc + term
    return acc


def scalar_matrix_poly(ring: PolyRing, rows: Sequence[Sequence]) -> list[list[MultiPoly]]:
    return [[ring.const(x) for x in r] for r in rows]
