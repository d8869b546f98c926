"""Buchberger's algorithm for homogeneous ideals and Hilbert series.

The engine works degree by degree (for homogeneous input the sugar of a pair
is the degree of its lcm), prunes pairs with the Gebauer-Moeller update
(Buchberger's product and chain criteria) and returns the reduced, monic
basis.  Dimension and degree come from the Hilbert series of the leading
monomial ideal.
"""
from __future__ import annotations

import heapq
import random
from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Iterable, Sequence

from .multipoly import DEGREVLEX, MultiPoly, PolyRing


class Ideal:
    """A homogeneous ideal given by generators; zero generators are dropped."""

    def __init__(self, ring: PolyRing, generators: Iterable[MultiPoly]):
        gens = []
        for g in generators:
            if g.ring != ring:
                raise ValueError("generator lives in a different ring")
            if g:
                gens.append(g)
        self.ring = ring
        self.generators: tuple[MultiPoly, ...] = tuple(gens)

    @property
    def nvars(self) -> int:
        return self.ring.nvars

    def is_homogeneous(self) -> bool:
        return all(g.is_homogeneous() for g in self.generators)

    def __len__(self):
        return len(self.generators)

    def __repr__(self):
        return f"Ideal({len(self.generators)} generators in {self.ring.names})"


@dataclass(frozen=True)
class GroebnerBasis:
    ring: PolyRing
    elements: tuple[MultiPoly, ...]

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def leading_monomials(self) -> list[tuple[int, ...]]:
        return [g.lm().exponents for g in self.elements]

    def contains_one(self) -> bool:
        return any(g.degree() == 0 for g in self.elements)

    def hilbert(self) -> HilbertData:
        return dim_degree(hilbert_numerator(self.leading_monomials(), self.ring.nvars), self.ring.nvars)


# -- reduction core -------------------------------------------------------------


class _Basis:
    """Monic basis elements in packed form plus a divisor-lookup cache."""

    def __init__(self, ring: PolyRing):
        self.ring = ring
        self.order = ring.order
        self.p = ring.field.p
        self.lms: list[int] = []
        self.tails: list[tuple[tuple[int, ...], tuple]] = []
        self._cache: dict[int, tuple[int, int]] = {}
        # heap items are sign*code so that popping gives the leading monomial
        self.sign = 1 if ring.order_kind == DEGREVLEX else -1

    def add(self, lm: int, tail_codes: tuple, tail_coeffs: tuple) -> int:
        self.lms.append(lm)
        self.tails.append((tail_codes, tail_coeffs))
        return len(self.lms) - 1

    def find_divisor(self, m: int) -> int:
        hit = self._cache.get(m)
        if hit is not None:
            idx, upto = hit
            if idx >= 0:
                return idx
            start = upto
        else:
            start = 0
        g = self.order.guard
        mg = m | g
        lms = self.lms
        for i in range(start, len(lms)):
            if (mg - lms[i]) & g == g:
                self._cache[m] = (i, 0)
                return i
        self._cache[m] = (-1, len(lms))
        return -1

    def reduce(self, acc: dict, full: bool = True) -> list[tuple[int, object]]:
        """Reduce the homogeneous polynomial held in ``acc`` (code -> coeff).

        Returns the remainder terms, leading first.  With ``full=False`` the
        loop stops at the first irreducible term and returns it together
        with the untouched rest.
        """
        p = self.p
        s = self.sign
        heap = [s * m for m in acc]
        heapq.heapify(heap)
        rem: list[tuple[int, object]] = []
        lms, tails = self.lms, self.tails
        find = self.find_divisor
        pop, push = heapq.heappop, heapq.heappush
        while heap:
            m = s * pop(heap)
            c = acc.pop(m, None)
            if c is None:
                continue
            i = find(m)
            if i < 0:
                rem.append((m, c))
                if not full:
                    break
                continue
            shift = m - lms[i]
            codes, coeffs = tails[i]
            get = acc.get
            if p:
                for tm, tc in zip(codes, coeffs):
                    t = tm + shift
                    old = get(t)
                    if old is None:
                        acc[t] = -c * tc % p
                        push(heap, s * t)
                    else:
                        v = (old - c * tc) % p
                        if v:
                            acc[t] = v
                        else:
                            del acc[t]
            else:
                for tm, tc in zip(codes, coeffs):
                    t = tm + shift
                    old = get(t)
                    if old is None:
                        acc[t] = -c * tc
                        push(heap, s * t)
                    else:
                        v = old - c * tc
                        if v:
                            acc[t] = v
                        else:
                            del acc[t]
        if not full and acc:
            key = self.order.key
            rem.extend(sorted(acc.items(), key=lambda t: key(t[0]), reverse=True))
        return rem

    def monic(self, terms: list[tuple[int, object]]):
        F = self.ring.field
        lm, lc = terms[0]
        inv = F.inv(lc)
        codes = tuple(m for m, _ in terms[1:])
        coeffs = tuple(F.mul(c, inv) for _, c in terms[1:])
        return lm, codes, coeffs

    def poly(self, i: int) -> MultiPoly:
        F = self.ring.field
        codes, coeffs = self.tails[i]
        return MultiPoly(self.ring, ((self.lms[i], F.one),) + tuple(zip(codes, coeffs)))


def normal_form(f: MultiPoly, G: Sequence[MultiPoly]) -> MultiPoly:
    """Full remainder of ``f`` on division by ``G`` (any polynomials)."""
    if not f:
        return f
    ring = f.ring
    B = _Basis(ring)
    for g in G:
        if g.ring != ring:
            raise ValueError("polynomials live in different rings")
        if g:
            lm, codes, coeffs = B.monic(list(g.terms))
            B.add(lm, codes, coeffs)
    if not B.lms:
        return f
    if f.is_homogeneous() and all(g.is_homogeneous() for g in G):
        rem = B.reduce(dict(f.terms))
        return MultiPoly.from_codes(ring, dict(rem))
    return _normal_form_general(f, B)


def _normal_form_general(f: MultiPoly, B: _Basis) -> MultiPoly:
    # inhomogeneous input: order-key driven division
    ring = f.ring
    F = ring.field
    key = ring.order.key
    acc = dict(f.terms)
    rem: dict[int, object] = {}
    while acc:
        m = max(acc, key=key)
        c = acc.pop(m)
        i = B.find_divisor(m)
        if i < 0:
            rem[m] = c
            continue
        shift = m - B.lms[i]
        for tm, tc in zip(*B.tails[i]):
            t = tm + shift
            v = F.sub(acc.get(t, F.zero), F.mul(c, tc))
            if v:
                acc[t] = v
            else:
                acc.pop(t, None)
    return MultiPoly.from_codes(ring, rem)


def s_polynomial(f: MultiPoly, g: MultiPoly) -> MultiPoly:
    order = f.ring.order
    lcm = order.lcm(f.lm_code(), g.lm_code())
    mf = order.decode(lcm - f.lm_code())
    mg = order.decode(lcm - g.lm_code())
    F = f.field
    return f.mul_monomial(mf, F.inv(f.lc())) - g.mul_monomial(mg, F.inv(g.lc()))


# -- Buchberger -------------------------------------------------------------------


@dataclass
class _Pair:
    i: int
    j: int
    lcm: int
    degree: int


def _update(B: _Basis, pairs: list[_Pair], h: int) -> list[_Pair]:
    """Gebauer-Moeller installation of basis element ``h``."""
    order = B.order
    lms = B.lms
    t = lms[h]
    divides = order.divides
    new = [(_Pair(i, h, order.lcm(lms[i], t), 0), order.coprime(lms[i], t)) for i in range(h)]
    for pr, _ in new:
        pr.degree = order.degree(pr.lcm)
    # chain criterion among the new pairs, keeping coprime ones as witnesses
    kept: list[tuple[_Pair, bool]] = []
    for k, (pr, cop) in enumerate(new):
        if cop:
            kept.append((pr, cop))
            continue
        dominated = any(divides(q.lcm, pr.lcm) for q, _ in new[k + 1:]) or \
            any(divides(q.lcm, pr.lcm) for q, _ in kept)
        if not dominated:
            kept.append((pr, cop))
    fresh = [pr for pr, cop in kept if not cop]
    survivors = []
    for pr in pairs:
        if divides(t, pr.lcm):
            li = order.lcm(lms[pr.i], t)
            lj = order.lcm(lms[pr.j], t)
            if li != pr.lcm and lj != pr.lcm:
                continue
        survivors.append(pr)
    return survivors + fresh


def buchberger(ideal: Ideal, rng: random.Random | None = None, full_reduction: bool = True) -> GroebnerBasis:
    """Reduced Groebner basis of a homogeneous ideal.

    ``rng`` randomizes the processing order of pairs and generators within
    each degree; the result is the same reduced basis regardless.
    """
    ring = ideal.ring
    if not ideal.is_homogeneous():
        raise ValueError("buchberger expects homogeneous generators")
    F = ring.field
    order = ring.order
    B = _Basis(ring)
    pending: dict[int, list[MultiPoly]] = {}
    for g in ideal.generators:
        pending.setdefault(g.degree(), []).append(g)
    pairs: list[_Pair] = []
    while pairs or pending:
        d = min([pr.degree for pr in pairs] + list(pending))
        todo = [pr for pr in pairs if pr.degree == d]
        pairs = [pr for pr in pairs if pr.degree != d]
        gens = pending.pop(d, [])
        key = order.key
        if rng is not None:
            items = [("pair", pr) for pr in todo] + [("gen", g) for g in gens]
            rng.shuffle(items)
        else:
            todo.sort(key=lambda pr: (key(pr.lcm), pr.j, pr.i))
            items = [("gen", g) for g in gens] + [("pair", pr) for pr in todo]
        for kind, item in items:
            if kind == "pair":
                acc = _spoly_acc(B, item, F)
            else:
                acc = dict(item.terms)
            if not acc:
                continue
            rem = B.reduce(acc, full=full_reduction)
            if not rem:
                continue
            if rem[0][0] >> order.deg_shift == 0:
                return GroebnerBasis(ring, (ring.const(1),))
            h = B.add(*B.monic(rem))
            pairs = _update(B, pairs, h)
    return GroebnerBasis(ring, _interreduce(B))


def _spoly_acc(B: _Basis, pr: _Pair, F) -> dict:
    p = F.p
    acc: dict[int, object] = {}
    for idx, sgn in ((pr.i, 1), (pr.j, -1)):
        shift = pr.lcm - B.lms[idx]
        codes, coeffs = B.tails[idx]
        for m, c in zip(codes, coeffs):
            t = m + shift
            v = acc.get(t, F.zero) + (c if sgn > 0 else -c)
            if p:
                v %= p
            if v:
                acc[t] = v
            else:
                acc.pop(t, None)
    return acc


def _interreduce(B: _Basis) -> tuple[MultiPoly, ...]:
    ring = B.ring
    n = len(B.lms)
    # drop elements whose leading monomial is divisible by another's
    keep = []
    for i in range(n):
        if not any(j != i and B.order.divides(B.lms[j], B.lms[i])
                   and (B.lms[j] != B.lms[i] or j < i) for j in range(n)):
            keep.append(i)
    R = _Basis(ring)
    for i in keep:
        R.add(B.lms[i], *B.tails[i])
    out = []
    F = ring.field
    for k in range(len(R.lms)):
        codes, coeffs = R.tails[k]
        acc = dict(zip(codes, coeffs))
        # same-degree tail terms are never divisible by their own leading term
        tail = R.reduce(acc) if acc else []
        out.append(MultiPoly(ring, ((R.lms[k], F.one),) + tuple(tail)))
    out.sort(key=lambda f: ring.order.key(f.lm_code()))
    return tuple(out)


def is_groebner_certificate(G: Sequence[MultiPoly], generators: Sequence[MultiPoly] = ()) -> bool:
    """Every S-polynomial and every generator reduces to zero modulo ``G``."""
    G = list(G)
    for a in range(len(G)):
        for b in range(a + 1, len(G)):
            if normal_form(s_polynomial(G[a], G[b]), G):
                return False
    return all(not normal_form(f, G) for f in generators)


def ideal_membership(f: MultiPoly, G: GroebnerBasis) -> bool:
    return not normal_form(f, G.elements)


# -- Hilbert series -----------------------------------------------------------------


def _minimalize(gens: Iterable[tuple[int, ...]]) -> list[tuple[int, ...]]:
    out: list[tuple[int, ...]] = []
    for m in sorted(set(gens), key=sum):
        if not any(all(a <= b for a, b in zip(g, m)) for g in out):
            out.append(m)
    return out


def _pmul(a: list[int], b: list[int]) -> list[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def _padd(a: list[int], b: list[int]) -> list[int]:
    n = max(len(a), len(b))
    return [(a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(n)]


def _trim(a: list[int]) -> list[int]:
    while len(a) > 1 and a[-1] == 0:
        a = a[:-1]
    return a


def _hn(gens: list[tuple[int, ...]]) -> list[int]:
    if not gens:
        return [1]
    n = len(gens[0])
    support = [sum(1 for g in gens if g[v]) for v in range(n)]
    if max(support) <= 1:
        # pairwise coprime: product of (1 - t^deg)
        out = [1]
        for g in gens:
            d = sum(g)
            out = _pmul(out, [1] + [0] * (d - 1) + [-1])
        return out
    v = max(range(n), key=lambda k: (support[k], -k))
    e = min(g[v] for g in gens if g[v])
    pivot = tuple(e if k == v else 0 for k in range(n))
    # I + (x^e)
    plus = _minimalize([g for g in gens if g[v] < e] + [pivot])
    # I : x^e
    colon = _minimalize([tuple(max(a - b, 0) for a, b in zip(g, pivot)) for g in gens])
    return _padd(_hn(plus), [0] * e + _hn(colon))


def hilbert_numerator(leading_terms: Sequence[Sequence[int]], nvars: int) -> list[int]:
    """N(t) with HS(S/I) = N(t)/(1-t)^nvars for the monomial ideal I."""
    gens = [tuple(int(x) for x in m) for m in leading_terms]
    if any(len(m) != nvars for m in gens):
        raise ValueError("monomial has wrong number of variables")
    return _trim(_hn(_minimalize(gens)))


@dataclass(frozen=True)
class HilbertData:
    numerator: tuple[int, ...]
    reduced: tuple[int, ...]
    projdim: int
    degree: int
    nvars: int

    def hilbert_function(self, d: int) -> int:
        """dim of the degree-d piece of the quotient ring."""
        n = self.nvars
        return sum(c * comb(d - i + n - 1, n - 1) for i, c in enumerate(self.numerator) if i <= d)

    def hilbert_polynomial(self) -> tuple[Fraction, ...]:
        """Coefficients (constant first) of the Hilbert polynomial."""
        k = self.projdim
        if k < 0:
            return ()
        # sum_i q_i * binom(s - i + k, k) as a polynomial in s
        total = [Fraction(0)] * (k + 1)
        for i, q in enumerate(self.reduced):
            poly = [Fraction(1)]
            for j in range(1, k + 1):
                # multiply by (s - i + j) / j
                shift = Fraction(j - i, j)
                nxt = [Fraction(0)] * (len(poly) + 1)
                for a, c in enumerate(poly):
                    nxt[a] += c * shift
                    nxt[a + 1] += c / j
                poly = nxt
            for a, c in enumerate(poly):
                total[a] += q * c
        return tuple(total)

    def to_dict(self) -> dict:
        return {
            "numerator": list(self.numerator),
            "reduced_numerator": list(self.reduced),
            "projdim": self.projdim,
            "degree": self.degree,
            "hilbert_polynomial": [str(c) for c in self.hilbert_polynomial()],
        }


def dim_degree(numerator: Sequence[int], nvars: int) -> HilbertData:
    N = _trim(list(numerator))
    if not any(N):
        return HilbertData(tuple(N), (), -1, 0, nvars)
    Q = N
    k = 0
    while sum(Q) == 0:
        # divide by (1 - t)
        q = []
        run = 0
        for c in Q[:-1]:
            run += c
            q.append(run)
        Q = _trim(q)
        k += 1
    projdim = nvars - k - 1
    degree = sum(Q) if projdim >= 0 else 0
    return HilbertData(tuple(N), tuple(Q), projdim, degree, nvars)


def scheme_invariants(ideal: Ideal) -> HilbertData:
    return buchberger(ideal).hilbert()
