"""Plücker coordinates on G(2,4) and rewriting (4,4)-covariants as quartics.

Plücker variables are ordered p01 > p02 > p03 > p12 > p13 > p23.  A quartic
in them expands, via p_ij = u_i v_j - u_j v_i, into a polynomial of bidegree
(4,4) in two 4-vectors u, v.  Such polynomials are stored densely as vectors
of length 35*35 indexed by (u-monomial, v-monomial).
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

import numpy as np

from .exactfield import FieldSpec, inverse_array, rref_array
from .multipoly import MultiPoly, PolyRing

PLUCKER_PAIRS = ((0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3))
PLUCKER_NAMES = tuple(f"p{i}{j}" for i, j in PLUCKER_PAIRS)
UV_NAMES = ("u0", "u1", "u2", "u3", "v0", "v1", "v2", "v3")


@lru_cache(maxsize=None)
def plucker_ring(field: FieldSpec) -> PolyRing:
    return PolyRing(field, PLUCKER_NAMES)


@lru_cache(maxsize=None)
def uv_ring(field: FieldSpec) -> PolyRing:
    return PolyRing(field, UV_NAMES)


@lru_cache(maxsize=None)
def u_ring(field: FieldSpec) -> PolyRing:
    return PolyRing(field, UV_NAMES[:4])


@dataclass(frozen=True)
class PluckerPoint:
    field: FieldSpec
    coords: tuple

    def __post_init__(self):
        if len(self.coords) != 6:
            raise ValueError("a Plücker point has six coordinates")
        if not any(self.coords):
            raise ValueError("Plücker point with all coordinates zero")

    def normalized(self) -> PluckerPoint:
        """Scale so the first nonzero coordinate is 1."""
        F = self.field
        lead = next(c for c in self.coords if c)
        inv = F.inv(lead)
        return PluckerPoint(F, tuple(F.mul(c, inv) for c in self.coords))

    def on_quadric(self) -> bool:
        return not plucker_quadric(self.field).eval(list(self.coords))

    def same_point(self, other: PluckerPoint) -> bool:
        return self.normalized().coords == other.normalized().coords


def plucker_from_span(u: Sequence, v: Sequence, field: FieldSpec) -> PluckerPoint:
    """The six 2x2 minors of the 2x4 matrix with rows ``u`` and ``v``."""
    F = field
    u = [F(x) for x in u]
    v = [F(x) for x in v]
    coords = tuple(F.sub(F.mul(u[i], v[j]), F.mul(u[j], v[i])) for i, j in PLUCKER_PAIRS)
    if not any(coords):
        raise ValueError("degenerate span")
    return PluckerPoint(F, coords)


def plucker_quadric(field: FieldSpec) -> MultiPoly:
    p01, p02, p03, p12, p13, p23 = plucker_ring(field).gens()
    return p01 * p23 - p02 * p13 + p03 * p12


@lru_cache(maxsize=None)
def _p_images(field: FieldSpec) -> tuple[MultiPoly, ...]:
    gens = uv_ring(field).gens()
    u, v = gens[:4], gens[4:]
    return tuple(u[i] * v[j] - u[j] * v[i] for i, j in PLUCKER_PAIRS)


def expand_to_uv(q: MultiPoly) -> MultiPoly:
    """Substitute p_ij = u_i v_j - u_j v_i."""
    return q.substitute(list(_p_images(q.field)))


@lru_cache(maxsize=None)
def quartic_monomials4() -> tuple[tuple[int, int, int, int], ...]:
    """The 35 degree-4 monomials in four variables, DegRevLex-descending."""
    return tuple(PolyRing(FieldSpec.prime(2), ("a", "b", "c", "d")).monomials_of_degree(4))


class RewriteBasis:
    """The 1225 x 126 expansion matrix and a cached solver for it."""

    def __init__(self, field: FieldSpec):
        self.field = field
        ring = plucker_ring(field)
        self.ring = ring
        self.p_monomials = tuple(ring.monomials_of_degree(4))
        self.uv_monomials = quartic_monomials4()
        index = {m: i for i, m in enumerate(self.uv_monomials)}
        self._uv_index = index
        A = np.array([[field.zero] * len(self.p_monomials) for _ in range(35 * 35)], dtype=field.dtype)
        for col, exps in enumerate(self.p_monomials):
            f = expand_to_uv(ring.from_dict({exps: 1}))
            for e, c in f.items():
                A[index[e[:4]] * 35 + index[e[4:]], col] = c
        self.matrix = A
        _, piv = rref_array(field, A)
        self.pivots = piv
        self.rank = len(piv)
        AP = A[:, piv]
        _, rows = rref_array(field, AP.T)
        self.rows = rows
        self._AP = AP
        self._inv = inverse_array(field, AP[rows, :])

    def vector_of(self, f: MultiPoly) -> np.ndarray:
        """Dense 1225-vector of a bidegree-(4,4) polynomial in (u, v)."""
        F = self.field
        vec = np.array([F.zero] * 1225, dtype=F.dtype)
        for e, c in f.items():
            if sum(e[:4]) != 4 or sum(e[4:]) != 4:
                raise ValueError("polynomial is not of bidegree (4,4)")
            vec[self._uv_index[e[:4]] * 35 + self._uv_index[e[4:]]] = c
        return vec

    def uv_poly(self, vec: np.ndarray) -> MultiPoly:
        terms = {}
        for k in np.nonzero(vec)[0]:
            a, b = divmod(int(k), 35)
            terms[self.uv_monomials[a] + self.uv_monomials[b]] = vec[k]
        return uv_ring(self.field).from_dict(terms)

    def quartic(self, coeffs: np.ndarray) -> MultiPoly:
        return self.ring.from_dict({m: c for m, c in zip(self.p_monomials, coeffs.tolist()) if c})

    def solve(self, B: np.ndarray) -> np.ndarray:
        """Coefficient vectors x (126 x k) with ``matrix @ x == B``.

        Free coordinates are zero, which matches ``solve_particular``.
        Raises if some column of ``B`` is not in the image.
        """
        F = self.field
        B = np.asarray(B, dtype=F.dtype)
        squeeze = B.ndim == 1
        if squeeze:
            B = B.reshape(-1, 1)
        xP = F.matmul(self._inv, B[self.rows, :])
        back = F.matmul(self._AP, xP)
        bad = np.nonzero(np.any(back != B, axis=0))[0] if F.p else [
            k for k in range(B.shape[1]) if any(back[r, k] != B[r, k] for r in range(B.shape[0]))]
        if len(bad):
            raise ValueError("not a Plücker covariant")
        X = np.array([[F.zero] * B.shape[1] for _ in range(len(self.p_monomials))], dtype=F.dtype)
        X[self.pivots, :] = xP
        return X[:, 0] if squeeze else X


@lru_cache(maxsize=None)
def rewrite_basis(field: FieldSpec) -> RewriteBasis:
    return RewriteBasis(field)


def rewrite_to_plucker(f: MultiPoly) -> MultiPoly:
    """A quartic q in the Plücker variables with ``expand_to_uv(q) == f``."""
    rb = rewrite_basis(f.field)
    if not f:
        return rb.ring.zero()
    return rb.quartic(rb.solve(rb.vector_of(f)))
