"""Relation spaces: the Sklyanin families, skew/θ-twisted spaces, and random
or planted instances for testing.

Randomness comes from ``numpy.random.default_rng(seed)`` (PCG64), which is
reproducible across platforms for a fixed seed.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
import numpy as np

from .exactfield import ExactMatrix, FieldSpec, rank_array, rref_array
from .linescheme import RelationSpace
from .multipoly import MultiPoly, PolyRing

CYCLIC = ((1, 2, 3), (2, 3, 1), (3, 1, 2))


def _col(i: int, j: int) -> int:
    return 4 * i + j


@dataclass(frozen=True)
class SklyaninParams:
    field: FieldSpec
    alpha: tuple

    def __post_init__(self):
        F = self.field
        if F.characteristic == 2:
            raise ValueError("Sklyanin families need characteristic different from 2")
        if len(self.alpha) != 3:
            raise ValueError("need three parameters")
        a = tuple(F(x) for x in self.alpha)
        object.__setattr__(self, "alpha", a)
        excluded = {F.zero, F.one, F.neg(F.one)}
        if any(x in excluded for x in a):
            raise ValueError("parameters must avoid 0, 1, -1")
        a1, a2, a3 = a
        if F.add(F.add(F.add(a1, a2), a3), F.mul(F.mul(a1, a2), a3)):
            raise ValueError("parameters violate a1 + a2 + a3 + a1*a2*a3 = 0")

    @classmethod
    def from_pair(cls, a1, a2, field: FieldSpec) -> SklyaninParams:
        """Derive a3 = -(a1 + a2) / (1 + a1*a2)."""
        F = field
        if F.characteristic == 2:
            raise ValueError("Sklyanin families need characteristic different from 2")
        a1, a2 = F(a1), F(a2)
        den = F.add(F.one, F.mul(a1, a2))
        if not den:
            raise ValueError("1 + a1*a2 = 0: no third parameter exists")
        a3 = F.neg(F.div(F.add(a1, a2), den))
        return cls(F, (a1, a2, a3))

    def cycled(self) -> SklyaninParams:
        a1, a2, a3 = self.alpha
        return SklyaninParams(self.field, (a2, a3, a1))


STANDARD = "standard"
ALPHA_BOTH = "alpha-both"


def _sklyanin_rows(params: SklyaninParams, twisted: bool, normalization: str) -> list[list]:
    if normalization not in (STANDARD, ALPHA_BOTH):
        raise ValueError(f"unknown normalization {normalization!r}")
    F = params.field
    one, zero = F.one, F.zero
    rows = []
    for i, j, k in CYCLIC:
        a = params.alpha[i - 1]
        b = a if normalization == ALPHA_BOTH else one
        # x0xi - xix0 - a(xjxk ± xkxj)
        r1 = [zero] * 16
        r1[_col(0, i)] = one
        r1[_col(i, 0)] = F.neg(one)
        r1[_col(j, k)] = F.neg(a)
        r1[_col(k, j)] = a if twisted else F.neg(a)
        # x0xi + xix0 - b(xjxk ∓ xkxj)
        r2 = [zero] * 16
        r2[_col(0, i)] = one
        r2[_col(i, 0)] = one
        r2[_col(j, k)] = F.neg(b)
        r2[_col(k, j)] = F.neg(b) if twisted else b
        rows += [r1, r2]
    return rows


def sklyanin(params: SklyaninParams, normalization: str = STANDARD) -> RelationSpace:
    """Four-dimensional Sklyanin relations, i over cyclic (i, j, k):

        x0xi - xix0 - a_i(xjxk + xkxj),   x0xi + xix0 - (xjxk - xkxj).

    ``normalization="alpha-both"`` puts a_i on the second relation as well; that
    variant does not give the secant-line surface (see README).
    """
    return RelationSpace.from_rows(params.field, _sklyanin_rows(params, False, normalization))


def twisted_sklyanin(params: SklyaninParams, normalization: str = STANDARD) -> RelationSpace:
    """Cocycle-twisted relations: x0xi - xix0 - a_i(xjxk - xkxj),
    x0xi + xix0 - (xjxk + xkxj)."""
    return RelationSpace.from_rows(params.field, _sklyanin_rows(params, True, normalization))


def elliptic_quadrics(params: SklyaninParams) -> list[MultiPoly]:
    """The four diagonal quadrics whose pencil cuts out the elliptic curve E."""
    F = params.field
    a1, a2, a3 = params.alpha
    neg, mul = F.neg, F.mul
    coeffs = [
        [1, 1, 1, 1],
        [1, neg(mul(a2, a3)), neg(a3), a2],
        [1, a3, neg(mul(a1, a3)), neg(a1)],
        [1, neg(a2), a1, neg(mul(a1, a2))],
    ]
    if rank_array(F, F.array(coeffs)) != 2:
        raise ValueError("quadrics do not form a pencil")
    ring = PolyRing(F, ("x0", "x1", "x2", "x3"))
    out = []
    for row in coeffs:
        out.append(ring.from_dict({tuple(2 * int(t == s) for t in range(4)): c for s, c in enumerate(row)}))
    return out


def skew(field: FieldSpec | None = None) -> RelationSpace:
    """x_i⊗x_j - x_j⊗x_i for i < j."""
    F = field or FieldSpec.prime()
    rows = []
    for i in range(4):
        for j in range(i + 1, 4):
            r = [0] * 16
            r[_col(i, j)] = 1
            r[_col(j, i)] = -1
            rows.append(r)
    return RelationSpace.from_rows(F, rows)


def theta_twist(theta: ExactMatrix) -> RelationSpace:
    """Span of e_i⊗e_j - e_j⊗θ(e_i), accepted only when it is 6-dimensional."""
    F = theta.field
    if (theta.rows, theta.cols) != (4, 4):
        raise ValueError("theta must be 4x4")
    if rank_array(F, theta.to_array()) != 4:
        raise ValueError("theta is not invertible")
    vectors = []
    for i in range(4):
        for j in range(4):
            r = [F.zero] * 16
            r[_col(i, j)] = F.add(r[_col(i, j)], F.one)
            for k in range(4):
                # θ(e_i) = sum_k theta[k, i] e_k
                r[_col(j, k)] = F.sub(r[_col(j, k)], theta[k, i])
            vectors.append(r)
    Rr, piv = rref_array(F, np.array(vectors, dtype=F.dtype))
    if len(piv) != 6:
        raise ValueError("theta span not 6-dimensional")
    return RelationSpace(ExactMatrix.from_array(F, Rr[:6]))


def _random_entries(rng: np.random.Generator, field: FieldSpec, shape) -> np.ndarray:
    if field.p:
        return rng.integers(0, field.p, size=shape, dtype=np.int64)
    arr = rng.integers(-9, 10, size=shape)
    return np.array([[Fraction(int(x)) for x in row] for row in arr], dtype=object) \
        if len(shape) == 2 else np.array([Fraction(int(x)) for x in arr], dtype=object)


def random_R(seed: int, field: FieldSpec | None = None) -> RelationSpace:
    """Uniform random 6x16 matrix from ``seed``, resampled until rank 6."""
    F = field or FieldSpec.prime()
    rng = np.random.default_rng(seed)
    while True:
        M = _random_entries(rng, F, (6, 16))
        if rank_array(F, M) == 6:
            return RelationSpace(ExactMatrix.from_array(F, M))


def planted_instance(seed: int, field: FieldSpec | None = None):
    """A relation space containing u⊗b + v⊗d, so span(u, v) lies on X_R.

    Returns ``(R, u, v)``; the planted tensor is row 0 of ``R``.
    """
    F = field or FieldSpec.prime()
    rng = np.random.default_rng(seed)
    while True:
        u, v, b, d = (_random_entries(rng, F, (4,)) for _ in range(4))
        if rank_array(F, np.array([u, v])) < 2:
            continue
        t = np.outer(u, b) + np.outer(v, d)
        t = F.reduce(t).reshape(-1)
        if not any(t):
            continue
        rest = _random_entries(rng, F, (5, 16))
        M = np.concatenate([t.reshape(1, 16), rest], axis=0)
        if rank_array(F, M) == 6:
            R = RelationSpace(ExactMatrix.from_array(F, M))
            return R, [F(x) for x in u.tolist()], [F(x) for x in v.tolist()]
