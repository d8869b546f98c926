"""Brute-force check of the line-scheme locus over small prime fields.

Every 2-dimensional subspace of F_q^4 is enumerated by its RREF basis; the
rank condition (Q⊗V) ∩ R ≠ 0 is compared with vanishing of the ideal
generators at the Plücker point.  This validates the F_q-points of the locus,
not the scheme structure.
"""
from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from itertools import product

import numpy as np

from .exactfield import FieldSpec, rank_array
from .grassmann import plucker_from_span
from .linescheme import RelationSpace, line_scheme_ideal
from .multipoly import eval_many

MAX_Q = 7


def gaussian_binomial_42(q: int) -> int:
    return (q**4 - 1) * (q**3 - 1) // ((q**2 - 1) * (q - 1))


def _check_budget(field: FieldSpec) -> int:
    if not field.is_prime:
        raise ValueError("brute force needs a prime field")
    if field.p > MAX_Q:
        raise ValueError("enumeration budget exceeded")
    return field.p


def enumerate_g24(q: int) -> list[np.ndarray]:
    """Canonical 2x4 RREF representatives of all points of G(2,4)(F_q)."""
    _check_budget(FieldSpec.prime(q))
    reps = []
    for a, b in ((0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)):
        # free entries: row 0 right of a except column b; row 1 right of b
        free = [(0, c) for c in range(a + 1, 4) if c != b] + [(1, c) for c in range(b + 1, 4)]
        for vals in product(range(q), repeat=len(free)):
            M = np.zeros((2, 4), dtype=np.int64)
            M[0, a] = 1
            M[1, b] = 1
            for (r, c), x in zip(free, vals):
                M[r, c] = x
            reps.append(M)
    return reps


def _b_matrix(u, v) -> np.ndarray:
    B = np.zeros((8, 16), dtype=np.int64)
    for j in range(4):
        for i in range(4):
            B[j, 4 * i + j] = u[i]
            B[4 + j, 4 * i + j] = v[i]
    return B


def brute_force_lines(R: RelationSpace) -> set[tuple]:
    """Normalized Plücker coordinates of all Q with rank[B(u,v); R] <= 13."""
    F = R.field
    _check_budget(F)
    Rm = R.matrix.to_array()
    out = set()
    for M in enumerate_g24(F.p):
        u, v = M[0], M[1]
        if rank_array(F, np.concatenate([_b_matrix(u, v), Rm])) <= 13:
            out.add(plucker_from_span(u.tolist(), v.tolist(), F).normalized().coords)
    return out


@dataclass
class OracleResult:
    field: str
    subspaces: int
    members: int
    agree: int
    discrepancies: list = dc_field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.discrepancies

    def to_dict(self) -> dict:
        return {"field": self.field, "subspaces": self.subspaces, "members": self.members,
                "agree": self.agree, "ok": self.ok, "discrepancies": self.discrepancies}


def cross_validate(R: RelationSpace) -> OracleResult:
    """Compare the rank-test locus with the vanishing locus of the ideal."""
    F = R.field
    q = _check_budget(F)
    ideal = line_scheme_ideal(R)
    reps = enumerate_g24(q)
    points = [plucker_from_span(M[0].tolist(), M[1].tolist(), F) for M in reps]
    values = eval_many(list(ideal.generators), np.array([pt.coords for pt in points], dtype=np.int64))
    vanish = ~np.any(values != 0, axis=0)
    Rm = R.matrix.to_array()
    members = agree = 0
    bad = []
    for M, pt, zero in zip(reps, points, vanish):
        rank_ok = rank_array(F, np.concatenate([_b_matrix(M[0], M[1]), Rm])) <= 13
        members += rank_ok
        if rank_ok == bool(zero):
            agree += 1
        else:
            bad.append({"u": M[0].tolist(), "v": M[1].tolist(), "plucker": list(pt.coords),
                        "rank_test": bool(rank_ok), "ideal_vanishes": bool(zero)})
    return OracleResult(str(F), len(reps), members, agree, bad)
