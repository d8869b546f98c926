"""From a 6-dimensional relation space R in V⊗V to ideals in Plücker space.

Tensor convention: the column index of e_i ⊗ e_j is 4*i + j, with i the
first tensor factor.  Row k of the 6x16 matrix, reshaped to 4x4, is the
matrix of the k-th relation.
"""
from __future__ import annotations

import hashlib
import json
import time
from dataclasses import dataclass, field as dc_field
from functools import cached_property
from itertools import combinations
from typing import Sequence

import numpy as np

from .exactfield import ExactMatrix, FieldSpec, rank_array, rref, rref_array
from .grassmann import (
    PluckerPoint,
    plucker_from_span,
    plucker_quadric,
    plucker_ring,
    quartic_monomials4,
    rewrite_basis,
    u_ring,
    uv_ring,
)
from .groebner import HilbertData, Ideal, buchberger
from .multipoly import LAPLACE, MultiPoly, PolyRing, sym_det

F_NOTE = ("Computed over a prime field standing in for an algebraically closed field; "
          "dimension and degree of the ideal are stable under base change.")


class RelationSpace:
    """A 6-dimensional subspace of V⊗V given by a 6x16 matrix of full rank."""

    def __init__(self, matrix: ExactMatrix):
        if (matrix.rows, matrix.cols) != (6, 16):
            raise ValueError(f"relation matrix must be 6x16, got {matrix.rows}x{matrix.cols}")
        self.matrix = matrix
        self.field = matrix.field
        R, piv, rank = rref(matrix)
        if rank != 6:
            raise ValueError("relation space must have dimension 6")
        self.rref = R
        self.pivots = piv

    @classmethod
    def from_rows(cls, field: FieldSpec, rows: Sequence[Sequence]) -> RelationSpace:
        return cls(ExactMatrix.from_rows(field, rows))

    def rows(self) -> list[list]:
        return self.matrix.to_rows()

    def tensor(self, k: int) -> list[list]:
        """Row ``k`` reshaped to the 4x4 matrix [i][j] = coefficient of e_i⊗e_j."""
        r = self.matrix.row(k)
        return [list(r[4 * i:4 * i + 4]) for i in range(4)]

    def same_space(self, other: RelationSpace) -> bool:
        return self.field == other.field and self.rref == other.rref

    @cached_property
    def digest(self) -> str:
        payload = json.dumps({"field": str(self.field),
                              "matrix": [[self.field.to_str(x) for x in r] for r in self.rows()]},
                             sort_keys=True)
        return hashlib.sha256(payload.encode()).hexdigest()

    def __repr__(self):
        return f"RelationSpace({self.field}, rows={self.rows()})"


# -- line scheme ----------------------------------------------------------------------


def eliminated_block(R: RelationSpace, column_order: Sequence[int] | None = None):
    """Coefficients of the 4x10 block left after eliminating the pivot columns.

    Returns ``(U, cols)`` where ``U[j, c, i]`` is the coefficient of u_i in
    row j (the row u⊗e_j) and column ``cols[c]`` of the reduced matrix.  The
    v-rows have the same coefficients in the v-variables.
    """
    F = R.field
    piv = R.pivots
    free = [c for c in range(16) if c not in piv]
    if column_order is not None:
        if sorted(column_order) != free:
            raise ValueError("column_order must permute the non-pivot columns")
        free = list(column_order)
    Rr = R.rref
    pos = {c: k for k, c in enumerate(piv)}
    U = np.array([[[F.zero] * 4 for _ in free] for _ in range(4)], dtype=F.dtype)
    for j in range(4):
        for i in range(4):
            col = 4 * i + j
            for c, n in enumerate(free):
                if col == n:
                    U[j, c, i] = F.add(U[j, c, i], F.one)
                elif col in pos:
                    U[j, c, i] = F.sub(U[j, c, i], Rr[pos[col], n])
    return U, free


def symbolic_block(R: RelationSpace, column_order: Sequence[int] | None = None):
    """The reduced 8x10 matrix with polynomial entries in (u, v)."""
    U, free = eliminated_block(R, column_order)
    ring = uv_ring(R.field)
    rows = []
    for offset in (0, 4):
        for j in range(4):
            rows.append([ring.linear_form([0] * offset + list(U[j, c]) + [0] * (4 - offset))
                         for c in range(len(free))])
    return rows, free


def _vector35(f: MultiPoly) -> list:
    index = {m: i for i, m in enumerate(quartic_monomials4())}
    vec = [f.field.zero] * 35
    for e, c in f.items():
        vec[index[e]] = c
    return vec


def line_scheme_minors(R: RelationSpace, column_order: Sequence[int] | None = None):
    """All 45 maximal minors of the reduced 8x10 matrix, by two-block Laplace.

    Returns ``(subsets, grids)``: the column 8-subsets (original column
    indices, in order) and an array of shape (45, 1225) whose rows are the
    minors as dense bidegree-(4,4) vectors.
    """
    F = R.field
    U, free = eliminated_block(R, column_order)
    ring = u_ring(F)
    forms = [[ring.linear_form(list(U[j, c])) for c in range(len(free))] for j in range(4)]
    subsets4 = list(combinations(range(10), 4))
    sidx = {S: k for k, S in enumerate(subsets4)}
    D = np.array([_vector35(sym_det([[forms[j][c] for c in S] for j in range(4)], LAPLACE))
                  for S in subsets4], dtype=F.dtype)
    subsets8 = list(combinations(range(10), 8))
    grids = []
    for C in subsets8:
        top, bottom, signs = [], [], []
        for S_pos in combinations(range(8), 4):
            S = tuple(C[k] for k in S_pos)
            Sc = tuple(C[k] for k in range(8) if k not in S_pos)
            top.append(sidx[S])
            bottom.append(sidx[Sc])
            signs.append(-1 if sum(S_pos) % 2 else 1)
        A = D[top] * np.array(signs, dtype=F.dtype)[:, None]
        grids.append(F.matmul(F.reduce(A).T, D[bottom]).reshape(-1))
    grids = np.array(grids, dtype=F.dtype)
    return [tuple(free[c] for c in C) for C in subsets8], grids


def line_scheme_quartics(R: RelationSpace, column_order: Sequence[int] | None = None) -> list[MultiPoly]:
    """The nonzero minors rewritten as quartics in the Plücker variables."""
    _, grids = line_scheme_minors(R, column_order)
    nz = [k for k in range(grids.shape[0]) if any(grids[k])]
    if not nz:
        return []
    rb = rewrite_basis(R.field)
    X = rb.solve(grids[nz].T)
    return [rb.quartic(X[:, k]) for k in range(X.shape[1])]


def line_scheme_ideal(R: RelationSpace, column_order: Sequence[int] | None = None) -> Ideal:
    """Plücker quadric plus the rewritten 8x8 minors (zero minors dropped)."""
    ring = plucker_ring(R.field)
    return Ideal(ring, [plucker_quadric(R.field)] + line_scheme_quartics(R, column_order))


def rank_condition(R: RelationSpace, u: Sequence, v: Sequence) -> bool:
    """True iff (span(u,v) ⊗ V) ∩ R ≠ 0, via rank[B(u,v); R] <= 13."""
    F = R.field
    u = [F(x) for x in u]
    v = [F(x) for x in v]
    B = [[F.zero] * 16 for _ in range(8)]
    for j in range(4):
        for i in range(4):
            B[j][4 * i + j] = u[i]
            B[4 + j][4 * i + j] = v[i]
    stacked = np.array(B + R.rows(), dtype=F.dtype)
    return rank_array(F, stacked) <= 13


def scheme_invariants(ideal: Ideal) -> HilbertData:
    return buchberger(ideal).hilbert()


# -- σ, point scheme, rank loci, φ --------------------------------------------------


def transpose_relations(R: RelationSpace) -> RelationSpace:
    """Apply σ(x⊗y) = y⊗x: column 4i+j goes to 4j+i."""
    rows = R.rows()
    return RelationSpace.from_rows(R.field, [[r[4 * (c % 4) + c // 4] for c in range(16)] for r in rows])


def point_scheme_ideal(R: RelationSpace) -> Ideal:
    """4x4 minors of the 6x4 matrix M(x)[k][j] = sum_i R[k][4i+j] x_i."""
    F = R.field
    ring = PolyRing(F, ("x0", "x1", "x2", "x3"))
    M = [[ring.linear_form([R.matrix[k, 4 * i + j] for i in range(4)]) for j in range(4)]
         for k in range(6)]
    gens = [sym_det([M[k] for k in rows]) for rows in combinations(range(6), 4)]
    return Ideal(ring, gens)


def coefficient_ring(field: FieldSpec) -> PolyRing:
    return PolyRing(field, tuple(f"c{k}" for k in range(1, 7)))


def pencil_matrix(R: RelationSpace) -> list[list[MultiPoly]]:
    """The generic element sum_k c_k mat(r_k) of P(R), as a 4x4 matrix."""
    ring = coefficient_ring(R.field)
    return [[ring.linear_form([R.matrix[k, 4 * i + j] for k in range(6)]) for j in range(4)]
            for i in range(4)]


def rank_loci_ideals(R: RelationSpace) -> tuple[Ideal, Ideal]:
    """(2x2 minors, 3x3 minors) of the pencil matrix: rank <= 1 and <= 2 loci."""
    M = pencil_matrix(R)
    ring = coefficient_ring(R.field)

    def minors(k):
        return [sym_det([[M[i][j] for j in cols] for i in rows])
                for rows in combinations(range(4), k) for cols in combinations(range(4), k)]

    return Ideal(ring, minors(2)), Ideal(ring, minors(3))


def pencil_value(R: RelationSpace, c: Sequence) -> np.ndarray:
    F = R.field
    c = [F(x) for x in c]
    if len(c) != 6:
        raise ValueError("need six coefficients")
    M = [[F.zero] * 4 for _ in range(4)]
    for k in range(6):
        for i in range(4):
            for j in range(4):
                M[i][j] = F.add(M[i][j], F.mul(c[k], R.matrix[k, 4 * i + j]))
    return np.array(M, dtype=F.dtype)


def _span_point(F: FieldSpec, M: np.ndarray) -> PluckerPoint:
    if rank_array(F, M) != 2:
        raise ValueError("rank not two")
    Rr, _ = rref_array(F, M)
    return plucker_from_span(Rr[0].tolist(), Rr[1].tolist(), F)


def phi_map(R: RelationSpace, c: Sequence) -> PluckerPoint:
    """Column space {a, c} of the rank-2 tensor a⊗b + c⊗d = sum_k c_k r_k."""
    M = pencil_value(R, c)
    return _span_point(R.field, M.T)


def psi_map(R: RelationSpace, c: Sequence) -> PluckerPoint:
    """Row space {b, d} of the rank-2 tensor; lands on the line scheme of σ(R)."""
    return _span_point(R.field, pencil_value(R, c))


# -- reports ------------------------------------------------------------------------


@dataclass
class LineSchemeReport:
    field: str
    input_digest: str
    quartics: int
    generators: int
    gb_size: int
    hilbert: HilbertData
    timings: dict = dc_field(default_factory=dict)
    seed: int | None = None
    note: str = F_NOTE

    @property
    def projdim(self) -> int:
        return self.hilbert.projdim

    @property
    def degree(self) -> int:
        return self.hilbert.degree

    @property
    def theorem_check(self) -> str:
        if self.projdim != 1:
            return "not applicable"
        return "pass" if self.degree == 20 else "fail"

    def to_dict(self, timings: bool = True) -> dict:
        out = {
            "field": self.field,
            "input_digest": self.input_digest,
            "seed": self.seed,
            "generators": {"quartics": self.quartics, "quadric": 1, "total": self.generators},
            "gb_size": self.gb_size,
            "projdim": self.projdim,
            "degree": self.degree,
            "hilbert": self.hilbert.to_dict(),
            "theorem_check": self.theorem_check,
            "note": self.note,
        }
        if timings:
            out["timings"] = {k: round(v, 4) for k, v in self.timings.items()}
        return out


def compute_line_scheme(R: RelationSpace, seed: int | None = None) -> LineSchemeReport:
    timings = {}
    t0 = time.perf_counter()
    ideal = line_scheme_ideal(R)
    t1 = time.perf_counter()
    gb = buchberger(ideal)
    t2 = time.perf_counter()
    hd = gb.hilbert()
    t3 = time.perf_counter()
    timings.update(ideal=t1 - t0, groebner=t2 - t1, hilbert=t3 - t2)
    return LineSchemeReport(
        field=str(R.field),
        input_digest=R.digest,
        quartics=len(ideal) - 1,
        generators=len(ideal),
        gb_size=len(gb),
        hilbert=hd,
        timings=timings,
        seed=seed,
    )
