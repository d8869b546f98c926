import json
from itertools import product

import numpy as np
import pytest

from grasslines.exactfield import ExactMatrix, FieldSpec, rank_array
from grasslines.families import (
    SklyaninParams,
    planted_instance,
    random_R,
    skew,
    sklyanin,
    twisted_sklyanin,
)
from grasslines.grassmann import plucker_from_span, rewrite_basis
from grasslines.groebner import Ideal, buchberger
from grasslines.linescheme import (
    RelationSpace,
    compute_line_scheme,
    line_scheme_ideal,
    line_scheme_minors,
    pencil_value,
    phi_map,
    point_scheme_ideal,
    psi_map,
    rank_condition,
    rank_loci_ideals,
    scheme_invariants,
    symbolic_block,
    transpose_relations,
)
from grasslines.multipoly import TWO_BLOCK, sym_det

FP = FieldSpec.prime()
F5 = FieldSpec.prime(5)
ALPHA = (2, 3, FP("-5/7"))


@pytest.fixture(scope="module")
def sk_params():
    return SklyaninParams(FP, ALPHA)


def _vanishes(ideal, point):
    return all(not g.eval(list(point)) for g in ideal.generators)


def test_relation_space_validation():
    rows = skew(FP).rows()
    with pytest.raises(ValueError, match="dimension 6"):
        RelationSpace.from_rows(FP, rows[:5] + [rows[0]])
    with pytest.raises(ValueError, match="6x16"):
        RelationSpace.from_rows(FP, rows[:5])


def test_skew_all_minors_vanish():
    _, grids = line_scheme_minors(skew(FP))
    assert grids.shape == (45, 1225)
    assert not grids.any()
    I = line_scheme_ideal(skew(FP))
    assert len(I) == 1
    rep = compute_line_scheme(skew(FP))
    assert (rep.projdim, rep.degree, rep.theorem_check) == (4, 2, "not applicable")


def test_twisted_line_scheme(sk_params):
    rep = compute_line_scheme(twisted_sklyanin(sk_params))
    assert (rep.projdim, rep.degree, rep.theorem_check) == (1, 20, "pass")


def test_sklyanin_surface_and_mirror(sk_params):
    R = sklyanin(sk_params)
    H = scheme_invariants(line_scheme_ideal(R))
    assert H.projdim == 2
    assert scheme_invariants(line_scheme_ideal(transpose_relations(R))) == H


@pytest.mark.parametrize("seed", range(3))
def test_random_line_scheme_is_degree_20_curve(seed):
    rep = compute_line_scheme(random_R(seed, FP), seed=seed)
    assert (rep.projdim, rep.degree) == (1, 20)
    assert rep.generators == 46 and rep.quartics == 45
    json.dumps(rep.to_dict())


def test_column_order_independence():
    R = random_R(12, FP)
    _, free = symbolic_block(R)
    ref = buchberger(line_scheme_ideal(R)).elements
    rng = np.random.default_rng(0)
    order = [free[i] for i in rng.permutation(len(free))]
    assert buchberger(line_scheme_ideal(R, order)).elements == ref


def test_dense_minors_match_symbolic_determinants():
    R = random_R(21, FieldSpec.prime(101))
    rows, free = symbolic_block(R)
    subsets, grids = line_scheme_minors(R)
    rb = rewrite_basis(R.field)
    for k in (0, 17, 44):
        cols = [free.index(c) for c in subsets[k]]
        M = [[r[c] for c in cols] for r in rows]
        assert sym_det(M, TWO_BLOCK) == rb.uv_poly(grids[k])


def test_pointwise_soundness_small_field():
    F = F5
    for seed in range(2):
        R = random_R(seed, F)
        I = line_scheme_ideal(R)
        rng = np.random.default_rng(seed)
        for _ in range(60):
            u, v = rng.integers(0, 5, size=(2, 4)).tolist()
            if rank_array(F, np.array([u, v])) < 2:
                continue
            P = plucker_from_span(u, v, F)
            assert rank_condition(R, u, v) == _vanishes(I, P.coords)
    R, u, v = planted_instance(3, F)
    assert rank_condition(R, u, v)
    assert _vanishes(line_scheme_ideal(R), plucker_from_span(u, v, F).coords)


def test_transpose_is_involution():
    R = random_R(2, FP)
    assert transpose_relations(transpose_relations(R)).same_space(R)
    assert transpose_relations(skew(FP)).same_space(skew(FP))
    assert not transpose_relations(R).same_space(R)


def test_point_schemes(sk_params):
    I = point_scheme_ideal(skew(FP))
    assert len(I) == 0
    H = scheme_invariants(I)
    assert (H.projdim, H.degree) == (3, 1)
    H = scheme_invariants(point_scheme_ideal(twisted_sklyanin(sk_params)))
    assert (H.projdim, H.degree) == (0, 20)
    for seed in range(2):
        H = scheme_invariants(point_scheme_ideal(random_R(seed, FP)))
        assert (H.projdim, H.degree) == (0, 20)


def _coordinate_R(F):
    picks = [(0, 0), (0, 1), (1, 2), (2, 3), (3, 0), (3, 3)]
    rows = []
    for i, j in picks:
        r = [0] * 16
        r[4 * i + j] = 1
        rows.append(r)
    return RelationSpace.from_rows(F, rows)


def test_rank_loci_shapes_and_coordinate_points():
    R = _coordinate_R(FP)
    I1, I2 = rank_loci_ideals(R)
    assert len(I1.generators) <= 36 and len(I2.generators) <= 16
    for k in range(6):
        e = [0] * 6
        e[k] = 1
        assert _vanishes(I1, e)
    I1, I2 = rank_loci_ideals(random_R(0, FP))
    assert (len(I1), len(I2)) == (36, 16)
    assert scheme_invariants(I1).projdim == -1


def test_rank2_locus_matches_scalar_rank():
    F = FieldSpec.prime(3)
    R = random_R(4, F)
    _, I2 = rank_loci_ideals(R)
    hits = 0
    for c in product(range(3), repeat=6):
        if not any(c):
            continue
        low = rank_array(F, pencil_value(R, c)) <= 2
        hits += low
        assert low == _vanishes(I2, c)
    assert hits > 0


def test_phi_simple_example():
    rows = [[0] * 16 for _ in range(6)]
    rows[0][0] = rows[0][5] = 1  # e0⊗e0 + e1⊗e1
    for k, col in enumerate((2, 7, 8, 13, 15), start=1):
        rows[k][col] = 1
    R = RelationSpace.from_rows(FP, rows)
    assert phi_map(R, [1, 0, 0, 0, 0, 0]).coords == (1, 0, 0, 0, 0, 0)
    with pytest.raises(ValueError, match="rank not two"):
        phi_map(R, [0, 1, 0, 0, 0, 0])


def test_phi_and_psi_land_on_line_schemes():
    for seed in range(3):
        R, u, v = planted_instance(seed, FP)
        c = [1, 0, 0, 0, 0, 0]
        P = phi_map(R, c)
        assert P.same_point(plucker_from_span(u, v, FP))
        assert _vanishes(line_scheme_ideal(R), P.coords)
        Q = psi_map(R, c)
        assert _vanishes(line_scheme_ideal(transpose_relations(R)), Q.coords)


def test_projdim_lower_bound(sk_params):
    cases = [skew(FP), sklyanin(sk_params), twisted_sklyanin(sk_params), random_R(9, FP)]
    for R in cases:
        assert scheme_invariants(line_scheme_ideal(R)).projdim >= 1


def test_gl_mixed_basis_same_ideal():
    R = random_R(14, FP)
    g = FP.array([[1, 2, 0, 0, 0, 0], [0, 1, 0, 0, 0, 3], [0, 0, 1, 0, 0, 0],
                  [5, 0, 0, 1, 0, 0], [0, 0, 0, 0, 1, 0], [0, 0, 7, 0, 0, 1]])
    R2 = RelationSpace(ExactMatrix.from_array(FP, FP.matmul(g, R.matrix.to_array())))
    assert buchberger(line_scheme_ideal(R2)).elements == buchberger(line_scheme_ideal(R)).elements


def test_ideal_length_counts_generators():
    I = line_scheme_ideal(random_R(0, FP))
    assert isinstance(I, Ideal) and len(I) == len(I.generators) == 46
