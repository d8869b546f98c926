import numpy as np
import pytest

from grasslines.exactfield import FieldSpec, rank_array
from grasslines.grassmann import (
    PluckerPoint,
    expand_to_uv,
    plucker_from_span,
    plucker_quadric,
    plucker_ring,
    quartic_monomials4,
    rewrite_basis,
    rewrite_to_plucker,
    uv_ring,
)

QQ = FieldSpec.rationals()
FP = FieldSpec.prime()


@pytest.mark.parametrize("F", [QQ, FP], ids=str)
def test_span_examples(F):
    assert plucker_from_span([1, 0, 0, 0], [0, 1, 0, 0], F).coords == (1, 0, 0, 0, 0, 0)
    P = plucker_from_span([1, 0, 1, 0], [0, 1, 0, 1], F)
    assert P.coords == tuple(F(x) for x in (1, 0, 1, -1, 0, 1))
    assert P.on_quadric()
    with pytest.raises(ValueError, match="degenerate span"):
        plucker_from_span([1, 2, 3, 4], [2, 4, 6, 8], F)


def test_point_validation():
    with pytest.raises(ValueError):
        PluckerPoint(FP, (0,) * 6)
    a = PluckerPoint(FP, (2, 0, 0, 0, 0, 4))
    assert a.same_point(PluckerPoint(FP, (1, 0, 0, 0, 0, 2)))
    assert not a.on_quadric()


@pytest.mark.parametrize("seed", range(10))
def test_row_operations_scale_by_det(seed):
    F = FP
    rng = np.random.default_rng(seed)
    u, v = rng.integers(0, F.p, size=(2, 4)).tolist()
    a, b, c, d = rng.integers(0, F.p, size=4).tolist()
    det = F.sub(F.mul(a, d), F.mul(b, c))
    if not det:
        return
    u2 = [F.add(F.mul(a, x), F.mul(b, y)) for x, y in zip(u, v)]
    v2 = [F.add(F.mul(c, x), F.mul(d, y)) for x, y in zip(u, v)]
    P, P2 = plucker_from_span(u, v, F), plucker_from_span(u2, v2, F)
    assert P2.coords == tuple(F.mul(det, x) for x in P.coords)
    assert P.on_quadric()


def test_quadric_values():
    q = plucker_quadric(QQ)
    assert q.eval([1, 0, 0, 0, 0, 1]) == 1
    assert expand_to_uv(q).is_zero()


def test_expand_examples():
    ring = plucker_ring(QQ)
    p = ring.gens()
    g = uv_ring(QQ).gens()
    u, v = g[:4], g[4:]
    assert expand_to_uv(p[0] ** 4) == (u[0] * v[1] - u[1] * v[0]) ** 4
    q1, q2 = p[0] * p[3] ** 3, p[1] ** 2 * p[4] * p[5]
    assert expand_to_uv(q1 + q2) == expand_to_uv(q1) + expand_to_uv(q2)
    assert expand_to_uv(plucker_quadric(QQ) * p[2] * p[4]).is_zero()


def test_uv_grid_has_35_monomials():
    mons = quartic_monomials4()
    assert len(mons) == 35 and len(set(mons)) == 35
    assert mons[0] == (4, 0, 0, 0)


@pytest.mark.parametrize("F", [QQ, FP], ids=str)
def test_expansion_matrix_rank_and_kernel(F):
    rb = rewrite_basis(F)
    assert rb.matrix.shape == (1225, 126)
    # 126 quartics minus the 21 multiples quadric * (degree-2 monomial)
    assert rb.rank == 105
    ring = plucker_ring(F)
    q = plucker_quadric(F)
    index = {m: i for i, m in enumerate(rb.p_monomials)}
    kernel = []
    for m in ring.monomials_of_degree(2):
        prod = q * ring.from_dict({m: 1})
        vec = [F.zero] * 126
        for e, c in prod.items():
            vec[index[e]] = c
        kernel.append(vec)
    K = np.array(kernel, dtype=F.dtype).T
    assert rank_array(F, K) == 21
    assert not F.matmul(rb.matrix, K).any()


def test_rewrite_examples():
    g = uv_ring(QQ).gens()
    u, v = g[:4], g[4:]
    f = (u[0] * v[1] - u[1] * v[0]) ** 4
    q = rewrite_to_plucker(f)
    assert expand_to_uv(q) == f
    assert rewrite_to_plucker(uv_ring(QQ).zero()).is_zero()


def test_rewrite_rejects_non_covariant():
    g = uv_ring(FP).gens()
    u, v = g[:4], g[4:]
    with pytest.raises(ValueError, match="not a Plücker covariant"):
        rewrite_to_plucker(u[0] ** 4 * v[0] ** 4)
    with pytest.raises(ValueError):
        rewrite_to_plucker(u[0] ** 4)


@pytest.mark.parametrize("seed", range(5))
def test_rewrite_roundtrip_random(seed):
    rng = np.random.default_rng(seed)
    ring = plucker_ring(FP)
    mons = ring.monomials_of_degree(4)
    q = ring.from_dict({mons[int(i)]: int(rng.integers(1, FP.p)) for i in rng.integers(0, 126, size=8)})
    f = expand_to_uv(q)
    q2 = rewrite_to_plucker(f)
    assert expand_to_uv(q2) == f
    # representatives differ by a multiple of the quadric
    assert expand_to_uv(q2 - q).is_zero()
