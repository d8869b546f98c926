from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from grasslines.exactfield import FieldSpec, det_array
from grasslines.grassmann import plucker_quadric
from grasslines.multipoly import (
    LAPLACE,
    LEX,
    TWO_BLOCK,
    PolyRing,
    eval_many,
    poly_arith,
    poly_eval,
    scalar_matrix_poly,
    sym_det,
)

QQ = FieldSpec.rationals()
FP = FieldSpec.prime()


def _random_poly(ring, rng, nterms=5, maxdeg=3):
    F = ring.field
    terms = {}
    for _ in range(nterms):
        exps = tuple(int(x) for x in rng.integers(0, maxdeg + 1, size=ring.nvars))
        terms[exps] = F(int(rng.integers(-20, 21)))
    return ring.from_dict(terms)


@pytest.fixture(params=[QQ, FP], ids=str)
def ring(request):
    return PolyRing(request.param, ("x", "y", "z", "w"))


def test_basic_arithmetic(ring):
    x, y, z, w = ring.gens()
    assert x + ring.zero() == x
    assert (x + y) * (x - y) == x**2 - y**2
    assert poly_arith(x, y, "mul") == x * y
    assert (x - x).is_zero()
    assert not (x - x).terms


def test_mismatched_rings_rejected():
    a = PolyRing(QQ, ("x", "y")).var(0)
    b = PolyRing(FP, ("x", "y")).var(0)
    with pytest.raises(ValueError):
        poly_arith(a, b, "add")


@pytest.mark.parametrize("seed", range(5))
def test_ring_axioms_on_random_polys(ring, seed):
    rng = np.random.default_rng(seed)
    f, g, h = (_random_poly(ring, rng) for _ in range(3))
    assert f * g == g * f
    assert (f * g) * h == f * (g * h)
    assert f * (g + h) == f * g + f * h


def test_degrevlex_and_lex_orders():
    R = PolyRing(QQ, ("x", "y", "z"))
    x, y, z = R.gens()
    f = x * z + y**2 + x**3
    assert f.lm().exponents == (3, 0, 0)
    # degrevlex: y^2 > xz since xz has the larger last exponent
    assert (y**2 + x * z).lm().exponents == (0, 2, 0)
    L = PolyRing(QQ, ("x", "y", "z"), LEX)
    xl, yl, zl = L.gens()
    assert (yl**2 + xl * zl).lm().exponents == (1, 0, 1)


def test_homogeneous_products(ring):
    x, y, z, w = ring.gens()
    f = x * y + z**2
    g = w**3 - x * y * z
    assert (f * g).is_homogeneous() and (f * g).degree() == 5
    assert not (f + x).is_homogeneous()


def test_quadric_eval_examples():
    q = plucker_quadric(QQ)
    assert poly_eval(q, [1, 0, 1, -1, 0, 1]) == 0
    assert poly_eval(q, [1, 0, 0, 0, 0, 1]) == 1
    assert poly_eval(q.ring.const(7), [3, 1, 4, 1, 5, 9]) == 7


@pytest.mark.parametrize("seed", range(8))
def test_horner_matches_termwise(ring, seed):
    rng = np.random.default_rng(seed)
    f = _random_poly(ring, rng, nterms=8, maxdeg=4)
    pt = [ring.field(int(v)) for v in rng.integers(-9, 10, size=4)]
    assert f.eval(pt) == f.eval_horner(pt)


def test_eval_many_matches_eval():
    R = PolyRing(FieldSpec.prime(5), ("a", "b", "c"))
    rng = np.random.default_rng(1)
    polys = [_random_poly(R, rng) for _ in range(4)]
    pts = rng.integers(0, 5, size=(10, 3))
    out = eval_many(polys, pts)
    for i, f in enumerate(polys):
        for j, p in enumerate(pts.tolist()):
            assert int(out[i, j]) == f.eval(p)


def test_sym_det_small_cases():
    R = PolyRing(QQ, ("x", "y", "z", "w"))
    x, y, z, w = R.gens()
    assert sym_det([[x, y], [z, w]]) == x * w - y * z
    zero = R.zero()
    diag = [[x, zero, zero], [zero, y + z, zero], [zero, zero, w**2]]
    assert sym_det(diag) == x * (y + z) * w**2


def _block_matrix(F, rng, n=8, k=4):
    R = PolyRing(F, tuple(f"u{i}" for i in range(4)) + tuple(f"v{i}" for i in range(4)))

    def lin(offset):
        c = [0] * 8
        c[offset:offset + 4] = [int(x) for x in rng.integers(-3, 4, size=4)]
        return R.linear_form(c)

    return R, [[lin(0) for _ in range(n)] for _ in range(k)] + [[lin(4) for _ in range(n)] for _ in range(n - k)]


@pytest.mark.parametrize("seed", range(3))
def test_two_block_matches_laplace(seed):
    rng = np.random.default_rng(seed)
    _, M = _block_matrix(FP, rng)
    d1 = sym_det(M, LAPLACE)
    d2 = sym_det(M, TWO_BLOCK)
    assert d1 == d2
    assert not d1 or d1.degree() == 8


def test_two_block_rejects_shared_variables():
    R = PolyRing(QQ, ("x", "y"))
    x, y = R.gens()
    with pytest.raises(ValueError):
        sym_det([[x, y], [y, x]], TWO_BLOCK)


@pytest.mark.parametrize("seed", range(4))
def test_sym_det_alternating_and_evaluates(seed):
    rng = np.random.default_rng(seed)
    R = PolyRing(QQ, ("x", "y", "z"))
    M = [[_random_poly(R, rng, nterms=2, maxdeg=1) for _ in range(4)] for _ in range(4)]
    d = sym_det(M)
    swapped = [M[1], M[0]] + M[2:]
    assert sym_det(swapped) == -d
    pt = [Fraction(int(v)) for v in rng.integers(-5, 6, size=3)]
    vals = np.array([[f.eval(pt) for f in r] for r in M], dtype=object)
    assert d.eval(pt) == det_array(QQ, vals)


def test_scalar_matrix_det():
    R = PolyRing(FP, ("x",))
    M = scalar_matrix_poly(R, [[2, 1], [7, 4]])
    assert sym_det(M) == R.const(1)


def test_substitute():
    R = PolyRing(QQ, ("x", "y"))
    x, y = R.gens()
    f = x**2 - y
    assert f.substitute([x + y, x * y]) == (x + y) ** 2 - x * y


def test_from_dict_drops_zeros():
    R = PolyRing(FieldSpec.prime(7), ("x", "y"))
    f = R.from_dict({(1, 0): 7, (0, 1): 3})
    assert f.as_dict() == {(0, 1): 3}


small = st.integers(min_value=-50, max_value=50)


@settings(max_examples=60, deadline=None)
@given(st.lists(st.tuples(st.integers(0, 3), st.integers(0, 3), small), max_size=6),
       st.lists(st.tuples(st.integers(0, 3), st.integers(0, 3), small), max_size=6),
       st.tuples(small, small))
def test_eval_is_a_ring_homomorphism(ft, gt, pt):
    R = PolyRing(QQ, ("x", "y"))
    f = R.from_dict({(a, b): c for a, b, c in ft})
    g = R.from_dict({(a, b): c for a, b, c in gt})
    p = list(pt)
    assert (f * g).eval(p) == f.eval(p) * g.eval(p)
    assert (f - g).eval(p) == f.eval(p) - g.eval(p)


def test_monic_and_scale():
    R = PolyRing(QQ, ("x", "y"))
    x, y = R.gens()
    f = x.scale(3) + y
    m = f.monic()
    assert m.lc() == 1
    assert m.scale(3) == f
