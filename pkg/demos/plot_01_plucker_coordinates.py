"""
Lines in P^3 as points of a quadric in P^5
==========================================

A 2-plane in a 4-dimensional space is recorded by the six 2x2 minors of any
2x4 matrix spanning it.  Those minors satisfy one quadratic relation.
"""

from grasslines import FieldSpec, plucker_from_span, plucker_quadric
from grasslines.grassmann import expand_to_uv, plucker_ring, rewrite_basis, rewrite_to_plucker

F = FieldSpec.rationals()

# a plane and its coordinates (p01, p02, p03, p12, p13, p23)
P = plucker_from_span([1, 0, 1, 0], [0, 1, 0, 1], F)
print("coordinates:", [str(c) for c in P.coords])

# changing the basis of the plane only rescales the point by the determinant
P2 = plucker_from_span([2, 1, 2, 1], [1, 3, 1, 3], F)
print("same point after a change of basis:", P.same_point(P2))

q = plucker_quadric(F)
print("quadric:", q)
print("value at P:", q.eval(list(P.coords)))

# substituting p_ij = u_i v_j - u_j v_i kills the quadric
print("expansion of the quadric in (u, v):", expand_to_uv(q))

# quartics in p expand to polynomials of bidegree (4, 4).  The linear map from
# the 126 quartics to the 35 x 35 grid of (u, v) monomials has a kernel made of
# the quadric times all 21 quadratic monomials.
rb = rewrite_basis(F)
print("expansion matrix:", rb.matrix.shape, "rank", rb.rank)

# rewriting goes back, up to a multiple of the quadric
p = plucker_ring(F).gens()
f = expand_to_uv(p[0] ** 2 * p[3] * p[5] + p[2] ** 4)
g = rewrite_to_plucker(f)
print("rewritten quartic:", g)
print("re-expands exactly:", expand_to_uv(g) == f)
