"""
From rank-two tensors to lines
==============================

A tensor a(x)b + c(x)d of rank two has a two-dimensional column space span(a, c).
When the tensor lies in R, that plane is on the line scheme of R; its row
space span(b, d) is on the line scheme of the transposed relations.
"""

from grasslines import (
    FieldSpec,
    line_scheme_ideal,
    phi_map,
    psi_map,
    rank_loci_ideals,
    scheme_invariants,
    transpose_relations,
)
from grasslines.families import planted_instance

F = FieldSpec.prime(32003)
R, u, v = planted_instance(seed=3, field=F)

# row 0 of a planted instance is u(x)b + v(x)d
c = [1, 0, 0, 0, 0, 0]
P = phi_map(R, c)
print("phi image:", [F.to_str(x) for x in P.normalized().coords])
print("on X_R:", all(not g.eval(list(P.coords)) for g in line_scheme_ideal(R).generators))

Q = psi_map(R, c)
RT = transpose_relations(R)
print("psi image on the mirror scheme:",
      all(not g.eval(list(Q.coords)) for g in line_scheme_ideal(RT).generators))

# rank loci inside P(R) = P^5
I1, I2 = rank_loci_ideals(R)
H1, H2 = scheme_invariants(I1), scheme_invariants(I2)
print(f"\nrank <= 1: {len(I1)} quadrics, projdim {H1.projdim}")
print(f"rank <= 2: {len(I2)} cubics, projdim {H2.projdim}, degree {H2.degree}")

try:
    phi_map(R, [0, 0, 0, 0, 0, 0])
except ValueError as exc:
    print("zero tensor rejected:", exc)
