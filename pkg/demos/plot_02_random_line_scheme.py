"""
The line scheme of a random relation space
==========================================

Pick six random tensors in V (x) V, dim V = 4, and ask which 2-planes Q
satisfy (Q (x) V) meets R.  The answer is a curve in the Grassmannian, and the
Hilbert series of its ideal tells us its degree.
"""

import time

from grasslines import FieldSpec, buchberger, line_scheme_ideal, random_R

F = FieldSpec.prime(32003)
R = random_R(seed=2024, field=F)
print("first relation as a 4x4 matrix:")
for row in R.tensor(0):
    print("   ", row)

t0 = time.perf_counter()
ideal = line_scheme_ideal(R)
print(f"\n{len(ideal)} generators: the Plücker quadric and {len(ideal) - 1} quartics "
      f"({time.perf_counter() - t0:.2f}s)")

t0 = time.perf_counter()
G = buchberger(ideal)
print(f"reduced Groebner basis: {len(G)} elements ({time.perf_counter() - t0:.2f}s)")
print("degrees in the basis:", sorted(g.degree() for g in G.elements))

H = G.hilbert()
print("\nHilbert series numerator N(t):", H.numerator)
print("after cancelling (1-t) factors:", H.reduced)
print("projective dimension:", H.projdim)
print("degree:", H.degree)

# the Hilbert polynomial is 20 t + c; the constant depends on how the ideal is
# presented, so only the slope carries meaning here
print("Hilbert polynomial coefficients (constant first):",
      [str(c) for c in H.hilbert_polynomial()])
print("values of the Hilbert function:", [H.hilbert_function(d) for d in range(10)])
