"""
Sklyanin relations and their twisted cousins
============================================

Both families depend on (a1, a2, a3) with a1 + a2 + a3 + a1 a2 a3 = 0.  We use
a1 = 2, a2 = 3, which forces a3 = -5/7.  The untwisted family has a surface of
lines; flipping one sign per relation brings the line scheme down to a curve.
"""

from grasslines import (
    FieldSpec,
    SklyaninParams,
    compute_line_scheme,
    elliptic_quadrics,
    point_scheme_ideal,
    scheme_invariants,
    sklyanin,
    twisted_sklyanin,
)

F = FieldSpec.prime(32003)
params = SklyaninParams.from_pair(2, 3, F)
print("alpha =", [F.to_str(a) for a in params.alpha], " (a3 = -5/7 mod 32003)")

# the elliptic curve: any two of these diagonal quadrics cut it out
for q in elliptic_quadrics(SklyaninParams.from_pair(2, 3, FieldSpec.rationals())):
    print("   ", q)

for name, ctor in (("Sklyanin", sklyanin), ("twisted", twisted_sklyanin)):
    R = ctor(params)
    rep = compute_line_scheme(R)
    pts = scheme_invariants(point_scheme_ideal(R))
    print(f"\n{name}:")
    print(f"  line scheme   projdim {rep.projdim}, degree {rep.degree}, check: {rep.theorem_check}")
    print(f"  point scheme  projdim {pts.projdim}, degree {pts.degree}")

# the untwisted point scheme is E plus four isolated points: a curve of degree 4
