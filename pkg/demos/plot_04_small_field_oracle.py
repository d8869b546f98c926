"""
Checking the ideal against brute force over tiny fields
=======================================================

Over F_q there are only finitely many 2-planes in F_q^4, (q^4-1)(q^3-1)/((q^2-1)(q-1))
of them.  For each one we test the defining rank condition directly and
compare with the vanishing of the ideal at its Plücker point.
"""

from grasslines import FieldSpec, brute_force_lines, cross_validate, enumerate_g24, plucker_from_span, random_R, skew
from grasslines.families import planted_instance

for q in (2, 3, 5, 7):
    print(f"q = {q}: {len(enumerate_g24(q))} planes")

F = FieldSpec.prime(5)
print()
for label, R in (("skew", skew(F)),
                 ("random seed 0", random_R(0, F)),
                 ("random seed 1", random_R(1, F)),
                 ("planted", planted_instance(4, F)[0])):
    res = cross_validate(R)
    print(f"{label:>14}: {res.members:3d} planes on the locus, "
          f"{res.agree}/{res.subspaces} agree, ok={res.ok}")

# the planted line is always found
R, u, v = planted_instance(4, F)
lines = brute_force_lines(R)
print("\nplanted point found:", plucker_from_span(u, v, F).normalized().coords in lines)
