"""
Specializing at places
======================

A place sends the character ring to numbers. The specialized algebra is
Frobenius exactly when the specialized pairing determinant is nonzero.
"""

from fractions import Fraction

from skeinfrob import (
    Place, annulus_place, annulus_roots_check, left_det_at_place, specialized_frobenius_check,
    torus_place, trace_coordinates,
)

# annulus: degenerate only at z = +-2
for z in range(-3, 4):
    v = specialized_frobenius_check("annulus", 3, annulus_place(3, z=z))
    print(f"z={z:2d}: {v}")

# left multiplication by T_1 has determinant z
print("det L_T1 at z=3/2:", left_det_at_place(5, 1, Fraction(3, 2)))

# z = q^N + q^-N has the N roots zeta q + 1/(zeta q)
print("roots check at q=2:", annulus_roots_check(5, 2))

# torus in multiplicative coordinates
good = torus_place(3, 2, 3)
print("trace coordinates:", [str(t) for t in trace_coordinates(good)])
print(specialized_frobenius_check("torus", 3, good))
print(specialized_frobenius_check("torus", 3, torus_place(3, 1, 3)))

# pants: one boundary value at -2 is enough to degenerate
print(specialized_frobenius_check("pants", 3, Place("pants", 3, {"z1": 0, "z2": -2, "z3": 3})))
