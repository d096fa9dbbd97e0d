"""
   Levine-Tristram signature functions of a few torus knots.

   The signature is a step function on the circle.  It only jumps at roots
   of the Alexander polynomial, and at roots of unity every value below is
   exact (certified signs, no rounding).
"""
from fractions import Fraction

import numpy as np

from ltsig import alexander_polynomial, profile, signature_at, torus_knot
from ltsig.exact import RotationNumber

K = torus_knot(2, 5)
print(K.name, "Seifert matrix:")
print(np.array(K.matrix.tolist()))
print("Alexander polynomial:", alexander_polynomial(K).polynomial)

# the step function, arc by arc
prof = profile(K)
for start, end, value in prof.linear_arcs():
    lo = start if isinstance(start, Fraction) else start.label()
    hi = end if isinstance(end, Fraction) else end.label()
    print(f"  ({lo}, {hi}): {value}")

# at a jump the form degenerates and the nullity shows up
print("at 1/10:", signature_at(K, RotationNumber(1, 10)))
print("at 2/5: ", signature_at(K, RotationNumber(2, 5)))

# a coarse picture of sigma on a grid of rotations (denominator 60)
for p, q in [(2, 3), (2, 5), (3, 4), (3, 5)]:
    K = torus_knot(p, q)
    row = [signature_at(K, RotationNumber(j, 60)).signature for j in range(1, 60)]
    print(f"T({p},{q})", " ".join(f"{v:+d}" for v in row[:30]))
