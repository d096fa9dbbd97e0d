"""
   Exact arithmetic in Q(zeta_n) and certified signs.

   Floating point decides nothing here: zero is tested exactly, and a
   nonzero value is evaluated with interval arithmetic whose precision is
   doubled until the interval excludes 0.
"""
import math

from ltsig.exact import (
    CyclotomicElement,
    RotationNumber,
    certified_sign,
    cyclotomic_polynomial,
    isolate_unit_circle_roots,
)

for n in (1, 4, 6, 15, 30):
    print(f"Phi_{n} =", cyclotomic_polynomial(n))

# (2cos(2 pi/101) - 2)^8 is around 1e-19: far below double precision noise
n = 101
z = CyclotomicElement.gen_power(n, 1)
x = CyclotomicElement.const(n, 1)
for _ in range(8):
    x = x * (z + z.conj() - 2)
print("float value:", x.evaluate(RotationNumber(1, n)).real)
print("certified sign:", certified_sign(x, RotationNumber(1, n)).name)
print("true value:", (2 * math.cos(2 * math.pi / n) - 2) ** 8)

# unit-circle roots: exact rotations for roots of unity, rational brackets otherwise
for coeffs in [(1, -1, 1), (1, -1, 1, -1, 1), (2, -3, 2), (1, -3, 3, -3, 1)]:
    arcs = isolate_unit_circle_roots(coeffs)
    print(coeffs, [a.label() for a in arcs])
