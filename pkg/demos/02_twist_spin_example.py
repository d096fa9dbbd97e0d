"""
   The 3-twist spin of T(2,5) at alpha^2, alpha = exp(2 pi i/5).

   The torus signature is a signed sum of knot signatures, and the
   gauge-theoretic side is compared against it.  The printed shortcut for
   the difference gives 2, while the term-by-term recomputation gives 4.
"""
from ltsig import (
    CassonInput,
    TwistSpinInput,
    echeverria_example,
    equivariant_casson,
    fo_conjecture_rhs,
    torus_knot,
    twist_spin_sigma,
)
from ltsig.exact import RotationNumber
from ltsig.signature import signature_at

K = torus_knot(2, 5)
inp = TwistSpinInput(K, 3, 5, 2)

def s(q, n):
    return signature_at(K, RotationNumber(q, n)).signature

print("sigma at 1/3, 2/3:", s(1, 3), s(2, 3))
print("sigma at 2/15, 7/15, 12/15:", s(2, 15), s(7, 15), s(12, 15))
print("twist spin sigma:", twist_spin_sigma(inp))

for lam in (0, 1, 2):
    print(f"lambda(Y)={lam}: equivariant Casson {equivariant_casson(K, 3, CassonInput(lam))},",
          f"8 lambda + sigma = {fo_conjecture_rhs(K, inp, CassonInput(lam))}")

ex = echeverria_example(K)
print(ex)
print("printed and recomputed discrepancies disagree:", ex.mismatch)

# the gate: a 2-fold cover of the trefoil has |H1| = 3, so n=2 is refused
try:
    twist_spin_sigma(TwistSpinInput(torus_knot(2, 3), 2, 3, 1))
except Exception as e:
    print(type(e).__name__, e)
