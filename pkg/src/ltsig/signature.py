"""Levine-Tristram signatures of knots and their step-function profiles.

For a Seifert matrix ``A`` and a point ``alpha`` of the unit circle the
signature is that of the Hermitian matrix

    H(alpha) = (1 - alpha) A + (1 - conj(alpha)) A^T.

At roots of unity ``H`` is assembled over the cyclotomic field and
diagonalized by congruence with certified pivot signs, so the result is
exact.  Other points of the circle are handled in floating point and are
flagged as uncertified.
"""
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import NamedTuple, Optional

import numpy as np

from .errors import BadAlpha, ParityViolation
from .exact import (
    CyclotomicElement,
    ExactRotation,
    RotationNumber,
    certified_sign,
    isolate_unit_circle_roots,
    simplest_between,
)
from .exact.cyclotomic import START_PRECISION
from .seifert import KnotSpec, SeifertMatrix, alexander_polynomial

__all__ = [
    "AlphaPoint",
    "as_alpha",
    "SignatureResult",
    "SignatureProfile",
    "hermitian_form",
    "signature_at",
    "jump_candidates",
    "profile",
    "averaged_sigma",
    "floating_signature",
]

GENERIC_ZERO_THRESHOLD = 1e-9
JUMP_EXCLUSION = 1e-9


@dataclass(frozen=True)
class AlphaPoint:
    """A point of the unit circle: exact rotation number or uncertified float angle."""

    rotation: Optional[RotationNumber] = None
    angle: Optional[float] = None

    def __post_init__(self):
        if (self.rotation is None) == (self.angle is None):
            raise ValueError("AlphaPoint needs exactly one of rotation, angle")
        if self.angle is not None:
            a = float(self.angle) % 1.0
            if not math.isfinite(a):
                raise BadAlpha(f"bad angle {self.angle}")
            object.__setattr__(self, "angle", a)

    @classmethod
    def exact(cls, q, n=1):
        return cls(rotation=RotationNumber(q, n))

    @classmethod
    def generic(cls, angle):
        return cls(angle=angle)

    @property
    def is_exact(self):
        return self.rotation is not None

    def __float__(self):
        return float(self.rotation) if self.is_exact else self.angle

    def __str__(self):
        return str(self.rotation) if self.is_exact else repr(self.angle)


def as_alpha(x) -> AlphaPoint:
    """Coerce a rotation number, fraction, ``"q/n"`` string or float."""
    if isinstance(x, AlphaPoint):
        return x
    if isinstance(x, RotationNumber):
        return AlphaPoint(rotation=x)
    if isinstance(x, (int, Fraction)):
        return AlphaPoint(rotation=RotationNumber.from_fraction(x))
    if isinstance(x, str):
        text = x.strip()
        if "." in text or "e" in text.lower():
            try:
                return AlphaPoint.generic(float(text))
            except ValueError:
                raise BadAlpha(f"cannot parse alpha {x!r}") from None
        try:
            return AlphaPoint(rotation=RotationNumber.parse(text))
        except (ValueError, ZeroDivisionError):
            raise BadAlpha(f"cannot parse alpha {x!r}") from None
    if isinstance(x, float):
        return AlphaPoint.generic(x)
    raise TypeError(f"cannot interpret {x!r} as a point of the circle")


class SignatureResult(NamedTuple):
    signature: int
    nullity: int
    certified: bool = True


def _matrix(K):
    if isinstance(K, KnotSpec):
        return K.matrix
    if isinstance(K, SeifertMatrix):
        return K
    return SeifertMatrix(K)


def hermitian_form(A, alpha):
    """H(alpha) as a list of CyclotomicElement rows (exact) or a complex array."""
    A = _matrix(A).entries
    alpha = as_alpha(alpha)
    n = len(A)
    if not alpha.is_exact:
        a = np.exp(2j * np.pi * alpha.angle)
        M = np.array(A, dtype=float).reshape(n, n)
        return (1 - a) * M + (1 - np.conj(a)) * M.T
    level = alpha.rotation.denominator
    one_minus = 1 - CyclotomicElement.gen_power(level, 1)
    one_minus_bar = one_minus.conj()
    H = [[one_minus * A[i][j] + one_minus_bar * A[j][i] for j in range(n)] for i in range(n)]
    for i in range(n):
        for j in range(i, n):
            assert H[i][j] == H[j][i].conj(), "H(alpha) must be Hermitian"
    return H


def floating_signature(H, threshold=GENERIC_ZERO_THRESHOLD):
    """(signature, nullity) of a Hermitian array by eigenvalue sign count."""
    H = np.asarray(H)
    if H.size == 0:
        return 0, 0
    norm = np.linalg.norm(H, 2)
    if norm == 0:
        return 0, H.shape[0]
    ev = np.linalg.eigvalsh(H)
    tol = threshold * norm
    pos = int(np.sum(ev > tol))
    neg = int(np.sum(ev < -tol))
    return pos - neg, H.shape[0] - pos - neg


def _strip_content(block):
    g = 0
    for row in block:
        for x in row:
            g = math.gcd(g, x.content())
            if g == 1:
                return block
    if g <= 1:
        return block
    return [[x.divide_int(g) for x in row] for row in block]


def _congruence_signature(H, at, bits):
    """Signature and nullity of an exact Hermitian matrix over Q(zeta_n).

    Fraction-free symmetric elimination: a real pivot p turns the trailing
    block B into p*B - v v^*, which is p times the Schur complement, so the
    running sign factor absorbs sign(p).  With a zero diagonal but a
    nonzero entry c, the pair is a hyperbolic plane (signature 0) and the
    rest is scaled by |c|^2 > 0.
    """
    B = [list(r) for r in H]
    signature = 0
    nullity = 0
    factor = 1
    while B:
        m = len(B)
        piv = next((i for i in range(m) if not B[i][i].is_zero()), None)
        if piv is not None:
            order = [piv] + [i for i in range(m) if i != piv]
            B = [[B[i][j] for j in order] for i in order]
            p = B[0][0]
            s = certified_sign(p, at, bits)
            signature += factor * int(s)
            factor *= int(s)
            B = [
                [p * B[i][j] - B[i][0] * B[0][j] for j in range(1, m)]
                for i in range(1, m)
            ]
        else:
            pair = next(
                ((i, j) for i in range(m) for j in range(i + 1, m) if not B[i][j].is_zero()),
                None,
            )
            if pair is None:
                nullity += m
                break
            i0, j0 = pair
            order = [i0, j0] + [i for i in range(m) if i not in pair]
            B = [[B[i][j] for j in order] for i in order]
            c = B[0][1]
            cc = c * c.conj()
            cb = c.conj()
            B = [
                [cc * B[r][s] - c * B[r][0] * B[1][s] - cb * B[r][1] * B[0][s] for s in range(2, m)]
                for r in range(2, m)
            ]
        B = _strip_content(B)
    return signature, nullity


def signature_at(K, alpha, precision_bits=START_PRECISION) -> SignatureResult:
    """Levine-Tristram signature and nullity of H(alpha)."""
    alpha = as_alpha(alpha)
    A = _matrix(K)
    if not alpha.is_exact:
        sig, null = floating_signature(hermitian_form(A, alpha))
        return SignatureResult(sig, null, False)
    if alpha.rotation.denominator == 1:
        return SignatureResult(0, A.size, True)
    H = hermitian_form(A, alpha)
    sig, null = _congruence_signature(H, alpha.rotation, precision_bits)
    return SignatureResult(sig, null, True)


def jump_candidates(K):
    """Unit-circle roots of the Alexander polynomial, in rotation order."""
    return isolate_unit_circle_roots(alexander_polynomial(K).polynomial)


@dataclass(frozen=True)
class SignatureProfile:
    """The step function alpha -> sigma_alpha on the circle.

    ``arc_values[0]`` belongs to the arc through rotation 0 (from the last
    jump round to the first); ``arc_values[i]`` for ``i >= 1`` to the arc
    from ``jumps[i-1]`` to ``jumps[i]``.  ``jump_values[i]`` is the
    signature exactly at an ExactRotation jump and None at isolated
    (non-root-of-unity) jumps.
    """

    jumps: tuple
    arc_values: tuple
    jump_values: tuple
    samples: tuple

    def left_value(self, i):
        """Value on the arc arriving at jump i."""
        return self.arc_values[i]

    def right_value(self, i):
        """Value on the arc leaving jump i."""
        return self.arc_values[(i + 1) % len(self.jumps)]

    def linear_arcs(self):
        """Arcs of [0, 1) cut at 0: list of (start, end, value) with RootArc or Fraction ends."""
        if not self.jumps:
            return [(Fraction(0), Fraction(1), self.arc_values[0])]
        out = [(Fraction(0), self.jumps[0], self.arc_values[0])]
        for i in range(1, len(self.jumps)):
            out.append((self.jumps[i - 1], self.jumps[i], self.arc_values[i]))
        out.append((self.jumps[-1], Fraction(1), self.arc_values[0]))
        return out

    def arc_index(self, x):
        """Index of the arc containing rotation ``x``, or None if x is not
        certifiably off the jumps (within an isolating interval or on a jump)."""
        x = Fraction(x) % 1 if not isinstance(x, float) else x % 1.0
        for i, r in enumerate(self.jumps):
            if r.lo <= x <= r.hi:
                return None
            if x < r.lo:
                return i
        return 0


@lru_cache(maxsize=256)
def _profile(K: KnotSpec, bits):
    jumps = tuple(jump_candidates(K))
    if not jumps:
        sample = RotationNumber(1, 2)
        return SignatureProfile((), (signature_at(K, sample, bits).signature,), (), (sample,))
    samples = [RotationNumber.from_fraction(simplest_between(Fraction(0), jumps[0].lo))]
    for prev, nxt in zip(jumps, jumps[1:]):
        samples.append(RotationNumber.from_fraction(simplest_between(prev.hi, nxt.lo)))
    values = tuple(signature_at(K, s, bits).signature for s in samples)
    jump_values = tuple(
        signature_at(K, r.rotation, bits).signature if isinstance(r, ExactRotation) else None
        for r in jumps
    )
    return SignatureProfile(jumps, values, jump_values, tuple(samples))


def profile(K: KnotSpec, precision_bits=START_PRECISION) -> SignatureProfile:
    """Certified signature profile of K over the whole circle."""
    return _profile(K, precision_bits)


def _is_alexander_root(K, rotation):
    delta = alexander_polynomial(K).polynomial
    return CyclotomicElement(rotation.denominator, delta.coeffs).is_zero()


def averaged_sigma(K: KnotSpec, alpha, precision_bits=START_PRECISION) -> int:
    """Mean of the one-sided limits of sigma at alpha (equal to sigma off the jumps)."""
    alpha = as_alpha(alpha)
    prof = profile(K, precision_bits)
    if not alpha.is_exact:
        x = alpha.angle
        for r in prof.jumps:
            if float(r.lo) - JUMP_EXCLUSION <= x <= float(r.hi) + JUMP_EXCLUSION:
                raise BadAlpha(f"generic alpha {x} is within {JUMP_EXCLUSION} of a jump")
        for i, r in enumerate(prof.jumps):
            if x < float(r.lo):
                return prof.arc_values[i]
        return prof.arc_values[0]
    rot = alpha.rotation
    if rot.denominator == 1:
        return prof.arc_values[0]
    if not _is_alexander_root(K, rot):
        return signature_at(K, rot, precision_bits).signature
    i = next(
        k for k, r in enumerate(prof.jumps) if isinstance(r, ExactRotation) and r.rotation == rot
    )
    total = prof.left_value(i) + prof.right_value(i)
    if total % 2:
        raise ParityViolation(
            f"{K.name}: one-sided limits {prof.left_value(i)}, {prof.right_value(i)} at {rot} differ in parity"
        )
    return total // 2
