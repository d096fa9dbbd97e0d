"""Isolation of the unit-circle roots of a palindromic integer polynomial.

Roots of unity are found exactly by dividing out cyclotomic factors.  What
remains is rewritten in the trace variable ``x = t + 1/t`` and its real
roots in (-2, 2) are isolated with Sturm sequences and rational bisection.
Each such root ``x = 2 cos(2 pi theta)`` gives the conjugate pair of
rotation numbers ``theta`` and ``1 - theta``, which are bracketed by
rational intervals certified with interval cosines.
"""
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from mpmath.ctx_mp import MPContext
from mpmath.libmp import mpf_sign

from ..errors import NotPalindromic
from .cyclotomic import RotationNumber, _iv_context, cyclotomic_polynomial, totient
from .polynomial import (
    IntegerPolynomial,
    as_polynomial,
    count_roots,
    q_eval,
    squarefree_part,
    sturm_sequence,
)

__all__ = [
    "ExactRotation",
    "IsolatedInterval",
    "RootArc",
    "isolate_unit_circle_roots",
    "trace_polynomial",
    "cyclotomic_factors",
    "simplest_between",
]


@dataclass(frozen=True)
class ExactRotation:
    """A root of unity exp(2 pi i q/n)."""

    rotation: RotationNumber

    @property
    def lo(self):
        return self.rotation.as_fraction()

    hi = lo

    def label(self):
        return str(self.rotation)

    def __float__(self):
        return float(self.rotation)


@dataclass(frozen=True)
class IsolatedInterval:
    """A unit-circle root that is not a root of unity.

    Its rotation number lies in the open interval (lo, hi), which contains no
    other unit-circle root of the source polynomial.
    """

    lo: Fraction
    hi: Fraction

    def label(self):
        return f"interval:{self.lo}..{self.hi}"

    def __float__(self):
        return float((self.lo + self.hi) / 2)


RootArc = Union[ExactRotation, IsolatedInterval]


def _palindromic_core(p):
    """Strip t-powers and return (core, sign) with core(t) = sign * t^deg core(1/t)."""
    core, _ = p.strip_t_powers()
    c = core.coeffs
    if c == tuple(reversed(c)):
        return core, 1
    if c == tuple(-x for x in reversed(c)):
        return core, -1
    raise NotPalindromic(f"{core} is not palindromic up to sign and a power of t")


def cyclotomic_factors(p: IntegerPolynomial):
    """Orders n with Phi_n | p, and the cofactor with all of them removed."""
    rest = p
    orders = []
    deg = p.degree
    # phi(n) >= sqrt(n/2), so phi(n) <= deg forces n <= 2 deg^2
    for n in range(1, 2 * deg * deg + 3):
        if totient(n) > rest.degree:
            continue
        phi = cyclotomic_polynomial(n)
        found = False
        while rest.degree >= phi.degree:
            q, r = rest.divmod_monic(phi)
            if not r.is_zero():
                break
            rest = q
            found = True
        if found:
            orders.append(n)
    return orders, rest


def trace_polynomial(p: IntegerPolynomial) -> IntegerPolynomial:
    """g with p(t) = t^m g(t + 1/t) for palindromic p of degree 2m."""
    c = p.coeffs
    if len(c) % 2 == 0 or c != tuple(reversed(c)):
        raise NotPalindromic(f"{p} is not palindromic of even degree")
    m = (len(c) - 1) // 2
    # V_k(x) = t^k + t^-k;  V_0 = 2, V_1 = x, V_k = x V_{k-1} - V_{k-2}
    x = IntegerPolynomial((0, 1))
    g = IntegerPolynomial((c[m],))
    v_prev, v = IntegerPolynomial((2,)), x
    for k in range(1, m + 1):
        g = g + v * c[m + k]
        v_prev, v = v, x * v - v_prev
    return g


def simplest_between(a: Fraction, b: Fraction) -> Fraction:
    """The fraction of least denominator strictly inside (a, b), 0 <= a < b.

    Continued-fraction descent of the Stern-Brocot tree.
    """
    a, b = Fraction(a), Fraction(b)
    if not 0 <= a < b:
        raise ValueError(f"bad interval ({a}, {b})")
    whole = math.floor(a) + 1
    if whole < b:
        return Fraction(whole)
    fl = math.floor(a)
    if a == fl:
        return fl + 1 / Fraction(math.floor(1 / (b - fl)) + 1)
    return fl + 1 / simplest_between(1 / (b - fl), 1 / (a - fl))


def _split_point(g, a, b):
    mid = (a + b) / 2
    k = 1
    s = mid
    while q_eval(g, s) == 0:
        s = mid + (b - a) / (2 ** (k + 2))
        k += 1
    return s


def _refine(g, a, b):
    s = _split_point(g, a, b)
    ga = q_eval(g, a)
    gs = q_eval(g, s)
    if (ga > 0) != (gs > 0):
        return a, s
    return s, b


def _isolate_trace_roots(g):
    seq = sturm_sequence(g)
    lo, hi = Fraction(-2), Fraction(2)
    total = count_roots(seq, lo, hi)
    stack = [(lo, hi, total)]
    out = []
    while stack:
        a, b, k = stack.pop()
        if k == 0:
            continue
        if k == 1 and q_eval(g, b) != 0 and q_eval(g, a) != 0:
            out.append((a, b))
            continue
        s = _split_point(g, a, b)
        left = count_roots(seq, a, s)
        stack.append((a, s, left))
        stack.append((s, b, k - left))
    out.sort()
    return out


def _two_cos(ctx, theta: Fraction):
    return 2 * ctx.cos(2 * ctx.pi * theta.numerator / theta.denominator)


def _acos_rotation(x: Fraction) -> Fraction:
    """Uncertified high-precision estimate of acos(x/2) / (2 pi)."""
    ctx = MPContext()
    ctx.prec = 256
    v = ctx.acos(ctx.mpf(x.numerator) / (2 * x.denominator)) / (2 * ctx.pi)
    return Fraction(ctx.nstr(v, 70))


def _certify_bracket(a, b, margin):
    """Rational (lo, hi) in [0, 1/2] with 2cos(2 pi lo) > b and 2cos(2 pi hi) < a.

    The estimates come from a non-rigorous arccos; only the interval cosine
    checks certify the bracket.
    """
    ctx = _iv_context(256)
    half = Fraction(1, 2)
    if b >= 2:
        lo = Fraction(0)
    else:
        guess = _acos_rotation(b)
        lo = simplest_between(max(guess - 2 * margin, Fraction(0)), max(guess - margin, Fraction(0)) or margin)
        lo_val = _two_cos(ctx, lo) - ctx.mpf(b.numerator) / b.denominator
        if mpf_sign(lo_val._mpi_[0]) <= 0 and lo != 0:
            return None
    if a <= -2:
        hi = half
    else:
        guess = _acos_rotation(a)
        hi = min(simplest_between(guess + margin, guess + 2 * margin), half)
        hi_val = _two_cos(ctx, hi) - ctx.mpf(a.numerator) / a.denominator
        if mpf_sign(hi_val._mpi_[1]) >= 0 and hi != half:
            return None
    return lo, hi


def _separated(points):
    """True if consecutive (lo, hi) pairs are strictly separated."""
    for (_, h1), (l2, _) in zip(points, points[1:]):
        if not h1 < l2:
            return False
    return True


def isolate_unit_circle_roots(p) -> list:
    """All distinct roots of ``p`` on the unit circle, sorted by rotation number."""
    p = as_polynomial(p)
    if p.is_zero():
        raise ValueError("the zero polynomial has no isolated roots")
    core, _ = _palindromic_core(p)
    orders, rest = cyclotomic_factors(core)
    exact = [
        RotationNumber(q, n) for n in orders for q in range(n) if math.gcd(q, n) == 1
    ]
    arcs = [ExactRotation(r) for r in exact]
    if rest.degree > 0:
        rest, sign = _palindromic_core(rest)
        # an anti-palindromic cofactor would vanish at t = 1, already divided out
        assert sign > 0
        g = trace_polynomial(rest)
        g_sf = squarefree_part([Fraction(c) for c in g.coeffs])
        brackets = []
        for a, b in _isolate_trace_roots(g_sf):
            while b - a > Fraction(1, 2**24):
                a, b = _refine(g_sf, a, b)
            brackets.append((a, b))
        fixed = [(r.as_fraction(), r.as_fraction()) for r in exact]
        margin = Fraction(1, 10**9)
        while True:
            upper = []
            ok = True
            for a, b in brackets:
                br = _certify_bracket(a, b, margin)
                if br is None or br[0] <= 0 or br[1] >= Fraction(1, 2):
                    ok = False
                    break
                upper.append(br)
            if ok:
                intervals = upper + [(1 - h, 1 - l) for l, h in upper]
                if _separated(sorted(intervals + fixed)):
                    break
            brackets = [_refine(g_sf, a, b) for a, b in brackets]
            margin = max(margin / 4, Fraction(1, 2**160))
        arcs.extend(IsolatedInterval(lo, hi) for lo, hi in intervals)
    arcs.sort(key=lambda r: r.lo)
    return arcs
