"""Exact arithmetic in cyclotomic fields and certified signs of real elements."""
import threading
from dataclasses import dataclass
from enum import IntEnum
from fractions import Fraction
from functools import lru_cache
from math import gcd

from mpmath.ctx_iv import MPIntervalContext
from mpmath.libmp import mpf_sign

from ..errors import LTError, NotReal
from .polynomial import IntegerPolynomial

__all__ = [
    "RotationNumber",
    "Sign",
    "CyclotomicElement",
    "cyclotomic_polynomial",
    "totient",
    "certified_sign",
]

START_PRECISION = 64
MAX_PRECISION = 1 << 16


def totient(n):
    result, m, p = n, n, 2
    while p * p <= m:
        if m % p == 0:
            while m % p == 0:
                m //= p
            result -= result // p
        p += 1
    if m > 1:
        result -= result // m
    return result


def divisors(n):
    small = [d for d in range(1, int(n**0.5) + 1) if n % d == 0]
    return sorted(set(small + [n // d for d in small]))


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n) -> IntegerPolynomial:
    """The n-th cyclotomic polynomial, by exact division of t^n - 1."""
    if n < 1:
        raise ValueError(f"cyclotomic_polynomial needs n >= 1, got {n}")
    p = IntegerPolynomial.from_roots_of_unity(n)
    for d in divisors(n):
        if d < n:
            p, r = p.divmod_monic(cyclotomic_polynomial(d))
            assert r.is_zero()
    return p


@dataclass(frozen=True, order=True)
class RotationNumber:
    """The point exp(2 pi i numerator/denominator) of the unit circle.

    Always stored reduced with ``0 <= numerator < denominator``; the point
    ``alpha = 1`` is ``RotationNumber(0, 1)``.
    """

    numerator: int
    denominator: int = 1

    def __post_init__(self):
        q, n = int(self.numerator), int(self.denominator)
        if n <= 0:
            raise LTError(f"rotation denominator must be positive, got {n}")
        q %= n
        g = gcd(q, n) or n
        object.__setattr__(self, "numerator", q // g)
        object.__setattr__(self, "denominator", n // g)

    @classmethod
    def from_fraction(cls, x):
        x = Fraction(x)
        return cls(x.numerator, x.denominator)

    @classmethod
    def parse(cls, text):
        """Parse ``"q/n"`` (or an integer, meaning alpha = 1)."""
        return cls.from_fraction(Fraction(text.strip()))

    def as_fraction(self):
        return Fraction(self.numerator, self.denominator)

    def conjugate(self):
        return RotationNumber(-self.numerator, self.denominator)

    def __float__(self):
        return self.numerator / self.denominator

    def __str__(self):
        return f"{self.numerator}/{self.denominator}"


class Sign(IntEnum):
    NEGATIVE = -1
    ZERO = 0
    POSITIVE = 1


def _reduce(coeffs, n):
    """Reduce an integer coefficient list modulo the n-th cyclotomic polynomial."""
    phi = cyclotomic_polynomial(n).coeffs
    d = len(phi) - 1
    out = list(coeffs)
    for i in range(len(out) - 1, d - 1, -1):
        c = out[i]
        if c:
            for j in range(d):
                out[i - d + j] -= c * phi[j]
    out = out[:d]
    out.extend([0] * (d - len(out)))
    return tuple(out)


@dataclass(frozen=True)
class CyclotomicElement:
    """Element of Z[t]/(Phi_n), read as a value at a primitive n-th root of unity."""

    level: int
    coeffs: tuple

    def __post_init__(self):
        object.__setattr__(self, "coeffs", _reduce(tuple(int(c) for c in self.coeffs), self.level))

    @classmethod
    def zero(cls, n):
        return cls(n, ())

    @classmethod
    def const(cls, n, c):
        return cls(n, (c,))

    @classmethod
    def gen_power(cls, n, k):
        """t^k, with k taken mod n."""
        k %= n
        return cls(n, (0,) * k + (1,))

    def _check(self, other):
        if isinstance(other, int):
            return CyclotomicElement.const(self.level, other)
        if other.level != self.level:
            raise ValueError("cyclotomic elements of different levels")
        return other

    def __add__(self, other):
        other = self._check(other)
        return CyclotomicElement(self.level, (a + b for a, b in zip(self.coeffs, other.coeffs)))

    __radd__ = __add__

    def __neg__(self):
        return CyclotomicElement(self.level, (-a for a in self.coeffs))

    def __sub__(self, other):
        return self + (-self._check(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return CyclotomicElement(self.level, (a * other for a in self.coeffs))
        other = self._check(other)
        a, b = self.coeffs, other.coeffs
        out = [0] * max(len(a) + len(b) - 1, 0)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        out[i + j] += x * y
        return CyclotomicElement(self.level, out)

    __rmul__ = __mul__

    def conj(self):
        """Complex conjugate: t -> t^(n-1)."""
        n = self.level
        out = [0] * n
        for k, c in enumerate(self.coeffs):
            out[(-k) % n] += c
        return CyclotomicElement(n, out)

    def is_zero(self):
        return not any(self.coeffs)

    def is_real(self):
        return self.conj() == self

    def content(self):
        g = 0
        for c in self.coeffs:
            g = gcd(g, c)
        return g

    def divide_int(self, m):
        assert all(c % m == 0 for c in self.coeffs)
        return CyclotomicElement(self.level, (c // m for c in self.coeffs))

    def evaluate(self, at):
        """Floating value at exp(2 pi i q/n); for diagnostics and oracles only."""
        import cmath

        q = at.numerator
        return sum(c * cmath.exp(2j * cmath.pi * q * k / self.level)
                   for k, c in enumerate(self.coeffs))

    def __bool__(self):
        return not self.is_zero()


_local = threading.local()


def _iv_context(bits):
    ctx = getattr(_local, "ctx", None)
    if ctx is None:
        ctx = _local.ctx = MPIntervalContext()
    ctx.prec = bits
    return ctx


def certified_sign(x: CyclotomicElement, at: RotationNumber, precision_bits=START_PRECISION) -> Sign:
    """Sign of a real cyclotomic element at exp(2 pi i q/n).

    The zero test is exact; a nonzero element is then evaluated in interval
    arithmetic, doubling the working precision until the enclosure excludes 0.
    """
    n = x.level
    if at.denominator != n:
        raise LTError(f"rotation {at} does not have denominator {n}")
    if not x.is_real():
        raise NotReal(f"element {x.coeffs} at level {n} is not conjugation-invariant")
    if x.is_zero():
        return Sign.ZERO
    q = at.numerator
    bits = max(precision_bits, 53)
    while bits <= MAX_PRECISION:
        ctx = _iv_context(bits)
        total = ctx.mpf(0)
        for k, c in enumerate(x.coeffs):
            if c:
                m = (q * k) % n
                total += c * ctx.cos(2 * m * ctx.pi / n)
        lo, hi = total._mpi_
        if mpf_sign(lo) > 0:
            return Sign.POSITIVE
        if mpf_sign(hi) < 0:
            return Sign.NEGATIVE
        bits *= 2
    raise RuntimeError("certified_sign: precision limit reached for a nonzero element")
