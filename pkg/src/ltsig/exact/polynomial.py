"""Dense univariate polynomials with integer coefficients.

Coefficients are stored lowest degree first.  Rational-coefficient helpers
used by the Sturm machinery operate on plain lists of ``Fraction``.
"""
from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Sequence


def _strip(coeffs):
    coeffs = list(coeffs)
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return coeffs


@dataclass(frozen=True)
class IntegerPolynomial:
    coeffs: tuple

    def __post_init__(self):
        stripped = _strip(int(c) for c in self.coeffs)
        object.__setattr__(self, "coeffs", tuple(stripped))

    @classmethod
    def monomial(cls, degree, coeff=1):
        return cls((0,) * degree + (coeff,))

    @classmethod
    def from_roots_of_unity(cls, n):
        """t^n - 1."""
        return cls((-1,) + (0,) * (n - 1) + (1,))

    @property
    def degree(self):
        return len(self.coeffs) - 1  # -1 for the zero polynomial

    def is_zero(self):
        return not self.coeffs

    @property
    def leading(self):
        return self.coeffs[-1] if self.coeffs else 0

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __add__(self, other):
        a, b = self.coeffs, other.coeffs
        n = max(len(a), len(b))
        return IntegerPolynomial(
            (a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(n)
        )

    def __neg__(self):
        return IntegerPolynomial(-c for c in self.coeffs)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return IntegerPolynomial(c * other for c in self.coeffs)
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return IntegerPolynomial(())
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return IntegerPolynomial(out)

    __rmul__ = __mul__

    def __pow__(self, k):
        out = IntegerPolynomial((1,))
        for _ in range(k):
            out = out * self
        return out

    def divmod_monic(self, divisor):
        """Quotient and remainder by a monic divisor, exactly over Z."""
        if divisor.leading != 1:
            raise ValueError("divisor must be monic")
        rem = list(self.coeffs)
        d = divisor.degree
        if len(rem) - 1 < d:
            return IntegerPolynomial(()), self
        quot = [0] * (len(rem) - d)
        dc = divisor.coeffs
        for i in range(len(rem) - 1, d - 1, -1):
            c = rem[i]
            if c:
                quot[i - d] = c
                for j in range(d + 1):
                    rem[i - d + j] -= c * dc[j]
        return IntegerPolynomial(quot), IntegerPolynomial(rem[:d])

    def exact_div(self, divisor):
        """Division that must leave no remainder (divisor need not be monic)."""
        q, r = poly_divmod_q(list(map(Fraction, self.coeffs)),
                             list(map(Fraction, divisor.coeffs)))
        if r or any(c.denominator != 1 for c in q):
            raise ArithmeticError("inexact polynomial division")
        return IntegerPolynomial(int(c) for c in q)

    def strip_t_powers(self):
        """Remove the factor t^k; returns (polynomial, k)."""
        k = 0
        while k < len(self.coeffs) and self.coeffs[k] == 0:
            k += 1
        return IntegerPolynomial(self.coeffs[k:]), k

    def reversed(self):
        return IntegerPolynomial(reversed(self.coeffs))

    def derivative(self):
        return IntegerPolynomial(i * c for i, c in enumerate(self.coeffs) if i)

    def content(self):
        g = 0
        for c in self.coeffs:
            g = gcd(g, c)
        return g

    def __repr__(self):
        return f"IntegerPolynomial({list(self.coeffs)})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        terms = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            mag = abs(c)
            if i == 0:
                body = str(mag)
            else:
                mono = "t" if i == 1 else f"t^{i}"
                body = mono if mag == 1 else f"{mag}*{mono}"
            sign = "-" if c < 0 else "+"
            terms.append((sign, body))
        first_sign, first = terms[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in terms[1:]:
            out += f" {sign} {body}"
        return out


def as_polynomial(p) -> IntegerPolynomial:
    if isinstance(p, IntegerPolynomial):
        return p
    return IntegerPolynomial(tuple(p))


# --- rational coefficient lists -------------------------------------------

def q_strip(p):
    p = list(p)
    while p and p[-1] == 0:
        p.pop()
    return p


def poly_divmod_q(a: Sequence[Fraction], b: Sequence[Fraction]):
    a, b = q_strip(a), q_strip(b)
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    rem = list(a)
    db = len(b) - 1
    if len(rem) - 1 < db:
        return [], rem
    quot = [Fraction(0)] * (len(rem) - db)
    lead = b[-1]
    for i in range(len(rem) - 1, db - 1, -1):
        c = rem[i]
        if c:
            c = Fraction(c) / lead
            quot[i - db] = c
            for j in range(db + 1):
                rem[i - db + j] -= c * b[j]
    return q_strip(quot), q_strip(rem[:db])


def q_eval(p, x):
    acc = Fraction(0)
    for c in reversed(p):
        acc = acc * x + c
    return acc


def q_derivative(p):
    return q_strip(i * c for i, c in enumerate(p) if i)


def q_gcd(a, b):
    """Monic gcd over Q."""
    a, b = q_strip(a), q_strip(b)
    while b:
        _, r = poly_divmod_q(a, b)
        a, b = b, r
    if not a:
        return []
    lead = a[-1]
    return [Fraction(c) / lead for c in a]


def squarefree_part(p):
    p = q_strip(map(Fraction, p))
    g = q_gcd(p, q_derivative(p))
    if len(g) <= 1:
        return p
    q, r = poly_divmod_q(p, g)
    assert not r
    return q


def sturm_sequence(p):
    """Sturm sequence of a squarefree rational polynomial."""
    seq = [q_strip(p), q_derivative(p)]
    while seq[-1]:
        _, r = poly_divmod_q(seq[-2], seq[-1])
        seq.append([-c for c in r])
    return seq[:-1]


def sign_changes(seq, x):
    last = 0
    count = 0
    for p in seq:
        v = q_eval(p, x)
        if v == 0:
            continue
        s = 1 if v > 0 else -1
        if last and s != last:
            count += 1
        last = s
    return count


def count_roots(seq, a, b):
    """Number of distinct real roots in the half-open interval (a, b]."""
    return sign_changes(seq, a) - sign_changes(seq, b)
