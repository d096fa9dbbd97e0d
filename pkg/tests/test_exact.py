import cmath
import math
import random
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from ltsig.errors import NotPalindromic, NotReal
from ltsig.exact import (
    CyclotomicElement,
    ExactRotation,
    IntegerPolynomial,
    IsolatedInterval,
    RotationNumber,
    Sign,
    certified_sign,
    cyclotomic_polynomial,
    isolate_unit_circle_roots,
    simplest_between,
    trace_polynomial,
)
from ltsig.exact.cyclotomic import divisors


def numeric_cyclotomic(n):
    """Brute-force oracle: prod (t - zeta) over primitive n-th roots, rounded."""
    roots = [cmath.exp(2j * math.pi * k / n) for k in range(n) if math.gcd(k, n) == 1]
    coeffs = np.poly(roots)[::-1]
    rounded = np.round(coeffs.real).astype(int)
    assert np.allclose(coeffs, rounded, atol=1e-6)
    return tuple(int(c) for c in rounded)


@pytest.mark.parametrize(
    "n, expected",
    [
        (1, (-1, 1)),
        (4, (1, 0, 1)),
        (15, (1, -1, 0, 1, -1, 1, 0, -1, 1)),
    ],
)
def test_cyclotomic_examples(n, expected):
    assert cyclotomic_polynomial(n).coeffs == expected
    assert numeric_cyclotomic(n) == expected


@pytest.mark.parametrize("n", range(1, 61))
def test_cyclotomic_product_is_t_n_minus_1(n):
    prod = IntegerPolynomial((1,))
    for d in divisors(n):
        prod = prod * cyclotomic_polynomial(d)
    assert prod == IntegerPolynomial.from_roots_of_unity(n)


@pytest.mark.parametrize("n", [2, 3, 6, 9, 12, 16, 21, 30])
def test_cyclotomic_matches_numeric_oracle(n):
    assert cyclotomic_polynomial(n).coeffs == numeric_cyclotomic(n)


def test_rotation_number_normalizes():
    assert RotationNumber(12, 15) == RotationNumber(4, 5)
    assert RotationNumber(-3, 15) == RotationNumber(4, 5)
    assert RotationNumber(7, 7) == RotationNumber(0, 1)
    assert str(RotationNumber.parse("2/10")) == "1/5"
    assert RotationNumber(1, 5).conjugate() == RotationNumber(4, 5)


def test_certified_sign_examples():
    z5 = CyclotomicElement.gen_power(5, 1)
    assert certified_sign(CyclotomicElement.zero(7), RotationNumber(3, 7)) == Sign.ZERO
    assert certified_sign(CyclotomicElement.const(5, -3), RotationNumber(1, 5)) == Sign.NEGATIVE
    x = z5 + z5.conj()
    assert 2 * math.cos(2 * math.pi / 5) > 0  # floating oracle
    assert certified_sign(x, RotationNumber(1, 5)) == Sign.POSITIVE
    assert certified_sign(x, RotationNumber(2, 5)) == Sign.NEGATIVE


def test_certified_sign_rejects_non_real():
    z = CyclotomicElement.gen_power(5, 1)
    with pytest.raises(NotReal):
        certified_sign(z, RotationNumber(1, 5))


def test_certified_sign_rejects_wrong_level():
    with pytest.raises(ValueError):
        certified_sign(CyclotomicElement.const(5, 1), RotationNumber(1, 7))


@pytest.mark.parametrize("power, expected", [(7, Sign.NEGATIVE), (8, Sign.POSITIVE)])
def test_certified_sign_needs_more_precision(power, expected):
    # (2cos(2 pi/101) - 2)^k is about -(0.0039)^k, far below 64-bit cancellation noise
    n = 101
    z = CyclotomicElement.gen_power(n, 1)
    x = CyclotomicElement.const(n, 1)
    for _ in range(power):
        x = x * (z + z.conj() - 2)
    assert certified_sign(x, RotationNumber(1, n)) == expected


def _random_real_element(rng, n):
    k = CyclotomicElement.zero(n)
    for _ in range(rng.randint(1, 4)):
        c = rng.randint(-5, 5)
        e = CyclotomicElement.gen_power(n, rng.randrange(n))
        k = k + e * c
    return k + k.conj()


def test_certified_sign_agrees_with_double_precision():
    rng = random.Random(7)
    checked = 0
    for _ in range(1000):
        n = rng.randint(1, 30)
        x = _random_real_element(rng, n)
        q = rng.choice([q for q in range(n) if math.gcd(q, n) == 1])
        at = RotationNumber(q, n)
        val = x.evaluate(at)
        assert abs(val.imag) < 1e-9
        s = certified_sign(x, at)
        if abs(val.real) > 1e-6:
            checked += 1
            assert int(s) == (1 if val.real > 0 else -1)
        elif x.is_zero():
            assert s == Sign.ZERO
    assert checked > 800


def test_field_arithmetic_matches_evaluation():
    rng = random.Random(3)
    for _ in range(200):
        n = rng.randint(2, 24)
        a = CyclotomicElement(n, [rng.randint(-4, 4) for _ in range(n)])
        b = CyclotomicElement(n, [rng.randint(-4, 4) for _ in range(n)])
        q = rng.choice([q for q in range(1, n) if math.gcd(q, n) == 1])
        at = RotationNumber(q, n)
        assert abs((a * b).evaluate(at) - a.evaluate(at) * b.evaluate(at)) < 1e-8
        assert abs((a - b).evaluate(at) - (a.evaluate(at) - b.evaluate(at))) < 1e-9
        assert abs(a.conj().evaluate(at) - a.evaluate(at).conjugate()) < 1e-9


# --- root isolation -----------------------------------------------------------

def _rotations(arcs):
    return [a.rotation for a in arcs]


def test_isolate_trefoil_polynomial():
    arcs = isolate_unit_circle_roots((1, -1, 1))
    assert _rotations(arcs) == [RotationNumber(1, 6), RotationNumber(5, 6)]
    roots = np.roots([1, -1, 1])
    assert sorted(round((np.angle(r) / (2 * np.pi)) % 1, 9) for r in roots) == [
        round(1 / 6, 9), round(5 / 6, 9)
    ]


def test_isolate_primitive_tenth_roots():
    arcs = isolate_unit_circle_roots((1, -1, 1, -1, 1))
    assert _rotations(arcs) == [RotationNumber(q, 10) for q in (1, 3, 7, 9)]


def test_isolate_constant():
    assert isolate_unit_circle_roots((1,)) == []


def test_isolate_non_root_of_unity():
    # 2t^2 - 3t + 2: trace 2x - 3, root x = 3/2, theta = acos(3/4)/(2 pi)
    arcs = isolate_unit_circle_roots((2, -3, 2))
    assert all(isinstance(a, IsolatedInterval) for a in arcs)
    theta = math.acos(0.75) / (2 * math.pi)
    assert arcs[0].lo < theta < arcs[0].hi
    assert arcs[1].lo < 1 - theta < arcs[1].hi


def test_isolate_rejects_non_palindromic():
    with pytest.raises(NotPalindromic):
        isolate_unit_circle_roots((1, 2, 3))


def test_isolate_handles_t_minus_1_and_t_plus_1():
    # (t - 1)(t + 1)(t^2 - t + 1), anti-palindromic overall
    p = IntegerPolynomial((-1, 1)) * IntegerPolynomial((1, 1)) * IntegerPolynomial((1, -1, 1))
    assert _rotations(isolate_unit_circle_roots(p)) == [
        RotationNumber(0, 1), RotationNumber(1, 6), RotationNumber(1, 2), RotationNumber(5, 6)
    ]


def test_isolate_mixed_and_repeated_factors():
    p = IntegerPolynomial((1, -1, 1)) ** 2 * IntegerPolynomial((2, -3, 2)) * IntegerPolynomial((1, 0, 1))
    arcs = isolate_unit_circle_roots(p)
    assert len(arcs) == 6
    assert sum(isinstance(a, ExactRotation) for a in arcs) == 4
    los = [a.lo for a in arcs]
    assert los == sorted(los)


def test_trace_polynomial():
    # t^2 - t + 1 = t (x - 1)
    assert trace_polynomial(IntegerPolynomial((1, -1, 1))).coeffs == (-1, 1)
    p = IntegerPolynomial((1, -3, 3, -3, 1))
    g = trace_polynomial(p)
    for t in (Fraction(2), Fraction(3, 7), Fraction(-5, 2)):
        assert p(t) == t**2 * g(t + 1 / t)


def _random_palindromic(rng, max_degree=12):
    m = rng.randint(0, max_degree // 2)
    half = [rng.randint(-4, 4) for _ in range(m + 1)]
    if half[0] == 0:
        half[0] = 1
    coeffs = half + half[-2::-1]
    return IntegerPolynomial(coeffs)


def _numeric_unit_roots(p):
    roots = np.roots(list(reversed(p.coeffs))) if p.degree > 0 else []
    on = [r for r in roots if abs(abs(r) - 1) < 1e-9]
    # collapse numerically repeated roots
    distinct = []
    for r in on:
        if all(abs(r - s) > 1e-5 for s in distinct):
            distinct.append(r)
    return distinct


def test_isolation_counts_match_numeric_oracle():
    rng = random.Random(11)
    tested = 0
    for _ in range(300):
        p = _random_palindromic(rng)
        roots = np.roots(list(reversed(p.coeffs))) if p.degree > 0 else np.array([])
        # repeated roots make numpy's |root| - 1 test unreliable; skip those
        if len(roots) > 1:
            dists = [abs(a - b) for i, a in enumerate(roots) for b in roots[i + 1:]]
            if min(dists) < 1e-4:
                continue
        arcs = isolate_unit_circle_roots(p)
        numeric = _numeric_unit_roots(p)
        assert len(arcs) == len(numeric), (p, arcs, numeric)
        angles = sorted((np.angle(r) / (2 * np.pi)) % 1 for r in numeric)
        for arc, ang in zip(arcs, angles):
            if isinstance(arc, ExactRotation):
                assert abs(float(arc) - ang) < 1e-7
            else:
                assert arc.lo - 1e-9 < ang < arc.hi + 1e-9
        tested += 1
    assert tested > 200


@settings(max_examples=60, deadline=None)
@given(st.lists(st.integers(-4, 4), min_size=1, max_size=7))
def test_isolated_intervals_are_disjoint_and_ordered(half):
    if half[0] == 0:
        half[0] = 1
    p = IntegerPolynomial(half + half[-2::-1])
    arcs = isolate_unit_circle_roots(p)
    for a, b in zip(arcs, arcs[1:]):
        assert a.hi < b.lo


@pytest.mark.parametrize(
    "a, b, expected",
    [
        (Fraction(0), Fraction(1, 6), Fraction(1, 7)),
        (Fraction(1, 6), Fraction(5, 6), Fraction(1, 2)),
        (Fraction(1, 10), Fraction(3, 10), Fraction(1, 4)),
        (Fraction(1, 3), Fraction(1, 2), Fraction(2, 5)),
        (Fraction(0), Fraction(1), Fraction(1, 2)),
    ],
)
def test_simplest_between(a, b, expected):
    assert simplest_between(a, b) == expected


@settings(max_examples=200, deadline=None)
@given(st.fractions(min_value=0, max_value=1, max_denominator=10**4),
       st.fractions(min_value=0, max_value=1, max_denominator=10**4))
def test_simplest_between_is_minimal(x, y):
    a, b = sorted((x, y))
    if a == b:
        return
    f = simplest_between(a, b)
    assert a < f < b
    for d in range(1, f.denominator):
        q = math.floor(a * d) + 1
        assert not Fraction(q, d) < b
