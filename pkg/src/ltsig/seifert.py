"""Seifert matrices, knot constructors and the Alexander polynomial."""
from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .errors import NotCoprime, NotUnimodular, OddSize
from .exact.polynomial import IntegerPolynomial

__all__ = [
    "SeifertMatrix",
    "KnotSpec",
    "LaurentNormalForm",
    "bareiss_det",
    "resultant",
    "from_matrix",
    "torus_knot",
    "mirror",
    "connected_sum",
    "alexander_polynomial",
    "branched_cover_h1_order",
]


def bareiss_det(rows):
    """Determinant of a square integer matrix by fraction-free elimination."""
    m = [list(map(int, r)) for r in rows]
    n = len(m)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k] != 0:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = m[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * pivot - m[i][k] * m[k][j]) // prev
        prev = pivot
    return sign * m[n - 1][n - 1]


def resultant(f: IntegerPolynomial, g: IntegerPolynomial) -> int:
    """Res(f, g) as the determinant of the Sylvester matrix."""
    m, n = f.degree, g.degree
    if m < 0 or n < 0:
        return 0
    if m == 0:
        return f.coeffs[0] ** n
    if n == 0:
        return g.coeffs[0] ** m
    fc = list(reversed(f.coeffs))
    gc = list(reversed(g.coeffs))
    size = m + n
    rows = []
    for i in range(n):
        rows.append([0] * i + fc + [0] * (size - m - 1 - i))
    for i in range(m):
        rows.append([0] * i + gc + [0] * (size - n - 1 - i))
    return bareiss_det(rows)


@dataclass(frozen=True)
class SeifertMatrix:
    entries: tuple

    def __post_init__(self):
        rows = tuple(tuple(int(x) for x in r) for r in self.entries)
        if any(len(r) != len(rows) for r in rows):
            raise ValueError("Seifert matrix must be square")
        object.__setattr__(self, "entries", rows)

    @property
    def size(self):
        return len(self.entries)

    @property
    def genus(self):
        return self.size // 2

    def transpose(self):
        return SeifertMatrix(tuple(zip(*self.entries)) if self.entries else ())

    def tolist(self):
        return [list(r) for r in self.entries]

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]


@dataclass(frozen=True)
class KnotSpec:
    name: str
    matrix: SeifertMatrix

    def __post_init__(self):
        if not self.name:
            raise ValueError("knot name must be nonempty")

    @property
    def genus(self):
        return self.matrix.genus


@dataclass(frozen=True)
class LaurentNormalForm:
    """t^shift * polynomial, with polynomial(0) != 0 and polynomial(1) = 1."""

    polynomial: IntegerPolynomial
    shift: int

    def __str__(self):
        return str(self.polynomial)

    def evaluate(self, t):
        return t**self.shift * self.polynomial(t)


def from_matrix(name, entries) -> KnotSpec:
    """Validate an integer matrix as a knot Seifert form and wrap it."""
    rows = [list(r) for r in entries]
    n = len(rows)
    if any(len(r) != n for r in rows):
        raise ValueError(f"{name}: matrix is not square")
    if n % 2:
        raise OddSize(f"{name}: OddSize ({n}x{n})")
    antisym = [[rows[i][j] - rows[j][i] for j in range(n)] for i in range(n)]
    det = bareiss_det(antisym)
    if det != 1:
        raise NotUnimodular(f"{name}: NotUnimodular (det(A - A^T) = {det})")
    return KnotSpec(name, SeifertMatrix(rows))


def _positive_braid_seifert(word):
    """Seifert matrix of the fiber surface of a closed positive braid.

    Basis: one loop per pair of consecutive occurrences of a generator.  A
    loop links itself -1; a loop links the next loop of its own column +1;
    of two interleaved loops in adjacent columns, the one that starts first
    links the other (-1 from the left column, +1 from the right column).
    """
    occ = {}
    for pos, g in enumerate(word):
        occ.setdefault(g, []).append(pos)
    loops = [(g, ps[j], ps[j + 1]) for g in sorted(occ) for ps in [occ[g]] for j in range(len(ps) - 1)]
    n = len(loops)
    A = [[0] * n for _ in range(n)]
    for a, (g, s1, s2) in enumerate(loops):
        A[a][a] = -1
        for b, (h, u1, u2) in enumerate(loops):
            if h == g and u1 == s2:
                A[a][b] = 1
            elif h == g + 1:
                if s1 < u1 < s2 < u2:
                    A[a][b] = -1
                elif u1 < s1 < u2 < s2:
                    A[b][a] = 1
    return A


def torus_knot(p, q) -> KnotSpec:
    """T(p, q) from the braid (s_1 s_2 ... s_{p-1})^q."""
    if p < 2 or q < 2:
        raise ValueError("torus_knot needs p, q >= 2")
    if gcd(p, q) != 1:
        raise NotCoprime(f"gcd({p}, {q}) = {gcd(p, q)}")
    word = [g for _ in range(q) for g in range(1, p)]
    return from_matrix(f"T({p},{q})", _positive_braid_seifert(word))


def mirror(K: KnotSpec) -> KnotSpec:
    A = K.matrix.entries
    n = len(A)
    return KnotSpec(K.name, SeifertMatrix(tuple(tuple(-A[j][i] for j in range(n)) for i in range(n))))


def connected_sum(K1: KnotSpec, K2: KnotSpec) -> KnotSpec:
    A, B = K1.matrix.entries, K2.matrix.entries
    a, b = len(A), len(B)
    rows = [list(r) + [0] * b for r in A] + [[0] * a + list(r) for r in B]
    return KnotSpec(f"{K1.name}#{K2.name}", SeifertMatrix(rows))


def _interpolate(xs, ys):
    """Integer coefficients of the polynomial through (xs, ys), via Newton form."""
    n = len(xs)
    coef = [Fraction(y) for y in ys]
    for j in range(1, n):
        for i in range(n - 1, j - 1, -1):
            coef[i] = (coef[i] - coef[i - 1]) / (xs[i] - xs[i - j])
    poly = [Fraction(0)] * n
    for i in range(n - 1, -1, -1):
        # poly = poly * (t - xs[i]) + coef[i]
        shifted = [Fraction(0)] + poly[:-1]
        poly = [s - xs[i] * c for s, c in zip(shifted, poly)]
        poly[0] += coef[i]
    assert all(c.denominator == 1 for c in poly)
    return IntegerPolynomial(int(c) for c in poly)


def alexander_polynomial(K: KnotSpec) -> LaurentNormalForm:
    """det(A - t A^T), normalized to be symmetric with value 1 at t = 1."""
    A = K.matrix.entries
    n = len(A)
    xs = list(range(n + 1))
    ys = [
        bareiss_det([[A[i][j] - x * A[j][i] for j in range(n)] for i in range(n)])
        for x in xs
    ]
    raw = _interpolate(xs, ys)
    poly, _ = raw.strip_t_powers()
    if poly(1) < 0:
        poly = -poly
    assert poly(1) == 1, "det(A - A^T) = 1 forces Delta(1) = +-1"
    assert poly.coeffs == tuple(reversed(poly.coeffs))
    return LaurentNormalForm(poly, -(poly.degree // 2))


def branched_cover_h1_order(K: KnotSpec, n) -> int:
    """|H_1| of the n-fold cyclic branched cover, 0 when it is infinite."""
    if n < 2:
        raise ValueError("branched cover order must be >= 2")
    delta = alexander_polynomial(K).polynomial
    ones = IntegerPolynomial((1,) * n)
    return abs(resultant(delta, ones))
