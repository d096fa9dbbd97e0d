import random

import numpy as np
import pytest

from ltsig.seifert import from_matrix


def random_seifert_matrix(rng, size, bound=3):
    """Random integer A with det(A - A^T) = 1 and entries in [-bound, bound].

    A standard symplectic part plus a symmetric perturbation, conjugated by a
    random signed permutation.
    """
    A = [[0] * size for _ in range(size)]
    for i in range(0, size, 2):
        A[i][i + 1] = 1
    for i in range(size):
        for j in range(i, size):
            hi = bound - A[i][j]
            b = rng.randint(-bound, hi) if j != i + 1 or i % 2 else rng.randint(-bound, bound - 1)
            A[i][j] += b
            if j != i:
                A[j][i] += b
    perm = list(range(size))
    rng.shuffle(perm)
    signs = [rng.choice((-1, 1)) for _ in range(size)]
    return [[signs[i] * signs[j] * A[perm[i]][perm[j]] for j in range(size)] for i in range(size)]


def random_knot(rng, max_size=8, bound=3, name="random"):
    size = rng.choice([s for s in (2, 4, 6, 8) if s <= max_size])
    return from_matrix(name, random_seifert_matrix(rng, size, bound))


def float_hermitian(A, x):
    A = np.array(A, dtype=float).reshape(len(A), len(A))
    a = np.exp(2j * np.pi * float(x))
    return (1 - a) * A + (1 - np.conj(a)) * A.T


def eigen_signature(A, x, threshold=1e-9):
    """Independent oracle: eigenvalue sign count of H(alpha) in double precision."""
    H = float_hermitian(A, x)
    if H.size == 0:
        return 0, 0, float("inf")
    ev = np.linalg.eigvalsh(H)
    norm = np.linalg.norm(H, 2)
    tol = threshold * norm
    pos, neg = int((ev > tol).sum()), int((ev < -tol).sum())
    gap = np.min(np.abs(ev)) / norm if norm else 0.0
    return pos - neg, len(ev) - pos - neg, gap


def litherland_signature(p, q, x):
    """Torus-knot signature at a generic rotation x by counting lattice sums i/p + j/q against (x, x + 1)."""
    sums = [i / p + j / q for i in range(1, p) for j in range(1, q)]
    inside = sum(1 for s in sums if x < s < x + 1)
    return (len(sums) - inside) - inside


@pytest.fixture
def rng():
    return random.Random(20261018)
