import random

import pytest

from confsym.extension import SymmetricPair
from confsym.flatmodel import MobiusSpace
from confsym.liealg import StructureAlgebra, structure_constants_from_matrices
from confsym.linalg import Matrix, Vector, rank
from confsym.scalars import Scalar


def rand_scalar(rng: random.Random, span: int = 9) -> Scalar:
    """Random element of Q(sqrt 2) with small integer data."""
    return Scalar(rng.randint(-span, span), rng.randint(-span, span), rng.randint(1, 4))


def rand_vector(rng: random.Random, n: int, span: int = 9) -> Vector:
    return Vector(rand_scalar(rng, span) for _ in range(n))


def rand_covector(rng: random.Random, n: int, span: int = 9) -> Vector:
    return rand_vector(rng, n, span)


def rand_so_matrix(space: MobiusSpace, rng: random.Random, span: int = 5) -> Matrix:
    """Random element of so(p, q) as a matrix (A^T J + J A = 0)."""
    n = space.n
    rows = [[Scalar(0)] * n for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            c = rng.randint(-span, span)
            rows[i][j] = Scalar(c * space.signature.j_sign(j))
            rows[j][i] = Scalar(-c * space.signature.j_sign(i))
    return Matrix(rows)


def rand_null_vector(space: MobiusSpace, rng: random.Random) -> Vector:
    """Random null vector with small rational entries (corner solved for)."""
    n = space.n
    while True:
        x0 = Scalar(rng.randint(-3, 3))
        middle = [Scalar(rng.randint(-3, 3)) for _ in range(n)]
        if x0:
            # 2 x0 xlast + sum J x^2 = 0
            s = Scalar(0)
            for i, x in enumerate(middle):
                s = s + Scalar(space.signature.j_sign(i)) * x * x
            xlast = -s / (Scalar(2) * x0)
            return Vector([x0] + middle + [xlast])
        if any(middle):
            # only the corner term remains: any xlast works with sum J x^2 = 0
            s = Scalar(0)
            for i, x in enumerate(middle):
                s = s + Scalar(space.signature.j_sign(i)) * x * x
            if not s:
                return Vector([x0] + middle + [Scalar(rng.randint(-3, 3))])


# -- random symmetric pairs ---------------------------------------------------


def so_k_pair(k: int, split: int):
    """so(k) with the involution fixing the diagonal blocks of sizes
    (split, k - split): h spans rotations within the blocks, m the cross
    rotations."""
    pairs = [(i, j) for i in range(k) for j in range(i + 1, k)]
    mats = []
    for i, j in pairs:
        rows = [[Scalar(0)] * k for _ in range(k)]
        rows[i][j] = Scalar(1)
        rows[j][i] = Scalar(-1)
        mats.append(Matrix(rows))
    alg = structure_constants_from_matrices(mats)
    h_idx = [t for t, (i, j) in enumerate(pairs) if (j < split) or (i >= split)]
    m_idx = [t for t, (i, j) in enumerate(pairs) if i < split <= j]
    return alg, h_idx, m_idx


def sl2_pair():
    """sl(2) with h spanned by the diagonal element, m by the nilpotents."""

    def v(*e):
        return Vector(list(e))

    z = v(0, 0, 0)
    # basis H, E, F: [H,E] = 2E, [H,F] = -2F, [E,F] = H
    table = [
        [z, v(0, 2, 0), v(0, 0, -2)],
        [v(0, -2, 0), z, v(1, 0, 0)],
        [v(0, 0, 2), v(-1, 0, 0), z],
    ]
    return StructureAlgebra(3, table), [0], [1, 2]


def heisenberg_pair():
    """Central extension [X, Y] = Z with h the center."""

    def v(*e):
        return Vector(list(e))

    z = v(0, 0, 0)
    table = [
        [z, v(0, 0, 1), z],
        [v(0, 0, -1), z, z],
        [z, z, z],
    ]
    return StructureAlgebra(3, table), [2], [0, 1]


def _rand_invertible(rng: random.Random, n: int) -> Matrix:
    while True:
        M = Matrix([[Scalar(rng.randint(-2, 2)) for _ in range(n)] for _ in range(n)])
        if rank(M) == n:
            return M


def rand_symmetric_pair(rng: random.Random) -> SymmetricPair:
    """A genuinely symmetric pair from a small family, with the h and m bases
    scrambled by random invertible rational changes."""
    alg, h_idx, m_idx = rng.choice(
        [lambda: so_k_pair(3, 1), lambda: so_k_pair(4, 2), sl2_pair, heisenberg_pair]
    )()
    h_units = [Vector.unit(alg.dim, i) for i in h_idx]
    m_units = [Vector.unit(alg.dim, i) for i in m_idx]
    th = _rand_invertible(rng, len(h_units))
    tm = _rand_invertible(rng, len(m_units))

    def mix(T, units):
        out = []
        for row in T.rows:
            v = Vector.zero(alg.dim)
            for c, u in zip(row, units):
                if c:
                    v = v + u.scale(c)
            out.append(v)
        return out

    return SymmetricPair(alg, mix(th, h_units), mix(tm, m_units))


@pytest.fixture
def rng():
    return random.Random(20260808)


@pytest.fixture
def space21():
    return MobiusSpace(2, 1)


@pytest.fixture
def space22():
    return MobiusSpace(2, 2)


@pytest.fixture
def space30():
    return MobiusSpace(3, 0)
