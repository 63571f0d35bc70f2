import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from confsym.linalg import (
    AffineSubspace,
    Matrix,
    Vector,
    canonical_span,
    kernel,
    rank,
    solve_affine,
)
from confsym.scalars import Scalar

from conftest import rand_scalar


def test_kernel_of_identity_is_trivial():
    assert kernel(Matrix.identity(3)) == []


def test_kernel_of_zero_matrix_is_everything():
    basis = kernel(Matrix.zero(2, 3))
    assert len(basis) == 3


def test_kernel_of_two_entry_row():
    # single condition z_1 + z_n = 0 in n unknowns: hand row-reduction leaves
    # n-1 free variables
    for n in (4, 5, 6):
        row = [1] + [0] * (n - 2) + [1]
        basis = kernel(Matrix([row]))
        assert len(basis) == n - 1
        for v in basis:
            assert v[0] + v[n - 1] == Scalar(0)


def test_rank_examples():
    assert rank(Matrix.identity(4)) == 4
    u = Vector([1, 2, -1])
    w = Vector([3, 0, 5, 7])
    assert rank(Matrix.outer(u, w)) == 1


def test_solve_affine_hyperplane():
    n = 5
    M = Matrix([[1] + [0] * (n - 2) + [1]])
    sol = solve_affine(M, Vector([-1]))
    assert not sol.is_empty and sol.dim == n - 1
    assert sol.base[0] + sol.base[n - 1] == Scalar(-1)
    for v in sol.points():
        assert M.matvec(v) == Vector([-1])


def test_solve_affine_unique_point():
    sol = solve_affine(Matrix.identity(3), Vector([0, 0, 0]))
    assert sol.dim == 0 and sol.base == Vector.zero(3)


def test_solve_affine_inconsistent():
    assert solve_affine(Matrix([[0]]), Vector([1])).is_empty


def test_rank_nullity(rng):
    for _ in range(25):
        nrows = rng.randint(1, 5)
        ncols = rng.randint(1, 5)
        M = Matrix(
            [[rand_scalar(rng, 4) for _ in range(ncols)] for _ in range(nrows)]
        )
        ker = kernel(M)
        assert rank(M) + len(ker) == ncols
        for v in ker:
            assert M.matvec(v).is_zero()


@given(st.integers(min_value=0, max_value=2**32 - 1))
@settings(max_examples=40, deadline=None)
def test_solution_set_is_exact(seed):
    rng = random.Random(seed)
    nrows = rng.randint(1, 4)
    ncols = rng.randint(1, 4)
    M = Matrix([[rand_scalar(rng, 3) for _ in range(ncols)] for _ in range(nrows)])
    rhs = Vector([rand_scalar(rng, 3) for _ in range(nrows)])
    sol = solve_affine(M, rhs)
    if sol.is_empty:
        return
    for v in sol.points():
        assert M.matvec(v) == rhs


def test_kernel_basis_is_canonical_reduced():
    # each kernel vector carries a 1 at its own free column and 0 at the others
    M = Matrix([[1, 2, 3, 4], [0, 0, 1, 1]])
    ker = kernel(M)
    free_cols = []
    for v in ker:
        units = [i for i, e in enumerate(v) if e == Scalar(1)]
        assert units
        free_cols.append(units[-1])
    assert len(set(free_cols)) == len(ker)
    for v, f in zip(ker, free_cols):
        for w, g in zip(ker, free_cols):
            if f != g:
                assert w[f] == Scalar(0)


def test_matrix_inverse_exact():
    A = Matrix([["1+1*r", "2", "0"], ["0", "3", "1*r"], ["1", "0", "1"]])
    assert A @ A.inverse() == Matrix.identity(3)
    assert A.inverse() @ A == Matrix.identity(3)
    with pytest.raises(ZeroDivisionError):
        Matrix([[1, 2], [2, 4]]).inverse()


def test_affine_subspace_equality_is_geometric():
    # same plane described by different bases
    a = AffineSubspace(3, Vector([1, 0, 0]), [Vector([0, 1, 0]), Vector([0, 0, 1])])
    b = AffineSubspace(
        3, Vector([1, 2, 3]), [Vector([0, 1, 1]), Vector([0, 1, -1])]
    )
    assert a == b
    c = AffineSubspace(3, Vector([0, 0, 0]), [Vector([0, 1, 0]), Vector([0, 0, 1])])
    assert a != c
    assert AffineSubspace.empty(3) == AffineSubspace.empty(3)
    assert AffineSubspace.empty(3) != a


def test_affine_subspace_rejects_dependent_directions():
    with pytest.raises(ValueError):
        AffineSubspace(3, Vector.zero(3), [Vector([1, 1, 0]), Vector([2, 2, 0])])


def test_intersection_of_hyperplanes():
    h1 = solve_affine(Matrix([[1, 0, 1]]), Vector([0]))
    h2 = solve_affine(Matrix([[0, 1, 1]]), Vector([0]))
    line = h1.intersect(h2)
    assert line.dim == 1
    both = Matrix([[1, 0, 1], [0, 1, 1]])
    assert line == solve_affine(both, Vector([0, 0]))


def test_intersection_of_parallel_hyperplanes_is_empty():
    h1 = solve_affine(Matrix([[1, 0, 1]]), Vector([0]))
    h2 = solve_affine(Matrix([[1, 0, 1]]), Vector([-2]))
    assert h1.intersect(h2).is_empty


def test_intersection_with_point():
    h = solve_affine(Matrix([[1, 1, 1]]), Vector([3]))
    p = AffineSubspace.point(Vector([1, 1, 1]))
    assert h.intersect(p) == p
    assert p.intersect(h) == p
    outside = AffineSubspace.point(Vector([1, 1, 0]))
    assert h.intersect(outside).is_empty
    assert outside.intersect(h).is_empty


def test_full_space():
    full = AffineSubspace.full(3)
    assert full.dim == 3
    assert full.contains(Vector(["1*r", "-5", "1/3"]))


def test_canonical_span_removes_dependence():
    vs = [Vector([1, 1, 0]), Vector([2, 2, 0]), Vector([0, 0, 1])]
    basis = canonical_span(vs)
    assert len(basis) == 2
    assert canonical_span(basis) == basis
