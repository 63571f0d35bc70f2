"""Extensions of homogeneous pairs into the conformal model algebra.

An extension is a linear map alpha from an abstract algebra k (with a
distinguished subalgebra h and complement m) into so(p+1, q+1) that sends h
into the stabilizer subalgebra, induces an isomorphism k/h -> so/p on the
quotients, and is equivariant over h.  The module validates the three
conditions, evaluates the curvature defect [alpha X, alpha Y] - alpha [X, Y],
runs the involution criterion Ad_{exp Y} alpha(k) = Ad_{s_0}-stable, and
performs the trace check that puts the isotropy inside the orthogonal group
for genuinely symmetric pairs.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .flatmodel import MobiusSpace
from .liealg import (
    GradedElement,
    StructureAlgebra,
    ad_s0,
    bracket,
    exp_nilpotent,
    graded_dim,
    graded_from_coords,
    killing_form,
    realize,
)
from .linalg import Matrix, Vector, rank, solve_affine
from .scalars import Scalar


class HomogeneousPair:
    """Algebra k with subalgebra h and a vector-space complement m.

    Only [h, h] <= h is required here; the stricter symmetric closure lives in
    SymmetricPair.  Extensions are defined over this weaker structure (the
    stabilizer of the flat model is not a symmetric complement)."""

    def __init__(self, alg: StructureAlgebra, h_basis, m_basis):
        self.alg = alg
        self.h_basis = [v if isinstance(v, Vector) else Vector(v) for v in h_basis]
        self.m_basis = [v if isinstance(v, Vector) else Vector(v) for v in m_basis]
        all_vecs = self.h_basis + self.m_basis
        if len(all_vecs) != alg.dim:
            raise ValueError("h and m bases must decompose the algebra")
        if rank(Matrix([v.entries for v in all_vecs])) != alg.dim:
            raise ValueError("h and m bases are not linearly independent")
        for i, x in enumerate(self.h_basis):
            for y in self.h_basis[i:]:
                if not self._in_span(self.h_basis, alg.bracket(x, y)):
                    raise ValueError("h is not a subalgebra: [h, h] leaves h")

    def _in_span(self, basis, v: Vector) -> bool:
        if not basis:
            return v.is_zero()
        return not solve_affine(Matrix.from_columns(list(basis)), v).is_empty

    def h_contains(self, v: Vector) -> bool:
        return self._in_span(self.h_basis, v)

    def m_contains(self, v: Vector) -> bool:
        return self._in_span(self.m_basis, v)

    def m_coordinates(self, v: Vector) -> Vector:
        sol = solve_affine(Matrix.from_columns(list(self.m_basis)), v)
        if sol.is_empty:
            raise ValueError("vector is not in span(m)")
        return sol.base


class SymmetricPair(HomogeneousPair):
    """Pair with the full closure [h, m] <= m and [m, m] <= h; h and m are the
    +1 and -1 eigenspaces of the defining involution."""

    def __init__(self, alg: StructureAlgebra, h_basis, m_basis):
        super().__init__(alg, h_basis, m_basis)
        for x in self.h_basis:
            for y in self.m_basis:
                if not self.m_contains(alg.bracket(x, y)):
                    raise ValueError("closure violation: [h, m] leaves m")
        for i, x in enumerate(self.m_basis):
            for y in self.m_basis[i:]:
                if not self.h_contains(alg.bracket(x, y)):
                    raise ValueError("closure violation: [m, m] leaves h")

    def sigma(self, v: Vector) -> Vector:
        """The involution: +1 on h, -1 on m."""
        cols = list(self.h_basis) + list(self.m_basis)
        sol = solve_affine(Matrix.from_columns(cols), v)
        coords = list(sol.base.entries)
        out = Vector.zero(self.alg.dim)
        for c, b in zip(coords[: len(self.h_basis)], self.h_basis):
            if c:
                out = out + b.scale(c)
        for c, b in zip(coords[len(self.h_basis) :], self.m_basis):
            if c:
                out = out - b.scale(c)
        return out


class Extension:
    """Linear map alpha: k -> so(p+1, q+1), one row of graded coordinates per
    basis element of k."""

    def __init__(self, space: MobiusSpace, pair: HomogeneousPair, alpha: Matrix):
        if alpha.shape != (pair.alg.dim, graded_dim(space)):
            raise ValueError(
                f"alpha must be {pair.alg.dim} x {graded_dim(space)}, got {alpha.shape}"
            )
        self.space = space
        self.pair = pair
        self.alpha = alpha

    def apply(self, x: Vector) -> GradedElement:
        if len(x) != self.pair.alg.dim:
            raise ValueError("coordinate vector has wrong length")
        coords = self.alpha.transpose().matvec(x)
        return graded_from_coords(self.space, coords)


@dataclass
class ConditionReport:
    passed: bool
    detail: str
    witnesses: list = field(default_factory=list)


@dataclass
class ExtensionReport:
    stabilizer_condition: ConditionReport
    quotient_condition: ConditionReport
    equivariance_condition: ConditionReport

    @property
    def passed(self) -> bool:
        return (
            self.stabilizer_condition.passed
            and self.quotient_condition.passed
            and self.equivariance_condition.passed
        )


def validate_extension(ext: Extension) -> ExtensionReport:
    """The three defining conditions, checked exactly:
    (1) alpha(h) has zero lower block;
    (2) the lower blocks of alpha(m) have full rank p+q;
    (3) alpha([H, Y]) = [alpha(H), alpha(Y)] for H over h, Y over all of k."""
    space = ext.space
    pair = ext.pair
    n = space.n
    if pair.alg.dim - len(pair.h_basis) != n:
        raise ValueError(
            f"dim k - dim h = {pair.alg.dim - len(pair.h_basis)} does not match p+q = {n}"
        )

    bad_h = []
    for idx, h in enumerate(pair.h_basis):
        if not ext.apply(h).X.is_zero():
            bad_h.append(idx)
    cond1 = ConditionReport(
        passed=not bad_h,
        detail="alpha(h) inside the stabilizer subalgebra",
        witnesses=bad_h,
    )

    x_rows = [ext.apply(m).X.entries for m in pair.m_basis]
    r = rank(Matrix(x_rows)) if x_rows else 0
    cond2 = ConditionReport(
        passed=r == n,
        detail=f"induced map on the quotient has rank {r} (need {n})",
        witnesses=[r],
    )

    bad_pairs = []
    k_basis = [Vector.unit(pair.alg.dim, i) for i in range(pair.alg.dim)]
    for hi, h in enumerate(pair.h_basis):
        ah = ext.apply(h)
        for yi, y in enumerate(k_basis):
            lhs = ext.apply(pair.alg.bracket(h, y))
            rhs = bracket(space, ah, ext.apply(y))
            if not (lhs - rhs).is_zero():
                bad_pairs.append((hi, yi))
    cond3 = ConditionReport(
        passed=not bad_pairs,
        detail="alpha is equivariant over h",
        witnesses=bad_pairs,
    )
    return ExtensionReport(cond1, cond2, cond3)


def curvature(ext: Extension, x: Vector, y: Vector) -> GradedElement:
    """kappa(x, y) = [alpha(x), alpha(y)] - alpha([x, y]) for x, y in span(m)."""
    if not ext.pair.m_contains(x) or not ext.pair.m_contains(y):
        raise ValueError("curvature arguments must lie in span(m)")
    return bracket(ext.space, ext.apply(x), ext.apply(y)) - ext.apply(
        ext.pair.alg.bracket(x, y)
    )


def is_flat(ext: Extension) -> bool:
    """Curvature vanishes on all m-basis pairs iff alpha restricted to the
    pair is a homomorphism in the appropriate sense."""
    for i, x in enumerate(ext.pair.m_basis):
        for y in ext.pair.m_basis[i + 1 :]:
            if not curvature(ext, x, y).is_zero():
                return False
    return True


def symmetry_criterion(ext: Extension, Y: Vector) -> bool:
    """Whether Ad_{exp Y} alpha(k) is stable under conjugation by the origin
    symmetry: rank([V; Ad_{s_0} V]) equals rank(V) for the moved image V."""
    space = ext.space
    g = exp_nilpotent(space, Y)
    g_inv = exp_nilpotent(space, -Y)
    moved = []
    for i in range(ext.pair.alg.dim):
        img = realize(space, ext.apply(Vector.unit(ext.pair.alg.dim, i)))
        moved.append((g @ img @ g_inv))
    rows = [mat.flatten().entries for mat in moved]
    base_rank = rank(Matrix(rows))
    flipped = [ad_s0(space, mat).flatten().entries for mat in moved]
    return rank(Matrix(rows + flipped)) == base_rank


def symmetry_criterion_search(ext: Extension, candidates) -> Vector | None:
    """Linear scan over candidate covectors; returns the first Y passing the
    criterion or None.  A semi-decision aid, not a complete solver."""
    for Y in candidates:
        Y = Y if isinstance(Y, Vector) else Vector(Y)
        if symmetry_criterion(ext, Y):
            return Y
    return None


@dataclass
class MetrizabilityReport:
    passed: bool
    checked_pairs: list
    failures: list


def metrizability_check(pair: SymmetricPair) -> MetrizabilityReport:
    """For every m-basis pair (X, Y): the trace of ad([X, Y]) restricted to m
    vanishes, and agrees with B(X, Y) - B(Y, X) for the Killing form B (zero
    by symmetry).  This is what makes the isotropy act orthogonally."""
    alg = pair.alg
    m_cols = Matrix.from_columns(list(pair.m_basis))
    checked = []
    failures = []
    for i, x in enumerate(pair.m_basis):
        for j in range(i + 1, len(pair.m_basis)):
            y = pair.m_basis[j]
            w = alg.bracket(x, y)
            if not pair.h_contains(w):
                raise ValueError("closure violation: [m, m] leaves h")
            restricted = []
            for b in pair.m_basis:
                sol = solve_affine(m_cols, alg.bracket(w, b))
                if sol.is_empty:
                    raise ValueError("closure violation: [h, m] leaves m")
                restricted.append(sol.base.entries)
            tr = Matrix(restricted).trace()
            killing_delta = killing_form(alg, x, y) - killing_form(alg, y, x)
            checked.append((i, j))
            if tr != Scalar(0) or tr != killing_delta:
                failures.append(((i, j), tr, killing_delta))
    return MetrizabilityReport(passed=not failures, checked_pairs=checked, failures=failures)


def flat_model_extension(space: MobiusSpace) -> Extension:
    """The identity extension of so(p+1, q+1) over its stabilizer subalgebra:
    h spans the (a, A, Z) blocks, m the lower block, alpha the identity in
    graded coordinates."""
    from .liealg import so_basis, structure_constants_from_matrices

    basis = so_basis(space)
    alg = structure_constants_from_matrices([realize(space, b) for b in basis])
    dim = alg.dim
    n = space.n
    m_idx = list(range(1, n + 1))
    h_idx = [0] + list(range(n + 1, dim))
    pair = HomogeneousPair(
        alg,
        [Vector.unit(dim, i) for i in h_idx],
        [Vector.unit(dim, i) for i in m_idx],
    )
    return Extension(space, pair, Matrix.identity(dim))
