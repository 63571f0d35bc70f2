"""Algebraic Weyl tensors on R^n, their annihilators and first prolongation.

A Weyl-type tensor is a fully lowered rank-4 tensor with the curvature
symmetries (antisymmetry in both pairs, pair interchange, first Bianchi) and
vanishing J-trace.  The space of all of them is computed as one exact kernel
of the flattened constraint system over all n^4 components; co(p, q) acts on
a tensor viewed as a (1,3)-tensor (one index raised with J), so the pure
scaling a acts as -2a.  The first prolongation collects the covectors Y whose
induced endomorphisms annihilate the tensor for every direction xi.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from functools import lru_cache

from .flatmodel import MobiusSpace
from .liealg import CoElement, upsilon_action
from .linalg import Matrix, Vector, kernel, kernel_sparse
from .scalars import Scalar


class WeylTensor:
    """Components W[i][j][k][l] stored flat (row-major, 0-based)."""

    __slots__ = ("p", "q", "d", "components")

    def __init__(self, p: int, q: int, components, d: int = 2, validate: bool = True):
        n = p + q
        components = tuple(components)
        if len(components) != n**4:
            raise ValueError(f"expected {n ** 4} components, got {len(components)}")
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "q", q)
        object.__setattr__(self, "d", d)
        object.__setattr__(self, "components", components)
        if validate:
            self.validate()

    def __setattr__(self, name, value):
        raise AttributeError("WeylTensor is immutable")

    @property
    def n(self) -> int:
        return self.p + self.q

    def _sign(self, i: int) -> int:
        return 1 if i < self.p else -1

    def __getitem__(self, ijkl) -> Scalar:
        i, j, k, l = ijkl
        n = self.n
        return self.components[((i * n + j) * n + k) * n + l]

    def __eq__(self, other):
        return (
            isinstance(other, WeylTensor)
            and (self.p, self.q) == (other.p, other.q)
            and self.components == other.components
        )

    def __hash__(self):
        return hash((self.p, self.q, self.components))

    def is_zero(self) -> bool:
        return not any(self.components)

    def validate(self):
        """Exact check of all four symmetry families; raises on violation."""
        n = self.n
        w = self.__getitem__
        for i in range(n):
            for j in range(n):
                for k in range(n):
                    for l in range(n):
                        if w((i, j, k, l)) != -w((j, i, k, l)):
                            raise ValueError(f"antisymmetry (12) fails at {(i, j, k, l)}")
                        if w((i, j, k, l)) != -w((i, j, l, k)):
                            raise ValueError(f"antisymmetry (34) fails at {(i, j, k, l)}")
                        if w((i, j, k, l)) != w((k, l, i, j)):
                            raise ValueError(f"pair symmetry fails at {(i, j, k, l)}")
        for i in range(n):
            for j in range(n):
                for k in range(n):
                    for l in range(n):
                        total = w((i, j, k, l)) + w((i, k, l, j)) + w((i, l, j, k))
                        if total:
                            raise ValueError(f"first Bianchi fails at {(i, j, k, l)}")
        for j in range(n):
            for l in range(n):
                tr = Scalar(0)
                for i in range(n):
                    term = w((i, j, i, l))
                    if term:
                        tr = tr + Scalar(self._sign(i)) * term
                if tr:
                    raise ValueError(f"trace-free condition fails at (j, l) = {(j, l)}")

    def scale(self, c) -> WeylTensor:
        c = c if isinstance(c, Scalar) else Scalar(c)
        return WeylTensor(
            self.p, self.q, (c * x for x in self.components), self.d, validate=False
        )

    def __add__(self, other: WeylTensor) -> WeylTensor:
        if (self.p, self.q) != (other.p, other.q):
            raise ValueError("signature mismatch")
        return WeylTensor(
            self.p,
            self.q,
            (x + y for x, y in zip(self.components, other.components)),
            self.d,
            validate=False,
        )


@dataclass(frozen=True)
class WeylBasis:
    """Ordered canonical basis of the full space of Weyl-type tensors."""

    p: int
    q: int
    elements: tuple[WeylTensor, ...]

    @property
    def dimension(self) -> int:
        return len(self.elements)


def _flat(n: int, i: int, j: int, k: int, l: int) -> int:
    return ((i * n + j) * n + k) * n + l


def _constraint_rows(p: int, q: int):
    """Sparse integer rows of the flattened constraint system, one family at a
    time: antisymmetries, pair interchange, first Bianchi, J-trace."""
    n = p + q
    sign = lambda i: 1 if i < p else -1
    rows = []
    for i in range(n):
        for j in range(i, n):
            for k in range(n):
                for l in range(n):
                    if i == j:
                        rows.append(([_flat(n, i, i, k, l)], [1, 0]))
                    else:
                        rows.append(
                            (
                                [_flat(n, i, j, k, l), _flat(n, j, i, k, l)],
                                [1, 0, 1, 0],
                            )
                        )
    for k in range(n):
        for l in range(k, n):
            for i in range(n):
                for j in range(n):
                    if k == l:
                        rows.append(([_flat(n, i, j, k, k)], [1, 0]))
                    else:
                        rows.append(
                            (
                                [_flat(n, i, j, k, l), _flat(n, i, j, l, k)],
                                [1, 0, 1, 0],
                            )
                        )
    for a in range(n * n):
        for b in range(a + 1, n * n):
            i, j = divmod(a, n)
            k, l = divmod(b, n)
            rows.append(
                (
                    [_flat(n, i, j, k, l), _flat(n, k, l, i, j)],
                    [1, 0, -1, 0],
                )
            )
    for i in range(n):
        for j in range(n):
            for k in range(j + 1, n):
                for l in range(k + 1, n):
                    rows.append(
                        (
                            [
                                _flat(n, i, j, k, l),
                                _flat(n, i, k, l, j),
                                _flat(n, i, l, j, k),
                            ],
                            [1, 0, 1, 0, 1, 0],
                        )
                    )
    for j in range(n):
        for l in range(n):
            cols = []
            vals = []
            for i in range(n):
                cols.append(_flat(n, i, j, i, l))
                vals.append(sign(i))
                vals.append(0)
            rows.append((cols, vals))
    return rows


@lru_cache(maxsize=None)
def _basis_cached(p: int, q: int, d: int) -> tuple[WeylTensor, ...]:
    n = p + q
    vectors = kernel_sparse(_constraint_rows(p, q), n**4, d)
    return tuple(
        WeylTensor(p, q, v.entries, d, validate=True) for v in vectors
    )


def weyl_space_basis(p: int, q: int, d: int = 2) -> WeylBasis:
    """Canonical basis of the solution space of all four constraint families;
    dimension 0 in total dimension 3."""
    if p + q < 3:
        raise ValueError("need p + q >= 3")
    return WeylBasis(p, q, _basis_cached(p, q, d))


def co_action(c: CoElement, W: WeylTensor) -> WeylTensor:
    """Natural action of co(p, q) on W as a (1,3)-tensor, re-lowered:
    (F.W)^i_jkl = F^i_m W^m_jkl - W^i_mkl F^m_j - W^i_jml F^m_k - W^i_jkm F^m_l
    for F = a id + A.  Pure scaling acts as -2a W in this convention."""
    n = W.n
    if c.A.shape != (n, n):
        raise ValueError("endomorphism size does not match the tensor")
    F = c.endomorphism()
    nz = [
        (r, m, F[r, m])
        for r in range(n)
        for m in range(n)
        if F[r, m]
    ]
    n2 = n * n
    n3 = n2 * n
    raised = list(W.components)
    for m in range(n):
        if W._sign(m) < 0:
            base = m * n3
            for t in range(n3):
                v = raised[base + t]
                if v:
                    raised[base + t] = -v
    out = [Scalar(0)] * (n * n3)
    for r, m, f in nz:
        dst = r * n3
        src = m * n3
        for t in range(n3):
            v = raised[src + t]
            if v:
                out[dst + t] = out[dst + t] + f * v
    for m, j, f in nz:
        for i in range(n):
            src = (i * n + m) * n2
            dst = (i * n + j) * n2
            for t in range(n2):
                v = raised[src + t]
                if v:
                    out[dst + t] = out[dst + t] - v * f
    for m, k, f in nz:
        for a in range(n2):
            src = (a * n + m) * n
            dst = (a * n + k) * n
            for t in range(n):
                v = raised[src + t]
                if v:
                    out[dst + t] = out[dst + t] - v * f
    for m, l, f in nz:
        for a in range(n3):
            v = raised[a * n + m]
            if v:
                out[a * n + l] = out[a * n + l] - v * f
    for i in range(n):
        if W._sign(i) < 0:
            base = i * n3
            for t in range(n3):
                v = out[base + t]
                if v:
                    out[base + t] = -v
    return WeylTensor(W.p, W.q, out, W.d, validate=False)


def co_basis(space: MobiusSpace) -> list[CoElement]:
    """Basis of co(p, q): the pure scaling followed by (E_ij - E_ji) J."""
    n = space.n
    out = [CoElement(Scalar(1), Matrix.zero(n, n))]
    for i in range(n):
        for j in range(i + 1, n):
            rows = [[Scalar(0)] * n for _ in range(n)]
            rows[i][j] = Scalar(space.signature.j_sign(j))
            rows[j][i] = -Scalar(space.signature.j_sign(i))
            out.append(CoElement(Scalar(0), Matrix(rows)))
    return out


def annihilator(W: WeylTensor) -> list[CoElement]:
    """Exact basis of {c in co(p, q) : co_action(c, W) = 0}."""
    space = MobiusSpace(W.p, W.q, W.d)
    basis = co_basis(space)
    columns = [Vector(co_action(c, W).components) for c in basis]
    coeff_vectors = kernel(Matrix.from_columns(columns))
    out = []
    for v in coeff_vectors:
        elt = CoElement(Scalar(0), Matrix.zero(W.n, W.n))
        for coef, b in zip(v, basis):
            if coef:
                elt = elt + b.scale(coef)
        out.append(elt)
    return out


def prolongation(W: WeylTensor) -> list[Vector]:
    """Exact basis of {Y : co_action(upsilon_action(Y, xi_i), W) = 0 for every
    basis direction xi_i}, computed as one stacked kernel over the Y basis."""
    space = MobiusSpace(W.p, W.q, W.d)
    n = W.n
    columns = []
    for j in range(n):
        Y = Vector.unit(n, j)
        stacked = []
        for i in range(n):
            xi = Vector.unit(n, i)
            stacked.extend(co_action(upsilon_action(space, Y, xi), W).components)
        columns.append(Vector(stacked))
    return kernel(Matrix.from_columns(columns))


def random_weyl(p: int, q: int, seed: int, d: int = 2) -> WeylTensor:
    """Deterministic nonzero random combination of the basis with small
    integer coefficients in [-9, 9]; raises when the space is trivial."""
    basis = weyl_space_basis(p, q, d)
    if basis.dimension == 0:
        raise ValueError(f"the Weyl space is trivial for signature ({p}, {q})")
    rng = random.Random(seed)
    while True:
        coeffs = [rng.randint(-9, 9) for _ in range(basis.dimension)]
        if any(coeffs):
            break
    n = p + q
    out = [Scalar(0)] * n**4
    for coef, elt in zip(coeffs, basis.elements):
        if not coef:
            continue
        c = Scalar(coef)
        for t, v in enumerate(elt.components):
            if v:
                out[t] = out[t] + c * v
    tensor = WeylTensor(p, q, out, d, validate=False)
    if tensor.is_zero():
        # Dependent coefficients cannot cancel a basis, but guard anyway.
        return random_weyl(p, q, seed + 1, d)
    return tensor
