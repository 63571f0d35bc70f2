"""Small dense exact linear algebra over Q(sqrt(d)).

Vectors and matrices are immutable dense containers of Scalar entries; the
heavy lifting (kernels, ranks, affine solution sets) goes through the sparse
row-echelon engine in confsym._core.  Kernel and solution bases come out in
the canonical reduced form determined by the unique RREF, so equal subspaces
produce identical bases.
"""

from __future__ import annotations

from typing import Iterable, Sequence

from . import _core
from .scalars import Scalar, as_scalar


class Vector:
    """Dense vector of Scalars; also used for covectors (rows of length p+q)."""

    __slots__ = ("entries",)

    def __init__(self, entries: Iterable):
        object.__setattr__(self, "entries", tuple(as_scalar(e) for e in entries))

    def __setattr__(self, name, value):
        raise AttributeError("Vector is immutable")

    def __len__(self):
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def __getitem__(self, i) -> Scalar:
        return self.entries[i]

    def __eq__(self, other):
        return isinstance(other, Vector) and self.entries == other.entries

    def __hash__(self):
        return hash(self.entries)

    def __add__(self, other: Vector) -> Vector:
        _same_len(self, other)
        return Vector(x + y for x, y in zip(self.entries, other.entries))

    def __sub__(self, other: Vector) -> Vector:
        _same_len(self, other)
        return Vector(x - y for x, y in zip(self.entries, other.entries))

    def __neg__(self) -> Vector:
        return Vector(-x for x in self.entries)

    def scale(self, c) -> Vector:
        c = as_scalar(c)
        return Vector(c * x for x in self.entries)

    def dot(self, other: Vector) -> Scalar:
        _same_len(self, other)
        out = Scalar(0)
        for x, y in zip(self.entries, other.entries):
            if x and y:
                out = out + x * y
        return out

    def is_zero(self) -> bool:
        return not any(self.entries)

    def __str__(self):
        return "(" + ", ".join(str(e) for e in self.entries) + ")"

    __repr__ = __str__

    @classmethod
    def zero(cls, n: int) -> Vector:
        return cls([0] * n)

    @classmethod
    def unit(cls, n: int, i: int) -> Vector:
        return cls([1 if j == i else 0 for j in range(n)])


Covector = Vector


class Matrix:
    """Dense matrix of Scalars with fixed shape."""

    __slots__ = ("rows",)

    def __init__(self, rows: Iterable[Iterable]):
        rows = tuple(tuple(as_scalar(e) for e in row) for row in rows)
        if rows and any(len(r) != len(rows[0]) for r in rows):
            raise ValueError("ragged matrix")
        object.__setattr__(self, "rows", rows)

    def __setattr__(self, name, value):
        raise AttributeError("Matrix is immutable")

    @property
    def nrows(self) -> int:
        return len(self.rows)

    @property
    def ncols(self) -> int:
        return len(self.rows[0]) if self.rows else 0

    @property
    def shape(self) -> tuple[int, int]:
        return (self.nrows, self.ncols)

    def __getitem__(self, ij) -> Scalar:
        i, j = ij
        return self.rows[i][j]

    def __eq__(self, other):
        return isinstance(other, Matrix) and self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def row(self, i: int) -> Vector:
        return Vector(self.rows[i])

    def col(self, j: int) -> Vector:
        return Vector(r[j] for r in self.rows)

    def __add__(self, other: Matrix) -> Matrix:
        if self.shape != other.shape:
            raise ValueError(f"shape mismatch {self.shape} vs {other.shape}")
        return Matrix(
            tuple(x + y for x, y in zip(r, s)) for r, s in zip(self.rows, other.rows)
        )

    def __sub__(self, other: Matrix) -> Matrix:
        if self.shape != other.shape:
            raise ValueError(f"shape mismatch {self.shape} vs {other.shape}")
        return Matrix(
            tuple(x - y for x, y in zip(r, s)) for r, s in zip(self.rows, other.rows)
        )

    def __neg__(self) -> Matrix:
        return Matrix(tuple(-x for x in r) for r in self.rows)

    def scale(self, c) -> Matrix:
        c = as_scalar(c)
        return Matrix(tuple(c * x for x in r) for r in self.rows)

    def __matmul__(self, other: Matrix) -> Matrix:
        if self.ncols != other.nrows:
            raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
        cols = other.ncols
        out = []
        for r in self.rows:
            orow = [Scalar(0)] * cols
            for k, x in enumerate(r):
                if not x:
                    continue
                srow = other.rows[k]
                for j in range(cols):
                    y = srow[j]
                    if y:
                        orow[j] = orow[j] + x * y
            out.append(orow)
        return Matrix(out)

    def matvec(self, v: Vector) -> Vector:
        if self.ncols != len(v):
            raise ValueError(f"shape mismatch {self.shape} * {len(v)}")
        out = []
        for r in self.rows:
            s = Scalar(0)
            for x, y in zip(r, v.entries):
                if x and y:
                    s = s + x * y
            out.append(s)
        return Vector(out)

    def transpose(self) -> Matrix:
        return Matrix(zip(*self.rows)) if self.rows else Matrix(())

    def trace(self) -> Scalar:
        out = Scalar(0)
        for i in range(min(self.nrows, self.ncols)):
            out = out + self.rows[i][i]
        return out

    def is_zero(self) -> bool:
        return all(not e for r in self.rows for e in r)

    def flatten(self) -> Vector:
        return Vector(e for r in self.rows for e in r)

    def __str__(self):
        return "[" + "; ".join(", ".join(str(e) for e in r) for r in self.rows) + "]"

    __repr__ = __str__

    @classmethod
    def identity(cls, n: int) -> Matrix:
        return cls(
            tuple(Scalar(1) if i == j else Scalar(0) for j in range(n))
            for i in range(n)
        )

    @classmethod
    def zero(cls, nrows: int, ncols: int) -> Matrix:
        return cls(tuple(Scalar(0) for _ in range(ncols)) for _ in range(nrows))

    @classmethod
    def from_columns(cls, cols: Sequence[Vector]) -> Matrix:
        return cls(zip(*[c.entries for c in cols])) if cols else cls(())

    @classmethod
    def outer(cls, u: Vector, v: Vector) -> Matrix:
        return cls(tuple(x * y for y in v.entries) for x in u.entries)

    def inverse(self) -> Matrix:
        """Exact inverse via RREF of the augmented system; raises on singular."""
        n = self.nrows
        if n != self.ncols:
            raise ValueError("inverse of a non-square matrix")
        rows = []
        for i, r in enumerate(self.rows):
            aug = list(r) + [Scalar(1) if j == i else Scalar(0) for j in range(n)]
            rows.append(aug)
        pivots, reduced = _rref_scalar_rows(rows)
        if pivots != list(range(n)):
            raise ZeroDivisionError("matrix is singular")
        inv = [[Scalar(0)] * n for _ in range(n)]
        for i in range(n):
            for c, s in reduced[i].items():
                if c >= n:
                    inv[i][c - n] = s
        return Matrix(inv)


def _same_len(u: Vector, v: Vector):
    if len(u) != len(v):
        raise ValueError(f"length mismatch {len(u)} vs {len(v)}")


# -- bridges to the sparse exact engine -------------------------------------


def sparse_rows_from_scalars(rows: Iterable[Sequence[Scalar]]):
    """Clear denominators row by row: Scalar rows -> Z[sqrt d] sparse rows."""
    out = []
    for row in rows:
        denom = 1
        for e in row:
            if e:
                denom = denom * e.q // _int_gcd(denom, e.q)
        cols = []
        vals = []
        for j, e in enumerate(row):
            if e:
                f = denom // e.q
                cols.append(j)
                vals.append(e.a * f)
                vals.append(e.b * f)
        if cols:
            out.append((cols, vals))
    return out


def _int_gcd(x: int, y: int) -> int:
    from math import gcd

    return gcd(x, y)


def _infer_d(entries: Iterable[Scalar], default: int = 2) -> int:
    for e in entries:
        if e.b != 0:
            return e.d
    return default


def _rref_scalar_rows(rows, d=None):
    """RREF of dense Scalar rows; returns (pivot cols, list of {col: Scalar})."""
    if d is None:
        d = _infer_d(e for row in rows for e in row)
    pivots, reduced = _core.rref_sparse(sparse_rows_from_scalars(rows), d)
    dict_rows = []
    for cols, triples in reduced:
        entry = {}
        for k, c in enumerate(cols):
            entry[c] = Scalar(triples[3 * k], triples[3 * k + 1], triples[3 * k + 2], d)
        dict_rows.append(entry)
    return pivots, dict_rows


def kernel_sparse(rows, ncols: int, d: int) -> list[Vector]:
    """Canonical kernel basis of a sparse Z[sqrt d] system (one vector per
    free column, unit at its free column, zero at the other free columns)."""
    pivots, reduced = _core.rref_sparse(rows, d)
    pivot_set = set(pivots)
    basis = []
    for f in range(ncols):
        if f in pivot_set:
            continue
        entries = [Scalar(0)] * ncols
        entries[f] = Scalar(1)
        for (cols, triples), pc in zip(reduced, pivots):
            for k, c in enumerate(cols):
                if c == f:
                    entries[pc] = -Scalar(
                        triples[3 * k], triples[3 * k + 1], triples[3 * k + 2], d
                    )
                    break
        basis.append(Vector(entries))
    return basis


def rank(M: Matrix) -> int:
    """Exact rank."""
    d = _infer_d(e for r in M.rows for e in r)
    pivots, _ = _core.rref_sparse(sparse_rows_from_scalars(M.rows), d)
    return len(pivots)


def kernel(M: Matrix) -> list[Vector]:
    """Exact basis of the null space {v : M v = 0}; empty when M is injective."""
    d = _infer_d(e for r in M.rows for e in r)
    return kernel_sparse(sparse_rows_from_scalars(M.rows), M.ncols, d)


class AffineSubspace:
    """Solution set base + span(directions) in R^ambient, or EMPTY.

    Directions are kept linearly independent and in the canonical reduced form
    produced by the elimination engine, so equal subspaces built along
    different routes still compare equal structurally; `__eq__` nevertheless
    tests geometric equality (mutual containment).
    """

    __slots__ = ("ambient", "base", "directions")

    def __init__(self, ambient: int, base: Vector | None, directions: Sequence[Vector] = ()):
        directions = tuple(directions)
        if base is None and directions:
            raise ValueError("empty subspace cannot carry directions")
        if base is not None and len(base) != ambient:
            raise ValueError("base point has wrong length")
        if any(len(v) != ambient for v in directions):
            raise ValueError("direction has wrong length")
        if directions:
            if rank(Matrix([v.entries for v in directions])) != len(directions):
                raise ValueError("directions are linearly dependent")
        object.__setattr__(self, "ambient", ambient)
        object.__setattr__(self, "base", base)
        object.__setattr__(self, "directions", directions)

    def __setattr__(self, name, value):
        raise AttributeError("AffineSubspace is immutable")

    @classmethod
    def empty(cls, ambient: int) -> AffineSubspace:
        return cls(ambient, None)

    @classmethod
    def point(cls, v: Vector) -> AffineSubspace:
        return cls(len(v), v)

    @classmethod
    def full(cls, ambient: int) -> AffineSubspace:
        return cls(
            ambient,
            Vector.zero(ambient),
            tuple(Vector.unit(ambient, i) for i in range(ambient)),
        )

    @property
    def is_empty(self) -> bool:
        return self.base is None

    @property
    def dim(self) -> int:
        if self.is_empty:
            raise ValueError("empty subspace has no dimension")
        return len(self.directions)

    def points(self):
        """Base point plus base+direction for each direction: a finite set
        whose affine hull is the whole subspace."""
        if self.is_empty:
            return []
        return [self.base] + [self.base + v for v in self.directions]

    def contains(self, v: Vector) -> bool:
        if self.is_empty:
            return False
        if len(v) != self.ambient:
            raise ValueError("point has wrong length")
        if not self.directions:
            return v == self.base
        D = Matrix.from_columns(list(self.directions))
        return not solve_affine(D, v - self.base).is_empty

    def __eq__(self, other):
        if not isinstance(other, AffineSubspace):
            return NotImplemented
        if self.ambient != other.ambient:
            return False
        if self.is_empty or other.is_empty:
            return self.is_empty and other.is_empty
        if self.dim != other.dim:
            return False
        return all(other.contains(p) for p in self.points())

    def __hash__(self):
        return hash((self.ambient, self.base, self.directions))

    def translate(self, v: Vector) -> AffineSubspace:
        if self.is_empty:
            return self
        return AffineSubspace(self.ambient, self.base + v, self.directions)

    def intersect(self, other: AffineSubspace) -> AffineSubspace:
        """Exact intersection."""
        if self.ambient != other.ambient:
            raise ValueError("ambient dimension mismatch")
        if self.is_empty or other.is_empty:
            return AffineSubspace.empty(self.ambient)
        k1 = len(self.directions)
        cols = list(self.directions) + [-v for v in other.directions]
        if not cols:
            if self.base == other.base:
                return AffineSubspace.point(self.base)
            return AffineSubspace.empty(self.ambient)
        sol = solve_affine(Matrix.from_columns(cols), other.base - self.base)
        if sol.is_empty:
            return AffineSubspace.empty(self.ambient)
        s0 = Vector(sol.base.entries[:k1])
        base = self.base + _lincomb(self.directions, s0, self.ambient)
        dirs = []
        for w in sol.directions:
            dirs.append(_lincomb(self.directions, Vector(w.entries[:k1]), self.ambient))
        return AffineSubspace(self.ambient, base, canonical_span(dirs))

    def __str__(self):
        if self.is_empty:
            return "EMPTY"
        return f"dim {self.dim}: base {self.base}" + (
            f", dirs {[str(v) for v in self.directions]}" if self.directions else ""
        )

    __repr__ = __str__


def _lincomb(vectors: Sequence[Vector], coeffs: Vector, ambient: int) -> Vector:
    out = Vector.zero(ambient)
    for v, c in zip(vectors, coeffs):
        if c:
            out = out + v.scale(c)
    return out


def canonical_span(vectors: Sequence[Vector]) -> list[Vector]:
    """Canonical independent basis of span(vectors) (RREF row basis)."""
    vectors = [v for v in vectors if not v.is_zero()]
    if not vectors:
        return []
    n = len(vectors[0])
    d = _infer_d(e for v in vectors for e in v)
    _, reduced = _rref_scalar_rows([v.entries for v in vectors], d)
    out = []
    for row in reduced:
        entries = [Scalar(0)] * n
        for c, s in row.items():
            entries[c] = s
        out.append(Vector(entries))
    return out


def solve_affine(M: Matrix, rhs: Vector) -> AffineSubspace:
    """Full exact solution set of M x = rhs as an AffineSubspace (EMPTY marker
    when the system is inconsistent)."""
    if M.nrows != len(rhs):
        raise ValueError(f"rhs length {len(rhs)} does not match {M.nrows} rows")
    n = M.ncols
    d = _infer_d(list(rhs.entries) + [e for r in M.rows for e in r])
    aug = [list(row) + [-b] for row, b in zip(M.rows, rhs.entries)]
    pivots, reduced = _rref_scalar_rows(aug, d)
    if n in pivots:
        return AffineSubspace.empty(n)
    base = [Scalar(0)] * n
    for pc, row in zip(pivots, reduced):
        if n in row:
            base[pc] = -row[n]
    directions = []
    pivot_set = set(pivots)
    for f in range(n):
        if f in pivot_set:
            continue
        entries = [Scalar(0)] * n
        entries[f] = Scalar(1)
        for pc, row in zip(pivots, reduced):
            if f in row:
                entries[pc] = -row[f]
        directions.append(Vector(entries))
    return AffineSubspace(n, Vector(base), directions)
