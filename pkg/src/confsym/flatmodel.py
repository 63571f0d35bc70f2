"""The flat Mobius space of signature (p, q).

Points are null lines of the invariant bilinear form of signature
(p+1, q+1), written in the Witt block basis e_0, e_1, ..., e_{p+q}, e_{p+q+1}
where the form pairs the two corner vectors and is diag(+1 x p, -1 x q) on the
middle block.  The module classifies points relative to two removed null
lines and produces exact group elements moving the distinguished origin
<e_0> to any point.
"""

from __future__ import annotations

from dataclasses import dataclass

from .linalg import Matrix, Vector, rank
from .scalars import Scalar, as_scalar


@dataclass(frozen=True)
class Signature:
    """Metric signature (p, q) of the conformal structure; ambient vectors
    live in dimension p + q + 2."""

    p: int
    q: int

    def __post_init__(self):
        if self.p < 0 or self.q < 0 or self.p + self.q < 3:
            raise ValueError(f"need p, q >= 0 with p+q >= 3, got ({self.p}, {self.q})")

    @property
    def n(self) -> int:
        return self.p + self.q

    @property
    def ambient(self) -> int:
        return self.n + 2

    def j_sign(self, i: int) -> int:
        """Sign of the middle block on coordinate i in 0..n-1."""
        if not 0 <= i < self.n:
            raise IndexError(i)
        return 1 if i < self.p else -1

    def j_matrix(self) -> Matrix:
        return Matrix(
            tuple(Scalar(self.j_sign(i)) if i == k else Scalar(0) for k in range(self.n))
            for i in range(self.n)
        )


class MinkowskiForm:
    """The ambient bilinear form m: anti-diagonal corner block plus the
    diagonal middle block J."""

    def __init__(self, sig: Signature):
        self.signature = sig
        n = sig.n
        rows = []
        for i in range(sig.ambient):
            row = [Scalar(0)] * sig.ambient
            if i == 0:
                row[sig.ambient - 1] = Scalar(1)
            elif i == sig.ambient - 1:
                row[0] = Scalar(1)
            else:
                row[i] = Scalar(sig.j_sign(i - 1))
            rows.append(row)
        self.matrix = Matrix(rows)

    def pairing(self, x: Vector, y: Vector) -> Scalar:
        """m(x, y) = x_0 y_{n+1} + x_{n+1} y_0 + sum_i J_ii x_i y_i."""
        sig = self.signature
        if len(x) != sig.ambient or len(y) != sig.ambient:
            raise ValueError(
                f"vectors must have length {sig.ambient}, got {len(x)}, {len(y)}"
            )
        last = sig.ambient - 1
        out = x[0] * y[last] + x[last] * y[0]
        for i in range(1, last):
            s = x[i] * y[i]
            if s:
                out = out + Scalar(sig.j_sign(i - 1)) * s
        return out

    def is_null(self, v: Vector) -> bool:
        return not self.pairing(v, v)

    def is_isometry(self, g: Matrix) -> bool:
        return g.transpose() @ self.matrix @ g == self.matrix


class NullLine:
    """Projective class of a nonzero null vector; the stored representative is
    scaled so that its first nonzero coordinate is 1."""

    __slots__ = ("representative", "_sig")

    def __init__(self, form: MinkowskiForm, rep: Vector):
        if len(rep) != form.signature.ambient:
            raise ValueError("representative has wrong length")
        if rep.is_zero():
            raise ValueError("null line needs a nonzero representative")
        if not form.is_null(rep):
            raise ValueError(f"representative {rep} is not null")
        lead = next(e for e in rep if e)
        object.__setattr__(self, "representative", rep.scale(lead.inverse()))
        object.__setattr__(self, "_sig", form.signature)

    def __setattr__(self, name, value):
        raise AttributeError("NullLine is immutable")

    def __eq__(self, other):
        return isinstance(other, NullLine) and self.representative == other.representative

    def __hash__(self):
        return hash(self.representative)

    def __str__(self):
        return f"<{self.representative}>"

    __repr__ = __str__


@dataclass(frozen=True)
class OrbitLabel:
    """Position of a point w relative to the removed lines <u>, <v>:
    isotropy of w with each and membership of w in the plane <u, v>."""

    iso_u: bool
    iso_v: bool
    in_span: bool


class MobiusSpace:
    """Session context: signature, ambient field parameter d and the form."""

    def __init__(self, p: int, q: int, d: int = 2):
        self.signature = Signature(p, q)
        self.d = d
        self.form = MinkowskiForm(self.signature)

    @property
    def n(self) -> int:
        return self.signature.n

    @property
    def ambient(self) -> int:
        return self.signature.ambient

    def vector(self, entries) -> Vector:
        return Vector(as_scalar(e, self.d) for e in entries)

    def basis_vector(self, i: int) -> Vector:
        return Vector.unit(self.ambient, i)

    def line(self, entries) -> NullLine:
        return NullLine(self.form, self.vector(entries) if not isinstance(entries, Vector) else entries)

    @property
    def origin(self) -> NullLine:
        return self.line(self.basis_vector(0))

    def pairing(self, x: Vector, y: Vector) -> Scalar:
        return self.form.pairing(x, y)


def classify_orbit(space: MobiusSpace, w: NullLine, u: NullLine, v: NullLine) -> OrbitLabel:
    """Label the point w relative to the removed lines <u>, <v>.

    Exact pairing tests decide isotropy; a rank comparison of [u; v] against
    [u; v; w] decides membership in the plane.  Rescaling any representative
    cannot change the answer."""
    if u == v:
        raise ValueError("removed lines must be distinct")
    if w == u or w == v:
        raise ValueError("removed point: w coincides with a removed line")
    wr, ur, vr = w.representative, u.representative, v.representative
    iso_u = not space.pairing(wr, ur)
    iso_v = not space.pairing(wr, vr)
    span_uv = rank(Matrix([ur.entries, vr.entries]))
    span_uvw = rank(Matrix([ur.entries, vr.entries, wr.entries]))
    return OrbitLabel(iso_u=iso_u, iso_v=iso_v, in_span=span_uv == span_uvw)


def reflection(space: MobiusSpace, v: Vector) -> Matrix:
    """Hyperplane reflection tau_v(x) = x - 2 m(x,v)/m(v,v) * v, an exact
    isometry for any non-null v."""
    qv = space.pairing(v, v)
    if not qv:
        raise ValueError("cannot reflect in a null vector")
    factor = Scalar(-2) / qv
    mv = space.form.matrix.matvec(v)
    return Matrix.identity(space.ambient) + Matrix.outer(v.scale(factor), mv)


def transitive_witness(space: MobiusSpace, w: NullLine) -> Matrix:
    """An exact group element g (g^T m g = m) with g<e_0> = w.

    At most two hyperplane reflections: when m(e_0, w) != 0 a single
    reflection in e_0 - w works; otherwise a null vector z non-orthogonal to
    both is found on the two-parameter null family
    z(s, t) = e_0 + s e_i + t e_j - (s^2 J_i + t^2 J_j)/2 e_last
    and the composition tau_{z-w} tau_{e_0-z} is returned."""
    rep = w.representative
    e0 = space.basis_vector(0)
    if w == space.origin:
        return Matrix.identity(space.ambient)
    t = space.pairing(e0, rep)
    if t:
        return reflection(space, e0 - rep)
    z = _null_bridge(space, rep)
    first = reflection(space, e0 - z)
    second = reflection(space, z - rep)
    return second @ first


def _null_bridge(space: MobiusSpace, rep: Vector) -> Vector:
    """Deterministic null vector z with m(e_0, z) != 0 and m(rep, z) != 0.

    Only reached when rep is orthogonal to e_0 and not proportional to it, so
    rep has a nonzero middle coordinate and the search polynomial in (s, t)
    is not identically zero; the grid walk therefore terminates."""
    sig = space.signature
    e0 = space.basis_vector(0)
    i = next(
        (k for k in range(1, sig.ambient - 1) if rep[k]),
        None,
    )
    if i is None:
        raise AssertionError("unreachable: rep must have a middle coordinate here")
    j = 1 if i != 1 else 2
    ji = Scalar(sig.j_sign(i - 1))
    jj = Scalar(sig.j_sign(j - 1))
    half = Scalar(1, 0, 2)
    bound = 1
    while True:
        for s_int in range(-bound, bound + 1):
            for t_int in range(-bound, bound + 1):
                s = Scalar(s_int)
                t = Scalar(t_int)
                corner = -half * (s * s * ji + t * t * jj)
                entries = [Scalar(0)] * sig.ambient
                entries[0] = Scalar(1)
                entries[i] = entries[i] + s
                entries[j] = entries[j] + t
                entries[-1] = entries[-1] + corner
                z = Vector(entries)
                if space.pairing(e0, z) and space.pairing(rep, z):
                    return z
        bound += 1


def isometry_inverse(space: MobiusSpace, g: Matrix) -> Matrix:
    """Inverse of a form isometry: g^-1 = m g^T m (exact, m^2 = I)."""
    m = space.form.matrix
    inv = m @ g.transpose() @ m
    if not (g @ inv == Matrix.identity(space.ambient)):
        raise ValueError("matrix is not an isometry of the form")
    return inv
