import pytest

from confsym.flatmodel import (
    MobiusSpace,
    NullLine,
    Signature,
    classify_orbit,
    isometry_inverse,
    transitive_witness,
)
from confsym.linalg import Matrix, Vector
from confsym.scalars import Scalar

from conftest import rand_null_vector


def test_signature_validation():
    Signature(2, 1)
    Signature(0, 3)
    Signature(3, 0)
    with pytest.raises(ValueError):
        Signature(1, 1)
    with pytest.raises(ValueError):
        Signature(-1, 5)


def test_form_matrix_blocks(space21):
    m = space21.form.matrix
    e0 = space21.basis_vector(0)
    elast = space21.basis_vector(4)
    assert space21.pairing(e0, elast) == Scalar(1)
    assert space21.pairing(e0, e0) == Scalar(0)
    for i in (1, 2, 3):
        ei = space21.basis_vector(i)
        expected = Scalar(1) if i <= 2 else Scalar(-1)
        assert space21.pairing(ei, ei) == expected
    assert m.transpose() == m


def test_worked_null_vectors_are_null(space21):
    u = space21.vector(["1", "1*r", "0", "0", "-1"])
    v = space21.vector(["1", "0", "0", "-1*r", "1"])
    assert space21.pairing(u, u) == Scalar(0)
    assert space21.pairing(v, v) == Scalar(0)
    assert space21.pairing(u, v) == Scalar(0)


def test_pairing_dimension_mismatch(space21):
    with pytest.raises(ValueError):
        space21.pairing(Vector([1, 0]), space21.basis_vector(0))


def test_pairing_is_symmetric_and_bilinear(space21, rng):
    for _ in range(10):
        x = rand_null_vector(space21, rng)
        y = rand_null_vector(space21, rng)
        z = rand_null_vector(space21, rng)
        assert space21.pairing(x, y) == space21.pairing(y, x)
        c = Scalar(rng.randint(-4, 4))
        lhs = space21.pairing(x + y.scale(c), z)
        assert lhs == space21.pairing(x, z) + c * space21.pairing(y, z)


def test_null_line_normalization_and_equality(space21):
    a = space21.line(["0", "2", "0", "2", "0"])
    b = space21.line(["0", "-1/3", "0", "-1/3", "0"])
    assert a == b
    assert a.representative[1] == Scalar(1)
    with pytest.raises(ValueError):
        space21.line(["1", "0", "0", "0", "1"])  # not null: m(v, v) = 2
    with pytest.raises(ValueError):
        NullLine(space21.form, Vector.zero(5))


def test_classify_orbit_worked_cases(space21):
    w = space21.origin
    u = space21.line(["1", "1*r", "0", "0", "-1"])
    v = space21.line(["1", "0", "0", "-1*r", "1"])
    lab = classify_orbit(space21, w, u, v)
    assert (lab.iso_u, lab.iso_v, lab.in_span) == (False, False, False)

    u2 = space21.line(["0", "1", "0", "1", "0"])
    v2 = space21.line(["0", "0", "0", "0", "1"])
    lab2 = classify_orbit(space21, w, u2, v2)
    assert (lab2.iso_u, lab2.iso_v, lab2.in_span) == (True, False, False)

    v3 = space21.line(["1", "1", "0", "1", "0"])
    lab3 = classify_orbit(space21, w, u2, v3)
    assert (lab3.iso_u, lab3.iso_v, lab3.in_span) == (True, True, True)


def test_classify_orbit_rejects_removed_point(space21):
    u = space21.line(["0", "1", "0", "1", "0"])
    v = space21.line(["0", "0", "0", "0", "1"])
    with pytest.raises(ValueError, match="removed point"):
        classify_orbit(space21, u, u, v)
    with pytest.raises(ValueError):
        classify_orbit(space21, space21.origin, u, u)


def test_classify_orbit_scale_invariant(space21):
    w = space21.line(["0", "3", "0", "3", "0"])
    u = space21.line(["0", "-1", "0", "-1", "0"])
    assert w == u  # rescaled representatives give the same line
    v = space21.line(["1", "2", "0", "2", "0"])
    w2 = space21.line(["1", "1", "0", "1", "0"])
    lab_a = classify_orbit(space21, w2, u, v)
    lab_b = classify_orbit(
        space21,
        space21.line(["-2", "-2", "0", "-2", "0"]),
        space21.line(["0", "1/2", "0", "1/2", "0"]),
        space21.line(["5", "10", "0", "10", "0"]),
    )
    assert lab_a == lab_b


def test_span_membership_forces_isotropy(space21, rng):
    # for orthogonal null u, v every point of <u, v> is isotropic to both
    u = space21.line(["0", "1", "0", "1", "0"])
    v = space21.line(["1", "1", "0", "1", "0"])
    assert space21.pairing(u.representative, v.representative) == Scalar(0)
    for _ in range(10):
        a = Scalar(rng.randint(-5, 5))
        b = Scalar(rng.randint(-5, 5))
        w_vec = u.representative.scale(a) + v.representative.scale(b)
        if w_vec.is_zero():
            continue
        w = space21.line(w_vec)
        if w in (u, v):
            continue
        lab = classify_orbit(space21, w, u, v)
        assert lab.in_span
        assert lab.iso_u and lab.iso_v


def test_witness_at_origin_is_identity(space21):
    assert transitive_witness(space21, space21.origin) == Matrix.identity(5)


def test_witness_at_opposite_corner_swaps(space21):
    w = space21.line(["0", "0", "0", "0", "1"])
    g = transitive_witness(space21, w)
    assert space21.form.is_isometry(g)
    assert g.matvec(space21.basis_vector(0)) == space21.basis_vector(4)
    # this reflection fixes the middle block pointwise
    for i in (1, 2, 3):
        assert g.matvec(space21.basis_vector(i)) == space21.basis_vector(i)


def test_witness_for_isotropic_middle_point(space21):
    w = space21.line(["0", "1", "0", "1", "0"])
    g = transitive_witness(space21, w)
    assert space21.form.is_isometry(g)
    image = g.matvec(space21.basis_vector(0))
    assert NullLine(space21.form, image) == w


@pytest.mark.parametrize("pq", [(2, 1), (2, 2), (3, 0), (0, 3), (3, 2)])
def test_witness_on_random_lines(pq, rng):
    space = MobiusSpace(*pq)
    for _ in range(8):
        w = NullLine(space.form, rand_null_vector(space, rng))
        g = transitive_witness(space, w)
        assert space.form.is_isometry(g)
        assert NullLine(space.form, g.matvec(space.basis_vector(0))) == w
        gi = isometry_inverse(space, g)
        assert g @ gi == Matrix.identity(space.ambient)
