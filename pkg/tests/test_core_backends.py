"""The pure and compiled row-reduction twins must agree bit-for-bit."""

import random

import pytest

from confsym._core import pure

try:
    from confsym._core import _speed
except ImportError:
    _speed = None

needs_compiled = pytest.mark.skipif(_speed is None, reason="compiled core not built")


def random_system(seed, nrows=40, ncols=25, density=0.3, span=9, d=2):
    rng = random.Random(seed)
    rows = []
    for _ in range(nrows):
        cols = sorted(rng.sample(range(ncols), max(1, int(ncols * density))))
        vals = []
        for _ in cols:
            vals.append(rng.randint(-span, span))
            vals.append(rng.randint(-span, span))
        rows.append((cols, vals))
    return rows


@needs_compiled
@pytest.mark.parametrize("seed", range(12))
def test_backends_agree_on_random_systems(seed):
    rows = random_system(seed)
    assert pure.rref_sparse([(list(c), list(v)) for c, v in rows], 2) == _speed.rref_sparse(
        [(list(c), list(v)) for c, v in rows], 2
    )


@needs_compiled
def test_backends_agree_on_weyl_constraints():
    from confsym.weyl import _constraint_rows

    rows = _constraint_rows(2, 2)
    got_pure = pure.rref_sparse([(list(c), list(v)) for c, v in rows], 2)
    got_fast = _speed.rref_sparse([(list(c), list(v)) for c, v in rows], 2)
    assert got_pure == got_fast


def test_rref_is_input_order_independent():
    rows = random_system(99, nrows=20, ncols=12)
    ordered = pure.rref_sparse([(list(c), list(v)) for c, v in rows], 2)
    shuffled = list(rows)
    random.Random(1).shuffle(shuffled)
    assert pure.rref_sparse([(list(c), list(v)) for c, v in shuffled], 2) == ordered


def test_rref_normalizes_leading_entries():
    pivots, rows = pure.rref_sparse([([0, 1], [2, 2, 4, 0]), ([1], [0, 3])], 2)
    assert pivots == [0, 1]
    for cols, triples in rows:
        assert triples[0:3] == [1, 0, 1]
        # pivot rows carry no other pivot columns
        assert all(c not in pivots for c in cols[1:])
