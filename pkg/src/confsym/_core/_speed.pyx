# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled twin of confsym._core.pure: the exact row-echelon engine.

Entries stay Python ints so arbitrary-precision exactness is preserved
bit-for-bit; Cython removes the interpreter overhead of the merge loops.
Any semantic change here must be mirrored in pure.py (and vice versa); the
test suite cross-checks the two backends on random systems.
"""

from math import gcd

BACKEND_NAME = "compiled"


cdef inline tuple _norm3(a, b, q):
    if q < 0:
        a, b, q = -a, -b, -q
    g = gcd(gcd(a, b), q)
    if g > 1:
        return a // g, b // g, q // g
    return a, b, q


cdef inline tuple _sub_mul(tuple e, tuple f, tuple p, d):
    ea, eb, eq = e
    fa, fb, fq = f
    pa, pb, pq = p
    ma = fa * pa + d * fb * pb
    mb = fa * pb + fb * pa
    mq = fq * pq
    return _norm3(ea * mq - ma * eq, eb * mq - mb * eq, eq * mq)


cdef tuple _combine(list cols1, list vals1, list cols2, list vals2, tuple f, d):
    cdef list out_c = []
    cdef list out_v = []
    cdef Py_ssize_t i = 0, j = 0
    cdef Py_ssize_t n1 = len(cols1), n2 = len(cols2)
    cdef long long c1, c2
    cdef tuple zero = (0, 0, 1)
    cdef tuple e
    while i < n1 or j < n2:
        c1 = <long long> cols1[i] if i < n1 else -1
        c2 = <long long> cols2[j] if j < n2 else -1
        if j >= n2 or (i < n1 and c1 < c2):
            out_c.append(cols1[i])
            out_v.append(vals1[3 * i])
            out_v.append(vals1[3 * i + 1])
            out_v.append(vals1[3 * i + 2])
            i += 1
        elif i >= n1 or c2 < c1:
            e = _sub_mul(zero, f, (vals2[3 * j], vals2[3 * j + 1], vals2[3 * j + 2]), d)
            if e[0] or e[1]:
                out_c.append(cols2[j])
                out_v.append(e[0])
                out_v.append(e[1])
                out_v.append(e[2])
            j += 1
        else:
            e = _sub_mul(
                (vals1[3 * i], vals1[3 * i + 1], vals1[3 * i + 2]),
                f,
                (vals2[3 * j], vals2[3 * j + 1], vals2[3 * j + 2]),
                d,
            )
            if e[0] or e[1]:
                out_c.append(cols1[i])
                out_v.append(e[0])
                out_v.append(e[1])
                out_v.append(e[2])
            i += 1
            j += 1
    return out_c, out_v


cdef tuple _make_monic(list cols, list vals, d):
    cdef Py_ssize_t k, n = len(cols)
    la = vals[0]
    lb = vals[1]
    lq = vals[2]
    norm = la * la - d * lb * lb
    ia, ib, iq = _norm3(lq * la, -lq * lb, norm)
    cdef list out = [0] * len(vals)
    out[0] = 1
    out[1] = 0
    out[2] = 1
    for k in range(1, n):
        a = vals[3 * k]
        b = vals[3 * k + 1]
        q = vals[3 * k + 2]
        na, nb, nq = _norm3(a * ia + d * b * ib, a * ib + b * ia, q * iq)
        out[3 * k] = na
        out[3 * k + 1] = nb
        out[3 * k + 2] = nq
    return cols, out


def rref_sparse(rows, d):
    """Reduced row echelon form; same contract as the pure twin."""
    cdef dict piv = {}
    cdef list cols, triples, vals
    cdef Py_ssize_t k
    for row in rows:
        in_cols = row[0]
        vals = row[1]
        cols = []
        triples = []
        for k in range(len(in_cols)):
            a = vals[2 * k]
            b = vals[2 * k + 1]
            if a or b:
                na, nb, nq = _norm3(a, b, 1)
                cols.append(in_cols[k])
                triples.append(na)
                triples.append(nb)
                triples.append(nq)
        while cols:
            lead = cols[0]
            hit = piv.get(lead)
            if hit is None:
                piv[lead] = _make_monic(cols, triples, d)
                break
            pc, pv = hit
            cols, triples = _combine(
                cols, triples, pc, pv, (triples[0], triples[1], triples[2]), d
            )

    pivot_cols = sorted(piv)
    for c in reversed(pivot_cols):
        cols, vals = piv[c]
        k = 1
        while k < len(cols):
            hit = piv.get(cols[k])
            if hit is None:
                k += 1
                continue
            pc, pv = hit
            cols, vals = _combine(
                cols, vals, pc, pv, (vals[3 * k], vals[3 * k + 1], vals[3 * k + 2]), d
            )
        piv[c] = (cols, vals)

    return pivot_cols, [piv[c] for c in pivot_cols]
