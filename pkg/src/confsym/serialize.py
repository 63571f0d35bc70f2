"""Structured-text (JSON) forms of the toolkit's values.

All scalars travel as literals of the grammar in confsym.scalars; dictionaries
are dumped with sorted keys so that parsing a machine report and re-serializing
it is the identity.
"""

from __future__ import annotations

import json

from .extension import Extension, HomogeneousPair, SymmetricPair
from .flatmodel import MobiusSpace, NullLine, OrbitLabel
from .liealg import StructureAlgebra
from .linalg import AffineSubspace, Matrix, Vector
from .scalars import Scalar, parse_scalar
from .symmetry import SymmetryReport
from .weyl import WeylTensor


def dump_canonical(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2)


def vector_to_literals(v: Vector) -> list[str]:
    return [str(e) for e in v]


def vector_from_literals(items, d: int) -> Vector:
    return Vector(parse_scalar(str(x), d) for x in items)


def matrix_to_literals(M: Matrix) -> list[list[str]]:
    return [[str(e) for e in row] for row in M.rows]


def matrix_from_literals(rows, d: int) -> Matrix:
    return Matrix([parse_scalar(str(x), d) for x in row] for row in rows)


def subspace_to_dict(s: AffineSubspace) -> dict:
    if s.is_empty:
        return {"empty": True, "ambient": s.ambient}
    return {
        "empty": False,
        "ambient": s.ambient,
        "dim": s.dim,
        "base": vector_to_literals(s.base),
        "dirs": [vector_to_literals(v) for v in s.directions],
    }


def subspace_from_dict(data: dict, d: int) -> AffineSubspace:
    if data["empty"]:
        return AffineSubspace.empty(data["ambient"])
    return AffineSubspace(
        data["ambient"],
        vector_from_literals(data["base"], d),
        [vector_from_literals(v, d) for v in data["dirs"]],
    )


def orbit_to_dict(label: OrbitLabel) -> dict:
    return {"iso_u": label.iso_u, "iso_v": label.iso_v, "in_span": label.in_span}


def orbit_from_dict(data: dict) -> OrbitLabel:
    return OrbitLabel(bool(data["iso_u"]), bool(data["iso_v"]), bool(data["in_span"]))


def report_to_dict(space: MobiusSpace, report: SymmetryReport) -> dict:
    return {
        "p": space.signature.p,
        "q": space.signature.q,
        "d": space.d,
        "base_point": vector_to_literals(report.base_point.representative),
        "witness": matrix_to_literals(report.witness),
        "orbit": orbit_to_dict(report.orbit),
        "preserving": subspace_to_dict(report.preserving),
        "swapping": subspace_to_dict(report.swapping),
        "preserve_first": subspace_to_dict(report.preserve_first),
        "preserve_second": subspace_to_dict(report.preserve_second),
    }


def report_from_dict(data: dict) -> tuple[MobiusSpace, SymmetryReport]:
    space = MobiusSpace(int(data["p"]), int(data["q"]), int(data["d"]))
    d = space.d
    report = SymmetryReport(
        base_point=NullLine(space.form, vector_from_literals(data["base_point"], d)),
        witness=matrix_from_literals(data["witness"], d),
        orbit=orbit_from_dict(data["orbit"]),
        preserving=subspace_from_dict(data["preserving"], d),
        swapping=subspace_from_dict(data["swapping"], d),
        preserve_first=subspace_from_dict(data["preserve_first"], d),
        preserve_second=subspace_from_dict(data["preserve_second"], d),
    )
    return space, report


# -- Weyl tensors ------------------------------------------------------------


def weyl_to_dict(W: WeylTensor) -> dict:
    """Only components with i<j, k<l, (i,j) <= (k,l) lexicographically are
    listed (1-based); the rest are reconstructed from the symmetries."""
    comps = {}
    n = W.n
    for i in range(n):
        for j in range(i + 1, n):
            for k in range(n):
                for l in range(k + 1, n):
                    if (i, j) > (k, l):
                        continue
                    val = W[i, j, k, l]
                    if val:
                        comps[f"{i + 1},{j + 1},{k + 1},{l + 1}"] = str(val)
    return {"p": W.p, "q": W.q, "d": W.d, "components": comps}


def weyl_from_dict(data: dict) -> WeylTensor:
    p = int(data["p"])
    q = int(data["q"])
    d = int(data["d"])
    n = p + q
    flat = [Scalar(0)] * n**4

    def put(i, j, k, l, v):
        flat[((i * n + j) * n + k) * n + l] = v

    for key, lit in data["components"].items():
        i, j, k, l = (int(t) - 1 for t in key.split(","))
        if not (0 <= i < j < n and 0 <= k < l < n and (i, j) <= (k, l)):
            raise ValueError(f"non-canonical component key {key!r}")
        v = parse_scalar(lit, d)
        for (a, b, c, e), s in (
            ((i, j, k, l), v),
            ((j, i, k, l), -v),
            ((i, j, l, k), -v),
            ((j, i, l, k), v),
            ((k, l, i, j), v),
            ((l, k, i, j), -v),
            ((k, l, j, i), -v),
            ((l, k, j, i), v),
        ):
            put(a, b, c, e, s)
    return WeylTensor(p, q, flat, d, validate=True)


# -- structure algebras and extensions ---------------------------------------


def structure_algebra_to_dict(alg: StructureAlgebra) -> dict:
    brackets = []
    for i in range(alg.dim):
        for j in range(i + 1, alg.dim):
            if not alg.table[i][j].is_zero():
                brackets.append([i, j, vector_to_literals(alg.table[i][j])])
    return {"dim": alg.dim, "brackets": brackets}


def structure_algebra_from_dict(data: dict, d: int) -> StructureAlgebra:
    dim = int(data["dim"])
    zero = Vector.zero(dim)
    table = [[zero for _ in range(dim)] for _ in range(dim)]
    for i, j, coeffs in data["brackets"]:
        v = vector_from_literals(coeffs, d)
        table[int(i)][int(j)] = v
        table[int(j)][int(i)] = -v
    return StructureAlgebra(dim, table)


def extension_to_dict(ext: Extension) -> dict:
    def indices(basis):
        out = []
        for v in basis:
            nz = [i for i, e in enumerate(v) if e]
            if len(nz) != 1 or v[nz[0]] != Scalar(1):
                raise ValueError("only unit-vector h/m bases serialize to index lists")
            out.append(nz[0])
        return out

    return {
        "p": ext.space.signature.p,
        "q": ext.space.signature.q,
        "d": ext.space.d,
        "algebra": structure_algebra_to_dict(ext.pair.alg),
        "h": indices(ext.pair.h_basis),
        "m": indices(ext.pair.m_basis),
        "alpha": matrix_to_literals(ext.alpha),
        "symmetric": isinstance(ext.pair, SymmetricPair),
    }


def extension_from_dict(data: dict) -> Extension:
    space = MobiusSpace(int(data["p"]), int(data["q"]), int(data.get("d", 2)))
    alg = structure_algebra_from_dict(data["algebra"], space.d)
    h = [Vector.unit(alg.dim, int(i)) for i in data["h"]]
    m = [Vector.unit(alg.dim, int(i)) for i in data["m"]]
    pair_cls = SymmetricPair if data.get("symmetric") else HomogeneousPair
    pair = pair_cls(alg, h, m)
    alpha = matrix_from_literals(data["alpha"], space.d)
    return Extension(space, pair, alpha)
