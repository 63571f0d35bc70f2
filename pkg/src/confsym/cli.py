"""Command-line front end.

    confsym [--p P] [--q Q] [--d D] [--machine] <command> ...

Commands: classify, solve, weyl, extension, reproduce-paper.  Vectors are
given inline as comma-separated scalar literals ("1,1*r,0,0,-1") or through a
JSON input file with fields p, q, d, u, v, w.  Machine mode emits canonical
JSON (sorted keys) whose parse/re-serialize round trip is the identity.
Exit status is 0 exactly when every check made by the invoked command passed.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass

from .extension import (
    curvature,
    flat_model_extension,
    symmetry_criterion,
    symmetry_criterion_search,
    validate_extension,
)
from .flatmodel import MobiusSpace, NullLine, classify_orbit
from .linalg import AffineSubspace, Matrix, Vector, solve_affine
from .scalars import check_field_parameter, parse_scalar
from .serialize import (
    dump_canonical,
    extension_from_dict,
    extension_to_dict,
    report_to_dict,
    subspace_to_dict,
    vector_to_literals,
    weyl_to_dict,
)
from .symmetry import SymmetryReport, find_symmetries
from .weyl import prolongation, random_weyl, weyl_space_basis


@dataclass
class SessionConfig:
    p: int
    q: int
    d: int = 2
    machine: bool = False

    def __post_init__(self):
        if self.p + self.q < 3:
            raise ValueError("need p + q >= 3")
        check_field_parameter(self.d)

    def space(self) -> MobiusSpace:
        return MobiusSpace(self.p, self.q, self.d)


def _parse_vector_arg(text: str, d: int) -> Vector:
    try:
        return Vector(parse_scalar(part.strip(), d) for part in text.split(","))
    except ValueError as exc:
        raise SystemExit(f"error: bad vector {text!r}: {exc}")


def _load_lines(config: SessionConfig, args) -> tuple[MobiusSpace, NullLine, NullLine, NullLine]:
    if args.file:
        try:
            with open(args.file) as fh:
                data = json.load(fh)
        except (OSError, json.JSONDecodeError) as exc:
            raise SystemExit(f"error: cannot read {args.file}: {exc}")
        config = SessionConfig(
            p=int(data["p"]), q=int(data["q"]), d=int(data.get("d", config.d)),
            machine=config.machine,
        )
        space = config.space()
        u = space.vector(data["u"])
        v = space.vector(data["v"])
        w = space.vector(data["w"]) if "w" in data else space.basis_vector(0)
    else:
        if not (args.u and args.v):
            raise SystemExit("error: provide --file or both --u and --v")
        space = config.space()
        u = _parse_vector_arg(args.u, config.d)
        v = _parse_vector_arg(args.v, config.d)
        w = _parse_vector_arg(args.w, config.d) if args.w else space.basis_vector(0)
    try:
        return space, space.line(u), space.line(v), space.line(w)
    except ValueError as exc:
        raise SystemExit(f"error: {exc}")


def _emit(config: SessionConfig, machine_obj, human_lines):
    if config.machine:
        print(dump_canonical(machine_obj))
    else:
        for line in human_lines:
            print(line)


def _describe_subspace(s: AffineSubspace) -> str:
    if s.is_empty:
        return "EMPTY"
    if s.dim == 0:
        return f"unique Z = {s.base}"
    return f"dim {s.dim} affine set, base {s.base}, directions " + ", ".join(
        str(v) for v in s.directions
    )


def cmd_classify(config: SessionConfig, args) -> int:
    space, u, v, w = _load_lines(config, args)
    try:
        label = classify_orbit(space, w, u, v)
    except ValueError as exc:
        raise SystemExit(f"error: {exc}")
    pair_u = space.pairing(w.representative, u.representative)
    pair_v = space.pairing(w.representative, v.representative)
    _emit(
        config,
        {
            "orbit": {"iso_u": label.iso_u, "iso_v": label.iso_v, "in_span": label.in_span},
            "pairing_u": str(pair_u),
            "pairing_v": str(pair_v),
        },
        [
            f"m(w, u) = {pair_u}   m(w, v) = {pair_v}",
            f"orbit label: iso_u={label.iso_u} iso_v={label.iso_v} in_span={label.in_span}",
        ],
    )
    return 0


def cmd_solve(config: SessionConfig, args) -> int:
    space, u, v, w = _load_lines(config, args)
    try:
        report = find_symmetries(space, u, v, w)
    except ValueError as exc:
        raise SystemExit(f"error: {exc}")
    _emit(
        config,
        report_to_dict(space, report),
        [
            f"base point: {report.base_point}",
            f"orbit: iso_u={report.orbit.iso_u} iso_v={report.orbit.iso_v} in_span={report.orbit.in_span}",
            f"preserving both lines: {_describe_subspace(report.preserving)}",
            f"swapping the lines:   {_describe_subspace(report.swapping)}",
            f"preserving first only: {_describe_subspace(report.preserve_first)}",
            f"preserving second only: {_describe_subspace(report.preserve_second)}",
        ],
    )
    return 0


def cmd_weyl(config: SessionConfig, args) -> int:
    if args.weyl_command == "basis-dim":
        basis = weyl_space_basis(config.p, config.q, config.d)
        _emit(
            config,
            {"p": config.p, "q": config.q, "dimension": basis.dimension},
            [f"dim of the algebraic Weyl space for ({config.p}, {config.q}): {basis.dimension}"],
        )
        return 0
    # prolongation
    try:
        W = random_weyl(config.p, config.q, args.seed, config.d)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    pro = prolongation(W)
    _emit(
        config,
        {
            "p": config.p,
            "q": config.q,
            "seed": args.seed,
            "prolongation_dimension": len(pro),
            "prolongation_basis": [vector_to_literals(y) for y in pro],
            "tensor": weyl_to_dict(W),
        },
        [
            f"random nonzero Weyl-type tensor (seed {args.seed}) on ({config.p}, {config.q})",
            f"prolongation dimension: {len(pro)}",
        ]
        + [f"  basis covector: {y}" for y in pro],
    )
    return 0


def cmd_extension(config: SessionConfig, args) -> int:
    if args.ext_command == "make-flat":
        ext = flat_model_extension(config.space())
        payload = dump_canonical(extension_to_dict(ext))
        if args.output:
            with open(args.output, "w") as fh:
                fh.write(payload + "\n")
            if not config.machine:
                print(f"wrote flat-model extension to {args.output}")
        else:
            print(payload)
        return 0

    if not args.file:
        raise SystemExit(f"error: extension {args.ext_command} needs --file")
    try:
        with open(args.file) as fh:
            ext = extension_from_dict(json.load(fh))
    except (OSError, json.JSONDecodeError, ValueError, KeyError) as exc:
        raise SystemExit(f"error: cannot load extension from {args.file}: {exc}")

    if args.ext_command == "validate":
        report = validate_extension(ext)
        conditions = [
            ("stabilizer", report.stabilizer_condition),
            ("quotient", report.quotient_condition),
            ("equivariance", report.equivariance_condition),
        ]
        _emit(
            config,
            {
                name: {"passed": c.passed, "detail": c.detail, "witnesses": c.witnesses}
                for name, c in conditions
            },
            [
                f"condition {name}: {'pass' if c.passed else 'FAIL'} ({c.detail})"
                + (f" witnesses: {c.witnesses}" if not c.passed else "")
                for name, c in conditions
            ],
        )
        return 0 if report.passed else 1

    if args.ext_command == "curvature":
        values = []
        nonzero = False
        mb = ext.pair.m_basis
        for i in range(len(mb)):
            for j in range(i + 1, len(mb)):
                k = curvature(ext, mb[i], mb[j])
                flat = not any([bool(k.a), not k.X.is_zero(), not k.A.is_zero(), not k.Z.is_zero()])
                nonzero = nonzero or not flat
                values.append(
                    {
                        "pair": [i, j],
                        "zero": flat,
                        "a": str(k.a),
                        "X": vector_to_literals(k.X),
                        "Z": vector_to_literals(k.Z),
                    }
                )
        _emit(
            config,
            {"curvature": values, "flat": not nonzero},
            [
                "curvature on m-basis pairs: "
                + ("identically zero (flat)" if not nonzero else "NOT identically zero")
            ]
            + [f"  pair {v['pair']}: {'0' if v['zero'] else 'nonzero'}" for v in values],
        )
        return 0

    # criterion
    if args.candidates:
        candidates = [_parse_vector_arg(c, ext.space.d) for c in args.candidates.split(";")]
        hit = symmetry_criterion_search(ext, candidates)
        found = hit is not None
        _emit(
            config,
            {"found": found, "Y": vector_to_literals(hit) if found else None},
            [f"first passing Y: {hit}" if found else "no candidate passed"],
        )
        return 0 if found else 1
    Y = (
        _parse_vector_arg(args.y, ext.space.d)
        if args.y
        else Vector.zero(ext.space.n)
    )
    ok = symmetry_criterion(ext, Y)
    _emit(
        config,
        {"Y": vector_to_literals(Y), "preserved": ok},
        [f"Ad_exp(Y) alpha(k) is s_0-stable for Y = {Y}: {ok}"],
    )
    return 0 if ok else 1


# -- the six fixed desk cases ------------------------------------------------


@dataclass
class CaseFixture:
    case_id: str
    p: int
    q: int
    u: list[str]
    v: list[str]
    expected_desc: str


@dataclass
class CaseResult:
    case: CaseFixture
    report: SymmetryReport
    match: bool


def _point(entries, d) -> AffineSubspace:
    return AffineSubspace.point(Vector(parse_scalar(x, d) for x in entries))


def _conditions(n: int, rows, rhs, d) -> AffineSubspace:
    M = Matrix([[parse_scalar(x, d) for x in row] for row in rows])
    return solve_affine(M, Vector(parse_scalar(x, d) for x in rhs))


def fixture_cases() -> list[CaseFixture]:
    return [
        CaseFixture(
            "orbit-A", 2, 1,
            ["1", "1*r", "0", "0", "-1"], ["1", "0", "0", "-1*r", "1"],
            "swap at exactly Z = (-1*r, 0, 1*r); nothing preserves both lines",
        ),
        CaseFixture(
            "orbit-B", 2, 1,
            ["0", "1", "0", "1", "0"], ["0", "0", "0", "0", "1"],
            "preserve at exactly Z = 0; nothing swaps the lines",
        ),
        CaseFixture(
            "orbit-C", 2, 1,
            ["0", "1", "0", "1", "0"], ["1", "1", "0", "1", "0"],
            "swap on the hyperplane z1 + z3 = -1; nothing preserves both lines",
        ),
        CaseFixture(
            "orbit-D", 2, 2,
            ["0", "1", "0", "0", "1", "0"], ["0", "0", "1", "1", "0", "0"],
            "preserve on z1 + z4 = 0, z2 + z3 = 0; nothing swaps the lines",
        ),
        CaseFixture(
            "example-2", 2, 1,
            ["0", "0", "0", "0", "1"], ["1", "1", "0", "1", "0"],
            "no symmetry: single-line sets are Z = 0 and z1 + z3 = -2, disjoint",
        ),
        CaseFixture(
            "example-3", 3, 0,
            ["-1", "0", "0", "1*r", "1"], ["1", "0", "0", "1*r", "-1"],
            "swap at exactly Z = 0; nothing preserves both lines",
        ),
    ]


def expected_sets(case: CaseFixture, d: int) -> dict[str, AffineSubspace]:
    n3 = 3
    if case.case_id == "orbit-A":
        return {
            "preserving": AffineSubspace.empty(n3),
            "swapping": _point(["-1*r", "0", "1*r"], d),
        }
    if case.case_id == "orbit-B":
        return {
            "preserving": _point(["0", "0", "0"], d),
            "swapping": AffineSubspace.empty(n3),
        }
    if case.case_id == "orbit-C":
        return {
            "preserving": AffineSubspace.empty(n3),
            "swapping": _conditions(n3, [["1", "0", "1"]], ["-1"], d),
        }
    if case.case_id == "orbit-D":
        return {
            "preserving": _conditions(
                4, [["1", "0", "0", "1"], ["0", "1", "1", "0"]], ["0", "0"], d
            ),
            "swapping": AffineSubspace.empty(4),
        }
    if case.case_id == "example-2":
        return {
            "preserving": AffineSubspace.empty(n3),
            "swapping": AffineSubspace.empty(n3),
            "preserve_first": _point(["0", "0", "0"], d),
            "preserve_second": _conditions(n3, [["1", "0", "1"]], ["-2"], d),
        }
    if case.case_id == "example-3":
        return {
            "preserving": AffineSubspace.empty(n3),
            "swapping": _point(["0", "0", "0"], d),
        }
    raise KeyError(case.case_id)


def run_fixture_case(case: CaseFixture, d: int = 2) -> CaseResult:
    space = MobiusSpace(case.p, case.q, d)
    u = space.line([parse_scalar(x, d) for x in case.u])
    v = space.line([parse_scalar(x, d) for x in case.v])
    report = find_symmetries(space, u, v, space.origin)
    expected = expected_sets(case, d)
    match = report.preserving == expected["preserving"] and report.swapping == expected["swapping"]
    if "preserve_first" in expected:
        match = (
            match
            and report.preserve_first == expected["preserve_first"]
            and report.preserve_second == expected["preserve_second"]
        )
    return CaseResult(case=case, report=report, match=match)


def cmd_reproduce(config: SessionConfig, args) -> int:
    results = [run_fixture_case(case, config.d) for case in fixture_cases()]
    if config.machine:
        payload = [
            {
                "case_id": r.case.case_id,
                "p": r.case.p,
                "q": r.case.q,
                "preserving": subspace_to_dict(r.report.preserving),
                "swapping": subspace_to_dict(r.report.swapping),
                "expected": r.case.expected_desc,
                "match": r.match,
            }
            for r in results
        ]
        print(dump_canonical(payload))
    else:
        width = max(len(r.case.case_id) for r in results)
        for r in results:
            status = "match" if r.match else "MISMATCH"
            print(
                f"{r.case.case_id:<{width}}  ({r.case.p},{r.case.q})  "
                f"preserving: {_describe_subspace(r.report.preserving):<40} "
                f"swapping: {_describe_subspace(r.report.swapping):<40} {status}"
            )
        good = sum(1 for r in results if r.match)
        print(f"{good}/{len(results)} cases match")
    return 0 if all(r.match for r in results) else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="confsym",
        description="Exact conformal-symmetry toolkit for the Mobius space",
    )
    parser.add_argument("--p", type=int, default=2, help="positive part of the signature")
    parser.add_argument("--q", type=int, default=1, help="negative part of the signature")
    parser.add_argument("--d", type=int, default=2, help="square-free field parameter (r = sqrt d)")
    parser.add_argument("--machine", action="store_true", help="emit canonical JSON")
    sub = parser.add_subparsers(dest="command", required=True)

    for name, help_text in (
        ("classify", "orbit label of w relative to the removed lines u, v"),
        ("solve", "all symmetries at w preserving or swapping u, v"),
    ):
        sp = sub.add_parser(name, help=help_text)
        sp.add_argument("--file", help="JSON input file with p, q, d, u, v, w")
        sp.add_argument("--u", help="comma-separated scalar literals")
        sp.add_argument("--v", help="comma-separated scalar literals")
        sp.add_argument("--w", help="comma-separated scalar literals (default e_0)")

    wp = sub.add_parser("weyl", help="algebraic Weyl space computations")
    wp.add_argument("weyl_command", choices=["basis-dim", "prolongation"])
    wp.add_argument("--seed", type=int, default=0, help="seed for the random tensor")

    ep = sub.add_parser("extension", help="validate and analyze extensions")
    ep.add_argument("ext_command", choices=["validate", "curvature", "criterion", "make-flat"])
    ep.add_argument("--file", help="JSON extension file")
    ep.add_argument("--y", help="covector for the criterion (comma-separated literals)")
    ep.add_argument("--candidates", help="semicolon-separated candidate covectors")
    ep.add_argument("-o", "--output", help="output path for make-flat")

    sub.add_parser("reproduce-paper", help="run the six fixed desk cases and compare")
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        config = SessionConfig(p=args.p, q=args.q, d=args.d, machine=args.machine)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    handlers = {
        "classify": cmd_classify,
        "solve": cmd_solve,
        "weyl": cmd_weyl,
        "extension": cmd_extension,
        "reproduce-paper": cmd_reproduce,
    }
    return handlers[args.command](config, args)


if __name__ == "__main__":
    sys.exit(main())
