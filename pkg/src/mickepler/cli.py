"""Command-line front end: spectra, coefficient tables, sweeps, verification.

Exit codes: 0 success, 1 verification failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys

import numpy as np

from .qnum import (
    QuantumNumberError,
    SystemParams,
    derive_constants,
    energy,
    enumerate_m_blocks,
    parse_half_integer,
)
from .spheroidal import solve, sweep
from .interbasis import ExpansionMatrix, expansion_matrix, inverse_expansion_matrix
from .verify import run_suite, summary_table, to_json_lines

MATRIX_KINDS = (
    "parabolic-in-spherical",    # columns n1, rows j
    "spherical-in-parabolic",    # columns j, rows n1
    "spheroidal-in-spherical",   # columns q, rows j (needs R)
    "spheroidal-in-parabolic",   # columns q, rows n1 (needs R)
)


def _fmt(x: float) -> str:
    return f"{float(x):.17g}"


def _emit(text: str, out: str | None) -> None:
    if out:
        with open(out, "w") as fh:
            fh.write(text if text.endswith("\n") else text + "\n")
    else:
        print(text)


def _csv_table(header: list[str], rows: list[list]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    for row in rows:
        writer.writerow([cell if isinstance(cell, str) else _fmt(cell) for cell in row])
    return buf.getvalue().rstrip("\n")


def _json_table(header: list[str], rows: list[list]) -> str:
    return json.dumps({"columns": header, "rows": rows})


def _table(args, header: list[str], rows: list[list]) -> str:
    if args.format == "json":
        return _json_table(header, rows)
    return _csv_table(header, rows)


def _params(args) -> SystemParams:
    return SystemParams(two_s=parse_half_integer(args.s), c1=args.c1, c2=args.c2)


def _parse_grid(spec: str) -> list[float]:
    try:
        start, stop, steps = spec.split(":")
        grid = np.linspace(float(start), float(stop), int(steps))
    except Exception as exc:
        raise ValueError(f"bad R grid {spec!r}, expected start:stop:steps") from exc
    if grid.size < 1:
        raise ValueError("R grid must contain at least one point")
    return [float(r) for r in grid]


def cmd_spectrum(args) -> int:
    params = _params(args)
    parity = params.two_s % 2
    rows = []
    for two_n in range(1, int(2 * args.n_max) + 1):
        if two_n % 2 != parity:
            continue
        for two_m in enumerate_m_blocks(params, two_n):
            dc = derive_constants(params, two_m)
            rows.append([two_n / 2.0, two_m / 2.0, dc.delta1, dc.delta2,
                         energy(params, two_m, two_n)])
    _emit(_table(args, ["n", "m", "delta1", "delta2", "energy"], rows), args.out)
    return 0


def _matrix_output(args, matrix: ExpansionMatrix) -> str:
    if args.format == "json":
        return json.dumps({
            "kind": args.kind,
            "row_labels": list(matrix.row_labels),
            "col_labels": list(matrix.col_labels),
            "entries": [[float(v) for v in row] for row in matrix.entries],
        })
    header = ["row"] + list(matrix.col_labels)
    rows = [[label] + [v for v in matrix.entries[i]]
            for i, label in enumerate(matrix.row_labels)]
    return _csv_table(header, rows)


def cmd_coefficients(args) -> int:
    params = _params(args)
    two_n = parse_half_integer(args.n)
    two_m = parse_half_integer(args.m)
    if args.kind == "parabolic-in-spherical":
        matrix = expansion_matrix(params, two_n, two_m)
    elif args.kind == "spherical-in-parabolic":
        matrix = inverse_expansion_matrix(params, two_n, two_m)
    else:
        if args.R is None:
            raise ValueError(f"--R is required for kind {args.kind}")
        solution = solve(params, two_n, two_m, args.R)
        matrix = (solution.spherical_coefficients
                  if args.kind == "spheroidal-in-spherical"
                  else solution.parabolic_coefficients)
    _emit(_matrix_output(args, matrix), args.out)
    return 0


def cmd_sweep(args) -> int:
    params = _params(args)
    two_n = parse_half_integer(args.n)
    two_m = parse_half_integer(args.m)
    grid = _parse_grid(args.R_grid) if args.R_grid else [args.R]
    if grid == [None]:
        raise ValueError("sweep needs --R or --R-grid")
    solutions = sweep(params, two_n, two_m, grid)
    header = ["R", "q", "lambda"]
    d = solutions[0].spherical_coefficients.dim
    if args.vectors:
        header += [f"u[{lab}]" for lab in solutions[0].spherical_coefficients.row_labels]
        header += [f"v[{lab}]" for lab in solutions[0].parabolic_coefficients.row_labels]
    rows = []
    for sol in solutions:
        for q in range(d):
            row = [sol.R, float(q), sol.lambdas[q]]
            if args.vectors:
                row += [v for v in sol.spherical_coefficients.entries[:, q]]
                row += [v for v in sol.parabolic_coefficients.entries[:, q]]
            rows.append(row)
    _emit(_table(args, header, rows), args.out)
    return 0


def cmd_verify(args) -> int:
    params = _params(args)
    r_list = _parse_grid(args.R_grid) if args.R_grid else [0.1, 1.0, 10.0, 100.0]
    reports = run_suite(params, n_max=args.n_max, r_list=r_list, seed=args.seed)
    if args.format == "json":
        _emit(to_json_lines(reports), args.out)
    else:
        _emit(summary_table(reports), args.out)
    return 0 if all(r.passed for r in reports) else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="mickepler",
        description="Bound-state spectral analysis of the generalized "
                    "MIC-Kepler system (dyon with ring-shaped perturbations).",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--s", default="0",
                       help="monopole number, integer or half-integer (e.g. 1/2)")
        p.add_argument("--c1", type=float, default=0.0)
        p.add_argument("--c2", type=float, default=0.0)
        p.add_argument("--format", choices=("csv", "json"), default="csv")
        p.add_argument("--out", default=None, help="output path (default stdout)")
        p.add_argument("--seed", type=int, default=0)

    p = sub.add_parser("spectrum", help="energy table for all blocks up to n-max")
    common(p)
    p.add_argument("--n-max", type=float, default=4.0, dest="n_max")
    p.set_defaults(func=cmd_spectrum)

    p = sub.add_parser("coefficients", help="interbasis coefficient matrices")
    common(p)
    p.add_argument("--kind", choices=MATRIX_KINDS, default="parabolic-in-spherical")
    p.add_argument("--n", required=True, help="principal quantum number (half-integers ok)")
    p.add_argument("--m", required=True, help="azimuthal quantum number")
    p.add_argument("--R", type=float, default=None, help="interfocus distance")
    p.set_defaults(func=cmd_coefficients)

    p = sub.add_parser("sweep", help="separation constants along an R grid")
    common(p)
    p.add_argument("--n", required=True)
    p.add_argument("--m", required=True)
    p.add_argument("--R", type=float, default=None)
    p.add_argument("--R-grid", default=None, dest="R_grid",
                   help="start:stop:steps (linear grid)")
    p.add_argument("--vectors", action="store_true",
                   help="include eigenvector columns")
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("verify", help="run the identity verification suite")
    common(p)
    p.add_argument("--n-max", type=float, default=4.0, dest="n_max")
    p.add_argument("--R-grid", default=None, dest="R_grid",
                   help="start:stop:steps (default 0.1,1,10,100)")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (QuantumNumberError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
