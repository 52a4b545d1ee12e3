"""Command-line surface tying the modules together.

Exit codes: 0 success, 1 domain failure (non-solution input, invalid
dissection), 2 usage error (argparse's default).  Every command's output is
deterministic for a fixed invocation, including parallel runs.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Sequence

from . import (
    asymptotics,
    enumeration,
    formulas,
    geometry,
    matrixeq,
    render,
    series,
    surgery,
    toric,
)

# table cells where the printed source value is a suspected misprint: the
# formula value disagrees with the printed 200720 and breaks row monotonicity
KNOWN_TABLE_DISCREPANCIES = {("Qnk", 3, 17): 200720}


def _out_path(args) -> object:
    if args.output:
        return open(args.output, "w", encoding="utf-8")
    default_dir = os.environ.get("QUIDDITY_OUTPUT_DIR")
    if default_dir:
        os.makedirs(default_dir, exist_ok=True)
        return open(os.path.join(default_dir, f"{args.command}.txt"), "w", encoding="utf-8")
    return sys.stdout


def _emit(args, text: str) -> None:
    f = _out_path(args)
    f.write(text)
    if f is not sys.stdout:
        f.close()


def _univariate_rows(kind: str, max_n: int, ell: int) -> list[tuple[int, int]]:
    if kind == "Q":
        return [(n, formulas.Q_total(n)) for n in range(max_n + 1)]
    if kind == "P":
        return [(n, formulas.P_total(n)) for n in range(max_n + 1)]
    if kind == "D":
        return [(n, formulas.D_l_total(ell, n)) for n in range(max_n + 1)]
    if kind == "blowups":
        return [(n, formulas.blowup_count(n)) for n in range(1, max_n + 1)]
    raise ValueError(kind)


def _bivariate_rows(kind: str, max_n: int, ell: int) -> tuple[list[list[object]], list[str]]:
    period = ell if kind == "Dlnm" else 3
    max_k = max(0, (max_n - 1) // period)  # rows with k >= n/period are all zero
    header = ["k\\n", *[str(n) for n in range(max_n + 1)]]
    grid: list[list[object]] = []
    notes: list[str] = []
    fn = {"Qnk": formulas.Q_nk, "Pnk": formulas.P_nk}.get(kind)
    for k in range(max_k + 1):
        row: list[object] = [str(k)]
        for n in range(max_n + 1):
            if fn is not None:
                v = fn(n, k)
            else:
                v = formulas.D_l_nm(ell, n, n - ell * k)
            row.append(v if v else "")
            printed = KNOWN_TABLE_DISCREPANCIES.get((kind, k, n))
            if printed is not None and v != printed:
                notes.append(
                    f"cell (k={k}, n={n}) computed {v}; the printed source "
                    f"value {printed} is a suspected misprint"
                )
        grid.append(row)
    return [header, *grid], notes


def cmd_table(args) -> int:
    kind = args.kind
    fmt = args.format
    univariate = kind in ("Q", "P", "D", "blowups")
    if univariate:
        rows = _univariate_rows(kind, args.max_n, args.ell)
        if fmt == "bfile":
            text = "".join(f"{n} {v}\n" for n, v in rows)
        elif fmt == "json":
            text = json.dumps({"kind": kind, "values": {str(n): v for n, v in rows}}, indent=2) + "\n"
        elif fmt == "csv":
            text = "n,value\n" + "".join(f"{n},{v}\n" for n, v in rows)
        else:
            width = max(len(str(v)) for _, v in rows)
            text = "".join(f"{n:>4}  {v:>{width}}\n" for n, v in rows)
        _emit(args, text)
        return 0
    if fmt == "bfile":
        print("bfile format is only available for univariate tables", file=sys.stderr)
        return 2
    grid, notes = _bivariate_rows(kind, args.max_n, args.ell)
    if fmt == "json":
        payload = {
            "kind": kind,
            "rows": {row[0]: [v if v != "" else 0 for v in row[1:]] for row in grid[1:]},
            "notes": notes,
        }
        text = json.dumps(payload, indent=2) + "\n"
    elif fmt == "csv":
        lines = [",".join(str(v) for v in row) for row in grid]
        lines += [f"# {note}" for note in notes]
        text = "\n".join(lines) + "\n"
    else:
        widths = [max(len(str(row[c])) for row in grid) for c in range(len(grid[0]))]
        lines = [
            "  ".join(f"{str(v):>{w}}" for v, w in zip(row, widths)) for row in grid
        ]
        lines += [f"note: {note}" for note in notes]
        text = "\n".join(lines) + "\n"
    _emit(args, text)
    return 0


def _parse_sequence(text: str) -> tuple[int, ...] | None:
    try:
        return tuple(int(part) for part in text.replace(" ", "").split(",") if part != "")
    except ValueError:
        return None


def cmd_verify(args) -> int:
    entries = _parse_sequence(args.sequence)
    if not entries:
        print("expected a non-empty comma-separated integer sequence", file=sys.stderr)
        return 2
    m = matrixeq.cc_product(entries)
    lines = [f"sequence: {','.join(map(str, entries))}"]
    lines.append(f"product:  [[{m.a}, {m.b}], [{m.c}, {m.d}]]")
    hj = matrixeq.hj_value(entries)
    lines.append(f"hirzebruch-jung value: {hj}")
    sol = matrixeq.is_cc_solution(entries)
    if sol is None:
        lines.append("not a solution of the matrix equation")
        _emit(args, "\n".join(lines) + "\n")
        return 1
    lines.append(
        f"solution: N={sol.N} T={sol.T} k={sol.k} sign={'+1' if sol.sign > 0 else '-1'}"
    )
    if all(a >= 1 for a in entries):
        witness = _find_witness(entries)
        lines.append(f"witness 3-periodic dissection: {witness.serialize()}")
    _emit(args, "\n".join(lines) + "\n")
    return 0


def _find_witness(entries: tuple[int, ...]) -> geometry.Dissection:
    n = len(entries) - 2
    for d in enumeration.enumerate_dissections(n, enumeration.periodic_filter(3)):
        if geometry.quiddity_of(d) == entries:
            return d
    raise AssertionError("positive solutions always have a dissection witness")


def cmd_canonicalize(args) -> int:
    try:
        d = geometry.parse(args.dissection)
    except geometry.DissectionParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return 1
    try:
        canonical, trace = surgery.canonicalize(d, with_trace=True)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    lines = [canonical.serialize()]
    if args.trace:
        for cell_vertices, mv in trace:
            cell_text = ",".join(map(str, cell_vertices))
            lines.append(f"cell={cell_text} s={mv.s} s'={mv.s2} kind={mv.kind}")
    _emit(args, "\n".join(lines) + "\n")
    return 0


def cmd_enumerate(args) -> int:
    if args.n < 1:
        print("n must be at least 1", file=sys.stderr)
        return 2
    cell_filter = enumeration.periodic_filter(args.ell) if args.ell else None
    out = []
    for d in enumeration.enumerate_dissections(args.n, cell_filter):
        out.append(d.serialize())
    _emit(args, "\n".join(out) + "\n")
    return 0


def cmd_count(args) -> int:
    table = (
        enumeration.count_quiddities(args.n, args.ell)
        if args.quiddities
        else enumeration.count_dissections(args.n, args.ell)
    )
    payload = {
        "n": table.n,
        "ell": args.ell,
        "counted": "quiddities" if args.quiddities else "dissections",
        "by_m": {str(m): c for m, c in sorted(table.by_m.items())},
        "total": table.total(),
    }
    _emit(args, json.dumps(payload, indent=2) + "\n")
    return 0


def cmd_solutions(args) -> int:
    sols = matrixeq.enumerate_positive_solutions(
        args.N, bound=max(args.N, matrixeq.DEFAULT_SEARCH_BOUND), jobs=args.jobs
    )
    text = "".join(",".join(map(str, s)) + "\n" for s in sorted(sols))
    _emit(args, text)
    return 0


def cmd_constants(args) -> int:
    if args.ell is not None:
        pc = asymptotics.periodic_constants(args.ell)
        payload = {
            "ell": pc.ell,
            "nu": pc.nu,
            "rho": pc.rho,
            "gamma": pc.gamma,
            "error_bound": asymptotics.DEFAULT_TOL,
            "conditional": pc.conditional,
            "note": "gamma is conditional on the unique-dominant-singularity "
            "hypothesis (verified by software for ell <= 16, unproven in general)",
        }
    else:
        c = asymptotics.constants()
        payload = {
            "rho": c.rho,
            "nu": c.nu,
            "gamma_P": c.gamma_P,
            "gamma_Q": c.gamma_Q,
            "error_bound": c.error_bound,
        }
    _emit(args, json.dumps(payload, indent=2) + "\n")
    return 0


def cmd_series(args) -> int:
    s = series.solve_fixed_point(args.equation, args.order, ell=args.ell)
    if isinstance(s, series.USeries):
        if args.format == "bfile":
            text = "".join(f"{n} {c}\n" for n, c in enumerate(s.coeffs))
        else:
            text = json.dumps(s.coeffs) + "\n"
    elif isinstance(s, series.BSeries):
        payload = {f"{n},{m}": s.coeff(n, m) for (n, m) in sorted(s.support())}
        text = json.dumps(payload, indent=2) + "\n"
    else:
        payload = {",".join(map(str, k)): v for k, v in sorted(s.coeffs.items())}
        text = json.dumps(payload, indent=2) + "\n"
    _emit(args, text)
    return 0


def cmd_fans(args) -> int:
    sequences = sorted(toric.enumerate_blowups(args.n, bound=max(args.n, toric.DEFAULT_BLOWUP_BOUND)))
    if args.census:
        census = {t: 0 for t in "abcd"}
        for a in sequences:
            census[toric.classify_type(a)] += 1
        payload = {"n": args.n, "total": len(sequences), "by_type": census}
        _emit(args, json.dumps(payload, indent=2) + "\n")
        return 0
    lines = []
    for a in sequences:
        body = ",".join(map(str, a))
        if args.types:
            lines.append(f"{body}  type={toric.classify_type(a)}")
        else:
            lines.append(body)
    _emit(args, "\n".join(lines) + "\n")
    return 0


def cmd_render(args) -> int:
    try:
        d = geometry.parse(args.dissection)
    except geometry.DissectionParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return 1
    labels = "z3" if args.z3_labels else args.labels
    try:
        if args.style == "svg":
            text = render.render_svg(d, labels=labels)
        else:
            text = render.render_ascii(d, labels=labels)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    _emit(args, text)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="quiddity",
        description="Positive solutions of the Conway-Coxeter matrix equation: "
        "tables, series, canonical forms, fans.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("table", help="emit a coefficient table")
    p.add_argument("kind", choices=["Q", "P", "D", "Qnk", "Pnk", "Dlnm", "blowups"])
    p.add_argument("--max-n", type=int, default=14)
    p.add_argument("--ell", type=int, default=1, help="period for D/Dlnm tables")
    p.add_argument("--format", choices=["text", "csv", "bfile", "json"], default="text")
    p.add_argument("--output", help="write to this path instead of stdout")
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("verify", help="check a sequence against the matrix equation")
    p.add_argument("sequence", help="comma-separated integers, e.g. 1,3,1,2,2")
    p.add_argument("--output")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("canonicalize", help="maximally open representative")
    p.add_argument("dissection", help="serialization n=<n>;chords=(i,j),...")
    p.add_argument("--trace", action="store_true", help="print the applied openings")
    p.add_argument("--output")
    p.set_defaults(func=cmd_canonicalize)

    p = sub.add_parser("enumerate", help="stream dissections, one per line")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--ell", type=int, default=0, help="restrict to ell-periodic (0 = all)")
    p.add_argument("--output")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("count", help="count dissections or quiddities by cell count")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--ell", type=int, default=3)
    p.add_argument("--quiddities", action="store_true")
    p.add_argument("--output")
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("solutions", help="all positive solutions of length N")
    p.add_argument("--N", type=int, required=True)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--output")
    p.set_defaults(func=cmd_solutions)

    p = sub.add_parser("constants", help="asymptotic constants as JSON")
    p.add_argument("--ell", type=int, default=None)
    p.add_argument("--output")
    p.set_defaults(func=cmd_constants)

    p = sub.add_parser("series", help="solve a functional equation")
    p.add_argument("equation", choices=list(series.EQUATIONS))
    p.add_argument("--order", type=int, default=10)
    p.add_argument("--ell", type=int, default=None)
    p.add_argument("--format", choices=["json", "bfile"], default="json")
    p.add_argument("--output")
    p.set_defaults(func=cmd_series)

    p = sub.add_parser("fans", help="blow-up sequences of the plane fan")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--types", action="store_true", help="label each sequence")
    p.add_argument("--census", action="store_true", help="JSON type summary")
    p.add_argument("--output")
    p.set_defaults(func=cmd_fans)

    p = sub.add_parser("render", help="draw a dissection")
    p.add_argument("dissection")
    p.add_argument("--style", choices=["ascii", "svg"], default="ascii")
    p.add_argument("--labels", choices=["vertex", "quiddity"], default="quiddity")
    p.add_argument("--z3-labels", action="store_true", help="annotate Z3-indices")
    p.add_argument("--output")
    p.set_defaults(func=cmd_render)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
