"""Command-line front end: ``gen``, ``solve``, ``verify`` and ``bench``.

Exit status is 0 on success, 1 on a domain error (bad input, singular matrix,
zero pivot) and 2 on a usage error.
"""
from __future__ import annotations

import argparse
import csv
import json
import statistics
import sys
import time
from typing import List, Optional, Sequence

from .core import dense_matrix, determinant, factor, solve_sbtls
from .errors import BorderSolveError
from .generators import FAMILIES, FamilySpec, SplitMix64, generate, known_solution
from .io import read_system, write_system
from .oracle import bareiss_solve
from .report import METHODS, run_method, solve_report
from .scalar import ScalarMode
from .smw import solve_smw

DEFAULT_BENCH_SIZES = "500,1000,5000,10000"
# dense O(n^3) elimination is skipped above this size in bench
GAUSS_MAX_N = 2000
BENCH_REPEATS = 3


def _csv_ints(text: str) -> List[int]:
    try:
        values = [int(v) for v in text.split(",") if v.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")
    if not values:
        raise argparse.ArgumentTypeError("empty size list")
    return values


def _csv_methods(text: str) -> List[str]:
    values = [v.strip() for v in text.split(",") if v.strip()]
    bad = [v for v in values if v not in METHODS]
    if bad or not values:
        raise argparse.ArgumentTypeError(
            f"unknown method(s) {', '.join(bad) or '(none)'}; choose from {', '.join(METHODS)}"
        )
    return values


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="bordersolve",
        description="Solve bordered tridiagonal linear systems (symbolic LU and Woodbury block solvers).",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    g = sub.add_parser("gen", help="write a system file for a problem family")
    g.add_argument("--family", required=True, choices=FAMILIES)
    g.add_argument("--n", type=int, default=7)
    g.add_argument("--seed", type=int, default=0)
    g.add_argument("-o", "--output", required=True)

    s = sub.add_parser("solve", help="solve a system file")
    s.add_argument("-i", "--input", required=True)
    s.add_argument("--method", required=True, choices=METHODS)
    s.add_argument("--mode", required=True, choices=[m.value for m in ScalarMode])
    s.add_argument("-o", "--output")
    s.add_argument("--format", choices=("json", "table"), default="table")

    v = sub.add_parser("verify", help="cross-check the solvers against exact elimination")
    v.add_argument("--trials", type=int, required=True)
    v.add_argument("--n-min", type=int, required=True)
    v.add_argument("--n-max", type=int, required=True)
    v.add_argument("--seed", type=int, required=True)

    b = sub.add_parser("bench", help="error/time/flops table over sizes and methods")
    b.add_argument("--family", default="example33", choices=FAMILIES)
    b.add_argument("--sizes", type=_csv_ints, default=_csv_ints(DEFAULT_BENCH_SIZES))
    b.add_argument("--methods", type=_csv_methods, default=list(METHODS))
    b.add_argument("--format", choices=("table", "csv"), default="table")
    return parser


def _print_table(rows: Sequence[Sequence], header: Sequence[str], out) -> None:
    cells = [list(map(str, header))] + [[str(c) for c in r] for r in rows]
    widths = [max(len(r[k]) for r in cells) for k in range(len(header))]
    for i, r in enumerate(cells):
        out.write("  ".join(c.rjust(w) for c, w in zip(r, widths)).rstrip() + "\n")
        if i == 0:
            out.write("  ".join("-" * w for w in widths) + "\n")


def _cmd_gen(args, out) -> int:
    spec = FamilySpec(args.family, args.n, args.seed)
    S = generate(spec)
    write_system(S, args.output)
    out.write(f"wrote {args.family} system (n={S.n}) to {args.output}\n")
    return 0


def _cmd_solve(args, out) -> int:
    S = read_system(args.input)
    report = solve_report(S, args.method, args.mode)
    if args.output:
        with open(args.output, "w") as fh:
            json.dump(report.to_dict(), fh, indent=1)
            fh.write("\n")
    if args.format == "json":
        json.dump(report.to_dict(), out, indent=1)
        out.write("\n")
    else:
        out.write(f"method        {report.method}\n")
        out.write(f"mode          {report.mode}\n")
        out.write(f"n             {S.n}\n")
        out.write(f"determinant   {report.determinant}\n")
        out.write(f"flops         {report.flops}\n")
        out.write(f"substitutions {report.substitutions}\n")
        out.write(f"residual_inf  {report.residual_inf}\n")
        out.write(f"wall_time_s   {report.wall_time_s:.6f}\n")
        _print_table([(k + 1, v) for k, v in enumerate(report.x)], ("i", "x"), out)
    return 0


def _cmd_verify(args, out, parser) -> int:
    if args.n_min <= 3 or args.n_max < args.n_min:
        parser.error("need 3 < n-min <= n-max")
    if args.trials < 1:
        parser.error("--trials must be positive")
    rng = SplitMix64(args.seed)
    checks = {"sbtls=bareiss": 0, "smw=bareiss": 0, "det=bareiss": 0}
    failed_trials = 0
    for _ in range(args.trials):
        n = rng.randint(args.n_min, args.n_max)
        S = generate(FamilySpec("random", n, rng.next_u64()))
        x_ref, det_ref = bareiss_solve(dense_matrix(S), S.y)
        ok = {
            "sbtls=bareiss": list(solve_sbtls(S, ScalarMode.EXACT).x) == x_ref,
            "smw=bareiss": list(solve_smw(S, ScalarMode.EXACT).x) == x_ref,
            "det=bareiss": determinant(factor(S, ScalarMode.EXACT)) == det_ref,
        }
        for name, good in ok.items():
            checks[name] += good
        failed_trials += not all(ok.values())
    for name, passed in checks.items():
        out.write(f"{name:14s} pass {passed:5d}  fail {args.trials - passed:5d}\n")
    out.write(f"trials {args.trials}: {args.trials - failed_trials} passed, {failed_trials} failed\n")
    return 0 if failed_trials == 0 else 1


def bench_rows(family: str, sizes: Sequence[int], methods: Sequence[str],
               repeats: int = BENCH_REPEATS) -> List[dict]:
    """One row per (size, method): infinity-norm error vs the exact solution, median time, flops."""
    rows = []
    for n in sizes:
        spec = FamilySpec(family, n, 0)
        S = generate(spec)
        exact = known_solution(spec)
        if exact is None:
            exact = bareiss_solve(dense_matrix(S), S.y)[0]
        exact_f = [float(v) for v in exact]
        for method in methods:
            row = {"n": S.n, "method": method, "error_inf": "", "time_s": "",
                   "flops": "", "status": "ok"}
            if method == "gauss" and S.n > GAUSS_MAX_N:
                row["status"] = f"skipped (n > {GAUSS_MAX_N})"
                rows.append(row)
                continue
            times = []
            try:
                for _ in range(repeats):
                    t0 = time.perf_counter()
                    x, _, flops, _ = run_method(S, method, ScalarMode.F64)
                    times.append(time.perf_counter() - t0)
            except BorderSolveError as exc:
                row["status"] = type(exc).__name__
                rows.append(row)
                continue
            row["error_inf"] = max(abs(a - b) for a, b in zip(x, exact_f))
            row["time_s"] = statistics.median(times)
            row["flops"] = flops
            rows.append(row)
    return rows


def _cmd_bench(args, out, parser) -> int:
    if any(n <= 3 for n in args.sizes):
        parser.error("all sizes must exceed 3")
    rows = bench_rows(args.family, args.sizes, args.methods)
    header = ("n", "method", "error_inf", "time_s", "flops", "status")
    if args.format == "csv":
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(header)
        for r in rows:
            writer.writerow([r[h] if not isinstance(r[h], float) else repr(r[h]) for h in header])
    else:
        fmt = []
        for r in rows:
            err = f"{r['error_inf']:.4e}" if r["error_inf"] != "" else "-"
            tm = f"{r['time_s']:.4f}" if r["time_s"] != "" else "-"
            fmt.append((r["n"], r["method"], err, tm, r["flops"] if r["flops"] != "" else "-",
                        r["status"]))
        _print_table(fmt, header, out)
    return 0


def main(argv: Optional[Sequence[str]] = None, out=None, err=None) -> int:
    out = out if out is not None else sys.stdout
    err = err if err is not None else sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        if args.command == "gen":
            return _cmd_gen(args, out)
        if args.command == "solve":
            return _cmd_solve(args, out)
        if args.command == "verify":
            return _cmd_verify(args, out, parser)
        return _cmd_bench(args, out, parser)
    except SystemExit as exc:
        return int(exc.code or 0)
    except BorderSolveError as exc:
        err.write(f"error: {type(exc).__name__}: {exc}\n")
        return 1
    except OSError as exc:
        err.write(f"error: {exc}\n")
        return 1


if __name__ == "__main__":
    sys.exit(main())
