"""Command-line entry point: ``spreadcover <subcommand> ...``.

Exit codes: 0 success, 1 domain error (or an invalid cover under
``cover verify``), 2 usage error.  Payloads go to stdout, progress to stderr.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
from pathlib import Path

from .bounds import bound_report
from .cover import CliqueCover, greedy_cover, is_minimal, verify_cover
from .errors import SpreadCoverError
from .exact import SearchLimits, exact_alpha, exact_rho
from .orbits import classify_orbit, orbit_size, partitions
from .sequences import a053307, verify_alpha4_identity
from .tables import COLUMNS, TableSpec, emit_table, export_edge_ideal, stderr_log


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise _UsageError(message)


def _nd(p: argparse.ArgumentParser):
    p.add_argument("--n", type=int, required=True, help="number of variables")
    p.add_argument("--d", type=int, required=True, help="degree")


def _limits(args) -> SearchLimits:
    return SearchLimits.from_env(time_budget=getattr(args, "time", None))


def cmd_bounds(args, out) -> int:
    report = bound_report(args.n, args.d, args.greedy, args.exact, _limits(args))
    rows = report.to_rows()
    if args.format == "json":
        out.write(json.dumps({"n": args.n, "d": args.d, "entries": rows}, indent=2) + "\n")
    elif args.format == "csv":
        writer = csv.DictWriter(out, fieldnames=list(rows[0]) if rows else ["n", "d"], lineterminator="\n")
        writer.writeheader()
        writer.writerows(rows)
    else:
        out.write(f"S_{args.n}({args.d})\n")
        for e in report.entries:
            value = "—" if e.value is None else str(e.value)
            note = f"  ({e.note})" if e.note else ""
            out.write(f"  {e.quantity:<5} {e.kind:<5} {value:>8}  {e.method}{note}\n")
    for problem in report.check():
        stderr_log(f"inconsistent report: {problem}")
    return 1 if report.check() else 0


def cmd_cover_greedy(args, out) -> int:
    stderr_log(f"greedy cover of S_{args.n}({args.d})")
    cover = greedy_cover(args.n, args.d)
    text = cover.dumps() + "\n"
    if args.out:
        Path(args.out).write_text(text)
        stderr_log(f"wrote {len(cover)} cliques to {args.out}")
        out.write(json.dumps({"n": args.n, "d": args.d, "size": len(cover)}) + "\n")
    else:
        out.write(text)
    return 0


def cmd_cover_verify(args, out) -> int:
    cover = CliqueCover.loads(Path(args.file).read_text())
    report = verify_cover(cover)
    payload = {
        "n": cover.n,
        "d": cover.d,
        "size": len(cover),
        "valid": report.valid,
        "minimal": is_minimal(cover) if report.valid else False,
        "missing": [m.to_json() for m in report.missing],
    }
    out.write(json.dumps(payload) + "\n")
    return 0 if report.valid else 1


def cmd_exact(args, out) -> int:
    fn = exact_alpha if args.quantity == "alpha" else exact_rho
    res = fn(args.n, args.d, _limits(args))
    out.write(json.dumps(res.to_json()) + "\n")
    return 0


def cmd_orbits(args, out) -> int:
    rows = [
        (json.dumps(o.to_json()), str(orbit_size(o)), classify_orbit(o).value)
        for o in partitions(args.d, args.n)
    ]
    header = ("orbit", "size", "kind")
    widths = [max(len(h), *(len(r[i]) for r in rows)) for i, h in enumerate(header)]
    out.write("  ".join(h.ljust(w) for h, w in zip(header, widths)).rstrip() + "\n")
    for r in rows:
        out.write("  ".join(c.ljust(w) for c, w in zip(r, widths)).rstrip() + "\n")
    return 0


def cmd_seq_verify(args, out) -> int:
    report = verify_alpha4_identity(args.max_d, args.max_half)
    for line in report.lines():
        out.write(line + "\n")
    return 0 if report.passed else 1


def cmd_seq_a053307(args, out) -> int:
    out.write(f"{a053307(args.d, args.method)}\n")
    return 0


def cmd_table(args, out) -> int:
    columns = tuple(c.strip() for c in args.columns.split(",") if c.strip())
    spec = TableSpec(args.n, args.d_min, args.d_max, columns, args.format)
    out.write(emit_table(spec, _limits(args), stderr_log))
    return 0


def cmd_export_ideal(args, out) -> int:
    text = export_edge_ideal(args.n, args.d)
    if args.out:
        Path(args.out).write_text(text)
    else:
        out.write(text)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="spreadcover", description="Spreading and covering numbers of monomial graphs.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("bounds", help="all applicable bounds for one (n, d)")
    _nd(p)
    p.add_argument("--greedy", action="store_true")
    p.add_argument("--exact", action="store_true")
    p.add_argument("--time", type=float, help="search time budget in seconds")
    p.add_argument("--format", choices=("text", "json", "csv"), default="text")
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("cover", help="greedy covers and cover checking")
    csub = p.add_subparsers(dest="action", required=True, parser_class=_Parser)
    q = csub.add_parser("greedy")
    _nd(q)
    q.add_argument("--out", help="write the cover JSON here instead of stdout")
    q.set_defaults(func=cmd_cover_greedy)
    q = csub.add_parser("verify")
    q.add_argument("--file", required=True)
    q.set_defaults(func=cmd_cover_verify)

    p = sub.add_parser("exact", help="exhaustive alpha / rho on small instances")
    p.add_argument("quantity", choices=("alpha", "rho"))
    _nd(p)
    p.add_argument("--time", type=float, help="search time budget in seconds")
    p.set_defaults(func=cmd_exact)

    p = sub.add_parser("orbits", help="Sym(n)-orbits of S_n(d)")
    _nd(p)
    p.set_defaults(func=cmd_orbits)

    p = sub.add_parser("seq", help="A053307 and the alpha_4 identity")
    ssub = p.add_subparsers(dest="action", required=True, parser_class=_Parser)
    q = ssub.add_parser("verify")
    q.add_argument("--max-d", type=int, default=40)
    q.add_argument("--max-half", type=int, default=24, help="interleaving identities are checked for d <= this")
    q.set_defaults(func=cmd_seq_verify)
    q = ssub.add_parser("a053307")
    q.add_argument("--d", type=int, required=True)
    q.add_argument("--method", choices=("enumerate", "burnside", "gf"), default="enumerate")
    q.set_defaults(func=cmd_seq_a053307)

    p = sub.add_parser("table", help="comparison table of rho_n(d) upper bounds")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--d-min", type=int, required=True)
    p.add_argument("--d-max", type=int, required=True)
    p.add_argument("--columns", default="GGR,greedy", help=f"comma list from {','.join(COLUMNS)}")
    p.add_argument("--format", choices=("text", "csv", "json"), default="csv")
    p.add_argument("--time", type=float, help="search time budget for exact columns")
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("export-ideal", help="edge-ideal generators for a computer-algebra system")
    _nd(p)
    p.add_argument("--out")
    p.set_defaults(func=cmd_export_ideal)
    return parser


def run(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except _UsageError:
        return 2
    except SystemExit as exc:  # --help
        return int(exc.code or 0)
    try:
        return args.func(args, out)
    except SpreadCoverError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def main():
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
