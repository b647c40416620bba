"""Bound comparison tables and the edge-ideal exporter."""

from __future__ import annotations

import csv
import io
import json
import sys
from dataclasses import dataclass

from .bounds import alpha4_exact, ggr_bounds, hw_upper
from .errors import InapplicableBoundError, InvalidArgumentError, LimitExceededError
from .monomials import DEFAULT_VERTEX_CAP, build_graph

COLUMNS = ("GGR", "HW", "greedy", "exact_alpha", "exact_rho", "alpha4")
LABELS = {
    "GGR": "GGR",
    "HW": "HW",
    "greedy": "4.1",
    "exact_alpha": "alpha_exact",
    "exact_rho": "rho_exact",
    "alpha4": "alpha4",
}
FORMATS = ("text", "csv", "json")
BLANK = "—"


@dataclass(frozen=True)
class TableSpec:
    n: int
    d_min: int
    d_max: int
    columns: tuple[str, ...] = ("GGR", "greedy")
    format: str = "csv"

    def __post_init__(self):
        if self.n < 1:
            raise InvalidArgumentError("n must be >= 1")
        if self.d_min < 0 or self.d_max < self.d_min:
            raise InvalidArgumentError(f"empty d range {self.d_min}..{self.d_max}")
        bad = [c for c in self.columns if c not in COLUMNS]
        if bad or not self.columns:
            raise InvalidArgumentError(f"unknown columns {bad}; choose from {', '.join(COLUMNS)}")
        if self.format not in FORMATS:
            raise InvalidArgumentError(f"format must be one of {FORMATS}")

    @property
    def d_range(self) -> range:
        return range(self.d_min, self.d_max + 1)


def _cell(column: str, n: int, d: int, lim, log) -> int | None:
    try:
        if column == "GGR":
            return ggr_bounds(n, d)[1]
        if column == "HW":
            return hw_upper(d) if n == 4 else None
        if column == "alpha4":
            return alpha4_exact(d) if n == 4 else None
        if column == "greedy":
            if n < 2 or d < 1:
                return None
            from .cover import greedy_cover

            log(f"greedy cover n={n} d={d}")
            return len(greedy_cover(n, d))
        from .exact import SearchLimits, exact_alpha, exact_rho

        lim = lim or SearchLimits.from_env()
        log(f"{column} n={n} d={d}")
        res = exact_alpha(n, d, lim) if column == "exact_alpha" else exact_rho(n, d, lim)
        if not res.proven_optimal:
            log(f"  {column} n={n} d={d}: time budget exhausted, best {res.value} not proven")
            return None
        return res.value
    except (InapplicableBoundError, LimitExceededError, InvalidArgumentError) as exc:
        log(f"  {column} n={n} d={d}: {exc}")
        return None


def table_rows(spec: TableSpec, lim=None, log=None) -> list[dict]:
    log = log or (lambda msg: None)
    rows = []
    for d in spec.d_range:
        row = {"d": d}
        for col in spec.columns:
            row[LABELS[col]] = _cell(col, spec.n, d, lim, log)
        rows.append(row)
    return rows


def emit_table(spec: TableSpec, lim=None, log=None) -> str:
    rows = table_rows(spec, lim, log)
    header = ["d"] + [LABELS[c] for c in spec.columns]
    if spec.format == "json":
        return json.dumps({"n": spec.n, "rows": rows}, indent=2, ensure_ascii=False) + "\n"
    cells = [[str(r[h]) if r[h] is not None else BLANK for h in header] for r in rows]
    if spec.format == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(header)
        writer.writerows(cells)
        return buf.getvalue()
    widths = [max(len(h), *(len(c[i]) for c in cells)) for i, h in enumerate(header)]
    lines = ["  ".join(h.rjust(w) for h, w in zip(header, widths))]
    lines.append("  ".join("-" * w for w in widths))
    lines += ["  ".join(c.rjust(w) for c, w in zip(row, widths)) for row in cells]
    return "\n".join(lines) + "\n"


def export_edge_ideal(n: int, d: int, cap: int = DEFAULT_VERTEX_CAP) -> str:
    """Quadratic generators z_a*z_b of the edge ideal of S_n(d), one per line,
    preceded by ``--`` comment lines naming each variable."""
    g = build_graph(n, d, cap)
    lines = [f"-- edge ideal of S_{n}({d}): {g.num_vertices} variables, {g.num_edges()} generators"]
    lines += [f"-- z{i + 1} = {m.to_text()}" for i, m in enumerate(g.vertices)]
    lines += [f"z{i + 1}*z{j + 1}" for i, j in g.edges()]
    return "\n".join(lines) + "\n"


def stderr_log(msg: str):
    print(msg, file=sys.stderr, flush=True)
