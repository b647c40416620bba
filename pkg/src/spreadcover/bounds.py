"""Closed-form values and bounds for alpha_n(d) and rho_n(d).

Throughout, ``rho(n, d)`` is the minimum number of upward cliques (bases of
degree d - 1) covering every vertex of S_n(d).  All arithmetic is exact.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import ceil, comb

from .errors import InapplicableBoundError, InvalidArgumentError, LimitExceededError

METHODS = frozenset(
    {
        "GGR",
        "HW",
        "alpha4-formula",
        "alpha2-formula",
        "rho2-formula",
        "n1-formula",
        "greedy",
        "exact-search",
    }
)


def v(n: int, d: int) -> int:
    """Number of degree-d monomials in n variables."""
    if n < 1 or d < 0:
        raise InvalidArgumentError(f"v needs n >= 1, d >= 0 (got n={n}, d={d})")
    return comb(n + d - 1, d)


def ggr_bounds_exact(n: int, d: int) -> tuple[Fraction, Fraction]:
    """The real-valued sandwich v_n(d)/n <= alpha <= rho <= v_n(d)/n + (n-1)/n v_{n-1}(d)."""
    if n < 2 or d < 2:
        raise InapplicableBoundError(f"GGR bounds need n >= 2 and d >= 2 (got n={n}, d={d})")
    low = Fraction(v(n, d), n)
    return low, low + Fraction(n - 1, n) * v(n - 1, d)


def ggr_bounds(n: int, d: int) -> tuple[int, int]:
    """Integer (alpha_lower, rho_upper), both rounded up.

    Rounding the upper bound up is how the published comparison tables print
    it; ``ggr_bounds_exact`` exposes the rational values.
    """
    low, high = ggr_bounds_exact(n, d)
    return ceil(low), ceil(high)


def hw_upper(d: int) -> int:
    """Hulett-Will upper bound on rho_4(d), valid for d >= 5."""
    if d < 5:
        raise InapplicableBoundError(f"HW bound needs d >= 5 (got {d})")
    if d % 2:
        num = d**3 + 15 * d**2 - 61 * d + 261
    else:
        num = d**3 + 15 * d**2 - 34 * d + 240
    q, r = divmod(num, 24)
    assert r == 0, f"HW polynomial not integral at d={d}"
    return q


def alpha4_exact(d: int) -> int:
    if d < 0:
        raise InvalidArgumentError(f"d must be >= 0 (got {d})")
    value = Fraction(v(4, d), 4)
    if d % 2 == 0:
        value += Fraction(3 * d + 6, 8)
    if value.denominator != 1:
        raise AssertionError(f"alpha_4({d}) formula gave non-integer {value}")
    return int(value)


def alpha2_exact(d: int) -> int:
    return d // 2 + 1


def rho2_exact(d: int) -> int:
    """rho_2(d) for d >= 1: the covering number of M_d from M_{d-1}."""
    if d < 1:
        raise InapplicableBoundError("rho needs d >= 1")
    return -(-(d - 1) // 2) + 1


def small_n_exact(n: int, d: int) -> tuple[int, int | None] | None:
    """Known exact (alpha, rho) for n = 1, 2 and alpha for n = 4; else None."""
    if d < 0:
        return None
    if n == 1:
        return 1, (1 if d >= 1 else None)
    if n == 2:
        return alpha2_exact(d), (rho2_exact(d) if d >= 1 else None)
    if n == 4:
        return alpha4_exact(d), None
    return None


@dataclass(frozen=True)
class BoundEntry:
    quantity: str  # "alpha" | "rho"
    kind: str  # "lower" | "upper" | "exact"
    value: int | None
    method: str
    note: str = ""

    def __post_init__(self):
        if self.quantity not in ("alpha", "rho"):
            raise InvalidArgumentError(f"bad quantity {self.quantity!r}")
        if self.kind not in ("lower", "upper", "exact"):
            raise InvalidArgumentError(f"bad kind {self.kind!r}")
        if self.method not in METHODS:
            raise InvalidArgumentError(f"unknown method {self.method!r}")


@dataclass
class BoundReport:
    n: int
    d: int
    entries: list[BoundEntry] = field(default_factory=list)

    def add(self, *args, **kwargs):
        self.entries.append(BoundEntry(*args, **kwargs))

    def values(self, quantity: str, kind: str) -> list[int]:
        return [e.value for e in self.entries if e.quantity == quantity and e.kind == kind and e.value is not None]

    def get(self, quantity: str, kind: str, method: str) -> int | None:
        for e in self.entries:
            if (e.quantity, e.kind, e.method) == (quantity, kind, method):
                return e.value
        return None

    def check(self) -> list[str]:
        """Return the violated orderings (empty when consistent)."""
        problems = []
        for q in ("alpha", "rho"):
            lows = self.values(q, "lower") + self.values(q, "exact")
            highs = self.values(q, "upper") + self.values(q, "exact")
            if lows and highs and max(lows) > min(highs):
                problems.append(f"{q}: lower/exact {max(lows)} exceeds exact/upper {min(highs)}")
            exacts = set(self.values(q, "exact"))
            if len(exacts) > 1:
                problems.append(f"{q}: exact values disagree {sorted(exacts)}")
        return problems

    def to_rows(self) -> list[dict]:
        return [
            {
                "n": self.n,
                "d": self.d,
                "quantity": e.quantity,
                "kind": e.kind,
                "value": e.value,
                "method": e.method,
                "note": e.note,
            }
            for e in self.entries
        ]


def bound_report(n: int, d: int, include_greedy: bool = False, include_exact: bool = False, lim=None) -> BoundReport:
    if n < 1 or d < 0:
        raise InvalidArgumentError(f"need n >= 1 and d >= 0 (got n={n}, d={d})")
    report = BoundReport(n, d)

    if n >= 2 and d >= 2:
        low, high = ggr_bounds(n, d)
        report.add("alpha", "lower", low, "GGR", "ceil(v_n(d)/n)")
        report.add("rho", "lower", low, "GGR", "alpha <= rho")
        report.add("rho", "upper", high, "GGR", "ceiling of the rational bound")
    if n == 4 and d >= 5:
        report.add("rho", "upper", hw_upper(d), "HW")

    if n == 1:
        report.add("alpha", "exact", 1, "n1-formula")
        if d >= 1:
            report.add("rho", "exact", 1, "n1-formula")
    elif n == 2:
        report.add("alpha", "exact", alpha2_exact(d), "alpha2-formula")
        if d >= 1:
            report.add("rho", "exact", rho2_exact(d), "rho2-formula")
    elif n == 4:
        a4 = alpha4_exact(d)
        report.add("alpha", "exact", a4, "alpha4-formula")
        report.add("rho", "lower", a4, "alpha4-formula", "alpha <= rho")

    if include_greedy:
        if n >= 2 and d >= 1:
            from .cover import greedy_cover

            report.add("rho", "upper", len(greedy_cover(n, d)), "greedy")
        else:
            report.add("rho", "upper", None, "greedy", "needs n >= 2 and d >= 1")

    if include_exact:
        from .exact import SearchLimits, exact_alpha, exact_rho

        lim = lim or SearchLimits.from_env()
        try:
            res = exact_alpha(n, d, lim)
            if res.proven_optimal:
                report.add("alpha", "exact", res.value, "exact-search")
                report.add("rho", "lower", res.value, "exact-search", "alpha <= rho")
            else:
                report.add("alpha", "lower", res.value, "exact-search", "time budget exhausted")
        except LimitExceededError as exc:
            report.add("alpha", "exact", None, "exact-search", f"skipped: {exc}")
        if d >= 1:
            try:
                res = exact_rho(n, d, lim)
                kind = "exact" if res.proven_optimal else "upper"
                report.add("rho", kind, res.value, "exact-search", "" if res.proven_optimal else "time budget exhausted")
            except LimitExceededError as exc:
                report.add("rho", "exact", None, "exact-search", f"skipped: {exc}")
    return report
