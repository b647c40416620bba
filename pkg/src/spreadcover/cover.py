"""Upward cliques, the orbit-driven greedy cover, and cover checking."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .errors import ContractViolationError, InvalidArgumentError
from .monomials import (
    DEFAULT_VERTEX_CAP,
    Monomial,
    build_graph,
    enumerate_monomials,
    num_monomials,
    rlex_key,
)
from .orbits import expand_orbit, partitions

MANDATORY = "mandatory"
GREEDY = "greedy"
SEARCH = "search"


@dataclass(frozen=True)
class UpwardClique:
    base: Monomial

    @property
    def n(self) -> int:
        return self.base.n

    def members(self) -> list[Monomial]:
        return [self.base.times_var(i) for i in range(self.n)]


def upward_clique(base: Monomial, n: int | None = None) -> set[Monomial]:
    if n is not None and base.n != n:
        raise InvalidArgumentError(f"base {base} is not in {n} variables")
    return set(UpwardClique(base).members())


def cliques_containing(v: Monomial) -> list[UpwardClique]:
    """One clique per variable dividing v, in the order of that variable."""
    if v.degree == 0:
        raise InvalidArgumentError("the monomial 1 lies in no upward clique")
    return [UpwardClique(v.div_var(j)) for j in v.support()]


@dataclass
class CliqueCover:
    n: int
    d: int
    cliques: list[UpwardClique] = field(default_factory=list)
    origins: list[str] = field(default_factory=list)

    def __post_init__(self):
        if len(self.origins) < len(self.cliques):
            self.origins = list(self.origins) + [GREEDY] * (len(self.cliques) - len(self.origins))
        for c in self.cliques:
            if c.n != self.n or c.base.degree != self.d - 1:
                raise InvalidArgumentError(
                    f"clique base {c.base} is not a degree-{self.d - 1} monomial in {self.n} variables"
                )

    def __len__(self):
        return len(self.cliques)

    @property
    def bases(self) -> list[Monomial]:
        return [c.base for c in self.cliques]

    def add(self, clique: UpwardClique, origin: str = GREEDY):
        self.cliques.append(clique)
        self.origins.append(origin)

    def to_json(self) -> dict:
        return {"n": self.n, "d": self.d, "cliques": [b.to_json() for b in self.bases]}

    def dumps(self) -> str:
        return json.dumps(self.to_json())

    @classmethod
    def from_json(cls, data: dict) -> CliqueCover:
        try:
            n, d = int(data["n"]), int(data["d"])
            bases = [Monomial(tuple(b)) for b in data["cliques"]]
        except (KeyError, TypeError, ValueError) as exc:
            raise InvalidArgumentError(f"malformed cover document: {exc}") from exc
        return cover_from_bases(n, d, bases)

    @classmethod
    def loads(cls, text: str) -> CliqueCover:
        return cls.from_json(json.loads(text))


def mandatory_bases(n: int, d: int) -> list[Monomial]:
    """x_i^(d-1) for each i; for d = 1 these all coincide with 1."""
    seen: list[Monomial] = []
    for i in range(n):
        e = [0] * n
        e[i] = d - 1
        m = Monomial(tuple(e))
        if m not in seen:
            seen.append(m)
    return seen


def frequencies(c: CliqueCover) -> dict[Monomial, int]:
    freq = {v: 0 for v in enumerate_monomials(c.n, c.d)}
    for clique in c.cliques:
        for v in clique.members():
            freq[v] += 1
    return freq


@dataclass(frozen=True)
class CoverReport:
    valid: bool
    missing: list[Monomial]


def verify_cover(c: CliqueCover) -> CoverReport:
    freq = frequencies(c)
    missing = [v for v in enumerate_monomials(c.n, c.d) if freq[v] == 0]
    return CoverReport(not missing, missing)


def _require_valid(c: CliqueCover):
    report = verify_cover(c)
    if not report.valid:
        shown = ", ".join(str(m) for m in report.missing[:5])
        raise ContractViolationError(f"not a cover of S_{c.n}({c.d}); uncovered: {shown}")


def is_minimal(c: CliqueCover) -> bool:
    _require_valid(c)
    freq = frequencies(c)
    return all(any(freq[v] == 1 for v in cl.members()) for cl in c.cliques)


def prune(c: CliqueCover) -> CliqueCover:
    """Drop inessential cliques in insertion order, one pass after another,
    until a full pass discards nothing."""
    _require_valid(c)
    freq = frequencies(c)
    kept = list(zip(c.cliques, c.origins))
    changed = True
    while changed:
        changed = False
        survivors = []
        for clique, origin in kept:
            members = clique.members()
            if any(freq[v] == 1 for v in members):
                survivors.append((clique, origin))
            else:
                for v in members:
                    freq[v] -= 1
                changed = True
        kept = survivors
    return CliqueCover(c.n, c.d, [k for k, _ in kept], [o for _, o in kept])


def greedy_cover(n: int, d: int, cap: int = DEFAULT_VERTEX_CAP, trace=None) -> CliqueCover:
    """Upward clique cover of S_n(d) by the orbit-driven greedy rule.

    1. seed with the cliques based at x_i^(d-1);
    2. walk orbits (partitions of d) in reverse-lex order, and each orbit's
       vertices in reverse-lex order;
    3. an uncovered vertex gets the containing clique with the fewest
       already-covered members, ties going to the reverse-lex-greatest base;
    4-5. prune until every clique holds a vertex of frequency 1.
    """
    if n < 2 or d < 1:
        raise InvalidArgumentError(f"greedy cover needs n >= 2 and d >= 1, got n={n}, d={d}")
    graph = build_graph(n, d, cap)
    rank = graph.rank
    covered = 0

    def mask_of(clique: UpwardClique) -> int:
        m = 0
        for v in clique.members():
            m |= 1 << rank(v)
        return m

    cover = CliqueCover(n, d)
    for base in mandatory_bases(n, d):
        clique = UpwardClique(base)
        cover.add(clique, MANDATORY)
        covered |= mask_of(clique)

    for orbit in partitions(d, n):
        for v in expand_orbit(orbit):
            if covered >> rank(v) & 1:
                continue
            best = None
            best_key = None
            for clique in cliques_containing(v):
                mask = mask_of(clique)
                key = (bin(mask & covered).count("1"), rlex_key(clique.base))
                # fewer covered wins; on a tie the smaller rlex_key is the greater base
                if best_key is None or key < best_key:
                    best, best_key, best_mask = clique, key, mask
            cover.add(best, GREEDY)
            covered |= best_mask
            if trace is not None:
                trace(v, best, best_key[0])

    return prune(cover)


def permute_cover(c: CliqueCover, sigma) -> CliqueCover:
    from .orbits import apply_permutation

    return CliqueCover(
        c.n, c.d, [UpwardClique(apply_permutation(sigma, cl.base)) for cl in c.cliques], list(c.origins)
    )


def cover_from_bases(n: int, d: int, bases: Iterable[Sequence[int] | Monomial], origin: str = GREEDY) -> CliqueCover:
    cliques = [UpwardClique(b if isinstance(b, Monomial) else Monomial(tuple(b))) for b in bases]
    mand = set(mandatory_bases(n, d)) if d >= 1 else set()
    return CliqueCover(n, d, cliques, [MANDATORY if c.base in mand else origin for c in cliques])


def lower_bound_trivial(n: int, d: int) -> int:
    return -(-num_monomials(n, d) // n)
