"""Exhaustive searches for alpha_n(d) and rho_n(d) on small instances.

Both searches keep sets as Python ints used as bitsets over vertex ranks.
"""

from __future__ import annotations

import os
import time
from dataclasses import dataclass
from typing import Union

from .cover import (
    MANDATORY,
    SEARCH,
    CliqueCover,
    UpwardClique,
    greedy_cover,
    mandatory_bases,
)
from .errors import InvalidArgumentError, LimitExceededError
from .monomials import Monomial, MonomialGraph, build_graph, enumerate_monomials, num_monomials, rlex_key

TIME_BUDGET_ENV = "SPREADCOVER_TIME_BUDGET"


@dataclass(frozen=True)
class SearchLimits:
    max_vertices: int = 2000
    time_budget: float = 300.0

    def __post_init__(self):
        if self.max_vertices <= 0 or self.time_budget <= 0:
            raise InvalidArgumentError("search limits must be strictly positive")

    @classmethod
    def from_env(cls, **overrides) -> SearchLimits:
        raw = os.environ.get(TIME_BUDGET_ENV)
        kwargs = {}
        if raw is not None:
            try:
                kwargs["time_budget"] = float(int(raw))
            except ValueError:
                raise InvalidArgumentError(f"{TIME_BUDGET_ENV} must be an integer, got {raw!r}") from None
        kwargs.update({k: v for k, v in overrides.items() if v is not None})
        return cls(**kwargs)


@dataclass
class ExactResult:
    value: int
    witness: Union[list[Monomial], CliqueCover]
    proven_optimal: bool
    lower_bound: int = 0
    nodes: int = 0
    elapsed: float = 0.0

    def to_json(self) -> dict:
        if isinstance(self.witness, CliqueCover):
            witness = [b.to_json() for b in self.witness.bases]
        else:
            witness = [m.to_json() for m in self.witness]
        return {"value": self.value, "proven_optimal": self.proven_optimal, "witness": witness}


class _OutOfTime(Exception):
    pass


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def max_independent_set(g: MonomialGraph, lim: SearchLimits | None = None) -> ExactResult:
    """Maximum independent set, found as a maximum clique of the complement.

    Branch and bound in the style of Tomita's MCQ: candidates are greedily
    coloured (colour classes are cliques of ``g``) and a branch is cut when the
    current size plus the colour count cannot beat the incumbent.
    """
    lim = lim or SearchLimits()
    v = g.num_vertices
    if v > lim.max_vertices:
        raise LimitExceededError(
            f"S_{g.n}({g.d}) has {v} vertices, limit is {lim.max_vertices}", lower=None, incumbent=None
        )
    full = (1 << v) - 1
    nbr = g.neighbor_masks()
    non_nbr = [full & ~nbr[i] & ~(1 << i) for i in range(v)]

    # start from the greedy independent set in vertex order
    best: list[int] = []
    avail = full
    for i in range(v):
        if avail >> i & 1:
            best.append(i)
            avail &= non_nbr[i]

    start = time.monotonic()
    deadline = start + lim.time_budget
    nodes = 0

    def colour(cands: int) -> list[tuple[int, int]]:
        # returns (vertex, colour) with colours non-decreasing
        out = []
        k = 0
        uncoloured = cands
        while uncoloured:
            k += 1
            q = uncoloured
            while q:
                u = (q & -q).bit_length() - 1
                q &= ~(1 << u)
                q &= nbr[u]  # same colour class must stay pairwise adjacent in g
                uncoloured &= ~(1 << u)
                out.append((u, k))
        return out

    current: list[int] = []

    def expand(cands: int):
        nonlocal best, nodes
        nodes += 1
        if nodes & 1023 == 0 and time.monotonic() > deadline:
            raise _OutOfTime
        order = colour(cands)
        for u, k in reversed(order):
            if len(current) + k <= len(best):
                return
            current.append(u)
            nxt = cands & non_nbr[u]
            if nxt:
                expand(nxt)
            elif len(current) > len(best):
                best = list(current)
            current.pop()
            cands &= ~(1 << u)

    proven = True
    try:
        expand(full)
    except _OutOfTime:
        proven = False
    witness = [g.vertices[i] for i in sorted(best)]
    return ExactResult(
        value=len(best),
        witness=witness,
        proven_optimal=proven,
        lower_bound=len(best),
        nodes=nodes,
        elapsed=time.monotonic() - start,
    )


def min_upward_clique_cover(n: int, d: int, lim: SearchLimits | None = None) -> ExactResult:
    """Minimum upward clique cover of S_n(d) by depth-first set-cover search.

    The n cliques at x_i^(d-1) are forced.  At each node the uncovered vertex
    lying in the fewest cliques is branched on; nodes are cut with the larger
    of ceil(uncovered / n) and a packing bound (uncovered vertices no two of
    which share a clique each need their own clique).
    """
    lim = lim or SearchLimits()
    if n < 1 or d < 1:
        raise InvalidArgumentError(f"upward covers need n >= 1 and d >= 1, got n={n}, d={d}")
    size = num_monomials(n, d)
    if size > lim.max_vertices:
        raise LimitExceededError(f"S_{n}({d}) has {size} vertices, limit is {lim.max_vertices}")

    vertices = enumerate_monomials(n, d)
    rank = {m: i for i, m in enumerate(vertices)}
    bases = enumerate_monomials(n, d - 1)
    clique_mask = []
    for b in bases:
        mask = 0
        for i in range(n):
            mask |= 1 << rank[b.times_var(i)]
        clique_mask.append(mask)
    containing: list[list[int]] = [[] for _ in vertices]
    for ci, mask in enumerate(clique_mask):
        for vi in _bits(mask):
            containing[vi].append(ci)
    containing_mask = [sum(1 << c for c in cs) for cs in containing]

    base_index = {b: i for i, b in enumerate(bases)}
    forced = [base_index[b] for b in mandatory_bases(n, d)]
    uncovered0 = (1 << size) - 1
    for ci in forced:
        uncovered0 &= ~clique_mask[ci]

    def lower_bound(uncovered: int) -> int:
        count = bin(uncovered).count("1")
        used = 0
        packing = 0
        for vi in _bits(uncovered):
            if not containing_mask[vi] & used:
                packing += 1
                used |= containing_mask[vi]
        return max(-(-count // n), packing)

    best: list[int] | None = None
    if n >= 2:
        incumbent = greedy_cover(n, d)
        best = [base_index[b] for b in incumbent.bases if base_index[b] not in forced]
    best_total = len(forced) + len(best) if best is not None else size + 1

    start = time.monotonic()
    deadline = start + lim.time_budget
    nodes = 0
    chosen: list[int] = []
    root_lb = len(forced) + lower_bound(uncovered0)

    def search(uncovered: int):
        nonlocal best, best_total, nodes
        nodes += 1
        if nodes & 1023 == 0 and time.monotonic() > deadline:
            raise _OutOfTime
        if not uncovered:
            total = len(forced) + len(chosen)
            if total < best_total:
                best, best_total = list(chosen), total
            return
        if len(forced) + len(chosen) + lower_bound(uncovered) >= best_total:
            return
        pivot = min(_bits(uncovered), key=lambda vi: (len(containing[vi]), vi))
        options = sorted(
            containing[pivot],
            key=lambda ci: (-bin(clique_mask[ci] & uncovered).count("1"), rlex_key(bases[ci])),
        )
        for ci in options:
            chosen.append(ci)
            search(uncovered & ~clique_mask[ci])
            chosen.pop()

    proven = True
    try:
        search(uncovered0)
    except _OutOfTime:
        proven = False
    if best is None:
        raise LimitExceededError(
            f"no cover of S_{n}({d}) found within {lim.time_budget}s", lower=root_lb, incumbent=None
        )
    witness = CliqueCover(n, d)
    for ci in forced:
        witness.add(UpwardClique(bases[ci]), MANDATORY)
    for ci in sorted(best, key=lambda ci: rlex_key(bases[ci])):
        witness.add(UpwardClique(bases[ci]), SEARCH)
    return ExactResult(
        value=best_total,
        witness=witness,
        proven_optimal=proven,
        lower_bound=best_total if proven else root_lb,
        nodes=nodes,
        elapsed=time.monotonic() - start,
    )


def exact_alpha(n: int, d: int, lim: SearchLimits | None = None) -> ExactResult:
    lim = lim or SearchLimits()
    size = num_monomials(n, d)
    if size > lim.max_vertices:
        raise LimitExceededError(f"S_{n}({d}) has {size} vertices, limit is {lim.max_vertices}")
    return max_independent_set(build_graph(n, d), lim)


def exact_rho(n: int, d: int, lim: SearchLimits | None = None) -> ExactResult:
    return min_upward_clique_cover(n, d, lim)
