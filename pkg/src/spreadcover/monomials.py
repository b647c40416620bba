"""Monomials of fixed degree and the graph S_n(d) on them.

Vertices are exponent vectors.  Two degree-d monomials are adjacent when
their lcm has degree d + 1, which is the same as saying one is obtained
from the other by moving a single unit of exponent between two variables.

All orderings in the package come from one comparator: ``a >= b`` in
reverse-lex when the last non-zero entry of ``a - b`` is negative.  Sorting
descending under it is the same as sorting ascending on the reversed tuple,
so that is what ``rlex_key`` returns.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from math import comb
from typing import Iterator, Sequence

from .errors import InvalidArgumentError, ResourceLimitError

DEFAULT_VERTEX_CAP = 100_000


@dataclass(frozen=True, order=False)
class Monomial:
    exponents: tuple[int, ...]

    def __post_init__(self):
        exps = tuple(int(e) for e in self.exponents)
        if any(e < 0 for e in exps):
            raise InvalidArgumentError(f"negative exponent in {exps}")
        object.__setattr__(self, "exponents", exps)

    @property
    def n(self) -> int:
        return len(self.exponents)

    @property
    def degree(self) -> int:
        return sum(self.exponents)

    def __len__(self):
        return len(self.exponents)

    def __getitem__(self, i):
        return self.exponents[i]

    def __iter__(self):
        return iter(self.exponents)

    def times_var(self, i: int) -> Monomial:
        e = list(self.exponents)
        e[i] += 1
        return Monomial(tuple(e))

    def div_var(self, i: int) -> Monomial:
        if self.exponents[i] == 0:
            raise InvalidArgumentError(f"x{i + 1} does not divide {self}")
        e = list(self.exponents)
        e[i] -= 1
        return Monomial(tuple(e))

    def support(self) -> list[int]:
        return [i for i, e in enumerate(self.exponents) if e]

    def to_json(self) -> list[int]:
        return list(self.exponents)

    def to_text(self) -> str:
        parts = []
        for i, e in enumerate(self.exponents):
            if e == 1:
                parts.append(f"x{i + 1}")
            elif e > 1:
                parts.append(f"x{i + 1}^{e}")
        return "*".join(parts) if parts else "1"

    def __str__(self):
        return self.to_text()

    def __repr__(self):
        return f"Monomial({self.to_text()!s}, n={self.n})"


def rlex_key(m: Monomial | Sequence[int]) -> tuple[int, ...]:
    """Sort key placing reverse-lex-greater vectors first."""
    return tuple(reversed(tuple(m)))


def rlex_compare(a: Sequence[int], b: Sequence[int]) -> int:
    """Return 1 if a >_rlex b, -1 if a <_rlex b, 0 if equal."""
    if len(a) != len(b):
        raise InvalidArgumentError("length mismatch")
    for x, y in zip(reversed(tuple(a)), reversed(tuple(b))):
        if x != y:
            # last non-zero entry of a - b is x - y
            return 1 if x - y < 0 else -1
    return 0


_TERM = re.compile(r"^x(\d+)(?:\^(\d+))?$")


def parse_monomial(text: str | Sequence[int], n: int | None = None) -> Monomial:
    """Accept ``"x1^2*x2"`` text or a JSON-style exponent list.

    Text form needs ``n`` unless the highest variable index is meant to fix it.
    """
    if not isinstance(text, str):
        m = Monomial(tuple(text))
        if n is not None and m.n != n:
            raise InvalidArgumentError(f"expected {n} exponents, got {m.n}")
        return m
    text = text.strip()
    if text.startswith("["):
        import json

        return parse_monomial(json.loads(text), n)
    exps: dict[int, int] = {}
    if text != "1":
        for term in text.split("*"):
            match = _TERM.match(term.strip())
            if not match:
                raise InvalidArgumentError(f"cannot parse term {term!r}")
            idx = int(match.group(1))
            if idx < 1:
                raise InvalidArgumentError("variables are numbered from x1")
            exps[idx - 1] = exps.get(idx - 1, 0) + int(match.group(2) or 1)
    width = n if n is not None else (max(exps) + 1 if exps else 1)
    if exps and max(exps) >= width:
        raise InvalidArgumentError(f"{text!r} uses a variable beyond x{width}")
    return Monomial(tuple(exps.get(i, 0) for i in range(width)))


def num_monomials(n: int, d: int) -> int:
    return comb(n + d - 1, d) if n >= 1 else 0


def _check_nd(n: int, d: int):
    if n < 1:
        raise InvalidArgumentError(f"n must be >= 1, got {n}")
    if d < 0:
        raise InvalidArgumentError(f"d must be >= 0, got {d}")


def _suffixes(n: int, d: int) -> Iterator[tuple[int, ...]]:
    # Fill exponents from the last variable backwards, smallest first.
    if n == 1:
        yield (d,)
        return
    for last in range(d + 1):
        for head in _suffixes(n - 1, d - last):
            yield head + (last,)


def enumerate_monomials(n: int, d: int) -> list[Monomial]:
    """All degree-d monomials in n variables, reverse-lex greatest first."""
    _check_nd(n, d)
    return [Monomial(e) for e in _suffixes(n, d)]


def monomial_rank(m: Monomial, n: int | None = None, d: int | None = None) -> int:
    """Position of ``m`` in ``enumerate_monomials(n, d)``, computed by counting."""
    n = m.n if n is None else n
    d = m.degree if d is None else d
    if m.n != n or m.degree != d:
        raise InvalidArgumentError(f"{m} is not a degree-{d} monomial in {n} variables")
    rank = 0
    remaining = d
    for i in range(n - 1, 0, -1):
        for c in range(m[i]):
            rank += num_monomials(i, remaining - c)
        remaining -= m[i]
    return rank


def lcm_degree(a: Monomial, b: Monomial) -> int:
    if len(a) != len(b):
        raise InvalidArgumentError("monomials live in different rings")
    return sum(max(x, y) for x, y in zip(a, b))


def adjacent(a: Monomial, b: Monomial) -> bool:
    if len(a) != len(b):
        raise InvalidArgumentError("monomials live in different rings")
    if a.degree != b.degree:
        raise InvalidArgumentError("monomials have different degrees")
    return lcm_degree(a, b) == a.degree + 1


def transfer_neighbors(u: Monomial) -> list[Monomial]:
    """Every u * x_k / x_l with k != l, deduplicated (they are automatically distinct)."""
    out = []
    for l in u.support():
        lowered = u.div_var(l)
        for k in range(len(u)):
            if k != l:
                out.append(lowered.times_var(k))
    return out


@dataclass(frozen=True)
class MonomialGraph:
    n: int
    d: int
    vertices: tuple[Monomial, ...]
    adjacency: tuple[tuple[int, ...], ...]
    _index: dict = field(repr=False, compare=False, default_factory=dict)

    @property
    def num_vertices(self) -> int:
        return len(self.vertices)

    def rank(self, m: Monomial) -> int:
        try:
            return self._index[m]
        except KeyError:
            raise InvalidArgumentError(f"{m} is not a vertex of S_{self.n}({self.d})") from None

    def neighbors(self, i: int) -> tuple[int, ...]:
        return self.adjacency[i]

    def edges(self) -> list[tuple[int, int]]:
        return [(i, j) for i, nbrs in enumerate(self.adjacency) for j in nbrs if i < j]

    def num_edges(self) -> int:
        return sum(len(a) for a in self.adjacency) // 2

    def neighbor_masks(self) -> list[int]:
        masks = []
        for nbrs in self.adjacency:
            mask = 0
            for j in nbrs:
                mask |= 1 << j
            masks.append(mask)
        return masks


def build_graph(n: int, d: int, cap: int = DEFAULT_VERTEX_CAP) -> MonomialGraph:
    _check_nd(n, d)
    size = num_monomials(n, d)
    if size > cap:
        raise ResourceLimitError(f"S_{n}({d}) has {size} vertices, cap is {cap}")
    vertices = tuple(enumerate_monomials(n, d))
    index = {m: i for i, m in enumerate(vertices)}
    adjacency = tuple(
        tuple(sorted({index[w] for w in transfer_neighbors(u)})) for u in vertices
    )
    return MonomialGraph(n, d, vertices, adjacency, index)
