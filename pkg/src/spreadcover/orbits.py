"""Sym(n) acting on exponent positions: partitions, orbits, classification."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from enum import Enum
from itertools import combinations, permutations
from math import factorial, prod
from typing import Iterator, Sequence

from .errors import InvalidArgumentError
from .monomials import Monomial, adjacent, rlex_key


@dataclass(frozen=True)
class OrbitClass:
    parts: tuple[int, ...]
    n: int

    def __post_init__(self):
        parts = tuple(int(p) for p in self.parts)
        if len(parts) > self.n:
            raise InvalidArgumentError(f"{parts} has more than {self.n} parts")
        if any(p <= 0 for p in parts):
            raise InvalidArgumentError(f"parts must be positive: {parts}")
        if any(a < b for a, b in zip(parts, parts[1:])):
            raise InvalidArgumentError(f"parts must be non-increasing: {parts}")
        object.__setattr__(self, "parts", parts)

    @property
    def d(self) -> int:
        return sum(self.parts)

    @property
    def padded(self) -> tuple[int, ...]:
        return self.parts + (0,) * (self.n - len(self.parts))

    @classmethod
    def of(cls, m: Monomial) -> OrbitClass:
        return cls(tuple(sorted((e for e in m if e), reverse=True)), len(m))

    def to_json(self) -> list[int]:
        return list(self.parts)


class OrbitKind(str, Enum):
    INDEPENDENT = "independent"
    CLIQUE = "clique"
    NEITHER = "neither"


@dataclass(frozen=True)
class Permutation:
    """A bijection of {1..n}; ``images[i-1]`` is the image of i."""

    images: tuple[int, ...]

    def __post_init__(self):
        images = tuple(int(i) for i in self.images)
        if sorted(images) != list(range(1, len(images) + 1)):
            raise InvalidArgumentError(f"{images} is not a permutation of 1..{len(images)}")
        object.__setattr__(self, "images", images)

    @property
    def n(self) -> int:
        return len(self.images)

    @classmethod
    def identity(cls, n: int) -> Permutation:
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def transposition(cls, n: int, i: int, j: int) -> Permutation:
        images = list(range(1, n + 1))
        images[i - 1], images[j - 1] = j, i
        return cls(tuple(images))

    def __call__(self, i: int) -> int:
        return self.images[i - 1]

    def compose(self, other: Permutation) -> Permutation:
        """``self ∘ other``: apply ``other`` first."""
        return Permutation(tuple(self(other(i)) for i in range(1, self.n + 1)))

    def inverse(self) -> Permutation:
        inv = [0] * self.n
        for i, img in enumerate(self.images, start=1):
            inv[img - 1] = i
        return Permutation(tuple(inv))


def apply_permutation(sigma: Permutation, m: Monomial) -> Monomial:
    """Move the exponent of x_j onto x_sigma(j), i.e. result[i] = m[sigma^-1(i)]."""
    if sigma.n != len(m):
        raise InvalidArgumentError(f"permutation on {sigma.n} symbols, monomial in {len(m)} variables")
    out = [0] * sigma.n
    for j, e in enumerate(m.exponents, start=1):
        out[sigma(j) - 1] = e
    return Monomial(tuple(out))


def _partition_suffixes(d: int, slots: int, floor: int) -> Iterator[tuple[int, ...]]:
    # Choose entries from the last slot leftwards, each >= the one to its right,
    # smallest first; that is exactly descending reverse-lex on padded vectors.
    if slots == 1:
        if d >= floor:
            yield (d,)
        return
    for last in range(floor, d // slots + 1):
        for head in _partition_suffixes(d - last, slots - 1, last):
            yield head + (last,)


def partitions(d: int, n: int) -> list[OrbitClass]:
    if d < 0 or n < 1:
        raise InvalidArgumentError(f"need d >= 0 and n >= 1, got d={d}, n={n}")
    return [
        OrbitClass(tuple(p for p in padded if p), n)
        for padded in _partition_suffixes(d, n, 0)
    ]


def _distinct_permutations(values: Sequence[int]) -> Iterator[tuple[int, ...]]:
    counts = Counter(values)
    keys = sorted(counts)
    size = len(values)
    cur: list[int] = []

    def rec():
        if len(cur) == size:
            yield tuple(cur)
            return
        for k in keys:
            if counts[k]:
                counts[k] -= 1
                cur.append(k)
                yield from rec()
                cur.pop()
                counts[k] += 1

    yield from rec()


def expand_orbit(o: OrbitClass) -> list[Monomial]:
    members = sorted(_distinct_permutations(o.padded), key=rlex_key)
    return [Monomial(e) for e in members]


def orbit_size(o: OrbitClass) -> int:
    return factorial(o.n) // prod(factorial(c) for c in Counter(o.padded).values())


def orbit_is_independent(o: OrbitClass) -> bool:
    """Two members of one orbit are adjacent exactly when a unit transfer
    permutes the entries, which needs two entries differing by one."""
    values = set(o.padded)
    return not any(v + 1 in values for v in values)


def orbit_is_independent_bruteforce(o: OrbitClass) -> bool:
    return not any(adjacent(a, b) for a, b in combinations(expand_orbit(o), 2))


def classify_orbit(o: OrbitClass) -> OrbitKind:
    if orbit_is_independent(o):
        return OrbitKind.INDEPENDENT
    members = expand_orbit(o)
    if all(adjacent(a, b) for a, b in combinations(members, 2)):
        return OrbitKind.CLIQUE
    return OrbitKind.NEITHER


def all_permutations(n: int) -> Iterator[Permutation]:
    for images in permutations(range(1, n + 1)):
        yield Permutation(images)
