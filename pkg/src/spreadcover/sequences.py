"""A053307 three ways, plus the two sequences it interleaves.

A053307(d) counts non-negative integer 2x2 matrices with entry sum d up to
row and column swaps.  It is computed here by canonical-form enumeration,
by Burnside's lemma over the Klein four-group, and from its rational
generating function, and then compared with alpha_4(d).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import comb
from typing import Iterator

from .bounds import alpha4_exact
from .errors import InvalidArgumentError

# (a, b, c, e) is the matrix [[a, b], [c, e]]
_KLEIN = (
    lambda a, b, c, e: (a, b, c, e),
    lambda a, b, c, e: (c, e, a, b),  # swap rows
    lambda a, b, c, e: (b, a, e, c),  # swap columns
    lambda a, b, c, e: (e, c, b, a),  # both
)


@dataclass(frozen=True)
class Matrix2x2Class:
    entries: tuple[int, int, int, int]

    @classmethod
    def of(cls, a: int, b: int, c: int, e: int) -> Matrix2x2Class:
        return cls(min(g(a, b, c, e) for g in _KLEIN))

    @property
    def total(self) -> int:
        return sum(self.entries)


def _compositions4(d: int) -> Iterator[tuple[int, int, int, int]]:
    for a in range(d + 1):
        for b in range(d - a + 1):
            for c in range(d - a - b + 1):
                yield a, b, c, d - a - b - c


def matrix_classes(d: int) -> set[Matrix2x2Class]:
    if d < 0:
        raise InvalidArgumentError(f"d must be >= 0 (got {d})")
    return {Matrix2x2Class.of(*m) for m in _compositions4(d)}


def a053307_enumerate(d: int) -> int:
    return len(matrix_classes(d))


def a053307_burnside(d: int) -> int:
    """Average number of fixed matrices over the four group elements."""
    if d < 0:
        raise InvalidArgumentError(f"d must be >= 0 (got {d})")
    fixed_identity = comb(d + 3, 3)
    # each swap pairs the four entries into two equal pairs, so a fixed
    # matrix is a composition of d/2 into two parts
    fixed_swap = d // 2 + 1 if d % 2 == 0 else 0
    total = fixed_identity + 3 * fixed_swap
    assert total % 4 == 0
    return total // 4


def a000330(i: int) -> int:
    """0^2 + 1^2 + ... + i^2."""
    if i < 0:
        raise InvalidArgumentError("index must be >= 0")
    return i * (i + 1) * (2 * i + 1) // 6


def a006527(i: int) -> int:
    if i < 0:
        raise InvalidArgumentError("index must be >= 0")
    q, r = divmod(i**3 + 2 * i, 3)
    assert r == 0
    return q


def poly_mul(p: list[int], q: list[int]) -> list[int]:
    out = [0] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a:
            for j, b in enumerate(q):
                out[i + j] += a * b
    return out


@dataclass
class SeriesExpansion:
    coefficients: list[int]
    numerator: list[int] = field(default_factory=list)
    denominator: list[int] = field(default_factory=list)

    def __getitem__(self, k: int) -> int:
        return self.coefficients[k]

    def __len__(self):
        return len(self.coefficients)

    def residuals(self) -> list[int]:
        """Coefficients of denominator * series - numerator up to the computed order."""
        prod = poly_mul(self.denominator, self.coefficients)[: len(self.coefficients)]
        num = self.numerator + [0] * max(0, len(prod) - len(self.numerator))
        return [x - y for x, y in zip(prod, num)]


def expand_rational(numerator: list[int], denominator: list[int], terms: int) -> SeriesExpansion:
    """Power-series division numerator/denominator with integer coefficients.

    The constant term of the denominator must be +-1 so the result stays integral.
    """
    if terms < 1:
        raise InvalidArgumentError("need at least one term")
    if denominator[0] not in (1, -1):
        raise InvalidArgumentError("denominator constant term must be a unit")
    coeffs: list[int] = []
    for k in range(terms):
        acc = numerator[k] if k < len(numerator) else 0
        for j in range(1, min(k, len(denominator) - 1) + 1):
            acc -= denominator[j] * coeffs[k - j]
        coeffs.append(acc * denominator[0])
    return SeriesExpansion(coeffs, list(numerator), list(denominator))


def a053307_gf_parts() -> tuple[list[int], list[int]]:
    """Numerator 1 - t + t^2 and denominator (1 - t^2)^2 (1 - t)^2, as coefficient lists."""
    one_minus_t2 = [1, 0, -1]
    one_minus_t = [1, -1]
    den = poly_mul(poly_mul(one_minus_t2, one_minus_t2), poly_mul(one_minus_t, one_minus_t))
    return [1, -1, 1], den


def expand_a053307_gf(terms: int) -> SeriesExpansion:
    num, den = a053307_gf_parts()
    return expand_rational(num, den, terms)


def a053307(d: int, method: str = "enumerate") -> int:
    if method == "enumerate":
        return a053307_enumerate(d)
    if method == "burnside":
        return a053307_burnside(d)
    if method == "gf":
        return expand_a053307_gf(d + 1)[d]
    raise InvalidArgumentError(f"unknown method {method!r}; use enumerate, burnside or gf")


@dataclass
class CheckResult:
    name: str
    passed: bool
    checked: int
    counterexample: str | None = None


@dataclass
class IdentityReport:
    max_d: int
    checks: list[CheckResult]

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def lines(self) -> list[str]:
        out = []
        for c in self.checks:
            status = "PASS" if c.passed else "FAIL"
            tail = f"  first counterexample: {c.counterexample}" if c.counterexample else ""
            out.append(f"{status}  {c.name} ({c.checked} values){tail}")
        return out


def _check(name: str, cases) -> CheckResult:
    count = 0
    for label, lhs, rhs in cases:
        count += 1
        if lhs != rhs:
            return CheckResult(name, False, count, f"{label}: {lhs} != {rhs}")
    return CheckResult(name, True, count)


def verify_alpha4_identity(max_d: int, max_half: int | None = None) -> IdentityReport:
    """Compare the three A053307 routes with each other and with alpha_4(d),
    and check the interleaving with A000330 / A006527."""
    if max_d < 0:
        raise InvalidArgumentError("max_d must be >= 0")
    max_half = max_d // 2 if max_half is None else max_half
    top = max(max_d, 2 * max_half + 1)
    enum = [a053307_enumerate(d) for d in range(top + 1)]
    burn = [a053307_burnside(d) for d in range(top + 1)]
    gf = expand_a053307_gf(top + 1)
    ds = range(max_d + 1)
    checks = [
        _check("enumerate == burnside", ((f"d={d}", enum[d], burn[d]) for d in ds)),
        _check("enumerate == generating function", ((f"d={d}", enum[d], gf[d]) for d in ds)),
        _check("burnside == generating function", ((f"d={d}", burn[d], gf[d]) for d in ds)),
        _check("A053307 == alpha_4 formula", ((f"d={d}", enum[d], alpha4_exact(d)) for d in ds)),
        _check(
            "A053307(2d+1) == A000330(d+1)",
            ((f"d={h}", enum[2 * h + 1], a000330(h + 1)) for h in range(max_half + 1)),
        ),
        _check(
            "A053307(2d) == A006527(d+1)",
            ((f"d={h}", enum[2 * h], a006527(h + 1)) for h in range(max_half + 1)),
        ),
        _check("generating-function residual is zero", ((f"t^{k}", r, 0) for k, r in enumerate(gf.residuals()))),
    ]
    return IdentityReport(max_d, checks)
