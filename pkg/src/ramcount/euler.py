"""Global counting over F_q(T): place census, Euler products, growth table.

The count of homomorphisms with prescribed total jump (summed over places
with degree weights) factors as a product over places of local generating
polynomials.  Everything is exact: coefficients are arbitrary-precision
integers, growth ratios are Fractions.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Callable

from . import asw, d4
from .errors import BudgetExceededError, TruncationTooLargeError

MAX_CENSUS_DEGREE = 32
MAX_TRUNCATION = 24
MAX_ORACLE_TRUNCATION = 8


def mobius(n: int) -> int:
    result = 1
    d = 2
    while d * d <= n:
        if n % d == 0:
            n //= d
            if n % d == 0:
                return 0
            result = -result
        d += 1
    if n > 1:
        result = -result
    return result


@dataclass(frozen=True)
class PlaceCensus:
    """Number of places of F_q(T) by degree (monic irreducibles plus infinity)."""

    q: int
    max_degree: int
    counts: tuple[tuple[int, int], ...]

    def count(self, d: int) -> int:
        return dict(self.counts)[d]


def place_census(q: int, max_degree: int) -> PlaceCensus:
    if max_degree > MAX_CENSUS_DEGREE:
        raise TruncationTooLargeError(
            f"census degree {max_degree} exceeds {MAX_CENSUS_DEGREE}")
    counts = {}
    for d in range(1, max_degree + 1):
        total = sum(mobius(d // e) * q ** e for e in range(1, d + 1) if d % e == 0)
        assert total % d == 0
        pi = total // d
        if d == 1:
            pi += 1  # the infinite place has degree 1
        assert pi > 0
        counts[d] = pi
    # zeta self-check: sum over divisors of d * pi(d) recovers q^m + 1
    for m in range(1, max_degree + 1):
        acc = sum(d * counts[d] for d in counts if m % d == 0)
        assert acc == q ** m + 1, "place census failed its zeta identity"
    return PlaceCensus(q, max_degree, tuple(sorted(counts.items())))


@dataclass(frozen=True)
class CountSeries:
    """A power series truncated at degree `truncation`, integer coefficients."""

    truncation: int
    coefficients: tuple[int, ...]

    def __post_init__(self):
        assert len(self.coefficients) == self.truncation + 1

    @classmethod
    def one(cls, truncation: int) -> "CountSeries":
        return cls(truncation, (1,) + (0,) * truncation)

    def coefficient(self, k: int) -> int:
        return self.coefficients[k]

    def __mul__(self, other: "CountSeries") -> "CountSeries":
        assert self.truncation == other.truncation
        x = self.truncation
        out = [0] * (x + 1)
        for i, a in enumerate(self.coefficients):
            if a:
                for j in range(0, x + 1 - i):
                    b = other.coefficients[j]
                    if b:
                        out[i + j] += a * b
        return CountSeries(x, tuple(out))

    def __pow__(self, e: int) -> "CountSeries":
        result = CountSeries.one(self.truncation)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base if e > 1 else base
            e >>= 1
        return result


LocalCoefficient = Callable[[int, int], int]


def local_factor(q: int, d: int, truncation: int,
                 coefficient: LocalCoefficient = d4.count_d4_exact) -> CountSeries:
    """Generating polynomial of one degree-d place, truncated."""
    coeffs = [0] * (truncation + 1)
    v = 0
    while d * v <= truncation:
        coeffs[d * v] = coefficient(q ** d, v)
        v += 1
    return CountSeries(truncation, tuple(coeffs))


def global_series(q: int, truncation: int,
                  coefficient: LocalCoefficient = d4.count_d4_exact) -> CountSeries:
    """Product over places of local factors, truncated exactly."""
    if truncation > MAX_TRUNCATION:
        raise TruncationTooLargeError(
            f"truncation {truncation} exceeds {MAX_TRUNCATION}")
    census = place_census(q, max(truncation, 1))
    result = CountSeries.one(truncation)
    for d, pi in census.counts:
        if d > truncation:
            break
        factor = local_factor(q, d, truncation, coefficient)
        result = result * factor ** pi
    assert result.coefficient(0) == 1
    assert all(c >= 0 for c in result.coefficients)
    return result


def d4_global_series(q: int, truncation: int) -> CountSeries:
    return global_series(q, truncation)


def abelian_global_series(shape: asw.GroupShape, q: int, truncation: int,
                          budget: int = asw.DEFAULT_BUDGET) -> CountSeries:
    """Euler product with local counts from exhaustive abelian enumeration."""
    cache: dict[tuple[int, int], int] = {}

    def coefficient(residue_order: int, v: int) -> int:
        key = (residue_order, v)
        if key not in cache:
            cache[key] = asw.count_by_last_jump(
                shape, residue_order, v, "inertial_types", budget=budget)
        return cache[key]

    return global_series(q, truncation, coefficient)


def convolution_oracle(q: int, total: int,
                       coefficient: LocalCoefficient = d4.count_d4_exact) -> int:
    """Independent evaluation of one global coefficient.

    Sums the product of local coefficients over all explicit jump
    assignments (v_place) with sum of deg * v equal to `total`, recursing
    place by place over the full list of places of degree <= total.
    """
    if total > MAX_ORACLE_TRUNCATION:
        raise BudgetExceededError(
            f"oracle truncation {total} exceeds {MAX_ORACLE_TRUNCATION}")
    if total == 0:
        return 1
    census = place_census(q, total)
    degrees: list[int] = []
    for d, pi in census.counts:
        degrees.extend([d] * pi)

    @lru_cache(maxsize=None)
    def tail(i: int, remaining: int) -> int:
        if remaining == 0:
            return 1
        if i == len(degrees):
            return 0
        d = degrees[i]
        acc = 0
        v = 0
        while d * v <= remaining:
            acc += coefficient(q ** d, v) * tail(i + 1, remaining - d * v)
            v += 1
        return acc

    result = tail(0, total)
    tail.cache_clear()
    return result


# ---------------------------------------------------------------------------
# growth diagnostics
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class GrowthRow:
    x: int
    count: int                      # N(X), divisible by 8
    ratio: Fraction                 # N(X) / (q^(3X) * X)
    relative_change: Fraction | None


@dataclass(frozen=True)
class GrowthTable:
    q: int
    rows: tuple[GrowthRow, ...]

    def ratios(self) -> list[Fraction]:
        return [row.ratio for row in self.rows]

    def changes(self) -> list[Fraction]:
        return [row.relative_change for row in self.rows
                if row.relative_change is not None]


def growth_table(q: int, x_max: int) -> GrowthTable:
    """Exact ratios N(X)/(q^(3X) X) and their successive relative changes."""
    if x_max > MAX_TRUNCATION:
        raise TruncationTooLargeError(f"x_max {x_max} exceeds {MAX_TRUNCATION}")
    series = d4_global_series(q, x_max)
    rows = []
    prev: Fraction | None = None
    for x in range(1, x_max + 1):
        count = 8 * series.coefficient(x)
        assert count % 8 == 0 and count > 0
        ratio = Fraction(count, q ** (3 * x) * x)
        change = None if prev is None else abs(ratio - prev) / ratio
        rows.append(GrowthRow(x, count, ratio, change))
        prev = ratio
    return GrowthTable(q, tuple(rows))


def growth_stabilises(table: GrowthTable, threshold: Fraction = Fraction(1, 10),
                      tail_length: int = 3) -> bool:
    """Final relative change under the threshold and decreasing on the tail."""
    changes = table.changes()
    if len(changes) < tail_length:
        return False
    tail = changes[-tail_length:]
    decreasing = all(a >= b for a, b in zip(tail, tail[1:]))
    return decreasing and tail[-1] < threshold
