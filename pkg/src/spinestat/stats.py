"""Right-spine distributions by four independent routes, and exact averages.

S_n^k denotes the number of size-n trees with exactly k segments on the right
spine.  The four routes:

  * exhaustive  — count over the full enumeration (bounded by the cap),
  * recurrence  — level-to-level suffix sums derived from the growth step,
  * series      — coefficient extraction from z^(k+1) * N(z)^k,
  * closed      — the ballot-number formula S_n^k = k/(2n-k) * C(2n-k, n-k).

All agree wherever defined; the test suite holds them against each other.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from . import series, trees
from .errors import DomainError
from .series import catalan
from .trees import DEFAULT_CAP


@dataclass(frozen=True)
class SpineDistribution:
    """counts[k-1] = number of size-n trees with k spine segments, k = 1..n."""

    n: int
    counts: tuple[int, ...]
    total: int

    def count(self, k: int) -> int:
        return self.counts[k - 1]


def _make(n: int, counts) -> SpineDistribution:
    return SpineDistribution(n=n, counts=tuple(counts), total=catalan(n))


def dist_exhaustive(n: int, cap: int = DEFAULT_CAP) -> SpineDistribution:
    """Distribution by direct enumeration; raises CapExceeded above the cap."""
    counts = [0] * n
    for t in trees.enumerate_trees(n, cap=cap):
        k = trees.spine_segments(t)
        if k:
            counts[k - 1] += 1
    return _make(n, counts)


def _recurrence_levels(n_max: int) -> list[list[int]]:
    # Level n+1 from level n: attaching at spine depth d gives spine d+1,
    # so S_{n+1}^j = sum_{k >= j-1} S_n^k with the j=1 term being the whole
    # level total.  Suffix sums make each level O(n).
    levels: list[list[int]] = [[]]
    if n_max >= 1:
        levels.append([1])
    for n in range(1, n_max):
        old = levels[n]
        suffix = [0] * (n + 1)
        for k in range(n - 1, -1, -1):
            suffix[k] = suffix[k + 1] + old[k]
        levels.append([suffix[0]] + suffix[:n])
    return levels


def dist_recurrence(n: int) -> SpineDistribution:
    return _make(n, _recurrence_levels(n)[n])


def dist_recurrence_table(n_max: int) -> list[SpineDistribution]:
    """Distributions for all n = 0..n_max in one pass."""
    return [_make(n, level) for n, level in enumerate(_recurrence_levels(n_max))]


def dist_series(n: int) -> SpineDistribution:
    """Distribution from the generating functions z^(k+1) * N^k."""
    degree = 2 * n + 1
    counts = [series.spine_gf(k, degree)[degree] for k in range(1, n + 1)]
    return _make(n, counts)


def dist_series_table(n_max: int) -> list[SpineDistribution]:
    """Series-route distributions for all n = 0..n_max, sharing one
    computation of the powers of N."""
    degree = 2 * n_max + 1
    n_series = series.node_gf(degree)
    table: list[list[int]] = [[] for _ in range(n_max + 1)]
    power = series.ps_from([1], degree)
    for k in range(1, n_max + 1):
        # z^(k+1) * N^k at index 2n+1 is N^k at index 2n-k.
        power = series.ps_mul(power, n_series, degree - k - 1)
        for n in range(k, n_max + 1):
            table[n].append(power[2 * n - k])
    return [_make(n, counts) for n, counts in enumerate(table)]


def dist_closed(n: int, k: int) -> int:
    """Ballot-number count of size-n trees with k spine segments."""
    if not 1 <= k <= n:
        raise DomainError(f"need 1 <= k <= n, got k={k}, n={n}")
    return k * math.comb(2 * n - k, n - k) // (2 * n - k)


def dist_closed_all(n: int) -> SpineDistribution:
    return _make(n, (dist_closed(n, k) for k in range(1, n + 1)))


def weighted_sum(n: int) -> int:
    """Total number of spine segments over all size-n trees; equals
    catalan(n+1) - catalan(n)."""
    if n < 1:
        raise DomainError("n must be >= 1")
    dist = dist_recurrence(n)
    return sum(k * c for k, c in enumerate(dist.counts, start=1))


def average(n: int) -> Fraction:
    """Average spine length of a size-n tree: (c_{n+1} - c_n) / c_n,
    which reduces to 3n/(n+2); tends to 3."""
    if n < 1:
        raise DomainError("n must be >= 1")
    return Fraction(catalan(n + 1) - catalan(n), catalan(n))


def render_decimal(value: Fraction, places: int = 2) -> str:
    """Decimal rendering of an exact rational, round-half-even."""
    num, den = value.numerator, value.denominator
    sign = "-" if num < 0 else ""
    scaled = abs(num) * 10 ** places
    q, r = divmod(scaled, den)
    if 2 * r > den or (2 * r == den and q & 1):
        q += 1
    digits = str(q).rjust(places + 1, "0")
    if places == 0:
        return sign + digits
    return f"{sign}{digits[:-places]}.{digits[-places:]}"
