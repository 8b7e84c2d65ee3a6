"""Limit behaviour of the spine distribution.

Writing the node-count series as N = z * phi(N) with phi(x) = 1 + x^2, the
characteristic root tau is the smallest positive solution of
phi(x) = x * phi'(x); here tau = 1.  Substituting z = N/(1+N^2) turns the
k-segment series into the rational function N^(2k+1) / (1+N^2)^(k+1), and
its derivative at tau gives the limiting fraction of trees with k spine
segments: k / 2^(k+1).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from . import series
from .errors import NoRoot

# Bisection stops when the bracket is narrower than this.
ROOT_TOLERANCE = Fraction(1, 10 ** 12)
# Give up bracket hunting beyond this abscissa.
BRACKET_BOUND = 2 ** 20


@dataclass(frozen=True)
class Poly:
    """Polynomial with exact rational coefficients; coeffs[i] is the
    coefficient of x^i, trailing zeros trimmed."""

    coeffs: tuple[Fraction, ...]

    @staticmethod
    def of(*coeffs) -> Poly:
        c = [Fraction(v) for v in coeffs]
        while c and c[-1] == 0:
            c.pop()
        return Poly(tuple(c))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __call__(self, x: Fraction) -> Fraction:
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def derivative(self) -> Poly:
        return Poly.of(*(i * c for i, c in enumerate(self.coeffs) if i))

    def __sub__(self, other: Poly) -> Poly:
        n = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (Fraction(0),) * (n - len(self.coeffs))
        b = other.coeffs + (Fraction(0),) * (n - len(other.coeffs))
        return Poly.of(*(x - y for x, y in zip(a, b)))

    def shift_up(self) -> Poly:
        """Multiply by x."""
        if not self.coeffs:
            return self
        return Poly((Fraction(0),) + self.coeffs)


@dataclass(frozen=True)
class RationalFn:
    """Quotient of two polynomials; den must not be the zero polynomial."""

    num: Poly
    den: Poly

    def __call__(self, x: Fraction) -> Fraction:
        return self.num(x) / self.den(x)

    def derivative_at(self, x: Fraction) -> Fraction:
        """Quotient rule, evaluated exactly at x."""
        d = self.den(x)
        return (self.num.derivative()(x) * d
                - self.num(x) * self.den.derivative()(x)) / (d * d)


def _exact_sqrt(value: Fraction) -> Fraction | None:
    p, q = value.numerator, value.denominator
    rp, rq = math.isqrt(p), math.isqrt(q)
    if rp * rp == p and rq * rq == q:
        return Fraction(rp, rq)
    return None


def tau(phi: Poly) -> Fraction:
    """Smallest positive root of phi(x) = x * phi'(x).

    Quadratic phi is solved exactly (the needed case, phi = 1 + x^2, gives
    tau = 1).  Other polynomials fall back to bisection on exact rationals
    to within ROOT_TOLERANCE; NoRoot if no sign change is found.
    """
    g = phi - phi.derivative().shift_up()
    if phi.degree <= 2 and g.degree <= 2:
        # g = a0 + a1*x + a2*x^2 with a1 = 0 when phi is quadratic.
        a = list(g.coeffs) + [Fraction(0)] * (3 - len(g.coeffs))
        if a[2] != 0 and a[1] == 0 and -a[0] / a[2] > 0:
            root = _exact_sqrt(-a[0] / a[2])
            if root is not None:
                return root
    # Bracket hunt: g(0) = phi(0) > 0, look for the first sign change.
    lo = Fraction(0)
    hi = Fraction(1)
    while g(hi) > 0:
        lo, hi = hi, hi * 2
        if hi > BRACKET_BOUND:
            raise NoRoot("no sign change of phi(x) - x*phi'(x) up to the bound")
    if g(hi) == 0:
        return hi
    while hi - lo > ROOT_TOLERANCE:
        mid = (lo + hi) / 2
        v = g(mid)
        if v == 0:
            return mid
        if v > 0:
            lo = mid
        else:
            hi = mid
    return (lo + hi) / 2


def spine_rational(k: int) -> RationalFn:
    """The k-segment series as a rational function of N:
    N^(2k+1) / (1+N^2)^(k+1)."""
    if k < 1:
        raise ValueError("k must be >= 1")
    num = Poly.of(*([0] * (2 * k + 1) + [1]))
    den = Poly.of(*_binomial_even_coeffs(k + 1))
    return RationalFn(num, den)


def _binomial_even_coeffs(power: int) -> list[int]:
    # (1 + x^2)^power: binomial coefficients at even exponents.
    coeffs = [0] * (2 * power + 1)
    for m in range(power + 1):
        coeffs[2 * m] = math.comb(power, m)
    return coeffs


def limit_fraction(k: int) -> Fraction:
    """Limiting fraction of size-n trees with k spine segments, computed by
    differentiating the rational form at the characteristic root.  Equals
    k / 2^(k+1)."""
    root = tau(Poly.of(1, 0, 1))
    return spine_rational(k).derivative_at(root)


def substitution_check(k: int, degree: int) -> bool:
    """Verify, through the truncation degree, that substituting
    z = N/(1+N^2) into the k-segment series yields
    N^(2k+1) * (1+N^2)^(-(k+1)) as a series in N."""
    if k < 1:
        raise ValueError("k must be >= 1")
    inv = _geometric_inverse_one_plus_square(degree)
    z_of_n = series.ps_shift(inv, 1, degree)

    # Left side: compose the z-series with z := z_of_n (Horner).
    s = series.spine_gf(k, degree)
    lhs = series.ps_from([s.coeffs[-1]], degree)
    for i in range(degree - 1, -1, -1):
        lhs = series.ps_mul(lhs, z_of_n, degree)
        lhs = series.ps_add(lhs, series.ps_from([s[i]], degree), degree)

    # Right side: N^(2k+1) times the (k+1)-st power of the inverse.
    rhs = series.ps_from([1], degree)
    for _ in range(k + 1):
        rhs = series.ps_mul(rhs, inv, degree)
    rhs = series.ps_shift(rhs, 2 * k + 1, degree)
    return lhs.coeffs == rhs.coeffs


def _geometric_inverse_one_plus_square(degree: int) -> series.PowerSeries:
    # 1/(1+x^2) = 1 - x^2 + x^4 - ...
    coeffs = [0] * (degree + 1)
    for i in range(0, degree + 1, 2):
        coeffs[i] = 1 if i % 4 == 0 else -1
    return series.PowerSeries(tuple(coeffs))


def moment_sums(k_max: int) -> tuple[Fraction, Fraction]:
    """Exact partial sums of k/2^(k+1) and k^2/2^(k+1) for k = 1..k_max;
    they tend to 1 and 3."""
    if k_max < 1:
        raise ValueError("k_max must be >= 1")
    first = sum(Fraction(k, 2 ** (k + 1)) for k in range(1, k_max + 1))
    second = sum(Fraction(k * k, 2 ** (k + 1)) for k in range(1, k_max + 1))
    return first, second


def empirical_convergence(n: int, k_max: int) -> list[tuple[int, Fraction, Fraction]]:
    """Rows (k, S_n^k / c_n, k/2^(k+1)) for k = 1..k_max, exact rationals."""
    if k_max > n:
        raise ValueError("k_max must be <= n")
    from . import stats

    dist = stats.dist_recurrence(n)
    return [
        (k, Fraction(dist.count(k), dist.total), Fraction(k, 2 ** (k + 1)))
        for k in range(1, k_max + 1)
    ]
