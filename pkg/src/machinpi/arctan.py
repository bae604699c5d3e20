"""Arctangent of a rational argument to a requested digit count.

Two independent routes are provided on purpose.  ``arctan_fast`` sums the
accelerated series

    arctan(x) = 2 * sum_{m>=1} (1/(2m-1)) * g_m/(g_m^2 + h_m^2),

with g_1 = 2/x, h_1 = 1 and the recurrences
g_m = g_{m-1}(1 - 4/x^2) + 4 h_{m-1}/x,  h_m = h_{m-1}(1 - 4/x^2) - 4 g_{m-1}/x,
which gains about 2*log10(2/|x|) digits per term.  ``arctan_gregory`` is the
plain alternating Maclaurin series, kept as the slow cross-check oracle.
Never collapse the two: agreement between them is what the test suite
leans on.

The g/h pair satisfies (h_m + i g_m) = (1 + 2i/x)^(2m-1), so the exact
rational recurrence (``gh_step``) explodes in digit count per term; the
digit-budgeted evaluation therefore runs in fixed point (see _kernels) and
``gh_step`` survives for exact small-m work.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from ._backend import kernels
from .bignum import GUARD_DIGITS, FixedReal

__all__ = [
    "GHState",
    "SeriesBudget",
    "arctan_fast",
    "arctan_gregory",
    "estimate_terms",
    "gh_start",
    "gh_step",
]

_LOG10_4 = math.log10(4.0)


@dataclass(frozen=True)
class GHState:
    """Exact state of the g/h recurrence after m terms."""

    m: int
    g: Fraction
    h: Fraction
    partial_sum: Fraction


def gh_start(x: Fraction | int) -> GHState:
    """Initial state: g = 2/x, h = 1, with the first summand accumulated."""
    x = Fraction(x)
    if x == 0:
        raise ValueError("x must be nonzero")
    g = 2 / x
    h = Fraction(1)
    return GHState(m=1, g=g, h=h, partial_sum=2 * g / (g * g + h * h))


def gh_step(s: GHState, x: Fraction | int) -> GHState:
    """Advance the exact recurrence one term and accumulate its summand."""
    x = Fraction(x)
    k = 1 - 4 / (x * x)
    g = s.g * k + 4 * s.h / x
    h = s.h * k - 4 * s.g / x
    m = s.m + 1
    return GHState(
        m=m,
        g=g,
        h=h,
        partial_sum=s.partial_sum + Fraction(2, 2 * m - 1) * g / (g * g + h * h),
    )


@dataclass(frozen=True)
class SeriesBudget:
    """How a digit request was turned into a term count."""

    target_digits: int
    terms: int
    guard_digits: int


def _log10_int(n: int) -> float:
    """log10 of a positive integer, good to ~1e-12 relative regardless of size."""
    s = str(n)
    if len(s) <= 15:
        return math.log10(n)
    return math.log10(int(s[:15])) + (len(s) - 15)


def _exponent10(x: Fraction) -> int:
    """The e with 10**(e-1) <= |x| < 10**e, exact; requires x != 0."""
    a, b = abs(x.numerator), x.denominator
    e = len(str(a)) - len(str(b)) + 1
    # a/b < 10**e is guaranteed; tighten if a/b < 10**(e-1).
    if (a * 10 ** max(0, 1 - e) < b * 10 ** max(0, e - 1)):
        e -= 1
    return e


def estimate_terms(x: Fraction | int, digits: int, guard_digits: int = 0) -> int:
    """Smallest term count M with 4*(1 + 4/x^2)**(-(2M+1)/2) < 10**-(digits+guard).

    The bound comes from |g_m^2 + h_m^2| = (1 + 4/x^2)^(2m-1): the tail after
    M terms is below 4 times the magnitude of term M+1.
    """
    x = Fraction(x)
    if x == 0:
        raise ValueError("x must be nonzero")
    if abs(x) >= 1:
        raise ValueError("|x| must be < 1")
    a, b = abs(x.numerator), x.denominator
    a2 = a * a
    # digits gained per half-power of the norm: L = log10 sqrt(1 + 4/x^2)
    level = 0.5 * (_log10_int(a2 + 4 * b * b) - _log10_int(a2))
    target = digits + guard_digits + _LOG10_4
    m = math.floor((target / level - 1.0) / 2.0) + 1
    return max(1, m)


def _result_scale(x: Fraction, digits: int) -> int:
    # arctan(x) has the same leading-zero run as x; one extra place covers the
    # case where arctan drops just below a power of ten.
    lead = max(0, -_exponent10(x))
    return digits + lead + GUARD_DIGITS + 1


def arctan_fast(x: Fraction | int, digits: int) -> FixedReal:
    """arctan(x) by the accelerated series, to `digits` significant digits.

    Only |x| < 1 is supported (all uses here have |x| <= 1/2); x = 0 is the
    caller's job.  The term count comes from :func:`estimate_terms` against
    the working scale, which already includes the guard digits.
    """
    x = Fraction(x)
    if digits < 1:
        raise ValueError("digits must be at least 1")
    if x == 0:
        raise ValueError("x must be nonzero; arctan(0) is exactly 0")
    if abs(x) >= 1:
        raise ValueError(f"|x| must be < 1, got {x}")
    scale = _result_scale(x, digits)
    terms = estimate_terms(x, scale)
    mant = kernels.arctan_acc_fixed(x.numerator, x.denominator, scale, terms)
    return FixedReal(mant, scale, precision=scale - GUARD_DIGITS)


def arctan_gregory(x: Fraction | int, digits: int) -> FixedReal:
    """arctan(x) by the alternating Maclaurin series (the oracle route).

    Stops on term underflow; the alternating bound caps the truncation error
    at one unit of the working scale.  |x| < 1 required, x = 0 allowed.
    """
    x = Fraction(x)
    if digits < 1:
        raise ValueError("digits must be at least 1")
    if x == 0:
        return FixedReal(0, digits)
    if abs(x) >= 1:
        raise ValueError(f"|x| must be < 1, got {x}")
    scale = _result_scale(x, digits)
    a, b = abs(x.numerator), x.denominator
    per_term = 2.0 * (_log10_int(b) - _log10_int(a))
    max_terms = int(scale / max(per_term, 1e-9)) + 16
    mant = kernels.arctan_gregory_fixed(x.numerator, x.denominator, scale, max_terms)
    return FixedReal(mant, scale, precision=scale - GUARD_DIGITS)
