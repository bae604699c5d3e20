"""Embedded pi reference digits.

The constant below carries the first 100 decimal places.  It is not trusted
blindly: the test suite recomputes it through two independently generated
formulas (k=3 and k=6) and by the classic 4*arctan(1/5) - arctan(1/239)
identity, and all three must agree.  Longer references are computed on
demand from that classic identity using the slow oracle series, so they stay
independent of the accelerated evaluation path.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from .arctan import arctan_gregory
from .bignum import GUARD_DIGITS, FixedReal

__all__ = ["PI_100", "pi_reference"]

PI_100 = (
    "3."
    "14159265358979323846264338327950288419716939937510"
    "58209749445923078164062862089986280348253421170679"
)


@lru_cache(maxsize=16)
def pi_reference(places: int) -> FixedReal:
    """Pi with at least `places` correct decimal places.

    Up to 100 places this is an exact truncation of the embedded constant;
    beyond that it is recomputed via the classic Machin identity with the
    Gregory-series oracle and returned with guard digits intact.
    """
    if places < 1:
        raise ValueError("places must be at least 1")
    if places <= 100:
        return FixedReal.parse(PI_100[: places + 2])
    work = places + GUARD_DIGITS
    a5 = arctan_gregory(Fraction(1, 5), work)
    a239 = arctan_gregory(Fraction(1, 239), work)
    return (a5 * 16 - a239 * 4).rescale(places + GUARD_DIGITS // 2, precision=places)
