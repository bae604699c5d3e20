"""Exact integer/rational arithmetic and a decimal fixed-point real type.

``BigInt`` and ``BigRational`` are Python's own arbitrary-precision ``int``
and ``fractions.Fraction``: both already guarantee the contracts needed here
(canonical reduced form with positive denominator, exact arithmetic,
explicit ``ZeroDivisionError``).  What this module adds is :class:`FixedReal`,
a scaled decimal integer (``value = mantissa / 10**scale``) used for every
approximate quantity in the package.  A decimal scale is deliberate: all
precision bookkeeping downstream is in decimal digits, and truncating a
value to a digit budget must be bit-exact reproducible.

Rounding discipline: unless a function says otherwise, digit-dropping
operations truncate toward zero, so ``x`` and ``-x`` always round
symmetrically.
"""

from __future__ import annotations

import math
from fractions import Fraction

__all__ = [
    "BigInt",
    "BigRational",
    "FixedReal",
    "GUARD_DIGITS",
    "fixed_sqrt",
    "isqrt",
    "matching_places",
    "matching_significant",
    "round_to_digits",
]

BigInt = int
BigRational = Fraction

# Extra working digits carried by derived quantities so that truncation to a
# claimed digit budget is safe.
GUARD_DIGITS = 10


def isqrt(n: int) -> int:
    """Exact floor square root of a non-negative integer."""
    if n < 0:
        raise ValueError("isqrt is undefined for negative numbers")
    return math.isqrt(n)


def _trunc_div(a: int, b: int) -> int:
    """Integer division truncating toward zero (b > 0)."""
    q = abs(a) // b
    return -q if a < 0 else q


class FixedReal:
    """A real number stored as ``mantissa * 10**-scale``.

    ``precision`` records how many of the fractional digits are claimed to be
    correct (``precision <= scale``); the digits beyond it are guard digits.
    Instances are immutable and safe to share between threads.
    """

    __slots__ = ("mantissa", "scale", "precision")

    def __init__(self, mantissa: int, scale: int = 0, precision: int | None = None):
        if scale < 0:
            raise ValueError("scale must be non-negative")
        if precision is None:
            precision = scale
        if not 0 <= precision <= scale:
            raise ValueError("precision must lie in [0, scale]")
        object.__setattr__(self, "mantissa", mantissa)
        object.__setattr__(self, "scale", scale)
        object.__setattr__(self, "precision", precision)

    def __setattr__(self, name, value):
        raise AttributeError("FixedReal is immutable")

    # -- construction -----------------------------------------------------

    @classmethod
    def from_fraction(cls, value: Fraction | int, scale: int) -> "FixedReal":
        """Truncate an exact rational toward zero at the given scale."""
        value = Fraction(value)
        m = _trunc_div(value.numerator * 10**scale, value.denominator)
        return cls(m, scale)

    @classmethod
    def parse(cls, text: str) -> "FixedReal":
        """Parse a plain decimal literal such as ``'-0.014435'``."""
        text = text.strip()
        sign = -1 if text.startswith("-") else 1
        text = text.lstrip("+-")
        if "." in text:
            intpart, frac = text.split(".", 1)
        else:
            intpart, frac = text, ""
        if not (intpart + frac).isdigit() or not intpart:
            raise ValueError(f"not a decimal literal: {text!r}")
        return cls(sign * int(intpart + frac or "0"), len(frac))

    # -- conversions -------------------------------------------------------

    def to_fraction(self) -> Fraction:
        return Fraction(self.mantissa, 10**self.scale)

    def __float__(self) -> float:
        return float(self.to_fraction())

    def int_part(self) -> int:
        """Integer part, truncated toward zero."""
        return _trunc_div(self.mantissa, 10**self.scale)

    def exponent10(self) -> int:
        """The e with ``10**(e-1) <= |value| < 10**e``; requires value != 0."""
        if self.mantissa == 0:
            raise ValueError("exponent10 of zero")
        return len(str(abs(self.mantissa))) - self.scale

    def is_zero(self) -> bool:
        return self.mantissa == 0

    # -- formatting --------------------------------------------------------

    def to_str(self, places: int | None = None) -> str:
        """Plain ASCII decimal string, truncated toward zero at `places`."""
        v = self if places is None else self.rescale(places)
        mag = abs(v.mantissa)
        ip, fp = divmod(mag, 10**v.scale)
        sign = "-" if v.mantissa < 0 else ""
        if v.scale == 0:
            return f"{sign}{ip}"
        return f"{sign}{ip}.{str(fp).zfill(v.scale)}"

    def __str__(self) -> str:
        return self.to_str()

    def __repr__(self) -> str:
        shown = self.to_str()
        if len(shown) > 40:
            shown = shown[:37] + "..."
        return f"FixedReal({shown!r}, scale={self.scale}, precision={self.precision})"

    # -- rescaling ---------------------------------------------------------

    def rescale(self, scale: int, precision: int | None = None) -> "FixedReal":
        """Change scale; dropping digits truncates toward zero, growing pads."""
        if scale < 0:
            raise ValueError("scale must be non-negative")
        if scale >= self.scale:
            m = self.mantissa * 10 ** (scale - self.scale)
        else:
            m = _trunc_div(self.mantissa, 10 ** (self.scale - scale))
        return FixedReal(m, scale, precision)

    # -- arithmetic (exact unless an explicit scale is given) ---------------

    def _aligned(self, other: "FixedReal") -> tuple[int, int, int]:
        s = max(self.scale, other.scale)
        return (
            self.mantissa * 10 ** (s - self.scale),
            other.mantissa * 10 ** (s - other.scale),
            s,
        )

    def __add__(self, other: "FixedReal") -> "FixedReal":
        if not isinstance(other, FixedReal):
            return NotImplemented
        a, b, s = self._aligned(other)
        return FixedReal(a + b, s)

    def __sub__(self, other: "FixedReal") -> "FixedReal":
        if not isinstance(other, FixedReal):
            return NotImplemented
        a, b, s = self._aligned(other)
        return FixedReal(a - b, s)

    def __neg__(self) -> "FixedReal":
        return FixedReal(-self.mantissa, self.scale, self.precision)

    def __abs__(self) -> "FixedReal":
        return FixedReal(abs(self.mantissa), self.scale, self.precision)

    def __mul__(self, other):
        if isinstance(other, int):
            return FixedReal(self.mantissa * other, self.scale)
        if isinstance(other, FixedReal):
            return FixedReal(self.mantissa * other.mantissa, self.scale + other.scale)
        return NotImplemented

    __rmul__ = __mul__

    def divide(self, other: "FixedReal | int", scale: int) -> "FixedReal":
        """Quotient truncated toward zero at the requested scale."""
        if isinstance(other, int):
            other = FixedReal(other, 0)
        if other.mantissa == 0:
            raise ZeroDivisionError("division by zero FixedReal")
        p = scale + other.scale - self.scale
        num, den = self.mantissa, other.mantissa
        if p >= 0:
            num *= 10**p
        else:
            den *= 10**-p
        sign = -1 if (num < 0) != (den < 0) else 1
        return FixedReal(sign * (abs(num) // abs(den)), scale)

    # -- comparisons ---------------------------------------------------------

    def _cmp(self, other: "FixedReal") -> int:
        a, b, _ = self._aligned(other)
        return (a > b) - (a < b)

    def __eq__(self, other):
        if not isinstance(other, FixedReal):
            return NotImplemented
        return self._cmp(other) == 0

    def __lt__(self, other):
        return self._cmp(other) < 0

    def __le__(self, other):
        return self._cmp(other) <= 0

    def __gt__(self, other):
        return self._cmp(other) > 0

    def __ge__(self, other):
        return self._cmp(other) >= 0

    def __hash__(self):
        return hash(self.to_fraction())


def round_to_digits(x: FixedReal, d: int, mode: str = "trunc") -> FixedReal:
    """Keep the first `d` significant decimal digits of ``x``.

    ``mode`` is ``'trunc'`` (default, truncation toward zero — the behaviour
    that makes digit-budget replays reproducible) or ``'half-away'``.
    """
    if d < 1:
        raise ValueError("d must be at least 1")
    if mode not in ("trunc", "half-away"):
        raise ValueError(f"unknown rounding mode {mode!r}")
    m = abs(x.mantissa)
    if m == 0:
        return FixedReal(0, min(x.scale, d))
    drop = len(str(m)) - d
    scale = x.scale - drop
    if drop > 0:
        q = 10**drop
        m = (m + q // 2) // q if mode == "half-away" else m // q
    else:
        m *= 10**-drop
    if scale < 0:
        # Value >= 10**d: pad the dropped places back with zeros.
        m *= 10**-scale
        scale = 0
    sign = -1 if x.mantissa < 0 else 1
    return FixedReal(sign * m, scale)


def fixed_sqrt(x: FixedReal, digits: int) -> FixedReal:
    """Square root accurate to `digits` significant decimal digits.

    Computed as an exact integer square root of the rescaled mantissa, with
    guard digits; the result is a truncation of the true root.
    """
    if digits < 1:
        raise ValueError("digits must be at least 1")
    if x.mantissa < 0:
        raise ValueError("square root of a negative number")
    if x.mantissa == 0:
        return FixedReal(0, digits)
    # A tiny input of magnitude 10**e needs extra places so the root still
    # carries `digits` significant digits.
    scale = digits + GUARD_DIGITS + max(0, -(x.exponent10() // 2))
    shift = 2 * scale - x.scale
    m = x.mantissa * 10**shift if shift >= 0 else x.mantissa // 10**-shift
    return FixedReal(math.isqrt(m), scale, precision=max(1, scale - GUARD_DIGITS))


def matching_places(a: FixedReal, b: FixedReal) -> int:
    """Count the leading decimal places (digits after the point) on which the
    decimal expansions of ``a`` and ``b`` agree.

    Zero if the signs or integer parts differ.  This is literal digit-string
    agreement, not an error bound: 3.1415935 and 3.1415926 share 5 places.
    """
    if a.mantissa == 0 and b.mantissa == 0:
        return min(a.scale, b.scale)
    if (a.mantissa < 0) != (b.mantissa < 0):
        return 0
    s = max(a.scale, b.scale)
    ma = abs(a.mantissa) * 10 ** (s - a.scale)
    mb = abs(b.mantissa) * 10 ** (s - b.scale)
    q = 10**s
    if ma // q != mb // q:
        return 0
    fa = str(ma % q).zfill(s)
    fb = str(mb % q).zfill(s)
    n = 0
    for ca, cb in zip(fa, fb):
        if ca != cb:
            break
        n += 1
    return n


def matching_significant(a: FixedReal, b: FixedReal) -> int:
    """Count matching significant digits (from the first nonzero digit)."""
    if a.mantissa == 0 or b.mantissa == 0:
        return 0
    if (a.mantissa < 0) != (b.mantissa < 0):
        return 0
    s = max(a.scale, b.scale)
    ma = abs(a.mantissa) * 10 ** (s - a.scale)
    mb = abs(b.mantissa) * 10 ** (s - b.scale)
    width = max(len(str(ma)), len(str(mb)))
    sa = str(ma).zfill(width)
    sb = str(mb).zfill(width)
    n = zeros = 0
    for ca, cb in zip(sa, sb):
        if ca != cb:
            break
        if ca == "0" and n == zeros:
            zeros += 1
        n += 1
    return n - zeros
