"""Exact complex numbers with rational components.

The one consumer-facing job of this type is exponentiation of the
unit-modulus quotient (b + i)/(b - i) to a power of two, which is where the
digit counts explode; squarings therefore run on a common-denominator
integer triple with a single gcd reduction per step instead of per-component
``Fraction`` normalisation.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

__all__ = ["GaussianRational"]


@dataclass(frozen=True)
class GaussianRational:
    """re + im*i with exact rational parts, immutable."""

    re: Fraction
    im: Fraction

    @classmethod
    def of(cls, re, im=0) -> "GaussianRational":
        return cls(Fraction(re), Fraction(im))

    def conjugate(self) -> "GaussianRational":
        return GaussianRational(self.re, -self.im)

    def norm_squared(self) -> Fraction:
        """|z|^2 = re^2 + im^2, exact."""
        return self.re * self.re + self.im * self.im

    def is_zero(self) -> bool:
        return self.re == 0 and self.im == 0

    def __mul__(self, other: "GaussianRational") -> "GaussianRational":
        if not isinstance(other, GaussianRational):
            return NotImplemented
        return GaussianRational(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    def __truediv__(self, other: "GaussianRational") -> "GaussianRational":
        if not isinstance(other, GaussianRational):
            return NotImplemented
        n = other.norm_squared()
        if n == 0:
            raise ZeroDivisionError("division by zero GaussianRational")
        return GaussianRational(
            (self.re * other.re + self.im * other.im) / n,
            (self.im * other.re - self.re * other.im) / n,
        )

    def __pow__(self, e: int) -> "GaussianRational":
        """Exact binary exponentiation (square-and-multiply), e >= 0.

        Components are renormalised after every squaring so the integers stay
        as small as the reduced value allows.
        """
        if not isinstance(e, int):
            return NotImplemented
        if e < 0:
            raise ValueError("negative exponents are not supported")
        if e == 0:
            return GaussianRational.of(1, 0)
        # Common-denominator triple (a, b, c): value = (a + b*i)/c.
        c = math.lcm(self.re.denominator, self.im.denominator)
        a = self.re.numerator * (c // self.re.denominator)
        b = self.im.numerator * (c // self.im.denominator)
        out = None
        while True:
            if e & 1:
                out = (a, b, c) if out is None else _triple_mul(out, (a, b, c))
            e >>= 1
            if not e:
                break
            a, b = a * a - b * b, 2 * a * b
            c = c * c
            g = math.gcd(math.gcd(a, b), c)
            if g > 1:
                a //= g
                b //= g
                c //= g
        a, b, c = out
        return GaussianRational(Fraction(a, c), Fraction(b, c))


def _triple_mul(x: tuple, y: tuple) -> tuple:
    ax, bx, cx = x
    ay, by, cy = y
    a = ax * ay - bx * by
    b = ax * by + bx * ay
    c = cx * cy
    g = math.gcd(math.gcd(a, b), c)
    return (a // g, b // g, c // g) if g > 1 else (a, b, c)
