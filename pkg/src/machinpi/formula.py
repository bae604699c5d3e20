"""Generation and certification of two-term Machin-like formulas.

For k >= 2 the identity

    pi/4 = 2**(k-1) * arctan(1/beta1) + arctan(1/beta2)

holds exactly when beta1 is any positive rational and beta2 is forced by

    beta2 = 2/(((beta1 + i)/(beta1 - i))**(2**(k-1)) - i) - i,

which is rational whenever beta1 is.  Choosing beta1 as the floor of
gamma = c_k / sqrt(2 - c_{k-1}) (the nested radicals c_1 = sqrt(2),
c_{j+1} = sqrt(2 + c_j); gamma equals cot(pi/2**(k+1))) keeps the second
argument 1/beta2 small, at the price of beta2's numerator and denominator
roughly doubling in digit count for every unit of k.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .arctan import arctan_fast
from .bignum import GUARD_DIGITS, FixedReal, fixed_sqrt
from .gaussian import GaussianRational
from .reference import pi_reference

__all__ = [
    "DEFAULT_MAX_K",
    "MachinFormula",
    "RadicalPair",
    "compute_beta2",
    "export_text",
    "generate",
    "nested_radical",
    "parse_export",
    "select_beta1",
    "validate",
]

# beta2's denominator has roughly 2**(k-2) * log10(beta1^2+1) digits; the
# default cap keeps that near the 10**4.7 scale.  k=27 would need a
# 522,185,807-digit denominator.
DEFAULT_MAX_K = 16


@dataclass(frozen=True)
class MachinFormula:
    """The certified tuple for pi/4 = alpha1*arctan(1/beta1) + arctan(1/beta2)."""

    k: int
    alpha1: int
    beta1: int
    beta2: Fraction
    alpha2: int = 1

    @property
    def arctan_argument(self) -> Fraction:
        """The second term's argument 1/beta2, the huge printed rational."""
        return 1 / self.beta2


@dataclass(frozen=True)
class RadicalPair:
    """Nested-radical scaffolding behind a beta1 choice.

    gamma = c_k/sqrt(2 - c_{k-1}) and epsilon = floor(gamma) - gamma, which
    is always in (-1, 0): the floor undershoots a (provably irrational)
    cotangent.
    """

    c_km1: FixedReal
    c_k: FixedReal
    gamma: FixedReal
    epsilon: FixedReal


def nested_radical(k: int, digits: int) -> RadicalPair:
    """c_{k-1}, c_k and gamma, each good to `digits` significant digits.

    2 - c_{k-1} loses about 0.6*k digits to cancellation, so the working
    scale grows with k.
    """
    if k < 2:
        raise ValueError("k must be at least 2")
    if digits < 1:
        raise ValueError("digits must be at least 1")
    scale = digits + k + GUARD_DIGITS
    two = FixedReal(2)
    c = fixed_sqrt(two, scale)  # c_1
    prev = c
    for _ in range(k - 1):
        prev = c
        c = fixed_sqrt(two + c, scale)
    root = fixed_sqrt(two - prev, scale)
    gamma = c.divide(root, scale)
    epsilon = FixedReal(gamma.int_part()) - gamma
    return RadicalPair(c_km1=prev, c_k=c, gamma=gamma, epsilon=epsilon)


def select_beta1(k: int) -> int:
    """floor(gamma) with the floor certified unambiguous.

    The working precision doubles whenever the computed gamma sits within
    1e-10 of an integer, so a near-boundary fractional part can never be
    floored off the wrong side silently.
    """
    digits = 30
    while True:
        gamma = nested_radical(k, digits).gamma
        q = 10**gamma.scale
        frac = gamma.mantissa % q
        margin = 10 ** (gamma.scale - 10)
        if margin < frac < q - margin:
            return gamma.mantissa // q
        if digits > 4000:
            raise ArithmeticError(f"floor of gamma is still ambiguous for k={k}")
        digits *= 2


def compute_beta2(beta1: Fraction | int, k: int) -> Fraction:
    """The exact rational beta2 forced by beta1 and k.

    The full Gaussian expression must come out purely real; that is asserted
    rather than assumed.
    """
    if k < 2:
        raise ValueError("k must be at least 2")
    b1 = Fraction(beta1)
    if b1 <= 0:
        raise ValueError("beta1 must be positive")
    z = GaussianRational.of(b1, 1) / GaussianRational.of(b1, -1)
    zp = z ** (2 ** (k - 1))
    denom = GaussianRational(zp.re, zp.im - 1)
    if denom.is_zero():
        raise ZeroDivisionError(f"degenerate beta1={beta1}: exponentiation landed on i")
    out = GaussianRational.of(2, 0) / denom
    out = GaussianRational(out.re, out.im - 1)
    if out.im != 0:
        raise ArithmeticError(
            f"imaginary part failed to vanish for beta1={beta1}, k={k}: {out.im}"
        )
    return out.re


def generate(k: int, *, max_k: int = DEFAULT_MAX_K, check_digits: int = 50) -> MachinFormula:
    """Build and self-check the formula for a given k.

    Refuses k beyond `max_k`: the digit count of beta2 doubles per unit of k,
    and e.g. k=27 already needs a 522,185,807-digit denominator, far beyond
    what exact arithmetic here should touch.
    """
    if k < 2:
        raise ValueError("k must be at least 2")
    if k > max_k:
        est = est_denominator_digits(k)
        raise ValueError(
            f"k={k} exceeds max_k={max_k}: beta2 would carry a ~{est:,}-digit "
            f"denominator (doubling per unit of k; k=27 reaches 522,185,807 "
            f"digits).  Pass a larger max_k to override."
        )
    beta1 = select_beta1(k)
    beta2 = compute_beta2(beta1, k)
    f = MachinFormula(k=k, alpha1=2 ** (k - 1), beta1=beta1, beta2=beta2)
    ok, residual = validate(f, check_digits)
    if not ok:
        raise ArithmeticError(
            f"generated formula failed self-validation at {check_digits} digits "
            f"(residual {residual})"
        )
    return f


def est_denominator_digits(k: int) -> int:
    """Rough decimal digit count of beta2's denominator for a given k."""
    gamma = 2 ** (k + 1) / math.pi  # cot(x) ~ 1/x
    return int(2 ** (k - 2) * math.log10(gamma * gamma + 1))


def validate(f: MachinFormula, digits: int) -> tuple[bool, FixedReal]:
    """Check the identity to `digits` digits; returns (passed, residual).

    The pi/4 reference comes from the embedded/oracle reference, not from the
    formula under test, so a wrong beta2 cannot validate itself.
    """
    if digits < 1:
        raise ValueError("digits must be at least 1")
    work = digits + GUARD_DIGITS
    pi4 = pi_reference(work + 2).divide(4, work + 2)
    a1 = arctan_fast(Fraction(1, f.beta1), work + len(str(f.alpha1)) + 2)
    a2 = arctan_fast(f.arctan_argument, work + 2)
    residual = abs(pi4 - a1 * f.alpha1 - a2 * f.alpha2)
    return residual.to_fraction() < Fraction(1, 10**digits), residual


def pi_by_series(f: MachinFormula, places: int) -> FixedReal:
    """Evaluate pi directly from the formula's two arctangent terms.

    Both terms go through the accelerated series at full precision; this is
    the non-iterative route and the cross-check for the Newton one.
    """
    if places < 1:
        raise ValueError("places must be at least 1")
    work = places + GUARD_DIGITS
    a1 = arctan_fast(Fraction(1, f.beta1), work + len(str(4 * f.alpha1)))
    a2 = arctan_fast(f.arctan_argument, work)
    return ((a1 * f.alpha1 + a2 * f.alpha2) * 4).rescale(
        places + GUARD_DIGITS // 2, precision=places
    )


# -- text export ------------------------------------------------------------
#
# Format: a header line `k=<k> beta1=<beta1> num_digits=<n> den_digits=<d>`
# followed by the decimal numerator and denominator of the second arctangent
# argument 1/beta2, one value per line.


def export_text(f: MachinFormula) -> str:
    arg = f.arctan_argument
    num, den = arg.numerator, arg.denominator
    header = (
        f"k={f.k} beta1={f.beta1} "
        f"num_digits={len(str(abs(num)))} den_digits={len(str(den))}"
    )
    return f"{header}\n{num}\n{den}\n"


def parse_export(text: str) -> MachinFormula:
    lines = [ln.strip() for ln in text.strip().splitlines()]
    if len(lines) != 3:
        raise ValueError("expected a header line, a numerator and a denominator")
    fields = dict(item.split("=", 1) for item in lines[0].split())
    k = int(fields["k"])
    beta1 = int(fields["beta1"])
    num, den = int(lines[1]), int(lines[2])
    if len(str(abs(num))) != int(fields["num_digits"]):
        raise ValueError("numerator digit count does not match header")
    if len(str(den)) != int(fields["den_digits"]):
        raise ValueError("denominator digit count does not match header")
    return MachinFormula(
        k=k, alpha1=2 ** (k - 1), beta1=beta1, beta2=1 / Fraction(num, den)
    )
