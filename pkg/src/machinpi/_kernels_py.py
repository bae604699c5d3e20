"""Pure-Python series kernels over plain integer mantissas.

These are the inner loops of the package: everything works on scaled
integers (``value = mantissa / 10**scale``) so that a compiled twin
(``_kernels.pyx``) can mirror them statement for statement.  Floor division
keeps every step within one unit in the last place; callers budget guard
digits for that.  Signs are stripped before the loops and restored after, so
odd functions are exactly odd at the mantissa level.
"""

__all__ = ["arctan_acc_fixed", "arctan_gregory_fixed", "sin_cos_fixed"]

BACKEND = "pure"


def arctan_acc_fixed(num: int, den: int, scale: int, terms: int) -> int:
    """Accelerated arctangent series for x = num/den, as a scaled mantissa.

    Sums 2 * sum_{m=1..terms} (1/(2m-1)) * g_m/(g_m^2 + h_m^2) where the
    g/h pair follows the closed form (h_m + i*g_m) = (1 + 2i/x)^(2m-1).
    Rather than iterating g/h directly (their digit count explodes), each
    term is Im(s^(2m-1)) for s = (1 + 2i/x)/|1 + 2i/x|^2, whose components
    stay below one; s^2 multiplies through the loop in fixed point.
    Requires 0 < |num/den| < 1.
    """
    sign = -1 if num < 0 else 1
    a = abs(num)
    b = den
    q = 10**scale
    a2 = a * a
    norm = a2 + 4 * b * b
    # s = a*(a + 2bi)/(a^2 + 4b^2); s^2 computed from the exact rational form.
    cur_r = a2 * q // norm
    cur_i = 2 * a * b * q // norm
    norm2 = norm * norm
    s2_r = a2 * (a2 - 4 * b * b) * q // norm2
    s2_i = 4 * a2 * a * b * q // norm2
    acc = 2 * cur_i
    for m in range(2, terms + 1):
        cur_r, cur_i = (
            (cur_r * s2_r - cur_i * s2_i) // q,
            (cur_r * s2_i + cur_i * s2_r) // q,
        )
        acc += 2 * cur_i // (2 * m - 1)
    return sign * acc


def arctan_gregory_fixed(num: int, den: int, scale: int, max_terms: int) -> int:
    """Alternating Maclaurin arctangent for x = num/den, as a scaled mantissa.

    Stops when the next term underflows the scale, which by the alternating
    series bound leaves the truncation error below one unit in the last
    place.  Requires |num/den| < 1.
    """
    sign = -1 if num < 0 else 1
    a = abs(num)
    if a == 0:
        return 0
    q = 10**scale
    x2_num = a * a
    x2_den = den * den
    t = a * q // den
    acc = 0
    add = True
    for m in range(1, max_terms + 1):
        term = t // (2 * m - 1)
        if term == 0:
            break
        acc = acc + term if add else acc - term
        add = not add
        t = t * x2_num // x2_den
    return sign * acc


def sin_cos_fixed(y: int, scale: int, terms: int) -> tuple[int, int]:
    """Truncated Maclaurin sine and cosine of y/10**scale, one shared loop.

    Both series run to the given term count; with |y| < 1 the terms decrease,
    so the truncation error is below the first omitted term.
    """
    sign = -1 if y < 0 else 1
    ya = abs(y)
    q = 10**scale
    y2 = ya * ya // q
    sin_acc = sin_t = ya
    cos_acc = cos_t = q
    for m in range(1, terms + 1):
        cos_t = cos_t * y2 // (q * (2 * m - 1) * (2 * m))
        sin_t = sin_t * y2 // (q * (2 * m) * (2 * m + 1))
        if m & 1:
            sin_acc -= sin_t
            cos_acc -= cos_t
        else:
            sin_acc += sin_t
            cos_acc += cos_t
    return sign * sin_acc, cos_acc
