"""Independent brute-force oracles.

Everything here is deliberately naive and written before (and independently
of) the library under test.  Slow is fine; these fix expected values.
"""
from fractions import Fraction
from math import gcd, isqrt


def is_prime_trial(n: int) -> bool:
    if n < 2:
        return False
    i = 2
    while i * i <= n:
        if n % i == 0:
            return False
        i += 1
    return True


def legendre_qr_search(a: int, p: int) -> int:
    """Legendre symbol (a/p) for odd prime p, by exhaustive search for a square root."""
    assert p > 2 and is_prime_trial(p)
    a %= p
    if a == 0:
        return 0
    for x in range(1, p):
        if (x * x - a) % p == 0:
            return 1
    return -1


def deuring_bruteforce(p: int) -> int:
    # number of supersingular elliptic curves over F_p-bar: mass term plus
    # adjustments at j = 0 and j = 1728, symbols found by raw QR search
    if p in (2, 3):
        return 1
    n = Fraction(p - 1, 12) \
        + Fraction(1, 3) * (1 - legendre_qr_search(-3, p)) \
        + Fraction(1, 4) * (1 - legendre_qr_search(-4, p))
    assert n.denominator == 1
    return n.numerator


def _reduce_form(a: int, b: int, c: int):
    """Reduce a positive definite form by the classical translation/flip loop."""
    assert a > 0 and b * b - 4 * a * c < 0
    while True:
        if c < a:
            a, b, c = c, -b, a
        if -a < b <= a:
            break
        # translate b into (-a, a]
        k = (a - b) // (2 * a)
        b2 = b + 2 * k * a
        c = c + k * b + k * k * a
        b = b2
    if a == c and b < 0:
        b = -b
    return a, b, c


def class_number_imag_by_reduction(d: int) -> int:
    """h(d) for d < 0 by reducing every primitive form with small first coefficient.

    Independent route: forms are generated unreduced and pushed through the
    reduction loop; distinct reduced outputs are counted.
    """
    assert d < 0 and d % 4 in (0, 1)
    reduced = set()
    amax = isqrt(-d // 3)
    for a in range(1, amax + 1):
        for b in range(-2 * a, 2 * a + 1):
            if (b * b - d) % (4 * a):
                continue
            c = (b * b - d) // (4 * a)
            if gcd(gcd(a, abs(b)), c) != 1:
                continue
            reduced.add(_reduce_form(a, b, c))
    return len(reduced)


def zeta_pair_scan(p: int) -> Fraction:
    """zeta_F(-1) for F = Q(sqrt p) by scanning all (a, c) pairs directly.

    Siegel's sum over b^2 + 4ac = d_F with a, c > 0, enumerated the slow way:
    for every pair a, c with 4ac <= d_F, test whether d_F - 4ac is a perfect
    square and add a once per admissible sign of b.
    """
    d = p if p % 4 == 1 else 4 * p
    total = 0
    a = 1
    while 4 * a <= d:
        c = 1
        while 4 * a * c <= d:
            r = d - 4 * a * c
            s = isqrt(r)
            if s * s == r:
                total += a if s == 0 else 2 * a
            c += 1
        a += 1
    return Fraction(total, 60)


def pell_unit_search(p: int, y_max: int = 300000):
    """Smallest unit > 1 of O_F for F = Q(sqrt p), by brute force over y.

    Returns (x, y, denom, norm) with eps = (x + y sqrt p)/denom.  Checks
    x^2 - p y^2 = +-4 when p = 1 mod 4 (denom 2 allowed), +-1 otherwise.
    """
    half = p % 4 == 1
    for y in range(1, y_max + 1):
        for target in (-1, 1):
            if half:
                r = p * y * y + 4 * target
            else:
                r = p * y * y + target
            if r <= 0:
                continue
            x = isqrt(r)
            if x * x != r:
                continue
            if half:
                if (x - y) % 2:
                    continue  # x, y must agree mod 2 for (x+y sqrt p)/2 to be integral
                if x % 2 == 0 and y % 2 == 0:
                    return x // 2, y // 2, 1, target
                return x, y, 2, target
            return x, y, 1, target
    raise AssertionError(f"no unit found below y={y_max} for p={p}")


def sigma_naive(n: int) -> int:
    return sum(i for i in range(1, n + 1) if n % i == 0)
