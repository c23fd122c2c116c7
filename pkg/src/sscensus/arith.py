"""Exact integer and rational primitives shared by every other module.

All quantities in this package are carried as arbitrary-precision integers
or exact rationals; nothing here (or downstream) ever rounds.
"""
from __future__ import annotations

from fractions import Fraction
from math import isqrt

__all__ = [
    "ExactRational",
    "IntegralityViolation",
    "is_prime",
    "isqrt",
    "kronecker",
    "primes_in",
]

# Exact rational carrier: normalized (positive denominator, lowest terms),
# structural equality.  fractions.Fraction already guarantees all of that.
ExactRational = Fraction


class IntegralityViolation(ArithmeticError):
    """A quantity that is provably a positive integer failed to be one.

    This always signals an internal bug (wrong unit index, wrong class
    number, wrong mass), never a legitimate outcome; callers must not
    catch-and-continue.
    """


# Witnesses making Miller-Rabin deterministic for n < 3.3 * 10^24,
# comfortably past the 2^64 contract.
_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n: int) -> bool:
    """Deterministic primality test (Miller-Rabin with a fixed witness set)."""
    if n < 2:
        return False
    for q in _MR_WITNESSES:
        if n % q == 0:
            return n == q
    d = n - 1
    s = (d & -d).bit_length() - 1
    d >>= s
    for a in _MR_WITNESSES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def kronecker(a: int, n: int) -> int:
    """Kronecker symbol (a|n), extending Legendre and Jacobi to all n.

    Rejects (0, 0), which has no sensible value.
    """
    if n == 0:
        if a == 0:
            raise ValueError("kronecker(0, 0) is undefined")
        return 1 if a in (1, -1) else 0
    sign = 1
    if n < 0:
        n = -n
        if a < 0:
            sign = -sign
    # split off the even part of n; (a|2) is 0 for even a, else +-1 by a mod 8
    t = 0
    while n % 2 == 0:
        n //= 2
        t += 1
    if t:
        if a % 2 == 0:
            return 0
        if t % 2 and a % 8 in (3, 5):
            sign = -sign
    a %= n
    while a:
        while a % 2 == 0:
            a //= 2
            if n % 8 in (3, 5):
                sign = -sign
        a, n = n, a  # reciprocity: both odd and positive here
        if a % 4 == 3 and n % 4 == 3:
            sign = -sign
        a %= n
    return sign if n == 1 else 0


def primes_in(lo: int, hi: int):
    """Yield the primes in [lo, hi] in increasing order."""
    for n in range(max(lo, 2), hi + 1):
        if is_prime(n):
            yield n
