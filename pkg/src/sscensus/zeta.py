"""The special value zeta_F(-1) for F = Q(sqrt(p)), by Siegel's finite sum:

    zeta_F(-1) = (1/60) * sum of a over all (a, b, c), a, c > 0, b^2 + 4ac = d_F.

For fixed b the inner sum over the factorizations of (d_F - b^2)/4 is the
ordinary divisor sum, so the whole value needs only trial division.
"""
from __future__ import annotations

from functools import lru_cache
from math import isqrt

from .arith import ExactRational, is_prime
from .quadratic import field_discriminant

__all__ = ["zeta_minus_one"]


def _divisor_sum(m: int) -> int:
    """sigma_1(m): the sum of a over all factorizations m = a*c, a, c > 0."""
    total = 0
    f = 1
    while f * f <= m:
        if m % f == 0:
            total += f
            g = m // f
            if g != f:
                total += g
        f += 1
    return total


@lru_cache(maxsize=None)
def zeta_minus_one(p: int, _bound_slack: int = 0) -> ExactRational:
    """Exact zeta_F(-1) for F = Q(sqrt(p)).

    _bound_slack widens the b-enumeration past the natural cutoff b^2 < d_F;
    any widening must leave the value unchanged (the extra range is checked
    to contribute nothing), which the test suite uses as a completeness
    self-check.
    """
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if _bound_slack < 0:
        raise ValueError("slack must be nonnegative")
    d = field_discriminant(p)
    total = 0
    for b in range(d % 2, isqrt(d) + 1 + _bound_slack, 2):
        mm = d - b * b
        if mm <= 0:
            continue  # slack region only; must be empty of solutions
        s = _divisor_sum(mm // 4)
        total += s if b == 0 else 2 * s  # b and -b, once each
    return ExactRational(total, 60)
