"""Class numbers of the CM quartic fields K_j = Q(sqrt(p), sqrt(-j)), j = 1, 2, 3.

The route is the classical factorization over the real subfield,

    h(K_j) = (Q/2) * h(F) * h(Q(sqrt(-j))) * h(Q(sqrt(-p*j))),

with Q in {1, 2} the Hasse unit index [O_K^x : mu(K) O_F^x].  Q is decided
exactly: Q = 2 iff zeta*eps is a square in K_j for some root of unity zeta,
and each such square test reduces to finitely many square tests inside F
itself, i.e. to perfect-square tests on rational numbers.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import isqrt
from typing import Optional, Tuple

from .arith import IntegralityViolation, is_prime
from .quadratic import (
    class_number_imag,
    class_number_real,
    fundamental_discriminant,
    fundamental_unit,
)

__all__ = [
    "CmFieldInvariant",
    "sqrt_in_F",
    "unit_index_q",
    "cm_class_number",
    "cm_invariant",
]

FElement = Tuple[Fraction, Fraction]  # x + y*sqrt(p) as (x, y)


@dataclass(frozen=True)
class CmFieldInvariant:
    p: int
    j: int
    unit_index_q: int
    h: int


def _sqrt_rational(q: Fraction) -> Optional[Fraction]:
    if q < 0:
        return None
    rn = isqrt(q.numerator)
    rd = isqrt(q.denominator)
    if rn * rn == q.numerator and rd * rd == q.denominator:
        return Fraction(rn, rd)
    return None


def sqrt_in_F(x, y, p: int) -> Optional[FElement]:
    """A square root of x + y*sqrt(p) inside F = Q(sqrt(p)), or None.

    For y != 0 a root s + t*sqrt(p) forces s^2 to solve
    z^2 - x z + p y^2 / 4 = 0, whose discriminant x^2 - p y^2 is the field
    norm of the input; everything reduces to rational square tests.
    """
    x, y = Fraction(x), Fraction(y)
    if y == 0:
        s = _sqrt_rational(x)
        if s is not None:
            return (s, Fraction(0))
        t = _sqrt_rational(x / p)
        if t is not None:
            return (Fraction(0), t)
        return None
    w = _sqrt_rational(x * x - p * y * y)
    if w is None:
        return None
    for s2 in ((x + w) / 2, (x - w) / 2):
        if s2 <= 0:
            continue
        s = _sqrt_rational(s2)
        if s is None:
            continue
        t = y / (2 * s)
        if s * s + p * t * t == x and 2 * s * t == y:
            return (s, t)
    return None


_HALF = Fraction(1, 2)
_ONE = Fraction(1)
_ZERO = Fraction(0)

# mu(K_j) for p >= 5: fourth roots for j=1, just +-1 for j=2, sixth roots
# for j=3; entries are (re, im) coordinates over 1 and sqrt(-j).
_ROOTS_OF_UNITY = {
    1: ((_ONE, _ZERO), (-_ONE, _ZERO), (_ZERO, _ONE), (_ZERO, -_ONE)),
    2: ((_ONE, _ZERO), (-_ONE, _ZERO)),
    3: ((_ONE, _ZERO), (-_ONE, _ZERO),
        (_HALF, _HALF), (_HALF, -_HALF), (-_HALF, _HALF), (-_HALF, -_HALF)),
}


def _is_square_in_K(x1: Fraction, x2: Fraction, y1: Fraction, y2: Fraction,
                    j: int, p: int) -> bool:
    """Whether (x1 + x2 sqrt(p)) + (y1 + y2 sqrt(p)) sqrt(-j) is a square in K_j.

    A root alpha + beta sqrt(-j) with alpha, beta in F satisfies
    alpha^2 - j beta^2 = X and 2 alpha beta = Y.  When Y = 0 either beta = 0
    (root in F) or alpha = 0 (pure sqrt(-j) part); both candidates are
    checked.  Otherwise alpha, beta are both nonzero, alpha^2 solves a
    quadratic over F whose discriminant X^2 + j Y^2 is the relative norm,
    and beta = Y/(2 alpha).  Every candidate is verified by squaring.
    """
    if y1 == 0 and y2 == 0:
        if sqrt_in_F(x1, x2, p) is not None:
            return True
        return sqrt_in_F(-x1 / j, -x2 / j, p) is not None
    n1 = x1 * x1 + p * x2 * x2 + j * (y1 * y1 + p * y2 * y2)
    n2 = 2 * x1 * x2 + 2 * j * y1 * y2
    w = sqrt_in_F(n1, n2, p)
    if w is None:
        return False
    w1, w2 = w
    for s1, s2 in (((x1 + w1) / 2, (x2 + w2) / 2),
                   ((x1 - w1) / 2, (x2 - w2) / 2)):
        if s1 == 0 and s2 == 0:
            continue
        root = sqrt_in_F(s1, s2, p)
        if root is None:
            continue
        a1, a2 = root
        na = a1 * a1 - p * a2 * a2  # field norm of alpha, nonzero
        b1 = (y1 * a1 - p * y2 * a2) / (2 * na)
        b2 = (y2 * a1 - y1 * a2) / (2 * na)
        c1 = a1 * a1 + p * a2 * a2 - j * (b1 * b1 + p * b2 * b2)
        c2 = 2 * a1 * a2 - 2 * j * b1 * b2
        d1 = 2 * (a1 * b1 + p * a2 * b2)
        d2 = 2 * (a1 * b2 + a2 * b1)
        if (c1, c2, d1, d2) == (x1, x2, y1, y2):
            return True
    return False


@lru_cache(maxsize=None)
def unit_index_q(p: int, j: int) -> int:
    """Hasse unit index Q = [O_K^x : mu(K) O_F^x] in {1, 2} for K = K_j.

    Q = 2 exactly when zeta*eps is a square in K_j for some zeta in mu(K_j),
    eps the fundamental unit of F.
    """
    if j not in (1, 2, 3):
        raise ValueError("j must be 1, 2, or 3")
    if not is_prime(p) or p < 5:
        raise ValueError("p must be a prime >= 5")
    u = fundamental_unit(p)
    ex = Fraction(u.a, u.denom)
    ey = Fraction(u.b, u.denom)
    for z1, z2 in _ROOTS_OF_UNITY[j]:
        # zeta*eps has F-components (z1*eps, z2*eps) over 1 and sqrt(-j)
        if _is_square_in_K(z1 * ex, z1 * ey, z2 * ex, z2 * ey, j, p):
            return 2
    return 1


_SMALL_IMAG_DISC = {1: -4, 2: -8, 3: -3}


@lru_cache(maxsize=None)
def cm_invariant(p: int, j: int) -> CmFieldInvariant:
    """h(K_j) together with the unit index that produced it."""
    q = unit_index_q(p, j)  # also validates p and j
    num = (q
           * class_number_real(p)
           * class_number_imag(_SMALL_IMAG_DISC[j])
           * class_number_imag(fundamental_discriminant(-p * j)))
    if num % 2:
        raise IntegralityViolation(
            f"unit index {q} makes h(K_{j}) non-integral at p={p}")
    return CmFieldInvariant(p=p, j=j, unit_index_q=q, h=num // 2)


def cm_class_number(p: int, j: int) -> int:
    return cm_invariant(p, j).h
