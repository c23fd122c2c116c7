"""Invariants of the real quadratic field F = Q(sqrt(p)) and of imaginary
quadratic fields: discriminants, fundamental units, the unit index varpi,
and class numbers via binary quadratic forms.

Everything reduces to integer arithmetic: continued fractions of quadratic
surds for the unit, reduced-form enumeration for class numbers.  No floats.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import gcd, isqrt

from .arith import is_prime

__all__ = [
    "QuadFieldInfo",
    "FundamentalUnit",
    "field_discriminant",
    "field_info",
    "fundamental_unit",
    "varpi",
    "class_number_imag",
    "class_number_real",
    "fundamental_discriminant",
    "is_fundamental_discriminant",
]


def _require_prime(p: int) -> None:
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")


# ----------------------------------------------------------------------
# discriminants
# ----------------------------------------------------------------------

@dataclass(frozen=True)
class QuadFieldInfo:
    """Basic data of F = Q(sqrt(p)): discriminant and the class of p mod 8."""

    p: int
    disc: int
    residue_class: int

    def __post_init__(self) -> None:
        if self.disc % 4 not in (0, 1):
            raise ValueError(f"{self.disc} is not a discriminant")


def field_discriminant(p: int) -> int:
    """Discriminant of Q(sqrt(p)): p when p = 1 mod 4, else 4p."""
    _require_prime(p)
    return p if p % 4 == 1 else 4 * p


def field_info(p: int) -> QuadFieldInfo:
    return QuadFieldInfo(p=p, disc=field_discriminant(p), residue_class=p % 8)


def _squarefree_part(n: int) -> int:
    """Largest squarefree divisor of |n|, carrying the sign of n."""
    a = abs(n)
    f = 2
    while f * f <= a:
        ff = f * f
        while a % ff == 0:
            a //= ff
        f += 1
    return a if n > 0 else -a


def fundamental_discriminant(n: int) -> int:
    """Discriminant of Q(sqrt(n)) for any integer n that is not a square."""
    if n == 0:
        raise ValueError("0 has no quadratic field")
    m = _squarefree_part(n)
    if m == 1:
        raise ValueError(f"{n} is a perfect square")
    return m if m % 4 == 1 else 4 * m


def is_fundamental_discriminant(d: int) -> bool:
    if d == 0 or d % 4 not in (0, 1) or _squarefree_part(d) == 1:
        return False
    return d == fundamental_discriminant(d)


# ----------------------------------------------------------------------
# fundamental unit by continued fractions
# ----------------------------------------------------------------------

@dataclass(frozen=True)
class FundamentalUnit:
    """eps = (a + b*sqrt(p))/denom > 1 generating the units of the maximal
    order modulo +-1; norm is a^2 - p*b^2 over denom^2, always +-1."""

    a: int
    b: int
    denom: int
    norm: int


@lru_cache(maxsize=None)
def fundamental_unit(p: int) -> FundamentalUnit:
    """Fundamental unit of the maximal order of Q(sqrt(p)), normalized > 1.

    Computed from one period of the continued fraction of the reduced surd
    (b0 + sqrt(d))/2 with d the field discriminant; for p = 1 mod 4 this is
    the expansion of (1 + sqrt(p))/2 shifted into its periodic part, for the
    other primes it is equivalent to expanding sqrt(p).  The convergent
    denominators of one full period assemble the unit directly.
    """
    _require_prime(p)
    d = field_discriminant(p)
    r = isqrt(d)
    b0 = r if (r - d) % 2 == 0 else r - 1
    pp, qq = b0, 2
    bm2, bm1 = 1, 0  # convergent denominators B_{k-2}, B_{k-1}
    length = 0
    while True:
        a = (pp + r) // qq
        bm2, bm1 = bm1, a * bm1 + bm2
        pp = a * qq - pp
        qq = (d - pp * pp) // qq
        length += 1
        if (pp, qq) == (b0, 2):
            break
    # unit = B_{l-1}*(b0 + sqrt(d))/2 + B_{l-2} = (x + B_{l-1}*sqrt(d))/2
    x = bm1 * b0 + 2 * bm2
    y = bm1
    norm = -1 if length % 2 else 1
    if p % 4 != 1:
        # d = 4p: sqrt(d) = 2 sqrt(p); x is even because b0 is
        au, bu, denom = x // 2, y, 1
    elif x % 2 == 0:
        # d = p, both coordinates even: the half-integer form is avoidable
        au, bu, denom = x // 2, y // 2, 1
    else:
        au, bu, denom = x, y, 2
    if au * au - p * bu * bu != norm * denom * denom:
        raise ArithmeticError(f"unit reconstruction failed at p={p}")
    return FundamentalUnit(a=au, b=bu, denom=denom, norm=norm)


def varpi(p: int) -> int:
    """Index of the units of Z[sqrt(p)] inside those of the maximal order.

    Either 1 or 3; it is 3 exactly when eps has half-integer coordinates
    (then eps^3 is the fundamental unit of Z[sqrt(p)] up to sign).
    """
    _require_prime(p)
    if p % 4 != 1:
        raise ValueError("varpi is defined only for p = 1 mod 4")
    return 3 if fundamental_unit(p).denom == 2 else 1


# ----------------------------------------------------------------------
# class numbers: imaginary side
# ----------------------------------------------------------------------

def class_number_imag(d: int) -> int:
    """h(d) for a fundamental discriminant d < 0.

    Counts reduced positive-definite forms (a, b, c) of discriminant d:
    |b| <= a <= c, gcd(a,b,c) = 1, with b >= 0 whenever |b| = a or a = c.
    """
    if d >= 0 or d % 4 not in (0, 1) or not is_fundamental_discriminant(d):
        raise ValueError(f"{d} is not a negative fundamental discriminant")
    h = 0
    for a in range(1, isqrt(-d // 3) + 1):
        fa = 4 * a
        for b in range(d % 2, a + 1, 2):
            num = b * b - d
            if num % fa:
                continue
            c = num // fa
            if c < a or gcd(gcd(a, b), c) != 1:
                continue
            # (a, b, c) and (a, -b, c) are distinct classes off the boundary
            h += 2 if 0 < b < a < c else 1
    return h


# ----------------------------------------------------------------------
# class numbers: real side, by cycles of reduced indefinite forms
# ----------------------------------------------------------------------

def _is_reduced_indefinite(a: int, b: int, d: int) -> bool:
    # reduced <=> 0 < b < sqrt(d) and sqrt(d) - b < 2|a| < sqrt(d) + b,
    # tested purely in integers (d is never a square here)
    if b <= 0 or b * b >= d:
        return False
    t = 2 * abs(a)
    lo = t - b
    return (lo < 0 or lo * lo < d) and d < (t + b) * (t + b)


def _reduced_indefinite_forms(d: int) -> set[tuple[int, int, int]]:
    """All reduced forms (a, b, c) with b^2 - 4ac = d > 0."""
    forms: set[tuple[int, int, int]] = set()
    r = isqrt(d)
    for b in range(2 - d % 2, r + 1, 2):
        m = (d - b * b) // 4  # = -ac > 0
        for a1 in range(1, isqrt(m) + 1):
            if m % a1:
                continue
            a2 = m // a1
            for a, c in ((a1, -a2), (a2, -a1), (-a1, a2), (-a2, a1)):
                if _is_reduced_indefinite(a, b, d):
                    forms.add((a, b, c))
    return forms


def _rho(form: tuple[int, int, int], d: int, r: int) -> tuple[int, int, int]:
    """One reduction step (a,b,c) -> (c,b',c'): b' is the unique integer
    congruent to -b mod 2|c| in the window (sqrt(d) - 2|c|, sqrt(d))."""
    _, b, c = form
    m = 2 * abs(c)
    b2 = r - (r - (-b) % m) % m
    return (c, b2, (b2 * b2 - d) // (4 * c))


@lru_cache(maxsize=None)
def class_number_real(p: int) -> int:
    """h(F) for F = Q(sqrt(p)).

    The cycles of reduced indefinite forms of discriminant d_F count the
    narrow classes h+; the wide class number is h+ when the fundamental
    unit has norm -1 and h+/2 (always exact) when it has norm +1.
    """
    _require_prime(p)
    d = field_discriminant(p)
    r = isqrt(d)
    pending = _reduced_indefinite_forms(d)
    cycles = 0
    while pending:
        start = next(iter(pending))
        f = start
        while True:
            pending.discard(f)
            f = _rho(f, d, r)
            if f == start:
                break
        cycles += 1
    if fundamental_unit(p).norm == -1:
        return cycles
    if cycles % 2:
        raise ArithmeticError(
            f"narrow class number {cycles} must be even when norm(eps) = +1 (p={p})")
    return cycles // 2
