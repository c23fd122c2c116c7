"""Masses, elliptic parts, and class numbers of the quaternion orders
O_1 (maximal), O_8, and O_16 (index 8 and 16, p = 1 mod 4 only), and their
assembly into the surface count H(p), the quaternion class number h(D),
and the Deuring count of supersingular elliptic curves.

The class number of each order is Mass + Ell: the mass is a rational
multiple of zeta_F(-1) h(F), and the elliptic part is a finite weighted sum
over quadratic orders with extra units, encoded here as EmbeddingRow data.
The sum is asserted to be a positive integer; a failure raises
IntegralityViolation and means a bug upstream, never a legitimate result.

p = 2, 3, 5 carry extra unit orders that the generic tables miss, so those
primes are fully special-cased; the generic formulas refuse to run there.
"""
from __future__ import annotations

from dataclasses import dataclass
from enum import IntEnum
from fractions import Fraction
from typing import Optional, Tuple

from .arith import IntegralityViolation, is_prime, kronecker
from .cmfield import cm_class_number
from .quadratic import (
    FundamentalUnit,
    class_number_real,
    fundamental_unit,
    varpi,
)
from .zeta import zeta_minus_one

__all__ = [
    "OrderKind",
    "EmbeddingRow",
    "OrderReport",
    "IsogenyCensus",
    "IntegralityViolation",
    "embedding_rows",
    "mass",
    "elliptic_part",
    "class_number",
    "order_report",
    "census",
    "surface_count",
    "surface_count_closed_form",
    "quaternion_class_number",
    "deuring_count",
    "peters_ratio",
]


class OrderKind(IntEnum):
    """The three orders whose ideal classes are counted: the maximal order
    and its index-8 and index-16 suborders (the latter two only exist in
    the p = 1 mod 4 branch)."""

    O1 = 1
    O8 = 8
    O16 = 16


@dataclass(frozen=True)
class EmbeddingRow:
    """One quadratic order B contributing to an elliptic part.

    h_B and w_B are its class number and unit weight; m2_8/m2_16 flag which
    suborder's local lattice B lands in; delta_B = 0 marks the single order
    (B_{3,2}) not stable under complex conjugation, which doubles its weight.
    """

    order_label: str
    h_B: int
    w_B: int
    m2_8: int
    m2_16: int
    delta_B: int

    def __post_init__(self) -> None:
        if self.h_B <= 0 or self.w_B <= 0:
            raise ValueError("class number and weight must be positive")
        if self.order_label.startswith("B") and self.m2_8 + self.m2_16 > 1:
            raise ValueError(
                "a proper order is locally one of the two lattices, never both")
        if self.delta_B == 0 and self.order_label != "B_{3,2}":
            raise ValueError("only B_{3,2} is not conjugation-stable")


@dataclass(frozen=True)
class OrderReport:
    """Mass, elliptic part, and class number of one order."""

    kind: OrderKind
    mass: Fraction
    ell: Fraction
    h: int

    def __post_init__(self) -> None:
        if self.mass + self.ell != self.h or self.h <= 0:
            raise IntegralityViolation(
                f"mass {self.mass} + elliptic part {self.ell} is not the "
                f"positive integer {self.h}")


@dataclass(frozen=True)
class IsogenyCensus:
    """Every computed invariant for one prime, as reported by the CLI."""

    p: int
    zeta_minus1: Fraction
    h_F: int
    unit: FundamentalUnit
    varpi: Optional[int]
    h_K1: int
    h_K2: Optional[int]
    h_K3: int
    reports: Tuple[OrderReport, ...]
    H: int
    h_D: int
    deuring: int
    special: bool


# ----------------------------------------------------------------------
# special primes: p = 2, 3, 5 (extra unit orders; generic tables invalid)
# ----------------------------------------------------------------------

_SPECIAL_REPORTS = {
    (2, 1): (Fraction(1, 24), Fraction(23, 24), 1),
    (3, 1): (Fraction(1, 12), Fraction(23, 12), 2),
    (5, 1): (Fraction(1, 60), Fraction(59, 60), 1),
    (5, 8): (Fraction(1, 12), Fraction(11, 12), 1),
    (5, 16): (Fraction(1, 6), Fraction(5, 6), 1),
}

_SPECIAL_H = {2: 1, 3: 2, 5: 3}
_SPECIAL_HD = {2: 1, 3: 2, 5: 1}

# h(K_1), h(K_2), h(K_3) for p = 2, 3; for p >= 5 the generic route applies
_SPECIAL_HK = {2: (1, None, 1), 3: (1, 2, 1)}


def _int_positive(q: Fraction, what: str) -> int:
    if q.denominator != 1 or q <= 0:
        raise IntegralityViolation(f"{what} = {q} is not a positive integer")
    return q.numerator


def _as_int(q: Fraction) -> int:
    if q.denominator != 1:
        raise IntegralityViolation(f"expected an integer, got {q}")
    return q.numerator


def _check_general(p: int, kind: OrderKind) -> None:
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if p < 7:
        raise ValueError(
            f"p = {p} is served by the special-case constants, not the "
            "generic formulas")
    if kind is not OrderKind.O1 and p % 4 != 1:
        raise ValueError("index-8/16 orders exist only for p = 1 mod 4")


# ----------------------------------------------------------------------
# masses
# ----------------------------------------------------------------------

def mass(p: int, kind: OrderKind = OrderKind.O1) -> Fraction:
    """Mass of the order: a fixed multiple of zeta_F(-1) h(F) depending on
    the order kind and on p mod 8 (through the unit index varpi)."""
    kind = OrderKind(kind)
    _check_general(p, kind)
    zh = zeta_minus_one(p) * class_number_real(p)
    if kind is OrderKind.O1:
        return zh / 2
    if p % 8 == 1:
        return zh * Fraction(9, 2) if kind is OrderKind.O8 else zh * 3
    w = varpi(p)
    factor = Fraction(15, 2 * w) if kind is OrderKind.O8 else Fraction(15, w)
    return zh * factor


# ----------------------------------------------------------------------
# elliptic parts
# ----------------------------------------------------------------------

def embedding_rows(p: int, kind: OrderKind = OrderKind.O1) -> Tuple[EmbeddingRow, ...]:
    """The quadratic orders contributing to Ell for this order kind.

    For the maximal order the contributors are maximal CM orders (plus,
    when p = 3 mod 4, the 2-power conductor orders inside K_1).  For O_8 and
    O_16 the contributors are the proper orders over Z[sqrt(p)], filtered by
    which local lattice they select; B_{3,2} appears only when p = 5 mod 8
    and varpi = 3 — its absence otherwise is load-bearing.
    """
    kind = OrderKind(kind)
    _check_general(p, kind)
    hk1 = cm_class_number(p, 1)
    hk3 = cm_class_number(p, 3)
    two_sym = 2 - kronecker(2, p)
    if kind is OrderKind.O1:
        if p % 4 == 1:
            return (
                EmbeddingRow("O_{K_1}", hk1, 2, 0, 0, 1),
                EmbeddingRow("O_{K_3}", hk3, 3, 0, 0, 1),
            )
        hk2 = cm_class_number(p, 2)
        return (
            EmbeddingRow("O_{K_1}", hk1, 4, 0, 0, 1),
            EmbeddingRow("B_{1,2}", two_sym * hk1, 4, 0, 0, 1),
            EmbeddingRow("B_{1,4}", two_sym * hk1, 2, 0, 0, 1),
            EmbeddingRow("O_{K_2}", hk2, 2, 0, 0, 1),
            EmbeddingRow("O_{K_3}", hk3, 3, 0, 0, 1),
        )
    w = varpi(p)
    rows = [
        EmbeddingRow("B_{1,2}", _as_int(Fraction(two_sym * hk1, w)), 2, 1, 0, 1),
        EmbeddingRow("B_{1,4}", _as_int(Fraction(2 * two_sym * hk1, w)), 2, 0, 1, 1),
        EmbeddingRow("B_{3,4}", _as_int(Fraction(3 * hk3, w)), 3, 0, 1, 1),
    ]
    if p % 8 == 5 and w == 3:
        rows.append(EmbeddingRow("B_{3,2}", hk3, 3, 1, 0, 0))
    flag = "m2_8" if kind is OrderKind.O8 else "m2_16"
    return tuple(r for r in rows if getattr(r, flag))


def elliptic_part(p: int, kind: OrderKind = OrderKind.O1) -> Fraction:
    """Ell of the order: (1/2) * sum of (2 - delta_B) h_B (1 - 1/w_B) over
    the contributing rows."""
    total = Fraction(0)
    for row in embedding_rows(p, kind):
        total += Fraction(2 - row.delta_B, 2) * row.h_B * (1 - Fraction(1, row.w_B))
    return total


# ----------------------------------------------------------------------
# class numbers and the census
# ----------------------------------------------------------------------

def order_report(p: int, kind: OrderKind = OrderKind.O1) -> OrderReport:
    kind = OrderKind(kind)
    if (p, int(kind)) in _SPECIAL_REPORTS:
        m, e, h = _SPECIAL_REPORTS[(p, int(kind))]
        return OrderReport(kind=kind, mass=m, ell=e, h=h)
    m = mass(p, kind)
    e = elliptic_part(p, kind)
    h = _int_positive(m + e, f"h at p={p}, kind={int(kind)}")
    return OrderReport(kind=kind, mass=m, ell=e, h=h)


def class_number(p: int, kind: OrderKind = OrderKind.O1) -> int:
    """Ideal class number h = Mass + Ell of the given order."""
    return order_report(p, kind).h


def surface_count(p: int) -> int:
    """Number of isomorphism classes of supersingular abelian surfaces in
    the square-root-of-p isogeny class: the sum of the class numbers of the
    orders present (three for p = 1 mod 4, one otherwise)."""
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if p in _SPECIAL_H:
        return _SPECIAL_H[p]
    if p % 4 == 1:
        return sum(class_number(p, k)
                   for k in (OrderKind.O1, OrderKind.O8, OrderKind.O16))
    return class_number(p, OrderKind.O1)


def surface_count_closed_form(p: int) -> int:
    """The same count straight from the closed-form expressions, touching
    none of the order-report machinery; agreement with surface_count is a
    genuine cross-check, not a tautology."""
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if p in _SPECIAL_H:
        return _SPECIAL_H[p]
    z = zeta_minus_one(p)
    hf = class_number_real(p)
    hk1 = cm_class_number(p, 1)
    hk3 = cm_class_number(p, 3)
    if p % 4 == 3:
        hk2 = cm_class_number(p, 2)
        total = (Fraction(1, 2) * z * hf
                 + (Fraction(3, 8) + Fraction(5, 8) * (2 - kronecker(2, p))) * hk1
                 + Fraction(hk2, 4) + Fraction(hk3, 3))
    elif p % 8 == 1:
        total = 8 * z * hf + hk1 + Fraction(4, 3) * hk3
    else:
        w = varpi(p)
        total = (Fraction(45 + w, 2 * w) * z * hf
                 + Fraction(9 + w, 4 * w) * hk1
                 + Fraction(4, 3) * hk3)
    return _int_positive(total, f"closed-form count at p={p}")


def quaternion_class_number(p: int) -> int:
    """Class number h(D) of a maximal order in the quaternion algebra D
    over Q(sqrt(p)) ramified exactly at the two infinite places."""
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if p in _SPECIAL_HD:
        return _SPECIAL_HD[p]
    if p % 4 == 1:
        total = (Fraction(1, 2) * zeta_minus_one(p) * class_number_real(p)
                 + Fraction(cm_class_number(p, 1), 4)
                 + Fraction(cm_class_number(p, 3), 3))
        return _int_positive(total, f"h(D) at p={p}")
    return class_number(p, OrderKind.O1)


def deuring_count(p: int) -> int:
    """Number of supersingular elliptic curves over the algebraic closure
    of F_p: the (p-1)/12 mass plus corrections at j = 0 and j = 1728."""
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if p in (2, 3):
        return 1
    total = (Fraction(p - 1, 12)
             + Fraction(1 - kronecker(-3, p), 3)
             + Fraction(1 - kronecker(-4, p), 4))
    return _int_positive(total, f"curve count at p={p}")


def peters_ratio(p: int) -> Fraction:
    """h(D)/h(F), exactly; an integer for every prime p > 5 (it equals the
    narrow class number of a quaternary lattice genus, a fact this package
    only consumes as an integrality check)."""
    if not is_prime(p) or p <= 5:
        raise ValueError("defined for primes p > 5")
    return Fraction(quaternion_class_number(p), class_number_real(p))


def census(p: int) -> IsogenyCensus:
    """Assemble every invariant for one prime."""
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    special = p in (2, 3, 5)
    if p in _SPECIAL_HK:
        hk1, hk2, hk3 = _SPECIAL_HK[p]
    else:
        hk1 = cm_class_number(p, 1)
        hk2 = cm_class_number(p, 2) if p % 4 == 3 else None
        hk3 = cm_class_number(p, 3)
    if p % 4 == 1:
        kinds = (OrderKind.O1, OrderKind.O8, OrderKind.O16)
    else:
        kinds = (OrderKind.O1,)
    reports = tuple(order_report(p, k) for k in kinds)
    return IsogenyCensus(
        p=p,
        zeta_minus1=zeta_minus_one(p),
        h_F=class_number_real(p),
        unit=fundamental_unit(p),
        varpi=varpi(p) if p % 4 == 1 else None,
        h_K1=hk1,
        h_K2=hk2,
        h_K3=hk3,
        reports=reports,
        H=sum(r.h for r in reports),
        h_D=quaternion_class_number(p),
        deuring=deuring_count(p),
        special=special,
    )
