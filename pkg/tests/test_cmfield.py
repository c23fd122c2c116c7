from __future__ import annotations

import random
from fractions import Fraction

import pytest

from sscensus.arith import primes_in
from sscensus.cmfield import cm_class_number, cm_invariant, sqrt_in_F, unit_index_q
from sscensus.quadratic import class_number_imag, class_number_real, fundamental_discriminant


def test_sqrt_in_F_rational_inputs():
    assert sqrt_in_F(9, 0, 13) == (3, 0)
    assert sqrt_in_F(Fraction(9, 4), 0, 13) == (Fraction(3, 2), 0)
    assert sqrt_in_F(13, 0, 13) == (0, 1)  # sqrt(13) itself
    assert sqrt_in_F(52, 0, 13) == (0, 2)
    assert sqrt_in_F(7, 0, 13) is None


def test_sqrt_in_F_mixed_inputs():
    assert sqrt_in_F(9, 4, 5) == (2, 1)  # (2 + sqrt(5))^2 = 9 + 4 sqrt(5)
    # the fundamental unit of Q(sqrt(13)) is not a square
    assert sqrt_in_F(Fraction(3, 2), Fraction(1, 2), 13) is None


def test_sqrt_in_F_roundtrip_and_conjugation():
    rng = random.Random(20260822)
    for p in (5, 13, 17, 7, 11):
        for _ in range(200):
            s = Fraction(rng.randint(-20, 20), rng.randint(1, 9))
            t = Fraction(rng.randint(-20, 20), rng.randint(1, 9))
            x = s * s + p * t * t
            y = 2 * s * t
            got = sqrt_in_F(x, y, p)
            assert got is not None
            gs, gt = got
            assert gs * gs + p * gt * gt == x and 2 * gs * gt == y
            # a root of the conjugate is the conjugate of a root
            conj = sqrt_in_F(x, -y, p)
            assert conj is not None


def test_sqrt_in_F_rejects_non_squares():
    rng = random.Random(99)
    for p in (5, 13, 17):
        hits = 0
        for _ in range(300):
            x = Fraction(rng.randint(-40, 40))
            y = Fraction(rng.randint(-40, 40))
            got = sqrt_in_F(x, y, p)
            if got is not None:
                gs, gt = got
                assert gs * gs + p * gt * gt == x and 2 * gs * gt == y
                hits += 1
        assert hits < 60  # random integers are rarely squares in F


def test_unit_index_spots():
    assert unit_index_q(7, 1) == 2
    assert unit_index_q(7, 2) == 2
    assert unit_index_q(7, 3) == 1
    assert unit_index_q(5, 1) == 1
    assert unit_index_q(5, 3) == 1


def test_unit_index_rejects_bad_input():
    with pytest.raises(ValueError):
        unit_index_q(7, 4)
    with pytest.raises(ValueError):
        unit_index_q(3, 1)  # below the supported range
    with pytest.raises(ValueError):
        unit_index_q(9, 1)


def test_cm_class_number_spots():
    assert cm_class_number(7, 2) == 4
    assert cm_class_number(13, 3) == 2
    assert cm_class_number(79, 1) == 15
    assert cm_class_number(5, 1) == 1
    assert cm_class_number(5, 3) == 1


def test_cm_invariant_structure():
    inv = cm_invariant(7, 2)
    assert (inv.p, inv.j, inv.h) == (7, 2, 4)
    assert inv.unit_index_q in (1, 2)


def test_cm_product_always_integral():
    # the factorization (Q/2) h(F) h(small) h(k_j) must land in Z; a wrong
    # unit index would break this within a few primes
    for p in primes_in(5, 500):
        hf = class_number_real(p)
        for j in (1, 2, 3):
            q = unit_index_q(p, j)
            hk = class_number_imag(fundamental_discriminant(-p * j))
            assert (q * hf * hk) % 2 == 0, (p, j)
            assert cm_class_number(p, j) == q * hf * hk // 2


def test_small_field_class_numbers_are_one():
    # h(Q(i)) = h(Q(sqrt(-2))) = h(Q(sqrt(-3))) = 1: the product formula
    # carries this factor even though it is always trivial here
    assert class_number_imag(-4) == class_number_imag(-8) == class_number_imag(-3) == 1
