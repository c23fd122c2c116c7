"""Acceptance gate: eight end-to-end checks with pinned exact expectations.

Run with ``pytest tests/test_acceptance.py -s`` to see one printed
PASS/FAIL line per criterion.  Every numeric comparison is exact
(Fraction or int equality, zero tolerance); the only non-exact pins are
the wall-clock budgets stated alongside the checks.
"""
from __future__ import annotations

import time
from contextlib import contextmanager
from fractions import Fraction
from importlib import resources

import pytest

from sscensus.arith import primes_in
from sscensus.classno import (
    OrderKind,
    census,
    class_number,
    deuring_count,
    quaternion_class_number,
    surface_count,
    surface_count_closed_form,
)
from sscensus.cli import verify_tables
from sscensus.quadratic import class_number_real
from sscensus.zeta import zeta_minus_one

from oracles import deuring_bruteforce


@contextmanager
def criterion(n: int, title: str):
    try:
        yield
    except BaseException:
        print(f"ACCEPTANCE {n} ({title}): FAIL")
        raise
    print(f"ACCEPTANCE {n} ({title}): PASS")


def _golden_row_count(name: str) -> int:
    text = (resources.files("sscensus") / "data" / name).read_text()
    return len([l for l in text.splitlines()[1:] if l.strip()])


@pytest.fixture(scope="module")
def full_sweep():
    """Censuses for every prime below 10000, plus the build wall time."""
    start = time.perf_counter()
    data = {p: census(p) for p in primes_in(2, 10000)}
    elapsed = time.perf_counter() - start
    return data, elapsed


@pytest.fixture(scope="module")
def golden_report():
    start = time.perf_counter()
    report = verify_tables()
    elapsed = time.perf_counter() - start
    return report, elapsed


def test_criterion_1_maximal_order_table(golden_report):
    with criterion(1, "maximal-order golden table, 43 primes, exact"):
        report, elapsed = golden_report
        assert _golden_row_count("table_o1.csv") == 43
        assert not [m for m in report.mismatches if m[0] == 1]
        assert elapsed < 5.0


def test_criterion_2_small_order_tables(golden_report):
    with criterion(2, "index-8 and index-16 golden tables, exact"):
        report, elapsed = golden_report
        assert _golden_row_count("table_o8.csv") == 20
        assert _golden_row_count("table_o16.csv") == 20
        assert not [m for m in report.mismatches if m[0] in (2, 3)]
        assert report.rows_checked == 83
        assert elapsed < 5.0


def test_criterion_3_special_primes():
    with criterion(3, "special primes 2, 3, 5"):
        assert [surface_count(p) for p in (2, 3, 5)] == [1, 2, 3]
        assert [quaternion_class_number(p) for p in (2, 3, 5)] == [1, 2, 1]
        assert class_number(5, OrderKind.O8) == 1
        assert class_number(5, OrderKind.O16) == 1


def test_criterion_4_sweep_integrity(full_sweep):
    with criterion(4, "sweep integrity for all primes below 10000"):
        data, elapsed = full_sweep
        for p, c in data.items():
            for rep in c.reports:
                total = rep.mass + rep.ell
                assert total.denominator == 1 and total >= 1, (p, rep.kind)
                assert total == rep.h, (p, rep.kind)
            assert c.H == surface_count_closed_form(p), p
            if p > 5:
                assert c.h_D % c.h_F == 0, p
        assert elapsed < 120.0


def test_criterion_5_zeta_values(full_sweep):
    with criterion(5, "zeta special values and lower bound"):
        assert zeta_minus_one(2) == Fraction(1, 12)
        assert zeta_minus_one(3) == Fraction(1, 6)
        assert zeta_minus_one(5) == Fraction(1, 30)
        # whole golden column, independently of the table harness
        text = (resources.files("sscensus") / "data" / "table_o1.csv").read_text()
        for line in text.splitlines()[1:]:
            cells = line.split(",")
            p, expected = int(cells[0]), Fraction(cells[4])
            assert zeta_minus_one(p) == expected, p
        data, _ = full_sweep
        for p, c in data.items():
            assert c.zeta_minus1 > Fraction(p - 1, 240), p


def test_criterion_6_unit_norms(full_sweep):
    with criterion(6, "unit norms and narrow-class parity"):
        data, _ = full_sweep
        for p, c in data.items():
            if p % 4 == 1 or p == 2:
                assert c.unit.norm == -1, p
            else:
                # the wide number divides the narrow cycle count evenly;
                # class_number_real raises ArithmeticError otherwise
                assert c.unit.norm == 1, p
                assert class_number_real(p) == c.h_F >= 1, p


def test_criterion_7_elliptic_counts():
    with criterion(7, "supersingular elliptic counts vs brute force"):
        for p in primes_in(2, 1000):
            assert deuring_count(p) == deuring_bruteforce(p), p


# Pinned before the build from the brute-force oracle sweep
# (scripts/pin_asymptotic.py; raw run kept in scripts/pin_output.txt):
# the elliptic share Ell/Mass for the maximal order peaks at p = 8597
# within [8000, 10000], and its window average sits far below the
# [7, 200] average.
PINNED_MAX_RATIO_HIGH = Fraction(155, 4761)
PINNED_AVG_RATIO_LOW = Fraction(
    123924596861621345567005, 65044199760139123630704)


def test_criterion_8_asymptotic_trend(full_sweep):
    with criterion(8, "elliptic share shrinks as p grows"):
        data, _ = full_sweep

        def ratios(lo, hi):
            return [
                c.reports[0].ell / c.reports[0].mass
                for p, c in data.items() if lo <= p < hi
            ]

        high = ratios(8000, 10000)
        low = ratios(7, 200)
        assert max(high) <= PINNED_MAX_RATIO_HIGH
        assert max(high) == PINNED_MAX_RATIO_HIGH  # oracle agreement
        avg_high = sum(high) / len(high)
        avg_low = sum(low) / len(low)
        assert avg_low == PINNED_AVG_RATIO_LOW
        assert avg_high < avg_low
