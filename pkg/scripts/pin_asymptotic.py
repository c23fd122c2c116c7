#!/usr/bin/env python3
"""Pre-build oracle sweep: elliptic-to-mass ratio of the maximal order.

Self-contained on purpose — no imports from the library.  Run once to record
the numbers that the acceptance suite pins:

  * max of Ell(O1)/Mass(O1) over primes p in [8000, 10000]
  * average of that ratio over [8000, 10000]
  * average of that ratio over [7, 200]

Usage: python scripts/pin_asymptotic.py
"""
from fractions import Fraction
from math import gcd, isqrt


# ---------------------------------------------------------------- primes

def is_prime(n: int) -> bool:
    if n < 2:
        return False
    i = 2
    while i * i <= n:
        if n % i == 0:
            return False
        i += 1
    return True


def primes_in(lo: int, hi: int):
    return [p for p in range(lo, hi + 1) if is_prime(p)]


# ---------------------------------------------------------------- zeta

def zeta_minus_one(p: int) -> Fraction:
    # Siegel: 60 * zeta_F(-1) = sum of a over b^2 + 4ac = d, a, c > 0
    d = p if p % 4 == 1 else 4 * p
    total = 0
    b = 0 if d % 2 == 0 else 1
    while b * b < d:
        m = (d - b * b) // 4
        s = 0
        i = 1
        while i * i <= m:
            if m % i == 0:
                s += i
                if i != m // i:
                    s += m // i
            i += 1
        total += s if b == 0 else 2 * s
        b += 2
    return Fraction(total, 60)


# ---------------------------------------------------------------- units

def fundamental_unit(p: int):
    """eps = (x + y sqrt p)/denom > 1 of O_F, via the continued fraction of
    the reduced irrational (b0 + sqrt d)/2.  Returns (x, y, denom, norm)."""
    d = p if p % 4 == 1 else 4 * p
    r = isqrt(d)
    b0 = r if (r - d) % 2 == 0 else r - 1
    P, Q = b0, 2
    Bm2, Bm1 = 1, 0  # convergent denominators B_{k-2}, B_{k-1}
    length = 0
    while True:
        a = (P + r) // Q
        Bm2, Bm1 = Bm1, a * Bm1 + Bm2
        P = a * Q - P
        Q = (d - P * P) // Q
        length += 1
        if (P, Q) == (b0, 2):
            break
    # eps = B_{l-1} * (b0 + sqrt d)/2 + B_{l-2}
    x = Bm1 * b0 + 2 * Bm2
    y = Bm1
    norm = -1 if length % 2 else 1
    if p % 4 != 1:
        # sqrt d = 2 sqrt p, b0 even: the half denominator always clears
        return x // 2, y, 1, norm
    if x % 2 == 0 and y % 2 == 0:
        return x // 2, y // 2, 1, norm
    return x, y, 2, norm


def varpi(p: int) -> int:
    assert p % 4 == 1
    return 3 if fundamental_unit(p)[2] == 2 else 1


# ---------------------------------------------------------------- class numbers

def class_number_imag(d: int) -> int:
    # reduced primitive positive definite forms of fundamental discriminant d
    assert d < 0 and d % 4 in (0, 1)
    count = 0
    for a in range(1, isqrt(-d // 3) + 1):
        for b in range(d % 2, a + 1, 2):
            if (b * b - d) % (4 * a):
                continue
            c = (b * b - d) // (4 * a)
            if c < a:
                continue
            if gcd(gcd(a, b), c) != 1:
                continue
            count += 2 if 0 < b < a < c else 1
    return count


def _reduced_indefinite(d: int):
    r = isqrt(d)
    forms = set()
    for b in range(2 - d % 2, r + 1, 2):
        m = (d - b * b) // 4  # = -ac > 0
        for a1 in range(1, isqrt(m) + 1):
            if m % a1:
                continue
            for a, c in ((a1, -(m // a1)), (m // a1, -a1)):
                for s in (1, -1):
                    fa, fc = s * a, s * c
                    # reduced: |sqrt d - 2|a|| < b, integer-exact test
                    t = 2 * abs(fa) - b
                    if (t < 0 or t * t < d) and d < (2 * abs(fa) + b) ** 2:
                        forms.add((fa, b, fc))
    return forms


def _rho(form, d: int, r: int):
    a, b, c = form
    m = 2 * abs(c)
    res = (-b) % m
    b2 = r - (r - res) % m
    c2 = (b2 * b2 - d) // (4 * c)
    return (c, b2, c2)


def class_number_real(p: int) -> int:
    d = p if p % 4 == 1 else 4 * p
    r = isqrt(d)
    forms = _reduced_indefinite(d)
    cycles = 0
    seen = set()
    for f in forms:
        if f in seen:
            continue
        cycles += 1
        g = f
        while True:
            seen.add(g)
            g = _rho(g, d, r)
            if g == f:
                break
    hplus = cycles
    if fundamental_unit(p)[3] == 1:
        assert hplus % 2 == 0
        return hplus // 2
    return hplus


# ---------------------------------------------------------------- CM fields

def sqrt_in_F(x: Fraction, y: Fraction, p: int):
    """v with v^2 = x + y sqrt p, or None."""
    def qsqrt(q: Fraction):
        if q < 0:
            return None
        n, d = q.numerator, q.denominator
        rn, rd = isqrt(n), isqrt(d)
        if rn * rn == n and rd * rd == d:
            return Fraction(rn, rd)
        return None

    if y == 0:
        s = qsqrt(x)
        if s is not None:
            return (s, Fraction(0))
        t = qsqrt(x / p)
        if t is not None:
            return (Fraction(0), t)
        return None
    w2 = x * x - p * y * y
    w = qsqrt(w2)
    if w is None:
        return None
    for s2 in ((x + w) / 2, (x - w) / 2):
        if s2 == 0:
            continue
        s = qsqrt(s2)
        if s is None:
            continue
        t = y / (2 * s)
        if s * s + p * t * t == x and 2 * s * t == y:
            return (s, t)
    return None


_ROOTS_OF_UNITY = {
    1: [(Fraction(1), Fraction(0)), (Fraction(-1), Fraction(0)),
        (Fraction(0), Fraction(1)), (Fraction(0), Fraction(-1))],
    2: [(Fraction(1), Fraction(0)), (Fraction(-1), Fraction(0))],
    3: [(Fraction(1), Fraction(0)), (Fraction(-1), Fraction(0)),
        (Fraction(1, 2), Fraction(1, 2)), (Fraction(-1, 2), Fraction(-1, 2)),
        (Fraction(-1, 2), Fraction(1, 2)), (Fraction(1, 2), Fraction(-1, 2))],
}


def unit_index_q(p: int, j: int) -> int:
    """Hasse unit index [O_K^x : mu(K) O_F^x] in {1, 2} for K = F(sqrt -j)."""
    xa, ya, denom, _ = fundamental_unit(p)
    ex, ey = Fraction(xa, denom), Fraction(ya, denom)

    def square_in_K(X1, X2, Y1, Y2):
        # is (X1 + X2 sqrt p) + (Y1 + Y2 sqrt p) sqrt(-j) a square in K?
        if Y1 == 0 and Y2 == 0:
            if sqrt_in_F(X1, X2, p) is not None:
                return True
            return sqrt_in_F(-X1 / j, -X2 / j, p) is not None
        # norm to F is eps^2 for our candidates; solve alpha^2 = (X +- w)/2
        w = sqrt_in_F(X1 * X1 + p * X2 * X2 + j * (Y1 * Y1 + p * Y2 * Y2),
                      2 * X1 * X2 + j * 2 * Y1 * Y2, p)
        if w is None:
            return False
        w1, w2 = w
        for s1, s2 in (((X1 + w1) / 2, (X2 + w2) / 2),
                       ((X1 - w1) / 2, (X2 - w2) / 2)):
            if s1 == 0 and s2 == 0:
                continue
            alpha = sqrt_in_F(s1, s2, p)
            if alpha is None:
                continue
            a1, a2 = alpha
            # beta = Y/(2 alpha): divide in F
            na = a1 * a1 - p * a2 * a2
            b1 = (Y1 * a1 - p * Y2 * a2) / (2 * na)
            b2 = (Y2 * a1 - Y1 * a2) / (2 * na)
            # verify alpha^2 - j beta^2 + 2 alpha beta sqrt(-j) = theta
            c1 = a1 * a1 + p * a2 * a2 - j * (b1 * b1 + p * b2 * b2)
            c2 = 2 * a1 * a2 - j * 2 * b1 * b2
            d1 = 2 * (a1 * b1 + p * a2 * b2)
            d2 = 2 * (a1 * b2 + a2 * b1)
            if (c1, c2, d1, d2) == (X1, X2, Y1, Y2):
                return True
        return False

    for z1, z2 in _ROOTS_OF_UNITY[j]:
        # theta = zeta * eps with eps in F
        if square_in_K(z1 * ex, z1 * ey, z2 * ex, z2 * ey):
            return 2
    return 1


def fundamental_discriminant(n: int) -> int:
    assert n != 0
    m = 1 if n > 0 else -1
    a = abs(n)
    f = 2
    while f * f <= a:
        while a % (f * f) == 0:
            a //= f * f
        f += 1
    m *= a
    return m if m % 4 == 1 else 4 * m


def cm_class_number(p: int, j: int) -> int:
    q = unit_index_q(p, j)
    hf = class_number_real(p)
    hj = class_number_imag({1: -4, 2: -8, 3: -3}[j])
    hk = class_number_imag(fundamental_discriminant(-p * j))
    num = Fraction(q, 2) * hf * hj * hk
    assert num.denominator == 1 and num > 0, (p, j, num)
    return num.numerator


# ---------------------------------------------------------------- ratio sweep

def kronecker2(p: int) -> int:
    return {1: 1, 7: 1, 3: -1, 5: -1}[p % 8]


def ell_over_mass(p: int) -> Fraction:
    z = zeta_minus_one(p)
    hf = class_number_real(p)
    mass = Fraction(1, 2) * z * hf
    hk1 = cm_class_number(p, 1)
    hk3 = cm_class_number(p, 3)
    if p % 4 == 1:
        ell = Fraction(hk1, 4) + Fraction(hk3, 3)
    else:
        hk2 = cm_class_number(p, 2)
        ell = (Fraction(3, 8) + Fraction(5, 8) * (2 - kronecker2(p))) * hk1 \
            + Fraction(hk2, 4) + Fraction(hk3, 3)
    h = mass + ell
    assert h.denominator == 1 and h > 0, f"class number not integral at {p}"
    return ell / mass


def main():
    # classical spot values guard the machinery before the long run
    assert zeta_minus_one(5) == Fraction(1, 30)
    assert zeta_minus_one(2) == Fraction(1, 12)
    assert class_number_imag(-4) == 1 and class_number_imag(-56) == 4
    assert class_number_real(2) == 1 and class_number_real(79) == 3
    assert fundamental_unit(7) == (8, 3, 1, 1)
    assert fundamental_unit(13) == (3, 1, 2, -1)
    assert varpi(17) == 1 and varpi(13) == 3
    assert unit_index_q(7, 1) == 2 and unit_index_q(7, 3) == 1
    assert cm_class_number(7, 2) == 4 and cm_class_number(79, 1) == 15

    small = primes_in(7, 200)
    big = primes_in(8000, 10000)

    ratios_small = [ell_over_mass(p) for p in small]
    avg_small = sum(ratios_small, Fraction(0)) / len(ratios_small)

    ratios_big = []
    worst = (Fraction(0), None)
    for p in big:
        r = ell_over_mass(p)
        ratios_big.append(r)
        if r > worst[0]:
            worst = (r, p)
    avg_big = sum(ratios_big, Fraction(0)) / len(ratios_big)

    print(f"primes in [7,200]:      {len(small)}")
    print(f"avg ratio [7,200]:      {avg_small} ~= {float(avg_small):.6f}")
    print(f"primes in [8000,10000]: {len(big)}")
    print(f"max ratio [8000,10000]: {worst[0]} ~= {float(worst[0]):.6f} at p={worst[1]}")
    print(f"avg ratio [8000,10000]: {avg_big} ~= {float(avg_big):.6f}")


if __name__ == "__main__":
    main()
