"""
Zeta values at -1 for real quadratic fields
===========================================

"""

# the value zeta_F(-1) for F = Q(sqrt(p)) is an exact rational computed
# from a finite divisor sum; no floating point is involved anywhere
from sscensus import field_discriminant, zeta_minus_one
from sscensus.arith import primes_in

# the three smallest primes have famously small values
for p in (2, 3, 5):
    print(f"zeta_F(-1) for p={p}: {zeta_minus_one(p)}")

print()

# the value grows roughly like d^(3/2); tabulate a short range together
# with the discriminant so the growth is visible
print(f"{'p':>5} {'disc':>6} {'zeta_F(-1)':>14}")
for p in primes_in(2, 60):
    z = zeta_minus_one(p)
    print(f"{p:>5} {field_discriminant(p):>6} {str(z):>14}")

print()

# a crude but rigorous lower bound: zeta_F(-1) > (p - 1)/240 for every
# prime; check a window and report the tightest ratio seen
tightest = None
for p in primes_in(2, 2000):
    ratio = zeta_minus_one(p) / ((p - 1) if p > 2 else 1) * 240
    if tightest is None or ratio < tightest[1]:
        tightest = (p, ratio)
print(f"tightest bound ratio below 2000: p={tightest[0]}, "
      f"240*zeta/(p-1) = {float(tightest[1]):.4f} (always > 1)")
