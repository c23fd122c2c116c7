"""
Fundamental units by continued fractions
========================================

"""

# the fundamental unit of Q(sqrt(p)) comes out of the continued fraction
# of the reduced surd; we get exact integers a, b with
# eps = (a + b*sqrt(p))/denom and denom in {1, 2}
from sscensus import fundamental_unit, varpi
from sscensus.arith import primes_in


def unit_str(p):
    u = fundamental_unit(p)
    core = f"{u.a} + {u.b}*sqrt({p})" if u.b > 1 else f"{u.a} + sqrt({p})"
    return core if u.denom == 1 else f"({core})/2"


print(f"{'p':>5}  {'fundamental unit':<24} {'norm':>5} {'varpi':>6}")
for p in primes_in(2, 100):
    u = fundamental_unit(p)
    w = varpi(p) if p % 4 == 1 else "-"
    print(f"{p:>5}  {unit_str(p):<24} {u.norm:>5} {w:>6}")

print()

# norms follow the residue class: p = 1 mod 4 forces norm -1, while
# p = 3 mod 4 forces norm +1; verify over a long window
for p in primes_in(2, 5000):
    u = fundamental_unit(p)
    expected = -1 if (p % 4 == 1 or p == 2) else 1
    assert u.norm == expected, p
print("norm(eps) matches the residue-class rule for all p < 5000")

# half-integral units (denom = 2) are what make the index
# varpi = [O_F^x : Z[sqrt(p)]^x] jump from 1 to 3; they only occur
# for p = 5 mod 8 (apart from p = 5 itself being special elsewhere)
half = [p for p in primes_in(2, 300) if fundamental_unit(p).denom == 2]
print(f"half-integral units below 300: {half}")
print(f"residues mod 8: {sorted({p % 8 for p in half})}")
