"""
Class numbers by reduced binary quadratic forms
===============================================

"""

# imaginary quadratic class numbers count reduced positive-definite
# forms; real ones count cycles of reduced indefinite forms, divided
# by 2 when the fundamental unit has norm +1
from sscensus import (
    class_number_imag,
    class_number_real,
    cm_class_number,
    fundamental_unit,
    unit_index_q,
)
from sscensus.arith import primes_in
from sscensus.quadratic import is_fundamental_discriminant

# the imaginary quadratic fields with class number one, as far as -200
ones = [d for d in range(-3, -200, -1)
        if is_fundamental_discriminant(d) and class_number_imag(d) == 1]
print(f"imaginary discriminants with h = 1 above -200: {ones}")

print()

# real quadratic class numbers stay small for a long time; list the
# primes below 500 where h(F) exceeds 1
print(f"{'p':>5} {'h(F)':>5} {'norm(eps)':>10}")
for p in primes_in(2, 500):
    h = class_number_real(p)
    if h > 1:
        print(f"{p:>5} {h:>5} {fundamental_unit(p).norm:>10}")

print()

# the quartic CM fields K_j = F(sqrt(-j)) have class numbers assembled
# from three quadratic pieces and a unit index Q in {1, 2}
print(f"{'p':>5} {'j':>3} {'Q':>3} {'h(K_j)':>7}")
for p in (7, 13, 79, 101):
    for j in (1, 2, 3):
        if j == 2 and p % 4 == 1:
            continue  # K_2 only enters for p = 3 mod 4
        q = unit_index_q(p, j)
        print(f"{p:>5} {j:>3} {q:>3} {cm_class_number(p, j):>7}")
