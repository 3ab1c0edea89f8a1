"""Deciding inequalities with irrational sides, exactly.

ceil(h(n,k)) is an integer root computed by comparing k+1-th powers, and
the comparison of the ménage count against (k+1)!/(2e) uses a rational
enclosure of e, doubling precision until the answer is certain.
"""

from __future__ import annotations

from math import e, factorial

from hamiltonia.formulas import (
    ceil_h,
    gstar_count,
    h_formula,
    menage_count,
    singmaster_bound_check,
)

for n, k in [(7, 4), (14, 7), (17, 6)]:
    print(f"h({n},{k}) ~ {float(h_formula(n, k)):.4f}, exact ceiling {ceil_h(n, k)}")

print("\nk  menage   (k+1)!/2e   ceil h(k+2,k)  certified at")
for k in (4, 6, 8, 10, 12):
    res = singmaster_bound_check(k)
    print(f"{k:<2} {menage_count(k):<8} {factorial(k + 1) / (2 * e):<11.1f} {ceil_h(k + 2, k):<14} "
          f"{res.bits} bits (below={res.cocktail_below}, h above={res.h_above})")

print("\nquartic G* family against ceil h(n,4):")
for n in range(16, 71, 6):
    print(f"  n={n:>2}: {gstar_count(n):>7} < {ceil_h(n, 4):>7}")
