"""
Symmetric products of the elliptic curve, two ways
==================================================

Fixed components are products of symmetric powers Sym^n C.  For an
elliptic curve, Sym^n C fibers over C with P^(n-1) fibers, so its
rational homology is H(P^(n-1)) (x) H(C).  Macdonald's generating
function (1+qt)^(2g) / ((1-q)(1-q t^2)) computes the same Betti numbers
along a completely different route, which makes it a good cross-check.
"""

from framedbetti import (
    Partition,
    betti_curve,
    betti_projective,
    betti_sym_component,
    macdonald_sym,
)

print("building blocks:")
print("  P^2:      ", betti_projective(2).poly_string())
print("  genus 1 C:", betti_curve(1).poly_string())
print()

print("Sym^n C for the elliptic curve, from the generating function:")
for n in range(5):
    print(f"  n={n}:", macdonald_sym(n).poly_string())
print()

print("fibration formula vs series, n = 1..6:")
for n in range(1, 7):
    fibration = betti_projective(n - 1) * betti_curve(1)
    series = macdonald_sym(n)
    marker = "ok" if fibration == series else "MISMATCH"
    print(f"  n={n}: {fibration.poly_string():<45} {marker}")
print()

# A partition pair multiplies one factor per part size present.
alpha = Partition.parse("1^1 2^1")
h = betti_sym_component(alpha, Partition())
print(f"component for alpha={alpha}:", h.poly_string())
print("total rank:", h.total_rank(), " euler characteristic:", h.euler_char())
