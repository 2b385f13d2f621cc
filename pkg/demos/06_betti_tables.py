"""
Assembling Betti tables of the moduli space
===========================================

Fix the Chern data (l', c2) and an l-window.  Each fixed component
contributes its homology shifted by its index; the direct sum over the
window is the Betti table.  The sum over all integers l has infinite
rank, which is why a window is always part of the query.
"""

from framedbetti import (
    betti_table,
    component_contribution,
    enumerate_components,
    min_balanced_l,
)

lprime, c2 = 0, 2

print(f"components for c2={c2}, l in [0, 0], l'={lprime}:")
for component in enumerate_components(c2, 0, 0):
    contrib = component_contribution(component, lprime)
    print(f"  l={component.l} alpha={component.alpha} beta={component.beta} "
          f"shift={contrib.shift} homology={contrib.homology.poly_string()}")
print()

table = betti_table(lprime, c2, 0, 0)
print("window [0,0]: ", table.poly_string())
print()

# Windows glue additively, and the total rank grows linearly with the
# window because every partition pair reappears at every l.
left = betti_table(lprime, c2, -2, 0)
right = betti_table(lprime, c2, 1, 2)
whole = betti_table(lprime, c2, -2, 2)
print("window [-2,0]:", left.poly_string())
print("window [1,2]: ", right.poly_string())
print("their sum == window [-2,2]:", (left + right) == whole)
print()

for hi in range(4):
    t = betti_table(lprime, c2, 0, hi)
    print(f"window [0,{hi}]: rank {t.total_rank()}, euler {t.euler_char()}")
print()

print("balanced floor for l' = -3:", min_balanced_l(-3),
      "(components below it are computed, and flagged by the CLI)")
