"""
Finiteness of splitting types
=============================

A rank-two sheaf restricts to the generic fiber as O(d) + O(d') with
d + d' = F.  For unequal degrees the Chern identity
c2 = d*degE + (F - 2d)*degB1 + c2I1 + c2I2 admits only finitely many
solutions once the side conditions are imposed, and the enumerator
returns all of them.
"""

from framedbetti import splitting_types

for deg_e, fiber_deg, c2 in [(0, 0, 2), (1, 0, 1), (0, 0, 4), (1, -2, 2)]:
    types = splitting_types(deg_e, fiber_deg, c2)
    print(f"degE={deg_e} F={fiber_deg} c2={c2}: {len(types)} solutions")
    for t in types:
        print(f"  d={t.d} d'={t.dprime} degB1={t.deg_b1} "
              f"c2I1={t.c2_i1} c2I2={t.c2_i2}")
    print()

# The count stays finite but grows with c2.
print("solution counts for degE=0, F=0, c2=0..8:")
print([len(splitting_types(0, 0, c2)) for c2 in range(9)])
