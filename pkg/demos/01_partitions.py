"""
Integer partitions in multiplicity form
=======================================

The whole component catalog is indexed by partitions, stored by part
multiplicities because every downstream formula is written in terms of
the counts a_i of parts of size i.
"""

from framedbetti import Partition, enumerate_pairs, enumerate_partitions

# Two interchangeable text forms: a part list and size^multiplicity tokens.
p = Partition.parse("[3,1,1]")
print("partition:", p)
print("exponent form:", p.to_exponent_string())
print("weight:", p.weight(), " length:", p.length(), " parts:", p.parts())
print()

# Enumeration is in decreasing lexicographic order on part lists, and the
# counts follow the classical partition numbers 1, 1, 2, 3, 5, 7, 11, ...
for n in range(6):
    ps = enumerate_partitions(n)
    print(f"p({n}) = {len(ps)}:", ", ".join(str(q) for q in ps))
print()

# Fixed components carry an ordered pair of partitions; the pair weight
# is the second Chern class.
pairs = enumerate_pairs(2)
print("ordered pairs with total weight 2:")
for a, b in pairs:
    print(f"  alpha={a} beta={b}")
