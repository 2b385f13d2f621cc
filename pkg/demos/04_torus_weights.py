"""
Torus weights at a fixed point
==============================

The scaling action on the ruled surface induces explicit weights on the
sheaves attached to the zero section: pushing the k-fold twist down to
the curve spreads it over line-bundle powers with weights k, k-1, ..., 0,
and the k-th conormal piece along the section at infinity carries
weight k.  At a fixed point of the moduli space, the cross terms between
the two rank-one summands produce four weight families; their strictly
negative part is what drives the homological shift.
"""

from framedbetti import (
    Partition,
    WeightTriple,
    conormal_weight,
    ext_weight_families,
    pushforward_weights,
)

print("pushforward weights of the k-fold twist:")
for k in range(4):
    print(f"  k={k}:", pushforward_weights(k))
print()

print("conormal weights:", [conormal_weight(k) for k in range(6)])
print()

alpha = Partition.parse("2^1")
beta = Partition.parse("1^1")
for l in (0, 1):
    ms = ext_weight_families(alpha, beta, l, 0)
    print(f"families at alpha={alpha} beta={beta} l={l} l'=0:")
    for line in ms.lines():
        print("   ", line)
    print("  negative count:", ms.negative_count())
print()

# The negative count is an integer invariant: any triple with
# w3 > w2 - w1 > 0 gives the same answer.
for triple in (WeightTriple(1, 2, 10), WeightTriple(1, 3, 100), WeightTriple(2, 5, 1000)):
    ms = ext_weight_families(alpha, beta, 1, 0, triple)
    print(f"W=({triple.w1},{triple.w2},{triple.w3}) -> negative count {ms.negative_count()}")
