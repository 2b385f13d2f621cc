"""
The shift index: closed form against the counting oracle
========================================================

Each fixed component enters the homology of the moduli space shifted by
twice its attracting codimension d(alpha, beta, l, l').  The closed form
is a delta-function formula in m = l' + 2l; the oracle recounts the same
number from the negative torus weights.  They must agree everywhere.
"""

from framedbetti import Partition, enumerate_pairs, shift_closed, shift_oracle, stable_shift

alpha = Partition.parse("2^1 1^1")
beta = Partition.parse("1^2")

print(f"alpha={alpha} beta={beta}")
print(" l   l'   m   closed  oracle")
for l in range(-3, 4):
    for lprime in (0, 1):
        c = shift_closed(alpha, beta, l, lprime)
        o = shift_oracle(alpha, beta, l, lprime)
        print(f"{l:>3} {lprime:>4} {lprime + 2 * l:>4} {c:>7} {o:>7}")
print()

# Once |l' + 2l| passes the largest part, every delta term dies and the
# shift freezes at 2|a| - l(a) + 2|b| - l(b).
print("stable value:", stable_shift(alpha, beta))
print("shift at l=40:", shift_closed(alpha, beta, 40, 0))
print("shift at l=-40:", shift_closed(alpha, beta, -40, 0))
print()

# A fuller agreement sweep, all pairs of total weight up to 4.
cases = mismatches = 0
for n in range(5):
    for a, b in enumerate_pairs(n):
        for l in range(-6, 7):
            for lprime in range(-2, 3):
                cases += 1
                if shift_closed(a, b, l, lprime) != shift_oracle(a, b, l, lprime):
                    mismatches += 1
print(f"sweep: {mismatches} mismatches in {cases} cases")
