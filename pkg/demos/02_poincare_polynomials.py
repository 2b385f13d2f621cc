"""
Exact Poincare polynomial arithmetic
====================================

Betti data lives in GradedDims: a sparse map from homological degree to
an exact integer dimension.  Direct sum adds pointwise, tensor is the
Cauchy product, and shift moves everything up by twice a codimension.
"""

from framedbetti import GradedDims

curve = GradedDims.from_dense([1, 2, 1])        # 1 + 2t + t^2
sphere = GradedDims({0: 1, 2: 1})               # 1 + t^2

print("curve:          ", curve.poly_string())
print("sphere:         ", sphere.poly_string())
print("direct sum:     ", (curve + sphere).poly_string())
print("tensor:         ", (curve * sphere).poly_string())
print("shift by 1:     ", curve.shift(1).poly_string())
print()

# Euler characteristic and total rank are ring maps in the right sense:
# multiplicative under tensor, additive under direct sum.
x = curve * curve
print("curve^2:        ", x.poly_string())
print("euler(curve^2) =", x.euler_char(), " = euler(curve)^2 =", curve.euler_char() ** 2)
print("rank(curve^2)  =", x.total_rank(), " = rank(curve)^2 =", curve.total_rank() ** 2)
print()

# Dimensions are plain Python integers, so nothing ever overflows.
big = GradedDims({0: 10 ** 24, 1: 1})
print("big tensor square, degree 0:", (big * big)[0])
