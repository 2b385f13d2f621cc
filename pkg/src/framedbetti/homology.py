"""Rational Betti data for the building-block spaces.

Fixed components of the moduli space are products of symmetric powers of
the base curve.  For an elliptic curve the n-th symmetric power fibers
over the curve with projective-space fibers, so its rational homology is
H(P^(n-1)) (x) H(C); `betti_sym_component` is that production formula.
`macdonald_sym` computes the same Betti numbers from Macdonald's
generating function and serves as an independent cross-check.
"""

from math import comb

from .graded import GradedDims
from .partitions import MAX_WEIGHT

# The curve under the moduli spaces is elliptic; other genera appear only
# in the diagnostic generating-function routine.
ELLIPTIC_GENUS = 1


def betti_projective(n):
    """Betti vector of complex projective n-space: one dimension in each
    even degree 0, 2, ..., 2n."""
    if n < 0:
        raise ValueError(f"projective dimension must be non-negative, got {n}")
    return GradedDims({2 * k: 1 for k in range(n + 1)})


def betti_curve(genus):
    """Betti vector (1, 2g, 1) of a smooth projective curve of genus g."""
    if genus < 0:
        raise ValueError(f"genus must be non-negative, got {genus}")
    return GradedDims({0: 1, 1: 2 * genus, 2: 1})


def _series_product(a, b, order):
    # Truncated product of q-series whose coefficients are GradedDims.
    out = [GradedDims.zero() for _ in range(order + 1)]
    for i, ca in enumerate(a):
        if not ca:
            continue
        for j in range(order + 1 - i):
            if b[j]:
                out[i + j] = out[i + j] + ca * b[j]
    return out


def macdonald_sym(n, genus=ELLIPTIC_GENUS):
    """Betti vector of Sym^n C for a genus-g curve, by generating function.

    Expands (1 + qt)^(2g) / ((1 - q)(1 - q t^2)) as a q-series truncated
    at order n, with exact polynomial coefficients in t, and returns the
    coefficient of q^n.  Independent of the fibration formula used on the
    production path.
    """
    if n < 0:
        raise ValueError(f"symmetric power must be non-negative, got {n}")
    if n > MAX_WEIGHT:
        raise ValueError(f"symmetric power {n} exceeds the supported bound {MAX_WEIGHT}")
    if genus < 0:
        raise ValueError(f"genus must be non-negative, got {genus}")
    numer = [GradedDims({j: comb(2 * genus, j)}) if j <= 2 * genus else GradedDims.zero()
             for j in range(n + 1)]
    geom = [GradedDims.unit() for _ in range(n + 1)]          # 1 / (1 - q)
    geom_t2 = [GradedDims({2 * b: 1}) for b in range(n + 1)]  # 1 / (1 - q t^2)
    series = _series_product(_series_product(numer, geom, n), geom_t2, n)
    return series[n]


def betti_sym_component(alpha, beta):
    """Betti vector of the fixed component indexed by a partition pair.

    The component is the product over all part sizes i of Sym^(a_i) C
    times the same product for beta, with C elliptic.  Each factor
    contributes H(P^(a_i - 1)) (x) H(C); the empty product is a point.
    """
    result = GradedDims.unit()
    for _, m in alpha.items():
        result = result * betti_projective(m - 1) * betti_curve(ELLIPTIC_GENUS)
    for _, m in beta.items():
        result = result * betti_projective(m - 1) * betti_curve(ELLIPTIC_GENUS)
    return result
