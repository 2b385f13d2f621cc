"""The homological shift index of a fixed component.

Localization writes each homology group of the moduli space as a direct
sum over fixed components, with the component's homology shifted up by
twice its attracting codimension d(alpha, beta, l, l').  `shift_closed`
evaluates the closed form of that codimension; `shift_oracle` recomputes
it by counting negative torus weights, and the two must always agree.
"""

from .weights import DEFAULT_WEIGHTS, ext_weight_families


def hilbert_part(p):
    """Negative-weight rank of a punctual Hilbert scheme stratum: |p| - l(p)."""
    return p.weight() - p.length()


def shift_closed(alpha, beta, l, lprime):
    """Closed form of the shift index d(alpha, beta, l, l').

    With m = l' + 2l and partitions alpha = (1^a1 2^a2 ...),
    beta = (1^b1 2^b2 ...):

        d = |alpha| - l(alpha) + sum_{j, 0 <= i < j} a_j * (1 - delta(m - i - 1))
          + |beta|  - l(beta)  + sum_{j, 0 <= i < j} b_j * (1 - delta(m + i))

    where delta(x) is 1 at x = 0 and 0 otherwise.  j runs over the part
    sizes present in the respective partition.
    """
    m = lprime + 2 * l
    total = hilbert_part(alpha) + hilbert_part(beta)
    for j, a in alpha.items():
        for i in range(j):
            if m - i - 1 != 0:
                total += a
    for j, b in beta.items():
        for i in range(j):
            if m + i != 0:
                total += b
    return total


def shift_oracle(alpha, beta, l, lprime, weights=DEFAULT_WEIGHTS):
    """Shift index recomputed from first principles.

    Adds the Hilbert-scheme negative ranks of both partitions to the
    count of strictly negative entries in the four explicit weight
    families.  Slower than `shift_closed` but derived along a different
    route; equality between the two is the core correctness check.
    """
    fam = ext_weight_families(alpha, beta, l, lprime, weights)
    return hilbert_part(alpha) + hilbert_part(beta) + fam.negative_count()
