"""Scaling-torus weight calculus at a fixed point of the moduli space.

A fixed point splits into two rank-one summands twisted along the zero
section and supported on invariant ideals with partition data (alpha,
beta).  The torus acts through three integer weights (w1, w2, w3): w1
and w2 scale the two framing factors, w3 the line-bundle direction.  The
cross terms between the summands decompose into four explicit weight
families; counting their strictly negative entries gives the attracting
codimension, which is what the closed-form shift index must reproduce.
"""

from dataclasses import dataclass


@dataclass(frozen=True)
class WeightTriple:
    """Torus weights (w1, w2, w3), all positive with w3 > w2 - w1 > 0.

    The strict gap condition pins the sign of every family entry to the
    integer offsets l' + 2l +/- i alone, so negative-weight counts do not
    depend on which valid triple is used.
    """

    w1: int
    w2: int
    w3: int

    def __post_init__(self):
        if self.w1 < 1 or self.w2 < 1 or self.w3 < 1:
            raise ValueError(f"weights must be positive, got {(self.w1, self.w2, self.w3)}")
        if not self.w3 > self.w2 - self.w1 > 0:
            raise ValueError(
                f"weights must satisfy w3 > w2 - w1 > 0, got {(self.w1, self.w2, self.w3)}")


DEFAULT_WEIGHTS = WeightTriple(1, 2, 10)


class WeightMultiset:
    """Multiset of integer torus weights with multiplicities.

    Entries of equal weight are merged; zero multiplicities are dropped.
    """

    __slots__ = ("_entries",)

    def __init__(self, entries=()):
        merged = {}
        items = entries.items() if hasattr(entries, "items") else entries
        for weight, mult in items:
            if not isinstance(weight, int):
                raise ValueError(f"weights must be integers, got {weight!r}")
            if not isinstance(mult, int) or mult < 0:
                raise ValueError(f"multiplicities must be non-negative integers, got {mult!r}")
            if mult:
                merged[weight] = merged.get(weight, 0) + mult
        self._entries = dict(sorted(merged.items()))

    def items(self):
        """Pairs ``(weight, multiplicity)`` sorted by weight."""
        return list(self._entries.items())

    def multiplicity(self, weight):
        return self._entries.get(weight, 0)

    def negative_count(self):
        """Total multiplicity of the strictly negative weights.

        Weight 0 counts as non-negative.
        """
        return sum(m for w, m in self._entries.items() if w < 0)

    def total_multiplicity(self):
        return sum(self._entries.values())

    def lines(self):
        """Sorted "weight x multiplicity" lines for text output."""
        return [f"{w} x {m}" for w, m in self._entries.items()]

    def as_dict(self):
        return dict(self._entries)

    def __bool__(self):
        return bool(self._entries)

    def __eq__(self, other):
        if not isinstance(other, WeightMultiset):
            return NotImplemented
        return self._entries == other._entries

    def __repr__(self):
        return f"WeightMultiset({self._entries!r})"


def pushforward_weights(k):
    """Weights on the pushforward of the k-fold zero-section twist.

    Pushing O(k sigma) down to the curve gives the sum of the line-bundle
    powers L^(k-j) for j = 0..k, and the torus scales the L^(k-j) factor
    with weight k - j.  Returns [(twist_exponent, weight)] with both
    entries equal, descending from (k, k) to (0, 0).
    """
    if k < 0:
        raise ValueError(f"twist order must be non-negative, got {k}")
    return [(k - j, k - j) for j in range(k + 1)]


def conormal_weight(k):
    """Weight k on the k-th conormal graded piece I_D^k / I_D^(k+1) = L^k
    along the section at infinity."""
    if k < 0:
        raise ValueError(f"conormal order must be non-negative, got {k}")
    return k


def ext_weight_families(alpha, beta, l, lprime, weights=DEFAULT_WEIGHTS):
    """Torus weights on the cross terms between the two fixed-point summands.

    With m = l' + 2l, every part size j of the partitions contributes,
    for each i = 0..j-1:

        w2 - w1 - w3*(m + i)        with multiplicity b_j   (sections on I_2 quotient)
        w1 - w2 + w3*(m + i + 1)    with multiplicity b_j   (dual pairing on I_2)
        w2 - w1 + w3*(i + 1 - m)    with multiplicity a_j   (dual pairing on I_1)
        w1 - w2 + w3*(m - i)        with multiplicity a_j   (sections on I_1 quotient)

    The total multiplicity is 2*(|alpha| + |beta|).  Under the triple's
    gap condition the entry signs depend only on m and i, so
    ``negative_count`` of the result is the same for every valid triple.
    """
    if not isinstance(weights, WeightTriple):
        weights = WeightTriple(*weights)
    w1, w2, w3 = weights.w1, weights.w2, weights.w3
    m = lprime + 2 * l
    entries = []
    for j, b in beta.items():
        for i in range(j):
            entries.append((w2 - w1 - w3 * (m + i), b))
            entries.append((w1 - w2 + w3 * (m + i + 1), b))
    for j, a in alpha.items():
        for i in range(j):
            entries.append((w2 - w1 + w3 * (i + 1 - m), a))
            entries.append((w1 - w2 + w3 * (m - i), a))
    return WeightMultiset(entries)
