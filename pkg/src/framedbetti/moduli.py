"""Fixed-component enumeration and assembly of moduli-space Betti tables.

For first Chern class -l' sigma and second Chern class c2, the fixed
components are indexed by an integer l and an ordered partition pair
(alpha, beta) with |alpha| + |beta| = c2.  Summing each component's
homology, shifted by its index, over a finite window of l values gives
the Betti table of that window.  The full sum runs over all integers l
and has infinite total rank, so a window is always required; beyond
|l' + 2l| > max part size the shifts stabilize (see `stable_shift`), and
any window can be reconstructed from a finite core plus that constant
tail.
"""

from dataclasses import dataclass

from .graded import GradedDims
from .homology import betti_sym_component
from .partitions import Partition, enumerate_pairs
from .shiftindex import shift_closed


@dataclass(frozen=True)
class FixedComponent:
    """One fixed component: the l-twist and the partition pair."""

    l: int
    alpha: Partition
    beta: Partition


@dataclass(frozen=True)
class ComponentContribution:
    """A component together with its shift index and Betti vector."""

    component: FixedComponent
    shift: int
    homology: GradedDims


@dataclass(frozen=True)
class SplittingType:
    """A solution of the Chern constraint for unequal fiber degrees.

    The generic fiber restriction is O(d) + O(dprime) with d > dprime and
    d + dprime = fiber_deg; deg_b1 is the degree of the sub-line-bundle
    on the curve, and c2_i1, c2_i2 the colengths of the two ideals.
    """

    d: int
    dprime: int
    deg_b1: int
    c2_i1: int
    c2_i2: int
    deg_e: int
    fiber_deg: int


def min_balanced_l(lprime):
    """Smallest l with 2l + l' >= 0, i.e. with generic splitting at least
    as positive on the sub side.  Components below this are still valid
    inputs to the shift formula; callers may want to flag them."""
    return -(lprime // 2)


def enumerate_components(c2, l_min, l_max):
    """All fixed components for second Chern class c2 and l in [l_min, l_max].

    Order: l ascending, then `enumerate_pairs` order.
    """
    if c2 < 0:
        raise ValueError(f"second Chern class must be non-negative, got {c2}")
    if l_min > l_max:
        raise ValueError(f"empty l-window [{l_min}, {l_max}]")
    pairs = enumerate_pairs(c2)
    return [FixedComponent(l, a, b)
            for l in range(l_min, l_max + 1) for a, b in pairs]


def component_contribution(component, lprime):
    """Shift index and Betti vector of one fixed component."""
    d = shift_closed(component.alpha, component.beta, component.l, lprime)
    return ComponentContribution(component, d, betti_sym_component(component.alpha, component.beta))


def stable_shift(alpha, beta):
    """Shift index once |l' + 2l| is past every part size: all delta terms
    vanish and d = 2|alpha| - l(alpha) + 2|beta| - l(beta)."""
    return (2 * alpha.weight() - alpha.length()
            + 2 * beta.weight() - beta.length())


def betti_table(lprime, c2, l_min, l_max):
    """Betti vector of the window: direct sum over components of the
    component homology shifted by its index."""
    total = GradedDims.zero()
    for component in enumerate_components(c2, l_min, l_max):
        contrib = component_contribution(component, lprime)
        total = total + contrib.homology.shift(contrib.shift)
    return total


def betti_report(lprime, c2, l_min, l_max):
    """Full per-component breakdown as a JSON-ready dict.

    Schema: {"lprime", "c2", "l_window": [lo, hi],
             "components": [{"l", "alpha", "beta", "shift", "poincare"}],
             "total": {degree: dimension}}.
    Partitions render as part lists, Poincare data as string-keyed
    degree -> dimension maps with degrees ascending.
    """
    components = []
    total = GradedDims.zero()
    for component in enumerate_components(c2, l_min, l_max):
        contrib = component_contribution(component, lprime)
        shifted = contrib.homology.shift(contrib.shift)
        total = total + shifted
        components.append({
            "l": component.l,
            "alpha": component.alpha.parts(),
            "beta": component.beta.parts(),
            "shift": contrib.shift,
            "poincare": {str(k): v for k, v in contrib.homology.as_dict().items()},
        })
    return {
        "lprime": lprime,
        "c2": c2,
        "l_window": [l_min, l_max],
        "components": components,
        "total": {str(k): v for k, v in total.as_dict().items()},
    }


def splitting_types(deg_e, fiber_deg, c2):
    """All splitting types with the given framing degree, generic fiber
    degree and second Chern class.

    Solves c2 = d*deg_e + (fiber_deg - 2d)*deg_b1 + c2_i1 + c2_i2 subject
    to d > dprime = fiber_deg - d, colengths >= 0, and deg_b1 < 0 for
    deg_e = 0 (deg_b1 <= 0 for deg_e = 1).  The solution set is finite:
    d > fiber_deg - d forces the gap 2d - fiber_deg >= 1, so with
    deg_b1 <= -1 the product term (fiber_deg - 2d)*deg_b1 >= gap grows
    linearly in d, and with deg_e = 1, deg_b1 <= 0 the d*deg_e term plus
    a non-negative product bounds d by c2 directly.

    Order: d ascending, deg_b1 descending from its largest allowed value,
    then c2_i1 ascending.
    """
    if deg_e not in (0, 1):
        raise ValueError(f"framing degree must be 0 or 1, got {deg_e}")
    if fiber_deg > 0:
        raise ValueError(f"generic fiber degree must be <= 0, got {fiber_deg}")
    if c2 < 0:
        raise ValueError(f"second Chern class must be non-negative, got {c2}")
    d_lo = fiber_deg // 2 + 1                       # least d with 2d > fiber_deg
    d_hi = (fiber_deg + c2) // 2 if deg_e == 0 else c2
    out = []
    for d in range(d_lo, d_hi + 1):
        gap = 2 * d - fiber_deg                     # >= 1 throughout
        b1_start = -1 if deg_e == 0 else 0
        deg_b1 = b1_start
        while True:
            remainder = c2 - d * deg_e + gap * deg_b1
            if remainder < 0:                       # decreases as deg_b1 drops
                break
            for c2_i1 in range(remainder + 1):
                out.append(SplittingType(d, fiber_deg - d, deg_b1,
                                         c2_i1, remainder - c2_i1,
                                         deg_e, fiber_deg))
            deg_b1 -= 1
    return out
