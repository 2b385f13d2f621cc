"""Exact rational Betti numbers of moduli of framed rank-two torsion-free
sheaves on the ruled surface P(L + O) over an elliptic curve.

The moduli space carries a scaling-torus action whose fixed components
are products of symmetric powers of the curve, indexed by an integer
twist l and a pair of integer partitions.  This package enumerates the
components, evaluates each one's homological shift index in closed form,
and assembles exact Poincare polynomials for any finite window of l
values.  Every closed form ships with an independent brute-force oracle
(weight counting, generating functions) wired into the test suite and
the ``verify`` command.
"""

from .graded import GradedDims
from .homology import (
    ELLIPTIC_GENUS,
    betti_curve,
    betti_projective,
    betti_sym_component,
    macdonald_sym,
)
from .moduli import (
    ComponentContribution,
    FixedComponent,
    SplittingType,
    betti_report,
    betti_table,
    component_contribution,
    enumerate_components,
    min_balanced_l,
    splitting_types,
    stable_shift,
)
from .partitions import MAX_WEIGHT, Partition, enumerate_pairs, enumerate_partitions
from .shiftindex import hilbert_part, shift_closed, shift_oracle
from .weights import (
    DEFAULT_WEIGHTS,
    WeightMultiset,
    WeightTriple,
    conormal_weight,
    ext_weight_families,
    pushforward_weights,
)

__version__ = "0.1.0"

__all__ = [
    "ELLIPTIC_GENUS",
    "MAX_WEIGHT",
    "DEFAULT_WEIGHTS",
    "Partition",
    "GradedDims",
    "WeightTriple",
    "WeightMultiset",
    "FixedComponent",
    "ComponentContribution",
    "SplittingType",
    "enumerate_partitions",
    "enumerate_pairs",
    "betti_projective",
    "betti_curve",
    "macdonald_sym",
    "betti_sym_component",
    "pushforward_weights",
    "conormal_weight",
    "ext_weight_families",
    "hilbert_part",
    "shift_closed",
    "shift_oracle",
    "enumerate_components",
    "component_contribution",
    "betti_table",
    "betti_report",
    "splitting_types",
    "stable_shift",
    "min_balanced_l",
]
