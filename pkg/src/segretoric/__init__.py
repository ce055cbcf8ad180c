"""Segre-variety and toric tools for multi-qubit pure-state entanglement."""

from .cones import (
    LatticeMonomial,
    LatticePolytope,
    RationalCone,
    UnsupportedConeError,
    cone_contains,
    dual_cone,
    in_cone_algebra,
    is_strongly_convex,
    lattice_support,
    support,
)
from .partition import Join, Leaf, binary_trees, block_segre, compose_partition, parse_tree
from .segre import (
    MeasureConfig,
    QuadricBinomial,
    SeparabilityReport,
    entanglement_measure,
    evaluate_binomial,
    segre_embed,
    separability_report,
    single_swap_minors,
)
from .state import (
    MultiIndex,
    MultiQubitState,
    SingleQubitFactor,
    family_state,
    make_state,
    normalize,
)
from .toric import (
    ChartAtlas,
    EquivalenceReport,
    VertexExponentMap,
    hypercube_atlas,
    ideal_equivalence_report,
    toric_ideal_quadrics,
)

__version__ = "0.1.0"
