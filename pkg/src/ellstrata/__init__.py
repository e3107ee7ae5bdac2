"""Exact subbundle calculus for vector bundles on curves.

Indecomposable-bundle arithmetic on elliptic curves, splitting-type
enumeration with dimension bounds, subbundle-variety dimensions and
evaluation-map regimes, Segre-invariant strata tables for arbitrary genus,
and a finite-field oracle for the Grassmannian incidence dimensions used in
degeneration arguments.
"""

from .atiyah import (
    BundleSum,
    IndecomposableBundle,
    TwistClass,
    deg0_tensor_decompose,
    dual,
    end_h0,
    gcd_factor,
    generic_sum,
    generically_globally_generated,
    h0,
    hom_dim,
    hom_slope,
    slope,
    torsion_classes,
)
from .splittings import SplittingType, balanced_type, enumerate_types, type_bound_check
from .subvariety import (
    QuotientProfile,
    RegimeDescriptor,
    dim_A,
    equal_slope_subbundle_count,
    kernel_obstruction,
    quotient_profile,
    regime,
)
from .strata import (
    GluingLedger,
    StratumReport,
    classify_stratum,
    degeneration_ledger,
    expected_dim,
    ext_space_rank,
    extension_count_identity,
    segre,
    strata_table,
    stratum_bounds,
)
from .incidence import (
    DegenerateInstanceError,
    IncidenceInstance,
    gaussian_binomial,
    graph_count,
    incidence_dim,
    invertibility_rate,
    random_instance,
)

__version__ = "0.1.0"

__all__ = [
    "BundleSum",
    "DegenerateInstanceError",
    "GluingLedger",
    "IncidenceInstance",
    "IndecomposableBundle",
    "QuotientProfile",
    "RegimeDescriptor",
    "SplittingType",
    "StratumReport",
    "TwistClass",
    "balanced_type",
    "classify_stratum",
    "deg0_tensor_decompose",
    "degeneration_ledger",
    "dim_A",
    "dual",
    "end_h0",
    "enumerate_types",
    "equal_slope_subbundle_count",
    "expected_dim",
    "ext_space_rank",
    "extension_count_identity",
    "gaussian_binomial",
    "gcd_factor",
    "generic_sum",
    "generically_globally_generated",
    "graph_count",
    "h0",
    "hom_dim",
    "hom_slope",
    "incidence_dim",
    "invertibility_rate",
    "kernel_obstruction",
    "quotient_profile",
    "random_instance",
    "regime",
    "segre",
    "slope",
    "strata_table",
    "stratum_bounds",
    "torsion_classes",
]
