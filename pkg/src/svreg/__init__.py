"""Exact-arithmetic regularity, cohomology and Tate-resolution windows for
line bundles on products of projective spaces under Segre-Veronese
embeddings.

Every quantity is an exact Python integer.  Closed forms (regularity
tests, regularity-set corners, window endpoints) are paired with
brute-force cohomology routes and grid verification that replays one
against the other; see :mod:`svreg.verify` and the ``svreg verify``
subcommand.
"""
from .cohomology import (
    CohomologyProfile,
    MultiDegree,
    SegreVeronese,
    binom,
    euler_characteristic,
    factor_cohomology,
    product_cohomology,
    twist,
)
from .regularity import (
    PERMUTATION_CAP,
    SUBSET_CAP,
    IdealSheafBound,
    RegularityCorner,
    SubadditivityReport,
    check_pair_subadditivity,
    check_subadditivity,
    cm_regularity,
    cm_regularity_breakdown,
    ideal_sheaf_bound,
    in_regularity_set,
    is_regular_formula,
    is_regular_oracle,
    regularity_corners,
    segre_regularity,
)
from .tate import (
    TateEntry,
    TateTerm,
    TateWindow,
    balanced_endpoints,
    dual_twist,
    p_minus,
    p_plus,
    tate_term,
    tate_window,
)
from .verify import CHECKS, CheckResult, VerifyConfig, run_checks

__version__ = "0.1.0"

__all__ = [
    "CHECKS",
    "CheckResult",
    "CohomologyProfile",
    "IdealSheafBound",
    "MultiDegree",
    "PERMUTATION_CAP",
    "RegularityCorner",
    "SUBSET_CAP",
    "SegreVeronese",
    "SubadditivityReport",
    "TateEntry",
    "TateTerm",
    "TateWindow",
    "VerifyConfig",
    "balanced_endpoints",
    "binom",
    "check_pair_subadditivity",
    "check_subadditivity",
    "cm_regularity",
    "cm_regularity_breakdown",
    "dual_twist",
    "euler_characteristic",
    "factor_cohomology",
    "ideal_sheaf_bound",
    "in_regularity_set",
    "is_regular_formula",
    "is_regular_oracle",
    "p_minus",
    "p_plus",
    "product_cohomology",
    "regularity_corners",
    "run_checks",
    "segre_regularity",
    "tate_term",
    "tate_window",
    "twist",
]
