"""Certified non-existence bounds for k-uniform states in (C^q)^(tensor n).

Exact-arithmetic engine: enumerator transforms, a rational-simplex
feasibility program with Farkas certificates, closed-form defect
thresholds, the two-support dual criterion, the shadow-refinement
criterion, and the certified asymptotic rate bound.
"""

from .asymptotic import RateBound, theta_bound, theta_function
from .closed_form import (
    BoundVerdict,
    Method,
    corollary_l_check,
    defect1_check,
    defect2_check,
    min_n_scan,
    scott_check,
    singleton_check,
    two_support_check,
)
from .enumerators import (
    EnumeratorVector,
    Kind,
    UniformityContext,
    binomial_relation,
    check_pure_state_consistency,
    kuniform_targets,
    macwilliams_dual,
    shadow_transform,
    unitary_to_weight,
    weight_to_unitary,
)
from .exact import HomogeneousPoly, PowerSeries, Rational, binomial, substitute_linear
from .lp import (
    DualCertificate,
    FarkasCertificate,
    Feasible,
    Infeasible,
    LinearProgram,
    build_primal,
    solve_feasibility,
    two_support_certificate,
    verify_dual_certificate,
    verify_farkas,
    verify_point,
)
from .report import BoundReport, run_check
from .shadow import (
    AlphaTriangle,
    GleasonCoefficients,
    ShadowBoundValue,
    alpha_i0,
    alpha_i0_oracle,
    alpha_offdiag,
    gleason_from_weight,
    lagrange_burmann_oracle,
    prop1_check,
    scan_refinement,
    shadow_bound_value,
    shadow_from_gleason,
)

__version__ = "0.1.0"

__all__ = [
    "AlphaTriangle",
    "BoundReport",
    "BoundVerdict",
    "DualCertificate",
    "EnumeratorVector",
    "FarkasCertificate",
    "Feasible",
    "GleasonCoefficients",
    "HomogeneousPoly",
    "Infeasible",
    "Kind",
    "LinearProgram",
    "Method",
    "PowerSeries",
    "Rational",
    "RateBound",
    "ShadowBoundValue",
    "UniformityContext",
    "alpha_i0",
    "alpha_i0_oracle",
    "alpha_offdiag",
    "binomial",
    "binomial_relation",
    "build_primal",
    "check_pure_state_consistency",
    "corollary_l_check",
    "defect1_check",
    "defect2_check",
    "gleason_from_weight",
    "kuniform_targets",
    "lagrange_burmann_oracle",
    "macwilliams_dual",
    "min_n_scan",
    "prop1_check",
    "run_check",
    "scan_refinement",
    "scott_check",
    "shadow_bound_value",
    "shadow_from_gleason",
    "shadow_transform",
    "singleton_check",
    "solve_feasibility",
    "substitute_linear",
    "theta_bound",
    "theta_function",
    "two_support_certificate",
    "two_support_check",
    "unitary_to_weight",
    "verify_dual_certificate",
    "verify_farkas",
    "verify_point",
    "weight_to_unitary",
]
