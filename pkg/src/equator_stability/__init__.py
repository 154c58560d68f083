"""Exact stability toolkit for generalized equator maps.

Constructs the generalized radial projection maps symbolically over the
rationals, verifies their defining identities exactly, classifies the
associated equator maps as critical points of the extrinsic k-energy and
of the p-energy, reproduces the full threshold table, and cross-checks the
symbolic engine against an independent floating-point oracle.
"""

from .algebra import (
    AlgebraError,
    Poly,
    RadialField,
    inner_product,
    laplacian,
    radial_partial,
    sphere_reduce,
)
from .p_energy import (
    HardyCheckReport,
    PParams,
    Witness,
    alternate_ell_bound,
    classify_p,
    hessian_quadratic_form,
    instability_witness,
    mu,
    p_dimension_threshold,
    p_ell_threshold,
    p_ratio,
    radial_hardy_check,
    sphere_volume,
)
from .numeric import eval_map, fd_energy_density, fd_laplacian, random_points
from .radial_map import (
    EquatorMap,
    MapConstructionError,
    RadialTensor,
    build_radial_map,
    delta_pairing_constant,
    verify_delta_power,
    verify_energy_density,
    verify_k_harmonic,
    verify_tangency,
    verify_unit_norm,
)
from .stability import (
    AppendixReport,
    InternalInconsistencyError,
    Regime,
    ThresholdRecord,
    Verdict,
    appendix_f,
    appendix_verify,
    b_product,
    biharmonic_ell_threshold,
    classify_k,
    diagonal_verdict,
    hardy_constant,
    harmonic_threshold_closed_form,
    q_at_con_bound,
    q_poly,
    q_poly_shifted_form,
    rising,
    table,
    threshold_m,
    upper_bound_m,
)

__version__ = "0.1.0"

__all__ = [
    "AlgebraError",
    "AppendixReport",
    "EquatorMap",
    "HardyCheckReport",
    "InternalInconsistencyError",
    "MapConstructionError",
    "PParams",
    "Poly",
    "RadialField",
    "RadialTensor",
    "Regime",
    "ThresholdRecord",
    "Verdict",
    "Witness",
    "alternate_ell_bound",
    "appendix_f",
    "appendix_verify",
    "b_product",
    "biharmonic_ell_threshold",
    "build_radial_map",
    "classify_k",
    "classify_p",
    "delta_pairing_constant",
    "diagonal_verdict",
    "eval_map",
    "fd_energy_density",
    "fd_laplacian",
    "hardy_constant",
    "harmonic_threshold_closed_form",
    "hessian_quadratic_form",
    "inner_product",
    "instability_witness",
    "laplacian",
    "mu",
    "p_dimension_threshold",
    "p_ell_threshold",
    "p_ratio",
    "q_at_con_bound",
    "q_poly",
    "q_poly_shifted_form",
    "radial_hardy_check",
    "radial_partial",
    "random_points",
    "rising",
    "sphere_reduce",
    "sphere_volume",
    "table",
    "threshold_m",
    "upper_bound_m",
    "verify_delta_power",
    "verify_energy_density",
    "verify_k_harmonic",
    "verify_tangency",
    "verify_unit_norm",
    "__version__",
]
