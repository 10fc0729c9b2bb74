//! Isotypic projectors, matrix spherical functions `Φ(g) = B*τ(g)B` and the
//! verifiers built on them.

mod component;
mod report;
mod theorems;

pub use component::{
    default_band, functional_equation_residual, projector, projector_with_tolerance, rule_for, spherical_eval,
    IsotypicComponent, SphericalFunction,
};
pub use report::{QuadratureInfo, Report};
pub use theorems::{
    admissible_ktypes, check_functional_equation, check_theorem_impar, check_theorem_matrix, check_theorem_par,
    check_theorem_weights, check_zonal_on_group, dominant_weights, functional_equation_sweep,
    functional_equation_sweep_taus, tau_for_label, CheckConfig,
    DEFAULT_SAMPLES, DEFAULT_SEED,
};
