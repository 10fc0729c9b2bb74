//! Tolerances shared across the crate.
//!
//! The orthogonality tolerance is the single global knob used when group
//! elements are validated; everything else travels in a [`Tolerances`] value.

use std::sync::atomic::{AtomicU64, Ordering};

use serde::{Deserialize, Serialize};

use crate::error::{LabError, Result};

pub const DEFAULT_ORTHOGONALITY_TOL: f64 = 1e-12;

static ORTHOGONALITY_TOL_BITS: AtomicU64 = AtomicU64::new(0);

/// Current tolerance for `gᵀg = I` checks.
pub fn orthogonality_tolerance() -> f64 {
    let bits = ORTHOGONALITY_TOL_BITS.load(Ordering::Relaxed);
    if bits == 0 {
        DEFAULT_ORTHOGONALITY_TOL
    } else {
        f64::from_bits(bits)
    }
}

/// Overrides the global orthogonality tolerance. Passing `None` restores the default.
pub fn set_orthogonality_tolerance(tol: Option<f64>) {
    let bits = tol.map(f64::to_bits).unwrap_or(0);
    ORTHOGONALITY_TOL_BITS.store(bits, Ordering::Relaxed);
}

/// Verification thresholds. Field names double as the `NAME` in `--tol NAME=V`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Tolerances {
    /// Projector idempotence and self-adjointness.
    pub projector: f64,
    /// Allowed distance of projector eigenvalues from {0, 1}.
    pub spectrum: f64,
    pub functional_equation: f64,
    /// `Φ(-I) = ±I` in the odd-dimensional correspondence.
    pub par_sign: f64,
    /// Equality of the SO(n) and O(n) projectors.
    pub par_projector: f64,
    /// Entrywise equality of spherical functions in the correspondence checks.
    pub correspondence: f64,
    /// `A² = I` for the intertwiner `A = Φ(a)`.
    pub involution: f64,
    pub jacobi_identity: f64,
    pub zonal_scalar: f64,
    pub zonal_group: f64,
    /// Distance to the nearest integer accepted for extracted weights.
    pub weight_rounding: f64,
    pub homomorphism: f64,
    pub schur: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Self {
            projector: 1e-9,
            spectrum: 1e-6,
            functional_equation: 1e-8,
            par_sign: 1e-8,
            par_projector: 1e-9,
            correspondence: 1e-8,
            involution: 1e-9,
            jacobi_identity: 1e-10,
            zonal_scalar: 1e-10,
            zonal_group: 1e-8,
            weight_rounding: 1e-6,
            homomorphism: 1e-10,
            schur: 1e-11,
        }
    }
}

impl Tolerances {
    pub const NAMES: [&'static str; 13] = [
        "projector",
        "spectrum",
        "functional_equation",
        "par_sign",
        "par_projector",
        "correspondence",
        "involution",
        "jacobi_identity",
        "zonal_scalar",
        "zonal_group",
        "weight_rounding",
        "homomorphism",
        "schur",
    ];

    fn slot(&mut self, name: &str) -> Option<&mut f64> {
        Some(match name {
            "projector" => &mut self.projector,
            "spectrum" => &mut self.spectrum,
            "functional_equation" => &mut self.functional_equation,
            "par_sign" => &mut self.par_sign,
            "par_projector" => &mut self.par_projector,
            "correspondence" => &mut self.correspondence,
            "involution" => &mut self.involution,
            "jacobi_identity" => &mut self.jacobi_identity,
            "zonal_scalar" => &mut self.zonal_scalar,
            "zonal_group" => &mut self.zonal_group,
            "weight_rounding" => &mut self.weight_rounding,
            "homomorphism" => &mut self.homomorphism,
            "schur" => &mut self.schur,
            _ => return None,
        })
    }

    /// Overrides one tolerance by name.
    pub fn set(&mut self, name: &str, value: f64) -> Result<()> {
        if !(value.is_finite() && value > 0.0) {
            return Err(LabError::Domain(format!(
                "tolerance {name} must be positive and finite, got {value}"
            )));
        }
        let slot = self
            .slot(name)
            .ok_or_else(|| LabError::Domain(format!("unknown tolerance name {name:?}")))?;
        *slot = value;
        Ok(())
    }
}
