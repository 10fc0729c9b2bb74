use std::f64::consts::{FRAC_PI_2, PI};

use crate::error::{LabError, Result};
use crate::group::GroupElement;
use crate::linalg::RMat;

/// The element `a ∈ O(n) \ SO(n)`: `diag(1, …, 1, -1)` for even `n`,
/// `-I` for odd `n`.
pub fn coset_representative(n: usize) -> GroupElement {
    let mut d = vec![1.0; n];
    if n % 2 == 0 {
        d[n - 1] = -1.0;
    } else {
        d.iter_mut().for_each(|x| *x = -1.0);
    }
    GroupElement::from_parts(RMat::from_diagonal(&nalgebra::DVector::from_vec(d)), -1)
}

/// Embeds `k ∈ O(n)` into SO(n+1) as `block-diag(k, det k)`.
pub fn embed_k_in_g(k: &GroupElement) -> GroupElement {
    let n = k.dim();
    let mut m = RMat::zeros(n + 1, n + 1);
    m.view_mut((0, 0), (n, n)).copy_from(k.matrix());
    m[(n, n)] = f64::from(k.det_sign());
    GroupElement::from_parts(m, 1)
}

/// Sphere distance between `g·o` and the origin `o = e_{n+1}`.
pub fn geodesic_angle(g: &GroupElement) -> Result<f64> {
    if !g.is_special() {
        return Err(LabError::WrongGroup("geodesic angle needs det +1".into()));
    }
    let n1 = g.dim();
    let c = g.entry(n1 - 1, n1 - 1);
    if c.abs() > 1.0 + 1e-6 {
        return Err(LabError::Domain(format!("corner entry {c} outside [-1, 1]")));
    }
    Ok(c.clamp(-1.0, 1.0).acos())
}

/// Distance in the projective space corresponding to a sphere distance
/// `θ ∈ [0, π]`: `2θ` up to `π/2`, then `2π - 2θ`.
pub fn projective_angle(theta: f64) -> Result<f64> {
    if !(0.0..=PI).contains(&theta) {
        return Err(LabError::Domain(format!("angle {theta} outside [0, π]")));
    }
    Ok(if theta <= FRAC_PI_2 {
        2.0 * theta
    } else {
        2.0 * PI - 2.0 * theta
    })
}
