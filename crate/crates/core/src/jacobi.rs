//! Pochhammer symbols, Jacobi polynomials and the zonal spherical functions
//! of the sphere `S^n` and the real projective space `P^n(R)`.
//!
//! Distances are normalized so that the diameter of either space is `π`, and
//! the zonal functions are `φ_j(θ) = P_j^{(α,β)}(cos θ) / P_j^{(α,β)}(1)`.

use std::fmt;
use std::io::Write;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{LabError, Result};
use crate::group::projective_angle;

/// Scale factor in `cos(λθ)`; fixed to 1 by normalizing the diameter.
pub const LAMBDA: f64 = 1.0;
/// Diameter of the space after normalization.
pub const DIAMETER: f64 = std::f64::consts::PI;

/// `(x)_k = x (x+1) ⋯ (x+k-1)`, with `(x)_0 = 1`.
pub fn pochhammer(x: f64, k: u32) -> f64 {
    (0..k).fold(1.0, |acc, i| acc * (x + i as f64))
}

/// `P_j^{(α,β)}(x)` by the three-term recurrence.
pub fn jacobi_eval(j: u32, alpha: f64, beta: f64, x: f64) -> Result<f64> {
    if !(alpha > -1.0 && beta > -1.0) {
        return Err(LabError::Domain(format!(
            "Jacobi parameters must exceed -1, got α={alpha}, β={beta}"
        )));
    }
    if j == 0 {
        return Ok(1.0);
    }
    let ab = alpha + beta;
    let mut p_prev = 1.0;
    let mut p = (alpha + 1.0) + (ab + 2.0) * (x - 1.0) / 2.0;
    for n in 2..=j {
        let n = n as f64;
        let c = 2.0 * n + ab;
        let a1 = 2.0 * n * (n + ab) * (c - 2.0);
        let a2 = (c - 1.0) * (c * (c - 2.0) * x + alpha * alpha - beta * beta);
        let a3 = 2.0 * (n + alpha - 1.0) * (n + beta - 1.0) * c;
        let next = (a2 * p - a3 * p_prev) / a1;
        p_prev = p;
        p = next;
    }
    Ok(p)
}

/// `k! (α+1)_{2k} / ((2k)! (α+1)_k)`, evaluated as the product
/// `∏_{i<k} (α+1+k+i) / (k+1+i)`.
pub fn identity_coefficient(k: u32, alpha: f64) -> f64 {
    (0..k).fold(1.0, |acc, i| {
        acc * (alpha + 1.0 + (k + i) as f64) / (k + 1 + i) as f64
    })
}

/// `|P_{2k}^{(α,α)}(x) − c_k(α) P_k^{(α,−1/2)}(2x²−1)|`.
pub fn check_identity_a(k: u32, alpha: f64, x: f64) -> Result<f64> {
    if x.abs() > 1.0 {
        return Err(LabError::Domain(format!("x = {x} outside [-1, 1]")));
    }
    let lhs = jacobi_eval(2 * k, alpha, alpha, x)?;
    let rhs = identity_coefficient(k, alpha) * jacobi_eval(k, alpha, -0.5, 2.0 * x * x - 1.0)?;
    Ok((lhs - rhs).abs())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Space {
    Sphere,
    Projective,
}

impl fmt::Display for Space {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Space::Sphere => "sphere",
            Space::Projective => "projective",
        })
    }
}

impl FromStr for Space {
    type Err = LabError;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "sphere" => Ok(Space::Sphere),
            "projective" => Ok(Space::Projective),
            _ => Err(LabError::Domain(format!("unknown space {s:?}"))),
        }
    }
}

/// Jacobi parameters of the zonal functions of `S^n` or `P^n(R)`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct ZonalParams {
    pub space: Space,
    pub n: usize,
    pub alpha: f64,
    pub beta: f64,
}

impl ZonalParams {
    pub fn new(space: Space, n: usize) -> Result<Self> {
        if n < 2 {
            return Err(LabError::Domain(format!("dimension n = {n} must be at least 2")));
        }
        let alpha = (n as f64 - 2.0) / 2.0;
        let beta = match space {
            Space::Sphere => alpha,
            Space::Projective => -0.5,
        };
        Ok(Self { space, n, alpha, beta })
    }
}

/// Normalized zonal function `c_j P_j^{(α,β)}(cos θ)` with `c_j = 1 / P_j^{(α,β)}(1)`.
pub fn zonal(params: &ZonalParams, j: u32, theta: f64) -> Result<f64> {
    if !(0.0..=DIAMETER).contains(&theta) {
        return Err(LabError::Domain(format!("θ = {theta} outside [0, π]")));
    }
    let at_origin = jacobi_eval(j, params.alpha, params.beta, 1.0)?;
    assert!(at_origin != 0.0, "P_j(1) vanished for α > -1");
    Ok(jacobi_eval(j, params.alpha, params.beta, (LAMBDA * theta).cos())? / at_origin)
}

/// `|φ_{2j}^{S^n}(θ) − φ_j^{P^n}(θ′)|` with `θ′` the projective distance.
pub fn check_zonal_correspondence(n: usize, j: u32, theta: f64) -> Result<f64> {
    let sphere = ZonalParams::new(Space::Sphere, n)?;
    let projective = ZonalParams::new(Space::Projective, n)?;
    let lhs = zonal(&sphere, 2 * j, theta)?;
    let rhs = zonal(&projective, j, projective_angle(theta)?)?;
    Ok((lhs - rhs).abs())
}

/// `count` Chebyshev–Lobatto points on `[0, π]` (endpoints included); a
/// single point grid is `{0}`.
pub fn chebyshev_grid(count: usize) -> Vec<f64> {
    match count {
        0 => Vec::new(),
        1 => vec![0.0],
        _ => (0..count)
            .map(|k| {
                let t = std::f64::consts::PI * k as f64 / (count - 1) as f64;
                (DIAMETER / 2.0 * (1.0 - t.cos())).clamp(0.0, DIAMETER)
            })
            .collect(),
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ZonalRow {
    pub space: Space,
    pub n: usize,
    pub j: u32,
    pub theta: f64,
    pub value: f64,
}

/// Zonal values for `j = 0..=j_max` over a θ grid, ordered by `j` then θ.
pub fn zonal_table(space: Space, n: usize, j_max: u32, thetas: &[f64]) -> Result<Vec<ZonalRow>> {
    let params = ZonalParams::new(space, n)?;
    let mut rows = Vec::with_capacity((j_max as usize + 1) * thetas.len());
    for j in 0..=j_max {
        for &theta in thetas {
            rows.push(ZonalRow { space, n, j, theta, value: zonal(&params, j, theta)? });
        }
    }
    Ok(rows)
}

pub const ZONAL_CSV_HEADER: &str = "space,n,j,theta,value";

/// Writes rows as CSV with header `space,n,j,theta,value`.
pub fn write_zonal_csv<W: Write>(rows: &[ZonalRow], mut out: W) -> std::io::Result<()> {
    writeln!(out, "{ZONAL_CSV_HEADER}")?;
    for r in rows {
        writeln!(out, "{},{},{},{:.17e},{:.17e}", r.space, r.n, r.j, r.theta, r.value)?;
    }
    Ok(())
}
