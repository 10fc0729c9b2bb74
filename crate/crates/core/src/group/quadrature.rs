use std::f64::consts::PI;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{LabError, Result};
use crate::group::euler::EulerAngles;
use crate::group::{coset_representative, GroupElement};
use crate::linalg::RMat;

/// Compact subgroups K for which Haar quadrature is available.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum CompactGroup {
    #[serde(rename = "SO(2)")]
    SO2,
    #[serde(rename = "SO(3)")]
    SO3,
    #[serde(rename = "O(2)")]
    O2,
    #[serde(rename = "O(3)")]
    O3,
}

impl CompactGroup {
    pub fn special(n: usize) -> Result<Self> {
        match n {
            2 => Ok(Self::SO2),
            3 => Ok(Self::SO3),
            _ => Err(LabError::UnsupportedGroup(format!("SO({n})"))),
        }
    }

    pub fn orthogonal(n: usize) -> Result<Self> {
        match n {
            2 => Ok(Self::O2),
            3 => Ok(Self::O3),
            _ => Err(LabError::UnsupportedGroup(format!("O({n})"))),
        }
    }

    /// Matrix size `n`.
    pub fn n(self) -> usize {
        match self {
            Self::SO2 | Self::O2 => 2,
            Self::SO3 | Self::O3 => 3,
        }
    }

    pub fn is_orthogonal(self) -> bool {
        matches!(self, Self::O2 | Self::O3)
    }

    /// The identity component.
    pub fn identity_component(self) -> Self {
        match self {
            Self::SO2 | Self::O2 => Self::SO2,
            Self::SO3 | Self::O3 => Self::SO3,
        }
    }
}

impl fmt::Display for CompactGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Self::SO2 => "SO(2)",
            Self::SO3 => "SO(3)",
            Self::O2 => "O(2)",
            Self::O3 => "O(3)",
        };
        f.write_str(s)
    }
}

impl FromStr for CompactGroup {
    type Err = LabError;

    fn from_str(s: &str) -> Result<Self> {
        let key: String = s.chars().filter(|c| !c.is_whitespace()).collect::<String>().to_uppercase();
        match key.as_str() {
            "SO(2)" | "SO2" => Ok(Self::SO2),
            "SO(3)" | "SO3" => Ok(Self::SO3),
            "O(2)" | "O2" => Ok(Self::O2),
            "O(3)" | "O3" => Ok(Self::O3),
            _ => Err(LabError::UnsupportedGroup(s.to_string())),
        }
    }
}

/// Node/weight set for the normalized Haar measure on a compact group.
#[derive(Clone, Debug)]
pub struct QuadratureRule {
    group: CompactGroup,
    nodes: Vec<GroupElement>,
    weights: Vec<f64>,
    band_limit: usize,
}

impl QuadratureRule {
    pub fn group(&self) -> CompactGroup {
        self.group
    }

    pub fn nodes(&self) -> &[GroupElement] {
        &self.nodes
    }

    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    pub fn band_limit(&self) -> usize {
        self.band_limit
    }

    pub fn node_count(&self) -> usize {
        self.nodes.len()
    }

    pub fn weight_sum(&self) -> f64 {
        self.weights.iter().sum()
    }

    /// For an O(n) rule: the nodes of the identity coset with weights
    /// renormalized to a probability measure on SO(n).
    pub fn identity_coset(&self) -> QuadratureRule {
        let (nodes, weights): (Vec<_>, Vec<_>) = self
            .nodes
            .iter()
            .zip(&self.weights)
            .filter(|(g, _)| g.is_special())
            .map(|(g, w)| (g.clone(), *w))
            .unzip();
        let total: f64 = weights.iter().sum();
        QuadratureRule {
            group: self.group.identity_component(),
            nodes,
            weights: weights.into_iter().map(|w| w / total).collect(),
            band_limit: self.band_limit,
        }
    }
}

/// Gauss–Legendre nodes and weights on `[-1, 1]` (ascending nodes).
pub fn gauss_legendre(n: usize) -> (Vec<f64>, Vec<f64>) {
    let mut x = vec![0.0; n];
    let mut w = vec![0.0; n];
    for i in 0..n.div_ceil(2) {
        let mut z = (PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
        for _ in 0..100 {
            let (p, d) = legendre_with_derivative(n, z);
            let dz = p / d;
            z -= dz;
            if dz.abs() < 1e-16 {
                break;
            }
        }
        let (_, dp) = legendre_with_derivative(n, z);
        let weight = 2.0 / ((1.0 - z * z) * dp * dp);
        x[i] = -z;
        x[n - 1 - i] = z;
        w[i] = weight;
        w[n - 1 - i] = weight;
    }
    if n % 2 == 1 {
        x[n / 2] = 0.0;
    }
    (x, w)
}

fn legendre_with_derivative(n: usize, z: f64) -> (f64, f64) {
    let mut p0 = 1.0;
    let mut p1 = z;
    if n == 0 {
        return (1.0, 0.0);
    }
    for k in 2..=n {
        let p2 = ((2 * k - 1) as f64 * z * p1 - (k - 1) as f64 * p0) / k as f64;
        p0 = p1;
        p1 = p2;
    }
    let d = n as f64 * (z * p1 - p0) / (z * z - 1.0);
    (p1, d)
}

fn so2_element(t: f64) -> GroupElement {
    let (s, c) = t.sin_cos();
    GroupElement::from_parts(RMat::from_row_slice(2, 2, &[c, s, -s, c]), 1)
}

fn so2_rule(band_limit: usize) -> (Vec<GroupElement>, Vec<f64>) {
    let count = 2 * band_limit + 1;
    let nodes = (0..count)
        .map(|i| so2_element(2.0 * PI * i as f64 / count as f64))
        .collect();
    (nodes, vec![1.0 / count as f64; count])
}

fn so3_rule(band_limit: usize) -> (Vec<GroupElement>, Vec<f64>) {
    let n_az = 2 * band_limit + 1;
    let (cos_beta, gl_weights) = gauss_legendre(band_limit + 1);
    let mut nodes = Vec::with_capacity(n_az * n_az * cos_beta.len());
    let mut weights = Vec::with_capacity(nodes.capacity());
    for ia in 0..n_az {
        let alpha = 2.0 * PI * ia as f64 / n_az as f64;
        for (x, wb) in cos_beta.iter().zip(&gl_weights) {
            let beta = x.acos();
            for ig in 0..n_az {
                let gamma = 2.0 * PI * ig as f64 / n_az as f64;
                nodes.push(EulerAngles::new(alpha, beta, gamma).to_element());
                weights.push(wb / 2.0 / (n_az * n_az) as f64);
            }
        }
    }
    (nodes, weights)
}

/// Haar quadrature rule exact for matrix coefficients of products of two
/// irreps with labels up to `band_limit`.
///
/// SO(2) uses `2B+1` equally spaced angles; SO(3) a trapezoid rule in the
/// Euler angles α, γ times Gauss–Legendre in `cos β`. An O(n) rule is the
/// equal-weight union of the SO(n) rule and its translate by the coset
/// representative `a`; the identity-coset nodes come first.
pub fn haar_rule(group: CompactGroup, band_limit: usize) -> QuadratureRule {
    let (nodes, weights) = match group.identity_component() {
        CompactGroup::SO2 => so2_rule(band_limit),
        _ => so3_rule(band_limit),
    };
    let (nodes, weights) = if group.is_orthogonal() {
        let a = coset_representative(group.n());
        let translated: Vec<_> = nodes.iter().map(|k| k.compose(&a)).collect();
        let half: Vec<f64> = weights.iter().map(|w| w / 2.0).collect();
        (
            nodes.into_iter().chain(translated).collect(),
            half.iter().chain(half.iter()).copied().collect(),
        )
    } else {
        (nodes, weights)
    };
    QuadratureRule { group, nodes, weights, band_limit }
}
