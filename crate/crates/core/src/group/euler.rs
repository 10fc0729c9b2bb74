use crate::error::{LabError, Result};
use crate::group::GroupElement;
use crate::linalg::RMat;

/// Below this value of `sin β` the decomposition is treated as degenerate and
/// the whole planar rotation is assigned to `α`.
const GIMBAL_EPS: f64 = 1e-12;

/// ZYZ Euler angles: `g = Z(α) Y(β) Z(γ)`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct EulerAngles {
    pub alpha: f64,
    pub beta: f64,
    pub gamma: f64,
}

/// Rotation about the third axis, `[[c, -s, 0], [s, c, 0], [0, 0, 1]]`.
pub fn rot_z(t: f64) -> RMat {
    let (s, c) = t.sin_cos();
    RMat::from_row_slice(3, 3, &[c, -s, 0.0, s, c, 0.0, 0.0, 0.0, 1.0])
}

/// Rotation about the second axis, `[[c, 0, s], [0, 1, 0], [-s, 0, c]]`.
pub fn rot_y(t: f64) -> RMat {
    let (s, c) = t.sin_cos();
    RMat::from_row_slice(3, 3, &[c, 0.0, s, 0.0, 1.0, 0.0, -s, 0.0, c])
}

impl EulerAngles {
    pub fn new(alpha: f64, beta: f64, gamma: f64) -> Self {
        Self { alpha, beta, gamma }
    }

    pub fn to_element(&self) -> GroupElement {
        let m = rot_z(self.alpha) * rot_y(self.beta) * rot_z(self.gamma);
        GroupElement::from_parts(m, 1)
    }

    /// Decomposes an element of SO(3). `β ∈ [0, π]`; `α, γ ∈ (-π, π]`.
    pub fn from_element(g: &GroupElement) -> Result<Self> {
        if g.dim() != 3 || !g.is_special() {
            return Err(LabError::WrongGroup(format!(
                "Euler decomposition needs an element of SO(3), got dim {} det {:+}",
                g.dim(),
                g.det_sign()
            )));
        }
        let m = g.matrix();
        let sb = m[(0, 2)].hypot(m[(1, 2)]);
        let beta = sb.atan2(m[(2, 2)]);
        if sb > GIMBAL_EPS {
            let alpha = m[(1, 2)].atan2(m[(0, 2)]);
            let gamma = m[(2, 1)].atan2(-m[(2, 0)]);
            Ok(Self { alpha, beta, gamma })
        } else if m[(2, 2)] > 0.0 {
            // g = Z(α + γ)
            Ok(Self { alpha: m[(1, 0)].atan2(m[(0, 0)]), beta: 0.0, gamma: 0.0 })
        } else {
            // g = Z(α) Y(π); first column of g·Y(π) is (cos α, sin α, 0).
            Ok(Self {
                alpha: (-m[(1, 0)]).atan2(-m[(0, 0)]),
                beta: std::f64::consts::PI,
                gamma: 0.0,
            })
        }
    }
}
