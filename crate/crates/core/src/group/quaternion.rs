//! Unit quaternions and the double cover `S³ × S³ → SO(4)`.
//!
//! `R⁴` is identified with the quaternions by `e₁, e₂, e₃ ↦ i, j, k` and
//! `e₄ ↦ 1`, so the sphere origin `e₄` is the unit quaternion and the
//! stabilizer SO(3) is the diagonal `{(q, q)}`. A pair `(q_L, q_R)` acts by
//! `x ↦ q_L x q̄_R`.

use std::ops::Mul;

use crate::error::{LabError, Result};
use crate::group::GroupElement;
use crate::linalg::{max_abs_real, CMat, RMat, C64};

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Quaternion {
    pub w: f64,
    pub x: f64,
    pub y: f64,
    pub z: f64,
}

impl Quaternion {
    pub const ONE: Quaternion = Quaternion { w: 1.0, x: 0.0, y: 0.0, z: 0.0 };

    pub fn new(w: f64, x: f64, y: f64, z: f64) -> Self {
        Self { w, x, y, z }
    }

    pub fn conj(self) -> Self {
        Self::new(self.w, -self.x, -self.y, -self.z)
    }

    pub fn norm(self) -> f64 {
        (self.w * self.w + self.x * self.x + self.y * self.y + self.z * self.z).sqrt()
    }

    pub fn normalize(self) -> Self {
        let n = self.norm();
        Self::new(self.w / n, self.x / n, self.y / n, self.z / n)
    }

    pub fn neg(self) -> Self {
        Self::new(-self.w, -self.x, -self.y, -self.z)
    }

    /// Coordinates in the `R⁴` ordering `(x, y, z, w)`.
    pub fn to_r4(self) -> [f64; 4] {
        [self.x, self.y, self.z, self.w]
    }

    pub fn from_r4(v: [f64; 4]) -> Self {
        Self::new(v[3], v[0], v[1], v[2])
    }

    /// Image in SU(2): `i ↦ diag(i, -i)`, `j ↦ [[0, 1], [-1, 0]]`,
    /// `k ↦ [[0, i], [i, 0]]`.
    pub fn to_su2(self) -> CMat {
        CMat::from_row_slice(
            2,
            2,
            &[
                C64::new(self.w, self.x),
                C64::new(self.y, self.z),
                C64::new(-self.y, self.z),
                C64::new(self.w, -self.x),
            ],
        )
    }

    /// Matrix of `v ↦ q v q̄` on the imaginary quaternions.
    pub fn rotation3(self) -> RMat {
        let Quaternion { w, x, y, z } = self;
        RMat::from_row_slice(
            3,
            3,
            &[
                1.0 - 2.0 * (y * y + z * z),
                2.0 * (x * y - w * z),
                2.0 * (x * z + w * y),
                2.0 * (x * y + w * z),
                1.0 - 2.0 * (x * x + z * z),
                2.0 * (y * z - w * x),
                2.0 * (x * z - w * y),
                2.0 * (y * z + w * x),
                1.0 - 2.0 * (x * x + y * y),
            ],
        )
    }

    /// Unit quaternion `q` with `rotation3(q) = r` (Shepperd's method); the
    /// sign is arbitrary.
    pub fn from_rotation3(r: &RMat) -> Self {
        let tr = r[(0, 0)] + r[(1, 1)] + r[(2, 2)];
        let q = if tr >= r[(0, 0)].max(r[(1, 1)]).max(r[(2, 2)]) {
            let s = (1.0 + tr).sqrt() * 2.0;
            Self::new(
                0.25 * s,
                (r[(2, 1)] - r[(1, 2)]) / s,
                (r[(0, 2)] - r[(2, 0)]) / s,
                (r[(1, 0)] - r[(0, 1)]) / s,
            )
        } else if r[(0, 0)] >= r[(1, 1)] && r[(0, 0)] >= r[(2, 2)] {
            let s = (1.0 + r[(0, 0)] - r[(1, 1)] - r[(2, 2)]).sqrt() * 2.0;
            Self::new(
                (r[(2, 1)] - r[(1, 2)]) / s,
                0.25 * s,
                (r[(0, 1)] + r[(1, 0)]) / s,
                (r[(0, 2)] + r[(2, 0)]) / s,
            )
        } else if r[(1, 1)] >= r[(2, 2)] {
            let s = (1.0 + r[(1, 1)] - r[(0, 0)] - r[(2, 2)]).sqrt() * 2.0;
            Self::new(
                (r[(0, 2)] - r[(2, 0)]) / s,
                (r[(0, 1)] + r[(1, 0)]) / s,
                0.25 * s,
                (r[(1, 2)] + r[(2, 1)]) / s,
            )
        } else {
            let s = (1.0 + r[(2, 2)] - r[(0, 0)] - r[(1, 1)]).sqrt() * 2.0;
            Self::new(
                (r[(1, 0)] - r[(0, 1)]) / s,
                (r[(0, 2)] + r[(2, 0)]) / s,
                (r[(1, 2)] + r[(2, 1)]) / s,
                0.25 * s,
            )
        };
        q.normalize()
    }
}

impl Mul for Quaternion {
    type Output = Quaternion;

    fn mul(self, o: Quaternion) -> Quaternion {
        Quaternion::new(
            self.w * o.w - self.x * o.x - self.y * o.y - self.z * o.z,
            self.w * o.x + self.x * o.w + self.y * o.z - self.z * o.y,
            self.w * o.y - self.x * o.z + self.y * o.w + self.z * o.x,
            self.w * o.z + self.x * o.y - self.y * o.x + self.z * o.w,
        )
    }
}

fn basis_quaternion(c: usize) -> Quaternion {
    let mut v = [0.0; 4];
    v[c] = 1.0;
    Quaternion::from_r4(v)
}

/// The SO(4) element `x ↦ q_L x q̄_R`.
pub fn so4_from_quaternions(ql: Quaternion, qr: Quaternion) -> GroupElement {
    let (ql, qr) = (ql.normalize(), qr.normalize());
    let mut m = RMat::zeros(4, 4);
    for c in 0..4 {
        let image = (ql * basis_quaternion(c) * qr.conj()).to_r4();
        for (r, v) in image.iter().enumerate() {
            m[(r, c)] = *v;
        }
    }
    GroupElement::from_parts(m, 1)
}

const SIGN_EPS: f64 = 1e-9;

/// Lifts `g ∈ SO(4)` to `(q_L, q_R)` with `g x = q_L x q̄_R`.
///
/// The overall sign is fixed so that the first coordinate of `q_L` (in
/// `(w, x, y, z)` order) with magnitude above `1e-9` is positive.
pub fn lift_so4(g: &GroupElement) -> Result<(Quaternion, Quaternion)> {
    if g.dim() != 4 || !g.is_special() {
        return Err(LabError::WrongGroup(format!(
            "quaternion lift needs an element of SO(4), got dim {} det {:+}",
            g.dim(),
            g.det_sign()
        )));
    }
    let m = g.matrix();
    let col = |c: usize| Quaternion::from_r4([m[(0, c)], m[(1, c)], m[(2, c)], m[(3, c)]]);
    // g(1) = q_L q̄_R, and x ↦ g(x)·conj(g(1)) is conjugation by q_L.
    let image_of_one = col(3);
    let mut rot = RMat::zeros(3, 3);
    for c in 0..3 {
        let v = (col(c) * image_of_one.conj()).to_r4();
        for r in 0..3 {
            rot[(r, c)] = v[r];
        }
    }
    let mut ql = Quaternion::from_rotation3(&rot);
    let first = [ql.w, ql.x, ql.y, ql.z].into_iter().find(|v| v.abs() > SIGN_EPS);
    if first.is_some_and(|v| v < 0.0) {
        ql = ql.neg();
    }
    let qr = (image_of_one.conj() * ql).normalize();
    let rebuilt = so4_from_quaternions(ql, qr);
    let err = max_abs_real(&(rebuilt.matrix() - m));
    if err > 1e-8 {
        return Err(LabError::WrongGroup(format!(
            "quaternion lift failed to reproduce the element (error {err:e})"
        )));
    }
    Ok((ql, qr))
}
