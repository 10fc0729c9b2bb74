use crate::error::Result;
use crate::group::{EulerAngles, GroupElement};
use crate::linalg::{hermitian_eigen, CMat, C64};

/// Cached factorization for the spin-ℓ representation of SO(3) in the weight
/// basis `m = ℓ, ℓ-1, …, -ℓ`.
///
/// `ρ(Z(α) Y(β) Z(γ)) = e^{-iα J_z} e^{-iβ J_y} e^{-iγ J_z}` where `J_y` is
/// diagonalized once at construction.
#[derive(Clone, Debug)]
pub(crate) struct So3Factors {
    l: i64,
    jy_values: Vec<f64>,
    jy_vectors: CMat,
}

impl So3Factors {
    pub(crate) fn new(l: u32) -> Self {
        let l = l as i64;
        let d = (2 * l + 1) as usize;
        let m_of = |idx: usize| l - idx as i64;
        // J_+ |m> = √(ℓ(ℓ+1) - m(m+1)) |m+1>; row index of m+1 is idx-1.
        let mut jy = CMat::zeros(d, d);
        for idx in 1..d {
            let m = m_of(idx) as f64;
            let lf = l as f64;
            let c = (lf * (lf + 1.0) - m * (m + 1.0)).sqrt();
            // J_y = (J_+ - J_-) / 2i
            jy[(idx - 1, idx)] = C64::new(0.0, -c / 2.0);
            jy[(idx, idx - 1)] = C64::new(0.0, c / 2.0);
        }
        let (values, vectors) = hermitian_eigen(&jy);
        // The spectrum of J_y is exactly {-ℓ, …, ℓ}.
        let jy_values = values.iter().map(|v| v.round()).collect();
        Self { l, jy_values, jy_vectors: vectors }
    }

    pub(crate) fn dim(&self) -> usize {
        (2 * self.l + 1) as usize
    }

    fn z_factor(&self, t: f64) -> Vec<C64> {
        (0..self.dim())
            .map(|idx| {
                let m = (self.l - idx as i64) as f64;
                C64::from_polar(1.0, -m * t)
            })
            .collect()
    }

    fn y_factor(&self, t: f64) -> CMat {
        let v = &self.jy_vectors;
        let mut scaled = v.clone();
        for (c, lam) in self.jy_values.iter().enumerate() {
            let phase = C64::from_polar(1.0, -lam * t);
            for r in 0..scaled.nrows() {
                scaled[(r, c)] *= phase;
            }
        }
        scaled * v.adjoint()
    }

    pub(crate) fn eval(&self, g: &GroupElement) -> Result<CMat> {
        let e = EulerAngles::from_element(g)?;
        let left = self.z_factor(e.alpha);
        let right = self.z_factor(e.gamma);
        let mut m = self.y_factor(e.beta);
        for r in 0..m.nrows() {
            for c in 0..m.ncols() {
                m[(r, c)] *= left[r] * right[c];
            }
        }
        Ok(m)
    }
}
