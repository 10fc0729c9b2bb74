use crate::error::{LabError, Result};
use crate::group::exp_so;
use crate::linalg::{CMat, RMat, C64, I};
use crate::reps::UnitaryRep;

/// Base step of the central difference.
pub const FD_STEP: f64 = 1e-3;

/// `X ↦ dρ(X)` on the complexified Lie algebra of the group of `ρ`.
#[derive(Clone, Debug)]
pub struct DifferentiatedRep {
    rep: UnitaryRep,
    step: f64,
}

pub fn differentiate(rep: &UnitaryRep) -> DifferentiatedRep {
    DifferentiatedRep { rep: rep.clone(), step: FD_STEP }
}

impl DifferentiatedRep {
    pub fn rep(&self) -> &UnitaryRep {
        &self.rep
    }

    fn central(&self, x: &RMat, h: f64) -> Result<CMat> {
        let plus = self.rep.eval(&exp_so(&(x * h))?)?;
        let minus = self.rep.eval(&exp_so(&(x * -h))?)?;
        Ok((plus - minus) / C64::new(2.0 * h, 0.0))
    }

    /// `dρ(X)` for real antisymmetric `X`, one Richardson level over `h, h/2`.
    pub fn eval_real(&self, x: &RMat) -> Result<CMat> {
        let n = self.rep.group().n();
        if x.nrows() != n || x.ncols() != n {
            return Err(LabError::Dimension(format!(
                "algebra element is {}x{}, group is {}",
                x.nrows(),
                x.ncols(),
                self.rep.group()
            )));
        }
        let coarse = self.central(x, self.step)?;
        let fine = self.central(x, self.step / 2.0)?;
        Ok((fine * C64::new(4.0, 0.0) - coarse) / C64::new(3.0, 0.0))
    }

    /// `dρ(X + iY) = dρ(X) + i·dρ(Y)`.
    pub fn eval(&self, z: &CMat) -> Result<CMat> {
        let re = z.map(|c| c.re);
        let im = z.map(|c| c.im);
        let mut out = self.eval_real(&re)?;
        if im.iter().any(|v| *v != 0.0) {
            out += self.eval_real(&im)? * I;
        }
        Ok(out)
    }
}
