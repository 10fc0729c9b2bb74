use std::fmt;
use std::ops::Mul;

use crate::config::orthogonality_tolerance;
use crate::error::{LabError, Result};
use crate::linalg::{orthogonality_defect, RMat};

/// An element of O(n), stored as its real orthogonal matrix.
#[derive(Clone, PartialEq)]
pub struct GroupElement {
    matrix: RMat,
    det_sign: i8,
}

impl GroupElement {
    /// Validates orthogonality (against the global tolerance) and caches the
    /// determinant sign.
    pub fn new(matrix: RMat) -> Result<Self> {
        if !matrix.is_square() || matrix.nrows() == 0 {
            return Err(LabError::Dimension(format!(
                "group element must be a non-empty square matrix, got {}x{}",
                matrix.nrows(),
                matrix.ncols()
            )));
        }
        let defect = orthogonality_defect(&matrix);
        if !(defect < orthogonality_tolerance()) {
            return Err(LabError::ContractViolation(format!(
                "matrix is not orthogonal: max|gᵀg - I| = {defect:e}"
            )));
        }
        let det = matrix.determinant();
        let det_sign = if (det - 1.0).abs() < 1e-10 {
            1
        } else if (det + 1.0).abs() < 1e-10 {
            -1
        } else {
            return Err(LabError::ContractViolation(format!(
                "determinant {det} is not ±1"
            )));
        };
        Ok(Self { matrix, det_sign })
    }

    /// Products and other closed-form constructions skip re-validation.
    pub(crate) fn from_parts(matrix: RMat, det_sign: i8) -> Self {
        Self { matrix, det_sign }
    }

    pub fn identity(n: usize) -> Self {
        Self::from_parts(RMat::identity(n, n), 1)
    }

    pub fn diagonal(entries: &[f64]) -> Result<Self> {
        let n = entries.len();
        Self::new(RMat::from_fn(n, n, |i, j| if i == j { entries[i] } else { 0.0 }))
    }

    pub fn dim(&self) -> usize {
        self.matrix.nrows()
    }

    pub fn matrix(&self) -> &RMat {
        &self.matrix
    }

    pub fn det_sign(&self) -> i8 {
        self.det_sign
    }

    pub fn is_special(&self) -> bool {
        self.det_sign == 1
    }

    pub fn inverse(&self) -> Self {
        Self::from_parts(self.matrix.transpose(), self.det_sign)
    }

    /// `self · other`; both factors must have the same size.
    pub fn compose(&self, other: &GroupElement) -> Self {
        assert_eq!(self.dim(), other.dim(), "composing elements of different groups");
        Self::from_parts(&self.matrix * &other.matrix, self.det_sign * other.det_sign)
    }

    pub fn entry(&self, i: usize, j: usize) -> f64 {
        self.matrix[(i, j)]
    }
}

impl Mul for &GroupElement {
    type Output = GroupElement;

    fn mul(self, rhs: &GroupElement) -> GroupElement {
        self.compose(rhs)
    }
}

impl fmt::Debug for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GroupElement(det={:+}, {:?})", self.det_sign, self.matrix.as_slice())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_non_orthogonal_and_non_square() {
        GroupElement::new(RMat::from_row_slice(2, 2, &[1.0, 0.1, 0.0, 1.0])).unwrap_err();
        GroupElement::new(RMat::zeros(2, 3)).unwrap_err();
    }

    #[test]
    fn determinant_sign_cached() {
        let a = GroupElement::diagonal(&[1.0, -1.0]).unwrap();
        assert_eq!(a.det_sign(), -1);
        assert!(!a.is_special());
        let aa = &a * &a;
        assert_eq!(aa.det_sign(), 1);
        assert_eq!(aa, GroupElement::identity(2));
    }
}
