use crate::config::orthogonality_tolerance;
use crate::error::{LabError, Result};
use crate::group::GroupElement;
use crate::linalg::{max_abs_real, CMat, RMat, C64};

/// Basis element `I_{ki}` (1-based, `i < k`) of so(n): `-1` at `(k, i)`,
/// `+1` at `(i, k)`, zero elsewhere.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct LieBasisElement {
    pub k: usize,
    pub i: usize,
    pub n: usize,
}

impl LieBasisElement {
    pub fn new(k: usize, i: usize, n: usize) -> Result<Self> {
        if !(1 <= i && i < k && k <= n) {
            return Err(LabError::Domain(format!(
                "I_{{{k},{i}}} requires 1 <= i < k <= n (n = {n})"
            )));
        }
        Ok(Self { k, i, n })
    }

    pub fn matrix(&self) -> RMat {
        let mut m = RMat::zeros(self.n, self.n);
        m[(self.k - 1, self.i - 1)] = -1.0;
        m[(self.i - 1, self.k - 1)] = 1.0;
        m
    }

    /// All `I_{ki}` of so(n) ordered by `(k, i)`.
    pub fn basis(n: usize) -> Vec<Self> {
        let mut out = Vec::with_capacity(n * n.saturating_sub(1) / 2);
        for k in 2..=n {
            for i in 1..k {
                out.push(Self { k, i, n });
            }
        }
        out
    }
}

fn basis_matrix(k: usize, i: usize, n: usize) -> RMat {
    LieBasisElement { k, i, n }.matrix()
}

/// Which of the four roots `±ε_j ± ε_k` a root vector belongs to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum RootSign {
    /// `ε_j + ε_k`
    PlusPlus,
    /// `-ε_j - ε_k`
    MinusMinus,
    /// `ε_j - ε_k`
    PlusMinus,
    /// `-ε_j + ε_k`
    MinusPlus,
}

impl RootSign {
    /// Coefficients of `(ε_j, ε_k)`.
    pub fn coefficients(self) -> (i64, i64) {
        match self {
            RootSign::PlusPlus => (1, 1),
            RootSign::MinusMinus => (-1, -1),
            RootSign::PlusMinus => (1, -1),
            RootSign::MinusPlus => (-1, 1),
        }
    }
}

/// Root vector `X_{±ε_j±ε_k}` of so(2ℓ, C) relative to the Cartan subalgebra
/// spanned by `I_{21}, I_{43}, …, I_{2ℓ,2ℓ-1}` (1-based `j < k ≤ ℓ`).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct RootVector {
    pub j: usize,
    pub k: usize,
    pub sign: RootSign,
    pub rank: usize,
}

impl RootVector {
    pub fn new(j: usize, k: usize, sign: RootSign, rank: usize) -> Result<Self> {
        if !(1 <= j && j < k && k <= rank) {
            return Err(LabError::Domain(format!(
                "root vector needs 1 <= j < k <= rank, got j={j}, k={k}, rank={rank}"
            )));
        }
        Ok(Self { j, k, sign, rank })
    }

    /// Complex `2ℓ × 2ℓ` matrix of the root vector.
    pub fn matrix(&self) -> CMat {
        let n = 2 * self.rank;
        let (j, k) = (self.j, self.k);
        let a = basis_matrix(2 * k - 1, 2 * j - 1, n);
        let b = basis_matrix(2 * k, 2 * j, n);
        let c = basis_matrix(2 * k - 1, 2 * j, n);
        let d = basis_matrix(2 * k, 2 * j - 1, n);
        let (re, im) = match self.sign {
            RootSign::PlusPlus => (&a - &b, -(&c + &d)),
            RootSign::MinusMinus => (&a - &b, &c + &d),
            RootSign::PlusMinus => (&a + &b, -(&c - &d)),
            RootSign::MinusPlus => (&a + &b, &c - &d),
        };
        CMat::from_fn(n, n, |r, s| C64::new(re[(r, s)], im[(r, s)]))
    }

    /// Weight vector of the root in the `ε` basis.
    pub fn root(&self) -> Vec<i64> {
        let mut v = vec![0; self.rank];
        let (cj, ck) = self.sign.coefficients();
        v[self.j - 1] = cj;
        v[self.k - 1] = ck;
        v
    }
}

/// Positive system `{ε_j + ε_k, ε_j - ε_k : j < k}` of so(2ℓ).
pub fn positive_roots(rank: usize) -> Vec<RootVector> {
    let mut out = Vec::new();
    for j in 1..=rank {
        for k in j + 1..=rank {
            for sign in [RootSign::PlusPlus, RootSign::PlusMinus] {
                out.push(RootVector { j, k, sign, rank });
            }
        }
    }
    out
}

const TAYLOR_TOL: f64 = 1e-14;

/// Matrix exponential of a real antisymmetric matrix.
///
/// Closed forms are used for sizes 2 and 3 (rotation / Rodrigues); larger
/// sizes use scaling and squaring with a Taylor kernel.
pub fn exp_so(x: &RMat) -> Result<GroupElement> {
    if !x.is_square() {
        return Err(LabError::ContractViolation(format!(
            "exp_so needs a square matrix, got {}x{}",
            x.nrows(),
            x.ncols()
        )));
    }
    let asym = max_abs_real(&(x + x.transpose()));
    if !(asym <= orthogonality_tolerance()) {
        return Err(LabError::ContractViolation(format!(
            "exp_so input is not antisymmetric: max|X + Xᵀ| = {asym:e}"
        )));
    }
    let n = x.nrows();
    let m = match n {
        0 => {
            return Err(LabError::Dimension("exp_so of an empty matrix".into()));
        }
        1 => RMat::identity(1, 1),
        2 => {
            let t = x[(0, 1)];
            let (s, c) = t.sin_cos();
            RMat::from_row_slice(2, 2, &[c, s, -s, c])
        }
        3 => rodrigues(x),
        _ => taylor_scaling_squaring(x),
    };
    Ok(GroupElement::from_parts(m, 1))
}

fn rodrigues(x: &RMat) -> RMat {
    let w = [x[(2, 1)], x[(0, 2)], x[(1, 0)]];
    let theta2 = w[0] * w[0] + w[1] * w[1] + w[2] * w[2];
    let theta = theta2.sqrt();
    let (a, b) = if theta < 1e-4 {
        (
            1.0 - theta2 / 6.0 + theta2 * theta2 / 120.0,
            0.5 - theta2 / 24.0 + theta2 * theta2 / 720.0,
        )
    } else {
        (theta.sin() / theta, (1.0 - theta.cos()) / theta2)
    };
    RMat::identity(3, 3) + x * a + (x * x) * b
}

fn taylor_scaling_squaring(x: &RMat) -> RMat {
    let n = x.nrows();
    let norm1 = (0..n)
        .map(|j| x.column(j).iter().map(|v| v.abs()).sum::<f64>())
        .fold(0.0, f64::max);
    let squarings = if norm1 > 0.5 {
        (norm1 / 0.5).log2().ceil() as i32
    } else {
        0
    };
    let scaled = x / 2f64.powi(squarings);
    let mut result = RMat::identity(n, n);
    let mut term = RMat::identity(n, n);
    for k in 1..=40 {
        term = &term * &scaled / k as f64;
        result += &term;
        if max_abs_real(&term) < TAYLOR_TOL * 1e-3 {
            break;
        }
    }
    for _ in 0..squarings {
        result = &result * &result;
    }
    result
}
