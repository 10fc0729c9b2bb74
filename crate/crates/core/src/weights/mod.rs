//! Exact bookkeeping for highest weights of SO(n)-irreps, the involution
//! induced by conjugation with `a ∈ O(n) \ SO(n)`, interlacing branching for
//! consecutive ranks, and the catalog of O(n)-types built from SO(n)-types.
//!
//! Everything here is integer arithmetic.

mod otype;

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{LabError, Result};

pub use otype::{o_types_from_so_type, ClassificationRecord, DoubledPair, OType, OTypeRecord, OTypeVariant};

/// so(2ℓ) is `Even`, so(2ℓ+1) is `Odd`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Parity {
    Even,
    Odd,
}

/// Highest weight `(m₁, …, m_ℓ)` of an irreducible representation of SO(n).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct HighestWeight {
    entries: Vec<i64>,
    parity: Parity,
}

impl HighestWeight {
    /// Unvalidated constructor; see [`validate_weight`].
    pub fn new(entries: Vec<i64>, parity: Parity) -> Self {
        Self { entries, parity }
    }

    /// Validated weight of SO(n), `n ≥ 2`; the rank must be `⌊n/2⌋`.
    pub fn for_so(n: usize, entries: Vec<i64>) -> Result<Self> {
        if n < 2 {
            return Err(LabError::Dimension(format!("SO({n}) has no weights here")));
        }
        if entries.len() != n / 2 {
            return Err(LabError::Dimension(format!(
                "SO({n}) weights have {} entries, got {}",
                n / 2,
                entries.len()
            )));
        }
        let parity = if n % 2 == 0 { Parity::Even } else { Parity::Odd };
        let w = Self { entries, parity };
        if !validate_weight(&w) {
            return Err(LabError::InvalidWeight(format!("{w} is not dominant for SO({n})")));
        }
        Ok(w)
    }

    pub fn trivial(n: usize) -> Result<Self> {
        Self::for_so(n, vec![0; n / 2])
    }

    pub fn entries(&self) -> &[i64] {
        &self.entries
    }

    pub fn parity(&self) -> Parity {
        self.parity
    }

    pub fn rank(&self) -> usize {
        self.entries.len()
    }

    /// The `n` of SO(n).
    pub fn group_n(&self) -> usize {
        match self.parity {
            Parity::Even => 2 * self.rank(),
            Parity::Odd => 2 * self.rank() + 1,
        }
    }

    pub fn last(&self) -> i64 {
        self.entries.last().copied().unwrap_or(0)
    }

    pub fn is_trivial(&self) -> bool {
        self.entries.iter().all(|m| *m == 0)
    }

    /// Largest entry in absolute value; used as the band of the irrep.
    pub fn band(&self) -> usize {
        self.entries.iter().map(|m| m.unsigned_abs() as usize).max().unwrap_or(0)
    }

    /// Weyl dimension formula.
    pub fn dimension(&self) -> u64 {
        weyl_dimension(self)
    }
}

impl fmt::Display for HighestWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.entries.iter().map(|m| m.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// Dominance: `m₁ ≥ … ≥ m_{ℓ-1} ≥ |m_ℓ|` (even) or `m₁ ≥ … ≥ m_ℓ ≥ 0` (odd).
pub fn validate_weight(w: &HighestWeight) -> bool {
    let e = &w.entries;
    if e.is_empty() {
        return false;
    }
    match w.parity {
        Parity::Even => {
            let l = e.len();
            e[..l - 1].windows(2).all(|p| p[0] >= p[1])
                && (l == 1 || e[l - 2] >= e[l - 1].abs())
        }
        Parity::Odd => e.windows(2).all(|p| p[0] >= p[1]) && e[e.len() - 1] >= 0,
    }
}

/// Highest weight of `π ∘ φ`: the last entry is negated for even n, and the
/// map is the identity for odd n.
pub fn phi_action(w: &HighestWeight) -> Result<HighestWeight> {
    if !validate_weight(w) {
        return Err(LabError::InvalidWeight(format!("{w}")));
    }
    let mut out = w.clone();
    if w.parity == Parity::Even {
        let last = out.entries.len() - 1;
        out.entries[last] = -out.entries[last];
    }
    Ok(out)
}

/// Whether `π ≃ π ∘ φ`: `m_ℓ = 0` for even n, always for odd n.
pub fn is_phi_equivalent(w: &HighestWeight) -> bool {
    match w.parity {
        Parity::Even => w.last() == 0,
        Parity::Odd => true,
    }
}

/// Whether the SO(n)-type `pi` occurs in the restriction of the SO(n+1)-type
/// `tau` (classical interlacing; multiplicity is then one).
pub fn branching_contains(tau: &HighestWeight, pi: &HighestWeight) -> Result<bool> {
    if tau.group_n() != pi.group_n() + 1 {
        return Err(LabError::Dimension(format!(
            "branching needs SO(n+1) ⊃ SO(n), got SO({}) and SO({})",
            tau.group_n(),
            pi.group_n()
        )));
    }
    if !validate_weight(tau) || !validate_weight(pi) {
        return Err(LabError::InvalidWeight(format!("{tau} / {pi}")));
    }
    let t = &tau.entries;
    let p = &pi.entries;
    Ok(match tau.parity {
        // SO(2ℓ+1) ⊃ SO(2ℓ): m₁ ≥ p₁ ≥ m₂ ≥ … ≥ m_ℓ ≥ |p_ℓ|
        Parity::Odd => {
            let l = t.len();
            (0..l).all(|i| {
                let upper_ok = t[i] >= if i + 1 == l { p[i].abs() } else { p[i] };
                let lower_ok = i + 1 == l || p[i] >= t[i + 1];
                upper_ok && lower_ok
            })
        }
        // SO(2ℓ) ⊃ SO(2ℓ-1): m₁ ≥ p₁ ≥ m₂ ≥ … ≥ p_{ℓ-1} ≥ |m_ℓ|
        Parity::Even => {
            let l = t.len();
            (0..l - 1).all(|i| {
                let next = if i + 2 == l { t[i + 1].abs() } else { t[i + 1] };
                t[i] >= p[i] && p[i] >= next
            })
        }
    })
}

/// `∏_{α>0} ⟨λ+ρ, α⟩ / ⟨ρ, α⟩`, computed in doubled integer coordinates.
fn weyl_dimension(w: &HighestWeight) -> u64 {
    let l = w.rank();
    let (lam, rho): (Vec<i128>, Vec<i128>) = match w.parity {
        Parity::Even => (0..l)
            .map(|i| {
                let r = 2 * (l - 1 - i) as i128;
                (2 * w.entries[i] as i128 + r, r)
            })
            .unzip(),
        Parity::Odd => (0..l)
            .map(|i| {
                let r = 2 * (l - i) as i128 - 1;
                (2 * w.entries[i] as i128 + r, r)
            })
            .unzip(),
    };
    let mut num: i128 = 1;
    let mut den: i128 = 1;
    for i in 0..l {
        for j in i + 1..l {
            num *= (lam[i] - lam[j]) * (lam[i] + lam[j]);
            den *= (rho[i] - rho[j]) * (rho[i] + rho[j]);
        }
        if w.parity == Parity::Odd {
            num *= lam[i];
            den *= rho[i];
        }
    }
    (num / den).unsigned_abs() as u64
}
