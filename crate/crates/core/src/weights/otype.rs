use serde::{Deserialize, Serialize};

use crate::error::{LabError, Result};
use crate::weights::{is_phi_equivalent, phi_action, validate_weight, HighestWeight, Parity};

/// Unordered pair `{π, π_φ}` of non-self-conjugate SO(n)-weights. The
/// lexicographically larger entry vector is kept as the canonical member.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct DoubledPair {
    canonical: HighestWeight,
    partner: HighestWeight,
}

impl DoubledPair {
    pub fn new(a: HighestWeight, b: HighestWeight) -> Self {
        if a.entries() >= b.entries() {
            Self { canonical: a, partner: b }
        } else {
            Self { canonical: b, partner: a }
        }
    }

    pub fn canonical(&self) -> &HighestWeight {
        &self.canonical
    }

    pub fn partner(&self) -> &HighestWeight {
        &self.partner
    }

    pub fn contains(&self, w: &HighestWeight) -> bool {
        &self.canonical == w || &self.partner == w
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum OTypeVariant {
    /// `π ⊗ 1` on `O(n) = SO(n) × {1, a}`, n odd.
    OddTensorTrivial(HighestWeight),
    /// `π ⊗ ε` with `ε(a) = -1`, n odd.
    OddTensorEpsilon(HighestWeight),
    /// `π · ε_A` for `π ≃ π_φ`, n even. The sign distinguishes the classes
    /// `[π·ε_A]` and `[π·ε_{-A}]`; it is bound to a concrete `A` only when a
    /// realization is built.
    EvenSelfConjugate { pi: HighestWeight, sign: i8 },
    /// The doubled type on `V_π × V_π` for `π ≄ π_φ`, n even.
    EvenDoubled(DoubledPair),
}

/// Label of an irreducible O(n)-representation built from SO(n) data.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct OType {
    pub variant: OTypeVariant,
    pub dimension: u64,
}

impl OType {
    pub fn odd_tensor(pi: HighestWeight, epsilon: bool) -> Result<Self> {
        if pi.parity() != Parity::Odd || !validate_weight(&pi) {
            return Err(LabError::InvalidWeight(format!("{pi} is not an odd-n weight")));
        }
        let dimension = pi.dimension();
        let variant = if epsilon {
            OTypeVariant::OddTensorEpsilon(pi)
        } else {
            OTypeVariant::OddTensorTrivial(pi)
        };
        Ok(Self { variant, dimension })
    }

    pub fn self_conjugate(pi: HighestWeight, sign: i8) -> Result<Self> {
        if pi.parity() != Parity::Even || !validate_weight(&pi) || pi.last() != 0 {
            return Err(LabError::InvalidWeight(format!(
                "{pi} is not a self-conjugate even-n weight"
            )));
        }
        if sign != 1 && sign != -1 {
            return Err(LabError::Domain(format!("sign must be ±1, got {sign}")));
        }
        let dimension = pi.dimension();
        Ok(Self { variant: OTypeVariant::EvenSelfConjugate { pi, sign }, dimension })
    }

    pub fn doubled(pi: HighestWeight) -> Result<Self> {
        if pi.parity() != Parity::Even || !validate_weight(&pi) || pi.last() == 0 {
            return Err(LabError::InvalidWeight(format!(
                "{pi} is not a non-self-conjugate even-n weight"
            )));
        }
        let partner = phi_action(&pi)?;
        let dimension = 2 * pi.dimension();
        Ok(Self { variant: OTypeVariant::EvenDoubled(DoubledPair::new(pi, partner)), dimension })
    }

    /// The SO(n)-weight the type is built from (canonical member for doubled types).
    pub fn so_weight(&self) -> &HighestWeight {
        match &self.variant {
            OTypeVariant::OddTensorTrivial(w) | OTypeVariant::OddTensorEpsilon(w) => w,
            OTypeVariant::EvenSelfConjugate { pi, .. } => pi,
            OTypeVariant::EvenDoubled(pair) => pair.canonical(),
        }
    }

    /// The `n` of O(n).
    pub fn group_n(&self) -> usize {
        self.so_weight().group_n()
    }

    pub fn variant_name(&self) -> &'static str {
        match self.variant {
            OTypeVariant::OddTensorTrivial(_) => "odd_tensor_trivial",
            OTypeVariant::OddTensorEpsilon(_) => "odd_tensor_epsilon",
            OTypeVariant::EvenSelfConjugate { .. } => "even_self_conjugate",
            OTypeVariant::EvenDoubled(_) => "even_doubled",
        }
    }

    /// The trivial representation of O(n).
    pub fn trivial(n: usize) -> Result<Self> {
        let w = HighestWeight::trivial(n)?;
        if n % 2 == 1 {
            Self::odd_tensor(w, false)
        } else {
            Self::self_conjugate(w, 1)
        }
    }

    pub fn record(&self) -> OTypeRecord {
        let (partner_weight, sign) = match &self.variant {
            OTypeVariant::EvenDoubled(pair) => (Some(pair.partner().entries().to_vec()), None),
            OTypeVariant::EvenSelfConjugate { sign, .. } => (None, Some(*sign)),
            _ => (None, None),
        };
        OTypeRecord {
            variant: self.variant_name().to_string(),
            partner_weight,
            sign,
            dim: self.dimension,
        }
    }
}

impl std::fmt::Display for OType {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match &self.variant {
            OTypeVariant::OddTensorTrivial(w) => write!(f, "{w}⊗1"),
            OTypeVariant::OddTensorEpsilon(w) => write!(f, "{w}⊗ε"),
            OTypeVariant::EvenSelfConjugate { pi, sign } => {
                write!(f, "{pi}·ε{}", if *sign > 0 { "+" } else { "-" })
            }
            OTypeVariant::EvenDoubled(p) => write!(f, "{{{},{}}}", p.canonical(), p.partner()),
        }
    }
}

/// All O(n)-types whose restriction to SO(n) contains `w`.
///
/// Odd n gives `π⊗1` and `π⊗ε`; even n with `m_ℓ = 0` gives the two
/// self-conjugate extensions; otherwise the single doubled type.
pub fn o_types_from_so_type(w: &HighestWeight) -> Result<Vec<OType>> {
    if !validate_weight(w) {
        return Err(LabError::InvalidWeight(format!("{w}")));
    }
    Ok(match w.parity() {
        Parity::Odd => vec![OType::odd_tensor(w.clone(), false)?, OType::odd_tensor(w.clone(), true)?],
        Parity::Even if is_phi_equivalent(w) => {
            vec![OType::self_conjugate(w.clone(), 1)?, OType::self_conjugate(w.clone(), -1)?]
        }
        Parity::Even => vec![OType::doubled(w.clone())?],
    })
}

/// One row of a classification table.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OTypeRecord {
    pub variant: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub partner_weight: Option<Vec<i64>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub sign: Option<i8>,
    pub dim: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassificationRecord {
    pub n: usize,
    pub so_weight: Vec<i64>,
    pub o_types: Vec<OTypeRecord>,
}

impl ClassificationRecord {
    pub fn for_weight(w: &HighestWeight) -> Result<Self> {
        Ok(Self {
            n: w.group_n(),
            so_weight: w.entries().to_vec(),
            o_types: o_types_from_so_type(w)?.iter().map(OType::record).collect(),
        })
    }
}
