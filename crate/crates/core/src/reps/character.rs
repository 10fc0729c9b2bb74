use std::fmt;

use crate::error::{LabError, Result};
use crate::group::{coset_representative, GroupElement};
use crate::linalg::{block2, CMat, C64};
use crate::reps::unitary::{irrep_for_weight, GroupTag, RepLabel, UnitaryRep};
use crate::weights::{HighestWeight, OType, OTypeVariant};

/// A K-type: an SO(n) weight, or an O(n) type with an optional intertwiner
/// `A` for self-conjugate types of dimension > 1.
#[derive(Clone, Debug, PartialEq)]
pub enum KType {
    So(HighestWeight),
    O { otype: OType, intertwiner: Option<CMat> },
}

impl KType {
    pub fn o(otype: OType) -> Self {
        KType::O { otype, intertwiner: None }
    }

    pub fn group(&self) -> GroupTag {
        match self {
            KType::So(w) => GroupTag::SO(w.group_n()),
            KType::O { otype, .. } => GroupTag::O(otype.group_n()),
        }
    }

    pub fn dimension(&self) -> u64 {
        match self {
            KType::So(w) => w.dimension(),
            KType::O { otype, .. } => otype.dimension,
        }
    }

    pub fn rep(&self) -> Result<UnitaryRep> {
        match self {
            KType::So(w) => irrep_for_weight(w),
            KType::O { otype, intertwiner } => o_type_rep(otype, intertwiner.as_ref()),
        }
    }

    pub fn character(&self) -> Result<Character> {
        Ok(Character::new(self.rep()?))
    }
}

impl fmt::Display for KType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            KType::So(w) => write!(f, "{w}"),
            KType::O { otype, .. } => write!(f, "{otype}"),
        }
    }
}

/// Trace `ξ(k)` of a unitary representation and its normalized form `χ = d·ξ`.
#[derive(Clone, Debug)]
pub struct Character {
    rep: UnitaryRep,
}

impl Character {
    pub fn new(rep: UnitaryRep) -> Self {
        Self { rep }
    }

    pub fn rep(&self) -> &UnitaryRep {
        &self.rep
    }

    pub fn dim(&self) -> usize {
        self.rep.dim()
    }

    pub fn xi(&self, k: &GroupElement) -> Result<C64> {
        Ok(self.rep.eval(k)?.trace())
    }

    pub fn chi(&self, k: &GroupElement) -> Result<C64> {
        Ok(self.xi(k)? * self.dim() as f64)
    }
}

/// Splits `g ∈ O(n)` as `k·a^s` with `k ∈ SO(n)`.
fn split_coset(g: &GroupElement, a: &GroupElement) -> (GroupElement, bool) {
    if g.is_special() {
        (g.clone(), false)
    } else {
        (g.compose(a), true)
    }
}

/// Concrete unitary realization of an O(n)-type.
///
/// Self-conjugate types of dimension one use `A = [1]`, so the recorded sign
/// is the value at `a`. Higher-dimensional ones need an intertwiner `A` with
/// `π(aka) = A π(k) A⁻¹` and `A² = I`; the realization is then
/// `ka ↦ sign·π(k)A`.
pub fn o_type_rep(t: &OType, intertwiner: Option<&CMat>) -> Result<UnitaryRep> {
    let n = t.group_n();
    let a = coset_representative(n);
    let label = RepLabel::OType(t.clone());
    let dim = t.dimension as usize;
    match &t.variant {
        OTypeVariant::OddTensorTrivial(w) | OTypeVariant::OddTensorEpsilon(w) => {
            let pi = irrep_for_weight(w)?;
            let eps = if matches!(t.variant, OTypeVariant::OddTensorEpsilon(_)) { -1.0 } else { 1.0 };
            Ok(UnitaryRep::new(GroupTag::O(n), label, dim, move |g| {
                let (k, flipped) = split_coset(g, &a);
                let v = pi.eval(&k)?;
                Ok(if flipped { v * C64::new(eps, 0.0) } else { v })
            }))
        }
        OTypeVariant::EvenSelfConjugate { pi, sign } => {
            let rep = irrep_for_weight(pi)?;
            let a_mat = match (rep.dim(), intertwiner) {
                (_, Some(m)) if m.nrows() == rep.dim() && m.ncols() == rep.dim() => m.clone(),
                (_, Some(m)) => {
                    return Err(LabError::Dimension(format!(
                        "intertwiner is {}x{}, expected {}",
                        m.nrows(),
                        m.ncols(),
                        rep.dim()
                    )))
                }
                (1, None) => CMat::identity(1, 1),
                (_, None) => {
                    return Err(LabError::IncompleteType(format!("{t} needs a registered intertwiner")))
                }
            };
            let a_eff = a_mat * C64::new(f64::from(*sign), 0.0);
            Ok(UnitaryRep::new(GroupTag::O(n), label, dim, move |g| {
                let (k, flipped) = split_coset(g, &a);
                let v = rep.eval(&k)?;
                Ok(if flipped { v * &a_eff } else { v })
            }))
        }
        OTypeVariant::EvenDoubled(pair) => {
            let pi = irrep_for_weight(pair.canonical())?;
            let pi_phi = pi.twisted(&a);
            let d = pi.dim();
            Ok(UnitaryRep::new(GroupTag::O(n), label, dim, move |g| {
                let (k, flipped) = split_coset(g, &a);
                let p = pi.eval(&k)?;
                let q = pi_phi.eval(&k)?;
                let z = CMat::zeros(d, d);
                Ok(if flipped { block2(&z, &p, &q, &z) } else { block2(&p, &z, &z, &q) })
            }))
        }
    }
}

/// Character of an O(n)-type; see [`o_type_rep`] for the intertwiner rule.
pub fn o_type_character(t: &OType, intertwiner: Option<&CMat>) -> Result<Character> {
    Ok(Character::new(o_type_rep(t, intertwiner)?))
}
