use std::fmt;
use std::sync::Arc;

use crate::error::{LabError, Result};
use crate::group::{lift_so4, GroupElement};
use crate::linalg::{to_complex, CMat, C64};
use crate::reps::so3::So3Factors;
use crate::reps::spin::spin_matrix;
use crate::weights::{HighestWeight, OType};

/// Group a representation is defined on.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum GroupTag {
    SO(usize),
    O(usize),
}

impl GroupTag {
    pub fn n(self) -> usize {
        match self {
            GroupTag::SO(n) | GroupTag::O(n) => n,
        }
    }

    fn admits(self, g: &GroupElement) -> bool {
        match self {
            GroupTag::SO(n) => g.dim() == n && g.is_special(),
            GroupTag::O(n) => g.dim() == n,
        }
    }
}

impl fmt::Display for GroupTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupTag::SO(n) => write!(f, "SO({n})"),
            GroupTag::O(n) => write!(f, "O({n})"),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum RepLabel {
    Weight(HighestWeight),
    OType(OType),
    Defining,
    Other(String),
}

impl fmt::Display for RepLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RepLabel::Weight(w) => write!(f, "{w}"),
            RepLabel::OType(t) => write!(f, "{t}"),
            RepLabel::Defining => f.write_str("defining"),
            RepLabel::Other(s) => f.write_str(s),
        }
    }
}

type Evaluator = Arc<dyn Fn(&GroupElement) -> Result<CMat> + Send + Sync>;

/// A finite-dimensional unitary representation, evaluated on demand.
#[derive(Clone)]
pub struct UnitaryRep {
    group: GroupTag,
    label: RepLabel,
    dim: usize,
    eval: Evaluator,
}

impl fmt::Debug for UnitaryRep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("UnitaryRep")
            .field("group", &self.group)
            .field("label", &self.label)
            .field("dim", &self.dim)
            .finish()
    }
}

impl UnitaryRep {
    pub fn new<F>(group: GroupTag, label: RepLabel, dim: usize, eval: F) -> Self
    where
        F: Fn(&GroupElement) -> Result<CMat> + Send + Sync + 'static,
    {
        Self { group, label, dim, eval: Arc::new(eval) }
    }

    pub fn group(&self) -> GroupTag {
        self.group
    }

    pub fn label(&self) -> &RepLabel {
        &self.label
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn weight(&self) -> Option<&HighestWeight> {
        match &self.label {
            RepLabel::Weight(w) => Some(w),
            _ => None,
        }
    }

    /// `ρ(g)`; elements outside the group are rejected.
    pub fn eval(&self, g: &GroupElement) -> Result<CMat> {
        if !self.group.admits(g) {
            return Err(LabError::WrongGroup(format!(
                "{} evaluated on a {}x{} element with det {:+}",
                self.group,
                g.dim(),
                g.dim(),
                g.det_sign()
            )));
        }
        if g.matrix().is_identity(0.0) {
            return Ok(CMat::identity(self.dim, self.dim));
        }
        (self.eval)(g)
    }

    /// `g ↦ ρ(a g a⁻¹)` for `a` in the normalizer (e.g. `a ∈ O(n)` acting on SO(n)).
    pub fn twisted(&self, a: &GroupElement) -> UnitaryRep {
        let inner = self.clone();
        let a = a.clone();
        let a_inv = a.inverse();
        UnitaryRep::new(
            self.group,
            RepLabel::Other(format!("{}∘Ad(a)", self.label)),
            self.dim,
            move |g| inner.eval(&a.compose(g).compose(&a_inv)),
        )
    }

    /// Tensor product `ρ ⊗ σ` (Kronecker order: `ρ` is the outer factor).
    pub fn tensor(&self, other: &UnitaryRep) -> Result<UnitaryRep> {
        if self.group != other.group {
            return Err(LabError::Dimension(format!(
                "tensor product of reps of {} and {}",
                self.group, other.group
            )));
        }
        let (a, b) = (self.clone(), other.clone());
        Ok(UnitaryRep::new(
            self.group,
            RepLabel::Other(format!("{}⊗{}", self.label, other.label)),
            self.dim * other.dim,
            move |g| Ok(a.eval(g)?.kronecker(&b.eval(g)?)),
        ))
    }
}

/// Angle `t` of an SO(2) element written as `exp(t·I_{21})`.
pub(crate) fn so2_angle(g: &GroupElement) -> f64 {
    g.entry(0, 1).atan2(g.entry(0, 0))
}

/// One-dimensional irrep `exp(t·I_{21}) ↦ e^{imt}` of SO(2).
pub fn so2_irrep(m: i64) -> UnitaryRep {
    let label = RepLabel::Weight(HighestWeight::for_so(2, vec![m]).expect("SO(2) weights are unrestricted"));
    UnitaryRep::new(GroupTag::SO(2), label, 1, move |g| {
        let t = so2_angle(g);
        Ok(CMat::from_element(1, 1, C64::from_polar(1.0, m as f64 * t)))
    })
}

/// The `(2ℓ+1)`-dimensional irrep of SO(3).
pub fn so3_irrep(l: u32) -> UnitaryRep {
    let label = RepLabel::Weight(HighestWeight::for_so(3, vec![l as i64]).expect("ℓ ≥ 0 is dominant"));
    let factors = So3Factors::new(l);
    let dim = factors.dim();
    UnitaryRep::new(GroupTag::SO(3), label, dim, move |g| factors.eval(g))
}

/// Irrep of SO(4) with highest weight `(p, q)`, `p ≥ |q|`, realized as
/// `D^{(p−q)/2}(q_L) ⊗ D^{(p+q)/2}(q_R)` through the quaternion lift
/// `x ↦ q_L x q̄_R`.
///
/// With this assignment the extracted highest weight is `(p, q)`, not
/// `(p, -q)`; the highest-weight tests pin it.
pub fn so4_irrep(p: i64, q: i64) -> Result<UnitaryRep> {
    let w = HighestWeight::for_so(4, vec![p, q])?;
    let two_jl = (p - q) as u32;
    let two_jr = (p + q) as u32;
    let dim = ((two_jl + 1) * (two_jr + 1)) as usize;
    Ok(UnitaryRep::new(GroupTag::SO(4), RepLabel::Weight(w), dim, move |g| {
        let (ql, qr) = lift_so4(g)?;
        let left = spin_matrix(two_jl, &ql.to_su2());
        let right = spin_matrix(two_jr, &qr.to_su2());
        Ok(left.kronecker(&right))
    }))
}

/// The defining representation of SO(n) (or O(n) when `full` is set).
pub fn defining_rep(n: usize, full: bool) -> UnitaryRep {
    let group = if full { GroupTag::O(n) } else { GroupTag::SO(n) };
    UnitaryRep::new(group, RepLabel::Defining, n, |g| Ok(to_complex(g.matrix())))
}

/// Irrep of SO(n), n ∈ {2, 3, 4}, with the given highest weight.
pub fn irrep_for_weight(w: &HighestWeight) -> Result<UnitaryRep> {
    if !crate::weights::validate_weight(w) {
        return Err(LabError::InvalidWeight(format!("{w}")));
    }
    match (w.group_n(), w.entries()) {
        (2, [m]) => Ok(so2_irrep(*m)),
        (3, [l]) => Ok(so3_irrep(*l as u32)),
        (4, [p, q]) => so4_irrep(*p, *q),
        (n, _) => Err(LabError::UnsupportedGroup(format!("irreps of SO({n})"))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{exp_so, EulerAngles, LieBasisElement, SampleSet};
    use crate::linalg::{identity_defect, max_abs, unitarity_defect};

    fn check_rep(rep: &UnitaryRep, n: usize, pairs: usize, seed: u64) {
        let e = GroupElement::identity(n);
        assert_eq!(rep.eval(&e).unwrap(), CMat::identity(rep.dim(), rep.dim()), "ρ(e) = I exactly");
        let gs = SampleSet::random_only(n, pairs, seed).unwrap();
        let hs = SampleSet::random_only(n, pairs, seed + 1).unwrap();
        for (g, h) in gs.iter().zip(&hs) {
            let rg = rep.eval(g).unwrap();
            let rh = rep.eval(h).unwrap();
            let rgh = rep.eval(&g.compose(h)).unwrap();
            assert!(max_abs(&(&rg * &rh - rgh)) < 1e-10, "{rep:?}");
            assert!(unitarity_defect(&rg) < 1e-10);
        }
    }

    #[test]
    fn so2_examples() {
        let triv = so2_irrep(0);
        let g = exp_so(&(LieBasisElement::new(2, 1, 2).unwrap().matrix() * 0.77)).unwrap();
        assert_eq!(triv.eval(&g).unwrap()[(0, 0)], C64::new(1.0, 0.0));
        let half_turn = exp_so(&(LieBasisElement::new(2, 1, 2).unwrap().matrix() * std::f64::consts::PI)).unwrap();
        let v = so2_irrep(2).eval(&half_turn).unwrap()[(0, 0)];
        assert!((v - C64::new(1.0, 0.0)).norm() < 1e-15);
        let refl = GroupElement::diagonal(&[1.0, -1.0]).unwrap();
        assert!(matches!(so2_irrep(1).eval(&refl), Err(LabError::WrongGroup(_))));
        let h = exp_so(&(LieBasisElement::new(2, 1, 2).unwrap().matrix() * -2.1)).unwrap();
        let r = so2_irrep(3);
        let lhs = r.eval(&g.compose(&h)).unwrap()[(0, 0)];
        let rhs = r.eval(&g).unwrap()[(0, 0)] * r.eval(&h).unwrap()[(0, 0)];
        assert!((lhs - rhs).norm() < 1e-14);
        check_rep(&so2_irrep(-4), 2, 50, 3);
    }

    #[test]
    fn so3_examples() {
        let e = GroupElement::identity(3);
        assert_eq!(so3_irrep(0).eval(&e).unwrap()[(0, 0)], C64::new(1.0, 0.0));
        for theta in [0.0, 0.4, 2.0, 3.1] {
            for axis in [(2, 1), (3, 1), (3, 2)] {
                let g = exp_so(&(LieBasisElement::new(axis.0, axis.1, 3).unwrap().matrix() * theta)).unwrap();
                let xi = so3_irrep(1).eval(&g).unwrap().trace();
                assert!((xi.re - (1.0 + 2.0 * theta.cos())).abs() < 1e-12 && xi.im.abs() < 1e-12);
            }
        }
        for l in 0..=6 {
            check_rep(&so3_irrep(l), 3, 100, 10 + l as u64);
        }
        let refl = GroupElement::diagonal(&[1.0, 1.0, -1.0]).unwrap();
        assert!(matches!(so3_irrep(2).eval(&refl), Err(LabError::WrongGroup(_))));
    }

    #[test]
    fn so3_matches_spin_construction() {
        // Independent route: SO(3) → SU(2) lift through a quaternion, then spin-ℓ.
        use crate::group::Quaternion;
        for l in 0..=4u32 {
            let rep = so3_irrep(l);
            for g in SampleSet::random_only(3, 20, 99).unwrap() {
                let q = Quaternion::from_rotation3(g.matrix());
                let other = spin_matrix(2 * l, &q.to_su2());
                // Same representation up to a change of basis: compare characters.
                let a = rep.eval(&g).unwrap().trace();
                let b = other.trace();
                assert!((a - b).norm() < 1e-12);
            }
        }
    }

    #[test]
    fn so3_zonal_entry_is_legendre() {
        for l in 0..=6u32 {
            let rep = so3_irrep(l);
            for beta in [0.0, 0.7, 2.2, std::f64::consts::PI] {
                let g = EulerAngles::new(0.3, beta, -1.2).to_element();
                let mid = l as usize;
                let v = rep.eval(&g).unwrap()[(mid, mid)];
                let p = crate::jacobi::jacobi_eval(l, 0.0, 0.0, beta.cos()).unwrap();
                assert!((v.re - p).abs() < 1e-12 && v.im.abs() < 1e-12, "ℓ={l} β={beta}");
            }
        }
    }

    #[test]
    fn so4_examples() {
        let e = GroupElement::identity(4);
        assert_eq!(so4_irrep(0, 0).unwrap().eval(&e).unwrap()[(0, 0)], C64::new(1.0, 0.0));
        assert_eq!(so4_irrep(2, 1).unwrap().dim(), 8);
        assert!(so4_irrep(1, 2).is_err());
        for (p, q) in [(0, 0), (1, 0), (1, 1), (1, -1), (2, 1), (2, -2), (3, 0), (3, 2)] {
            let rep = so4_irrep(p, q).unwrap();
            assert_eq!(rep.dim() as u64, rep.weight().unwrap().dimension());
            check_rep(&rep, 4, 100, 40 + p as u64 * 7 + q.unsigned_abs());
        }
        // (1, 0) has the character of the defining representation.
        let rep = so4_irrep(1, 0).unwrap();
        for g in SampleSet::random_only(4, 30, 5).unwrap() {
            let t = rep.eval(&g).unwrap().trace();
            assert!((t.re - g.matrix().trace()).abs() < 1e-10 && t.im.abs() < 1e-10);
        }
    }

    #[test]
    fn so4_lift_sign_independence() {
        use crate::group::{so4_from_quaternions, Quaternion};
        let rep = so4_irrep(3, 1).unwrap();
        let l = Quaternion::new(0.3, -0.2, 0.8, 0.1).normalize();
        let r = Quaternion::new(-0.5, 0.4, 0.1, 0.6).normalize();
        let g1 = so4_from_quaternions(l, r);
        let (ql, qr) = lift_so4(&g1).unwrap();
        let direct = |a: Quaternion, b: Quaternion| spin_matrix(2, &a.to_su2()).kronecker(&spin_matrix(4, &b.to_su2()));
        let d = max_abs(&(direct(ql, qr) - direct(ql.neg(), qr.neg())));
        assert!(d < 1e-13);
        assert!(max_abs(&(rep.eval(&g1).unwrap() - direct(ql, qr))) < 1e-15);
    }

    #[test]
    fn defining_and_tensor() {
        let d = defining_rep(4, false);
        let t = d.tensor(&d).unwrap();
        assert_eq!(t.dim(), 16);
        let g = SampleSet::random_only(4, 1, 1).unwrap().remove(0);
        let v = t.eval(&g).unwrap();
        assert!(unitarity_defect(&v) < 1e-13);
        assert!(identity_defect(&t.eval(&GroupElement::identity(4)).unwrap()) == 0.0);
        assert!(d.tensor(&so3_irrep(1)).is_err());
    }

    #[test]
    fn irrep_dispatch() {
        assert_eq!(irrep_for_weight(&HighestWeight::for_so(3, vec![2]).unwrap()).unwrap().dim(), 5);
        assert_eq!(irrep_for_weight(&HighestWeight::for_so(4, vec![2, -1]).unwrap()).unwrap().dim(), 8);
        assert!(matches!(
            irrep_for_weight(&HighestWeight::for_so(5, vec![1, 0]).unwrap()),
            Err(LabError::UnsupportedGroup(_))
        ));
    }
}
