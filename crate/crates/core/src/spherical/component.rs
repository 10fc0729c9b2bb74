use crate::config::Tolerances;
use crate::error::{LabError, Result};
use crate::exec::Exec;
use crate::group::{embed_k_in_g, haar_rule, CompactGroup, GroupElement, QuadratureRule};
use crate::linalg::{hermitian_eigen, identity_defect, max_abs, unitarity_defect, CMat, C64};
use crate::reps::{GroupTag, KType, RepLabel, UnitaryRep};

/// The image `E(δ)` of the projector `P_δ = ∫_K χ_δ(k⁻¹) τ(k) dk` together
/// with an orthonormal basis of it.
#[derive(Clone, Debug)]
pub struct IsotypicComponent {
    tau: UnitaryRep,
    delta: KType,
    projector: CMat,
    basis: CMat,
    spectrum: Vec<f64>,
    rule_group: CompactGroup,
    band_limit: usize,
    node_count: usize,
}

/// Default quadrature band for a representation of SO(n+1): twice its
/// largest label, plus one.
pub fn default_band(tau: &UnitaryRep) -> usize {
    let label = match tau.label() {
        RepLabel::Weight(w) => w.band(),
        RepLabel::Defining => 1,
        _ => tau.dim(),
    };
    2 * label + 1
}

/// The Haar rule on the group of `delta`.
pub fn rule_for(delta: &KType, band_limit: usize) -> Result<QuadratureRule> {
    let group = match delta.group() {
        GroupTag::SO(n) => CompactGroup::special(n)?,
        GroupTag::O(n) => CompactGroup::orthogonal(n)?,
    };
    Ok(haar_rule(group, band_limit))
}

fn rule_matches(rule: &QuadratureRule, delta: &KType) -> bool {
    match delta.group() {
        GroupTag::SO(n) => rule.group().n() == n && !rule.group().is_orthogonal(),
        GroupTag::O(n) => rule.group().n() == n && rule.group().is_orthogonal(),
    }
}

/// Quadrature coefficients `w_i · χ_δ(k_i⁻¹)`.
fn character_weights(delta: &KType, rule: &QuadratureRule, exec: Exec) -> Result<Vec<C64>> {
    let ch = delta.character()?;
    exec.map_range(rule.node_count(), |i| {
        let k_inv = rule.nodes()[i].inverse();
        Ok(ch.chi(&k_inv)? * rule.weights()[i])
    })
    .into_iter()
    .collect()
}

/// Builds `P_δ` with the default spectrum tolerance.
pub fn projector(tau: &UnitaryRep, delta: &KType, rule: &QuadratureRule, exec: Exec) -> Result<IsotypicComponent> {
    projector_with_tolerance(tau, delta, rule, exec, Tolerances::default().spectrum)
}

/// Builds `P_δ` by quadrature, splits its spectrum at 1/2 and keeps the
/// eigenvectors above the split as the basis of `E(δ)`.
pub fn projector_with_tolerance(
    tau: &UnitaryRep,
    delta: &KType,
    rule: &QuadratureRule,
    exec: Exec,
    spectrum_tol: f64,
) -> Result<IsotypicComponent> {
    let n = delta.group().n();
    if tau.group() != GroupTag::SO(n + 1) {
        return Err(LabError::WrongGroup(format!(
            "τ lives on {} but δ is a type of {}",
            tau.group(),
            delta.group()
        )));
    }
    if !rule_matches(rule, delta) {
        return Err(LabError::WrongGroup(format!(
            "quadrature on {} for a type of {}",
            rule.group(),
            delta.group()
        )));
    }
    let coeffs = character_weights(delta, rule, exec)?;
    let d = tau.dim();
    let p = exec.try_sum(
        rule.node_count(),
        || CMat::zeros(d, d),
        |i| Ok::<_, LabError>(tau.eval(&embed_k_in_g(&rule.nodes()[i]))? * coeffs[i]),
        |acc, m| *acc += m,
    )?;
    let (spectrum, vectors) = hermitian_eigen(&p);
    if let Some(bad) = spectrum.iter().find(|v| v.abs().min((*v - 1.0).abs()) > spectrum_tol) {
        return Err(LabError::QuadratureUnderresolved(format!(
            "projector eigenvalue {bad} is not within {spectrum_tol:e} of 0 or 1 (band {})",
            rule.band_limit()
        )));
    }
    let first = spectrum.iter().position(|v| *v > 0.5).unwrap_or(d);
    let basis = vectors.columns(first, d - first).into_owned();
    Ok(IsotypicComponent {
        tau: tau.clone(),
        delta: delta.clone(),
        projector: p,
        basis,
        spectrum,
        rule_group: rule.group(),
        band_limit: rule.band_limit(),
        node_count: rule.node_count(),
    })
}

impl IsotypicComponent {
    pub fn tau(&self) -> &UnitaryRep {
        &self.tau
    }

    pub fn delta(&self) -> &KType {
        &self.delta
    }

    pub fn projector(&self) -> &CMat {
        &self.projector
    }

    pub fn basis(&self) -> &CMat {
        &self.basis
    }

    pub fn rank(&self) -> usize {
        self.basis.ncols()
    }

    pub fn spectrum(&self) -> &[f64] {
        &self.spectrum
    }

    /// `rank / d(δ)`, the measured multiplicity of δ in τ.
    pub fn multiplicity(&self) -> f64 {
        self.rank() as f64 / self.delta.dimension() as f64
    }

    pub fn rule_group(&self) -> CompactGroup {
        self.rule_group
    }

    pub fn band_limit(&self) -> usize {
        self.band_limit
    }

    pub fn node_count(&self) -> usize {
        self.node_count
    }

    /// `max |P² − P|`.
    pub fn idempotence_defect(&self) -> f64 {
        max_abs(&(&self.projector * &self.projector - &self.projector))
    }

    /// `max |P* − P|`.
    pub fn adjoint_defect(&self) -> f64 {
        max_abs(&(self.projector.adjoint() - &self.projector))
    }

    /// `|trace P − rank|`.
    pub fn trace_defect(&self) -> f64 {
        (self.projector.trace() - C64::new(self.rank() as f64, 0.0)).norm()
    }

    /// `max |B*B − I|`.
    pub fn basis_defect(&self) -> f64 {
        if self.rank() == 0 {
            return 0.0;
        }
        identity_defect(&(self.basis.adjoint() * &self.basis))
    }

    /// Largest distance of a projector eigenvalue from {0, 1}.
    pub fn spectrum_defect(&self) -> f64 {
        self.spectrum.iter().fold(0.0, |acc, v| acc.max(v.abs().min((v - 1.0).abs())))
    }
}

/// `Φ^{τ,δ}(g) = B*τ(g)B` on a fixed orthonormal basis `B` of `E(δ)`.
#[derive(Clone, Debug)]
pub struct SphericalFunction {
    component: IsotypicComponent,
    basis: CMat,
}

impl SphericalFunction {
    /// Fails with `NotContained` when δ does not occur in τ.
    pub fn from_component(component: IsotypicComponent) -> Result<Self> {
        if component.rank() == 0 {
            return Err(LabError::NotContained(format!(
                "{} does not occur in the restriction of {}",
                component.delta,
                component.tau.label()
            )));
        }
        let basis = component.basis.clone();
        Ok(Self { component, basis })
    }

    /// Projects with a default-band rule on the group of `delta`.
    pub fn new(tau: &UnitaryRep, delta: &KType, band: Option<usize>, exec: Exec) -> Result<Self> {
        let rule = rule_for(delta, band.unwrap_or_else(|| default_band(tau)))?;
        Self::from_component(projector(tau, delta, &rule, exec)?)
    }

    pub fn component(&self) -> &IsotypicComponent {
        &self.component
    }

    pub fn tau(&self) -> &UnitaryRep {
        &self.component.tau
    }

    pub fn delta(&self) -> &KType {
        &self.component.delta
    }

    pub fn basis(&self) -> &CMat {
        &self.basis
    }

    pub fn rank(&self) -> usize {
        self.basis.ncols()
    }

    /// The same function expressed in the basis `B·U`.
    pub fn with_basis_change(&self, u: &CMat) -> Result<Self> {
        if u.nrows() != self.rank() || u.ncols() != self.rank() {
            return Err(LabError::Dimension(format!(
                "basis change is {}x{}, rank is {}",
                u.nrows(),
                u.ncols(),
                self.rank()
            )));
        }
        if unitarity_defect(u) > 1e-10 {
            return Err(LabError::ContractViolation("basis change is not unitary".into()));
        }
        Ok(Self { component: self.component.clone(), basis: &self.basis * u })
    }

    pub fn eval(&self, g: &GroupElement) -> Result<CMat> {
        Ok(self.basis.adjoint() * self.tau().eval(g)? * &self.basis)
    }

    /// `B*MB` for a `d_τ × d_τ` matrix `M`.
    pub(crate) fn compress(&self, m: &CMat) -> CMat {
        self.basis.adjoint() * m * &self.basis
    }
}

pub fn spherical_eval(phi: &SphericalFunction, g: &GroupElement) -> Result<CMat> {
    phi.eval(g)
}

/// `max |Φ(x)Φ(y) − Σ_i w_i χ_δ(k_i⁻¹) Φ(x·k_i·y)|` with `k_i` embedded in G.
pub fn functional_equation_residual(
    phi: &SphericalFunction,
    x: &GroupElement,
    y: &GroupElement,
    rule: &QuadratureRule,
    exec: Exec,
) -> Result<f64> {
    if !rule_matches(rule, phi.delta()) {
        return Err(LabError::WrongGroup(format!(
            "quadrature on {} for a type of {}",
            rule.group(),
            phi.delta().group()
        )));
    }
    let coeffs = character_weights(phi.delta(), rule, exec)?;
    let r = phi.rank();
    let lhs = phi.eval(x)? * phi.eval(y)?;
    let rhs = exec.try_sum(
        rule.node_count(),
        || CMat::zeros(r, r),
        |i| {
            let g = x.compose(&embed_k_in_g(&rule.nodes()[i])).compose(y);
            Ok::<_, LabError>(phi.eval(&g)? * coeffs[i])
        },
        |acc, m| *acc += m,
    )?;
    Ok(max_abs(&(lhs - rhs)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{EulerAngles, SampleSet};
    use crate::jacobi::{zonal, Space, ZonalParams};
    use crate::linalg::operator_norm;
    use crate::reps::{so3_irrep, so4_irrep};
    use crate::weights::{HighestWeight, OType};

    fn so2(m: i64) -> KType {
        KType::So(HighestWeight::for_so(2, vec![m]).unwrap())
    }

    fn so3(j: i64) -> KType {
        KType::So(HighestWeight::for_so(3, vec![j]).unwrap())
    }

    #[test]
    fn trivial_pair() {
        let tau = so3_irrep(0);
        let phi = SphericalFunction::new(&tau, &so2(0), None, Exec::default()).unwrap();
        assert_eq!(phi.rank(), 1);
        let g = EulerAngles::new(0.3, 1.1, 2.0).to_element();
        assert!((phi.eval(&g).unwrap()[(0, 0)] - C64::new(1.0, 0.0)).norm() < 1e-14);
    }

    #[test]
    fn ranks_so3_so2() {
        for l in 0..=4u32 {
            let tau = so3_irrep(l);
            for m in -(l as i64) - 1..=l as i64 + 1 {
                let rule = rule_for(&so2(m), default_band(&tau)).unwrap();
                let c = projector(&tau, &so2(m), &rule, Exec::default()).unwrap();
                let expect = usize::from(m.unsigned_abs() <= l as u64);
                assert_eq!(c.rank(), expect, "ℓ={l} m={m}");
                assert!(c.idempotence_defect() < 1e-9 && c.adjoint_defect() < 1e-9);
                assert!(c.trace_defect() < 1e-8 && c.basis_defect() < 1e-10);
            }
        }
    }

    #[test]
    fn ranks_so4_so3() {
        for (p, q) in [(1, 0), (2, 1), (2, -2), (3, 1)] {
            let tau = so4_irrep(p, q).unwrap();
            let rule = rule_for(&so3(0), default_band(&tau)).unwrap();
            for j in 0..=p + 1 {
                let c = projector(&tau, &so3(j), &rule, Exec::default()).unwrap();
                let expect = if q.abs() <= j && j <= p { (2 * j + 1) as usize } else { 0 };
                assert_eq!(c.rank(), expect, "({p},{q}) j={j}");
                assert!(c.idempotence_defect() < 1e-9 && c.adjoint_defect() < 1e-9);
            }
        }
    }

    #[test]
    fn underresolved_rule_is_reported() {
        let tau = so4_irrep(3, 0).unwrap();
        let rule = rule_for(&so3(1), 1).unwrap();
        assert!(matches!(
            projector(&tau, &so3(1), &rule, Exec::default()),
            Err(LabError::QuadratureUnderresolved(_))
        ));
    }

    #[test]
    fn mismatched_groups() {
        let tau = so3_irrep(1);
        let rule = rule_for(&so3(0), 3).unwrap();
        assert!(matches!(projector(&tau, &so2(0), &rule, Exec::default()), Err(LabError::WrongGroup(_))));
        assert!(matches!(
            SphericalFunction::new(&so4_irrep(1, 0).unwrap(), &so2(0), None, Exec::default()),
            Err(LabError::WrongGroup(_))
        ));
    }

    #[test]
    fn zonal_sphere_value() {
        let params = ZonalParams::new(Space::Sphere, 2).unwrap();
        for l in 0..=5u32 {
            let phi = SphericalFunction::new(&so3_irrep(l), &so2(0), None, Exec::default()).unwrap();
            for g in SampleSet::random_only(3, 10, 3).unwrap() {
                let theta = crate::group::geodesic_angle(&g).unwrap();
                let v = phi.eval(&g).unwrap()[(0, 0)];
                assert!((v - C64::new(zonal(&params, l, theta).unwrap(), 0.0)).norm() < 1e-9);
            }
        }
    }

    #[test]
    fn identity_and_contraction() {
        let cases: Vec<(UnitaryRep, KType)> = vec![
            (so3_irrep(3), so2(2)),
            (so4_irrep(2, 1).unwrap(), so3(1)),
            (so4_irrep(3, 0).unwrap(), KType::o(OType::odd_tensor(HighestWeight::for_so(3, vec![2]).unwrap(), true).unwrap())),
        ];
        for (tau, delta) in cases {
            let phi = SphericalFunction::new(&tau, &delta, None, Exec::default()).unwrap();
            let n1 = tau.group().n();
            assert!(identity_defect(&phi.eval(&GroupElement::identity(n1)).unwrap()) < 1e-10);
            for g in SampleSet::random_only(n1, 10, 5).unwrap() {
                assert!(operator_norm(&phi.eval(&g).unwrap()) <= 1.0 + 1e-10);
            }
        }
    }

    #[test]
    fn not_contained() {
        let delta = KType::o(OType::trivial(2).unwrap());
        assert!(matches!(
            SphericalFunction::new(&so3_irrep(1), &delta, None, Exec::default()),
            Err(LabError::NotContained(_))
        ));
    }

    #[test]
    fn functional_equation_examples() {
        let e3 = GroupElement::identity(3);
        let tau = so3_irrep(2);
        let phi = SphericalFunction::new(&tau, &so2(1), None, Exec::default()).unwrap();
        let rule = rule_for(phi.delta(), default_band(&tau)).unwrap();
        assert!(functional_equation_residual(&phi, &e3, &e3, &rule, Exec::default()).unwrap() < 1e-10);
        let xs = SampleSet::random_only(3, 5, 1).unwrap();
        let ys = SampleSet::random_only(3, 5, 2).unwrap();
        for (x, y) in xs.iter().zip(&ys) {
            assert!(functional_equation_residual(&phi, x, y, &rule, Exec::default()).unwrap() < 1e-9);
        }

        let tau = so4_irrep(2, 1).unwrap();
        let pi = HighestWeight::for_so(3, vec![1]).unwrap();
        for eps in [false, true] {
            let delta = KType::o(OType::odd_tensor(pi.clone(), eps).unwrap());
            let Ok(phi) = SphericalFunction::new(&tau, &delta, None, Exec::default()) else { continue };
            let rule = rule_for(&delta, default_band(&tau)).unwrap();
            let xs = SampleSet::random_only(4, 3, 3).unwrap();
            let ys = SampleSet::random_only(4, 3, 4).unwrap();
            for (x, y) in xs.iter().zip(&ys) {
                assert!(functional_equation_residual(&phi, x, y, &rule, Exec::default()).unwrap() < 1e-8);
            }
        }
    }

    #[test]
    fn sequential_and_parallel_agree_bitwise() {
        let tau = so4_irrep(2, 1).unwrap();
        let a = SphericalFunction::new(&tau, &so3(1), None, Exec::Sequential).unwrap();
        let b = SphericalFunction::new(&tau, &so3(1), None, Exec::Parallel).unwrap();
        assert_eq!(a.component().projector(), b.component().projector());
    }
}
