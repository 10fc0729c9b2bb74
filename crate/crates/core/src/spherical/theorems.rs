use std::collections::BTreeSet;

use nalgebra::DMatrix;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;
use serde_json::json;

use crate::config::Tolerances;
use crate::error::{LabError, Result};
use crate::exec::Exec;
use crate::group::{
    coset_representative, embed_k_in_g, geodesic_angle, haar_rule, projective_angle, CompactGroup, GroupElement,
    QuadratureRule, SampleSet,
};
use crate::jacobi::{zonal, Space, ZonalParams};
use crate::linalg::{identity_defect, max_abs, unitarity_defect, CMat, C64};
use crate::reps::{
    highest_weight_eigenvalues, irrep_for_weight, o_type_rep, so3_irrep, so4_irrep, KType, UnitaryRep,
};
use crate::spherical::component::{default_band, projector_with_tolerance, rule_for, IsotypicComponent};
use crate::spherical::{Report, SphericalFunction};
use crate::weights::{branching_contains, o_types_from_so_type, phi_action, validate_weight, HighestWeight, OType};

pub const DEFAULT_SEED: u64 = 7;
pub const DEFAULT_SAMPLES: usize = 25;

/// Shared knobs of the verifiers.
#[derive(Clone, Debug)]
pub struct CheckConfig {
    pub tolerances: Tolerances,
    pub seed: u64,
    /// Number of random group elements (or pairs) per check.
    pub samples: usize,
    /// Quadrature band override; `None` uses [`default_band`].
    pub band: Option<usize>,
    pub exec: Exec,
    /// When set, every reference basis is replaced by `B·U` for a random
    /// unitary `U` drawn from this seed.
    pub basis_rotation: Option<u64>,
}

impl Default for CheckConfig {
    fn default() -> Self {
        Self {
            tolerances: Tolerances::default(),
            seed: DEFAULT_SEED,
            samples: DEFAULT_SAMPLES,
            band: None,
            exec: Exec::default(),
            basis_rotation: None,
        }
    }
}

impl CheckConfig {
    fn band_for(&self, tau: &UnitaryRep) -> usize {
        self.band.unwrap_or_else(|| default_band(tau))
    }

    fn component(&self, tau: &UnitaryRep, delta: &KType, rule: &QuadratureRule) -> Result<IsotypicComponent> {
        projector_with_tolerance(tau, delta, rule, self.exec, self.tolerances.spectrum)
    }

    fn spherical(&self, tau: &UnitaryRep, delta: &KType, rule: &QuadratureRule) -> Result<SphericalFunction> {
        SphericalFunction::from_component(self.component(tau, delta, rule)?)
    }

    /// Applies the configured basis rotation to a reference function.
    fn rotate(&self, phi: SphericalFunction) -> Result<SphericalFunction> {
        match self.basis_rotation {
            None => Ok(phi),
            Some(seed) => {
                let u = random_unitary(phi.rank(), seed);
                phi.with_basis_change(&u)
            }
        }
    }
}

/// Haar-random unitary matrix (QR of a complex Gaussian matrix with the
/// phases of `R` removed).
fn random_unitary(r: usize, seed: u64) -> CMat {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let z: CMat = DMatrix::from_fn(r, r, |_, _| {
        C64::new(rng.sample::<f64, _>(StandardNormal), rng.sample::<f64, _>(StandardNormal))
    });
    let qr = z.qr();
    let (mut q, rr) = (qr.q(), qr.r());
    for c in 0..r {
        let d = rr[(c, c)];
        let phase = if d.norm() > 0.0 { d / d.norm() } else { C64::new(1.0, 0.0) };
        for row in 0..r {
            q[(row, c)] *= phase;
        }
    }
    q
}

/// The irrep of SO(n+1) with the given label.
pub fn tau_for_label(n: usize, label: &HighestWeight) -> Result<UnitaryRep> {
    if label.group_n() != n + 1 {
        return Err(LabError::Dimension(format!("τ = {label} is not a weight of SO({})", n + 1)));
    }
    irrep_for_weight(label)
}

/// Dominant integral weights of SO(n) with all entries in `[-bound, bound]`.
pub fn dominant_weights(n: usize, bound: i64) -> Result<Vec<HighestWeight>> {
    let rank = n / 2;
    let mut out = vec![Vec::<i64>::new()];
    for _ in 0..rank {
        out = out
            .into_iter()
            .flat_map(|prefix| {
                (-bound..=bound).map(move |v| {
                    let mut p = prefix.clone();
                    p.push(v);
                    p
                })
            })
            .collect();
    }
    let mut weights = Vec::new();
    for entries in out {
        match HighestWeight::for_so(n, entries) {
            Ok(w) if validate_weight(&w) => weights.push(w),
            Ok(_) | Err(LabError::InvalidWeight(_)) => {}
            Err(e) => return Err(e),
        }
    }
    weights.sort_by(|a, b| b.entries().cmp(a.entries()));
    Ok(weights)
}

/// SO(n)-types contained in τ, then every O(n)-type built from them
/// (whether or not it occurs in τ).
pub fn admissible_ktypes(tau: &HighestWeight) -> Result<(Vec<KType>, Vec<KType>)> {
    let n = tau.group_n() - 1;
    let mut so = Vec::new();
    let mut o = Vec::new();
    let mut seen = BTreeSet::new();
    for w in dominant_weights(n, tau.band() as i64)? {
        if !branching_contains(tau, &w)? {
            continue;
        }
        so.push(KType::So(w.clone()));
        for t in o_types_from_so_type(&w)? {
            if seen.insert(t.to_string()) {
                o.push(KType::o(t));
            }
        }
    }
    Ok((so, o))
}

fn samples(n: usize, cfg: &CheckConfig) -> Result<Vec<GroupElement>> {
    Ok(SampleSet::new(n, cfg.samples, cfg.seed)?.points)
}

fn max_over<T: Sync>(exec: Exec, items: &[T], f: impl Fn(&T) -> Result<f64> + Sync + Send) -> Result<f64> {
    exec.map(items, f).into_iter().try_fold(0.0_f64, |acc, r| Ok(acc.max(r?)))
}

/// `max_g |Φ_ref(g) − U Φ(g) U*|` with `U = B_ref* B`. Also returns the
/// unitarity defect of `U`, which certifies that both bases span one space.
fn compare_in_reference(
    reference: &SphericalFunction,
    other: &SphericalFunction,
    points: &[GroupElement],
    exec: Exec,
) -> Result<(f64, f64)> {
    if reference.rank() != other.rank() {
        return Ok((f64::INFINITY, f64::INFINITY));
    }
    let u = reference.basis().adjoint() * other.basis();
    let u_defect = unitarity_defect(&u);
    let residual = max_over(exec, points, |g| {
        let mapped = &u * other.eval(g)? * u.adjoint();
        Ok(max_abs(&(reference.eval(g)? - mapped)))
    })?;
    Ok((residual, u_defect))
}

/// Definition ii) for one `(τ, δ)` over `cfg.samples` random pairs `(x, y)`.
pub fn check_functional_equation(tau: &UnitaryRep, delta: &KType, cfg: &CheckConfig) -> Result<Report> {
    let rule = rule_for(delta, cfg.band_for(tau))?;
    let phi = cfg.rotate(cfg.spherical(tau, delta, &rule)?)?;
    let dim = tau.group().n();
    let xs = SampleSet::random_only(dim, cfg.samples, cfg.seed)?;
    let ys = SampleSet::random_only(dim, cfg.samples, cfg.seed.wrapping_add(1))?;
    let mut worst: f64 = 0.0;
    for (x, y) in xs.iter().zip(&ys) {
        worst = worst.max(crate::spherical::functional_equation_residual(&phi, x, y, &rule, cfg.exec)?);
    }
    let n = delta.group().n();
    Ok(Report::new("functional_equation", n, worst, cfg.tolerances.functional_equation)
        .tau(tau.label())
        .delta(delta)
        .seed(cfg.seed)
        .quadrature(&rule)
        .detail("rank", phi.rank())
        .detail("pairs", cfg.samples))
}

/// Definition ii) for every τ of SO(n+1) with labels bounded by `max_label`
/// and every K-type of SO(n) and O(n) that occurs in it.
///
/// For each pair `(x, y)` the matrices `τ(x k_i y)` are computed once on the
/// O(n) rule and shared by all K-types of τ; SO(n)-types use the identity
/// coset of the same rule.
pub fn functional_equation_sweep(n: usize, max_label: i64, cfg: &CheckConfig) -> Result<Vec<Report>> {
    functional_equation_sweep_taus(n, &dominant_weights(n + 1, max_label)?, cfg)
}

/// [`functional_equation_sweep`] over an explicit list of τ labels.
pub fn functional_equation_sweep_taus(n: usize, taus: &[HighestWeight], cfg: &CheckConfig) -> Result<Vec<Report>> {
    let mut reports = Vec::new();
    for tau_w in taus {
        let tau = tau_for_label(n, tau_w)?;
        let rule_o = haar_rule(CompactGroup::orthogonal(n)?, cfg.band_for(&tau));
        let rule_so = rule_o.identity_coset();
        let (so_types, o_types) = admissible_ktypes(tau_w)?;
        let mut phis = Vec::new();
        for delta in so_types {
            phis.push((cfg.rotate(cfg.spherical(&tau, &delta, &rule_so)?)?, false));
        }
        for delta in o_types {
            let c = cfg.component(&tau, &delta, &rule_o)?;
            if c.rank() > 0 {
                phis.push((cfg.rotate(SphericalFunction::from_component(c)?)?, true));
            }
        }
        let coeffs: Vec<Vec<C64>> = phis
            .iter()
            .map(|(phi, full)| {
                let rule = if *full { &rule_o } else { &rule_so };
                let ch = phi.delta().character()?;
                rule.nodes()
                    .iter()
                    .zip(rule.weights())
                    .map(|(k, w)| Ok(ch.chi(&k.inverse())? * *w))
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<_>>()?;
        let xs = SampleSet::random_only(n + 1, cfg.samples, cfg.seed)?;
        let ys = SampleSet::random_only(n + 1, cfg.samples, cfg.seed.wrapping_add(1))?;
        let embedded: Vec<GroupElement> = rule_o.nodes().iter().map(embed_k_in_g).collect();
        let mut worst = vec![0.0_f64; phis.len()];
        let d = tau.dim();
        for (x, y) in xs.iter().zip(&ys) {
            let tx = tau.eval(x)?;
            let ty = tau.eval(y)?;
            let mats: Vec<CMat> = cfg
                .exec
                .map(&embedded, |k| tau.eval(&x.compose(k).compose(y)))
                .into_iter()
                .collect::<Result<_>>()?;
            for (idx, (phi, _)) in phis.iter().enumerate() {
                let c = &coeffs[idx];
                let integral = cfg.exec.sum(c.len(), || CMat::zeros(d, d), |i| &mats[i] * c[i], |acc, m| *acc += m);
                let lhs = phi.compress(&tx) * phi.compress(&ty);
                let rhs = phi.compress(&integral);
                worst[idx] = worst[idx].max(max_abs(&(lhs - rhs)));
            }
        }
        for ((phi, full), residual) in phis.iter().zip(worst) {
            let rule = if *full { &rule_o } else { &rule_so };
            reports.push(
                Report::new("functional_equation", n, residual, cfg.tolerances.functional_equation)
                    .tau(tau_w)
                    .delta(phi.delta())
                    .seed(cfg.seed)
                    .quadrature(rule)
                    .detail("rank", phi.rank())
                    .detail("multiplicity", phi.component().multiplicity())
                    .detail("pairs", cfg.samples),
            );
        }
    }
    Ok(reports)
}

/// Odd-dimensional case, n = 3: the sign `Φ^{τ,π}(−I) = ±I` selects
/// `γ = π⊗1` or `π⊗ε`, and then `Φ^{τ,π} = Φ^{τ,γ}`.
pub fn check_theorem_par(tau_w: &HighestWeight, pi: &HighestWeight, cfg: &CheckConfig) -> Result<Report> {
    if pi.group_n() != 3 || tau_w.group_n() != 4 {
        return Err(LabError::TheoremPrecondition(format!(
            "the odd case needs τ of SO(4) and π of SO(3), got {tau_w} and {pi}"
        )));
    }
    if !branching_contains(tau_w, pi)? {
        return Err(LabError::NotContained(format!("{pi} does not occur in {tau_w}")));
    }
    let tol = &cfg.tolerances;
    let tau = tau_for_label(3, tau_w)?;
    let band = cfg.band_for(&tau);
    let rule_so = haar_rule(CompactGroup::SO3, band);
    let rule_o = haar_rule(CompactGroup::O3, band);
    let phi_pi = cfg.rotate(cfg.spherical(&tau, &KType::So(pi.clone()), &rule_so)?)?;

    let minus = GroupElement::diagonal(&[-1.0; 4])?;
    let s = phi_pi.eval(&minus)?;
    let plus_defect = identity_defect(&s);
    let minus_defect = max_abs(&(&s + CMat::identity(s.nrows(), s.ncols())));
    let (sign, sign_defect) = if plus_defect <= minus_defect { (1, plus_defect) } else { (-1, minus_defect) };
    if sign_defect > tol.par_sign {
        return Err(LabError::TheoremPrecondition(format!(
            "Φ(−I) is not ±I: distance {sign_defect:e}"
        )));
    }
    let gamma = OType::odd_tensor(pi.clone(), sign < 0)?;
    let comp_gamma = cfg.component(&tau, &KType::o(gamma.clone()), &rule_o)?;
    let projector_diff = max_abs(&(phi_pi.component().projector() - comp_gamma.projector()));
    let rank_ok = comp_gamma.rank() == phi_pi.rank();
    let phi_gamma = SphericalFunction::from_component(comp_gamma)?;
    let points = samples(3, cfg)?;
    let (residual, u_defect) = compare_in_reference(&phi_pi, &phi_gamma, &points, cfg.exec)?;
    Ok(Report::new("par", 3, residual, tol.correspondence)
        .tau(tau_w)
        .delta(pi)
        .seed(cfg.seed)
        .quadrature(&rule_o)
        .detail("sign", sign)
        .detail("gamma", gamma.to_string())
        .detail("samples", points.len())
        .sub_check("sign_defect", sign_defect, tol.par_sign)
        .sub_check("projector_difference", projector_diff, tol.par_projector)
        .sub_check("basis_change_unitarity", u_defect, tol.correspondence)
        .require("rank_match", rank_ok))
}

/// Even case with `π` trivial, n = 2: `A = Φ^{τ,π}(a)` squares to I and
/// `γ = π·ε_A` gives `Φ^{τ,π} = Φ^{τ,γ}`.
pub fn check_theorem_impar(l: u32, cfg: &CheckConfig) -> Result<Report> {
    let tol = &cfg.tolerances;
    let tau = so3_irrep(l);
    let pi = HighestWeight::trivial(2)?;
    let band = cfg.band_for(&tau);
    let rule_so = haar_rule(CompactGroup::SO2, band);
    let rule_o = haar_rule(CompactGroup::O2, band);
    let phi_pi = cfg.rotate(cfg.spherical(&tau, &KType::So(pi.clone()), &rule_so)?)?;
    let a = embed_k_in_g(&coset_representative(2));
    let a_mat = phi_pi.eval(&a)?;
    let involution = identity_defect(&(&a_mat * &a_mat));
    let sign: i8 = if a_mat[(0, 0)].re >= 0.0 { 1 } else { -1 };
    let gamma = OType::self_conjugate(pi.clone(), 1)?;
    let delta = KType::O { otype: gamma, intertwiner: Some(a_mat.clone()) };
    let comp_gamma = cfg.component(&tau, &delta, &rule_o)?;
    let rank_ok = comp_gamma.rank() == phi_pi.rank();
    let phi_gamma = SphericalFunction::from_component(comp_gamma)?;
    let points = samples(2, cfg)?;
    let (residual, u_defect) = compare_in_reference(&phi_pi, &phi_gamma, &points, cfg.exec)?;
    Ok(Report::new("impar", 2, residual, tol.correspondence)
        .tau(tau.label())
        .delta(&pi)
        .seed(cfg.seed)
        .quadrature(&rule_o)
        .detail("A", a_mat[(0, 0)].re)
        .detail("gamma", OType::self_conjugate(pi, sign)?.to_string())
        .detail("samples", points.len())
        .sub_check("involution_defect", involution, tol.involution)
        .sub_check("basis_change_unitarity", u_defect, tol.correspondence)
        .require("rank_match", rank_ok))
}

/// Even case with `π = (m) ≠ π_φ`, n = 2: in the basis
/// `[B_π | τ(a)B_π]` of `E(γ)`, γ the doubled type,
/// `Φ^{τ,γ}(g) = [[Φ^{τ,π}(g), Φ^{τ,π}(ga)], [Φ^{τ,π_φ}(ga), Φ^{τ,π_φ}(g)]]`.
///
/// The basis of `E(π_φ)` is taken to be `τ(a)B_π`; the identity is
/// basis-dependent and holds in this alignment. A negative `m` is replaced
/// by `|m|`, the canonical member of the pair.
pub fn check_theorem_matrix(l: u32, m: i64, cfg: &CheckConfig) -> Result<Report> {
    let m = m.abs();
    if m == 0 || m > l as i64 {
        return Err(LabError::TheoremPrecondition(format!("need 0 < |m| ≤ ℓ, got ℓ={l}, m={m}")));
    }
    let tol = &cfg.tolerances;
    let tau = so3_irrep(l);
    let pi = HighestWeight::for_so(2, vec![m])?;
    let pi_phi = phi_action(&pi)?;
    let band = cfg.band_for(&tau);
    let rule_so = haar_rule(CompactGroup::SO2, band);
    let rule_o = haar_rule(CompactGroup::O2, band);
    let phi_pi = cfg.rotate(cfg.spherical(&tau, &KType::So(pi.clone()), &rule_so)?)?;
    let comp_phi = cfg.component(&tau, &KType::So(pi_phi.clone()), &rule_so)?;

    let a = embed_k_in_g(&coset_representative(2));
    let tau_a = tau.eval(&a)?;
    let b_pi = phi_pi.basis().clone();
    let b_phi = &tau_a * &b_pi;
    let alignment = max_abs(&(comp_phi.projector() * &b_phi - &b_phi));
    let b_ref = crate::linalg::hstack(&b_pi, &b_phi);

    let gamma = OType::doubled(pi.clone())?;
    let comp_gamma = cfg.component(&tau, &KType::o(gamma.clone()), &rule_o)?;
    let rank = comp_gamma.rank();
    let multiplicity = comp_gamma.multiplicity();
    let phi_gamma = SphericalFunction::from_component(comp_gamma)?;
    if rank != b_ref.ncols() {
        return Ok(Report::new("matrix", 2, f64::INFINITY, tol.correspondence)
            .tau(tau.label())
            .delta(&pi)
            .detail("rank", rank));
    }
    let u = b_ref.adjoint() * phi_gamma.basis();
    let u_defect = unitarity_defect(&u);
    let compress = |b: &CMat, g: &GroupElement| -> Result<CMat> { Ok(b.adjoint() * tau.eval(g)? * b) };
    let points = samples(2, cfg)?;
    let residual = max_over(cfg.exec, &points, |g| {
        let ga = g.compose(&a);
        let block = crate::linalg::block2(
            &compress(&b_pi, g)?,
            &compress(&b_pi, &ga)?,
            &compress(&b_phi, &ga)?,
            &compress(&b_phi, g)?,
        );
        let mapped = &u * phi_gamma.eval(g)? * u.adjoint();
        Ok(max_abs(&(mapped - block)))
    })?;
    let off_block = max_abs(&compress(&b_pi, &a)?).max(max_abs(&compress(&b_phi, &a)?));

    // The O(2)-action on [B_π | τ(a)B_π] is the doubled realization.
    let gamma_rep = o_type_rep(&gamma, None)?;
    let k_coset = coset_representative(2);
    let ks: Vec<GroupElement> = SampleSet::random_only(2, cfg.samples, cfg.seed)?
        .into_iter()
        .flat_map(|k| {
            let ka = k.compose(&k_coset);
            [k, ka]
        })
        .collect();
    let intertwining = max_over(cfg.exec, &ks, |k| {
        Ok(max_abs(&(tau.eval(&embed_k_in_g(k))? * &b_ref - &b_ref * gamma_rep.eval(k)?)))
    })?;

    Ok(Report::new("matrix", 2, residual, tol.correspondence)
        .tau(tau.label())
        .delta(&pi)
        .seed(cfg.seed)
        .quadrature(&rule_o)
        .detail("gamma", gamma.to_string())
        .detail("rank", rank)
        .detail("multiplicity", multiplicity)
        .detail("samples", points.len())
        .require("rank_is_dimension", rank as u64 == gamma.dimension)
        .sub_check("alignment_defect", alignment, tol.correspondence)
        .sub_check("basis_change_unitarity", u_defect, tol.correspondence)
        .sub_check("identity_off_blocks", off_block, tol.correspondence)
        .sub_check("intertwining_residual", intertwining, tol.correspondence))
}

/// The zonal function of degree `2j` on the sphere, read on SO(n+1) through
/// its trivial SO(n)- and O(n)-types, against the projective zonal function
/// of degree `j`.
pub fn check_zonal_on_group(n: usize, j: u32, cfg: &CheckConfig) -> Result<Report> {
    let tau = match n {
        2 => so3_irrep(2 * j),
        3 => so4_irrep(2 * j as i64, 0)?,
        _ => return Err(LabError::UnsupportedGroup(format!("zonal check for n = {n}"))),
    };
    let band = cfg.band_for(&tau);
    let rule_so = haar_rule(CompactGroup::special(n)?, band);
    let rule_o = haar_rule(CompactGroup::orthogonal(n)?, band);
    let phi_so = cfg.spherical(&tau, &KType::So(HighestWeight::trivial(n)?), &rule_so)?;
    let phi_o = cfg.spherical(&tau, &KType::o(OType::trivial(n)?), &rule_o)?;
    let params = ZonalParams::new(Space::Projective, n)?;
    let points = samples(n, cfg)?;
    let residual = max_over(cfg.exec, &points, |g| {
        let v = phi_so.eval(g)?[(0, 0)];
        let w = phi_o.eval(g)?[(0, 0)];
        let theta = projective_angle(geodesic_angle(g)?)?;
        let z = C64::new(zonal(&params, j, theta)?, 0.0);
        Ok((v - z).norm().max((v - w).norm()))
    })?;
    Ok(Report::new("zonal_on_group", n, residual, cfg.tolerances.zonal_group)
        .tau(tau.label())
        .delta(HighestWeight::trivial(n)?)
        .seed(cfg.seed)
        .quadrature(&rule_o)
        .detail("j", j)
        .detail("samples", points.len()))
}

/// Highest weight of `ρ∘Ad(a)` is the φ-image of that of `ρ`, for the SO(4)
/// irrep `(p, q)`.
pub fn check_theorem_weights(p: i64, q: i64, cfg: &CheckConfig) -> Result<Report> {
    let tol = cfg.tolerances.weight_rounding;
    let rho = so4_irrep(p, q)?;
    let a = coset_representative(4);
    let raw = highest_weight_eigenvalues(&rho)?;
    let raw_t = highest_weight_eigenvalues(&rho.twisted(&a))?;
    let deviation = raw.iter().chain(&raw_t).fold(0.0_f64, |acc, v| acc.max((v - v.round()).abs()));
    let round = |v: &[f64]| -> Result<HighestWeight> { HighestWeight::for_so(4, v.iter().map(|x| x.round() as i64).collect()) };
    let w = round(&raw)?;
    let wt = round(&raw_t)?;
    let label = HighestWeight::for_so(4, vec![p, q])?;
    Ok(Report::new("weights", 4, deviation, tol)
        .tau(&label)
        .seed(cfg.seed)
        .detail("extracted", w.to_string())
        .detail("extracted_twisted", wt.to_string())
        .require("label_match", w == label)
        .require("phi_match", wt == phi_action(&w)?)
        .detail("raw", json!(raw))
        .detail("raw_twisted", json!(raw_t)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(n: usize, e: &[i64]) -> HighestWeight {
        HighestWeight::for_so(n, e.to_vec()).unwrap()
    }

    #[test]
    fn random_unitary_is_unitary() {
        for r in 1..=5 {
            assert!(unitarity_defect(&random_unitary(r, r as u64)) < 1e-13);
        }
    }

    #[test]
    fn admissible_types_n2() {
        let (so, o) = admissible_ktypes(&w(3, &[2])).unwrap();
        assert_eq!(so.len(), 5);
        // (0) gives two self-conjugate types, (1) and (2) one doubled type each.
        assert_eq!(o.len(), 4);
    }

    #[test]
    fn admissible_types_n3() {
        let (so, o) = admissible_ktypes(&w(4, &[2, -1])).unwrap();
        assert_eq!(so.len(), 2);
        assert_eq!(o.len(), 4);
    }

    #[test]
    fn par_examples() {
        let cfg = CheckConfig { samples: 5, ..Default::default() };
        for (t, p) in [([1, 0], 0), ([1, 1], 1), ([0, 0], 0)] {
            let r = check_theorem_par(&w(4, &t), &w(3, &[p]), &cfg).unwrap();
            assert!(r.verdict, "{r:?}");
        }
        let r = check_theorem_par(&w(4, &[0, 0]), &w(3, &[0]), &cfg).unwrap();
        assert!(r.residual < 1e-13);
        assert!(matches!(
            check_theorem_par(&w(4, &[1, 0]), &w(3, &[2]), &cfg),
            Err(LabError::NotContained(_))
        ));
    }

    #[test]
    fn impar_examples() {
        let cfg = CheckConfig { samples: 5, ..Default::default() };
        for (l, a) in [(0, 1.0), (1, -1.0), (2, 1.0)] {
            let r = check_theorem_impar(l, &cfg).unwrap();
            assert!(r.verdict && r.residual < 1e-9, "{r:?}");
            assert!((r.details["A"].as_f64().unwrap() - a).abs() < 1e-9);
        }
    }

    #[test]
    fn matrix_examples() {
        let cfg = CheckConfig { samples: 5, ..Default::default() };
        for (l, m) in [(1, 1), (3, 2)] {
            let r = check_theorem_matrix(l, m, &cfg).unwrap();
            assert!(r.verdict, "{r:?}");
        }
        assert!(check_theorem_matrix(2, 0, &cfg).is_err());
    }

    #[test]
    fn zonal_on_group_examples() {
        let cfg = CheckConfig { samples: 20, ..Default::default() };
        assert!(check_zonal_on_group(2, 0, &cfg).unwrap().residual < 1e-12);
        assert!(check_zonal_on_group(2, 1, &cfg).unwrap().residual < 1e-9);
        assert!(check_zonal_on_group(3, 2, &cfg).unwrap().residual < 1e-8);
    }

    #[test]
    fn weights_examples() {
        for (p, q) in [(1, 1), (2, 1), (2, -2)] {
            assert!(check_theorem_weights(p, q, &CheckConfig::default()).unwrap().verdict);
        }
    }

    #[test]
    fn basis_rotation_does_not_change_verdicts() {
        let base = CheckConfig { samples: 5, ..Default::default() };
        for seed in [11, 12] {
            let rot = CheckConfig { basis_rotation: Some(seed), ..base.clone() };
            let a = check_theorem_par(&w(4, &[2, 1]), &w(3, &[1]), &base).unwrap();
            let b = check_theorem_par(&w(4, &[2, 1]), &w(3, &[1]), &rot).unwrap();
            assert_eq!(a.verdict, b.verdict);
            let a = check_theorem_matrix(3, 2, &base).unwrap();
            let b = check_theorem_matrix(3, 2, &rot).unwrap();
            assert_eq!(a.verdict, b.verdict);
            let a = check_functional_equation(&so3_irrep(3), &KType::So(w(2, &[1])), &base).unwrap();
            let b = check_functional_equation(&so3_irrep(3), &KType::So(w(2, &[1])), &rot).unwrap();
            assert_eq!(a.verdict, b.verdict);
        }
    }

    #[test]
    fn sweep_small() {
        let cfg = CheckConfig { samples: 3, ..Default::default() };
        let reports = functional_equation_sweep(2, 2, &cfg).unwrap();
        assert!(reports.iter().all(|r| r.verdict), "{reports:?}");
        // τ = (0), (1), (2): SO(2)-types 1 + 3 + 5, O(2)-types 1 + 2 + 3.
        assert_eq!(reports.len(), 15);
    }
}
