//! Acceptance gate: one PASS/FAIL line per criterion, non-zero exit on any
//! failure.

use std::f64::consts::PI;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use spherical_lab::group::{
    coset_representative, haar_rule, CompactGroup, GroupElement, QuadratureRule, SampleSet,
};
use spherical_lab::jacobi::{check_identity_a, check_zonal_correspondence};
use spherical_lab::linalg::{max_abs, unitarity_defect, C64};
use spherical_lab::reps::{o_type_rep, so2_irrep, so3_irrep, so4_irrep, Character, KType, UnitaryRep};
use spherical_lab::spherical::{
    admissible_ktypes, check_theorem_impar, check_theorem_matrix, check_theorem_par, check_theorem_weights,
    check_zonal_on_group, default_band, functional_equation_sweep, projector, tau_for_label, CheckConfig, Report,
};
use spherical_lab::weights::{branching_contains, o_types_from_so_type, HighestWeight};
use spherical_lab::{Exec, Result};

struct Outcome {
    pass: bool,
    summary: String,
}

fn worst(reports: &[Report]) -> (bool, f64, usize) {
    let pass = reports.iter().all(|r| r.verdict);
    let residual = reports.iter().fold(0.0_f64, |acc, r| acc.max(r.residual));
    let failed = reports.iter().filter(|r| !r.verdict).count();
    (pass, residual, failed)
}

fn w(n: usize, e: &[i64]) -> HighestWeight {
    HighestWeight::for_so(n, e.to_vec()).unwrap()
}

fn jacobi_identity() -> Result<Outcome> {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let mut max: f64 = 0.0;
    for k in 0..=20 {
        for alpha in [0.0, 0.5, 1.0, 1.5] {
            for _ in 0..50 {
                let x: f64 = rng.random_range(-1.0..=1.0);
                max = max.max(check_identity_a(k, alpha, x)?);
            }
        }
    }
    Ok(Outcome { pass: max < 1e-10, summary: format!("max residual {max:.2e} (tol 1e-10)") })
}

fn zonal_correspondence() -> Result<Outcome> {
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    let mut scalar: f64 = 0.0;
    for n in [2, 3] {
        for j in 0..=10 {
            for _ in 0..100 {
                let theta: f64 = rng.random_range(0.0..=PI);
                scalar = scalar.max(check_zonal_correspondence(n, j, theta)?);
            }
        }
    }
    let cfg = CheckConfig { samples: 20, ..Default::default() };
    let mut reports = Vec::new();
    for n in [2, 3] {
        for j in 0..=4 {
            reports.push(check_zonal_on_group(n, j, &cfg)?);
        }
    }
    let (group_pass, group, _) = worst(&reports);
    Ok(Outcome {
        pass: scalar < 1e-10 && group_pass,
        summary: format!("scalar {scalar:.2e} (tol 1e-10), group {group:.2e} (tol 1e-8)"),
    })
}

fn functional_equation() -> Result<Outcome> {
    let cfg = CheckConfig::default();
    let mut reports = functional_equation_sweep(2, 4, &cfg)?;
    reports.extend(functional_equation_sweep(3, 3, &cfg)?);
    let (pass, residual, failed) = worst(&reports);
    let so = reports.iter().filter(|r| r.quadrature.as_ref().is_some_and(|q| q.group.starts_with("SO"))).count();
    Ok(Outcome {
        pass,
        summary: format!(
            "{} functions ({} SO-types, {} O-types), {} pairs each, max residual {residual:.2e} (tol 1e-8), {failed} failed",
            reports.len(),
            so,
            reports.len() - so,
            cfg.samples
        ),
    })
}

fn theorem_par() -> Result<Outcome> {
    let cfg = CheckConfig::default();
    let mut reports = Vec::new();
    for p in 0..=3i64 {
        for q in -p..=p {
            let tau = w(4, &[p, q]);
            for j in 0..=p {
                let pi = w(3, &[j]);
                if branching_contains(&tau, &pi)? {
                    reports.push(check_theorem_par(&tau, &pi, &cfg)?);
                }
            }
        }
    }
    let (pass, residual, failed) = worst(&reports);
    let sign = reports.iter().fold(0.0_f64, |acc, r| acc.max(r.details["sign_defect"]["residual"].as_f64().unwrap()));
    Ok(Outcome {
        pass,
        summary: format!(
            "{} pairs, max |Φ(−I) ∓ I| {sign:.2e}, max Φ residual {residual:.2e} (tol 1e-8), {failed} failed",
            reports.len()
        ),
    })
}

fn theorem_impar() -> Result<Outcome> {
    let cfg = CheckConfig::default();
    let reports: Vec<Report> = (0..=6).map(|l| check_theorem_impar(l, &cfg)).collect::<Result<_>>()?;
    let (pass, residual, failed) = worst(&reports);
    let inv = reports
        .iter()
        .fold(0.0_f64, |acc, r| acc.max(r.details["involution_defect"]["residual"].as_f64().unwrap()));
    let signs: Vec<String> = reports.iter().map(|r| format!("{:+}", r.details["A"].as_f64().unwrap().round())).collect();
    Ok(Outcome {
        pass,
        summary: format!(
            "ℓ=0..6, A = [{}], max |A²−I| {inv:.2e} (tol 1e-9), max Φ residual {residual:.2e} (tol 1e-8), {failed} failed",
            signs.join(",")
        ),
    })
}

fn theorem_matrix() -> Result<Outcome> {
    let cfg = CheckConfig::default();
    let mut reports = Vec::new();
    for l in 1..=6u32 {
        for m in 1..=l as i64 {
            reports.push(check_theorem_matrix(l, m, &cfg)?);
        }
    }
    let (pass, residual, failed) = worst(&reports);
    let ranks_ok = reports.iter().all(|r| r.details["rank"].as_u64() == Some(2));
    Ok(Outcome {
        pass: pass && ranks_ok,
        summary: format!(
            "{} pairs, rank(P_γ)=2 for all: {ranks_ok}, max block residual {residual:.2e} (tol 1e-8), {failed} failed",
            reports.len()
        ),
    })
}

fn theorem_weights() -> Result<Outcome> {
    let cfg = CheckConfig::default();
    let mut reports = Vec::new();
    for p in 1..=2i64 {
        for q in (-p..=p).filter(|q| *q != 0) {
            reports.push(check_theorem_weights(p, q, &cfg)?);
        }
    }
    let (pass, residual, failed) = worst(&reports);
    Ok(Outcome {
        pass,
        summary: format!(
            "{} labels, max distance to integers {residual:.2e} (tol 1e-6), {failed} mismatches",
            reports.len()
        ),
    })
}

fn schur(rule: &QuadratureRule, chars: &[Character]) -> Result<f64> {
    let vals: Vec<Vec<C64>> = chars
        .iter()
        .map(|c| rule.nodes().iter().map(|k| c.xi(k)).collect::<Result<_>>())
        .collect::<Result<_>>()?;
    let mut max: f64 = 0.0;
    for i in 0..chars.len() {
        for j in 0..chars.len() {
            let s: C64 = rule.weights().iter().enumerate().map(|(q, w)| vals[i][q] * vals[j][q].conj() * *w).sum();
            let expect = if i == j { 1.0 } else { 0.0 };
            max = max.max((s - expect).norm());
        }
    }
    Ok(max)
}

fn rep_defects(rep: &UnitaryRep, gs: &[GroupElement], hs: &[GroupElement]) -> Result<f64> {
    let mut max: f64 = 0.0;
    for (g, h) in gs.iter().zip(hs) {
        let rg = rep.eval(g)?;
        let lhs = &rg * rep.eval(h)?;
        max = max.max(max_abs(&(lhs - rep.eval(&g.compose(h))?))).max(unitarity_defect(&rg));
    }
    Ok(max)
}

fn infrastructure() -> Result<Outcome> {
    // Projectors for every τ and every K-type built from its branching.
    let mut proj: f64 = 0.0;
    let mut count = 0;
    let taus: Vec<HighestWeight> =
        (0..=4).map(|l| w(3, &[l])).chain((0..=3i64).flat_map(|p| (-p..=p).map(move |q| w(4, &[p, q])))).collect();
    for tau_w in &taus {
        let n = tau_w.group_n() - 1;
        let tau = tau_for_label(n, tau_w)?;
        let band = default_band(&tau);
        let (so, o) = admissible_ktypes(tau_w)?;
        for delta in so.iter().chain(&o) {
            let group = match delta {
                KType::So(_) => CompactGroup::special(n)?,
                KType::O { .. } => CompactGroup::orthogonal(n)?,
            };
            let c = projector(&tau, delta, &haar_rule(group, band), Exec::default())?;
            proj = proj.max(c.idempotence_defect()).max(c.adjoint_defect());
            count += 1;
        }
    }

    // Schur orthogonality of characters up to the band.
    let band = 6;
    let mut schur_max: f64 = 0.0;
    let so2: Vec<Character> = (-(band as i64)..=band as i64).map(|m| Character::new(so2_irrep(m))).collect();
    schur_max = schur_max.max(schur(&haar_rule(CompactGroup::SO2, band), &so2)?);
    let so3: Vec<Character> = (0..=band as u32).map(|l| Character::new(so3_irrep(l))).collect();
    schur_max = schur_max.max(schur(&haar_rule(CompactGroup::SO3, band), &so3)?);
    for n in [2, 3] {
        let mut chars = Vec::new();
        for m in 0..=band as i64 / 2 {
            for t in o_types_from_so_type(&w(n, &[m]))? {
                chars.push(Character::new(o_type_rep(&t, None)?));
            }
        }
        schur_max = schur_max.max(schur(&haar_rule(CompactGroup::orthogonal(n)?, band), &chars)?);
    }

    // Homomorphism and unitarity over 100 random pairs.
    let mut hom: f64 = 0.0;
    let pairs = |dim: usize, seed: u64| -> Result<(Vec<GroupElement>, Vec<GroupElement>)> {
        Ok((SampleSet::random_only(dim, 100, seed)?, SampleSet::random_only(dim, 100, seed + 1)?))
    };
    let (g2, h2) = pairs(2, 10)?;
    for m in -4..=4 {
        hom = hom.max(rep_defects(&so2_irrep(m), &g2, &h2)?);
    }
    let (g3, h3) = pairs(3, 20)?;
    for l in 0..=6 {
        hom = hom.max(rep_defects(&so3_irrep(l), &g3, &h3)?);
    }
    let (g4, h4) = pairs(4, 30)?;
    for p in 0..=3i64 {
        for q in -p..=p {
            hom = hom.max(rep_defects(&so4_irrep(p, q)?, &g4, &h4)?);
        }
    }
    for n in [2usize, 3] {
        let a = coset_representative(n);
        let (gs, hs) = pairs(n, 40 + n as u64)?;
        let flip = |v: Vec<GroupElement>| -> Vec<GroupElement> {
            v.into_iter().enumerate().map(|(i, g)| if i % 2 == 0 { g.compose(&a) } else { g }).collect()
        };
        let (gs, hs) = (flip(gs), flip(hs));
        for m in 0..=3 {
            for t in o_types_from_so_type(&w(n, &[m]))? {
                hom = hom.max(rep_defects(&o_type_rep(&t, None)?, &gs, &hs)?);
            }
        }
    }

    // Determinism: repeated runs and both execution modes give identical JSON.
    let run = |exec: Exec| -> Result<String> {
        let cfg = CheckConfig { exec, ..Default::default() };
        let mut out = serde_json::to_string(&check_theorem_par(&w(4, &[3, 1]), &w(3, &[2]), &cfg)?).unwrap();
        out += &serde_json::to_string(&check_theorem_matrix(4, 3, &cfg)?).unwrap();
        out += &serde_json::to_string(&functional_equation_sweep(3, 1, &cfg)?).unwrap();
        Ok(out)
    };
    let first = run(Exec::Parallel)?;
    let deterministic = first == run(Exec::Parallel)? && first == run(Exec::Sequential)?;

    Ok(Outcome {
        pass: proj < 1e-9 && schur_max < 1e-11 && hom < 1e-10 && deterministic,
        summary: format!(
            "projectors ({count}) {proj:.2e} (tol 1e-9), Schur {schur_max:.2e} (tol 1e-11), \
             hom/unitarity {hom:.2e} (tol 1e-10), deterministic: {deterministic}"
        ),
    })
}

type Criterion = (&'static str, fn() -> Result<Outcome>, Option<Duration>);

fn main() -> ExitCode {
    let criteria: [Criterion; 8] = [
        ("1 Jacobi identity", jacobi_identity, Some(Duration::from_secs(1))),
        ("2 zonal correspondence", zonal_correspondence, Some(Duration::from_secs(30))),
        ("3 functional equation", functional_equation, Some(Duration::from_secs(300))),
        ("4 theorem par", theorem_par, None),
        ("5 theorem impar", theorem_impar, None),
        ("6 theorem matrix", theorem_matrix, None),
        ("7 theorem weights", theorem_weights, None),
        ("8 infrastructure", infrastructure, None),
    ];
    let start = Instant::now();
    let mut all = true;
    for (name, run, limit) in criteria {
        let t = Instant::now();
        let outcome = run();
        let elapsed = t.elapsed();
        let in_time = limit.is_none_or(|l| elapsed <= l);
        let (pass, summary) = match outcome {
            Ok(o) => (o.pass && in_time, o.summary),
            Err(e) => (false, format!("error: {e}")),
        };
        let budget = limit.map(|l| format!(", limit {} s", l.as_secs())).unwrap_or_default();
        println!(
            "[{}] {name}: {summary} ({:.2} s{budget})",
            if pass { "PASS" } else { "FAIL" },
            elapsed.as_secs_f64()
        );
        all &= pass;
    }
    let total = start.elapsed();
    let in_budget = total <= Duration::from_secs(600);
    println!(
        "[{}] total runtime {:.2} s (limit 600 s)",
        if in_budget { "PASS" } else { "FAIL" },
        total.as_secs_f64()
    );
    if all && in_budget {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
