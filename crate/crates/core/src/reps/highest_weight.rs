use crate::config::Tolerances;
use crate::error::{LabError, Result};
use crate::group::{positive_roots, LieBasisElement};
use crate::linalg::{CMat, C64, I};
use crate::reps::{differentiate, GroupTag, UnitaryRep};
use crate::weights::HighestWeight;

/// Threshold on singular values for the common kernel of the raising operators.
const KERNEL_TOL: f64 = 1e-6;

/// Joint eigenvalues of `dρ(i·I_{2j,2j-1})`, `j = 1..=ℓ`, on the highest
/// weight vector of an irreducible representation of SO(2ℓ).
///
/// The highest weight vector spans the common kernel of `dρ(X_α)` over the
/// positive roots `ε_j ± ε_k`.
pub fn highest_weight_eigenvalues(rep: &UnitaryRep) -> Result<Vec<f64>> {
    let n = match rep.group() {
        GroupTag::SO(n) if n % 2 == 0 && n >= 2 => n,
        g => return Err(LabError::UnsupportedGroup(format!("highest weights on {g}"))),
    };
    let rank = n / 2;
    let d = rep.dim();
    let diff = differentiate(rep);
    let roots = positive_roots(rank);
    let rows = (roots.len() * d).max(d);
    let mut stacked = CMat::zeros(rows, d);
    for (r, root) in roots.iter().enumerate() {
        let m = diff.eval(&root.matrix())?;
        stacked.view_mut((r * d, 0), (d, d)).copy_from(&m);
    }
    let svd = stacked.svd(false, true);
    let v_t = svd.v_t.expect("requested right singular vectors");
    let kernel: Vec<usize> = (0..d).filter(|&i| svd.singular_values[i] < KERNEL_TOL).collect();
    let v = match kernel.as_slice() {
        [] => return Err(LabError::Reducible("no common kernel vector for the raising operators".into())),
        [i] => v_t.row(*i).adjoint(),
        _ => {
            return Err(LabError::Multiplicity(format!(
                "raising operators have a {}-dimensional common kernel",
                kernel.len()
            )))
        }
    };
    (1..=rank)
        .map(|j| {
            let h = LieBasisElement::new(2 * j, 2 * j - 1, n)?.matrix();
            let hv = diff.eval_real(&h)? * I * &v;
            let m: C64 = (v.adjoint() * hv)[(0, 0)];
            Ok(m.re)
        })
        .collect()
}

/// Highest weight of an irreducible representation of SO(2ℓ), with the
/// eigenvalues rounded to integers within `Tolerances::weight_rounding`.
pub fn highest_weight_extract(rep: &UnitaryRep) -> Result<HighestWeight> {
    let tol = Tolerances::default().weight_rounding;
    let values = highest_weight_eigenvalues(rep)?;
    let mut entries = Vec::with_capacity(values.len());
    for (j, m) in values.iter().enumerate() {
        let rounded = m.round();
        if (m - rounded).abs() > tol {
            return Err(LabError::InvalidWeight(format!("non-integral eigenvalue {m} for j = {}", j + 1)));
        }
        entries.push(rounded as i64);
    }
    HighestWeight::for_so(rep.group().n(), entries)
}
