use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;

use crate::error::{LabError, Result};
use crate::group::{coset_representative, embed_k_in_g, so4_from_quaternions, GroupElement, Quaternion};
use crate::linalg::RMat;

fn random_unit_quaternion<R: Rng>(rng: &mut R) -> Quaternion {
    loop {
        let q = Quaternion::new(
            rng.sample(StandardNormal),
            rng.sample(StandardNormal),
            rng.sample(StandardNormal),
            rng.sample(StandardNormal),
        );
        if q.norm() > 1e-6 {
            return q.normalize();
        }
    }
}

/// Haar-distributed element of SO(n) for n ∈ {2, 3, 4}.
pub fn random_element<R: Rng>(n: usize, rng: &mut R) -> Result<GroupElement> {
    match n {
        2 => {
            let t: f64 = rng.random_range(0.0..std::f64::consts::TAU);
            let (s, c) = t.sin_cos();
            Ok(GroupElement::from_parts(RMat::from_row_slice(2, 2, &[c, s, -s, c]), 1))
        }
        3 => Ok(GroupElement::from_parts(random_unit_quaternion(rng).rotation3(), 1)),
        4 => {
            let l = random_unit_quaternion(rng);
            let r = random_unit_quaternion(rng);
            Ok(so4_from_quaternions(l, r))
        }
        _ => Err(LabError::UnsupportedGroup(format!("random sampling on SO({n})"))),
    }
}

/// Deterministic sample of G = SO(n+1): structured points first
/// (identity, the embedded coset representative `a`, and `-I` when it lies
/// in G), then `count` Haar-random elements drawn from `seed`.
#[derive(Clone, Debug)]
pub struct SampleSet {
    pub seed: u64,
    pub points: Vec<GroupElement>,
}

impl SampleSet {
    pub fn new(n: usize, count: usize, seed: u64) -> Result<Self> {
        let g_dim = n + 1;
        let mut points = vec![
            GroupElement::identity(g_dim),
            embed_k_in_g(&coset_representative(n)),
        ];
        if g_dim % 2 == 0 {
            let minus = GroupElement::from_parts(-RMat::identity(g_dim, g_dim), 1);
            if !points.contains(&minus) {
                points.push(minus);
            }
        }
        points.extend(Self::random_only(g_dim, count, seed)?);
        Ok(Self { seed, points })
    }

    /// `count` Haar-random elements of SO(dim).
    pub fn random_only(dim: usize, count: usize, seed: u64) -> Result<Vec<GroupElement>> {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        (0..count).map(|_| random_element(dim, &mut rng)).collect()
    }
}
