//! Spin-`j` representations of SU(2) on homogeneous polynomials.

use crate::linalg::{CMat, C64};

fn factorial(n: u32) -> f64 {
    (1..=n).fold(1.0, |acc, k| acc * k as f64)
}

fn binomial(n: u32, k: u32) -> f64 {
    if k > n {
        0.0
    } else {
        factorial(n) / (factorial(k) * factorial(n - k))
    }
}

/// `D^j(U)` for `U = [[α, β], [γ, δ]] ∈ SU(2)`, `two_j = 2j`.
///
/// The basis is `f_a = x^a y^{2j-a} / √(a!(2j-a)!)`, `a = 0..=2j`
/// (magnetic number `m = a - j`), acted on by `(U·f)(v) = f(Uᵀ v)`. This is
/// a unitary homomorphism.
pub fn spin_matrix(two_j: u32, u: &CMat) -> CMat {
    let (al, be, ga, de) = (u[(0, 0)], u[(0, 1)], u[(1, 0)], u[(1, 1)]);
    let d = two_j as usize + 1;
    let tj = two_j as i64;
    let norm: Vec<f64> = (0..=two_j).map(|a| (factorial(a) * factorial(two_j - a)).sqrt()).collect();
    let pow = |z: C64, e: i64| -> C64 {
        if e == 0 {
            C64::new(1.0, 0.0)
        } else {
            z.powi(e as i32)
        }
    };
    CMat::from_fn(d, d, |b, a| {
        let (a, b) = (a as i64, b as i64);
        let lo = 0.max(a + b - tj);
        let hi = a.min(b);
        let mut sum = C64::new(0.0, 0.0);
        for s in lo..=hi {
            let c = binomial(a as u32, s as u32) * binomial((tj - a) as u32, (b - s) as u32);
            sum += pow(al, s) * pow(be, b - s) * pow(ga, a - s) * pow(de, s + tj - a - b) * c;
        }
        sum * (norm[b as usize] / norm[a as usize])
    })
}
