//! Parsers for the label, K-type and group-element arguments.

use std::fs;

use spherical_lab::group::{exp_so, so4_from_quaternions, EulerAngles, GroupElement, LieBasisElement, Quaternion};
use spherical_lab::linalg::RMat;
use spherical_lab::reps::KType;
use spherical_lab::weights::{HighestWeight, OType};

fn numbers<T: std::str::FromStr>(s: &str) -> Result<Vec<T>, String> {
    s.trim()
        .trim_start_matches('(')
        .trim_end_matches(')')
        .split(',')
        .map(|x| x.trim().parse::<T>().map_err(|_| format!("cannot parse {x:?} in {s:?}")))
        .collect()
}

/// `2`, `2,1` or `(2,1)` as a weight of SO(n).
pub fn weight(n: usize, s: &str) -> Result<HighestWeight, String> {
    HighestWeight::for_so(n, numbers(s)?).map_err(|e| e.to_string())
}

/// `so:M`, `o:M:triv|eps` (odd n), `o:M:+|-` (even n, last entry 0) or
/// `o:M` (even n, doubled type). A bare label means `so:M`.
pub fn ktype(n: usize, s: &str) -> Result<KType, String> {
    let parts: Vec<&str> = s.split(':').collect();
    let err = |e: spherical_lab::LabError| e.to_string();
    match parts.as_slice() {
        [label] | ["so", label] => Ok(KType::So(weight(n, label)?)),
        ["o", label] => Ok(KType::o(OType::doubled(weight(n, label)?).map_err(err)?)),
        ["o", label, "triv"] => Ok(KType::o(OType::odd_tensor(weight(n, label)?, false).map_err(err)?)),
        ["o", label, "eps"] => Ok(KType::o(OType::odd_tensor(weight(n, label)?, true).map_err(err)?)),
        ["o", label, "+"] => Ok(KType::o(OType::self_conjugate(weight(n, label)?, 1).map_err(err)?)),
        ["o", label, "-"] => Ok(KType::o(OType::self_conjugate(weight(n, label)?, -1).map_err(err)?)),
        _ => Err(format!("unrecognized K-type {s:?}")),
    }
}

/// An element of SO(n+1): `identity`, `euler:a,b,c` (n = 2),
/// `quat:w,x,y,z/w,x,y,z` (n = 3), `angles:θ1,…` (product of
/// `exp(θ_i I_ki)` over the basis ordered by `(k, i)`) or `file:PATH`
/// (whitespace-separated entries, row-major).
pub fn element(n: usize, s: &str) -> Result<GroupElement, String> {
    let dim = n + 1;
    let (kind, rest) = s.split_once(':').unwrap_or((s, ""));
    let g = match kind {
        "identity" => GroupElement::identity(dim),
        "euler" if dim == 3 => {
            let v: Vec<f64> = numbers(rest)?;
            let [a, b, c] = v[..] else { return Err("euler needs three angles".into()) };
            EulerAngles::new(a, b, c).to_element()
        }
        "quat" if dim == 4 => {
            let (l, r) = rest.split_once('/').ok_or("quat needs two quaternions separated by '/'")?;
            let q = |t: &str| -> Result<Quaternion, String> {
                let v: Vec<f64> = numbers(t)?;
                let [w, x, y, z] = v[..] else { return Err("a quaternion has four entries".into()) };
                let q = Quaternion::new(w, x, y, z);
                if q.norm() < 1e-12 {
                    return Err("zero quaternion".into());
                }
                Ok(q.normalize())
            };
            so4_from_quaternions(q(l)?, q(r)?)
        }
        "angles" => {
            let v: Vec<f64> = numbers(rest)?;
            let basis = LieBasisElement::basis(dim);
            if v.len() != basis.len() {
                return Err(format!("angles needs {} values for SO({dim})", basis.len()));
            }
            let mut g = GroupElement::identity(dim);
            for (t, x) in v.iter().zip(&basis) {
                g = g.compose(&exp_so(&(x.matrix() * *t)).map_err(|e| e.to_string())?);
            }
            g
        }
        "file" => {
            let text = fs::read_to_string(rest).map_err(|e| format!("{rest}: {e}"))?;
            let v: Vec<f64> = text
                .split_whitespace()
                .map(|x| x.parse().map_err(|_| format!("bad number {x:?} in {rest}")))
                .collect::<Result<_, String>>()?;
            if v.len() != dim * dim {
                return Err(format!("{rest} holds {} numbers, expected {}", v.len(), dim * dim));
            }
            GroupElement::new(RMat::from_row_slice(dim, dim, &v)).map_err(|e| e.to_string())?
        }
        _ => return Err(format!("unrecognized group element {s:?} for SO({dim})")),
    };
    if !g.is_special() {
        return Err("the element must have determinant +1".into());
    }
    Ok(g)
}

/// `NAME=V`.
pub fn tolerance(s: &str) -> Result<(String, f64), String> {
    let (name, value) = s.split_once('=').ok_or_else(|| format!("expected NAME=V, got {s:?}"))?;
    let v: f64 = value.parse().map_err(|_| format!("bad tolerance value {value:?}"))?;
    Ok((name.to_string(), v))
}
