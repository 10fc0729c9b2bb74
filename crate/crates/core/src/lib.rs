//! Numerical laboratory for matrix-valued spherical functions of the pairs
//! (SO(n+1), SO(n)) and (SO(n+1), O(n)).
//!
//! The crate builds explicit unitary irreducible representations of the
//! rotation groups that appear for desk-scale `n` (SO(2), SO(3), SO(4) and the
//! orthogonal groups O(2), O(3)), projects them onto K-isotypic components with
//! Haar quadrature, and evaluates the resulting spherical functions. On top of
//! that sit verifiers for the correspondence between spherical functions of the
//! sphere `S^n` and of the real projective space `P^n(R)`, and for the Jacobi
//! identity relating their zonal functions.
//!
//! Module map:
//!
//! * [`group`]: group elements, Lie algebra basis, exponentials, Euler angles,
//!   quaternion lifts and Haar quadrature rules.
//! * [`weights`]: exact highest-weight bookkeeping and the SO(n) → O(n) type
//!   catalog.
//! * [`jacobi`]: Pochhammer symbols, Jacobi polynomials and zonal functions.
//! * [`reps`]: unitary representations, characters, differentiated
//!   representations and numerical highest-weight extraction.
//! * [`spherical`]: projectors, spherical functions and the theorem checks.

pub mod config;
pub mod error;
pub mod exec;
pub mod group;
pub mod jacobi;
pub mod linalg;
pub mod reps;
pub mod spherical;
pub mod weights;

pub use config::Tolerances;
pub use error::{LabError, Result};
pub use exec::Exec;
