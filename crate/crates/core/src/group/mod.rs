//! Orthogonal groups: elements, the Lie algebra basis `I_{ki}`, exponentials,
//! Euler angles for SO(3), quaternion lifts for SO(4), Haar quadrature on the
//! compact subgroups K ∈ {SO(2), SO(3), O(2), O(3)} and the sphere geometry
//! (geodesic and projective angles).
//!
//! Conventions used throughout the crate:
//!
//! * The origin of the sphere `S^n ⊂ R^{n+1}` is the last basis vector, and
//!   K is embedded in G = SO(n+1) as the top-left block.
//! * SO(3) Euler angles are `Z(α) Y(β) Z(γ)` with active rotations about the
//!   coordinate axes; the Haar measure is `sin β dα dβ dγ / 8π²`.
//! * A rotation of SO(2) "by angle t" means `exp(t·I_{21})`.

mod element;
mod euler;
mod lie;
mod quadrature;
mod quaternion;
mod sampling;
mod sphere;

pub use element::GroupElement;
pub use euler::{rot_y, rot_z, EulerAngles};
pub use lie::{exp_so, positive_roots, LieBasisElement, RootSign, RootVector};
pub use quadrature::{gauss_legendre, haar_rule, CompactGroup, QuadratureRule};
pub use quaternion::{lift_so4, so4_from_quaternions, Quaternion};
pub use sampling::{random_element, SampleSet};
pub use sphere::{coset_representative, embed_k_in_g, geodesic_angle, projective_angle};
