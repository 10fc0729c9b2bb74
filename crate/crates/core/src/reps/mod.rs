//! Explicit unitary representations of SO(2), SO(3), SO(4) and of the O(n)
//! types built from them, together with characters, differentiated
//! representations and numerical highest-weight extraction.

mod character;
mod differentiate;
mod highest_weight;
mod so3;
mod spin;
mod unitary;

pub use character::{o_type_character, o_type_rep, Character, KType};
pub use differentiate::{differentiate, DifferentiatedRep, FD_STEP};
pub use highest_weight::{highest_weight_eigenvalues, highest_weight_extract};
pub use spin::spin_matrix;
pub use unitary::{
    defining_rep, irrep_for_weight, so2_irrep, so3_irrep, so4_irrep, GroupTag, RepLabel, UnitaryRep,
};
