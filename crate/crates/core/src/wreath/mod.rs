//! Wreath products `G ≀ S_n = S_n ⋉ Gⁿ` of a finite group with a symmetric
//! group, their actions, and the counting behind the top Betti number.

mod action;
mod counting;
mod element;
mod group;
mod perm;

pub use action::{
    basepoint, conjugation_check, is_transitive, orbit, stabilizer, ConjugationReport,
    StabilizerReport,
};
pub use counting::{
    derangement_formula, fixed_point_free_count, intersection_count, intersection_count_check,
    label_condition_count, IntersectionCount, DEFAULT_BUDGET,
};
pub use element::{elements, group_order, WreathElement};
pub use group::{FiniteGroup, GroupDocument};
pub use perm::Permutation;
