//! Finite permutation groups at desk scale.
//!
//! Groups are stored as full element lists (no stabilizer chains): the order
//! cap keeps enumeration cheap and makes every downstream question — classes,
//! cosets, double cosets, normality, the subgroup lattice — a direct scan.

mod builders;
mod group;
mod permutation;
mod subgroups;

pub use builders::*;
pub use group::{ConjugacyClass, GroupError, PermGroup, DEFAULT_ORDER_CAP};
pub use permutation::Permutation;
pub use subgroups::{
    double_coset_representatives, enumerate_subgroups, small_generating_set,
    subgroup_conjugacy_classes, SubgroupEmbedding,
};
