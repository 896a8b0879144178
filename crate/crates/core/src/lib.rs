//! Exact-arithmetic workbench for finite-dimensional ring extensions.
//!
//! The crate decides depth-two, separability, H-separability, split and
//! Frobenius properties of a unital extension `B ⊆ A` of finite-dimensional
//! algebras, entirely over exact scalars (arbitrary-precision rationals and
//! cyclotomic numbers).  Two independent routes are provided for group-algebra
//! extensions and cross-checked against each other:
//!
//! * a character-theoretic route ([`characters`], [`depth2`]) built on exact
//!   character tables, induction/restriction and the multiplicity criterion
//!   for depth two, and
//! * a structure-constant route ([`algebras`], [`frobenius`]) that works in
//!   the tensor-square `A ⊗_B A` and its distinguished subspaces.
//!
//! Everything is deterministic: fixed basis orders, fixed pivot rules, no
//! floating point anywhere.

pub mod algebras;
pub mod characters;
pub mod depth2;
pub mod exact;
pub mod frobenius;
pub mod io;
pub mod perm;
pub mod report;

pub use exact::{Cyclotomic, Field, Matrix, Rational};
pub use perm::{PermGroup, Permutation, SubgroupEmbedding};
