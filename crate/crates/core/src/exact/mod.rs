//! Exact scalar arithmetic and exact dense/streaming linear algebra.
//!
//! Scalars are arbitrary-precision rationals ([`Rational`]) and elements of
//! cyclotomic fields ℚ(ζ_m) ([`Cyclotomic`]); both implement the [`Field`]
//! trait consumed by the solvers.  Dense matrices cover the small systems;
//! the [`reducer`] module streams sparse rows one at a time so that the large
//! tensor-square constraint systems never materialize in memory.

pub mod cyclotomic;
pub mod matrix;
pub mod rational;
pub mod reducer;
pub mod scalar;

pub use cyclotomic::Cyclotomic;
pub use matrix::{span_membership, LinearSolution, Matrix};
pub use rational::{parse_rational, rat, Rational};
pub use reducer::{RowReducer, SpanSolver, SparseVec};
pub use scalar::Field;
