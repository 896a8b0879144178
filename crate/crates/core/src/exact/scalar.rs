//! The exact field abstraction shared by all solvers.

use std::fmt;
use std::ops::{Div, Neg, Sub};

use num_traits::{One, Zero};

/// An exact field: the scalar type of every matrix and subspace computation.
///
/// `Zero`/`One` bring owned `+` and `*`; division must be exact (these are
/// fields, not rings).  `entry_size` is a cheap measure of representation
/// size used by the dense eliminator to pick pivots that limit entry growth.
pub trait Field:
    Clone
    + PartialEq
    + fmt::Debug
    + fmt::Display
    + Send
    + Sync
    + 'static
    + Zero
    + One
    + Neg<Output = Self>
    + Sub<Output = Self>
    + Div<Output = Self>
{
    fn from_integer(n: i64) -> Self;

    /// Size heuristic for pivot selection; anything monotone in the bit
    /// length of the representation works.
    fn entry_size(&self) -> usize;

    fn inv(&self) -> Self {
        assert!(!self.is_zero(), "inverse of zero");
        Self::one() / self.clone()
    }
}
