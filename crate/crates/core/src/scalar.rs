//! Scalar trait bounds for the generic polynomial and rational-function types.

use num_traits::{One, Zero};
use std::ops::{Add, Div, Mul, Neg, Sub};

/// Commutative ring scalar: enough for polynomial addition, multiplication
/// and evaluation.
pub trait RingScalar:
    Clone
    + PartialEq
    + Zero
    + One
    + Neg<Output = Self>
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
{
}

impl<T> RingScalar for T where
    T: Clone
        + PartialEq
        + Zero
        + One
        + Neg<Output = Self>
        + Add<Output = Self>
        + Sub<Output = Self>
        + Mul<Output = Self>
{
}

/// Field scalar: adds exact division, enabling polynomial division with
/// remainder, gcd and canonical normalisation.
pub trait FieldScalar: RingScalar + Div<Output = Self> {
    /// Multiplicative inverse.  Panics on zero.
    fn inv(&self) -> Self {
        Self::one() / self.clone()
    }
}

impl<T> FieldScalar for T where T: RingScalar + Div<Output = Self> {}
