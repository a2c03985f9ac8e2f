//! Minimal algebraic traits shared by the exact matrix routines.

use std::fmt::Debug;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

/// A commutative ring with identity whose elements are cheap enough to clone.
pub trait Ring:
    Clone
    + PartialEq
    + Debug
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
{
}

impl<T> Ring for T where
    T: Clone
        + PartialEq
        + Debug
        + Zero
        + One
        + Add<Output = T>
        + Sub<Output = T>
        + Mul<Output = T>
        + Neg<Output = T>
{
}

/// An integral domain in which exact quotients can be recovered.
pub trait ExactDiv: Ring {
    /// Returns `q` with `q * divisor == self`, or `None` if no such `q` exists.
    fn div_exact(&self, divisor: &Self) -> Option<Self>;
}

pub trait Field: ExactDiv {
    fn inv(&self) -> Option<Self>;
}

impl ExactDiv for BigInt {
    fn div_exact(&self, divisor: &Self) -> Option<Self> {
        if divisor.is_zero() {
            return None;
        }
        let (q, r) = self.div_rem(divisor);
        r.is_zero().then_some(q)
    }
}
