//! Coefficient ring abstractions.
//!
//! Elements carry enough context to build their own zero and one, which is
//! what lets `Z_m` (whose modulus lives in the element) share the generic
//! polynomial code with the field-like types.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// A commutative ring with identity.
pub trait Ring:
    Clone + fmt::Debug + Add<Output = Self> + Sub<Output = Self> + Mul<Output = Self> + Neg<Output = Self>
{
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    /// The image of the integer `n` in the ring of `self`.
    fn from_int_like(&self, n: i64) -> Self;
}

/// A ring with decidable equality to zero.
pub trait DiscreteRing: Ring + PartialEq {
    fn eq_zero(&self) -> bool;

    fn eq_one(&self) -> bool {
        *self == self.one_like()
    }
}

/// Outcome of asking whether an element is invertible.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum UnitStatus<R> {
    /// Invertible, with its inverse.
    Unit(R),
    Zero,
    /// Neither zero nor a unit (a zero divisor or a non-unit integer).
    Neither,
}

/// Rings where "unit, zero, or neither" is decidable.
pub trait UnitClassify: DiscreteRing {
    fn unit_status(&self) -> UnitStatus<Self>;
}

/// Integral domains with exact division, used by fraction-free elimination.
pub trait IntegralDomain: DiscreteRing {
    /// `self / d`, assuming `d` divides `self` exactly.
    fn divide_exact(&self, d: &Self) -> Self;
}
