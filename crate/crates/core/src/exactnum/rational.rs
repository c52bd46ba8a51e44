//! Ring instances for the integers and the rationals.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::ring::{DiscreteRing, IntegralDomain, Ring, UnitClassify, UnitStatus};

/// Arbitrary-precision rational in lowest terms with a positive denominator.
pub type Rational = BigRational;

pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

impl Ring for BigInt {
    fn zero_like(&self) -> Self {
        BigInt::zero()
    }
    fn one_like(&self) -> Self {
        BigInt::one()
    }
    fn from_int_like(&self, n: i64) -> Self {
        BigInt::from(n)
    }
}

impl DiscreteRing for BigInt {
    fn eq_zero(&self) -> bool {
        Zero::is_zero(self)
    }
}

impl UnitClassify for BigInt {
    fn unit_status(&self) -> UnitStatus<Self> {
        if Zero::is_zero(self) {
            UnitStatus::Zero
        } else if One::is_one(&self.abs()) {
            UnitStatus::Unit(self.clone())
        } else {
            UnitStatus::Neither
        }
    }
}

impl IntegralDomain for BigInt {
    fn divide_exact(&self, d: &Self) -> Self {
        let (q, r) = self.div_rem(d);
        debug_assert!(Zero::is_zero(&r), "inexact integer division");
        q
    }
}

impl Ring for Rational {
    fn zero_like(&self) -> Self {
        Rational::zero()
    }
    fn one_like(&self) -> Self {
        Rational::one()
    }
    fn from_int_like(&self, n: i64) -> Self {
        int(n)
    }
}

impl DiscreteRing for Rational {
    fn eq_zero(&self) -> bool {
        Zero::is_zero(self)
    }
}

impl UnitClassify for Rational {
    fn unit_status(&self) -> UnitStatus<Self> {
        if Zero::is_zero(self) {
            UnitStatus::Zero
        } else {
            UnitStatus::Unit(self.recip())
        }
    }
}

impl IntegralDomain for Rational {
    fn divide_exact(&self, d: &Self) -> Self {
        self / d
    }
}
