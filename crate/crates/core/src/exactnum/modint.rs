//! Residues modulo a machine-word modulus.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::ring::{DiscreteRing, Ring, UnitClassify, UnitStatus};

/// An element of `Z_m` for `2 <= m < 2^63`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ModInt {
    // field order gives the (modulus, value) ordering
    modulus: u64,
    value: u64,
}

/// Result of [`ModInt::unit_or_zero`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ModClass {
    Unit(ModInt),
    Zero,
    /// A zero divisor; `gcd` is `gcd(value, m)`, strictly between 1 and `m`.
    Neither { gcd: u64 },
}

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

impl ModInt {
    pub fn new(value: i64, modulus: u64) -> Self {
        assert!((2..1 << 63).contains(&modulus), "modulus out of range: {modulus}");
        let v = value.rem_euclid(modulus as i64) as u64;
        ModInt { modulus, value: v }
    }

    pub fn value(&self) -> u64 {
        self.value
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    fn same(&self, value: u64) -> Self {
        ModInt { modulus: self.modulus, value }
    }

    pub fn pow(&self, mut e: u64) -> Self {
        let mut base = *self;
        let mut acc = self.same(1 % self.modulus);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base;
            }
            base = base * base;
            e >>= 1;
        }
        acc
    }

    pub fn inverse(&self) -> Option<Self> {
        // extended Euclid on signed 128-bit values
        let (mut r0, mut r1) = (self.modulus as i128, self.value as i128);
        let (mut t0, mut t1) = (0i128, 1i128);
        while r1 != 0 {
            let q = r0 / r1;
            (r0, r1) = (r1, r0 - q * r1);
            (t0, t1) = (t1, t0 - q * t1);
        }
        if r0 != 1 {
            return None;
        }
        Some(self.same(t0.rem_euclid(self.modulus as i128) as u64))
    }

    /// Decide between unit (with inverse), zero, and zero divisor.
    pub fn unit_or_zero(&self) -> ModClass {
        if self.value == 0 {
            return ModClass::Zero;
        }
        match self.inverse() {
            Some(inv) => ModClass::Unit(inv),
            None => ModClass::Neither { gcd: gcd(self.value, self.modulus) },
        }
    }

    /// Smallest `k >= 1` with `x^k = 0`, if `x` is nilpotent.
    pub fn nilpotency_index(&self) -> Option<u32> {
        // exponents of primes in m are below 64
        let mut acc = *self;
        for k in 1..=64u32 {
            if acc.value == 0 {
                return Some(k);
            }
            acc = acc * *self;
        }
        None
    }

    pub fn is_nilpotent(&self) -> bool {
        self.nilpotency_index().is_some()
    }

    /// True when `d = gcd(d, m)` divides `self` in `Z_m`, i.e. `self` lies in the ideal `(d)`.
    pub fn in_ideal(&self, generator: u64) -> bool {
        let g = gcd(generator, self.modulus);
        self.value % g == 0
    }
}

impl Add for ModInt {
    type Output = ModInt;
    fn add(self, rhs: ModInt) -> ModInt {
        debug_assert_eq!(self.modulus, rhs.modulus);
        self.same(((self.value as u128 + rhs.value as u128) % self.modulus as u128) as u64)
    }
}

impl Sub for ModInt {
    type Output = ModInt;
    fn sub(self, rhs: ModInt) -> ModInt {
        self + (-rhs)
    }
}

impl Mul for ModInt {
    type Output = ModInt;
    fn mul(self, rhs: ModInt) -> ModInt {
        debug_assert_eq!(self.modulus, rhs.modulus);
        self.same(((self.value as u128 * rhs.value as u128) % self.modulus as u128) as u64)
    }
}

impl Neg for ModInt {
    type Output = ModInt;
    fn neg(self) -> ModInt {
        self.same((self.modulus - self.value) % self.modulus)
    }
}

impl fmt::Display for ModInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

impl Ring for ModInt {
    fn zero_like(&self) -> Self {
        self.same(0)
    }
    fn one_like(&self) -> Self {
        self.same(1)
    }
    fn from_int_like(&self, n: i64) -> Self {
        ModInt::new(n, self.modulus)
    }
}

impl DiscreteRing for ModInt {
    fn eq_zero(&self) -> bool {
        self.value == 0
    }
}

impl UnitClassify for ModInt {
    fn unit_status(&self) -> UnitStatus<Self> {
        match self.unit_or_zero() {
            ModClass::Unit(v) => UnitStatus::Unit(v),
            ModClass::Zero => UnitStatus::Zero,
            ModClass::Neither { .. } => UnitStatus::Neither,
        }
    }
}
