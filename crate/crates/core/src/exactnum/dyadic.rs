//! Exact dyadic rationals `m * 2^e` with directed rounding onto a fixed-point grid.
//!
//! A precision of `p` bits means the grid `2^-p * Z`. Every rounding entry point
//! takes the mode explicitly, so callers decide which side of the exact value
//! they need.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Round {
    Floor,
    Ceil,
    Nearest,
}

/// `mant * 2^exp`, normalised so that `mant` is odd (or zero with `exp == 0`).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Dyadic {
    mant: BigInt,
    exp: i64,
}

fn pow2(k: u64) -> BigInt {
    BigInt::one() << k
}

fn div_round(num: &BigInt, den: &BigInt, mode: Round) -> BigInt {
    debug_assert!(den.is_positive());
    match mode {
        Round::Floor => num.div_floor(den),
        Round::Ceil => num.div_ceil(den),
        Round::Nearest => (num * BigInt::from(2) + den).div_floor(&(den * BigInt::from(2))),
    }
}

impl Dyadic {
    pub fn new(mant: BigInt, exp: i64) -> Self {
        if mant.is_zero() {
            return Dyadic { mant, exp: 0 };
        }
        let tz = mant.trailing_zeros().unwrap_or(0);
        if tz == 0 {
            Dyadic { mant, exp }
        } else {
            Dyadic { mant: mant >> tz, exp: exp + tz as i64 }
        }
    }

    pub fn zero() -> Self {
        Dyadic { mant: BigInt::zero(), exp: 0 }
    }

    pub fn one() -> Self {
        Dyadic::from_i64(1)
    }

    pub fn from_i64(n: i64) -> Self {
        Dyadic::new(BigInt::from(n), 0)
    }

    pub fn from_int(n: BigInt) -> Self {
        Dyadic::new(n, 0)
    }

    /// `2^k`.
    pub fn pow2(k: i64) -> Self {
        Dyadic { mant: BigInt::one(), exp: k }
    }

    /// Grid spacing `2^-prec`.
    pub fn ulp(prec: u32) -> Self {
        Dyadic::pow2(-(prec as i64))
    }

    pub fn mantissa(&self) -> &BigInt {
        &self.mant
    }

    pub fn exponent(&self) -> i64 {
        self.exp
    }

    pub fn is_zero(&self) -> bool {
        self.mant.is_zero()
    }

    pub fn is_negative(&self) -> bool {
        self.mant.is_negative()
    }

    pub fn is_positive(&self) -> bool {
        self.mant.is_positive()
    }

    pub fn abs(&self) -> Self {
        Dyadic { mant: self.mant.abs(), exp: self.exp }
    }

    /// Multiply by `2^k` exactly.
    pub fn shl(&self, k: i64) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        Dyadic { mant: self.mant.clone(), exp: self.exp + k }
    }

    pub fn max(self, other: Self) -> Self {
        if other > self {
            other
        } else {
            self
        }
    }

    pub fn min(self, other: Self) -> Self {
        if other < self {
            other
        } else {
            self
        }
    }

    /// True when the value already lies on the `2^-prec` grid.
    pub fn fits(&self, prec: u32) -> bool {
        self.is_zero() || self.exp >= -(prec as i64)
    }

    /// Round onto the `2^-prec` grid.
    pub fn round(&self, prec: u32, mode: Round) -> Self {
        if self.fits(prec) {
            return self.clone();
        }
        let shift = (-(prec as i64) - self.exp) as u64;
        let q = div_round(&self.mant, &pow2(shift), mode);
        Dyadic::new(q, -(prec as i64))
    }

    /// Numerator and denominator of the value as integers.
    fn as_fraction(&self) -> (BigInt, BigInt) {
        if self.exp >= 0 {
            (&self.mant << self.exp as u64, BigInt::one())
        } else {
            (self.mant.clone(), pow2((-self.exp) as u64))
        }
    }

    pub fn to_rational(&self) -> BigRational {
        let (n, d) = self.as_fraction();
        BigRational::new(n, d)
    }

    /// Round a rational onto the `2^-prec` grid.
    pub fn from_rational(q: &BigRational, prec: u32, mode: Round) -> Self {
        let num = q.numer() << prec as u64;
        let k = div_round(&num, q.denom(), mode);
        Dyadic::new(k, -(prec as i64))
    }

    /// `a / b` rounded onto the `2^-prec` grid; `None` when `b` is zero.
    pub fn div(a: &Dyadic, b: &Dyadic, prec: u32, mode: Round) -> Option<Self> {
        if b.is_zero() {
            return None;
        }
        // a/b * 2^prec = (ma/mb) * 2^(ea - eb + prec)
        let s = a.exp - b.exp + prec as i64;
        let (mut num, mut den) = if s >= 0 {
            (&a.mant << s as u64, b.mant.clone())
        } else {
            (a.mant.clone(), &b.mant << (-s) as u64)
        };
        if den.is_negative() {
            num = -num;
            den = -den;
        }
        Some(Dyadic::new(div_round(&num, &den, mode), -(prec as i64)))
    }

    /// Square root of a nonnegative value, rounded onto the grid (floor or ceil).
    pub fn sqrt(&self, prec: u32, mode: Round) -> Self {
        self.nth_root(2, prec, mode)
    }

    /// `n`-th root of a nonnegative value, rounded onto the `2^-prec` grid.
    pub fn nth_root(&self, n: u32, prec: u32, mode: Round) -> Self {
        assert!(!self.is_negative(), "root of a negative dyadic");
        assert!(n >= 1);
        if self.is_zero() {
            return Dyadic::zero();
        }
        // root(x) * 2^prec = root(x * 2^(n*prec))
        let (num, den) = self.shl(n as i64 * prec as i64).as_fraction();
        let floor_val = num.div_floor(&den);
        let r = floor_val.nth_root(n);
        let exact = den.is_one() && num == r.pow(n);
        let k = match mode {
            Round::Floor => r,
            Round::Ceil | Round::Nearest if exact => r,
            Round::Ceil => r + 1,
            Round::Nearest => {
                // compare x against (r + 1/2)^n via (2r+1)^n vs 2^n x
                let lhs = (BigInt::from(2) * &r + BigInt::one()).pow(n);
                let rhs = (num << n as u64).div_floor(&den);
                if rhs >= lhs {
                    r + 1
                } else {
                    r
                }
            }
        };
        Dyadic::new(k, -(prec as i64))
    }

    pub fn to_f64(&self) -> f64 {
        if self.is_zero() {
            return 0.0;
        }
        let bits = self.mant.bits();
        let (m, e) = if bits > 60 {
            let shift = bits - 60;
            ((&self.mant >> shift).to_f64().unwrap_or(0.0), self.exp + shift as i64)
        } else {
            (self.mant.to_f64().unwrap_or(0.0), self.exp)
        };
        let e = e.clamp(-2000, 2000) as i32;
        if e < -1000 {
            // split the scaling to avoid an intermediate underflow
            m * 2f64.powi(e + 1000) * 2f64.powi(-1000)
        } else {
            m * 2f64.powi(e)
        }
    }

    /// Nearest grid value to an `f64`; the conversion is exact when it fits.
    pub fn from_f64(x: f64, prec: u32) -> Self {
        assert!(x.is_finite());
        if x == 0.0 {
            return Dyadic::zero();
        }
        let bits = x.to_bits();
        let sign = if bits >> 63 == 1 { -1 } else { 1 };
        let exp_bits = ((bits >> 52) & 0x7ff) as i64;
        let frac = bits & ((1u64 << 52) - 1);
        let (mant, exp) = if exp_bits == 0 {
            (frac, -1074)
        } else {
            (frac | (1u64 << 52), exp_bits - 1075)
        };
        Dyadic::new(BigInt::from(mant) * sign, exp).round(prec, Round::Nearest)
    }

    pub fn signum(&self) -> Sign {
        self.mant.sign()
    }
}

impl Ord for Dyadic {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self.mant.sign(), other.mant.sign()) {
            (a, b) if a != b => return a.cmp(&b),
            _ => {}
        }
        let e = self.exp.min(other.exp);
        let a = &self.mant << (self.exp - e) as u64;
        let b = &other.mant << (other.exp - e) as u64;
        a.cmp(&b)
    }
}

impl PartialOrd for Dyadic {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl<'a> Add<&'a Dyadic> for &'a Dyadic {
    type Output = Dyadic;
    fn add(self, rhs: &'a Dyadic) -> Dyadic {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        let e = self.exp.min(rhs.exp);
        let a = &self.mant << (self.exp - e) as u64;
        let b = &rhs.mant << (rhs.exp - e) as u64;
        Dyadic::new(a + b, e)
    }
}

impl<'a> Sub<&'a Dyadic> for &'a Dyadic {
    type Output = Dyadic;
    fn sub(self, rhs: &'a Dyadic) -> Dyadic {
        self + &(-rhs)
    }
}

impl<'a> Mul<&'a Dyadic> for &'a Dyadic {
    type Output = Dyadic;
    fn mul(self, rhs: &'a Dyadic) -> Dyadic {
        if self.is_zero() || rhs.is_zero() {
            return Dyadic::zero();
        }
        // product of odd mantissas is odd
        Dyadic { mant: &self.mant * &rhs.mant, exp: self.exp + rhs.exp }
    }
}

impl Neg for &Dyadic {
    type Output = Dyadic;
    fn neg(self) -> Dyadic {
        Dyadic { mant: -&self.mant, exp: self.exp }
    }
}

impl Neg for Dyadic {
    type Output = Dyadic;
    fn neg(self) -> Dyadic {
        -&self
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<Dyadic> for Dyadic {
            type Output = Dyadic;
            fn $m(self, rhs: Dyadic) -> Dyadic {
                (&self).$m(&rhs)
            }
        }
        impl<'a> $tr<&'a Dyadic> for Dyadic {
            type Output = Dyadic;
            fn $m(self, rhs: &'a Dyadic) -> Dyadic {
                (&self).$m(rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl From<i64> for Dyadic {
    fn from(n: i64) -> Self {
        Dyadic::from_i64(n)
    }
}

impl fmt::Display for Dyadic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_f64())
    }
}
