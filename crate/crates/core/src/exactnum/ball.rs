//! Complex ball arithmetic with fixed-point dyadic centers.
//!
//! A ball of precision `p` has its center on the grid `2^-p (Z + iZ)` and a
//! nonnegative radius on the same grid, rounded up. Each operation computes the
//! exact center, rounds it to the nearest grid point and adds one ulp to the
//! radius whenever that rounding was inexact.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_rational::BigRational;

use super::dyadic::{Dyadic, Round};
use super::gaussian::GaussianRational;
use super::interval::Interval;
use crate::ring::Ring;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComplexBall {
    re: Dyadic,
    im: Dyadic,
    rad: Dyadic,
    prec: u32,
}

/// Answer of [`ball_apart`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Apartness {
    /// Every pair of points drawn from the two balls is at least `gap` apart.
    Apart(Dyadic),
    /// The balls intersect.
    Overlapping,
    /// Neither could be certified at the working precision.
    Undecided,
}

/// `|x|` bounded from the requested side.
fn modulus(re: &Dyadic, im: &Dyadic, prec: u32, mode: Round) -> Dyadic {
    (re * re + im * im).sqrt(prec, mode)
}

impl ComplexBall {
    /// Ball with an exact center; the center is rounded onto the grid and the
    /// radius absorbs the rounding.
    pub fn new(re: Dyadic, im: Dyadic, rad: Dyadic, prec: u32) -> Self {
        assert!(!rad.is_negative(), "negative radius");
        let (re, im, err) = round_center(re, im, prec);
        ComplexBall { re, im, rad: (rad + err).round(prec, Round::Ceil), prec }
    }

    pub fn exact(re: Dyadic, im: Dyadic, prec: u32) -> Self {
        ComplexBall::new(re, im, Dyadic::zero(), prec)
    }

    pub fn from_i64(n: i64, prec: u32) -> Self {
        ComplexBall::exact(Dyadic::from_i64(n), Dyadic::zero(), prec)
    }

    pub fn zero(prec: u32) -> Self {
        ComplexBall::from_i64(0, prec)
    }

    pub fn one(prec: u32) -> Self {
        ComplexBall::from_i64(1, prec)
    }

    pub fn from_gaussian(q: &GaussianRational, prec: u32) -> Self {
        let re = Dyadic::from_rational(&q.re, prec, Round::Nearest);
        let im = Dyadic::from_rational(&q.im, prec, Round::Nearest);
        let exact = re.to_rational() == q.re && im.to_rational() == q.im;
        let rad = if exact { Dyadic::zero() } else { Dyadic::ulp(prec) };
        ComplexBall { re, im, rad, prec }
    }

    pub fn from_rational(q: &BigRational, prec: u32) -> Self {
        ComplexBall::from_gaussian(&GaussianRational::from_rational(q.clone()), prec)
    }

    pub fn from_f64(re: f64, im: f64, prec: u32) -> Self {
        ComplexBall::exact(Dyadic::from_f64(re, prec), Dyadic::from_f64(im, prec), prec)
    }

    pub fn re(&self) -> &Dyadic {
        &self.re
    }

    pub fn im(&self) -> &Dyadic {
        &self.im
    }

    pub fn radius(&self) -> &Dyadic {
        &self.rad
    }

    pub fn prec(&self) -> u32 {
        self.prec
    }

    pub fn center(&self) -> ComplexBall {
        ComplexBall { rad: Dyadic::zero(), ..self.clone() }
    }

    pub fn center_gaussian(&self) -> GaussianRational {
        GaussianRational::new(self.re.to_rational(), self.im.to_rational())
    }

    pub fn center_f64(&self) -> (f64, f64) {
        (self.re.to_f64(), self.im.to_f64())
    }

    pub fn is_exact(&self) -> bool {
        self.rad.is_zero()
    }

    pub fn with_radius(&self, rad: Dyadic) -> Self {
        ComplexBall::new(self.re.clone(), self.im.clone(), rad, self.prec)
    }

    /// Enlarge the radius by `extra`.
    pub fn inflate(&self, extra: &Dyadic) -> Self {
        self.with_radius(&self.rad + extra)
    }

    pub fn with_prec(&self, prec: u32) -> Self {
        ComplexBall::new(self.re.clone(), self.im.clone(), self.rad.clone(), prec)
    }

    pub fn conj(&self) -> Self {
        ComplexBall { im: -&self.im, ..self.clone() }
    }

    /// Real part as an interval.
    pub fn re_interval(&self) -> Interval {
        Interval::new(&self.re - &self.rad, &self.re + &self.rad)
    }

    pub fn im_interval(&self) -> Interval {
        Interval::new(&self.im - &self.rad, &self.im + &self.rad)
    }

    /// Enclosure of `|z|` over the ball.
    pub fn abs(&self) -> Interval {
        let lo = modulus(&self.re, &self.im, self.prec, Round::Floor) - &self.rad;
        let hi = modulus(&self.re, &self.im, self.prec, Round::Ceil) + &self.rad;
        Interval::new(lo.max(Dyadic::zero()), hi)
    }

    /// Upper bound on `|z|` over the ball.
    pub fn abs_upper(&self) -> Dyadic {
        self.abs().hi
    }

    /// Enclosure of `|x - y|` for `x`, `y` ranging over the two balls.
    pub fn distance(&self, other: &ComplexBall) -> Interval {
        let prec = self.prec.max(other.prec);
        let dre = &self.re - &other.re;
        let dim = &self.im - &other.im;
        let slack = &self.rad + &other.rad;
        let lo = modulus(&dre, &dim, prec, Round::Floor) - &slack;
        let hi = modulus(&dre, &dim, prec, Round::Ceil) + &slack;
        Interval::new(lo.max(Dyadic::zero()), hi)
    }

    /// Exact test `|c - q| <= r`.
    pub fn contains(&self, q: &GaussianRational) -> bool {
        let dre = q.re.clone() - self.re.to_rational();
        let dim = q.im.clone() - self.im.to_rational();
        let r = self.rad.to_rational();
        &dre * &dre + &dim * &dim <= &r * &r
    }

    pub fn contains_zero(&self) -> bool {
        &self.re * &self.re + &self.im * &self.im <= &self.rad * &self.rad
    }

    /// Every point of `other` lies in `self`.
    pub fn contains_ball(&self, other: &ComplexBall) -> bool {
        if other.rad > self.rad {
            return false;
        }
        let dre = &self.re - &other.re;
        let dim = &self.im - &other.im;
        let slack = &self.rad - &other.rad;
        &dre * &dre + &dim * &dim <= &slack * &slack
    }

    /// Zero is certainly excluded: `|c| > r`.
    pub fn excludes_zero(&self) -> bool {
        !self.contains_zero()
    }

    pub fn checked_div(&self, other: &ComplexBall) -> Option<ComplexBall> {
        let prec = self.prec.max(other.prec);
        let cb_lo = modulus(&other.re, &other.im, prec, Round::Floor);
        if cb_lo <= other.rad {
            return None;
        }
        let n2 = &other.re * &other.re + &other.im * &other.im;
        // (a * conj b) / |b|^2
        let nre = &self.re * &other.re + &self.im * &other.im;
        let nim = &self.im * &other.re - &self.re * &other.im;
        let qre = Dyadic::div(&nre, &n2, prec, Round::Nearest)?;
        let qim = Dyadic::div(&nim, &n2, prec, Round::Nearest)?;
        let exact = &qre * &n2 == nre && &qim * &n2 == nim;
        let round_err = if exact { Dyadic::zero() } else { Dyadic::ulp(prec) };
        let rad = if self.rad.is_zero() && other.rad.is_zero() {
            Dyadic::zero()
        } else {
            let cb_hi = modulus(&other.re, &other.im, prec, Round::Ceil);
            let ca_hi = modulus(&self.re, &self.im, prec, Round::Ceil);
            let num = &self.rad * &cb_hi + &ca_hi * &other.rad;
            let den = (&cb_lo - &other.rad) * &cb_lo;
            Dyadic::div(&num, &den, prec, Round::Ceil)?
        };
        Some(ComplexBall { re: qre, im: qim, rad: (rad + round_err).round(prec, Round::Ceil), prec })
    }

    pub fn pow(&self, e: u32) -> ComplexBall {
        let mut acc = ComplexBall::one(self.prec);
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Multiply by an exact dyadic scalar.
    pub fn scale(&self, c: &Dyadic) -> ComplexBall {
        self * &ComplexBall::exact(c.clone(), Dyadic::zero(), self.prec)
    }

    /// Smallest ball around `self`'s center containing `other` as well.
    pub fn union(&self, other: &ComplexBall) -> ComplexBall {
        let d = self.distance(&other.center()).hi;
        let rad = self.rad.clone().max(d + &other.rad);
        self.with_radius(rad)
    }
}

fn round_center(re: Dyadic, im: Dyadic, prec: u32) -> (Dyadic, Dyadic, Dyadic) {
    if re.fits(prec) && im.fits(prec) {
        return (re, im, Dyadic::zero());
    }
    // each component moves by at most half an ulp
    (re.round(prec, Round::Nearest), im.round(prec, Round::Nearest), Dyadic::ulp(prec))
}

/// Certified apartness test for two balls.
pub fn ball_apart(x: &ComplexBall, y: &ComplexBall) -> Apartness {
    let dre = &x.re - &y.re;
    let dim = &x.im - &y.im;
    let d2 = &dre * &dre + &dim * &dim;
    let s = &x.rad + &y.rad;
    if d2 <= &s * &s {
        return Apartness::Overlapping;
    }
    let prec = x.prec.max(y.prec);
    let gap = modulus(&dre, &dim, prec, Round::Floor) - s;
    if gap.is_positive() {
        Apartness::Apart(gap)
    } else {
        Apartness::Undecided
    }
}

impl<'a> Add<&'a ComplexBall> for &'a ComplexBall {
    type Output = ComplexBall;
    fn add(self, rhs: &'a ComplexBall) -> ComplexBall {
        let prec = self.prec.max(rhs.prec);
        ComplexBall::new(&self.re + &rhs.re, &self.im + &rhs.im, &self.rad + &rhs.rad, prec)
    }
}

impl<'a> Sub<&'a ComplexBall> for &'a ComplexBall {
    type Output = ComplexBall;
    fn sub(self, rhs: &'a ComplexBall) -> ComplexBall {
        let prec = self.prec.max(rhs.prec);
        ComplexBall::new(&self.re - &rhs.re, &self.im - &rhs.im, &self.rad + &rhs.rad, prec)
    }
}

impl<'a> Mul<&'a ComplexBall> for &'a ComplexBall {
    type Output = ComplexBall;
    fn mul(self, rhs: &'a ComplexBall) -> ComplexBall {
        let prec = self.prec.max(rhs.prec);
        let re = &self.re * &rhs.re - &self.im * &rhs.im;
        let im = &self.re * &rhs.im + &self.im * &rhs.re;
        let rad = if self.rad.is_zero() && rhs.rad.is_zero() {
            Dyadic::zero()
        } else {
            let a = modulus(&self.re, &self.im, prec, Round::Ceil);
            let b = modulus(&rhs.re, &rhs.im, prec, Round::Ceil);
            &a * &rhs.rad + &b * &self.rad + &self.rad * &rhs.rad
        };
        ComplexBall::new(re, im, rad, prec)
    }
}

impl Neg for &ComplexBall {
    type Output = ComplexBall;
    fn neg(self) -> ComplexBall {
        ComplexBall { re: -&self.re, im: -&self.im, rad: self.rad.clone(), prec: self.prec }
    }
}

impl Neg for ComplexBall {
    type Output = ComplexBall;
    fn neg(self) -> ComplexBall {
        -&self
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<ComplexBall> for ComplexBall {
            type Output = ComplexBall;
            fn $m(self, rhs: ComplexBall) -> ComplexBall {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Ring for ComplexBall {
    fn zero_like(&self) -> Self {
        ComplexBall::zero(self.prec)
    }
    fn one_like(&self) -> Self {
        ComplexBall::one(self.prec)
    }
    fn from_int_like(&self, n: i64) -> Self {
        ComplexBall::from_i64(n, self.prec)
    }
}

impl fmt::Display for ComplexBall {
    /// Text form `c_re c_im ± r`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {} ± {:e}", self.re.to_f64(), self.im.to_f64(), self.rad.to_f64())
    }
}
