#![allow(dead_code)]

use proptest::prelude::*;
use zeroset::exactnum::rat;
use zeroset::{ComplexBall, GaussianRational, Interval, Polynomial, Rational};

/// `(a + b i) / 2^k`.
pub fn dyadic_point(a: i64, b: i64, k: u32) -> GaussianRational {
    GaussianRational::new(rat(a, 1 << k), rat(b, 1 << k))
}

/// Points on the grid `2^-4 Z[i]` inside the square of half-width 4.
pub fn planted_point() -> impl Strategy<Value = GaussianRational> {
    (-64i64..=64, -64i64..=64).prop_map(|(a, b)| dyadic_point(a, b, 4))
}

pub fn planted_roots(deg: std::ops::RangeInclusive<usize>) -> impl Strategy<Value = Vec<GaussianRational>> {
    deg.prop_flat_map(|d| prop::collection::vec(planted_point(), d))
}

pub fn monic(roots: &[GaussianRational]) -> Polynomial<GaussianRational> {
    Polynomial::from_roots(roots, &GaussianRational::one())
}

pub fn balls(p: &Polynomial<GaussianRational>, prec: u32) -> Polynomial<ComplexBall> {
    p.map(|c| ComplexBall::from_gaussian(c, prec))
}

pub fn abs2(z: &GaussianRational) -> Rational {
    z.norm_sqr()
}

pub fn dist2(a: &GaussianRational, b: &GaussianRational) -> Rational {
    abs2(&(a - b))
}

/// `interval` contains `sqrt(d2)`.
pub fn encloses_sqrt(interval: &Interval, d2: &Rational) -> bool {
    let lo = interval.lo.to_rational();
    let hi = interval.hi.to_rational();
    let lo_ok = lo <= Rational::from_integer(0.into()) || &lo * &lo <= *d2;
    lo_ok && hi >= Rational::from_integer(0.into()) && &hi * &hi >= *d2
}

pub fn width(interval: &Interval) -> f64 {
    interval.width().to_f64()
}

pub fn min_dist2(points: &[GaussianRational], z: &GaussianRational) -> Rational {
    points.iter().map(|p| dist2(p, z)).min().expect("nonempty")
}
