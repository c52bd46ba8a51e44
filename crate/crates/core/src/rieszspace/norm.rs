use std::collections::HashSet;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::exactnum::{ComplexBall, Dyadic, GaussianRational, Rational};
use crate::polyring::Polynomial;
use crate::spectrum::Spectrum;

use super::{Disc, LatticeExpr};

/// `norm` is within `epsilon` of the supremum of the expression over the
/// zero set.
#[derive(Clone, Debug, PartialEq)]
pub struct RieszNorm {
    pub norm: Dyadic,
    pub epsilon: Rational,
    pub theta: Rational,
    /// Pitch of the square grid.
    pub pitch: Rational,
    /// Grid points inside the disc.
    pub grid_points: u128,
    /// Grid points certified to lie within `theta` of the zero set.
    pub s_prime: Vec<GaussianRational>,
    /// Point of `s_prime` attaining `norm`.
    pub witness: GaussianRational,
}

impl RieszNorm {
    pub fn s_prime_size(&self) -> usize {
        self.s_prime.len()
    }
}

/// Largest `2^-k <= bound`.
fn dyadic_pitch(bound: &Rational) -> Rational {
    let mut h = Rational::one();
    while &h > bound {
        h /= Rational::from_integer(BigInt::from(2));
    }
    while &h * Rational::from_integer(BigInt::from(2)) <= *bound {
        h *= Rational::from_integer(BigInt::from(2));
    }
    h
}

fn count_grid_points(radius: &Rational, h: &Rational) -> u128 {
    let ratio = radius / h;
    let n = (&ratio * &ratio).floor().to_integer();
    let rows = n.sqrt();
    let mut total = 0u128;
    let mut j = BigInt::zero();
    while j <= rows {
        let half = (&n - &j * &j).sqrt().to_u128().expect("row length fits");
        let row = 2 * half + 1;
        total += if j.is_zero() { row } else { 2 * row };
        j += 1;
    }
    total
}

fn index_range(lo: &Rational, hi: &Rational) -> std::ops::RangeInclusive<i64> {
    let a = lo.ceil().to_integer().to_i64().expect("grid index fits");
    let b = hi.floor().to_integer().to_i64().expect("grid index fits");
    a..=b
}

/// Approximate `sup { e(s) : f(s) = 0 }` to within `eps`.
pub fn riesz_norm(e: &LatticeExpr, f: &Polynomial<ComplexBall>, disc: &Disc, eps: &Rational) -> Result<RieszNorm> {
    if !eps.is_positive() {
        return Err(Error::Hypothesis("epsilon must be positive".into()));
    }
    let spec = Spectrum::of(f)?;
    let prec = f.leading().prec().max(128);
    if let Some(b) = spec.roots().iter().find(|b| !disc.contains_ball(b)) {
        return Err(Error::Geometry(format!("root ball {b} is not inside the disc")));
    }
    let l = e.lipschitz();
    let theta = if l.is_zero() { disc.radius.clone() } else { eps / (Rational::from_integer(4.into()) * &l) };
    let max_radius = spec.roots().iter().map(|b| b.radius().clone()).max().expect("degree >= 1");
    if max_radius.to_rational() * Rational::from_integer(8.into()) >= theta {
        return Err(Error::PrecisionExhausted(format!(
            "root balls of radius {} are too wide for theta {}",
            max_radius.to_f64(),
            theta
        )));
    }
    let h = dyadic_pitch(&(&theta / Rational::from_integer(16.into())));
    let r2 = &disc.radius * &disc.radius;
    let (cx, cy) = (&disc.center.re, &disc.center.im);

    let mut seen = HashSet::new();
    let mut s_prime = Vec::new();
    let mut best: Option<(Dyadic, GaussianRational)> = None;
    for root in spec.roots() {
        let g = root.center_gaussian();
        let reach = &theta + root.radius().to_rational();
        let xs = index_range(&((&g.re - &reach - cx) / &h), &((&g.re + &reach - cx) / &h));
        let ys = index_range(&((&g.im - &reach - cy) / &h), &((&g.im + &reach - cy) / &h));
        for i in xs {
            for j in ys.clone() {
                if !seen.insert((i, j)) {
                    continue;
                }
                let dx = &h * Rational::from_integer(i.into());
                let dy = &h * Rational::from_integer(j.into());
                if &dx * &dx + &dy * &dy > r2 {
                    continue;
                }
                let t = GaussianRational::new(cx + dx, cy + dy);
                let tb = ComplexBall::from_gaussian(&t, prec);
                let delta = spec.distance_to_point(&tb);
                if delta.hi.to_rational() >= theta {
                    continue;
                }
                let v = e.eval(&tb).hi;
                if best.as_ref().map_or(true, |(m, _)| v > *m) {
                    best = Some((v, t.clone()));
                }
                s_prime.push(t);
            }
        }
    }
    let (norm, witness) = best.ok_or_else(|| Error::PrecisionExhausted("no grid point near the zero set".into()))?;
    Ok(RieszNorm {
        norm,
        epsilon: eps.clone(),
        theta,
        grid_points: count_grid_points(&disc.radius, &h),
        pitch: h,
        s_prime,
        witness,
    })
}

/// Norm of `|e| = e ∨ 0 - e ∧ 0`.
pub fn riesz_abs_norm(e: &LatticeExpr, f: &Polynomial<ComplexBall>, disc: &Disc, eps: &Rational) -> Result<RieszNorm> {
    riesz_norm(&e.abs(), f, disc, eps)
}
