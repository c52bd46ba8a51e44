//! Certified root multisets of monic complex polynomials and the metrics
//! built on them.
//!
//! A [`Spectrum`] pairs each computed root ball with one true root: there is
//! a bijection between the true roots (with multiplicity) and the balls such
//! that every root lies in its ball. All distances below are read off these
//! balls, so they come back as intervals.

mod cluster;
mod matching;
mod quasi;
mod roots;
mod separable;

pub use cluster::{cluster_factor, ClusterFactorization};
pub use matching::{bottleneck, matching_distance};
pub use quasi::{quasi_approximation, QuasiApproximation};
pub use separable::separable_roots;

use crate::error::{Error, Result};
use crate::exactnum::{ComplexBall, Dyadic, Interval};
use crate::polyring::Polynomial;

#[derive(Clone, Debug, PartialEq)]
pub struct Spectrum {
    roots: Vec<ComplexBall>,
    matching_bound: Dyadic,
}

/// Target used by the command line when none is given: `2^-20`.
pub fn default_target() -> Dyadic {
    Dyadic::pow2(-20)
}

impl Spectrum {
    /// Certified spectrum with the tightest bound reachable at the
    /// coefficients' precision.
    pub fn of(f: &Polynomial<ComplexBall>) -> Result<Spectrum> {
        roots::check_monic(f)?;
        if f.formal_degree() == 1 {
            let root = -f.coeff(0);
            let bound = root.radius().clone();
            return Ok(Spectrum { roots: vec![root], matching_bound: bound });
        }
        let centers = roots::approximate_roots(f);
        let (roots, matching_bound) = roots::certify(f, &centers);
        Ok(Spectrum { roots, matching_bound })
    }

    /// Build from balls that are already known to match the roots.
    pub fn from_balls(roots: Vec<ComplexBall>) -> Spectrum {
        let matching_bound = roots.iter().map(|b| b.radius().clone()).max().unwrap_or_else(Dyadic::zero);
        Spectrum { roots, matching_bound }
    }

    pub fn roots(&self) -> &[ComplexBall] {
        &self.roots
    }

    pub fn matching_bound(&self) -> &Dyadic {
        &self.matching_bound
    }

    pub fn degree(&self) -> usize {
        self.roots.len()
    }

    /// Enclosure of `min_i |z - r_i|`.
    pub fn distance_to_point(&self, z: &ComplexBall) -> Interval {
        let d: Vec<Interval> = self.roots.iter().map(|r| r.distance(z)).collect();
        let lo = d.iter().map(|i| i.lo.clone()).min().expect("degree >= 1");
        let hi = d.iter().map(|i| i.hi.clone()).min().expect("degree >= 1");
        Interval::new(lo, hi)
    }

    /// Enclosure of `max_{i,j} |r_i - r_j|`.
    pub fn diameter(&self) -> Interval {
        let mut out = Interval::zero();
        for (i, a) in self.roots.iter().enumerate() {
            for b in &self.roots[i + 1..] {
                let d = a.distance(b);
                out = Interval::new(out.lo.max(d.lo), out.hi.max(d.hi));
            }
        }
        out
    }

    /// Closest pair `(i, j)` between the two spectra and the enclosure of
    /// `min_{i,j} |r_i - s_j|`.
    pub fn closest_pair(&self, other: &Spectrum) -> (usize, usize, Interval) {
        let mut best: Option<(usize, usize, Interval)> = None;
        let mut lo: Option<Dyadic> = None;
        for (i, a) in self.roots.iter().enumerate() {
            for (j, b) in other.roots.iter().enumerate() {
                let d = a.distance(b);
                lo = Some(lo.map_or(d.lo.clone(), |l| l.min(d.lo.clone())));
                if best.as_ref().is_none_or(|(_, _, cur)| d.hi < cur.hi) {
                    best = Some((i, j, d));
                }
            }
        }
        let (i, j, d) = best.expect("nonempty spectra");
        (i, j, Interval::new(lo.expect("nonempty"), d.hi))
    }
}

/// Spectrum with `matching_bound <= target`.
pub fn compute_spectrum(f: &Polynomial<ComplexBall>, target: &Dyadic) -> Result<Spectrum> {
    let s = Spectrum::of(f)?;
    if s.matching_bound > *target {
        return Err(Error::PrecisionExhausted(format!(
            "matching bound {} exceeds target {}",
            s.matching_bound.to_f64(),
            target.to_f64()
        )));
    }
    Ok(s)
}

pub fn dist_point_to_spectrum(z: &ComplexBall, f: &Polynomial<ComplexBall>) -> Result<Interval> {
    Ok(Spectrum::of(f)?.distance_to_point(z))
}

/// Quasidistance from `z` to the zero set of `f`; equal to the distance to
/// the spectrum.
pub fn quasidistance(z: &ComplexBall, f: &Polynomial<ComplexBall>) -> Result<Interval> {
    dist_point_to_spectrum(z, f)
}

pub fn spectrum_diameter(f: &Polynomial<ComplexBall>) -> Result<Interval> {
    Ok(Spectrum::of(f)?.diameter())
}

pub fn spectra_set_distance(f: &Polynomial<ComplexBall>, g: &Polynomial<ComplexBall>) -> Result<Interval> {
    let (_, _, d) = Spectrum::of(f)?.closest_pair(&Spectrum::of(g)?);
    Ok(d)
}
