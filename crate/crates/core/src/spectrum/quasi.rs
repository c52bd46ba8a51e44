use crate::error::{Error, Result};
use crate::exactnum::{ComplexBall, Dyadic, GaussianRational, Round};
use crate::polyring::Polynomial;

use super::roots::product_bound;
use super::Spectrum;

/// `n` Gaussian points, each within `epsilon` of the zero set, whose
/// `epsilon`-balls cover it.
#[derive(Clone, Debug, PartialEq)]
pub struct QuasiApproximation {
    pub points: Vec<GaussianRational>,
    pub epsilon: Dyadic,
    /// Upper bounds on the quasidistance from each point to the zero set.
    pub delta_bounds: Vec<Dyadic>,
    /// Every zero lies within this distance of some point.
    pub coverage_bound: Dyadic,
}

/// Round to the coarsest grid `2^-k` whose rounding error still leaves the
/// point within `eps` of its root.
fn snap(ball: &ComplexBall, eps: &Dyadic) -> Option<((Dyadic, Dyadic), Dyadic)> {
    let prec = ball.prec();
    (0..=prec).find_map(|k| {
        let re = ball.re().round(k, Round::Nearest);
        let im = ball.im().round(k, Round::Nearest);
        let dre = &re - ball.re();
        let dim = &im - ball.im();
        let bound = (&dre * &dre + &dim * &dim).sqrt(prec, Round::Ceil) + ball.radius();
        (bound < *eps).then_some(((re, im), bound))
    })
}

pub fn quasi_approximation(f: &Polynomial<ComplexBall>, eps: &Dyadic) -> Result<QuasiApproximation> {
    if !eps.is_positive() {
        return Err(Error::Hypothesis("epsilon must be positive".into()));
    }
    let spec = Spectrum::of(f)?;
    let mut centers = Vec::new();
    let mut delta_bounds = Vec::new();
    for ball in spec.roots() {
        let (p, bound) = snap(ball, eps).ok_or_else(|| {
            Error::PrecisionExhausted(format!("root ball radius {} is not below epsilon", ball.radius().to_f64()))
        })?;
        centers.push(p);
        delta_bounds.push(bound);
    }
    let via_radii = delta_bounds.iter().max().cloned().expect("degree >= 1");
    let via_product = product_bound(f, &centers);
    let coverage_bound = via_radii.min(via_product);
    debug_assert!(coverage_bound < *eps);
    let points = centers.iter().map(|(re, im)| GaussianRational::new(re.to_rational(), im.to_rational())).collect();
    Ok(QuasiApproximation { points, epsilon: eps.clone(), delta_bounds, coverage_bound })
}
