use crate::error::{Error, Result};
use crate::exactnum::{ball_apart, Apartness, ComplexBall};
use crate::polyring::Polynomial;

use super::Spectrum;

/// Pairwise disjoint discs, one around each root of `f`, given `s`, `t`
/// with `s f + t f' = 1`.
///
/// The identity only has to hold approximately: on every disc the residual
/// `h = s f + t f' - 1` must satisfy `|h| < 1`, which keeps `f'` away from
/// zero at each root, so every root is simple.
pub fn separable_roots(
    f: &Polynomial<ComplexBall>,
    s: &Polynomial<ComplexBall>,
    t: &Polynomial<ComplexBall>,
) -> Result<Vec<ComplexBall>> {
    let spec = Spectrum::of(f)?;
    let h = &(&(s * f) + &(t * &f.derivative())) - &f.one_like();
    for disc in spec.roots() {
        let residual = h.eval(disc).abs_upper();
        if residual >= crate::exactnum::Dyadic::one() {
            return Err(Error::Certificate(format!(
                "|s f + t f' - 1| may reach {} near {}",
                residual.to_f64(),
                disc
            )));
        }
        if !t.eval(disc).abs().hi.is_positive() {
            return Err(Error::Certificate("t vanishes identically on a root disc".into()));
        }
    }
    let roots = spec.roots();
    for i in 0..roots.len() {
        for j in i + 1..roots.len() {
            if !matches!(ball_apart(&roots[i], &roots[j]), Apartness::Apart(_)) {
                return Err(Error::PrecisionExhausted("root discs are not yet disjoint".into()));
            }
        }
    }
    Ok(roots.to_vec())
}
