use crate::error::{Error, Result};
use crate::ring::DiscreteRing;

use super::Polynomial;

/// `a_m^(n-m+1) * b = quotient * a + remainder`.
#[derive(Clone, Debug, PartialEq)]
pub struct PseudoDivision<R> {
    pub quotient: Polynomial<R>,
    /// Formal length `max(m, 1)`, so its formal degree is below `m` when `m >= 1`.
    pub remainder: Polynomial<R>,
    /// `n - m + 1`.
    pub exponent: usize,
}

/// Pseudodivision of `b` by `a`, with degrees taken after stripping zeros.
///
/// Runs exactly `n - m + 1` elimination steps, scaling by the leading
/// coefficient of `a` before each step.
pub fn pseudo_divide<R: DiscreteRing>(b: &Polynomial<R>, a: &Polynomial<R>) -> Result<PseudoDivision<R>> {
    let a = a.normalize();
    let b = b.normalize();
    let m = a.degree().ok_or_else(|| Error::Degree("divisor is the zero polynomial".into()))?;
    let n = match b.degree() {
        Some(n) if n > m => n,
        other => {
            return Err(Error::Degree(format!(
                "need deg a < deg b, got deg a = {m}, deg b = {}",
                other.map_or("-inf".to_string(), |d| d.to_string())
            )))
        }
    };
    let am = a.leading().clone();
    let mut q = Polynomial::new(vec![am.zero_like(); n - m + 1]);
    let mut r = b;
    for k in (m..=n).rev() {
        let rk = r.coeff(k);
        q = q.scale(&am);
        q.coeffs[k - m] = q.coeffs[k - m].clone() + rk.clone();
        r = &r.scale(&am) - &a.scale(&rk).shift(k - m);
        debug_assert!(r.coeff(k).eq_zero());
    }
    Ok(PseudoDivision { quotient: q, remainder: r.with_len(m.max(1)), exponent: n - m + 1 })
}

/// Delete the formal leading term.
pub fn chop<R: DiscreteRing>(a: &Polynomial<R>) -> Polynomial<R> {
    a.chop()
}

/// Closure of a finite set under chop and pairwise remainders.
#[derive(Clone, Debug, PartialEq)]
pub struct Closure<R> {
    /// Normalized, sorted by (degree, coefficients), without duplicates.
    pub elements: Vec<Polynomial<R>>,
    /// Number of rounds that added something.
    pub iterations: usize,
    /// Largest degree among the inputs.
    pub degree_bound: usize,
}

fn degree_key<R: DiscreteRing>(p: &Polynomial<R>) -> i64 {
    p.degree().map_or(-1, |d| d as i64)
}

/// Iterate `S_i = S_(i-1) ∪ chop(S_(i-1)) ∪ rem(S_(i-1), S_(i-1))` to a fixpoint.
///
/// Remainders are taken only for ordered pairs meeting the degree
/// precondition of [`pseudo_divide`]. Every element first produced in round
/// `i` has degree at most `n - i`, which is asserted; the zero polynomial may
/// first appear in round `n + 1`.
pub fn closure_chop_rem<R: DiscreteRing + Ord>(set: &[Polynomial<R>]) -> Closure<R> {
    let mut elements: Vec<Polynomial<R>> = set.iter().map(|p| p.normalize()).collect();
    elements.sort_by(|x, y| x.canonical_cmp(y));
    elements.dedup();
    let n = elements.iter().filter_map(|p| p.degree()).max().unwrap_or(0);
    let mut frontier = elements.clone();
    let mut iterations = 0;
    loop {
        let mut candidates = Vec::new();
        for p in &frontier {
            candidates.push(p.chop().normalize());
        }
        for x in &elements {
            for y in &frontier {
                for (b, a) in [(x, y), (y, x)] {
                    if let Ok(pd) = pseudo_divide(b, a) {
                        candidates.push(pd.remainder.normalize());
                    }
                }
            }
        }
        candidates.sort_by(|x, y| x.canonical_cmp(y));
        candidates.dedup();
        let fresh: Vec<_> = candidates
            .into_iter()
            .filter(|c| elements.binary_search_by(|e| e.canonical_cmp(c)).is_err())
            .collect();
        if fresh.is_empty() {
            break;
        }
        iterations += 1;
        for p in &fresh {
            assert!(
                degree_key(p) <= n as i64 - iterations as i64,
                "closure round {iterations} produced degree {} above bound {n}",
                degree_key(p)
            );
        }
        elements.extend(fresh.iter().cloned());
        elements.sort_by(|x, y| x.canonical_cmp(y));
        frontier = fresh;
    }
    Closure { elements, iterations, degree_bound: n }
}
