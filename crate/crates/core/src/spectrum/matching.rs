//! Bottleneck matching between equal-size multisets.

use crate::error::{Error, Result};
use crate::exactnum::{ComplexBall, Dyadic, Interval};

fn augment(u: usize, allowed: &[Vec<bool>], seen: &mut [bool], owner: &mut [Option<usize>]) -> bool {
    for v in 0..allowed.len() {
        if allowed[u][v] && !seen[v] {
            seen[v] = true;
            if owner[v].is_none_or(|w| augment(w, allowed, seen, owner)) {
                owner[v] = Some(u);
                return true;
            }
        }
    }
    false
}

fn has_perfect_matching(allowed: &[Vec<bool>]) -> bool {
    let n = allowed.len();
    let mut owner = vec![None; n];
    (0..n).all(|u| augment(u, allowed, &mut vec![false; n], &mut owner))
}

/// `min over bijections of max cost`, by binary search over the sorted costs.
pub fn bottleneck(cost: &[Vec<Dyadic>]) -> Dyadic {
    let n = cost.len();
    if n == 0 {
        return Dyadic::zero();
    }
    let mut values: Vec<Dyadic> = cost.iter().flatten().cloned().collect();
    values.sort();
    values.dedup();
    let feasible = |t: &Dyadic| {
        let allowed: Vec<Vec<bool>> = cost.iter().map(|row| row.iter().map(|c| c <= t).collect()).collect();
        has_perfect_matching(&allowed)
    };
    let (mut lo, mut hi) = (0, values.len() - 1);
    while lo < hi {
        let mid = (lo + hi) / 2;
        if feasible(&values[mid]) {
            hi = mid;
        } else {
            lo = mid + 1;
        }
    }
    values[lo].clone()
}

/// Enclosure of the bottleneck distance between two multisets of balls.
pub fn matching_distance(a: &[ComplexBall], b: &[ComplexBall]) -> Result<Interval> {
    if a.len() != b.len() {
        return Err(Error::SizeMismatch { left: a.len(), right: b.len() });
    }
    let d: Vec<Vec<Interval>> = a.iter().map(|x| b.iter().map(|y| x.distance(y)).collect()).collect();
    let lo: Vec<Vec<Dyadic>> = d.iter().map(|r| r.iter().map(|i| i.lo.clone()).collect()).collect();
    let hi: Vec<Vec<Dyadic>> = d.iter().map(|r| r.iter().map(|i| i.hi.clone()).collect()).collect();
    Ok(Interval::new(bottleneck(&lo), bottleneck(&hi)))
}
