use crate::ring::{UnitClassify, UnitStatus};

use super::Polynomial;

#[derive(Clone, Debug, PartialEq)]
pub enum BezoutOutcome<R> {
    /// `s*a + t*b = d`, `d` monic and dividing both inputs.
    Gcd { d: Polynomial<R>, s: Polynomial<R>, t: Polynomial<R> },
    ZeroPair,
    /// A leading coefficient that is neither zero nor a unit.
    Stuck(R),
}

/// Euclidean algorithm with unit checks on every leading coefficient met.
///
/// Panics if a `Gcd` result fails re-verification, which would indicate a
/// bug rather than bad input.
pub fn euclid_bezout<R: UnitClassify>(a: &Polynomial<R>, b: &Polynomial<R>) -> BezoutOutcome<R> {
    let a = a.normalize();
    let b = b.normalize();
    if a.is_zero() && b.is_zero() {
        return BezoutOutcome::ZeroPair;
    }
    let one = a.one_like();
    let zero = a.zero_like();
    let key = |p: &Polynomial<R>| p.degree().map_or(-1, |d| d as i64);
    let (mut r0, mut s0, mut t0, mut r1, mut s1, mut t1) = if key(&a) >= key(&b) {
        (a.clone(), one.clone(), zero.clone(), b.clone(), zero.clone(), one.clone())
    } else {
        (b.clone(), zero.clone(), one.clone(), a.clone(), one.clone(), zero.clone())
    };
    while !r1.is_zero() {
        let lc = r1.leading().clone();
        if let UnitStatus::Neither = lc.unit_status() {
            return BezoutOutcome::Stuck(lc);
        }
        let (q, r) = r1.div_rem_unit(&r0).expect("leading coefficient is a unit");
        let s2 = (&s0 - &(&q * &s1)).normalize();
        let t2 = (&t0 - &(&q * &t1)).normalize();
        (r0, r1) = (r1, r);
        (s0, s1) = (s1, s2);
        (t0, t1) = (t1, t2);
    }
    let lc = r0.leading().clone();
    let inv = match lc.unit_status() {
        UnitStatus::Unit(inv) => inv,
        _ => return BezoutOutcome::Stuck(lc),
    };
    let d = r0.scale(&inv);
    let s = s0.scale(&inv).normalize();
    let t = t0.scale(&inv).normalize();
    assert!((&(&s * &a) + &(&t * &b)).eq_normalized(&d), "Bezout identity failed");
    assert_eq!(d.divides(&a), Some(true), "gcd does not divide a");
    assert_eq!(d.divides(&b), Some(true), "gcd does not divide b");
    BezoutOutcome::Gcd { d, s, t }
}
