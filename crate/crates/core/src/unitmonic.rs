//! Units of `Z_m[X]` and factorization as unit × monic.
//!
//! A polynomial over `Z_m` is a unit exactly when its constant term is a unit
//! and every other coefficient is nilpotent. A polynomial whose coefficient at
//! index `m` is a unit and whose higher coefficients are all nilpotent is a
//! unit times a monic polynomial of degree `m`, and that factorization is
//! unique; the eliminations below exploit this by reaching the same answer
//! through different orders.

use rand::Rng;

use crate::error::{Error, Result};
use crate::exactnum::{gcd, ModInt};
use crate::polyring::Polynomial;
use crate::ring::Ring;

#[derive(Clone, Debug, PartialEq)]
pub struct UnitMonicFactorization {
    pub unit: Polynomial<ModInt>,
    pub monic: Polynomial<ModInt>,
    pub unit_inverse: Polynomial<ModInt>,
}

impl UnitMonicFactorization {
    /// Re-check `unit * monic = p`, `unit * unit_inverse = 1` and monicity.
    pub fn verify(&self, p: &Polynomial<ModInt>) -> bool {
        (&self.unit * &self.monic).eq_normalized(p)
            && (&self.unit * &self.unit_inverse).eq_normalized(&p.one_like())
            && self.monic.is_monic()
    }
}

/// Inverse of `p` in `Z_m[X]`, if `p` is a unit.
pub fn is_unit_poly(p: &Polynomial<ModInt>) -> Option<Polynomial<ModInt>> {
    let c0 = p.coeff(0);
    let inv0 = c0.inverse()?;
    if !p.coeffs()[1..].iter().all(|c| c.is_nilpotent()) {
        return None;
    }
    // p = c0 (1 + n) with n nilpotent, so 1/p = inv0 * sum (-n)^k
    let mut neg_n = p.scale(&-inv0).into_coeffs();
    neg_n[0] = c0.zero_like();
    let neg_n = Polynomial::new(neg_n);
    let mut sum = p.one_like();
    let mut term = p.one_like();
    loop {
        term = (&term * &neg_n).normalize();
        if term.is_zero() {
            break;
        }
        sum = &sum + &term;
    }
    let inverse = sum.scale(&inv0).normalize();
    debug_assert!((p * &inverse).eq_normalized(&p.one_like()));
    Some(inverse)
}

fn check_hypothesis(p: &Polynomial<ModInt>, m: usize) -> Result<ModInt> {
    if m > p.formal_degree() {
        return Err(Error::Hypothesis(format!("index {m} exceeds formal degree {}", p.formal_degree())));
    }
    let am = p.coeff(m);
    if am.inverse().is_none() {
        return Err(Error::Hypothesis(format!("coefficient {am} at index {m} is not a unit")));
    }
    if let Some((i, c)) = p.coeffs().iter().enumerate().skip(m + 1).find(|(_, c)| !c.is_nilpotent()) {
        return Err(Error::Hypothesis(format!("coefficient {c} at index {i} is not nilpotent")));
    }
    Ok(am)
}

/// Multiply `q` and `u` by `1 - (q_j / q_m) X^(j - m)`, clearing `q_j`.
fn eliminate(q: &mut Polynomial<ModInt>, u: &mut Polynomial<ModInt>, j: usize, m: usize) {
    let inv = q.coeff(m).inverse().expect("pivot stays a unit");
    let zero = inv.zero_like();
    let mut w = vec![zero; j - m + 1];
    w[0] = inv.one_like();
    w[j - m] = -(q.coeff(j) * inv);
    let w = Polynomial::new(w);
    *q = (&w * q).normalize();
    *u = (&w * u).normalize();
    debug_assert!(q.coeff(j).value() == 0);
}

fn finish(q: Polynomial<ModInt>, u: Polynomial<ModInt>, m: usize) -> UnitMonicFactorization {
    let q = q.with_len(m + 1);
    let lead = q.coeff(m);
    let lead_inv = lead.inverse().expect("pivot stays a unit");
    let monic = q.scale(&lead_inv);
    let u_inv = is_unit_poly(&u).expect("accumulated multiplier is a unit");
    UnitMonicFactorization { unit: u_inv.scale(&lead).normalize(), monic, unit_inverse: u.scale(&lead_inv).normalize() }
}

fn offending(q: &Polynomial<ModInt>, m: usize) -> Vec<usize> {
    (m + 1..q.coeffs().len()).filter(|&i| q.coeff(i).value() != 0).collect()
}

/// Unit × monic factorization with a monic factor of degree `m`.
///
/// Each pass clears the coefficients above `m` from the top down; afterwards
/// they all lie in the next power of the ideal generated by the original
/// offending coefficients, so the process stops once that power is zero.
pub fn factor_unit_monic(p: &Polynomial<ModInt>, m: usize) -> Result<UnitMonicFactorization> {
    check_hypothesis(p, m)?;
    let modulus = p.coeff(0).modulus();
    let generator =
        p.coeffs().iter().skip(m + 1).fold(modulus, |g, c| gcd(g, c.value()));
    let mut q = p.clone();
    let mut u = p.one_like();
    let mut grade = 1u64;
    loop {
        if offending(&q, m).is_empty() {
            break;
        }
        for j in (m + 1..q.coeffs().len()).rev() {
            if j < q.coeffs().len() && q.coeff(j).value() != 0 {
                eliminate(&mut q, &mut u, j, m);
            }
        }
        grade += 1;
        let ideal = ModInt::new(generator as i64, modulus).pow(grade).value();
        assert!(
            q.coeffs().iter().skip(m + 1).all(|c| c.in_ideal(ideal)),
            "coefficients above {m} left the ideal power {grade}"
        );
    }
    Ok(finish(q, u, m))
}

/// Order in which offending coefficients are cleared.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Elimination {
    /// Full top-down passes (as in [`factor_unit_monic`]).
    TopDownPasses,
    /// Always clear the current highest offending coefficient.
    HighestFirst,
    /// Always clear the current lowest offending coefficient.
    LowestFirst,
}

const STEP_LIMIT: usize = 100_000;

fn eliminate_by(
    p: &Polynomial<ModInt>,
    m: usize,
    mut pick: impl FnMut(&[usize]) -> usize,
) -> Result<UnitMonicFactorization> {
    check_hypothesis(p, m)?;
    let mut q = p.clone();
    let mut u = p.one_like();
    for _ in 0..STEP_LIMIT {
        let candidates = offending(&q, m);
        if candidates.is_empty() {
            return Ok(finish(q, u, m));
        }
        let j = candidates[pick(&candidates)];
        eliminate(&mut q, &mut u, j, m);
    }
    Err(Error::Hypothesis(format!("elimination did not finish within {STEP_LIMIT} steps")))
}

pub fn factor_unit_monic_with(p: &Polynomial<ModInt>, m: usize, order: Elimination) -> Result<UnitMonicFactorization> {
    match order {
        Elimination::TopDownPasses => factor_unit_monic(p, m),
        Elimination::HighestFirst => eliminate_by(p, m, |c| c.len() - 1),
        Elimination::LowestFirst => eliminate_by(p, m, |_| 0),
    }
}

/// Clear offending coefficients in a random order.
pub fn factor_unit_monic_random<G: Rng + ?Sized>(
    p: &Polynomial<ModInt>,
    m: usize,
    rng: &mut G,
) -> Result<UnitMonicFactorization> {
    eliminate_by(p, m, |c| rng.gen_range(0..c.len()))
}

/// Two factorizations of the same polynomial agree.
pub fn uniqueness_check(f1: &UnitMonicFactorization, f2: &UnitMonicFactorization) -> bool {
    f1.monic.eq_normalized(&f2.monic) && f1.unit.eq_normalized(&f2.unit)
}
