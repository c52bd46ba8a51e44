//! Dense univariate polynomials over a generic coefficient ring.
//!
//! The coefficient vector is never empty and its length fixes the *formal*
//! degree. Leading zeros are kept until [`Polynomial::normalize`] is called,
//! which is only available over rings with decidable zero.

mod euclid;
mod pseudo;

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed};

pub use euclid::{euclid_bezout, BezoutOutcome};
pub use pseudo::{chop, closure_chop_rem, pseudo_divide, Closure, PseudoDivision};

use crate::exactnum::{ComplexBall, GaussianRational, ModInt, Rational};
use crate::ring::{DiscreteRing, Ring, UnitClassify, UnitStatus};

/// `coeffs[i]` is the coefficient of `X^i`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Polynomial<R> {
    coeffs: Vec<R>,
}

impl<R: Ring> Polynomial<R> {
    /// Panics on an empty coefficient vector.
    pub fn new(coeffs: Vec<R>) -> Self {
        assert!(!coeffs.is_empty(), "a polynomial needs at least one coefficient");
        Polynomial { coeffs }
    }

    pub fn constant(c: R) -> Self {
        Polynomial { coeffs: vec![c] }
    }

    /// `c * X^k`.
    pub fn monomial(c: R, k: usize) -> Self {
        let mut coeffs = vec![c.zero_like(); k + 1];
        coeffs[k] = c;
        Polynomial { coeffs }
    }

    /// `X - r`.
    pub fn linear_root(r: &R) -> Self {
        Polynomial { coeffs: vec![-r.clone(), r.one_like()] }
    }

    /// Monic polynomial with the given roots, `prod (X - r)`; `one` when empty.
    pub fn from_roots(roots: &[R], one: &R) -> Self {
        roots.iter().fold(Polynomial::constant(one.one_like()), |acc, r| &acc * &Polynomial::linear_root(r))
    }

    pub fn coeffs(&self) -> &[R] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<R> {
        self.coeffs
    }

    pub fn coeff(&self, i: usize) -> R {
        self.coeffs.get(i).cloned().unwrap_or_else(|| self.coeffs[0].zero_like())
    }

    pub fn formal_degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Formal leading coefficient.
    pub fn leading(&self) -> &R {
        self.coeffs.last().expect("nonempty")
    }

    pub fn zero_like(&self) -> Self {
        Polynomial::constant(self.coeffs[0].zero_like())
    }

    pub fn one_like(&self) -> Self {
        Polynomial::constant(self.coeffs[0].one_like())
    }

    /// Delete the formal leading term; chop of a constant is `0`.
    pub fn chop(&self) -> Self {
        if self.coeffs.len() == 1 {
            return self.zero_like();
        }
        Polynomial { coeffs: self.coeffs[..self.coeffs.len() - 1].to_vec() }
    }

    /// Keep only the coefficients of `X^0 .. X^(len-1)`, padding with zeros.
    pub fn with_len(&self, len: usize) -> Self {
        assert!(len >= 1);
        let zero = self.coeffs[0].zero_like();
        let coeffs = (0..len).map(|i| self.coeffs.get(i).cloned().unwrap_or_else(|| zero.clone())).collect();
        Polynomial { coeffs }
    }

    pub fn scale(&self, c: &R) -> Self {
        Polynomial { coeffs: self.coeffs.iter().map(|a| a.clone() * c.clone()).collect() }
    }

    /// Multiply by `X^k`.
    pub fn shift(&self, k: usize) -> Self {
        let mut coeffs = vec![self.coeffs[0].zero_like(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Polynomial { coeffs }
    }

    pub fn eval(&self, x: &R) -> R {
        let mut it = self.coeffs.iter().rev();
        let mut acc = it.next().expect("nonempty").clone();
        for c in it {
            acc = acc * x.clone() + c.clone();
        }
        acc
    }

    pub fn derivative(&self) -> Self {
        if self.coeffs.len() == 1 {
            return self.zero_like();
        }
        let coeffs = self.coeffs.iter().enumerate().skip(1).map(|(i, c)| c.from_int_like(i as i64) * c.clone()).collect();
        Polynomial { coeffs }
    }

    pub fn map<S: Ring>(&self, f: impl Fn(&R) -> S) -> Polynomial<S> {
        Polynomial { coeffs: self.coeffs.iter().map(f).collect() }
    }
}

impl<R: DiscreteRing> Polynomial<R> {
    /// Strip exact-zero leading coefficients (keeping one coefficient).
    pub fn normalize(&self) -> Self {
        let mut len = self.coeffs.len();
        while len > 1 && self.coeffs[len - 1].eq_zero() {
            len -= 1;
        }
        Polynomial { coeffs: self.coeffs[..len].to_vec() }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.eq_zero())
    }

    /// True degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.iter().rposition(|c| !c.eq_zero())
    }

    pub fn is_monic(&self) -> bool {
        self.leading().eq_one()
    }

    /// Equality after stripping leading zeros.
    pub fn eq_normalized(&self, other: &Self) -> bool {
        self.normalize() == other.normalize()
    }
}

impl<R: UnitClassify> Polynomial<R> {
    /// Division by a polynomial whose (normalized) leading coefficient is a
    /// unit: `b = q * self + r`, `deg r < deg self`. `None` if the leading
    /// coefficient is not a unit or `self` is zero.
    pub fn div_rem_unit(&self, b: &Self) -> Option<(Self, Self)> {
        let a = self.normalize();
        let m = a.degree()?;
        let inv = match a.leading().unit_status() {
            UnitStatus::Unit(inv) => inv,
            _ => return None,
        };
        let mut r = b.normalize();
        let zero = a.coeffs[0].zero_like();
        let qlen = r.formal_degree().saturating_sub(m) + 1;
        let mut q = vec![zero.clone(); qlen];
        while let Some(k) = r.degree() {
            if k < m {
                break;
            }
            let c = r.coeffs[k].clone() * inv.clone();
            q[k - m] = c.clone();
            let sub = a.scale(&c).shift(k - m);
            r = (&r - &sub).with_len(k.max(1));
            // coefficient k is cancelled
            debug_assert!(r.coeffs.get(k).is_none_or(|x| x.eq_zero()));
        }
        let r = r.with_len(m.max(1)).normalize();
        Some((Polynomial { coeffs: q }.normalize(), r))
    }

    /// `self` divides `b` (requires a unit leading coefficient).
    pub fn divides(&self, b: &Self) -> Option<bool> {
        self.div_rem_unit(b).map(|(_, r)| r.is_zero())
    }
}

impl<R: DiscreteRing + Ord> Polynomial<R> {
    /// Deterministic ordering by (true degree, coefficients from the top).
    pub fn canonical_cmp(&self, other: &Self) -> Ordering {
        let a = self.normalize();
        let b = other.normalize();
        a.degree()
            .map(|d| d as i64)
            .unwrap_or(-1)
            .cmp(&b.degree().map(|d| d as i64).unwrap_or(-1))
            .then_with(|| a.coeffs.iter().rev().cmp(b.coeffs.iter().rev()))
    }
}

impl<'a, R: Ring> Add<&'a Polynomial<R>> for &'a Polynomial<R> {
    type Output = Polynomial<R>;
    fn add(self, rhs: &'a Polynomial<R>) -> Polynomial<R> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let (a, b) = (self.with_len(n), rhs.with_len(n));
        Polynomial { coeffs: a.coeffs.into_iter().zip(b.coeffs).map(|(x, y)| x + y).collect() }
    }
}

impl<'a, R: Ring> Sub<&'a Polynomial<R>> for &'a Polynomial<R> {
    type Output = Polynomial<R>;
    fn sub(self, rhs: &'a Polynomial<R>) -> Polynomial<R> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let (a, b) = (self.with_len(n), rhs.with_len(n));
        Polynomial { coeffs: a.coeffs.into_iter().zip(b.coeffs).map(|(x, y)| x - y).collect() }
    }
}

impl<'a, R: Ring> Mul<&'a Polynomial<R>> for &'a Polynomial<R> {
    type Output = Polynomial<R>;
    fn mul(self, rhs: &'a Polynomial<R>) -> Polynomial<R> {
        let zero = self.coeffs[0].zero_like();
        let mut coeffs = vec![zero; self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] = coeffs[i + j].clone() + a.clone() * b.clone();
            }
        }
        Polynomial { coeffs }
    }
}

impl<R: Ring> Neg for &Polynomial<R> {
    type Output = Polynomial<R>;
    fn neg(self) -> Polynomial<R> {
        Polynomial { coeffs: self.coeffs.iter().map(|c| -c.clone()).collect() }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl<R: Ring> $tr<Polynomial<R>> for Polynomial<R> {
            type Output = Polynomial<R>;
            fn $m(self, rhs: Polynomial<R>) -> Polynomial<R> {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl<R: Ring> Neg for Polynomial<R> {
    type Output = Polynomial<R>;
    fn neg(self) -> Polynomial<R> {
        -&self
    }
}

/// Self-delimiting coefficient text used when printing polynomials.
///
/// A leading `-` is treated as the term's sign.
pub trait CoeffText {
    fn coeff_text(&self) -> String;
}

fn rational_text(q: &Rational) -> String {
    if One::is_one(q.denom()) {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

impl CoeffText for Rational {
    fn coeff_text(&self) -> String {
        rational_text(self)
    }
}

impl CoeffText for BigInt {
    fn coeff_text(&self) -> String {
        self.to_string()
    }
}

impl CoeffText for ModInt {
    fn coeff_text(&self) -> String {
        self.value().to_string()
    }
}

impl CoeffText for GaussianRational {
    fn coeff_text(&self) -> String {
        if self.is_real() {
            rational_text(&self.re)
        } else if self.re.is_negative() || (num_traits::Zero::is_zero(&self.re) && self.im.is_negative()) {
            format!("-({})", -self)
        } else {
            format!("({self})")
        }
    }
}

impl CoeffText for ComplexBall {
    fn coeff_text(&self) -> String {
        format!("[{self}]")
    }
}

impl<R: Ring + CoeffText> fmt::Display for Polynomial<R> {
    /// Highest formal term first; zero coefficients are printed so the
    /// formal degree survives a print/parse roundtrip.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            let text = c.coeff_text();
            let (neg, body) = match text.strip_prefix('-') {
                Some(rest) => (true, rest.to_string()),
                None => (false, text),
            };
            let first = k == self.coeffs.len() - 1;
            match (first, neg) {
                (true, true) => write!(f, "-")?,
                (true, false) => {}
                (false, true) => write!(f, " - ")?,
                (false, false) => write!(f, " + ")?,
            }
            match k {
                0 => write!(f, "{body}")?,
                1 => write!(f, "{body}X")?,
                _ => write!(f, "{body}X^{k}")?,
            }
        }
        Ok(())
    }
}
