//! Lattice expressions on a disc, their sup-norm over the zero set of a
//! monic polynomial, and piecewise-affine approximation on a square grid.

mod norm;
mod pyramid;

use std::fmt;

use num_traits::{Signed, Zero};

pub use norm::{riesz_abs_norm, riesz_norm, RieszNorm};
pub use pyramid::{pyramid_approx, pyramid_approx_at, PyramidApproximant};

use crate::error::{Error, Result};
use crate::exactnum::{ComplexBall, GaussianRational, Interval, Rational};

/// Element of the vector lattice generated by `1` and the two coordinate
/// projections.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LatticeExpr {
    Const(Rational),
    /// Real part.
    Pi1,
    /// Imaginary part.
    Pi2,
    Add(Box<LatticeExpr>, Box<LatticeExpr>),
    Scale(Rational, Box<LatticeExpr>),
    Sup(Box<LatticeExpr>, Box<LatticeExpr>),
    Inf(Box<LatticeExpr>, Box<LatticeExpr>),
}

impl LatticeExpr {
    pub fn constant(c: Rational) -> Self {
        LatticeExpr::Const(c)
    }

    pub fn add(a: LatticeExpr, b: LatticeExpr) -> Self {
        LatticeExpr::Add(Box::new(a), Box::new(b))
    }

    pub fn scale(c: Rational, e: LatticeExpr) -> Self {
        LatticeExpr::Scale(c, Box::new(e))
    }

    pub fn sup(a: LatticeExpr, b: LatticeExpr) -> Self {
        LatticeExpr::Sup(Box::new(a), Box::new(b))
    }

    pub fn inf(a: LatticeExpr, b: LatticeExpr) -> Self {
        LatticeExpr::Inf(Box::new(a), Box::new(b))
    }

    /// `e ∨ 0 - e ∧ 0`.
    pub fn abs(&self) -> Self {
        let zero = || LatticeExpr::Const(Rational::zero());
        LatticeExpr::add(
            LatticeExpr::sup(self.clone(), zero()),
            LatticeExpr::scale(-Rational::from_integer(1.into()), LatticeExpr::inf(self.clone(), zero())),
        )
    }

    /// Balanced join of a nonempty list.
    pub fn sup_all(mut items: Vec<LatticeExpr>) -> Option<Self> {
        while items.len() > 1 {
            let mut next = Vec::with_capacity(items.len().div_ceil(2));
            let mut it = items.into_iter();
            while let Some(a) = it.next() {
                next.push(match it.next() {
                    Some(b) => LatticeExpr::sup(a, b),
                    None => a,
                });
            }
            items = next;
        }
        items.pop()
    }

    /// Enclosure of the value over the ball `z`.
    pub fn eval(&self, z: &ComplexBall) -> Interval {
        let prec = z.prec();
        match self {
            LatticeExpr::Const(c) => Interval::from_rational(c, prec),
            LatticeExpr::Pi1 => z.re_interval(),
            LatticeExpr::Pi2 => z.im_interval(),
            LatticeExpr::Add(a, b) => a.eval(z).add(&b.eval(z)),
            LatticeExpr::Scale(c, e) => e.eval(z).scale(c, prec),
            LatticeExpr::Sup(a, b) => a.eval(z).sup(&b.eval(z)),
            LatticeExpr::Inf(a, b) => a.eval(z).inf(&b.eval(z)),
        }
    }

    /// Exact value at the point `x + iy`.
    pub fn eval_exact(&self, x: &Rational, y: &Rational) -> Rational {
        match self {
            LatticeExpr::Const(c) => c.clone(),
            LatticeExpr::Pi1 => x.clone(),
            LatticeExpr::Pi2 => y.clone(),
            LatticeExpr::Add(a, b) => a.eval_exact(x, y) + b.eval_exact(x, y),
            LatticeExpr::Scale(c, e) => c * e.eval_exact(x, y),
            LatticeExpr::Sup(a, b) => a.eval_exact(x, y).max(b.eval_exact(x, y)),
            LatticeExpr::Inf(a, b) => a.eval_exact(x, y).min(b.eval_exact(x, y)),
        }
    }

    /// Lipschitz constant with respect to the Euclidean distance.
    pub fn lipschitz(&self) -> Rational {
        match self {
            LatticeExpr::Const(_) => Rational::zero(),
            LatticeExpr::Pi1 | LatticeExpr::Pi2 => Rational::from_integer(1.into()),
            LatticeExpr::Add(a, b) => a.lipschitz() + b.lipschitz(),
            LatticeExpr::Scale(c, e) => c.abs() * e.lipschitz(),
            LatticeExpr::Sup(a, b) | LatticeExpr::Inf(a, b) => a.lipschitz().max(b.lipschitz()),
        }
    }

    /// Number of nodes.
    pub fn size(&self) -> usize {
        match self {
            LatticeExpr::Const(_) | LatticeExpr::Pi1 | LatticeExpr::Pi2 => 1,
            LatticeExpr::Scale(_, e) => 1 + e.size(),
            LatticeExpr::Add(a, b) | LatticeExpr::Sup(a, b) | LatticeExpr::Inf(a, b) => 1 + a.size() + b.size(),
        }
    }
}

impl fmt::Display for LatticeExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LatticeExpr::Const(c) => write!(f, "{c}"),
            LatticeExpr::Pi1 => write!(f, "x"),
            LatticeExpr::Pi2 => write!(f, "y"),
            LatticeExpr::Add(a, b) => write!(f, "({a} + {b})"),
            LatticeExpr::Scale(c, e) => write!(f, "{c}*{e}"),
            LatticeExpr::Sup(a, b) => write!(f, "max({a}, {b})"),
            LatticeExpr::Inf(a, b) => write!(f, "min({a}, {b})"),
        }
    }
}

/// Closed disc with rational radius.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Disc {
    pub center: GaussianRational,
    pub radius: Rational,
}

impl Disc {
    pub fn new(center: GaussianRational, radius: Rational) -> Result<Self> {
        if !radius.is_positive() {
            return Err(Error::Geometry("disc radius must be positive".into()));
        }
        Ok(Disc { center, radius })
    }

    /// Every point of the ball lies in the disc.
    pub fn contains_ball(&self, b: &ComplexBall) -> bool {
        let c = ComplexBall::from_gaussian(&self.center, b.prec());
        if !c.is_exact() {
            let d = b.distance(&c).hi + c.radius();
            return d.to_rational() + b.radius().to_rational() <= self.radius;
        }
        // exact test |center(b) - c| + r(b) <= R
        let slack = self.radius.clone() - b.radius().to_rational();
        if slack.is_negative() {
            return false;
        }
        let g = b.center_gaussian();
        let dre = g.re - &self.center.re;
        let dim = g.im - &self.center.im;
        &dre * &dre + &dim * &dim <= &slack * &slack
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::{int, rat, Dyadic};

    fn at(re: i64, im: i64) -> ComplexBall {
        ComplexBall::from_gaussian(&GaussianRational::from_ints(re, im), 128)
    }

    fn point(i: &Interval, v: i64) -> bool {
        i.lo == Dyadic::from_i64(v) && i.hi == Dyadic::from_i64(v)
    }

    #[test]
    fn eval_examples() {
        assert!(point(&LatticeExpr::Pi2.eval(&at(0, 1)), 1));
        let e = LatticeExpr::sup(LatticeExpr::Pi1, LatticeExpr::Const(int(0)));
        assert!(point(&e.eval(&at(-2, 0)), 0));
        let e = LatticeExpr::add(LatticeExpr::Pi1, LatticeExpr::scale(int(2), LatticeExpr::Pi2));
        assert!(point(&e.eval(&at(1, 1)), 3));
        assert_eq!(e.eval_exact(&int(1), &int(1)), int(3));
    }

    #[test]
    fn lipschitz_rules() {
        let e = LatticeExpr::add(
            LatticeExpr::scale(rat(-3, 2), LatticeExpr::Pi1),
            LatticeExpr::inf(LatticeExpr::Pi2, LatticeExpr::Const(int(7))),
        );
        assert_eq!(e.lipschitz(), rat(5, 2));
        assert_eq!(LatticeExpr::Pi1.abs().lipschitz(), int(2));
    }

    #[test]
    fn abs_expression() {
        let e = LatticeExpr::Const(int(-3)).abs();
        assert_eq!(e.eval_exact(&int(0), &int(0)), int(3));
    }

    #[test]
    fn disc_containment() {
        let d = Disc::new(GaussianRational::zero(), int(2)).unwrap();
        assert!(d.contains_ball(&at(0, 1)));
        assert!(d.contains_ball(&at(2, 0)));
        assert!(!d.contains_ball(&at(2, 1)));
        assert!(Disc::new(GaussianRational::zero(), int(0)).is_err());
    }
}
