use num_traits::{Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::exactnum::Rational;

use super::LatticeExpr;

/// Lattice expression interpolating a grid of cell values.
///
/// Cell `(a, b)` is `[x0 + a h, x0 + (a+1) h] × [y0 + b h, y0 + (b+1) h]`
/// and carries `values[b][a]`. On each cell the approximant lies between the
/// smallest and largest value of the surrounding 3×3 block.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PyramidApproximant {
    pub origin: (Rational, Rational),
    pub h: Rational,
    pub values: Vec<Vec<Rational>>,
    pub offset: Rational,
    pub expr: LatticeExpr,
}

struct Pyramid {
    height: Rational,
    left: Rational,
    bottom: Rational,
}

impl PyramidApproximant {
    pub fn rows(&self) -> usize {
        self.values.len()
    }

    pub fn cols(&self) -> usize {
        self.values[0].len()
    }

    fn pyramid(&self, a: usize, b: usize) -> Pyramid {
        Pyramid {
            height: &self.values[b][a] - &self.offset,
            left: &self.origin.0 + &self.h * Rational::from_integer(a.into()),
            bottom: &self.origin.1 + &self.h * Rational::from_integer(b.into()),
        }
    }

    fn cell_index(&self, t: &Rational, start: &Rational, count: usize) -> usize {
        let k = ((t - start) / &self.h).floor().to_integer();
        k.to_i64().map_or(if k.is_negative() { 0 } else { count - 1 }, |k| k.clamp(0, count as i64 - 1) as usize)
    }

    /// Exact value at `(x, y)` using only the pyramids that can be positive
    /// there.
    pub fn eval_local(&self, x: &Rational, y: &Rational) -> Rational {
        let a = self.cell_index(x, &self.origin.0, self.cols());
        let b = self.cell_index(y, &self.origin.1, self.rows());
        let mut best = Rational::zero();
        for bb in b.saturating_sub(1)..=(b + 1).min(self.rows() - 1) {
            for aa in a.saturating_sub(1)..=(a + 1).min(self.cols() - 1) {
                let v = pyramid_value(&self.pyramid(aa, bb), &self.h, x, y);
                if v > best {
                    best = v;
                }
            }
        }
        &self.offset + best
    }

    /// Smallest and largest value over the 3×3 block around cell `(a, b)`.
    pub fn block_bounds(&self, a: usize, b: usize) -> (Rational, Rational) {
        let mut vals = Vec::new();
        for bb in b.saturating_sub(1)..=(b + 1).min(self.rows() - 1) {
            for aa in a.saturating_sub(1)..=(a + 1).min(self.cols() - 1) {
                vals.push(self.values[bb][aa].clone());
            }
        }
        let lo = vals.iter().min().cloned().expect("block is nonempty");
        let hi = vals.into_iter().max().expect("block is nonempty");
        (lo, hi)
    }
}

fn pyramid_value(p: &Pyramid, h: &Rational, x: &Rational, y: &Rational) -> Rational {
    let c = &p.height;
    if c.is_zero() {
        return Rational::zero();
    }
    let right = &p.left + h;
    let top = &p.bottom + h;
    let ramps = [
        (&right + h - x) / h,
        (x - &p.left + h) / h,
        (&top + h - y) / h,
        (y - &p.bottom + h) / h,
    ];
    let m = ramps.into_iter().min().expect("four ramps");
    let v = c * m.min(Rational::from_integer(1.into()));
    v.max(Rational::zero())
}

fn affine(slope: Rational, var: LatticeExpr, intercept: Rational) -> LatticeExpr {
    LatticeExpr::add(LatticeExpr::scale(slope, var), LatticeExpr::Const(intercept))
}

fn pyramid_expr(p: &Pyramid, h: &Rational) -> LatticeExpr {
    let c = &p.height;
    let k = c / h;
    let right = &p.left + h;
    let top = &p.bottom + h;
    let ramps = [
        affine(-k.clone(), LatticeExpr::Pi1, &k * (&right + h)),
        affine(k.clone(), LatticeExpr::Pi1, &k * (h - &p.left)),
        affine(-k.clone(), LatticeExpr::Pi2, &k * (&top + h)),
        affine(k.clone(), LatticeExpr::Pi2, &k * (h - &p.bottom)),
    ];
    let capped = ramps.into_iter().fold(LatticeExpr::Const(c.clone()), LatticeExpr::inf);
    LatticeExpr::sup(capped, LatticeExpr::Const(Rational::zero()))
}

/// Approximant for cell values on the grid with lower-left corner at the
/// origin.
pub fn pyramid_approx(values: &[Vec<Rational>], h: &Rational) -> Result<PyramidApproximant> {
    pyramid_approx_at((Rational::zero(), Rational::zero()), values, h)
}

pub fn pyramid_approx_at(
    origin: (Rational, Rational),
    values: &[Vec<Rational>],
    h: &Rational,
) -> Result<PyramidApproximant> {
    if !h.is_positive() {
        return Err(Error::Grid("cell size must be positive".into()));
    }
    let cols = values.first().map_or(0, Vec::len);
    if cols == 0 {
        return Err(Error::Grid("grid is empty".into()));
    }
    if let Some(b) = values.iter().position(|row| row.len() != cols) {
        return Err(Error::Grid(format!("row {b} has {} cells, expected {cols}", values[b].len())));
    }
    let offset = values.iter().flatten().min().cloned().expect("grid is nonempty");
    let mut out = PyramidApproximant {
        origin,
        h: h.clone(),
        values: values.to_vec(),
        offset: offset.clone(),
        expr: LatticeExpr::Const(offset.clone()),
    };
    let mut pyramids = Vec::new();
    for b in 0..out.rows() {
        for a in 0..cols {
            let p = out.pyramid(a, b);
            if !p.height.is_zero() {
                pyramids.push(pyramid_expr(&p, h));
            }
        }
    }
    if let Some(top) = LatticeExpr::sup_all(pyramids) {
        out.expr = LatticeExpr::add(LatticeExpr::Const(offset), top);
    }
    Ok(out)
}
