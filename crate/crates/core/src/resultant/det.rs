//! Square matrices and determinants by ring-appropriate strategies.

use num_bigint::BigInt;

use crate::exactnum::{ComplexBall, GaussianRational, ModInt, Rational};
use crate::ring::{IntegralDomain, Ring};

/// Dense square matrix, row-major.
#[derive(Clone, Debug, PartialEq)]
pub struct Matrix<R> {
    size: usize,
    data: Vec<R>,
}

impl<R: Ring> Matrix<R> {
    pub fn from_rows(rows: Vec<Vec<R>>) -> Self {
        let size = rows.len();
        assert!(size > 0 && rows.iter().all(|r| r.len() == size), "matrix must be square and nonempty");
        Matrix { size, data: rows.into_iter().flatten().collect() }
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn get(&self, i: usize, j: usize) -> &R {
        &self.data[i * self.size + j]
    }

    pub fn rows(&self) -> Vec<Vec<R>> {
        self.data.chunks(self.size).map(|r| r.to_vec()).collect()
    }

    /// Delete row `i` and column `j`; `None` for a 1×1 matrix.
    pub fn minor(&self, i: usize, j: usize) -> Option<Self> {
        if self.size == 1 {
            return None;
        }
        let mut data = Vec::with_capacity((self.size - 1) * (self.size - 1));
        for r in (0..self.size).filter(|&r| r != i) {
            for c in (0..self.size).filter(|&c| c != j) {
                data.push(self.get(r, c).clone());
            }
        }
        Some(Matrix { size: self.size - 1, data })
    }
}

/// Rings with a chosen determinant algorithm.
pub trait Determinant: Ring {
    fn determinant(m: &Matrix<Self>) -> Self;
}

/// Cofactor expansion along the first row.
pub fn cofactor_det<R: Ring>(m: &Matrix<R>) -> R {
    match m.size {
        1 => m.get(0, 0).clone(),
        2 => m.get(0, 0).clone() * m.get(1, 1).clone() - m.get(0, 1).clone() * m.get(1, 0).clone(),
        n => {
            let mut acc = m.get(0, 0).zero_like();
            for j in 0..n {
                let term = m.get(0, j).clone() * cofactor_det(&m.minor(0, j).expect("size > 1"));
                acc = if j % 2 == 0 { acc + term } else { acc - term };
            }
            acc
        }
    }
}

/// Fraction-free Gaussian elimination; every division is exact.
pub fn bareiss_det<R: IntegralDomain>(m: &Matrix<R>) -> R {
    let n = m.size;
    let mut a = m.rows();
    let mut prev = m.get(0, 0).one_like();
    let mut negate = false;
    for k in 0..n - 1 {
        if a[k][k].eq_zero() {
            match (k + 1..n).find(|&i| !a[i][k].eq_zero()) {
                Some(i) => {
                    a.swap(k, i);
                    negate = !negate;
                }
                None => return prev.zero_like(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = a[i][j].clone() * a[k][k].clone() - a[i][k].clone() * a[k][j].clone();
                a[i][j] = num.divide_exact(&prev);
            }
        }
        prev = a[k][k].clone();
    }
    let d = a[n - 1][n - 1].clone();
    if negate {
        -d
    } else {
        d
    }
}

/// Division-free Laplace expansion memoized over column subsets,
/// `O(n^2 2^n)` ring operations.
pub fn subset_expansion_det<R: Ring>(m: &Matrix<R>) -> R {
    let n = m.size;
    assert!(n <= 24, "subset expansion limited to 24×24");
    let zero = m.get(0, 0).zero_like();
    let mut dp: Vec<Option<R>> = vec![None; 1 << n];
    dp[0] = Some(zero.one_like());
    for mask in 0usize..(1 << n) {
        let Some(val) = dp[mask].take() else { continue };
        let row = mask.count_ones() as usize;
        if row == n {
            return val;
        }
        for c in (0..n).filter(|c| mask & (1 << c) == 0) {
            let entry = m.get(row, c);
            let term = val.clone() * entry.clone();
            // inversions gained: chosen columns to the right of c
            let negative = (mask >> (c + 1)).count_ones() % 2 == 1;
            let next = mask | (1 << c);
            let cur = dp[next].take().unwrap_or_else(|| zero.clone());
            dp[next] = Some(if negative { cur - term } else { cur + term });
        }
    }
    unreachable!("full mask is always reached")
}

/// Berkowitz characteristic-polynomial method, division-free, `O(n^4)`.
pub fn berkowitz_det<R: Ring>(m: &Matrix<R>) -> R {
    let n = m.size;
    let rows = m.rows();
    let v = berkowitz_vector(&rows);
    if n % 2 == 0 {
        v[n].clone()
    } else {
        -v[n].clone()
    }
}

/// Coefficients of `det(xI - M)`, highest first.
fn berkowitz_vector<R: Ring>(m: &[Vec<R>]) -> Vec<R> {
    let n = m.len();
    let one = m[0][0].one_like();
    if n == 1 {
        return vec![one, -m[0][0].clone()];
    }
    let a = m[0][0].clone();
    let r: Vec<R> = m[0][1..].to_vec();
    let sub: Vec<Vec<R>> = m[1..].iter().map(|row| row[1..].to_vec()).collect();
    let mut col: Vec<R> = m[1..].iter().map(|row| row[0].clone()).collect();
    let dot = |x: &[R], y: &[R]| x.iter().zip(y).fold(a.zero_like(), |acc, (p, q)| acc + p.clone() * q.clone());
    let mut diags = vec![one.clone(), -a.clone()];
    for i in 0..n - 1 {
        if i > 0 {
            col = sub.iter().map(|row| dot(row, &col)).collect();
        }
        diags.push(-dot(&r, &col));
    }
    let w = berkowitz_vector(&sub);
    (0..=n)
        .map(|i| (0..n.min(i + 1)).fold(a.zero_like(), |acc, j| acc + diags[i - j].clone() * w[j].clone()))
        .collect()
}

fn division_free<R: Ring>(m: &Matrix<R>) -> R {
    match m.size {
        0..=4 => cofactor_det(m),
        5..=16 => subset_expansion_det(m),
        _ => berkowitz_det(m),
    }
}

fn domain<R: IntegralDomain>(m: &Matrix<R>) -> R {
    if m.size <= 4 {
        cofactor_det(m)
    } else {
        bareiss_det(m)
    }
}

impl Determinant for Rational {
    fn determinant(m: &Matrix<Self>) -> Self {
        domain(m)
    }
}

impl Determinant for GaussianRational {
    fn determinant(m: &Matrix<Self>) -> Self {
        domain(m)
    }
}

impl Determinant for BigInt {
    fn determinant(m: &Matrix<Self>) -> Self {
        domain(m)
    }
}

impl Determinant for ModInt {
    fn determinant(m: &Matrix<Self>) -> Self {
        division_free(m)
    }
}

impl Determinant for ComplexBall {
    fn determinant(m: &Matrix<Self>) -> Self {
        division_free(m)
    }
}
