//! Root approximation and certification.
//!
//! Approximate roots come from a Durand–Kerner iteration in `f64`, refined
//! by the same iteration on dyadic centers. Certification is separate and
//! does not trust the iteration: it either uses Weierstrass correction discs
//! (the roots of `f` are the eigenvalues of `diag(c) - w 1^T`, so Gerschgorin
//! components of the discs `D(c_i, n |w_i|)` count roots) or, when centers
//! coincide, a homotopy from `prod (X - c_i)` to `f`.

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::exactnum::{ComplexBall, Dyadic, Round};
use crate::polyring::Polynomial;

/// Exact-center complex number used by the refinement loop.
#[derive(Clone, Debug, PartialEq)]
struct Cx {
    re: Dyadic,
    im: Dyadic,
}

impl Cx {
    fn zero() -> Self {
        Cx { re: Dyadic::zero(), im: Dyadic::zero() }
    }

    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    fn add(&self, o: &Cx) -> Cx {
        Cx { re: &self.re + &o.re, im: &self.im + &o.im }
    }

    fn sub(&self, o: &Cx) -> Cx {
        Cx { re: &self.re - &o.re, im: &self.im - &o.im }
    }

    fn mul_exact(&self, o: &Cx) -> Cx {
        Cx { re: &self.re * &o.re - &self.im * &o.im, im: &self.re * &o.im + &self.im * &o.re }
    }

    fn mul(&self, o: &Cx, prec: u32) -> Cx {
        self.mul_exact(o).round(prec)
    }

    fn round(&self, prec: u32) -> Cx {
        Cx { re: self.re.round(prec, Round::Nearest), im: self.im.round(prec, Round::Nearest) }
    }

    fn div(&self, o: &Cx, prec: u32) -> Option<Cx> {
        let n2 = &o.re * &o.re + &o.im * &o.im;
        let nre = &self.re * &o.re + &self.im * &o.im;
        let nim = &self.im * &o.re - &self.re * &o.im;
        Some(Cx { re: Dyadic::div(&nre, &n2, prec, Round::Nearest)?, im: Dyadic::div(&nim, &n2, prec, Round::Nearest)? })
    }

    fn norm_f64(&self) -> f64 {
        self.re.to_f64().hypot(self.im.to_f64())
    }

    fn abs_upper(&self, prec: u32) -> Dyadic {
        (&self.re * &self.re + &self.im * &self.im).sqrt(prec, Round::Ceil)
    }

    fn ball(&self, rad: Dyadic, prec: u32) -> ComplexBall {
        ComplexBall::new(self.re.clone(), self.im.clone(), rad, prec)
    }
}

/// Working precision for roots of `f`: twice the largest coefficient
/// precision plus a margin, so that clustered roots still resolve.
pub(crate) fn precision_of(f: &Polynomial<ComplexBall>) -> u32 {
    2 * f.coeffs().iter().map(|c| c.prec()).max().expect("nonempty") + 64
}

pub(crate) fn check_monic(f: &Polynomial<ComplexBall>) -> Result<()> {
    if f.formal_degree() == 0 {
        return Err(Error::Degree("spectrum needs degree >= 1".into()));
    }
    let lead = f.leading();
    if !(lead.is_exact() && *lead.re() == Dyadic::one() && lead.im().is_zero()) {
        return Err(Error::Hypothesis("polynomial must be monic with an exact leading 1".into()));
    }
    Ok(())
}

fn durand_kerner_f64(coeffs: &[Complex64]) -> Vec<Complex64> {
    let n = coeffs.len() - 1;
    let bound = 1.0 + coeffs[..n].iter().map(|c| c.norm()).fold(0.0, f64::max);
    let start: Vec<Complex64> = (0..n).map(|k| Complex64::from_polar(bound, 2.0 * PI * k as f64 / n as f64 + 0.4)).collect();
    let mut z = start.clone();
    let horner = |x: Complex64| coeffs.iter().rev().fold(Complex64::new(0.0, 0.0), |acc, c| acc * x + c);
    for _ in 0..2000 {
        let mut biggest: f64 = 0.0;
        for i in 0..n {
            let den = (0..n).filter(|&j| j != i).fold(Complex64::new(1.0, 0.0), |acc, j| acc * (z[i] - z[j]));
            if den.norm() == 0.0 {
                continue;
            }
            let corr = horner(z[i]) / den;
            if corr.is_finite() {
                z[i] -= corr;
                biggest = biggest.max(corr.norm() / (1.0 + z[i].norm()));
            }
        }
        if biggest < 1e-15 {
            break;
        }
    }
    if z.iter().all(|w| w.is_finite()) {
        z
    } else {
        start
    }
}

/// Durand–Kerner on dyadic centers until the corrections stall.
fn refine(f: &[Cx], z: &mut [Cx], prec: u32) {
    let n = z.len();
    let eval = |x: &Cx| f.iter().rev().fold(Cx::zero(), |acc, c| acc.mul(x, prec).add(c));
    let mut best = f64::INFINITY;
    let mut stalled = 0;
    for _ in 0..400 {
        let mut biggest: f64 = 0.0;
        for i in 0..n {
            let mut den = Cx { re: Dyadic::one(), im: Dyadic::zero() };
            for j in (0..n).filter(|&j| j != i) {
                den = den.mul(&z[i].sub(&z[j]), prec);
            }
            if den.is_zero() {
                continue;
            }
            let Some(corr) = eval(&z[i]).div(&den, prec) else { continue };
            z[i] = z[i].sub(&corr);
            biggest = biggest.max(corr.norm_f64());
        }
        if biggest == 0.0 {
            return;
        }
        if biggest < best {
            best = biggest;
            stalled = 0;
        } else {
            stalled += 1;
            if stalled >= 8 {
                return;
            }
        }
    }
}

/// Approximate root centers on the `2^-prec` grid.
pub(crate) fn approximate_roots(f: &Polynomial<ComplexBall>) -> Vec<(Dyadic, Dyadic)> {
    let prec = precision_of(f);
    let c64: Vec<Complex64> = f.coeffs().iter().map(|c| Complex64::new(c.re().to_f64(), c.im().to_f64())).collect();
    let start = durand_kerner_f64(&c64);
    let fc: Vec<Cx> = f.coeffs().iter().map(|c| Cx { re: c.re().clone(), im: c.im().clone() }).collect();
    let mut z: Vec<Cx> =
        start.iter().map(|w| Cx { re: Dyadic::from_f64(w.re, prec), im: Dyadic::from_f64(w.im, prec) }).collect();
    refine(&fc, &mut z, prec);
    z.into_iter().map(|c| (c.re, c.im)).collect()
}

fn find(parent: &mut [usize], i: usize) -> usize {
    let mut r = i;
    while parent[r] != r {
        r = parent[r];
    }
    let mut k = i;
    while parent[k] != r {
        let next = parent[k];
        parent[k] = r;
        k = next;
    }
    r
}

/// Connected components of the discs `D(c_i, rho_i)` (touching counts as connected).
fn disc_components(centers: &[Cx], rho: &[Dyadic]) -> Vec<usize> {
    let n = centers.len();
    let mut parent: Vec<usize> = (0..n).collect();
    for i in 0..n {
        for j in i + 1..n {
            let d = centers[i].sub(&centers[j]);
            let s = &rho[i] + &rho[j];
            if &d.re * &d.re + &d.im * &d.im <= &s * &s {
                let (a, b) = (find(&mut parent, i), find(&mut parent, j));
                parent[a] = b;
            }
        }
    }
    (0..n).map(|i| find(&mut parent, i)).collect()
}

/// Radius for each center covering every disc of its component.
fn component_radii(centers: &[Cx], rho: &[Dyadic], prec: u32) -> Vec<Dyadic> {
    let comp = disc_components(centers, rho);
    let n = centers.len();
    (0..n)
        .map(|i| {
            (0..n)
                .filter(|&j| comp[j] == comp[i])
                .map(|j| if i == j { rho[j].clone() } else { centers[i].sub(&centers[j]).abs_upper(prec) + &rho[j] })
                .max()
                .expect("component contains i")
                .round(prec, Round::Ceil)
        })
        .collect()
}

/// Weierstrass discs; `None` when two centers coincide or a correction
/// cannot be bounded.
fn weierstrass_rho(f: &Polynomial<ComplexBall>, centers: &[Cx], prec: u32) -> Option<Vec<Dyadic>> {
    let n = centers.len();
    let balls: Vec<ComplexBall> = centers.iter().map(|c| c.ball(Dyadic::zero(), prec)).collect();
    let mut rho = Vec::with_capacity(n);
    for i in 0..n {
        let mut den = ComplexBall::one(prec);
        for j in (0..n).filter(|&j| j != i) {
            den = &den * &(&balls[i] - &balls[j]);
        }
        let w = f.eval(&balls[i]).checked_div(&den)?;
        rho.push((w.abs_upper() * Dyadic::from_i64(n as i64)).round(prec, Round::Ceil));
    }
    Some(rho)
}

/// Common disc radius from the homotopy between `prod (X - c_i)` and `f`.
fn homotopy_rho(f: &Polynomial<ComplexBall>, centers: &[Cx], prec: u32) -> Dyadic {
    let n = centers.len();
    let mut g = vec![Cx { re: Dyadic::one(), im: Dyadic::zero() }];
    for c in centers {
        let mut next = vec![Cx::zero(); g.len() + 1];
        for (k, gk) in g.iter().enumerate() {
            next[k + 1] = next[k + 1].add(gk);
            next[k] = next[k].sub(&gk.mul_exact(c));
        }
        g = next;
    }
    let mut radius = Dyadic::zero();
    for k in 0..n {
        radius = radius.max(f.coeff(k).abs_upper()).max(g[k].abs_upper(prec));
    }
    let big_r = radius + Dyadic::one();
    let mut err = Dyadic::zero();
    let mut power = Dyadic::one();
    for (k, gk) in g.iter().enumerate() {
        let fk = f.coeff(k);
        let diff = Cx { re: fk.re().clone(), im: fk.im().clone() }.sub(gk).abs_upper(prec) + fk.radius();
        err = err + &diff * &power;
        power = &power * &big_r;
    }
    err.nth_root(n as u32, prec, Round::Ceil)
}

/// Common bound `E^(1/n)`: every root of `f` lies within it of some center.
pub(crate) fn product_bound(f: &Polynomial<ComplexBall>, centers: &[(Dyadic, Dyadic)]) -> Dyadic {
    let cx: Vec<Cx> = centers.iter().map(|(re, im)| Cx { re: re.clone(), im: im.clone() }).collect();
    homotopy_rho(f, &cx, precision_of(f))
}

/// Root balls and the matching bound for the given centers.
pub(crate) fn certify(f: &Polynomial<ComplexBall>, centers: &[(Dyadic, Dyadic)]) -> (Vec<ComplexBall>, Dyadic) {
    let prec = precision_of(f);
    let cx: Vec<Cx> = centers.iter().map(|(re, im)| Cx { re: re.clone(), im: im.clone() }).collect();
    let mut candidates = Vec::new();
    if let Some(rho) = weierstrass_rho(f, &cx, prec) {
        candidates.push(component_radii(&cx, &rho, prec));
    }
    let rho = homotopy_rho(f, &cx, prec);
    candidates.push(component_radii(&cx, &vec![rho; cx.len()], prec));
    let radii = candidates
        .into_iter()
        .min_by(|a, b| a.iter().max().cmp(&b.iter().max()))
        .expect("at least one candidate");
    let bound = radii.iter().max().cloned().unwrap_or_else(Dyadic::zero);
    let balls = cx.iter().zip(radii).map(|(c, r)| c.ball(r, prec)).collect();
    (balls, bound)
}
