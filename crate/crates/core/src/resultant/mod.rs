//! Sylvester matrices, resultants, Bézout cofactors read off the adjugate,
//! and comaximality decisions.

mod det;

pub use det::{bareiss_det, berkowitz_det, cofactor_det, subset_expansion_det, Determinant, Matrix};

use crate::error::{Error, Result};
use crate::exactnum::{ComplexBall, Dyadic, Interval};
use crate::polyring::Polynomial;
use crate::ring::{Ring, UnitClassify, UnitStatus};
use crate::spectrum::{self, Spectrum};

/// Sylvester matrix of `a` (formal degree `m`) and `b` (formal degree `n`).
///
/// The first `n` rows hold shifted copies of `a`'s coefficients (highest
/// first), the last `m` rows shifted copies of `b`'s.
#[derive(Clone, Debug, PartialEq)]
pub struct SylvesterMatrix<R> {
    pub matrix: Matrix<R>,
    pub m: usize,
    pub n: usize,
}

pub fn sylvester<R: Ring>(a: &Polynomial<R>, b: &Polynomial<R>) -> Result<SylvesterMatrix<R>> {
    let m = a.formal_degree();
    let n = b.formal_degree();
    if m == 0 || n == 0 {
        return Err(Error::Degree(format!("Sylvester matrix needs formal degrees >= 1, got {m} and {n}")));
    }
    let size = m + n;
    let zero = a.leading().zero_like();
    let mut rows = Vec::with_capacity(size);
    let shifted = |p: &Polynomial<R>, deg: usize, offset: usize| {
        let mut row = vec![zero.clone(); size];
        for k in 0..=deg {
            row[offset + k] = p.coeff(deg - k);
        }
        row
    };
    for i in 0..n {
        rows.push(shifted(a, m, i));
    }
    for i in 0..m {
        rows.push(shifted(b, n, i));
    }
    Ok(SylvesterMatrix { matrix: Matrix::from_rows(rows), m, n })
}

pub fn resultant<R: Determinant>(a: &Polynomial<R>, b: &Polynomial<R>) -> Result<R> {
    let s = sylvester(a, b)?;
    Ok(R::determinant(&s.matrix))
}

/// `s`, `t` with `s*a + t*b = resultant(a, b)`, `deg s < n`, `deg t < m`.
///
/// The coefficients are the cofactors of the last column of the Sylvester
/// matrix, i.e. the last row of its adjugate.
pub fn bezout_from_adjugate<R: Determinant>(a: &Polynomial<R>, b: &Polynomial<R>) -> Result<(Polynomial<R>, Polynomial<R>)> {
    let syl = sylvester(a, b)?;
    let size = syl.m + syl.n;
    let last = size - 1;
    let zero = a.leading().zero_like();
    let cofactor = |j: usize| match syl.matrix.minor(j, last) {
        None => zero.one_like(),
        Some(minor) => {
            let d = R::determinant(&minor);
            if (j + last) % 2 == 0 {
                d
            } else {
                -d
            }
        }
    };
    let v: Vec<R> = (0..size).map(cofactor).collect();
    // row j < n is X^(n-1-j) a; row n+k is X^(m-1-k) b
    let s: Vec<R> = (0..syl.n).map(|p| v[syl.n - 1 - p].clone()).collect();
    let t: Vec<R> = (0..syl.m).map(|p| v[syl.n + syl.m - 1 - p].clone()).collect();
    Ok((Polynomial::new(s), Polynomial::new(t)))
}

/// `s*a + t*b = 1`, obtained by scaling the adjugate cofactors.
#[derive(Clone, Debug, PartialEq)]
pub struct ComaximalCertificate<R> {
    pub s: Polynomial<R>,
    pub t: Polynomial<R>,
    pub resultant_inverse: R,
}

#[derive(Clone, Debug, PartialEq)]
pub struct ExactComaximality<R> {
    pub resultant: R,
    /// Present iff the resultant is a unit.
    pub certificate: Option<ComaximalCertificate<R>>,
}

impl<R> ExactComaximality<R> {
    pub fn is_comaximal(&self) -> bool {
        self.certificate.is_some()
    }
}

/// Comaximality of `a` and `b` together with their formal leading
/// coefficients, decided by whether the resultant is a unit.
pub fn comaximal_exact<R: Determinant + UnitClassify>(a: &Polynomial<R>, b: &Polynomial<R>) -> Result<ExactComaximality<R>> {
    let res = resultant(a, b)?;
    let certificate = match res.unit_status() {
        UnitStatus::Unit(inv) => {
            let (s, t) = bezout_from_adjugate(a, b)?;
            let cert = ComaximalCertificate { s: s.scale(&inv), t: t.scale(&inv), resultant_inverse: inv };
            debug_assert!((&(&cert.s * a) + &(&cert.t * b)).eq_normalized(&a.one_like()));
            Some(cert)
        }
        _ => None,
    };
    Ok(ExactComaximality { resultant: res, certificate })
}

#[derive(Clone, Debug, PartialEq)]
pub enum ComplexComaximality {
    /// `|resultant| >= gap > 0` and the spectra are certifiably apart.
    Comaximal {
        resultant: ComplexBall,
        s: Polynomial<ComplexBall>,
        t: Polynomial<ComplexBall>,
        gap: Dyadic,
        set_distance: Interval,
    },
    /// The resultant is exactly zero; `witness` encloses a shared root.
    NotComaximal { resultant: ComplexBall, witness: ComplexBall, set_distance: Interval },
    Undecided { resultant: ComplexBall },
}

fn require_monic(p: &Polynomial<ComplexBall>, name: &str) -> Result<()> {
    let lead = p.leading();
    if p.formal_degree() == 0 {
        return Err(Error::Degree(format!("{name} must have degree >= 1")));
    }
    if !(lead.is_exact() && *lead.re() == Dyadic::one() && lead.im().is_zero()) {
        return Err(Error::Hypothesis(format!("{name} must be monic")));
    }
    Ok(())
}

/// Tri-state comaximality for monic complex polynomials.
///
/// `Comaximal` needs the resultant ball to exclude zero and a positive lower
/// bound on the distance between the spectra; `NotComaximal` needs an exactly
/// zero resultant. Everything else is `Undecided`.
pub fn comaximal_complex(a: &Polynomial<ComplexBall>, b: &Polynomial<ComplexBall>) -> Result<ComplexComaximality> {
    require_monic(a, "a")?;
    require_monic(b, "b")?;
    let res = resultant(a, b)?;
    let spectra = || -> Result<(Spectrum, Spectrum)> {
        let target = spectrum::default_target();
        Ok((spectrum::compute_spectrum(a, &target)?, spectrum::compute_spectrum(b, &target)?))
    };
    if res.contains_zero() {
        if !(res.is_exact() && res.re().is_zero() && res.im().is_zero()) {
            return Ok(ComplexComaximality::Undecided { resultant: res });
        }
        let (sa, sb) = match spectra() {
            Ok(x) => x,
            Err(e) if e.is_precision() => return Ok(ComplexComaximality::Undecided { resultant: res }),
            Err(e) => return Err(e),
        };
        let (i, j, set_distance) = sa.closest_pair(&sb);
        let witness = sa.roots()[i].union(&sb.roots()[j]);
        return Ok(ComplexComaximality::NotComaximal { resultant: res, witness, set_distance });
    }
    let gap = res.abs().lo;
    let (sa, sb) = match spectra() {
        Ok(x) => x,
        Err(e) if e.is_precision() => return Ok(ComplexComaximality::Undecided { resultant: res }),
        Err(e) => return Err(e),
    };
    let (_, _, set_distance) = sa.closest_pair(&sb);
    if !(gap.is_positive() && set_distance.lo.is_positive()) {
        return Ok(ComplexComaximality::Undecided { resultant: res });
    }
    let (s, t) = bezout_from_adjugate(a, b)?;
    Ok(ComplexComaximality::Comaximal { resultant: res, s, t, gap, set_distance })
}
