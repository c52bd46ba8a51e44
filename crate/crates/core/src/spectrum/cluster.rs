use crate::error::{Error, Result};
use crate::exactnum::{ComplexBall, Dyadic};
use crate::polyring::Polynomial;

use super::Spectrum;

/// `f = g_1 ... g_k` with small, mutually separated spectra.
#[derive(Clone, Debug, PartialEq)]
pub struct ClusterFactorization {
    /// Monic factors, `g_i = prod (X - s)` over the balls of cluster `i`.
    pub factors: Vec<Polynomial<ComplexBall>>,
    /// Root balls of each factor.
    pub clusters: Vec<Vec<ComplexBall>>,
    /// Certified upper bounds on the diameter of each factor's spectrum.
    pub diameters: Vec<Dyadic>,
    /// `pairwise_gaps[i][j]`: lower bound on the set-distance between the
    /// spectra of factors `i` and `j` (zero on the diagonal).
    pub pairwise_gaps: Vec<Vec<Dyadic>>,
}

impl ClusterFactorization {
    pub fn len(&self) -> usize {
        self.factors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.factors.is_empty()
    }
}

fn link_classes(balls: &[ComplexBall], r: &Dyadic) -> Vec<usize> {
    let n = balls.len();
    let scale = Dyadic::from_i64(2 * n as i64);
    let r2 = r * r;
    let mut label: Vec<usize> = (0..n).collect();
    // transitive closure of |c_i - c_j| <= r / (2n)
    let mut changed = true;
    while changed {
        changed = false;
        for i in 0..n {
            for j in 0..n {
                if label[j] <= label[i] {
                    continue;
                }
                let dre = balls[i].re() - balls[j].re();
                let dim = balls[i].im() - balls[j].im();
                let d2 = &dre * &dre + &dim * &dim;
                if &d2 * &(&scale * &scale) <= r2 {
                    label[j] = label[i];
                    changed = true;
                }
            }
        }
    }
    label
}

fn split(balls: Vec<ComplexBall>, eps: &Dyadic, out: &mut Vec<Vec<ComplexBall>>) -> Result<()> {
    let spec = Spectrum::from_balls(balls);
    let diam = spec.diameter();
    if diam.hi < *eps {
        out.push(spec.roots);
        return Ok(());
    }
    let n = spec.degree();
    let r = diam.lo.clone();
    if !r.is_positive() || spec.matching_bound() * &Dyadic::from_i64(8 * n as i64) > r {
        return Err(Error::PrecisionExhausted(format!(
            "root balls too wide (bound {}) to split a cluster of diameter {}",
            spec.matching_bound().to_f64(),
            diam
        )));
    }
    let label = link_classes(&spec.roots, &r);
    let (g, h): (Vec<_>, Vec<_>) = spec.roots.into_iter().zip(&label).partition(|(_, &l)| l == label[0]);
    if h.is_empty() {
        return Err(Error::PrecisionExhausted("linkage did not split the cluster".into()));
    }
    split(g.into_iter().map(|(b, _)| b).collect(), eps, out)?;
    split(h.into_iter().map(|(b, _)| b).collect(), eps, out)
}

/// Factor a monic `f` into clusters of spectral diameter below `eps`.
pub fn cluster_factor(f: &Polynomial<ComplexBall>, eps: &Dyadic) -> Result<ClusterFactorization> {
    if !eps.is_positive() {
        return Err(Error::Hypothesis("cluster diameter bound must be positive".into()));
    }
    let spec = Spectrum::of(f)?;
    let mut clusters = Vec::new();
    split(spec.roots().to_vec(), eps, &mut clusters)?;
    let one = ComplexBall::one(f.leading().prec());
    let factors: Vec<Polynomial<ComplexBall>> = if clusters.len() == 1 {
        vec![f.clone()]
    } else {
        clusters.iter().map(|c| Polynomial::from_roots(c, &one)).collect()
    };
    let diameters = clusters.iter().map(|c| Spectrum::from_balls(c.clone()).diameter().hi).collect();
    let k = clusters.len();
    let mut pairwise_gaps = vec![vec![Dyadic::zero(); k]; k];
    for i in 0..k {
        for j in i + 1..k {
            let gap = clusters[i]
                .iter()
                .flat_map(|a| clusters[j].iter().map(move |b| a.distance(b).lo))
                .min()
                .expect("clusters are nonempty");
            if !gap.is_positive() {
                return Err(Error::PrecisionExhausted("clusters are not certifiably apart".into()));
            }
            pairwise_gaps[i][j] = gap.clone();
            pairwise_gaps[j][i] = gap;
        }
    }
    Ok(ClusterFactorization { factors, clusters, diameters, pairwise_gaps })
}
