mod common;

use std::time::{Duration, Instant};

use common::*;
use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use zeroset::exactnum::{gcd, int, rat};
use zeroset::resultant::{bezout_from_adjugate, comaximal_complex, resultant, ComplexComaximality, Determinant};
use zeroset::rieszspace::{pyramid_approx, pyramid_approx_at, riesz_norm, Disc, LatticeExpr};
use zeroset::spectrum::{cluster_factor, matching_distance, quasi_approximation, spectra_set_distance, Spectrum};
use zeroset::unitmonic::{factor_unit_monic, factor_unit_monic_random, factor_unit_monic_with, is_unit_poly, uniqueness_check, Elimination};
use zeroset::{ComplexBall, DiscreteRing, Dyadic, GaussianRational, ModInt, Polynomial, Rational};

type Check = Result<String, String>;

const PREC: u32 = 128;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn gaussian(rng: &mut ChaCha8Rng) -> GaussianRational {
    let d1 = rng.gen_range(1..=5);
    let d2 = rng.gen_range(1..=5);
    GaussianRational::new(rat(rng.gen_range(-12..=12), d1), rat(rng.gen_range(-12..=12), d2))
}

fn gaussian_roots(rng: &mut ChaCha8Rng, max: usize) -> Vec<GaussianRational> {
    let n = rng.gen_range(1..=max);
    (0..n).map(|_| gaussian(rng)).collect()
}

fn grid_point(rng: &mut ChaCha8Rng) -> GaussianRational {
    dyadic_point(rng.gen_range(-64..=64), rng.gen_range(-64..=64), 4)
}

fn grid_roots(rng: &mut ChaCha8Rng, lo: usize, hi: usize) -> Vec<GaussianRational> {
    let n = rng.gen_range(lo..=hi);
    (0..n).map(|_| grid_point(rng)).collect()
}

fn product_formula(rng: &mut ChaCha8Rng) -> Check {
    for case in 0..500 {
        let q = gaussian_roots(rng, 5);
        let r = gaussian_roots(rng, 5);
        let expected = q.iter().flat_map(|x| r.iter().map(move |y| x - y)).fold(GaussianRational::one(), |acc, d| &acc * &d);
        let got = resultant(&monic(&q), &monic(&r)).map_err(|e| e.to_string())?;
        ensure(got == expected, || format!("case {case}: {got} != {expected}"))?;
    }
    Ok("500 pairs match the root product exactly".into())
}

fn z8(cs: &[i64]) -> Polynomial<ModInt> {
    Polynomial::new(cs.iter().map(|&c| ModInt::new(c, 8)).collect())
}

fn z8_instance(_: &mut ChaCha8Rng) -> Check {
    let (a, b) = (z8(&[4, 0, 1]), z8(&[0, 4, 1]));
    let res = resultant(&a, &b).map_err(|e| e.to_string())?;
    ensure(res.value() == 0, || format!("resultant is {res}"))?;
    let divides_both = |d: &Polynomial<ModInt>| d.divides(&a) == Some(true) && d.divides(&b) == Some(true);
    for c in 0..8 {
        ensure(!divides_both(&z8(&[c, 1])), || format!("X + {c} divides both"))?;
    }
    for c0 in 0..8 {
        for c1 in 0..8 {
            ensure(!divides_both(&z8(&[c0, c1, 1])), || format!("X^2 + {c1}X + {c0} divides both"))?;
        }
    }
    Ok("resultant 0, no common monic factor among 8 linear and 64 quadratic candidates".into())
}

fn adjugate_identity<R: Determinant + DiscreteRing>(a: &Polynomial<R>, b: &Polynomial<R>) -> Result<(), String> {
    let res = resultant(a, b).map_err(|e| e.to_string())?;
    let (s, t) = bezout_from_adjugate(a, b).map_err(|e| e.to_string())?;
    let lhs = &(&s * a) + &(&t * b);
    ensure((&lhs - &Polynomial::constant(res)).is_zero(), || "sa + tb differs from the resultant".into())
}

fn int_coeffs(rng: &mut ChaCha8Rng) -> Vec<i64> {
    let n = rng.gen_range(2..=6);
    let mut cs: Vec<i64> = (0..n).map(|_| rng.gen_range(-9..=9)).collect();
    if cs[n - 1] == 0 {
        cs[n - 1] = 1;
    }
    cs
}

fn adjugate(rng: &mut ChaCha8Rng) -> Check {
    for case in 0..500 {
        let tag = |e: String| format!("case {case}: {e}");
        match case % 3 {
            0 => {
                let p = |c: &[i64]| Polynomial::new(c.iter().map(|&x| BigInt::from(x)).collect());
                adjugate_identity(&p(&int_coeffs(rng)), &p(&int_coeffs(rng))).map_err(tag)?;
            }
            1 => adjugate_identity(&z8(&int_coeffs(rng)), &z8(&int_coeffs(rng))).map_err(tag)?,
            _ => {
                let c = gaussian(rng);
                let c = if c.is_zero() { GaussianRational::one() } else { c };
                let a = monic(&gaussian_roots(rng, 4)).scale(&c);
                adjugate_identity(&a, &monic(&gaussian_roots(rng, 4))).map_err(tag)?;
            }
        }
    }
    Ok("500 pairs over Z, Z_8 and Q(i) satisfy sa + tb = res".into())
}

fn eligible(rng: &mut ChaCha8Rng) -> (Polynomial<ModInt>, usize) {
    let modulus = [8u64, 9, 16][rng.gen_range(0..3)];
    let radical = if modulus == 9 { 3 } else { 2 };
    let deg = rng.gen_range(0..=8);
    let m = rng.gen_range(0..=deg);
    let mut cs: Vec<i64> = (0..m).map(|_| rng.gen_range(0..modulus as i64)).collect();
    let unit = loop {
        let u = rng.gen_range(1..modulus);
        if gcd(u, modulus) == 1 {
            break u as i64;
        }
    };
    cs.push(unit);
    cs.extend((m..deg).map(|_| radical * rng.gen_range(0..modulus as i64 / radical)));
    (Polynomial::new(cs.into_iter().map(|c| ModInt::new(c, modulus)).collect()), m)
}

fn unit_monic(rng: &mut ChaCha8Rng) -> Check {
    for case in 0..200 {
        let (p, m) = eligible(rng);
        let f = factor_unit_monic(&p, m).map_err(|e| format!("case {case}: {e}"))?;
        ensure(f.verify(&p), || format!("case {case}: factorization of {p} does not verify"))?;
        ensure(is_unit_poly(&f.unit).is_some(), || format!("case {case}: {} is not a unit", f.unit))?;
        for order in [Elimination::HighestFirst, Elimination::LowestFirst] {
            let g = factor_unit_monic_with(&p, m, order).map_err(|e| e.to_string())?;
            ensure(uniqueness_check(&f, &g), || format!("case {case}: {order:?} disagrees on {p}"))?;
        }
        let g = factor_unit_monic_random(&p, m, rng).map_err(|e| e.to_string())?;
        ensure(uniqueness_check(&f, &g), || format!("case {case}: random order disagrees on {p}"))?;
    }
    Ok("200 factorizations verified and order independent".into())
}

fn spectrum_certification(rng: &mut ChaCha8Rng) -> Check {
    let mut worst = 0.0f64;
    for case in 0..200 {
        let rs = gaussian_roots(rng, 6);
        let s = Spectrum::of(&balls(&monic(&rs), PREC)).map_err(|e| format!("case {case}: {e}"))?;
        let planted: Vec<ComplexBall> = rs.iter().map(|r| ComplexBall::from_gaussian(r, PREC)).collect();
        let d = matching_distance(s.roots(), &planted).map_err(|e| e.to_string())?;
        let bound = s.matching_bound().to_f64();
        worst = worst.max(bound);
        ensure(d.lo <= *s.matching_bound(), || format!("case {case}: distance {} exceeds bound {bound}", d.lo.to_f64()))?;
        ensure(bound <= 1e-6, || format!("case {case}: bound {bound:e} for roots {rs:?}"))?;
    }
    Ok(format!("200 planted spectra, largest matching bound {worst:e}"))
}

fn metric_oracles(rng: &mut ChaCha8Rng) -> Check {
    let mut widest = 0.0f64;
    for case in 0..200 {
        let rs = grid_roots(rng, 1, 5);
        let other = grid_roots(rng, 1, 5);
        let z = grid_point(rng);
        let sf = Spectrum::of(&balls(&monic(&rs), PREC)).map_err(|e| e.to_string())?;
        let sg = Spectrum::of(&balls(&monic(&other), PREC)).map_err(|e| e.to_string())?;
        let diam2 = rs.iter().flat_map(|a| rs.iter().map(move |b| dist2(a, b))).max().expect("nonempty");
        let set2 = rs.iter().map(|a| min_dist2(&other, a)).min().expect("nonempty");
        let checks = [
            ("diameter", sf.diameter(), diam2),
            ("point distance", sf.distance_to_point(&ComplexBall::from_gaussian(&z, PREC)), min_dist2(&rs, &z)),
            ("set distance", sf.closest_pair(&sg).2, set2),
        ];
        for (name, interval, exact2) in checks {
            ensure(encloses_sqrt(&interval, &exact2), || format!("case {case}: {name} misses the oracle"))?;
            let w = width(&interval);
            widest = widest.max(w);
            ensure(w <= 1e-6, || format!("case {case}: {name} width {w:e}"))?;
        }
    }
    Ok(format!("200 cases, widest interval {widest:e}"))
}

fn clusters(rng: &mut ChaCha8Rng) -> Check {
    for case in 0..100 {
        let (c1, c2) = loop {
            let (a, b) = (grid_point(rng), grid_point(rng));
            if dist2(&a, &b) >= int(1) {
                break (a, b);
            }
        };
        let (n1, n2) = (rng.gen_range(1..=3), rng.gen_range(1..=3));
        let roots: Vec<GaussianRational> = (0..n1 + n2)
            .map(|i| (if i < n1 { &c1 } else { &c2 }) + &dyadic_point(rng.gen_range(-3..=3), rng.gen_range(-3..=3), 7))
            .collect();
        let f = monic(&roots);
        let cf = cluster_factor(&balls(&f, PREC), &Dyadic::pow2(-1)).map_err(|e| format!("case {case}: {e}"))?;
        ensure(cf.len() == 2, || format!("case {case}: {} clusters", cf.len()))?;
        ensure(cf.pairwise_gaps[0][1].is_positive(), || format!("case {case}: gap not certified"))?;
        let product = &cf.factors[0] * &cf.factors[1];
        for (k, c) in f.coeffs().iter().enumerate() {
            ensure(product.coeff(k).contains(c), || format!("case {case}: coefficient {k} escapes the product"))?;
        }
    }
    Ok("100 two-cluster inputs split into 2 certified factors".into())
}

fn comaximality(rng: &mut ChaCha8Rng) -> Check {
    let (mut decided, mut tries, mut shared) = (0, 0, 0);
    while decided < 200 {
        tries += 1;
        if tries > 2000 {
            return Err(format!("only {decided} decided cases in {tries} tries"));
        }
        let rs = grid_roots(rng, 1, 4);
        let mut other = grid_roots(rng, 1, 4);
        if rng.gen_bool(0.5) {
            other[0] = rs[rng.gen_range(0..rs.len())].clone();
        }
        let (a, b) = (balls(&monic(&rs), PREC), balls(&monic(&other), PREC));
        let apart = rs.iter().all(|x| !other.contains(x));
        let sd = spectra_set_distance(&a, &b).map_err(|e| e.to_string())?;
        ensure(encloses_sqrt(&sd, &rs.iter().map(|x| min_dist2(&other, x)).min().expect("nonempty")), || {
            format!("case {tries}: set distance misses the oracle")
        })?;
        let verdict = match comaximal_complex(&a, &b).map_err(|e| e.to_string())? {
            ComplexComaximality::Comaximal { .. } => true,
            ComplexComaximality::NotComaximal { .. } => false,
            ComplexComaximality::Undecided { .. } => continue,
        };
        decided += 1;
        shared += usize::from(!apart);
        ensure(verdict == apart, || format!("case {tries}: comaximal = {verdict} but roots apart = {apart}"))?;
        if sd.lo.is_positive() {
            ensure(verdict, || format!("case {tries}: positive set distance but not comaximal"))?;
        }
    }
    Ok(format!("200 decided cases agree ({shared} with a shared root, {} undecided)", tries - decided))
}

fn riesz(_: &mut ChaCha8Rng) -> Check {
    let f = balls(&Polynomial::new(vec![GaussianRational::one(), GaussianRational::zero(), GaussianRational::one()]), PREC);
    let disc = Disc::new(GaussianRational::zero(), int(2)).map_err(|e| e.to_string())?;
    let eps = rat(1, 1000);
    let roots = [GaussianRational::new(int(0), int(1)), GaussianRational::new(int(0), int(-1))];
    let near = Dyadic::pow2(-30);
    let quasi = quasi_approximation(&f, &near).map_err(|e| e.to_string())?;
    let mut report = Vec::new();
    for (name, e, target) in [("pi2", LatticeExpr::Pi2, 1), ("pi1", LatticeExpr::Pi1, 0)] {
        let n = riesz_norm(&e, &f, &disc, &eps).map_err(|e| e.to_string())?;
        let mu = n.norm.to_rational();
        ensure((&mu - int(target)).abs() <= eps, || format!("{name} norm {mu}"))?;
        let slack = near.to_rational();
        for p in roots.iter().chain(&quasi.points).chain(&n.s_prime) {
            let v = e.eval_exact(&p.re, &p.im);
            ensure(v <= &mu + &eps + &slack, || format!("{name}: value {v} at {p} exceeds the norm"))?;
        }
        let w = &n.witness;
        ensure(min_dist2(&roots, w) < &n.theta * &n.theta, || format!("{name}: witness {w} is not near the zero set"))?;
        ensure(e.eval_exact(&w.re, &w.im) > &mu - &eps, || format!("{name}: witness value too small"))?;
        report.push(format!("{name} = {:.6}", n.norm.to_f64()));
    }
    Ok(report.join(", "))
}

fn random_grid(rng: &mut ChaCha8Rng) -> Vec<Vec<Rational>> {
    let (rows, cols) = (rng.gen_range(1..=12), rng.gen_range(1..=12));
    (0..rows).map(|_| (0..cols).map(|_| rat(rng.gen_range(-50..=50), rng.gen_range(1..=7))).collect()).collect()
}

fn block_bound(rng: &mut ChaCha8Rng) -> Check {
    for g in 0..100 {
        let values = random_grid(rng);
        let h = rat(rng.gen_range(1..=8), rng.gen_range(1..=8));
        let origin = (rat(rng.gen_range(-20..=20), 3), rat(rng.gen_range(-20..=20), 3));
        let p = pyramid_approx_at(origin.clone(), &values, &h).map_err(|e| e.to_string())?;
        let (rows, cols) = (p.rows() as i64, p.cols() as i64);
        for k in 0..1000 {
            let (sx, sy) = (rng.gen_range(0..cols * 1024), rng.gen_range(0..rows * 1024));
            let x = &origin.0 + &h * rat(sx, 1024);
            let y = &origin.1 + &h * rat(sy, 1024);
            let (a, b) = ((sx / 1024) as usize, (sy / 1024) as usize);
            let v = p.eval_local(&x, &y);
            let (lo, hi) = p.block_bounds(a, b);
            ensure(lo <= v && v <= hi, || format!("grid {g}: {v} outside [{lo}, {hi}] in cell ({a}, {b})"))?;
            if k < 20 {
                ensure(p.expr.eval_exact(&x, &y) == v, || format!("grid {g}: expression and local value differ"))?;
            }
        }
    }

    let n = 64;
    let h = rat(1, n);
    let center = |k: i64| &h * int(k) + &h / int(2);
    let values: Vec<Vec<Rational>> = (0..n).map(|_| (0..n).map(center).collect()).collect();
    let p = pyramid_approx(&values, &h).map_err(|e| e.to_string())?;
    let f = LatticeExpr::Pi1;
    let bound = rat(17, 8) * f.lipschitz() * &h;
    let mut worst = int(0);
    for _ in 0..1000 {
        let x = rat(rng.gen_range(0..=1 << 20), 1 << 20);
        let y = rat(rng.gen_range(0..=1 << 20), 1 << 20);
        worst = worst.max((p.eval_local(&x, &y) - f.eval_exact(&x, &y)).abs());
    }
    ensure(worst <= bound, || format!("sampled error {worst} above {bound}"))?;
    Ok(format!("100 grids x 1000 points inside block bounds; f = x error {:.5} <= {:.5}", to_f64(&worst), to_f64(&bound)))
}

fn to_f64(q: &Rational) -> f64 {
    q.to_f64().unwrap_or(f64::NAN)
}

type Criterion = (u32, &'static str, u64, fn(&mut ChaCha8Rng) -> Check);

#[test]
fn acceptance() {
    let criteria: [Criterion; 10] = [
        (1, "resultant product formula", 30, product_formula),
        (2, "Z_8 resultant without common factor", 1, z8_instance),
        (3, "Bezout identity from the adjugate", 30, adjugate),
        (4, "unit times monic factorization", 10, unit_monic),
        (5, "certified spectrum", 10, spectrum_certification),
        (6, "metric oracles", 10, metric_oracles),
        (7, "cluster factorization", 20, clusters),
        (8, "comaximality and set distance", 20, comaximality),
        (9, "Riesz norm over X^2 + 1", 10, riesz),
        (10, "pyramid block bound", 20, block_bound),
    ];
    let mut failed = Vec::new();
    for (id, name, limit, run) in criteria {
        let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0000 + u64::from(id));
        let start = Instant::now();
        let outcome = run(&mut rng);
        let elapsed = start.elapsed();
        let outcome = outcome.and_then(|msg| {
            if elapsed < Duration::from_secs(limit) {
                Ok(msg)
            } else {
                Err(format!("took {elapsed:.2?}, limit {limit} s"))
            }
        });
        match outcome {
            Ok(msg) => println!("PASS criterion {id} ({name}, {elapsed:.2?}): {msg}"),
            Err(msg) => {
                println!("FAIL criterion {id} ({name}, {elapsed:.2?}): {msg}");
                failed.push(id);
            }
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
