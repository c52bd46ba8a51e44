use std::collections::VecDeque;
use std::io::BufRead;

use num_traits::{Signed, ToPrimitive, Zero};
use serde_json::{json, Value};
use zeroset::exactnum::{int, rat, Round};
use zeroset::polyring::{closure_chop_rem, euclid_bezout, pseudo_divide, BezoutOutcome, CoeffText};
use zeroset::resultant::{
    bezout_from_adjugate, comaximal_complex, comaximal_exact, resultant, ComplexComaximality, Determinant,
};
use zeroset::rieszspace::{pyramid_approx, riesz_abs_norm, riesz_norm, Disc};
use zeroset::spectrum::{self, Spectrum};
use zeroset::unitmonic::factor_unit_monic;
use zeroset::{
    ComplexBall, DiscreteRing, Dyadic, Error, GaussianRational, ModInt, Polynomial, Rational, UnitClassify,
};

use crate::expr::parse_expr;
use crate::json::{self, Scalar};
use crate::parse::{convert, parse_gaussian, parse_gaussian_poly, parse_rational, AnyPoly, RingFlag};
use crate::{BezoutMethod, Cli, CliError, Command};

/// Rendered output and process exit status.
#[derive(Clone, Debug, PartialEq)]
pub struct Outcome {
    pub value: Value,
    pub csv: Option<String>,
    pub status: i32,
}

impl Outcome {
    fn ok(value: Value) -> Self {
        Outcome { value, csv: None, status: 0 }
    }

    fn undecided(value: Value) -> Self {
        Outcome { value, csv: None, status: 2 }
    }

    pub fn render(&self) -> String {
        match &self.csv {
            Some(text) => text.clone(),
            None => format!("{}\n", self.value),
        }
    }
}

struct Ctx<'a> {
    cli: &'a Cli,
    stdin: &'a mut dyn BufRead,
    pending: Option<VecDeque<String>>,
}

impl Ctx<'_> {
    fn text(&mut self, arg: &str) -> Result<String, CliError> {
        if arg != "-" {
            return Ok(arg.to_string());
        }
        if self.pending.is_none() {
            let mut lines = VecDeque::new();
            for line in self.stdin.lines() {
                let line = line?;
                if !line.trim().is_empty() {
                    lines.push_back(line);
                }
            }
            self.pending = Some(lines);
        }
        self.pending
            .as_mut()
            .and_then(VecDeque::pop_front)
            .ok_or_else(|| CliError::Usage("stdin has no more polynomials".into()))
    }

    fn prec(&self) -> u32 {
        self.cli.prec
    }

    fn eps(&self) -> Result<Option<Rational>, CliError> {
        let Some(text) = &self.cli.eps else { return Ok(None) };
        let q = parse_rational(text)?;
        if !q.is_positive() {
            return Err(CliError::Usage("--eps must be positive".into()));
        }
        Ok(Some(q))
    }

    fn eps_required(&self, cmd: &str) -> Result<Rational, CliError> {
        self.eps()?.ok_or_else(|| CliError::Usage(format!("{cmd} needs --eps")))
    }

    fn dyadic_eps(&self, q: &Rational) -> Dyadic {
        Dyadic::from_rational(q, self.prec(), Round::Floor)
    }

    fn gaussian(&mut self, arg: &str) -> Result<Polynomial<GaussianRational>, CliError> {
        match self.cli.ring {
            None | Some(RingFlag::C) | Some(RingFlag::Qi) => {}
            Some(r) => return Err(CliError::Ring(format!("this command needs ring C or Qi, not {r}"))),
        }
        let text = self.text(arg)?;
        parse_gaussian_poly(&text)
    }

    fn complex(&mut self, arg: &str) -> Result<Polynomial<ComplexBall>, CliError> {
        let prec = self.prec();
        Ok(self.gaussian(arg)?.map(|c| ComplexBall::from_gaussian(c, prec)))
    }

    fn exact(&mut self, arg: &str) -> Result<AnyPoly, CliError> {
        let text = self.text(arg)?;
        convert(&parse_gaussian_poly(&text)?, self.cli.ring.unwrap_or(RingFlag::Q), self.prec())
    }
}

fn spectrum_json(s: &Spectrum) -> Value {
    json!({
        "roots": json::balls(s.roots()),
        "matching_bound": json::dyadic(s.matching_bound()),
        "diameter": json::interval(&s.diameter()),
    })
}

fn gaussian_json(g: &GaussianRational) -> Value {
    Value::String(g.to_string())
}

/// Run `body` on a pair of polynomials from the same ring.
macro_rules! on_pair {
    ($a:expr, $b:expr, |$x:ident, $y:ident| $body:expr, c: |$cx:ident, $cy:ident| $cbody:expr) => {
        match ($a, $b) {
            (AnyPoly::Q($x), AnyPoly::Q($y)) => $body,
            (AnyPoly::Qi($x), AnyPoly::Qi($y)) => $body,
            (AnyPoly::Zm($x), AnyPoly::Zm($y)) => $body,
            (AnyPoly::C($cx), AnyPoly::C($cy)) => $cbody,
            _ => unreachable!("both arguments use the same ring"),
        }
    };
}

fn no_complex<T>(cmd: &str) -> Result<T, CliError> {
    Err(CliError::Ring(format!("{cmd} needs an exact ring (Q, Qi or Zm:<m>)")))
}

fn resultant_json<R: Determinant + Scalar>(a: &Polynomial<R>, b: &Polynomial<R>) -> Result<Outcome, CliError> {
    Ok(Outcome::ok(json!({ "resultant": resultant(a, b)?.to_json() })))
}

fn adjugate_json<R: Determinant + Scalar + CoeffText>(a: &Polynomial<R>, b: &Polynomial<R>) -> Result<Outcome, CliError> {
    let res = resultant(a, b)?;
    let (s, t) = bezout_from_adjugate(a, b)?;
    Ok(Outcome::ok(json!({ "resultant": res.to_json(), "s": json::poly(&s), "t": json::poly(&t) })))
}

fn euclid_json<R: UnitClassify + Scalar + CoeffText>(a: &Polynomial<R>, b: &Polynomial<R>) -> Result<Outcome, CliError> {
    Ok(Outcome::ok(match euclid_bezout(a, b) {
        BezoutOutcome::Gcd { d, s, t } => {
            json!({ "outcome": "gcd", "gcd": json::poly(&d), "s": json::poly(&s), "t": json::poly(&t) })
        }
        BezoutOutcome::ZeroPair => json!({ "outcome": "zero_pair" }),
        BezoutOutcome::Stuck(c) => json!({ "outcome": "stuck", "coefficient": c.to_json() }),
    }))
}

fn comaximal_exact_json<R: Determinant + UnitClassify + Scalar + CoeffText>(
    a: &Polynomial<R>,
    b: &Polynomial<R>,
) -> Result<Outcome, CliError> {
    let out = comaximal_exact(a, b)?;
    let (s, t) = match &out.certificate {
        Some(c) => (json::poly(&c.s), json::poly(&c.t)),
        None => (Value::Null, Value::Null),
    };
    Ok(Outcome::ok(json!({
        "resultant": out.resultant.to_json(),
        "s": s,
        "t": t,
        "comaximal": out.certificate.is_some(),
        "certificate_gap": Value::Null,
    })))
}

fn comaximal_complex_json(a: &Polynomial<ComplexBall>, b: &Polynomial<ComplexBall>) -> Result<Outcome, CliError> {
    Ok(match comaximal_complex(a, b)? {
        ComplexComaximality::Comaximal { resultant, s, t, gap, set_distance } => Outcome::ok(json!({
            "resultant": resultant.to_json(),
            "s": json::poly(&s),
            "t": json::poly(&t),
            "comaximal": true,
            "certificate_gap": json::dyadic(&gap),
            "set_distance": json::interval(&set_distance),
        })),
        ComplexComaximality::NotComaximal { resultant, witness, set_distance } => Outcome::ok(json!({
            "resultant": resultant.to_json(),
            "s": Value::Null,
            "t": Value::Null,
            "comaximal": false,
            "certificate_gap": Value::Null,
            "witness": witness.to_json(),
            "set_distance": json::interval(&set_distance),
        })),
        ComplexComaximality::Undecided { resultant } => Outcome::undecided(json!({
            "resultant": resultant.to_json(),
            "s": Value::Null,
            "t": Value::Null,
            "comaximal": "undecided",
            "certificate_gap": Value::Null,
        })),
    })
}

fn pseudodiv_json<R: DiscreteRing + CoeffText>(b: &Polynomial<R>, a: &Polynomial<R>) -> Result<Outcome, CliError> {
    let pd = pseudo_divide(b, a)?;
    Ok(Outcome::ok(json!({
        "quotient": json::poly(&pd.quotient),
        "remainder": json::poly(&pd.remainder),
        "exponent": pd.exponent,
    })))
}

fn closure_json<R: DiscreteRing + Ord + CoeffText>(set: &[Polynomial<R>]) -> Outcome {
    let c = closure_chop_rem(set);
    Outcome::ok(json!({
        "elements": c.elements.iter().map(json::poly).collect::<Vec<_>>(),
        "iterations": c.iterations,
        "degree_bound": c.degree_bound,
    }))
}

fn unitmonic_json(p: &Polynomial<ModInt>, degree: Option<usize>) -> Result<Outcome, CliError> {
    let m = match degree {
        Some(m) => m,
        None => (0..p.coeffs().len())
            .rev()
            .find(|&i| p.coeff(i).inverse().is_some())
            .ok_or_else(|| Error::Hypothesis("no coefficient is a unit".into()))?,
    };
    let f = factor_unit_monic(p, m)?;
    Ok(Outcome::ok(json!({
        "unit": json::poly(&f.unit),
        "monic": json::poly(&f.monic),
        "unit_inverse": json::poly(&f.unit_inverse),
        "verified": f.verify(p),
    })))
}

/// `1 + max |f_k|` plus one, using `|re| + |im|` for the modulus.
fn root_disc_radius(f: &Polynomial<GaussianRational>) -> Rational {
    let lead = f.leading().clone();
    let inv = lead.inv().unwrap_or_else(GaussianRational::one);
    let max = f.coeffs()[..f.formal_degree()]
        .iter()
        .map(|c| {
            let c = c * &inv;
            c.re.abs() + c.im.abs()
        })
        .max()
        .unwrap_or_else(Rational::zero);
    max + int(2)
}

fn riesz_json(ctx: &mut Ctx<'_>, abs: bool, center: &str, radius: &Option<String>, expr: &str, poly: &str) -> Result<Outcome, CliError> {
    let e = parse_expr(&ctx.text(expr)?)?;
    let fq = ctx.gaussian(poly)?;
    let prec = ctx.prec();
    let f = fq.map(|c| ComplexBall::from_gaussian(c, prec));
    let center = parse_gaussian(center)?;
    let radius = match radius {
        Some(r) => parse_rational(r)?,
        None => root_disc_radius(&fq) + center.re.abs() + center.im.abs(),
    };
    let disc = Disc::new(center, radius)?;
    let eps = ctx.eps()?.unwrap_or_else(|| rat(1, 1000));
    let n = if abs { riesz_abs_norm(&e, &f, &disc, &eps)? } else { riesz_norm(&e, &f, &disc, &eps)? };
    Ok(Outcome::ok(json!({
        "norm": json::dyadic(&n.norm),
        "epsilon": eps.to_json(),
        "theta": n.theta.to_json(),
        "grid_points": n.grid_points.to_string().parse::<u64>().map_or(Value::String(n.grid_points.to_string()), Value::from),
        "s_prime_size": n.s_prime_size(),
        "witness": gaussian_json(&n.witness),
    })))
}

fn sw_json(ctx: &Ctx<'_>, e_text: &str, n: usize) -> Result<Outcome, CliError> {
    if n == 0 || n > 1024 {
        return Err(CliError::Usage("--n must lie in 1..=1024".into()));
    }
    let e = parse_expr(e_text)?;
    let h = rat(1, n as i64);
    let half = &h / int(2);
    let coord = |k: usize| &h * int(k as i64) + &half;
    let values: Vec<Vec<Rational>> =
        (0..n).map(|b| (0..n).map(|a| e.eval_exact(&coord(a), &coord(b))).collect()).collect();
    let approx = pyramid_approx(&values, &h)?;
    let bound = rat(17, 8) * e.lipschitz() * &h;
    let samples = 3 * n;
    let sample = |k: usize| rat(2 * k as i64 + 1, 2 * samples as i64);
    let mut max_err = Rational::zero();
    let mut csv = String::from("x,y,f,psi\n");
    for j in 0..samples {
        for i in 0..samples {
            let (x, y) = (sample(i), sample(j));
            let fv = e.eval_exact(&x, &y);
            let pv = approx.eval_local(&x, &y);
            let err = (&fv - &pv).abs();
            if err > max_err {
                max_err = err;
            }
            if ctx.cli.csv {
                let f64_of = |q: &Rational| q.to_f64().unwrap_or(f64::NAN);
                csv.push_str(&format!("{},{},{},{}\n", f64_of(&x), f64_of(&y), f64_of(&fv), f64_of(&pv)));
            }
        }
    }
    let value = json!({
        "h": h.to_json(),
        "cells": n * n,
        "offset": approx.offset.to_json(),
        "epsilon": bound.to_json(),
        "samples": samples * samples,
        "max_sampled_error": max_err.to_f64(),
        "within_bound": max_err <= bound,
        "expr_size": approx.expr.size(),
    });
    Ok(Outcome { value, csv: ctx.cli.csv.then_some(csv), status: 0 })
}

/// Execute one command. Polynomial arguments equal to `-` are read from
/// `stdin`, one nonempty line each.
pub fn run(cli: &Cli, stdin: &mut dyn BufRead) -> Result<Outcome, CliError> {
    if cli.csv && !matches!(cli.command, Command::SwApprox { .. }) {
        return Err(CliError::Usage("--csv is only supported by sw-approx".into()));
    }
    let mut ctx = Ctx { cli, stdin, pending: None };
    let undecided_on_precision = |r: Result<Outcome, CliError>| match r {
        Err(CliError::Lib(e)) if e.is_precision() => {
            Ok(Outcome::undecided(json!({ "undecided": true, "reason": e.to_string() })))
        }
        other => other,
    };
    match &cli.command {
        Command::Roots { poly } => {
            let f = ctx.complex(poly)?;
            let s = match ctx.eps()? {
                Some(q) => spectrum::compute_spectrum(&f, &ctx.dyadic_eps(&q)),
                None => Spectrum::of(&f),
            };
            undecided_on_precision(s.map(|s| Outcome::ok(spectrum_json(&s))).map_err(CliError::from))
        }
        Command::Qdist { z, poly } => {
            let f = ctx.complex(poly)?;
            let z = ComplexBall::from_gaussian(&parse_gaussian(z)?, ctx.prec());
            Ok(Outcome::ok(json!({ "delta": json::interval(&spectrum::quasidistance(&z, &f)?) })))
        }
        Command::Diameter { poly } => {
            let f = ctx.complex(poly)?;
            Ok(Outcome::ok(json!({ "diameter": json::interval(&spectrum::spectrum_diameter(&f)?) })))
        }
        Command::Setdist { f, g } => {
            let (f, g) = (ctx.complex(f)?, ctx.complex(g)?);
            Ok(Outcome::ok(json!({ "set_distance": json::interval(&spectrum::spectra_set_distance(&f, &g)?) })))
        }
        Command::Clusters { poly } => {
            let f = ctx.complex(poly)?;
            let eps = ctx.dyadic_eps(&ctx.eps_required("clusters")?);
            let run = || -> Result<Outcome, CliError> {
                let s = Spectrum::of(&f)?;
                let cf = spectrum::cluster_factor(&f, &eps)?;
                let mut v = spectrum_json(&s);
                v["clusters"] = Value::Array(
                    (0..cf.len())
                        .map(|i| {
                            json!({
                                "factor": json::poly(&cf.factors[i]),
                                "roots": json::balls(&cf.clusters[i]),
                                "diameter": json::dyadic(&cf.diameters[i]),
                            })
                        })
                        .collect(),
                );
                v["pairwise_gaps"] =
                    json!(cf.pairwise_gaps.iter().map(|r| r.iter().map(json::dyadic).collect::<Vec<_>>()).collect::<Vec<_>>());
                Ok(Outcome::ok(v))
            };
            undecided_on_precision(run())
        }
        Command::Quasiapprox { poly } => {
            let f = ctx.complex(poly)?;
            let eps = ctx.dyadic_eps(&ctx.eps_required("quasiapprox")?);
            let run = || -> Result<Outcome, CliError> {
                let q = spectrum::quasi_approximation(&f, &eps)?;
                Ok(Outcome::ok(json!({
                    "points": q.points.iter().map(gaussian_json).collect::<Vec<_>>(),
                    "epsilon": json::dyadic(&q.epsilon),
                    "delta_bounds": q.delta_bounds.iter().map(json::dyadic).collect::<Vec<_>>(),
                    "coverage_bound": json::dyadic(&q.coverage_bound),
                })))
            };
            undecided_on_precision(run())
        }
        Command::Resultant { a, b } => {
            let (a, b) = (ctx.exact(a)?, ctx.exact(b)?);
            on_pair!(&a, &b, |x, y| resultant_json(x, y), c: |x, y| resultant_json(x, y))
        }
        Command::Bezout { method, a, b } => {
            let (a, b) = (ctx.exact(a)?, ctx.exact(b)?);
            match method {
                BezoutMethod::Adjugate => on_pair!(&a, &b, |x, y| adjugate_json(x, y), c: |x, y| adjugate_json(x, y)),
                BezoutMethod::Euclid => on_pair!(&a, &b, |x, y| euclid_json(x, y), c: |_x, _y| no_complex("bezout --method euclid")),
            }
        }
        Command::Comaximal { a, b } => {
            let (a, b) = (ctx.exact(a)?, ctx.exact(b)?);
            let r = on_pair!(&a, &b, |x, y| comaximal_exact_json(x, y), c: |x, y| comaximal_complex_json(x, y));
            undecided_on_precision(r)
        }
        Command::Pseudodiv { dividend, divisor } => {
            let (b, a) = (ctx.exact(dividend)?, ctx.exact(divisor)?);
            on_pair!(&b, &a, |x, y| pseudodiv_json(x, y), c: |_x, _y| no_complex("pseudodiv"))
        }
        Command::Closure { polys } => {
            let set = polys.iter().map(|p| ctx.exact(p)).collect::<Result<Vec<_>, _>>()?;
            macro_rules! gather {
                ($v:ident) => {
                    set.iter()
                        .map(|p| match p {
                            AnyPoly::$v(p) => p.clone(),
                            _ => unreachable!("one ring per command"),
                        })
                        .collect::<Vec<_>>()
                };
            }
            match &set[0] {
                AnyPoly::Q(_) => Ok(closure_json(&gather!(Q))),
                AnyPoly::Qi(_) => Ok(closure_json(&gather!(Qi))),
                AnyPoly::Zm(_) => Ok(closure_json(&gather!(Zm))),
                AnyPoly::C(_) => no_complex("closure"),
            }
        }
        Command::Unitmonic { degree, poly } => {
            if !matches!(cli.ring, Some(RingFlag::Zm(_))) {
                return Err(CliError::Ring("unitmonic needs --ring Zm:<m>".into()));
            }
            match ctx.exact(poly)? {
                AnyPoly::Zm(p) => unitmonic_json(&p, *degree),
                _ => unreachable!("ring is Zm"),
            }
        }
        Command::RieszNorm { abs, center, radius, expr, poly } => {
            let r = riesz_json(&mut ctx, *abs, center, radius, expr, poly);
            undecided_on_precision(r)
        }
        Command::SwApprox { n, expr } => {
            let text = ctx.text(expr)?;
            sw_json(&ctx, &text, *n)
        }
    }
}
