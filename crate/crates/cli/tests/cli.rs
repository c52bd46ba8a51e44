use std::io::{Cursor, Write};
use std::process::{Command as Proc, Stdio};

use clap::Parser;
use proptest::prelude::*;
use serde_json::Value;
use zeroset::{GaussianRational, Polynomial, Rational};
use zeroset_cli::{parse_gaussian_poly, parse_poly, run, AnyPoly, Cli, CliError, RingFlag};

fn exec(args: &[&str]) -> Result<(Value, i32), CliError> {
    exec_with_stdin(args, "")
}

fn exec_with_stdin(args: &[&str], input: &str) -> Result<(Value, i32), CliError> {
    let mut argv = vec!["zeroset"];
    argv.extend_from_slice(args);
    let cli = Cli::try_parse_from(argv).expect("valid arguments");
    let out = run(&cli, &mut Cursor::new(input.as_bytes().to_vec()))?;
    Ok((out.value, out.status))
}

fn interval(v: &Value) -> (f64, f64) {
    (v[0].as_f64().unwrap(), v[1].as_f64().unwrap())
}

#[test]
fn resultant_over_z8_is_zero() {
    let (v, code) = exec(&["resultant", "--ring", "Zm:8", "X^2+4", "X^2+4X"]).unwrap();
    assert_eq!(v, serde_json::json!({ "resultant": 0 }));
    assert_eq!(code, 0);
}

#[test]
fn qdist_of_origin() {
    let (v, _) = exec(&["qdist", "--z", "0", "X^2-4"]).unwrap();
    let (lo, hi) = interval(&v["delta"]);
    assert!(lo <= 2.0 && 2.0 <= hi && hi - lo < 1e-30);
}

#[test]
fn clusters_in_factored_input() {
    let (v, code) = exec(&["clusters", "--eps", "1", "(X-1)(X-1.1)(X+5)"]).unwrap();
    assert_eq!(code, 0);
    assert_eq!(v["clusters"].as_array().unwrap().len(), 2);
    assert!(v["pairwise_gaps"][0][1].as_f64().unwrap() > 5.8);
}

#[test]
fn parse_examples() {
    let z8 = |c: &[i64]| Polynomial::new(c.iter().map(|&x| zeroset::ModInt::new(x, 8)).collect());
    assert_eq!(parse_poly("X^2 + 4", RingFlag::Zm(8), 128).unwrap(), AnyPoly::Zm(z8(&[4, 0, 1])));
    let p = parse_gaussian_poly("0X + 1").unwrap();
    assert_eq!(p.formal_degree(), 1);
    assert_eq!(p.coeffs(), &[GaussianRational::one(), GaussianRational::zero()]);
}

#[test]
fn unitmonic_output() {
    let (v, _) = exec(&["unitmonic", "--ring", "Zm:8", "4X^3 + X^2 + 1"]).unwrap();
    assert_eq!(v["verified"], Value::Bool(true));
    assert_eq!(v["monic"], "1X^2 + 4X + 1");
    assert!(matches!(exec(&["unitmonic", "X^2 + 1"]), Err(CliError::Ring(_))));
}

#[test]
fn bezout_methods() {
    let (v, _) = exec(&["bezout", "X^2+1", "X-1"]).unwrap();
    assert_eq!(v["resultant"], 2);
    let (v, _) = exec(&["bezout", "--method", "euclid", "--ring", "Zm:8", "2X+1", "X^2+4"]).unwrap();
    assert!(v["outcome"] == "gcd" || v["outcome"] == "stuck");
    assert!(matches!(exec(&["bezout", "--method", "euclid", "--ring", "C", "X", "X-1"]), Err(CliError::Ring(_))));
}

#[test]
fn comaximal_tristate() {
    let (v, code) = exec(&["comaximal", "--ring", "C", "X^2+1", "X-i"]).unwrap();
    assert_eq!((v["comaximal"].clone(), code), (Value::Bool(false), 0));
    let (v, code) = exec(&["comaximal", "--ring", "C", "X^2+1", "X-1"]).unwrap();
    assert_eq!((v["comaximal"].clone(), code), (Value::Bool(true), 0));
    assert!(v["certificate_gap"].as_f64().unwrap() > 0.0);
    let (v, code) = exec(&["comaximal", "--ring", "C", "--prec", "16", "X^2-2", "X^2-2.0000001"]).unwrap();
    assert_eq!(v["comaximal"], "undecided");
    assert_eq!(code, 2);
}

#[test]
fn pseudodiv_and_closure() {
    let (v, _) = exec(&["pseudodiv", "X^3+1", "2X+1"]).unwrap();
    assert_eq!(v["exponent"], 3);
    assert_eq!(v["remainder"], "7");
    let (v, _) = exec(&["closure", "--ring", "Zm:8", "X^2+4", "X^2+4X"]).unwrap();
    assert!(!v["elements"].as_array().unwrap().is_empty());
}

#[test]
fn riesz_norm_json() {
    let (v, _) = exec(&["riesz-norm", "y", "X^2+1"]).unwrap();
    assert!((v["norm"].as_f64().unwrap() - 1.0).abs() <= 1e-3);
    for key in ["epsilon", "theta", "grid_points", "s_prime_size"] {
        assert!(!v[key].is_null(), "{key}");
    }
    let (v, _) = exec(&["riesz-norm", "--abs", "x", "X^2+1"]).unwrap();
    assert!(v["norm"].as_f64().unwrap().abs() <= 1e-3);
}

#[test]
fn sw_approx_within_bound() {
    let (v, _) = exec(&["sw-approx", "--n", "8", "max(x, y) - 2*min(x, 1/2)"]).unwrap();
    assert_eq!(v["within_bound"], Value::Bool(true));
    let cli = Cli::try_parse_from(["zeroset", "sw-approx", "--n", "2", "--csv", "x"]).unwrap();
    let out = run(&cli, &mut Cursor::new(Vec::new())).unwrap();
    let text = out.render();
    assert!(text.starts_with("x,y,f,psi\n"));
    assert_eq!(text.lines().count(), 1 + 36);
}

#[test]
fn stdin_dash() {
    let (v, _) = exec_with_stdin(&["setdist", "-", "-"], "X^2 - 1\n\nX - 3\n").unwrap();
    let (lo, hi) = interval(&v["set_distance"]);
    assert!(lo <= 2.0 && 2.0 <= hi);
    assert!(matches!(exec_with_stdin(&["roots", "-"], ""), Err(CliError::Usage(_))));
}

#[test]
fn errors() {
    assert!(matches!(exec(&["roots", "X^2 +"]), Err(CliError::Parse { pos: 5, .. })));
    assert!(matches!(exec(&["roots", "--ring", "Zm:8", "X^2"]), Err(CliError::Ring(_))));
    let e = exec(&["roots", "2X^2 - 1"]).unwrap_err();
    assert_eq!(e.exit_code(), 1);
    assert!(matches!(exec(&["diameter", "--csv", "X"]), Err(CliError::Usage(_))));
}

#[test]
fn binary_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_zeroset");
    let status = |args: &[&str]| Proc::new(bin).args(args).output().unwrap();
    let out = status(&["resultant", "--ring", "Zm:8", "X^2+4", "X^2+4X"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(String::from_utf8_lossy(&out.stdout).trim(), r#"{"resultant":0}"#);
    assert_eq!(status(&["roots", "X^^2"]).status.code(), Some(1));
    assert_eq!(status(&["comaximal", "--ring", "C", "--prec", "16", "X^2-2", "X^2-2.0000001"]).status.code(), Some(2));

    let mut child = Proc::new(bin).args(["diameter", "-"]).stdin(Stdio::piped()).stdout(Stdio::piped()).spawn().unwrap();
    child.stdin.take().unwrap().write_all(b"X^2 - 9\n").unwrap();
    let out = child.wait_with_output().unwrap();
    assert_eq!(out.status.code(), Some(0));
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    let (lo, hi) = interval(&v["diameter"]);
    assert!(lo <= 6.0 && 6.0 <= hi);
}

fn gaussian() -> impl Strategy<Value = GaussianRational> {
    (-20i64..20, 1i64..6, -20i64..20, 1i64..6).prop_map(|(a, b, c, d)| {
        GaussianRational::new(Rational::new(a.into(), b.into()), Rational::new(c.into(), d.into()))
    })
}

proptest! {
    #[test]
    fn print_parse_roundtrip(coeffs in prop::collection::vec(gaussian(), 1..7)) {
        let p = Polynomial::new(coeffs);
        let back = parse_gaussian_poly(&p.to_string()).unwrap();
        prop_assert_eq!(back, p);
    }

    #[test]
    fn modular_roundtrip(coeffs in prop::collection::vec(0i64..9, 1..7)) {
        let p = Polynomial::new(coeffs.iter().map(|&c| zeroset::ModInt::new(c, 9)).collect());
        prop_assert_eq!(parse_poly(&p.to_string(), RingFlag::Zm(9), 128).unwrap(), AnyPoly::Zm(p));
    }
}
