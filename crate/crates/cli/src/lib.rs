//! Library half of the `zeroset` command-line tool.
//!
//! [`Cli`] is the clap definition, [`run`] executes one parsed command and
//! returns its JSON (or CSV) output together with the exit status.

pub mod expr;
pub mod json;
pub mod parse;
pub mod run;

use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use thiserror::Error;

pub use parse::{parse_gaussian, parse_gaussian_poly, parse_poly, AnyPoly, RingFlag};
pub use run::{run, Outcome};

#[derive(Debug, Error)]
pub enum CliError {
    #[error("parse error at position {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("ring error: {0}")]
    Ring(String),
    #[error("usage: {0}")]
    Usage(String),
    #[error(transparent)]
    Lib(#[from] zeroset::Error),
    #[error("io: {0}")]
    Io(#[from] std::io::Error),
}

impl CliError {
    /// 2 when more precision might help, 1 otherwise.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Lib(e) if e.is_precision() => 2,
            _ => 1,
        }
    }
}

#[derive(Debug, Parser)]
#[command(name = "zeroset", version, about = "Certified polynomial algebra and zero-set geometry")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Coefficient ring: Q, Qi, Zm:<m> or C.
    #[arg(long, global = true)]
    pub ring: Option<RingFlag>,
    /// Working precision in bits for ball arithmetic.
    #[arg(long, global = true, default_value_t = 128)]
    pub prec: u32,
    /// Tolerance, as a rational or decimal.
    #[arg(long, global = true, allow_hyphen_values = true)]
    pub eps: Option<String>,
    /// Emit JSON (the default).
    #[arg(long, global = true, conflicts_with = "csv")]
    pub json: bool,
    /// Emit CSV where a command supports it.
    #[arg(long, global = true)]
    pub csv: bool,
    /// Write output here instead of stdout.
    #[arg(long, short = 'o', global = true)]
    pub output: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum BezoutMethod {
    Adjugate,
    Euclid,
}

/// Polynomial arguments accept `-` to read the next line of stdin.
#[derive(Debug, Subcommand)]
pub enum Command {
    /// Certified root balls of a monic polynomial.
    Roots { poly: String },
    /// Distance from a point to the zero set.
    Qdist {
        #[arg(long, allow_hyphen_values = true)]
        z: String,
        poly: String,
    },
    /// Diameter of the zero set.
    Diameter { poly: String },
    /// Set-distance between two zero sets.
    Setdist { f: String, g: String },
    /// Factor into clusters of diameter below --eps.
    Clusters { poly: String },
    /// Gaussian points within --eps of the zero set that cover it.
    Quasiapprox { poly: String },
    /// Sylvester resultant.
    Resultant { a: String, b: String },
    /// Cofactors s, t with s a + t b = resultant (adjugate) or a gcd (euclid).
    Bezout {
        #[arg(long, value_enum, default_value = "adjugate")]
        method: BezoutMethod,
        a: String,
        b: String,
    },
    /// Decide whether s a + t b = 1 is solvable.
    Comaximal { a: String, b: String },
    /// Pseudodivision of the dividend by the divisor.
    Pseudodiv { dividend: String, divisor: String },
    /// Closure of a set of polynomials under chop and pseudo-remainder.
    Closure {
        #[arg(required = true)]
        polys: Vec<String>,
    },
    /// Unit times monic factorization over Z_m.
    Unitmonic {
        /// Degree of the monic factor; defaults to the highest unit coefficient.
        #[arg(long)]
        degree: Option<usize>,
        poly: String,
    },
    /// Sup of a lattice expression in x, y over the zero set.
    RieszNorm {
        /// Use |expr|.
        #[arg(long)]
        abs: bool,
        /// Center of the disc containing the zero set.
        #[arg(long, allow_hyphen_values = true, default_value = "0")]
        center: String,
        /// Radius of the disc; defaults to a root bound.
        #[arg(long)]
        radius: Option<String>,
        expr: String,
        poly: String,
    },
    /// Pyramid approximant of an expression on the unit square.
    SwApprox {
        /// Cells per side.
        #[arg(long, default_value_t = 64)]
        n: usize,
        expr: String,
    },
}
