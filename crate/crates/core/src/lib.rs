//! Certified algebra for univariate polynomials.
//!
//! Exact coefficient rings (Q, Q(i), Z, `Z_m`) support pseudodivision, closure
//! sets, Euclid/Bézout, Sylvester resultants and unit×monic factorisation.
//! Complex polynomials are handled with ball arithmetic: certified root
//! multisets, distances between points and zero sets, cluster factorisation,
//! quasiapproximations, and sup-norms of lattice expressions over zero sets.

pub mod error;
pub mod exactnum;
pub mod polyring;
pub mod resultant;
pub mod rieszspace;
pub mod ring;
pub mod spectrum;
pub mod unitmonic;

pub use error::{Error, Result};
pub use exactnum::{ComplexBall, Dyadic, GaussianRational, Interval, ModInt, Rational};
pub use polyring::Polynomial;
pub use ring::{DiscreteRing, IntegralDomain, Ring, UnitClassify, UnitStatus};
