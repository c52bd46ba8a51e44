//! Exact scalars (rationals, Gaussian rationals, `Z_m`) and complex balls.

pub mod ball;
pub mod dyadic;
pub mod gaussian;
pub mod interval;
pub mod modint;
pub mod rational;

pub use ball::{ball_apart, Apartness, ComplexBall};
pub use dyadic::{Dyadic, Round};
pub use gaussian::GaussianRational;
pub use interval::Interval;
pub use modint::{gcd, ModClass, ModInt};
pub use rational::{int, rat, Rational};
