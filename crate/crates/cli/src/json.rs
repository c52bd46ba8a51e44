use num_bigint::BigInt;
use num_traits::{One, ToPrimitive};
use serde_json::{json, Value};
use zeroset::polyring::CoeffText;
use zeroset::{ComplexBall, Dyadic, GaussianRational, Interval, ModInt, Polynomial, Rational, Ring};

/// JSON rendering of a ring element.
pub trait Scalar {
    fn to_json(&self) -> Value;
}

fn bigint_json(n: &BigInt) -> Value {
    n.to_i64().map_or_else(|| Value::String(n.to_string()), Value::from)
}

impl Scalar for BigInt {
    fn to_json(&self) -> Value {
        bigint_json(self)
    }
}

impl Scalar for Rational {
    fn to_json(&self) -> Value {
        if self.denom().is_one() {
            bigint_json(self.numer())
        } else {
            Value::String(format!("{}/{}", self.numer(), self.denom()))
        }
    }
}

impl Scalar for GaussianRational {
    fn to_json(&self) -> Value {
        if self.is_real() {
            self.re.to_json()
        } else {
            Value::String(self.to_string())
        }
    }
}

impl Scalar for ModInt {
    fn to_json(&self) -> Value {
        Value::from(self.value())
    }
}

impl Scalar for ComplexBall {
    fn to_json(&self) -> Value {
        Value::String(self.to_string())
    }
}

pub fn poly<R: Ring + CoeffText>(p: &Polynomial<R>) -> Value {
    Value::String(p.to_string())
}

pub fn dyadic(d: &Dyadic) -> Value {
    let x = d.to_f64();
    if x.is_finite() {
        json!(x)
    } else {
        Value::Null
    }
}

pub fn interval(i: &Interval) -> Value {
    json!([dyadic(&i.lo), dyadic(&i.hi)])
}

pub fn balls(b: &[ComplexBall]) -> Value {
    Value::Array(b.iter().map(Scalar::to_json).collect())
}
