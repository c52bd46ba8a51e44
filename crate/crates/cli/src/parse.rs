//! Text input: polynomials in `X`, Gaussian scalars, and ring flags.
//!
//! Polynomials are sums of products of powers: `X^2 - 4`, `(3+2i)X + 1/2`,
//! `(X-1)(X-1.1)`. Everything is expanded exactly over Q(i) first and then
//! converted into the requested ring. No term is ever dropped, so the formal
//! degree is the highest exponent that appears (`0X + 1` has degree 1).

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};
use zeroset::exactnum::gcd;
use zeroset::{ComplexBall, GaussianRational, ModInt, Polynomial, Rational};

use crate::CliError;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RingFlag {
    Q,
    Qi,
    Zm(u64),
    C,
}

impl FromStr for RingFlag {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "Q" => Ok(RingFlag::Q),
            "Qi" => Ok(RingFlag::Qi),
            "C" => Ok(RingFlag::C),
            _ => {
                let m = s
                    .strip_prefix("Zm:")
                    .ok_or_else(|| format!("unknown ring `{s}` (expected Q, Qi, Zm:<m> or C)"))?;
                let m: u64 = m.parse().map_err(|_| format!("bad modulus `{m}`"))?;
                if m < 2 || m > i64::MAX as u64 {
                    return Err(format!("modulus {m} out of range"));
                }
                Ok(RingFlag::Zm(m))
            }
        }
    }
}

impl fmt::Display for RingFlag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RingFlag::Q => write!(f, "Q"),
            RingFlag::Qi => write!(f, "Qi"),
            RingFlag::Zm(m) => write!(f, "Zm:{m}"),
            RingFlag::C => write!(f, "C"),
        }
    }
}

/// A parsed polynomial in one of the supported rings.
#[derive(Clone, Debug, PartialEq)]
pub enum AnyPoly {
    Q(Polynomial<Rational>),
    Qi(Polynomial<GaussianRational>),
    Zm(Polynomial<ModInt>),
    C(Polynomial<ComplexBall>),
}

/// Character cursor shared by the polynomial and expression parsers.
pub(crate) struct Cursor<'a> {
    text: &'a str,
    pos: usize,
}

impl<'a> Cursor<'a> {
    pub(crate) fn new(text: &'a str) -> Self {
        Cursor { text, pos: 0 }
    }

    pub(crate) fn pos(&self) -> usize {
        self.pos
    }

    pub(crate) fn error(&self, msg: impl Into<String>) -> CliError {
        CliError::Parse { pos: self.pos, msg: msg.into() }
    }

    pub(crate) fn skip_ws(&mut self) {
        while let Some(c) = self.rest().chars().next() {
            if !c.is_whitespace() {
                break;
            }
            self.pos += c.len_utf8();
        }
    }

    pub(crate) fn rest(&self) -> &'a str {
        &self.text[self.pos..]
    }

    pub(crate) fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.rest().chars().next()
    }

    pub(crate) fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += c.len_utf8();
            true
        } else {
            false
        }
    }

    pub(crate) fn advance(&mut self, c: char) {
        self.pos += c.len_utf8();
    }

    pub(crate) fn expect(&mut self, c: char) -> Result<(), CliError> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.error(format!("expected `{c}`")))
        }
    }

    pub(crate) fn at_end(&mut self) -> bool {
        self.peek().is_none()
    }

    /// Alphabetic identifier starting at the current position.
    pub(crate) fn ident(&mut self) -> Option<&'a str> {
        self.skip_ws();
        let len = self.rest().chars().take_while(|c| c.is_ascii_alphabetic()).count();
        (len > 0).then(|| {
            let s = &self.rest()[..len];
            self.pos += len;
            s
        })
    }

    /// Unsigned decimal literal, read exactly.
    pub(crate) fn number(&mut self) -> Result<Rational, CliError> {
        self.skip_ws();
        let int_len = self.rest().chars().take_while(|c| c.is_ascii_digit()).count();
        let int_part = &self.rest()[..int_len];
        let mut frac_part = "";
        if self.rest()[int_len..].starts_with('.') {
            let after = &self.rest()[int_len + 1..];
            let frac_len = after.chars().take_while(|c| c.is_ascii_digit()).count();
            frac_part = &after[..frac_len];
        }
        if int_part.is_empty() && frac_part.is_empty() {
            return Err(self.error("expected a number"));
        }
        let digits: BigInt = format!("{int_part}{frac_part}").parse().expect("ascii digits");
        let denom = num_traits::pow(BigInt::from(10), frac_part.len());
        let consumed = int_len + if self.rest()[int_len..].starts_with('.') { 1 + frac_part.len() } else { 0 };
        self.pos += consumed;
        Ok(Rational::new(digits, denom))
    }

    pub(crate) fn exponent(&mut self) -> Result<usize, CliError> {
        self.skip_ws();
        let len = self.rest().chars().take_while(|c| c.is_ascii_digit()).count();
        if len == 0 {
            return Err(self.error("expected an exponent"));
        }
        let e = self.rest()[..len].parse::<usize>().map_err(|_| self.error("exponent too large"))?;
        if e > 4096 {
            return Err(self.error("exponent too large"));
        }
        self.pos += len;
        Ok(e)
    }
}

type QiPoly = Polynomial<GaussianRational>;

fn constant(c: GaussianRational) -> QiPoly {
    Polynomial::constant(c)
}

fn power(p: &QiPoly, e: usize) -> QiPoly {
    (0..e).fold(constant(GaussianRational::one()), |acc, _| &acc * p)
}

struct PolyParser<'a> {
    cur: Cursor<'a>,
}

impl PolyParser<'_> {
    fn sum(&mut self) -> Result<QiPoly, CliError> {
        let mut acc = if self.cur.eat('-') {
            -self.product()?
        } else {
            self.cur.eat('+');
            self.product()?
        };
        loop {
            if self.cur.eat('+') {
                acc = &acc + &self.product()?;
            } else if self.cur.eat('-') {
                acc = &acc - &self.product()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn starts_factor(&mut self) -> bool {
        matches!(self.cur.peek(), Some(c) if c.is_ascii_digit() || matches!(c, '.' | '(' | 'X' | 'x' | 'i'))
    }

    fn product(&mut self) -> Result<QiPoly, CliError> {
        let mut acc = self.power()?;
        loop {
            if self.cur.eat('*') {
                acc = &acc * &self.power()?;
            } else if self.cur.eat('/') {
                let at = self.cur.pos();
                let d = self.power()?;
                let inv = (d.formal_degree() == 0)
                    .then(|| d.coeff(0).inv())
                    .flatten()
                    .ok_or(CliError::Parse { pos: at, msg: "divisor must be a nonzero constant".into() })?;
                acc = acc.scale(&inv);
            } else if self.starts_factor() {
                acc = &acc * &self.power()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn power(&mut self) -> Result<QiPoly, CliError> {
        let base = self.atom()?;
        if self.cur.eat('^') {
            let e = self.cur.exponent()?;
            Ok(power(&base, e))
        } else {
            Ok(base)
        }
    }

    fn atom(&mut self) -> Result<QiPoly, CliError> {
        match self.cur.peek() {
            Some('(') => {
                self.cur.expect('(')?;
                let inner = self.sum()?;
                self.cur.expect(')')?;
                Ok(inner)
            }
            Some(c) if c.is_ascii_digit() || c == '.' => {
                Ok(constant(GaussianRational::from_rational(self.cur.number()?)))
            }
            Some(c) if c.is_ascii_alphabetic() => {
                let at = self.cur.pos();
                self.cur.advance(c);
                match c {
                    'X' | 'x' => Ok(Polynomial::monomial(GaussianRational::one(), 1)),
                    'i' => Ok(constant(GaussianRational::i())),
                    other => Err(CliError::Parse { pos: at, msg: format!("unknown symbol `{other}`") }),
                }
            }
            Some(c) => Err(self.cur.error(format!("unexpected `{c}`"))),
            None => Err(self.cur.error("unexpected end of input")),
        }
    }
}

/// Parse over Q(i) without choosing a target ring.
pub fn parse_gaussian_poly(text: &str) -> Result<QiPoly, CliError> {
    let mut p = PolyParser { cur: Cursor::new(text) };
    let out = p.sum()?;
    if !p.cur.at_end() {
        return Err(p.cur.error("trailing input"));
    }
    Ok(out)
}

/// A single Gaussian rational such as `3`, `-1/2+i` or `0.25i`.
pub fn parse_gaussian(text: &str) -> Result<GaussianRational, CliError> {
    let p = parse_gaussian_poly(text)?;
    if p.formal_degree() != 0 {
        return Err(CliError::Parse { pos: 0, msg: "expected a constant".into() });
    }
    Ok(p.coeff(0))
}

pub fn parse_rational(text: &str) -> Result<Rational, CliError> {
    let g = parse_gaussian(text)?;
    if !g.is_real() {
        return Err(CliError::Ring(format!("`{text}` is not real")));
    }
    Ok(g.re)
}

fn to_modint(q: &Rational, m: u64) -> Result<ModInt, CliError> {
    let mb = BigInt::from(m);
    let reduce = |x: &BigInt| -> i64 {
        let r = ((x % &mb) + &mb) % &mb;
        r.to_i64().expect("residue fits")
    };
    let den = reduce(q.denom()) as u64;
    if gcd(den, m) != 1 {
        return Err(CliError::Ring(format!("{q} has no image in Z_{m}")));
    }
    let inv = ModInt::new(den as i64, m).inverse().expect("coprime denominator");
    Ok(ModInt::new(reduce(q.numer()), m) * inv)
}

/// Convert a Q(i) polynomial into the ring named by `ring`.
pub fn convert(p: &QiPoly, ring: RingFlag, prec: u32) -> Result<AnyPoly, CliError> {
    let real = |c: &GaussianRational| -> Result<Rational, CliError> {
        if c.is_real() {
            Ok(c.re.clone())
        } else {
            Err(CliError::Ring(format!("coefficient {c} is not in {ring}")))
        }
    };
    Ok(match ring {
        RingFlag::Qi => AnyPoly::Qi(p.clone()),
        RingFlag::C => AnyPoly::C(p.map(|c| ComplexBall::from_gaussian(c, prec))),
        RingFlag::Q => AnyPoly::Q(Polynomial::new(p.coeffs().iter().map(real).collect::<Result<_, _>>()?)),
        RingFlag::Zm(m) => AnyPoly::Zm(Polynomial::new(
            p.coeffs().iter().map(|c| real(c).and_then(|q| to_modint(&q, m))).collect::<Result<_, _>>()?,
        )),
    })
}

pub fn parse_poly(text: &str, ring: RingFlag, prec: u32) -> Result<AnyPoly, CliError> {
    convert(&parse_gaussian_poly(text)?, ring, prec)
}

pub(crate) fn is_zero_rational(q: &Rational) -> bool {
    Zero::is_zero(q)
}

#[cfg(test)]
mod tests {
    use super::*;
    use zeroset::exactnum::{int, rat};

    fn q(text: &str) -> Polynomial<Rational> {
        match parse_poly(text, RingFlag::Q, 128).unwrap() {
            AnyPoly::Q(p) => p,
            _ => unreachable!(),
        }
    }

    #[test]
    fn basic_forms() {
        assert_eq!(q("X^2 - 4"), Polynomial::new(vec![int(-4), int(0), int(1)]));
        assert_eq!(q("0X + 1"), Polynomial::new(vec![int(1), int(0)]));
        assert_eq!(q("(X-1)(X-1.1)"), Polynomial::new(vec![rat(11, 10), rat(-21, 10), int(1)]));
        assert_eq!(q("-X^3/2 + 3*X"), Polynomial::new(vec![int(0), int(3), int(0), rat(-1, 2)]));
        assert_eq!(q("5"), Polynomial::constant(int(5)));
    }

    #[test]
    fn modular_and_gaussian() {
        let p = parse_poly("X^2 + 4", RingFlag::Zm(8), 128).unwrap();
        assert_eq!(p, AnyPoly::Zm(Polynomial::new(vec![ModInt::new(4, 8), ModInt::new(0, 8), ModInt::new(1, 8)])));
        let p = parse_poly("X/3", RingFlag::Zm(8), 128).unwrap();
        assert_eq!(p, AnyPoly::Zm(Polynomial::new(vec![ModInt::new(0, 8), ModInt::new(3, 8)])));
        assert!(matches!(parse_poly("X/2", RingFlag::Zm(8), 128), Err(CliError::Ring(_))));
        let g = parse_gaussian_poly("(3+2i)X - 1").unwrap();
        assert_eq!(g.coeff(1), GaussianRational::from_ints(3, 2));
        assert!(matches!(parse_poly("iX", RingFlag::Q, 128), Err(CliError::Ring(_))));
    }

    #[test]
    fn errors_carry_position() {
        match parse_gaussian_poly("X^2 + ? 1") {
            Err(CliError::Parse { pos, .. }) => assert_eq!(pos, 6),
            other => panic!("{other:?}"),
        }
        assert!(matches!(parse_gaussian_poly("X +"), Err(CliError::Parse { .. })));
        assert!(matches!(parse_gaussian_poly("X/X"), Err(CliError::Parse { .. })));
    }

    #[test]
    fn ring_flags() {
        assert_eq!("Zm:8".parse::<RingFlag>(), Ok(RingFlag::Zm(8)));
        assert!("Zm:1".parse::<RingFlag>().is_err());
        assert!("R".parse::<RingFlag>().is_err());
    }
}
