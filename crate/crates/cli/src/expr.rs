//! Lattice expressions in `x` and `y`: `max(x, 0) - 2*min(x, y) + 1/3`.

use zeroset::rieszspace::LatticeExpr;
use zeroset::Rational;

use crate::parse::Cursor;
use crate::CliError;

struct ExprParser<'a> {
    cur: Cursor<'a>,
}

fn as_const(e: &LatticeExpr) -> Option<&Rational> {
    match e {
        LatticeExpr::Const(c) => Some(c),
        _ => None,
    }
}

fn product(a: LatticeExpr, b: LatticeExpr, pos: usize) -> Result<LatticeExpr, CliError> {
    match (as_const(&a), as_const(&b)) {
        (Some(x), Some(y)) => Ok(LatticeExpr::Const(x * y)),
        (Some(x), None) => Ok(LatticeExpr::scale(x.clone(), b)),
        (None, Some(y)) => Ok(LatticeExpr::scale(y.clone(), a)),
        (None, None) => Err(CliError::Parse { pos, msg: "product of two non-constant expressions".into() }),
    }
}

fn negate(e: LatticeExpr) -> LatticeExpr {
    match e {
        LatticeExpr::Const(c) => LatticeExpr::Const(-c),
        other => LatticeExpr::scale(-Rational::from_integer(1.into()), other),
    }
}

impl ExprParser<'_> {
    fn sum(&mut self) -> Result<LatticeExpr, CliError> {
        let mut acc = if self.cur.eat('-') {
            negate(self.term()?)
        } else {
            self.cur.eat('+');
            self.term()?
        };
        loop {
            if self.cur.eat('+') {
                acc = LatticeExpr::add(acc, self.term()?);
            } else if self.cur.eat('-') {
                acc = LatticeExpr::add(acc, negate(self.term()?));
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<LatticeExpr, CliError> {
        let mut acc = self.factor()?;
        loop {
            let pos = self.cur.pos();
            if self.cur.eat('*') {
                acc = product(acc, self.factor()?, pos)?;
            } else if self.cur.eat('/') {
                let d = self.factor()?;
                match as_const(&d) {
                    Some(c) if !crate::parse::is_zero_rational(c) => {
                        acc = product(acc, LatticeExpr::Const(c.recip()), pos)?;
                    }
                    _ => return Err(CliError::Parse { pos, msg: "divisor must be a nonzero constant".into() }),
                }
            } else if matches!(self.cur.peek(), Some(c) if c.is_ascii_alphabetic() || c == '(') {
                acc = product(acc, self.factor()?, pos)?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn args(&mut self, n: usize) -> Result<Vec<LatticeExpr>, CliError> {
        self.cur.expect('(')?;
        let mut out = vec![self.sum()?];
        while out.len() < n {
            self.cur.expect(',')?;
            out.push(self.sum()?);
        }
        self.cur.expect(')')?;
        Ok(out)
    }

    fn factor(&mut self) -> Result<LatticeExpr, CliError> {
        match self.cur.peek() {
            Some('(') => {
                self.cur.expect('(')?;
                let e = self.sum()?;
                self.cur.expect(')')?;
                Ok(e)
            }
            Some(c) if c.is_ascii_digit() || c == '.' => Ok(LatticeExpr::Const(self.cur.number()?)),
            Some(c) if c.is_ascii_alphabetic() => {
                let pos = self.cur.pos();
                match self.cur.ident().expect("peeked a letter") {
                    "x" => Ok(LatticeExpr::Pi1),
                    "y" => Ok(LatticeExpr::Pi2),
                    "max" | "sup" => {
                        let mut a = self.args(2)?;
                        let b = a.pop().expect("two args");
                        Ok(LatticeExpr::sup(a.pop().expect("two args"), b))
                    }
                    "min" | "inf" => {
                        let mut a = self.args(2)?;
                        let b = a.pop().expect("two args");
                        Ok(LatticeExpr::inf(a.pop().expect("two args"), b))
                    }
                    "abs" => Ok(self.args(1)?.pop().expect("one arg").abs()),
                    other => Err(CliError::Parse { pos, msg: format!("unknown symbol `{other}`") }),
                }
            }
            Some(c) => Err(self.cur.error(format!("unexpected `{c}`"))),
            None => Err(self.cur.error("unexpected end of input")),
        }
    }
}

pub fn parse_expr(text: &str) -> Result<LatticeExpr, CliError> {
    let mut p = ExprParser { cur: Cursor::new(text) };
    let e = p.sum()?;
    if !p.cur.at_end() {
        return Err(p.cur.error("trailing input"));
    }
    Ok(e)
}

#[cfg(test)]
mod tests {
    use super::*;
    use zeroset::exactnum::{int, rat};

    #[test]
    fn parses_lattice_forms() {
        let e = parse_expr("max(x, 0) - 2*min(x, y) + 1/3").unwrap();
        assert_eq!(e.eval_exact(&int(1), &int(-1)), int(1) + int(2) + rat(1, 3));
        assert_eq!(parse_expr("abs(y)").unwrap().eval_exact(&int(0), &int(-4)), int(4));
        assert_eq!(parse_expr("2x - y/2").unwrap().lipschitz(), rat(5, 2));
        assert_eq!(parse_expr("3").unwrap(), LatticeExpr::Const(int(3)));
    }

    #[test]
    fn rejects_nonlinear() {
        assert!(matches!(parse_expr("x*y"), Err(CliError::Parse { .. })));
        assert!(matches!(parse_expr("max(x)"), Err(CliError::Parse { .. })));
        assert!(matches!(parse_expr("z"), Err(CliError::Parse { .. })));
    }
}
