//! Recursive-descent parser for the expression grammar.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::{AutoName, ExprNode};
use crate::error::ParseError;
use crate::rational::Rational;
use crate::tetra::{GeneratorId, NamedAuto, Permutation};

pub fn parse(input: &str) -> Result<ExprNode, ParseError> {
    let mut p = Parser { src: input, pos: 0 };
    let e = p.expr()?;
    p.skip_ws();
    if p.pos < p.src.len() {
        return Err(p.error("unexpected trailing input"));
    }
    Ok(e)
}

struct Parser<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Parser<'a> {
    fn error(&self, message: impl Into<String>) -> ParseError {
        ParseError::new(self.pos, message)
    }

    fn rest(&self) -> &'a str {
        &self.src[self.pos..]
    }

    fn peek(&self) -> Option<char> {
        self.rest().chars().next()
    }

    fn skip_ws(&mut self) {
        let rest = self.rest();
        self.pos += rest.len() - rest.trim_start().len();
    }

    fn eat(&mut self, c: char) -> bool {
        self.skip_ws();
        if self.peek() == Some(c) {
            self.pos += c.len_utf8();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<(), ParseError> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.error(format!("expected `{c}`")))
        }
    }

    fn expr(&mut self) -> Result<ExprNode, ParseError> {
        let negative = self.eat('-');
        let mut terms = Vec::new();
        let (coef, factor, explicit) = self.term()?;
        if !negative && !explicit && {
            self.skip_ws();
            !matches!(self.peek(), Some('+' | '-'))
        } {
            return Ok(factor);
        }
        terms.push((if negative { -coef } else { coef }, factor));
        loop {
            let negative = if self.eat('+') {
                false
            } else if self.eat('-') {
                true
            } else {
                break;
            };
            let (coef, factor, _) = self.term()?;
            terms.push((if negative { -coef } else { coef }, factor));
        }
        Ok(ExprNode::Sum(terms))
    }

    /// Returns the coefficient, the factor and whether a coefficient was
    /// written.
    fn term(&mut self) -> Result<(Rational, ExprNode, bool), ParseError> {
        self.skip_ws();
        if self.peek().is_some_and(|c| c.is_ascii_digit()) {
            let c = self.rational()?;
            self.expect('*')?;
            Ok((c, self.factor()?, true))
        } else {
            Ok((Rational::one(), self.factor()?, false))
        }
    }

    fn integer(&mut self) -> Result<BigInt, ParseError> {
        self.skip_ws();
        let digits = self.rest().len()
            - self
                .rest()
                .trim_start_matches(|c: char| c.is_ascii_digit())
                .len();
        if digits == 0 {
            return Err(self.error("expected an integer"));
        }
        let n = self.rest()[..digits].parse().expect("ascii digits");
        self.pos += digits;
        Ok(n)
    }

    fn rational(&mut self) -> Result<Rational, ParseError> {
        let num = self.integer()?;
        if self.eat('/') {
            let at = self.pos;
            let den = self.integer()?;
            if den.is_zero() {
                return Err(ParseError::new(at, "denominator must be positive"));
            }
            Ok(Rational::new(num, den))
        } else {
            Ok(Rational::from_integer(num))
        }
    }

    fn word(&mut self) -> &'a str {
        self.skip_ws();
        let rest = self.rest();
        let len = rest.len() - rest.trim_start_matches(|c: char| c.is_ascii_alphanumeric()).len();
        self.pos += len;
        &rest[..len]
    }

    fn factor(&mut self) -> Result<ExprNode, ParseError> {
        self.skip_ws();
        match self.peek() {
            Some('[') => {
                self.pos += 1;
                let a = self.expr()?;
                self.expect(',')?;
                let b = self.expr()?;
                self.expect(']')?;
                Ok(ExprNode::bracket(a, b))
            }
            Some('(') => {
                self.pos += 1;
                let e = self.expr()?;
                self.expect(')')?;
                Ok(e)
            }
            Some(c) if c.is_ascii_alphabetic() => {
                let start = self.pos;
                let word = self.word();
                if let Some(digits) = word.strip_prefix('X') {
                    return generator(digits, start).map(ExprNode::Generator);
                }
                let name = if word == "perm" {
                    AutoName::Perm(self.permutation()?)
                } else if let Some(a) = NamedAuto::from_name(word) {
                    AutoName::Named(a)
                } else {
                    return Err(ParseError::new(start, format!("unknown name `{word}`")));
                };
                self.expect('(')?;
                let e = self.expr()?;
                self.expect(')')?;
                Ok(ExprNode::auto(name, e))
            }
            Some(c) => Err(self.error(format!("unexpected `{c}`"))),
            None => Err(self.error("unexpected end of input")),
        }
    }

    fn permutation(&mut self) -> Result<Permutation, ParseError> {
        self.expect('(')?;
        self.skip_ws();
        let start = self.pos;
        let digits = self.word();
        let images = vertex_digits::<4>(digits, start)?;
        let mut seen = [false; 4];
        for (k, &v) in images.iter().enumerate() {
            if std::mem::replace(&mut seen[v as usize], true) {
                return Err(ParseError::new(
                    start + k,
                    format!("permutation repeats the digit {v}"),
                ));
            }
        }
        self.expect(')')?;
        Ok(Permutation::new(images).expect("digits checked"))
    }
}

fn vertex_digits<const N: usize>(s: &str, start: usize) -> Result<[u8; N], ParseError> {
    let bytes = s.as_bytes();
    if bytes.len() != N {
        return Err(ParseError::new(start, format!("expected {N} digits from 0123")));
    }
    let mut out = [0u8; N];
    for (k, &b) in bytes.iter().enumerate() {
        if !(b'0'..=b'3').contains(&b) {
            return Err(ParseError::new(start + k, "digits must be from 0123"));
        }
        out[k] = b - b'0';
    }
    Ok(out)
}

fn generator(digits: &str, start: usize) -> Result<GeneratorId, ParseError> {
    let [i, j] = vertex_digits::<2>(digits, start + 1)?;
    GeneratorId::new(i, j)
        .map_err(|_| ParseError::new(start, "generator digits must differ"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{frac, rat};

    fn gen(i: u8, j: u8) -> ExprNode {
        ExprNode::Generator(GeneratorId::new(i, j).unwrap())
    }

    #[test]
    fn grammar_examples() {
        assert_eq!(parse("[X12, X03]").unwrap(), ExprNode::bracket(gen(1, 2), gen(0, 3)));
        assert_eq!(
            parse("prime(X01)").unwrap(),
            ExprNode::auto(AutoName::Named(NamedAuto::Prime), gen(0, 1))
        );
        assert_eq!(
            parse("2*X12 - 1/2*[X23, X30]").unwrap(),
            ExprNode::Sum(vec![
                (rat(2), gen(1, 2)),
                (frac(-1, 2), ExprNode::bracket(gen(2, 3), gen(3, 0)))
            ])
        );
        assert_eq!(parse(" ( X12 ) ").unwrap(), gen(1, 2));
        assert_eq!(parse("-X12").unwrap(), ExprNode::Sum(vec![(rat(-1), gen(1, 2))]));
        assert_eq!(parse("2/4*X12").unwrap(), ExprNode::Sum(vec![(frac(1, 2), gen(1, 2))]));
        assert_eq!(
            parse("perm(0132)(X03)").unwrap(),
            ExprNode::auto(AutoName::Perm(Permutation::new([0, 1, 3, 2]).unwrap()), gen(0, 3))
        );
        assert_eq!(
            parse("Down(down(X03))").unwrap(),
            ExprNode::auto(
                AutoName::Named(NamedAuto::DoubleDown),
                ExprNode::auto(AutoName::Named(NamedAuto::Down), gen(0, 3))
            )
        );
    }

    #[test]
    fn errors_carry_positions() {
        let e = parse("X11").unwrap_err();
        assert_eq!(e.pos, 0);
        assert!(e.message.contains("differ"));
        let e = parse("[X12, X14]").unwrap_err();
        assert_eq!(e.pos, 8);
        let e = parse("perm(0012)(X01)").unwrap_err();
        assert_eq!(e.pos, 6);
        assert!(e.message.contains("repeats"));
        let e = parse("[X12 X03]").unwrap_err();
        assert_eq!(e.pos, 5);
        assert!(parse("").is_err());
        assert!(parse("X12 +").is_err());
        assert!(parse("1/0*X12").is_err());
        assert!(parse("foo(X12)").is_err());
        assert!(parse("X12)").is_err());
    }

    #[test]
    fn round_trip_samples() {
        for s in [
            "[X12, X03]",
            "2*X12 - 1/2*[X23, X30]",
            "1*X12",
            "-X12",
            "(X12 + X03) - 3*X01",
            "star(prime(1*[X01, -X23]))",
            "perm(3210)(X12 + 0*X03)",
        ] {
            let e = parse(s).unwrap();
            assert_eq!(e.to_string(), s);
            assert_eq!(parse(&e.to_string()).unwrap(), e);
        }
    }
}
