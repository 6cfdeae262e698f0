//! Exact scalars over the rationals.
//!
//! Every coefficient in the crate is a [`Rational`]. The type is always kept
//! in lowest terms with a positive denominator, so structural equality is
//! value equality.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::ParseError;

pub type Rational = BigRational;

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn frac(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Parses `p` or `p/q` with an optional leading sign. The denominator must be
/// positive; the result is normalized.
pub fn parse_rational(s: &str) -> Result<Rational, ParseError> {
    let s = s.trim();
    let bad = || ParseError::new(0, format!("invalid rational `{s}`"));
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), Some(d.trim())),
        None => (s, None),
    };
    let num: BigInt = num.parse().map_err(|_| bad())?;
    let den: BigInt = match den {
        Some(d) => {
            if d.starts_with(['-', '+']) {
                return Err(bad());
            }
            d.parse().map_err(|_| bad())?
        }
        None => BigInt::one(),
    };
    if den.is_zero() {
        return Err(ParseError::new(0, "zero denominator"));
    }
    Ok(Rational::new(num, den))
}

/// `p` for integers, `p/q` otherwise.
pub fn format_rational(r: &Rational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Appends `coef*atom` to a signed term list, omitting a unit coefficient.
/// `atom == None` means the constant term.
pub(crate) fn push_term(out: &mut String, coef: &Rational, atom: Option<&str>) {
    let negative = coef.is_negative();
    if out.is_empty() {
        if negative {
            out.push('-');
        }
    } else {
        out.push_str(if negative { " - " } else { " + " });
    }
    let mag = coef.abs();
    match atom {
        None => out.push_str(&format_rational(&mag)),
        Some(a) if mag.is_one() => out.push_str(a),
        Some(a) => {
            out.push_str(&format_rational(&mag));
            out.push('*');
            out.push_str(a);
        }
    }
}

/// Splits a textual sum into signed terms: `"-1 + T - 2*U^3"` yields
/// `[(false, "1"), (true, "T"), (false, "2*U^3")]` where the flag is
/// "positive". Signs inside `{...}` are left alone.
pub(crate) fn split_signed_terms(s: &str) -> Result<Vec<(bool, String)>, ParseError> {
    let mut terms = Vec::new();
    let mut positive = true;
    let mut current = String::new();
    let mut depth = 0i32;
    let mut expect_term = true;
    for (pos, ch) in s.char_indices() {
        match ch {
            '{' => {
                depth += 1;
                current.push(ch);
            }
            '}' => {
                depth -= 1;
                current.push(ch);
            }
            '+' | '-' if depth == 0 => {
                if expect_term {
                    if !current.trim().is_empty() {
                        return Err(ParseError::new(pos, "unexpected sign"));
                    }
                    if ch == '-' {
                        positive = !positive;
                    }
                } else {
                    terms.push((positive, current.trim().to_string()));
                    current.clear();
                    positive = ch == '+';
                    expect_term = true;
                }
            }
            c if c.is_whitespace() => current.push(c),
            c => {
                current.push(c);
                expect_term = false;
            }
        }
    }
    if expect_term {
        return Err(ParseError::new(s.len(), "expected a term"));
    }
    terms.push((positive, current.trim().to_string()));
    Ok(terms)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_and_normalizes() {
        assert_eq!(parse_rational("2/4").unwrap(), frac(1, 2));
        assert_eq!(parse_rational("-6/3").unwrap(), rat(-2));
        assert_eq!(format_rational(&frac(2, 4)), "1/2");
        assert_eq!(format_rational(&rat(-7)), "-7");
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("1/-2").is_err());
        assert!(parse_rational("x").is_err());
    }

    #[test]
    fn term_printing() {
        let mut s = String::new();
        push_term(&mut s, &rat(-1), None);
        push_term(&mut s, &rat(1), Some("T"));
        push_term(&mut s, &rat(-2), Some("U^3"));
        push_term(&mut s, &frac(1, 2), Some("V"));
        assert_eq!(s, "-1 + T - 2*U^3 + 1/2*V");
    }

    #[test]
    fn term_splitting() {
        let t = split_signed_terms("-1 + T - 2*U^3 + 1/2*A_{-1}").unwrap();
        assert_eq!(
            t,
            vec![
                (false, "1".to_string()),
                (true, "T".to_string()),
                (false, "2*U^3".to_string()),
                (true, "1/2*A_{-1}".to_string()),
            ]
        );
        assert!(split_signed_terms("1 +").is_err());
        assert!(split_signed_terms("").is_err());
    }
}
