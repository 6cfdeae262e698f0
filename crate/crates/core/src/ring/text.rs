use std::fmt;
use std::str::FromStr;

use num_traits::Zero;
use serde_json::{Map, Value};

use super::{Atom, RingElem};
use crate::error::ParseError;
use crate::rational::{format_rational, parse_rational, push_term, split_signed_terms, Rational};

impl RingElem {
    /// Terms in canonical order: constant, then `T`, `U`, `V` powers
    /// ascending. Zero renders as the empty string.
    pub(crate) fn write_terms(&self) -> String {
        let mut out = String::new();
        if !self.constant.is_zero() {
            push_term(&mut out, &self.constant, None);
        }
        for atom in Atom::ALL {
            for (&i, c) in self.part(atom) {
                let name = if i == 1 {
                    atom.symbol().to_string()
                } else {
                    format!("{}^{i}", atom.symbol())
                };
                push_term(&mut out, c, Some(&name));
            }
        }
        out
    }

    pub fn to_json(&self) -> Value {
        let mut obj = Map::new();
        obj.insert("1".into(), Value::String(format_rational(&self.constant)));
        for atom in Atom::ALL {
            let part: Map<String, Value> = self
                .part(atom)
                .iter()
                .map(|(i, c)| (i.to_string(), Value::String(format_rational(c))))
                .collect();
            obj.insert(atom.symbol().to_string(), Value::Object(part));
        }
        Value::Object(obj)
    }

    pub fn from_json(value: &Value) -> Result<Self, ParseError> {
        let obj = value
            .as_object()
            .ok_or_else(|| ParseError::new(0, "ring element must be a JSON object"))?;
        let mut out = RingElem::zero();
        for (key, v) in obj {
            match key.as_str() {
                "1" => out.add_term(Atom::T, 0, json_rational(v)?),
                "T" | "U" | "V" => {
                    let atom = match key.as_str() {
                        "T" => Atom::T,
                        "U" => Atom::U,
                        _ => Atom::V,
                    };
                    let part = v
                        .as_object()
                        .ok_or_else(|| ParseError::new(0, format!("`{key}` must map exponents")))?;
                    for (i, c) in part {
                        let i: u32 = i
                            .parse()
                            .ok()
                            .filter(|&i| i >= 1)
                            .ok_or_else(|| ParseError::new(0, format!("bad exponent `{i}`")))?;
                        out.add_term(atom, i, json_rational(c)?);
                    }
                }
                other => return Err(ParseError::new(0, format!("unknown key `{other}`"))),
            }
        }
        Ok(out)
    }
}

fn json_rational(v: &Value) -> Result<Rational, ParseError> {
    match v {
        Value::String(s) => parse_rational(s),
        Value::Number(n) if n.is_i64() => Ok(crate::rational::rat(n.as_i64().unwrap())),
        _ => Err(ParseError::new(0, "rationals must be strings \"p/q\"")),
    }
}

impl fmt::Display for RingElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            f.write_str("0")
        } else {
            f.write_str(&self.write_terms())
        }
    }
}

fn parse_atom(s: &str) -> Result<(Atom, u32), String> {
    let s = s.trim();
    if s == "1" {
        return Ok((Atom::T, 0));
    }
    let mut chars = s.chars();
    let atom = match chars.next() {
        Some('T') => Atom::T,
        Some('U') => Atom::U,
        Some('V') => Atom::V,
        _ => return Err(format!("unknown atom `{s}`")),
    };
    let rest = chars.as_str().trim();
    if rest.is_empty() {
        return Ok((atom, 1));
    }
    let exp = rest
        .strip_prefix('^')
        .and_then(|e| e.trim().parse::<u32>().ok())
        .filter(|&e| e >= 1)
        .ok_or_else(|| format!("bad exponent in `{s}`"))?;
    Ok((atom, exp))
}

/// Parses the grammar `-1 + T - 2*U^3 + 1/2*V`: signed terms, each an
/// optional `rational*` followed by `1`, `T^i`, `U^i` or `V^i`. A bare
/// rational is a constant term; `0` and the empty string are zero.
impl FromStr for RingElem {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, ParseError> {
        let mut out = RingElem::zero();
        if s.trim().is_empty() {
            return Ok(out);
        }
        for (positive, term) in split_signed_terms(s)? {
            let at = |msg: String| {
                let pos = s.find(term.as_str()).unwrap_or(0);
                ParseError::new(pos, msg)
            };
            let (coef, atom) = match term.split_once('*') {
                Some((c, a)) => (
                    parse_rational(c).map_err(|e| at(e.message))?,
                    parse_atom(a).map_err(at)?,
                ),
                None => match parse_atom(&term) {
                    Ok(a) => (Rational::from_integer(1.into()), a),
                    Err(msg) => match parse_rational(&term) {
                        Ok(c) => (c, (Atom::T, 0)),
                        Err(_) => return Err(at(msg)),
                    },
                },
            };
            let coef = if positive { coef } else { -coef };
            out.add_term(atom.0, atom.1, coef);
        }
        Ok(out)
    }
}
