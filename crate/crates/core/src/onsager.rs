//! The Onsager algebra `O` with basis `A_m` (`m ∈ Z`) and `G_l` (`l >= 1`):
//!
//! ```text
//! [A_l, A_m] = 2 G_{l-m}       (l > m)
//! [G_l, A_m] = A_{m+l} - A_{m-l}
//! [G_l, G_m] = 0
//! ```
//!
//! Brackets with `l <= m` use `G_0 = 0` and `G_{-k} = -G_k`, which is what
//! antisymmetry forces.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Neg, Sub};
use std::str::FromStr;

use num_traits::{One, Zero};
use serde_json::{Map, Value};

use crate::error::ParseError;
use crate::rational::{format_rational, parse_rational, push_term, rat, split_signed_terms, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum OnsagerBasis {
    A(i64),
    /// Index is at least 1.
    G(u64),
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct OnsagerElem {
    a: BTreeMap<i64, Rational>,
    g: BTreeMap<u64, Rational>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum OnsagerAuto {
    /// `A_m -> (-1)^(m-1) A_m`, `G_l -> (-1)^l G_l`
    Down,
    /// `A_m -> (-1)^m A_m`, `G_l -> (-1)^l G_l`
    DoubleDown,
    /// `A_m -> A_{1-m}`, `G_l -> -G_l`
    Star,
}

impl OnsagerElem {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn basis(b: OnsagerBasis) -> Self {
        Self::term(Rational::one(), b)
    }

    pub fn a(m: i64) -> Self {
        Self::basis(OnsagerBasis::A(m))
    }

    /// `G_l` with the index conventions `G_0 = 0`, `G_{-k} = -G_k`.
    pub fn g(l: i64) -> Self {
        let mut out = Self::zero();
        out.add_g(l, Rational::one());
        out
    }

    pub fn term(c: Rational, b: OnsagerBasis) -> Self {
        let mut out = Self::zero();
        out.add_term(b, c);
        out
    }

    pub fn add_term(&mut self, b: OnsagerBasis, c: Rational) {
        match b {
            OnsagerBasis::A(m) => add_entry(&mut self.a, m, c),
            OnsagerBasis::G(l) => {
                if l == 0 {
                    return;
                }
                add_entry(&mut self.g, l, c)
            }
        }
    }

    fn add_g(&mut self, l: i64, c: Rational) {
        match l.cmp(&0) {
            std::cmp::Ordering::Greater => add_entry(&mut self.g, l as u64, c),
            std::cmp::Ordering::Less => add_entry(&mut self.g, l.unsigned_abs(), -c),
            std::cmp::Ordering::Equal => {}
        }
    }

    pub fn coeff(&self, b: OnsagerBasis) -> Rational {
        match b {
            OnsagerBasis::A(m) => self.a.get(&m),
            OnsagerBasis::G(l) => self.g.get(&l),
        }
        .cloned()
        .unwrap_or_else(Rational::zero)
    }

    /// Nonzero coefficients, `A` terms by ascending index, then `G` terms.
    pub fn terms(&self) -> impl Iterator<Item = (OnsagerBasis, &Rational)> {
        self.a
            .iter()
            .map(|(&m, c)| (OnsagerBasis::A(m), c))
            .chain(self.g.iter().map(|(&l, c)| (OnsagerBasis::G(l), c)))
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_empty() && self.g.is_empty()
    }

    /// Largest `|m|` among `A_m` and largest `l` among `G_l` in the support.
    pub fn support_bound(&self) -> u64 {
        let a = self.a.keys().map(|m| m.unsigned_abs()).max().unwrap_or(0);
        let g = self.g.keys().copied().max().unwrap_or(0);
        a.max(g)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        OnsagerElem {
            a: self.a.iter().map(|(&m, x)| (m, x * c)).collect(),
            g: self.g.iter().map(|(&l, x)| (l, x * c)).collect(),
        }
    }

    pub fn bracket(&self, other: &OnsagerElem) -> OnsagerElem {
        onsager_bracket(self, other)
    }

    pub fn auto(&self, which: OnsagerAuto) -> OnsagerElem {
        onsager_auto(self, which)
    }

    pub fn to_json(&self) -> Value {
        let a: Map<String, Value> = self
            .a
            .iter()
            .map(|(m, c)| (m.to_string(), Value::String(format_rational(c))))
            .collect();
        let g: Map<String, Value> = self
            .g
            .iter()
            .map(|(l, c)| (l.to_string(), Value::String(format_rational(c))))
            .collect();
        let mut obj = Map::new();
        obj.insert("A".into(), Value::Object(a));
        obj.insert("G".into(), Value::Object(g));
        Value::Object(obj)
    }
}

fn add_entry<K: Ord + Copy>(map: &mut BTreeMap<K, Rational>, k: K, c: Rational) {
    if c.is_zero() {
        return;
    }
    let e = map.entry(k).or_insert_with(Rational::zero);
    *e += c;
    if e.is_zero() {
        map.remove(&k);
    }
}

fn basis_bracket(x: OnsagerBasis, y: OnsagerBasis) -> OnsagerElem {
    use OnsagerBasis::*;
    let mut out = OnsagerElem::zero();
    match (x, y) {
        (A(l), A(m)) => out.add_g(l - m, rat(2)),
        (G(l), A(m)) => {
            let l = l as i64;
            out.add_term(A(m + l), rat(1));
            out.add_term(A(m - l), rat(-1));
        }
        (A(m), G(l)) => {
            let l = l as i64;
            out.add_term(A(m + l), rat(-1));
            out.add_term(A(m - l), rat(1));
        }
        (G(_), G(_)) => {}
    }
    out
}

pub fn onsager_bracket(u: &OnsagerElem, v: &OnsagerElem) -> OnsagerElem {
    let mut out = OnsagerElem::zero();
    for (x, cx) in u.terms() {
        for (y, cy) in v.terms() {
            let c = cx * cy;
            for (b, k) in basis_bracket(x, y).terms() {
                out.add_term(b, &c * k);
            }
        }
    }
    out
}

pub fn onsager_auto(u: &OnsagerElem, which: OnsagerAuto) -> OnsagerElem {
    let parity = |n: i64| if n.rem_euclid(2) == 0 { rat(1) } else { rat(-1) };
    let mut out = OnsagerElem::zero();
    for (b, c) in u.terms() {
        let (b2, s) = match (which, b) {
            (OnsagerAuto::Down, OnsagerBasis::A(m)) => (b, parity(m - 1)),
            (OnsagerAuto::DoubleDown, OnsagerBasis::A(m)) => (b, parity(m)),
            (OnsagerAuto::Down | OnsagerAuto::DoubleDown, OnsagerBasis::G(l)) => {
                (b, parity(l as i64))
            }
            (OnsagerAuto::Star, OnsagerBasis::A(m)) => (OnsagerBasis::A(1 - m), rat(1)),
            (OnsagerAuto::Star, OnsagerBasis::G(_)) => (b, rat(-1)),
        };
        out.add_term(b2, c * s);
    }
    out
}

/// Whether `[a,[a,[a,b]]] = 4[a,b]` and `[b,[b,[b,a]]] = 4[b,a]` both hold.
pub fn check_dolan_grady(a: &OnsagerElem, b: &OnsagerElem) -> bool {
    dolan_grady_holds(a, b, onsager_bracket) && dolan_grady_holds(b, a, onsager_bracket)
}

/// `[a,[a,[a,b]]] == 4[a,b]` for any bracket.
pub fn dolan_grady_holds<E>(a: &E, b: &E, bracket: impl Fn(&E, &E) -> E) -> bool
where
    E: PartialEq + Scalable,
{
    let ab = bracket(a, b);
    let lhs = bracket(a, &bracket(a, &ab));
    lhs == ab.scale_by(&rat(4))
}

/// Multiplication by a rational scalar, used by generic relation checks.
pub trait Scalable {
    fn scale_by(&self, c: &Rational) -> Self;
}

impl Scalable for OnsagerElem {
    fn scale_by(&self, c: &Rational) -> Self {
        self.scale(c)
    }
}

impl Add for &OnsagerElem {
    type Output = OnsagerElem;
    fn add(self, rhs: &OnsagerElem) -> OnsagerElem {
        let mut out = self.clone();
        for (b, c) in rhs.terms() {
            out.add_term(b, c.clone());
        }
        out
    }
}

impl Neg for &OnsagerElem {
    type Output = OnsagerElem;
    fn neg(self) -> OnsagerElem {
        self.scale(&rat(-1))
    }
}

impl Sub for &OnsagerElem {
    type Output = OnsagerElem;
    fn sub(self, rhs: &OnsagerElem) -> OnsagerElem {
        self + &(-rhs)
    }
}

fn index_text(n: impl fmt::Display) -> String {
    let s = n.to_string();
    if s.len() == 1 {
        s
    } else {
        format!("{{{s}}}")
    }
}

/// Terms `c*A_{m}` and `c*G_{l}`; braces are dropped for single-digit
/// indices, e.g. `A_0 - 2*G_3 + 1/2*A_{-1}`.
impl fmt::Display for OnsagerElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut out = String::new();
        for (b, c) in self.terms() {
            let name = match b {
                OnsagerBasis::A(m) => format!("A_{}", index_text(m)),
                OnsagerBasis::G(l) => format!("G_{}", index_text(l)),
            };
            push_term(&mut out, c, Some(&name));
        }
        if out.is_empty() {
            out.push('0');
        }
        f.write_str(&out)
    }
}

fn parse_basis(s: &str) -> Option<OnsagerBasis> {
    let s = s.trim();
    let (kind, rest) = s.split_once('_')?;
    let rest = rest.trim();
    let idx = rest
        .strip_prefix('{')
        .and_then(|r| r.strip_suffix('}'))
        .unwrap_or(rest)
        .trim();
    match kind.trim() {
        "A" => idx.parse().ok().map(OnsagerBasis::A),
        "G" => idx.parse().ok().filter(|&l| l >= 1).map(OnsagerBasis::G),
        _ => None,
    }
}

impl FromStr for OnsagerElem {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, ParseError> {
        let mut out = OnsagerElem::zero();
        if s.trim() == "0" {
            return Ok(out);
        }
        for (positive, term) in split_signed_terms(s)? {
            let pos = s.find(term.as_str()).unwrap_or(0);
            let (coef, basis) = match term.split_once('*') {
                Some((c, b)) => (parse_rational(c).map_err(|e| e.shifted(pos))?, b),
                None => (Rational::one(), term.as_str()),
            };
            let basis = parse_basis(basis)
                .ok_or_else(|| ParseError::new(pos, format!("expected A_m or G_l, got `{term}`")))?;
            out.add_term(basis, if positive { coef } else { -coef });
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn o(s: &str) -> OnsagerElem {
        s.parse().unwrap()
    }

    #[test]
    fn bracket_examples() {
        assert_eq!(o("A_1").bracket(&o("A_0")), o("2*G_1"));
        assert_eq!(o("G_1").bracket(&o("A_0")), o("A_1 - A_{-1}"));
        assert!(o("G_2").bracket(&o("G_5")).is_zero());
        assert_eq!(o("A_0").bracket(&o("A_1")), o("-2*G_1"));
        assert!(o("A_3").bracket(&o("A_3")).is_zero());
    }

    #[test]
    fn automorphism_examples() {
        assert_eq!(o("A_2").auto(OnsagerAuto::Down), o("-A_2"));
        assert_eq!(o("A_3").auto(OnsagerAuto::Star), o("A_{-2}"));
        assert_eq!(o("G_2").auto(OnsagerAuto::DoubleDown), o("G_2"));
        assert_eq!(o("G_3").auto(OnsagerAuto::DoubleDown), o("-G_3"));
        assert_eq!(o("A_{-1}").auto(OnsagerAuto::Down), o("A_{-1}"));
    }

    #[test]
    fn dolan_grady_pairs() {
        assert!(check_dolan_grady(&o("A_0"), &o("A_1")));
        assert!(check_dolan_grady(&o("A_0"), &o("A_0")));
        // [G1,[G1,[G1,A0]]] = A_3 - 3A_1 + 3A_{-1} - A_{-3} differs from
        // 4[G1,A0] = 4A_1 - 4A_{-1}, while the A_0-side relation holds.
        assert!(!check_dolan_grady(&o("A_0"), &o("G_1")));
        assert!(dolan_grady_holds(&o("A_0"), &o("G_1"), onsager_bracket));
    }

    #[test]
    fn text_form() {
        let e = o("A_0 - 2*G_3 + 1/2*A_{-1}");
        assert_eq!(e.to_string(), "1/2*A_{-1} + A_0 - 2*G_3");
        assert_eq!(o(&e.to_string()), e);
        assert_eq!(OnsagerElem::zero().to_string(), "0");
        assert_eq!(o("A_{12}").to_string(), "A_{12}");
        assert!("G_0".parse::<OnsagerElem>().is_err());
        assert!("B_1".parse::<OnsagerElem>().is_err());
        assert_eq!(OnsagerElem::g(-2), o("-G_2"));
        assert!(OnsagerElem::g(0).is_zero());
    }
}
