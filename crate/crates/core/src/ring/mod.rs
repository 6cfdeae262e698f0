//! The coefficient ring `A = K[T, T^-1, (T-1)^-1]`.
//!
//! Elements are stored on the basis `{1} ∪ {T^i, T'^i, T''^i : i >= 1}` where
//! `T' = 1 - T^-1` and `T'' = (1 - T)^-1`. That representation is unique, so
//! equality of [`RingElem`]s is structural. Multiplication goes through the
//! fraction form `p(T) / (T^a (T-1)^b)` and back via [`canonical_decompose`].

mod text;

use std::collections::BTreeMap;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::poly::Polynomial;
use crate::rational::{rat, Rational};

/// One of the three generators of the ring basis. `U` stands for `T'` and
/// `V` for `T''` in the textual form.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Atom {
    T,
    U,
    V,
}

impl Atom {
    pub const ALL: [Atom; 3] = [Atom::T, Atom::U, Atom::V];

    fn index(self) -> usize {
        self as usize
    }

    /// The image under the order-3 automorphism `T -> T' -> T'' -> T`.
    pub fn next(self) -> Atom {
        match self {
            Atom::T => Atom::U,
            Atom::U => Atom::V,
            Atom::V => Atom::T,
        }
    }

    pub fn symbol(self) -> char {
        match self {
            Atom::T => 'T',
            Atom::U => 'U',
            Atom::V => 'V',
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct RingElem {
    constant: Rational,
    parts: [BTreeMap<u32, Rational>; 3],
}

impl RingElem {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        RingElem {
            constant: c,
            ..Self::default()
        }
    }

    /// `c * atom^i`; `i == 0` gives the constant `c`.
    pub fn term(c: Rational, atom: Atom, i: u32) -> Self {
        let mut out = Self::zero();
        out.add_term(atom, i, c);
        out
    }

    /// The basis element `atom^i`.
    pub fn power(atom: Atom, i: u32) -> Self {
        Self::term(Rational::one(), atom, i)
    }

    pub fn t() -> Self {
        Self::power(Atom::T, 1)
    }

    pub fn t_prime() -> Self {
        Self::power(Atom::U, 1)
    }

    pub fn t_double_prime() -> Self {
        Self::power(Atom::V, 1)
    }

    /// `T^-1`, stored as `1 - T'`.
    pub fn t_inverse() -> Self {
        &Self::one() - &Self::t_prime()
    }

    /// Places the polynomial `p` in the given atom: `p(S)` with `S = atom`.
    pub fn from_poly_in(atom: Atom, p: &Polynomial) -> Self {
        let mut out = Self::zero();
        for (k, c) in p.coeffs().iter().enumerate() {
            out.add_term(atom, k as u32, c.clone());
        }
        out
    }

    pub fn from_poly(p: &Polynomial) -> Self {
        Self::from_poly_in(Atom::T, p)
    }

    fn add_term(&mut self, atom: Atom, i: u32, c: Rational) {
        if c.is_zero() {
            return;
        }
        if i == 0 {
            self.constant += c;
            return;
        }
        let part = &mut self.parts[atom.index()];
        let entry = part.entry(i).or_insert_with(Rational::zero);
        *entry += c;
        if entry.is_zero() {
            part.remove(&i);
        }
    }

    pub fn constant_term(&self) -> &Rational {
        &self.constant
    }

    /// Coefficients of `atom^i`, `i >= 1`, ascending.
    pub fn part(&self, atom: Atom) -> &BTreeMap<u32, Rational> {
        &self.parts[atom.index()]
    }

    pub fn coeff(&self, atom: Atom, i: u32) -> Rational {
        if i == 0 {
            return self.constant.clone();
        }
        self.part(atom).get(&i).cloned().unwrap_or_else(Rational::zero)
    }

    /// The non-constant `atom`-part as a polynomial in that atom (zero
    /// constant term).
    pub fn part_poly(&self, atom: Atom) -> Polynomial {
        let part = self.part(atom);
        let Some(&deg) = part.keys().next_back() else {
            return Polynomial::zero();
        };
        let mut coeffs = vec![Rational::zero(); deg as usize + 1];
        for (&i, c) in part {
            coeffs[i as usize] = c.clone();
        }
        Polynomial::from_coeffs(coeffs)
    }

    /// `Some(p)` when the element is the polynomial `p(atom)`.
    pub fn as_poly_in(&self, atom: Atom) -> Option<Polynomial> {
        let others_empty = Atom::ALL
            .iter()
            .filter(|&&a| a != atom)
            .all(|&a| self.part(a).is_empty());
        others_empty.then(|| &self.part_poly(atom) + &Polynomial::constant(self.constant.clone()))
    }

    pub fn is_zero(&self) -> bool {
        self.constant.is_zero() && self.parts.iter().all(BTreeMap::is_empty)
    }

    /// Number of nonzero basis coefficients.
    pub fn len(&self) -> usize {
        usize::from(!self.constant.is_zero()) + self.parts.iter().map(BTreeMap::len).sum::<usize>()
    }

    pub fn is_empty(&self) -> bool {
        self.is_zero()
    }

    /// Every nonzero coefficient as `(atom, exponent, coefficient)`, constant
    /// first (reported with atom `T` and exponent 0).
    pub fn terms(&self) -> impl Iterator<Item = (Atom, u32, &Rational)> {
        let constant = (!self.constant.is_zero()).then_some((Atom::T, 0, &self.constant));
        constant.into_iter().chain(
            Atom::ALL
                .into_iter()
                .flat_map(move |a| self.part(a).iter().map(move |(&i, c)| (a, i, c))),
        )
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        RingElem {
            constant: &self.constant * c,
            parts: self
                .parts
                .clone()
                .map(|p| p.into_iter().map(|(i, a)| (i, a * c)).collect()),
        }
    }

    /// The ring automorphism `'` with `T -> T' -> T'' -> T`.
    pub fn prime(&self) -> Self {
        let [t, u, v] = self.parts.clone();
        RingElem {
            constant: self.constant.clone(),
            parts: [v, t, u],
        }
    }

    /// Evaluates with `T = t`, `T' = 1 - 1/t`, `T'' = 1/(1 - t)`.
    pub fn eval_at(&self, t: &Rational) -> Result<Rational> {
        if t.is_zero() || t.is_one() {
            return Err(Error::Pole(crate::rational::format_rational(t)));
        }
        let one = Rational::one();
        let values = [t.clone(), &one - t.recip(), (&one - t).recip()];
        let mut acc = self.constant.clone();
        for atom in Atom::ALL {
            let base = &values[atom.index()];
            for (&i, c) in self.part(atom) {
                acc += c * num_traits::pow(base.clone(), i as usize);
            }
        }
        Ok(acc)
    }

    /// Writes the element as `num(T) / (T^a (T-1)^b)` with `a`, `b` the
    /// largest `T'` and `T''` exponents.
    pub fn to_fraction(&self) -> (Polynomial, u32, u32) {
        let a = self.part(Atom::U).keys().next_back().copied().unwrap_or(0);
        let b = self.part(Atom::V).keys().next_back().copied().unwrap_or(0);
        let t_minus_one = Polynomial::from_i64(&[-1, 1]);
        let tm1_pows: Vec<Polynomial> = (0..=a + b).map(|k| t_minus_one.pow(k)).collect();
        let base = tm1_pows[b as usize].shift(a as usize);
        let mut num = base.scale(&self.constant);
        for (&i, c) in self.part(Atom::T) {
            num = &num + &base.shift(i as usize).scale(c);
        }
        for (&i, c) in self.part(Atom::U) {
            let term = tm1_pows[(i + b) as usize].shift((a - i) as usize);
            num = &num + &term.scale(c);
        }
        for (&i, c) in self.part(Atom::V) {
            let sign = if i % 2 == 0 { rat(1) } else { rat(-1) };
            let term = tm1_pows[(b - i) as usize].shift(a as usize);
            num = &num + &term.scale(&(c * sign));
        }
        (num, a, b)
    }
}

fn binomial(n: u32, k: u32) -> Rational {
    if k > n {
        return Rational::zero();
    }
    let mut acc = BigInt::one();
    for j in 0..k {
        acc = acc * BigInt::from(n - j) / BigInt::from(j + 1);
    }
    Rational::from_integer(acc)
}

fn sign(k: u32) -> Rational {
    if k.is_multiple_of(2) {
        rat(1)
    } else {
        rat(-1)
    }
}

/// Expands `num(T) / (T^a (T-1)^b)` on the canonical basis of `A`.
///
/// The polynomial part comes from division by the denominator; the
/// principal parts at `T = 0` and `T = 1` are read off truncated power series
/// and rewritten with `T^-j = (1 - T')^j` and `(T-1)^-j = (-1)^j T''^j`.
pub fn canonical_decompose(num: &Polynomial, a: i64, b: i64) -> Result<RingElem> {
    if a < 0 || b < 0 {
        return Err(Error::NegativeExponent { a, b });
    }
    Ok(decompose(num, a as u32, b as u32))
}

pub(crate) fn decompose(num: &Polynomial, a: u32, b: u32) -> RingElem {
    let t_minus_one = Polynomial::from_i64(&[-1, 1]);
    let denom = t_minus_one.pow(b).shift(a as usize);
    let (poly_part, rem) = num.div_rem(&denom);
    let mut out = RingElem::from_poly(&poly_part);
    if rem.is_zero() {
        return out;
    }

    if a > 0 {
        // rem(T) / (T-1)^b as a series at 0, up to T^(a-1).
        let inv: Vec<Rational> = (0..a)
            .map(|k| {
                if b == 0 {
                    if k == 0 {
                        rat(1)
                    } else {
                        rat(0)
                    }
                } else {
                    sign(b) * binomial(k + b - 1, b - 1)
                }
            })
            .collect();
        let series = truncated_product(rem.coeffs(), &inv, a as usize);
        for j in 1..=a {
            let c = &series[(a - j) as usize];
            if c.is_zero() {
                continue;
            }
            for s in 0..=j {
                out.add_term(Atom::U, s, c * binomial(j, s) * sign(s));
            }
        }
    }

    if b > 0 {
        // rem(S+1) / (S+1)^a as a series at S = 0, up to S^(b-1).
        let shifted = rem.compose(&Polynomial::from_i64(&[1, 1]));
        let inv: Vec<Rational> = (0..b)
            .map(|k| {
                if a == 0 {
                    if k == 0 {
                        rat(1)
                    } else {
                        rat(0)
                    }
                } else {
                    sign(k) * binomial(k + a - 1, a - 1)
                }
            })
            .collect();
        let series = truncated_product(shifted.coeffs(), &inv, b as usize);
        for j in 1..=b {
            let c = &series[(b - j) as usize];
            out.add_term(Atom::V, j, c * sign(j));
        }
    }
    out
}

fn truncated_product(p: &[Rational], q: &[Rational], n: usize) -> Vec<Rational> {
    let mut out = vec![Rational::zero(); n];
    for (i, a) in p.iter().enumerate().take(n) {
        if a.is_zero() {
            continue;
        }
        for (j, b) in q.iter().enumerate().take(n - i) {
            out[i + j] += a * b;
        }
    }
    out
}

impl Add for &RingElem {
    type Output = RingElem;
    fn add(self, rhs: &RingElem) -> RingElem {
        let mut out = self.clone();
        for (atom, i, c) in rhs.terms() {
            out.add_term(atom, i, c.clone());
        }
        out
    }
}

impl Neg for &RingElem {
    type Output = RingElem;
    fn neg(self) -> RingElem {
        self.scale(&rat(-1))
    }
}

impl Sub for &RingElem {
    type Output = RingElem;
    fn sub(self, rhs: &RingElem) -> RingElem {
        self + &(-rhs)
    }
}

impl Mul for &RingElem {
    type Output = RingElem;
    fn mul(self, rhs: &RingElem) -> RingElem {
        if self.is_zero() || rhs.is_zero() {
            return RingElem::zero();
        }
        if let Some(c) = self.as_constant() {
            return rhs.scale(c);
        }
        if let Some(c) = rhs.as_constant() {
            return self.scale(c);
        }
        let (p, a1, b1) = self.to_fraction();
        let (q, a2, b2) = rhs.to_fraction();
        decompose(&(&p * &q), a1 + a2, b1 + b2)
    }
}

impl RingElem {
    fn as_constant(&self) -> Option<&Rational> {
        self.parts
            .iter()
            .all(BTreeMap::is_empty)
            .then_some(&self.constant)
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr for RingElem {
            type Output = RingElem;
            fn $m(self, rhs: RingElem) -> RingElem {
                (&self).$m(&rhs)
            }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul);

impl Neg for RingElem {
    type Output = RingElem;
    fn neg(self) -> RingElem {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::frac;

    fn r(s: &str) -> RingElem {
        s.parse().unwrap()
    }

    #[test]
    fn addition() {
        assert!((&r("1") + &r("-1")).is_zero());
        let s = &r("T") + &r("U");
        assert_eq!(s.len(), 2);
        assert_eq!(&r("T + 1") + &r("2*T"), r("3*T + 1"));
    }

    #[test]
    fn cyclic_products() {
        assert_eq!(&r("T") * &r("U"), r("T - 1"));
        assert_eq!(&r("U") * &r("V"), r("U - 1"));
        assert_eq!(&r("V") * &r("T"), r("V - 1"));
        assert_eq!(&r("T") * &RingElem::t_inverse(), RingElem::one());
    }

    #[test]
    fn decomposition_examples() {
        let one = Polynomial::one();
        assert_eq!(canonical_decompose(&one, 1, 0).unwrap(), r("1 - U"));
        assert_eq!(canonical_decompose(&one, 0, 1).unwrap(), r("-V"));
        assert_eq!(
            canonical_decompose(&Polynomial::from_i64(&[1, -2, 1]), 0, 0).unwrap(),
            r("1 - 2*T + T^2")
        );
        assert_eq!(canonical_decompose(&one, 2, 0).unwrap(), r("1 - 2*U + U^2"));
        assert!(matches!(
            canonical_decompose(&one, -1, 0),
            Err(Error::NegativeExponent { .. })
        ));
        assert!(canonical_decompose(&one, 0, -3).is_err());
    }

    #[test]
    fn mixed_pole_decomposition() {
        // 1 / (T (T-1)) = 1/(T-1) - 1/T = -T'' - (1 - T')
        let e = canonical_decompose(&Polynomial::one(), 1, 1).unwrap();
        assert_eq!(e, r("-1 + U - V"));
    }

    #[test]
    fn prime_cycles() {
        assert_eq!(r("T").prime(), r("U"));
        assert_eq!(r("V").prime(), r("T"));
        let a = r("2 - T^3 + 1/2*U + 5*V^2");
        assert_eq!(a.prime().prime().prime(), a);
    }

    #[test]
    fn evaluation() {
        assert_eq!(r("T").eval_at(&rat(2)).unwrap(), rat(2));
        assert_eq!(r("U").eval_at(&rat(2)).unwrap(), frac(1, 2));
        let p = &r("T") * &r("U");
        assert_eq!(p.eval_at(&rat(2)).unwrap(), rat(1));
        assert!(matches!(r("T").eval_at(&rat(0)), Err(Error::Pole(_))));
        assert!(r("T").eval_at(&rat(1)).is_err());
    }

    #[test]
    fn fraction_round_trip() {
        let a = r("3 - T + 2*T^2 - U^2 + 1/3*U^3 + V - 4*V^2");
        let (num, p, q) = a.to_fraction();
        assert_eq!(decompose(&num, p, q), a);
    }
}
