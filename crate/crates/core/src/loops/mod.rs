//! The three-point loop algebra `L(sl2)+ = sl2 ⊗ A`.
//!
//! An element is `X⊗cx + Y⊗cy + Z⊗cz` with coefficients in [`RingElem`].
//! The ordinary loop algebra `L(sl2) = sl2 ⊗ K[T, T^-1]` is the subspace whose
//! coefficients have no `T''` part; see [`LoopElem::in_loop_algebra`].

mod chevalley;
mod delta;

pub use chevalley::{
    check_loop_presentation, chevalley_generator, equitable_generator, ChevalleyGen,
    EquitableGen, CARTAN,
};
pub use delta::{delta_membership, split_delta, DeltaKind, DeltaSplit};

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Neg, Sub};
use std::str::FromStr;

use serde_json::{Map, Value};

use crate::error::ParseError;
use crate::rational::{rat, Rational};
use crate::ring::{Atom, RingElem};
use crate::sl2::{equitable_bracket, Sl2Elem};

/// One of the three `sl2` slots of a loop element.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Slot {
    X,
    Y,
    Z,
}

impl Slot {
    pub const ALL: [Slot; 3] = [Slot::X, Slot::Y, Slot::Z];

    fn name(self) -> &'static str {
        match self {
            Slot::X => "X",
            Slot::Y => "Y",
            Slot::Z => "Z",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct LoopElem {
    pub x: RingElem,
    pub y: RingElem,
    pub z: RingElem,
}

/// Key of a basis vector `slot ⊗ atom^i` (`i == 0` is `slot ⊗ 1`).
pub type BasisKey = (Slot, Atom, u32);

impl LoopElem {
    pub fn new(x: RingElem, y: RingElem, z: RingElem) -> Self {
        LoopElem { x, y, z }
    }

    pub fn zero() -> Self {
        Self::default()
    }

    /// `u ⊗ a`
    pub fn tensor(u: &Sl2Elem, a: &RingElem) -> Self {
        LoopElem::new(a.scale(&u.x), a.scale(&u.y), a.scale(&u.z))
    }

    /// `slot ⊗ a`
    pub fn pure(slot: Slot, a: RingElem) -> Self {
        let mut out = Self::zero();
        *out.slot_mut(slot) = a;
        out
    }

    /// `u ⊗ 1`
    pub fn constant(u: &Sl2Elem) -> Self {
        Self::tensor(u, &RingElem::one())
    }

    pub fn slot(&self, s: Slot) -> &RingElem {
        match s {
            Slot::X => &self.x,
            Slot::Y => &self.y,
            Slot::Z => &self.z,
        }
    }

    fn slot_mut(&mut self, s: Slot) -> &mut RingElem {
        match s {
            Slot::X => &mut self.x,
            Slot::Y => &mut self.y,
            Slot::Z => &mut self.z,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.x.is_zero() && self.y.is_zero() && self.z.is_zero()
    }

    pub fn scale(&self, c: &Rational) -> Self {
        LoopElem::new(self.x.scale(c), self.y.scale(c), self.z.scale(c))
    }

    pub fn bracket(&self, other: &LoopElem) -> LoopElem {
        loop_bracket(self, other)
    }

    /// `(u ⊗ a)' = u' ⊗ a'`; an automorphism of order 3.
    pub fn prime(&self) -> LoopElem {
        loop_prime(self)
    }

    /// Whether every coefficient lies in `K[T, T^-1]`.
    pub fn in_loop_algebra(&self) -> bool {
        Slot::ALL
            .iter()
            .all(|&s| self.slot(s).part(Atom::V).is_empty())
    }

    /// Evaluates the coefficients at `T = t`.
    pub fn eval_at(&self, t: &Rational) -> crate::error::Result<Sl2Elem> {
        Ok(Sl2Elem::new(
            self.x.eval_at(t)?,
            self.y.eval_at(t)?,
            self.z.eval_at(t)?,
        ))
    }

    /// Coordinates on the basis `{slot ⊗ 1, slot ⊗ T^i, slot ⊗ T'^i,
    /// slot ⊗ T''^i}`.
    pub fn coordinates(&self) -> BTreeMap<BasisKey, Rational> {
        let mut out = BTreeMap::new();
        for s in Slot::ALL {
            for (atom, i, c) in self.slot(s).terms() {
                out.insert((s, atom, i), c.clone());
            }
        }
        out
    }

    pub fn to_json(&self) -> Value {
        let mut obj = Map::new();
        for s in Slot::ALL {
            obj.insert(s.name().into(), self.slot(s).to_json());
        }
        Value::Object(obj)
    }

    pub fn from_json(value: &Value) -> Result<Self, ParseError> {
        let obj = value
            .as_object()
            .ok_or_else(|| ParseError::new(0, "loop element must be a JSON object"))?;
        let mut out = LoopElem::zero();
        for (key, v) in obj {
            let slot = match key.as_str() {
                "X" => Slot::X,
                "Y" => Slot::Y,
                "Z" => Slot::Z,
                other => return Err(ParseError::new(0, format!("unknown key `{other}`"))),
            };
            *out.slot_mut(slot) = RingElem::from_json(v)?;
        }
        Ok(out)
    }
}

/// `[u⊗a, v⊗b] = [u,v] ⊗ ab`, extended bilinearly.
pub fn loop_bracket(u: &LoopElem, v: &LoopElem) -> LoopElem {
    let [x, y, z] = equitable_bracket(
        [&u.x, &u.y, &u.z],
        [&v.x, &v.y, &v.z],
        |a, b| a * b,
        |a, b| a + b,
        |a, b| a - b,
        |a| a.scale(&rat(2)),
    );
    LoopElem { x, y, z }
}

pub fn loop_prime(u: &LoopElem) -> LoopElem {
    LoopElem::new(u.z.prime(), u.x.prime(), u.y.prime())
}

impl Add for &LoopElem {
    type Output = LoopElem;
    fn add(self, rhs: &LoopElem) -> LoopElem {
        LoopElem::new(&self.x + &rhs.x, &self.y + &rhs.y, &self.z + &rhs.z)
    }
}

impl Sub for &LoopElem {
    type Output = LoopElem;
    fn sub(self, rhs: &LoopElem) -> LoopElem {
        LoopElem::new(&self.x - &rhs.x, &self.y - &rhs.y, &self.z - &rhs.z)
    }
}

impl Neg for &LoopElem {
    type Output = LoopElem;
    fn neg(self) -> LoopElem {
        LoopElem::new(-&self.x, -&self.y, -&self.z)
    }
}

impl Add for LoopElem {
    type Output = LoopElem;
    fn add(self, rhs: LoopElem) -> LoopElem {
        &self + &rhs
    }
}

impl Sub for LoopElem {
    type Output = LoopElem;
    fn sub(self, rhs: LoopElem) -> LoopElem {
        &self - &rhs
    }
}

impl Neg for LoopElem {
    type Output = LoopElem;
    fn neg(self) -> LoopElem {
        -&self
    }
}

impl std::iter::Sum for LoopElem {
    fn sum<I: Iterator<Item = LoopElem>>(iter: I) -> LoopElem {
        iter.fold(LoopElem::zero(), |a, b| &a + &b)
    }
}

/// `X[<ring>]; Y[<ring>]; Z[<ring>]` with empty brackets for zero slots.
impl fmt::Display for LoopElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "X[{}]; Y[{}]; Z[{}]",
            self.x.write_terms(),
            self.y.write_terms(),
            self.z.write_terms()
        )
    }
}

impl FromStr for LoopElem {
    type Err = ParseError;

    /// Blocks may appear in any order or be omitted; omitted blocks are zero.
    fn from_str(s: &str) -> Result<Self, ParseError> {
        let mut out = LoopElem::zero();
        let mut seen = [false; 3];
        let mut offset = 0;
        for block in s.split(';') {
            let start = offset + (block.len() - block.trim_start().len());
            offset += block.len() + 1;
            let block = block.trim();
            if block.is_empty() {
                continue;
            }
            let slot = match block.chars().next() {
                Some('X') => Slot::X,
                Some('Y') => Slot::Y,
                Some('Z') => Slot::Z,
                _ => return Err(ParseError::new(start, "expected `X[`, `Y[` or `Z[`")),
            };
            let inner = block[1..]
                .trim_start()
                .strip_prefix('[')
                .and_then(|r| r.strip_suffix(']'))
                .ok_or_else(|| ParseError::new(start, "expected a bracketed ring element"))?;
            if std::mem::replace(&mut seen[slot as usize], true) {
                return Err(ParseError::new(start, format!("duplicate {} block", slot.name())));
            }
            *out.slot_mut(slot) = inner
                .parse()
                .map_err(|e: ParseError| e.shifted(start + 2))?;
        }
        Ok(out)
    }
}
