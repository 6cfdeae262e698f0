//! The decomposition `L(sl2)+ = Δ ⊕ Δ' ⊕ Δ''` with
//!
//! ```text
//! Δ   = X⊗K[T]          + Y⊗T K[T]         + Z⊗(T-1)K[T]
//! Δ'  = X⊗(T'-1)K[T']   + Y⊗K[T']          + Z⊗T' K[T']
//! Δ'' = X⊗T''K[T'']     + Y⊗(T''-1)K[T'']  + Z⊗K[T'']
//! ```
//!
//! Each slot of `A` splits as `S K[S] ⊕ (S-1)K[S] ⊕ K[S]` over the three
//! atoms, in a pattern that rotates with the slot.

use num_traits::Zero;

use super::{LoopElem, Slot};
use crate::rational::Rational;
use crate::ring::{Atom, RingElem};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum DeltaKind {
    Delta,
    DeltaPrime,
    DeltaDoublePrime,
}

impl DeltaKind {
    pub const ALL: [DeltaKind; 3] = [
        DeltaKind::Delta,
        DeltaKind::DeltaPrime,
        DeltaKind::DeltaDoublePrime,
    ];

    fn atom(self) -> Atom {
        match self {
            DeltaKind::Delta => Atom::T,
            DeltaKind::DeltaPrime => Atom::U,
            DeltaKind::DeltaDoublePrime => Atom::V,
        }
    }
}

/// Which subspace of `K[S]` a slot of a `Δ`-type summand uses.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Shape {
    /// `K[S]`
    Full,
    /// `S K[S]`: no constant term.
    TimesS,
    /// `(S-1) K[S]`: vanishes at `S = 1`.
    TimesSMinusOne,
}

fn shape(kind: DeltaKind, slot: Slot) -> Shape {
    // Δ: (Full, TimesS, TimesSMinusOne) on (X, Y, Z); primes rotate it.
    let shift = match kind {
        DeltaKind::Delta => 0,
        DeltaKind::DeltaPrime => 1,
        DeltaKind::DeltaDoublePrime => 2,
    };
    let idx = (slot as usize + 3 - shift) % 3;
    [Shape::Full, Shape::TimesS, Shape::TimesSMinusOne][idx]
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DeltaSplit {
    pub d: LoopElem,
    pub dp: LoopElem,
    pub dpp: LoopElem,
}

impl DeltaSplit {
    pub fn get(&self, kind: DeltaKind) -> &LoopElem {
        match kind {
            DeltaKind::Delta => &self.d,
            DeltaKind::DeltaPrime => &self.dp,
            DeltaKind::DeltaDoublePrime => &self.dpp,
        }
    }

    pub fn sum(&self) -> LoopElem {
        &(&self.d + &self.dp) + &self.dpp
    }
}

fn sum_of(part: &std::collections::BTreeMap<u32, Rational>) -> Rational {
    part.values().fold(Rational::zero(), |a, c| a + c)
}

/// Splits one ring coefficient sitting in `slot` into its three summands.
fn split_coefficient(a: &RingElem, slot: Slot) -> [RingElem; 3] {
    let mut out: [RingElem; 3] = Default::default();
    let full_kind = DeltaKind::ALL
        .into_iter()
        .find(|&k| shape(k, slot) == Shape::Full)
        .unwrap();
    let mut constant = a.constant_term().clone();
    for (n, kind) in DeltaKind::ALL.into_iter().enumerate() {
        let atom = kind.atom();
        let part = a.part(atom);
        let mut piece = RingElem::zero();
        for (&i, c) in part {
            piece = &piece + &RingElem::term(c.clone(), atom, i);
        }
        if shape(kind, slot) == Shape::TimesSMinusOne {
            // Σ c_i (S^i - 1); the subtracted constants are returned to the
            // K[S] summand of this slot.
            let s = sum_of(part);
            piece = &piece - &RingElem::constant(s.clone());
            constant += s;
        }
        out[n] = piece;
    }
    let idx = DeltaKind::ALL.iter().position(|&k| k == full_kind).unwrap();
    out[idx] = &out[idx] + &RingElem::constant(constant);
    out
}

pub fn split_delta(u: &LoopElem) -> DeltaSplit {
    let [dx, dpx, dppx] = split_coefficient(&u.x, Slot::X);
    let [dy, dpy, dppy] = split_coefficient(&u.y, Slot::Y);
    let [dz, dpz, dppz] = split_coefficient(&u.z, Slot::Z);
    DeltaSplit {
        d: LoopElem::new(dx, dy, dz),
        dp: LoopElem::new(dpx, dpy, dpz),
        dpp: LoopElem::new(dppx, dppy, dppz),
    }
}

pub fn delta_membership(u: &LoopElem, which: DeltaKind) -> bool {
    let atom = which.atom();
    Slot::ALL.iter().all(|&slot| {
        let a = u.slot(slot);
        let Some(p) = a.as_poly_in(atom) else {
            return false;
        };
        match shape(which, slot) {
            Shape::Full => true,
            Shape::TimesS => p.coeff(0).is_zero(),
            Shape::TimesSMinusOne => p.sum_of_coeffs().is_zero(),
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn l(s: &str) -> LoopElem {
        s.parse().unwrap()
    }

    #[test]
    fn split_examples() {
        let s = split_delta(&l("X[1]"));
        assert_eq!(s.d, l("X[1]"));
        assert!(s.dp.is_zero() && s.dpp.is_zero());

        let s = split_delta(&l("X[1 - U]"));
        assert!(s.d.is_zero() && s.dpp.is_zero());
        assert_eq!(s.dp, l("X[1 - U]"));

        let s = split_delta(&l("Y[1]"));
        assert!(s.d.is_zero() && s.dpp.is_zero());
        assert_eq!(s.dp, l("Y[1]"));
    }

    #[test]
    fn membership_examples() {
        assert!(delta_membership(&l("Z[T - 1]"), DeltaKind::Delta));
        assert!(!delta_membership(&l("Y[1]"), DeltaKind::Delta));
        assert!(delta_membership(&LoopElem::zero(), DeltaKind::Delta));
        assert!(delta_membership(&l("X[U - 1]; Y[1]; Z[U^2]"), DeltaKind::DeltaPrime));
        assert!(!delta_membership(&l("X[U]"), DeltaKind::DeltaPrime));
        assert!(delta_membership(&l("X[V]; Y[V - 1]; Z[3]"), DeltaKind::DeltaDoublePrime));
        assert!(!delta_membership(&l("X[T]"), DeltaKind::DeltaDoublePrime));
    }

    #[test]
    fn split_of_mixed_element() {
        let u = l("X[2 + T - 3*U^2 + V]; Y[5 - T + U + V^3]; Z[1 + T^2 + U - 4*V]");
        let s = split_delta(&u);
        assert_eq!(s.sum(), u);
        for k in DeltaKind::ALL {
            assert!(delta_membership(s.get(k), k), "{k:?}");
        }
    }
}
