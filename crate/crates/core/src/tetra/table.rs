//! Images of the Onsager basis in `L(sl2)+`.
//!
//! Two independent constructions live here: the closed forms in terms of
//! `U_n(1 - 2S)` ([`table_image`]) and the bracket recursion from a pair of
//! seed generators ([`OnsagerEmbedding`]).

use num_traits::One;

use super::{distinct, generator_image, GeneratorId, TetraElem};
use crate::chebyshev::shifted_poly;
use crate::error::Result;
use crate::loops::{loop_bracket, LoopElem, Slot};
use crate::onsager::{OnsagerBasis, OnsagerElem};
use crate::poly::Polynomial;
use crate::rational::frac;
use crate::ring::{Atom, RingElem};

/// The quadruple `(1,2,0,3)` defining the standard Onsager homomorphism.
pub const STANDARD_ONSAGER_QUAD: [u8; 4] = [1, 2, 0, 3];

/// The three Onsager subalgebras `Ω`, `Ω'`, `Ω''`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    Omega,
    OmegaPrime,
    OmegaDoublePrime,
}

impl Family {
    pub const ALL: [Family; 3] = [Family::Omega, Family::OmegaPrime, Family::OmegaDoublePrime];

    /// The quadruple whose Onsager image is this subalgebra.
    pub fn quad(self) -> [u8; 4] {
        match self {
            Family::Omega => [1, 2, 0, 3],
            Family::OmegaPrime => [2, 3, 0, 1],
            Family::OmegaDoublePrime => [3, 1, 0, 2],
        }
    }

    pub fn from_quad(quad: [u8; 4]) -> Option<Family> {
        Self::ALL.into_iter().find(|f| f.quad() == quad)
    }

    fn atom(self) -> Atom {
        match self {
            Family::Omega => Atom::T,
            Family::OmegaPrime => Atom::U,
            Family::OmegaDoublePrime => Atom::V,
        }
    }

    /// Slots holding the `K[S]`, `S K[S]` and `(S-1) K[S]` coefficients.
    fn slots(self) -> [Slot; 3] {
        match self {
            Family::Omega => [Slot::X, Slot::Y, Slot::Z],
            Family::OmegaPrime => [Slot::Y, Slot::Z, Slot::X],
            Family::OmegaDoublePrime => [Slot::Z, Slot::X, Slot::Y],
        }
    }

    /// Assembles `slot0⊗f + slot1⊗S g + slot2⊗(S-1) h`.
    pub(crate) fn assemble(self, f: &Polynomial, g: &Polynomial, h: &Polynomial) -> LoopElem {
        let atom = self.atom();
        let s = Polynomial::x();
        let s1 = Polynomial::from_i64(&[-1, 1]);
        let [a, b, c] = self.slots();
        let mut parts = [RingElem::zero(), RingElem::zero(), RingElem::zero()];
        parts[a as usize] = RingElem::from_poly_in(atom, f);
        parts[b as usize] = RingElem::from_poly_in(atom, &(&s * g));
        parts[c as usize] = RingElem::from_poly_in(atom, &(&s1 * h));
        let [x, y, z] = parts;
        LoopElem::new(x, y, z)
    }

    /// The three coefficient polynomials of an element of this family's
    /// `Δ`-subspace, as `(f, S g, (S-1) h)`; `None` if it is not in it.
    pub(crate) fn disassemble(self, u: &LoopElem) -> Option<[Polynomial; 3]> {
        let atom = self.atom();
        let [a, b, c] = self.slots();
        Some([
            u.slot(a).as_poly_in(atom)?,
            u.slot(b).as_poly_in(atom)?,
            u.slot(c).as_poly_in(atom)?,
        ])
    }
}

fn u(n: i64) -> Polynomial {
    shifted_poly(n).expect("index is at least -1")
}

/// The closed-form image of a basis element in the given family:
///
/// ```text
/// a_m     = -X⊗U_{m-2} + Y⊗T U_{m-1} + Z⊗(T-1) U_{m-1}      (m >= 1)
/// a_{1-m} =  X⊗U_{m-1} - Y⊗T U_{m-2} - Z⊗(T-1) U_{m-2}      (m >= 1)
/// g_m     = -X⊗U_{m-1} - Y⊗T U_{m-1} + Z⊗(T-1) U_{m-1}      (m >= 1)
/// ```
///
/// with `U_n = U_n(1-2T)`; the primed families rotate slots and atoms.
pub fn table_image(family: Family, b: OnsagerBasis) -> LoopElem {
    let (f, g, h) = match b {
        OnsagerBasis::A(m) if m >= 1 => (-&u(m - 2), u(m - 1), u(m - 1)),
        OnsagerBasis::A(k) => {
            let m = 1 - k;
            (u(m - 1), -&u(m - 2), -&u(m - 2))
        }
        OnsagerBasis::G(m) => {
            let m = m as i64;
            (-&u(m - 1), -&u(m - 1), u(m - 1))
        }
    };
    family.assemble(&f, &g, &h)
}

/// The Onsager homomorphism for a quadruple, built by bracket recursion
/// from `a_0 = X_hi` and `a_1 = X_jk`:
///
/// ```text
/// g_1 = [a_1, a_0] / 2
/// a_{m+1} = [g_1, a_m] + a_{m-1}
/// a_{-m}  = a_{2-m} - [g_1, a_{1-m}]
/// g_m = [a_m, a_0] / 2
/// ```
///
/// Images are cached as they are computed.
#[derive(Clone, Debug)]
pub struct OnsagerEmbedding {
    quad: [u8; 4],
    g1: LoopElem,
    /// `a_0, a_1, a_2, ...`
    pos: Vec<LoopElem>,
    /// `a_1, a_0, a_{-1}, ...`: entry `k` is `a_{1-k}`.
    neg: Vec<LoopElem>,
    /// `g_1, g_2, ...`
    g: Vec<LoopElem>,
}

impl OnsagerEmbedding {
    pub fn new(quad: [u8; 4]) -> Result<Self> {
        let [h, i, j, k] = distinct(quad)?;
        let a0 = generator_image(GeneratorId { i: h, j: i }).into_normal_form();
        let a1 = generator_image(GeneratorId { i: j, j: k }).into_normal_form();
        let g1 = loop_bracket(&a1, &a0).scale(&frac(1, 2));
        Ok(OnsagerEmbedding {
            quad,
            pos: vec![a0.clone(), a1.clone()],
            neg: vec![a1, a0],
            g: vec![g1.clone()],
            g1,
        })
    }

    pub fn quad(&self) -> [u8; 4] {
        self.quad
    }

    fn a(&mut self, m: i64) -> LoopElem {
        if m >= 0 {
            let m = m as usize;
            while self.pos.len() <= m {
                let n = self.pos.len();
                let next = &loop_bracket(&self.g1, &self.pos[n - 1]) + &self.pos[n - 2];
                self.pos.push(next);
            }
            self.pos[m].clone()
        } else {
            let k = (1 - m) as usize;
            while self.neg.len() <= k {
                let n = self.neg.len();
                let next = &self.neg[n - 2] - &loop_bracket(&self.g1, &self.neg[n - 1]);
                self.neg.push(next);
            }
            self.neg[k].clone()
        }
    }

    fn g(&mut self, l: u64) -> LoopElem {
        let l = l as usize;
        while self.g.len() < l {
            let n = self.g.len() + 1;
            let am = self.a(n as i64);
            let next = loop_bracket(&am, &self.pos[0]).scale(&frac(1, 2));
            self.g.push(next);
        }
        self.g[l - 1].clone()
    }

    pub fn basis_image(&mut self, b: OnsagerBasis) -> LoopElem {
        match b {
            OnsagerBasis::A(m) => self.a(m),
            OnsagerBasis::G(l) => self.g(l),
        }
    }

    pub fn image(&mut self, u: &OnsagerElem) -> TetraElem {
        let mut out = LoopElem::zero();
        for (b, c) in u.terms() {
            let img = self.basis_image(b);
            out = &out + &if c.is_one() { img } else { img.scale(c) };
        }
        TetraElem::from_normal_form(out)
    }
}

/// The homomorphism `O -> ⊠` sending `A -> X_hi`, `B -> X_jk`.
///
/// The quadruples `(1,2,0,3)`, `(2,3,0,1)`, `(3,1,0,2)` use the closed
/// forms; any other quadruple is computed by recursion from its seeds.
pub fn onsager_image(u: &OnsagerElem, quad: [u8; 4]) -> Result<TetraElem> {
    let quad = distinct(quad)?;
    match Family::from_quad(quad) {
        Some(family) => Ok(TetraElem::from_normal_form(
            u.terms()
                .map(|(b, c)| table_image(family, b).scale(c))
                .sum(),
        )),
        None => Ok(OnsagerEmbedding::new(quad)?.image(u)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn l(s: &str) -> LoopElem {
        s.parse().unwrap()
    }

    #[test]
    fn small_rows() {
        use OnsagerBasis::*;
        assert_eq!(table_image(Family::Omega, A(0)), l("X[1]"));
        assert_eq!(table_image(Family::Omega, A(1)), l("Y[T]; Z[T - 1]"));
        assert_eq!(table_image(Family::Omega, G(1)), l("X[-1]; Y[-T]; Z[T - 1]"));
        assert_eq!(
            table_image(Family::Omega, A(2)),
            l("X[-1]; Y[2*T - 4*T^2]; Z[-2 + 6*T - 4*T^2]")
        );
        assert_eq!(table_image(Family::OmegaPrime, A(0)), l("Y[1]"));
        assert_eq!(table_image(Family::OmegaDoublePrime, A(0)), l("Z[1]"));
    }

    #[test]
    fn primed_rows_are_primes_of_unprimed() {
        for m in -4..=5 {
            let b = OnsagerBasis::A(m);
            let a = table_image(Family::Omega, b);
            assert_eq!(table_image(Family::OmegaPrime, b), a.prime());
            assert_eq!(table_image(Family::OmegaDoublePrime, b), a.prime().prime());
        }
    }

    #[test]
    fn recursion_matches_table() {
        for family in Family::ALL {
            let mut emb = OnsagerEmbedding::new(family.quad()).unwrap();
            for m in -6..=7 {
                let b = OnsagerBasis::A(m);
                assert_eq!(emb.basis_image(b), table_image(family, b), "{family:?} {b:?}");
            }
            for l in 1..=7 {
                let b = OnsagerBasis::G(l);
                assert_eq!(emb.basis_image(b), table_image(family, b), "{family:?} {b:?}");
            }
        }
    }

    #[test]
    fn image_rejects_repeated_vertices() {
        assert!(onsager_image(&OnsagerElem::a(0), [1, 2, 2, 3]).is_err());
    }
}
