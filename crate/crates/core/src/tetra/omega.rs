//! Coordinates of an element of `⊠` in the direct sum `Ω ⊕ Ω' ⊕ Ω''`.

use num_traits::Zero;

use super::table::{onsager_image, Family};
use super::TetraElem;
use crate::chebyshev::shifted_coordinates;
use crate::loops::{split_delta, LoopElem};
use crate::onsager::{OnsagerBasis, OnsagerElem};
use crate::poly::Polynomial;
use crate::rational::{frac, Rational};

/// Onsager coordinates of the three components.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct OmegaCoords {
    pub omega: OnsagerElem,
    pub omega_p: OnsagerElem,
    pub omega_pp: OnsagerElem,
}

impl OmegaCoords {
    pub fn get(&self, family: Family) -> &OnsagerElem {
        match family {
            Family::Omega => &self.omega,
            Family::OmegaPrime => &self.omega_p,
            Family::OmegaDoublePrime => &self.omega_pp,
        }
    }

    pub fn components(&self) -> [&OnsagerElem; 3] {
        [&self.omega, &self.omega_p, &self.omega_pp]
    }
}

/// Chebyshev coordinates of `p`, padded with zeros to length `n`.
fn padded(p: &Polynomial, n: usize) -> Vec<Rational> {
    let mut v = shifted_coordinates(p);
    v.resize(n.max(v.len()), Rational::zero());
    v
}

/// Solves for the `Ω`-coordinates of an element of `Δ`.
///
/// Writing the three slots as `X⊗f + Y⊗T g + Z⊗(T-1) h` and expanding
/// `f, g, h` on `U_k(1-2T)`, the images of `a_{-k}, a_{k+1}, g_{k+1}` occupy
/// block `k` triangularly with lower-order spill into block `k-1` only, so
/// blocks are cleared from the top down.
fn solve_delta(d: &LoopElem) -> OnsagerElem {
    let [f, sg, s1h] = Family::Omega
        .disassemble(d)
        .expect("component lies in Δ");
    let g = sg.div_rem(&Polynomial::x()).0;
    let h = s1h.div_rem(&Polynomial::from_i64(&[-1, 1])).0;
    let n = [&f, &g, &h]
        .iter()
        .filter_map(|p| p.degree())
        .max()
        .map_or(0, |d| d + 1);
    let (mut cf, mut cg, mut ch) = (padded(&f, n), padded(&g, n), padded(&h, n));
    let half = frac(1, 2);
    let mut out = OnsagerElem::zero();
    for k in (0..n).rev() {
        // Block k: a_{-k} -> (1,0,0), a_{k+1} -> (0,1,1), g_{k+1} -> (-1,-1,1).
        let beta = (&cg[k] + &ch[k]) * &half;
        let gamma = (&ch[k] - &cg[k]) * &half;
        let alpha = &cf[k] + &gamma;
        if k > 0 {
            // Spill: a_{-k} -> (0,-1,-1) and a_{k+1} -> (-1,0,0) in block k-1.
            cf[k - 1] += &beta;
            cg[k - 1] += &alpha;
            ch[k - 1] += &alpha;
        }
        let k = k as i64;
        out.add_term(OnsagerBasis::A(-k), alpha);
        out.add_term(OnsagerBasis::A(k + 1), beta);
        out.add_term(OnsagerBasis::G(k as u64 + 1), gamma);
    }
    out
}

/// Splits the normal form along `Δ ⊕ Δ' ⊕ Δ''` and expresses each summand
/// on the corresponding Onsager basis. The primed summands are moved into
/// `Δ` with the order-3 automorphism before solving.
pub fn omega_decompose(u: &TetraElem) -> OmegaCoords {
    let split = split_delta(u.normal_form());
    OmegaCoords {
        omega: solve_delta(&split.d),
        omega_p: solve_delta(&split.dp.prime().prime()),
        omega_pp: solve_delta(&split.dpp.prime()),
    }
}

/// The element with the given coordinates.
pub fn reconstruct(coords: &OmegaCoords) -> TetraElem {
    let image = |family: Family| {
        onsager_image(coords.get(family), family.quad())
            .expect("family quads are distinct")
            .into_normal_form()
    };
    TetraElem::from_normal_form(
        Family::ALL.into_iter().map(image).sum(),
    )
}
