//! The Tetrahedron algebra `⊠`, realized through its isomorphism `σ` onto
//! `L(sl2)+`.
//!
//! A [`TetraElem`] *is* its `σ`-image. The defining relations are never used
//! to rewrite anything; they are checked against the images in
//! [`checks::verify_tetra_relations`].

pub mod checks;
mod omega;
mod perm;
mod table;

pub use omega::{omega_decompose, reconstruct, OmegaCoords};
pub use perm::{NamedAuto, Permutation};
pub use table::{
    onsager_image, table_image, Family, OnsagerEmbedding, STANDARD_ONSAGER_QUAD,
};

use std::fmt;
use std::ops::{Add, Neg, Sub};

use crate::error::{Error, Result};
use crate::loops::{loop_bracket, LoopElem, Slot};
use crate::onsager::Scalable;
use crate::rational::{rat, Rational};
use crate::ring::RingElem;
use crate::sl2::Sl2Elem;

/// The generator `X_{ij}`, `i != j`, `i, j ∈ {0,1,2,3}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GeneratorId {
    i: u8,
    j: u8,
}

impl GeneratorId {
    pub fn new(i: u8, j: u8) -> Result<Self> {
        if i > 3 || j > 3 || i == j {
            return Err(Error::IndexTuple(vec![i, j]));
        }
        Ok(GeneratorId { i, j })
    }

    pub fn i(&self) -> u8 {
        self.i
    }

    pub fn j(&self) -> u8 {
        self.j
    }

    pub fn reversed(&self) -> Self {
        GeneratorId {
            i: self.j,
            j: self.i,
        }
    }

    /// `X_{i^τ j^τ}`
    pub fn permuted(&self, tau: &Permutation) -> Self {
        GeneratorId {
            i: tau.apply(self.i),
            j: tau.apply(self.j),
        }
    }

    /// All 12 ordered pairs.
    pub fn all() -> Vec<GeneratorId> {
        let mut out = Vec::with_capacity(12);
        for i in 0..4 {
            for j in 0..4 {
                if i != j {
                    out.push(GeneratorId { i, j });
                }
            }
        }
        out
    }

    /// `X12, X23, X31, X03, X01, X02`: one of each antisymmetric pair.
    pub fn canonical_six() -> [GeneratorId; 6] {
        [(1, 2), (2, 3), (3, 1), (0, 3), (0, 1), (0, 2)].map(|(i, j)| GeneratorId { i, j })
    }
}

impl fmt::Display for GeneratorId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "X{}{}", self.i, self.j)
    }
}

/// Checks that `tuple` lists mutually distinct vertices.
pub(crate) fn distinct<const N: usize>(tuple: [u8; N]) -> Result<[u8; N]> {
    for (k, &a) in tuple.iter().enumerate() {
        if a > 3 || tuple[..k].contains(&a) {
            return Err(Error::IndexTuple(tuple.to_vec()));
        }
    }
    Ok(tuple)
}

/// An element of `⊠`, held as its normal form in `L(sl2)+`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct TetraElem(LoopElem);

impl TetraElem {
    pub fn from_normal_form(u: LoopElem) -> Self {
        TetraElem(u)
    }

    pub fn normal_form(&self) -> &LoopElem {
        &self.0
    }

    pub fn into_normal_form(self) -> LoopElem {
        self.0
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn generator(g: GeneratorId) -> Self {
        generator_image(g)
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn scale(&self, c: &Rational) -> Self {
        TetraElem(self.0.scale(c))
    }

    pub fn bracket(&self, other: &TetraElem) -> TetraElem {
        tetra_bracket(self, other)
    }

    /// The automorphism induced by `tau`, applied to a normal form.
    ///
    /// The element is first written in the `Ω ⊕ Ω' ⊕ Ω''` basis; each
    /// Onsager component is then re-embedded along the permuted quadruple.
    pub fn permute(&self, tau: &Permutation) -> TetraElem {
        if *tau == Permutation::IDENTITY {
            return self.clone();
        }
        let coords = omega_decompose(self);
        let mut out = LoopElem::zero();
        for (family, comp) in Family::ALL.into_iter().zip(coords.components()) {
            if comp.is_zero() {
                continue;
            }
            let quad = family.quad().map(|v| tau.apply(v));
            let image = onsager_image(comp, quad).expect("permuted quad stays distinct");
            out = &out + image.normal_form();
        }
        TetraElem(out)
    }

    pub fn named(&self, a: NamedAuto) -> TetraElem {
        self.permute(&a.permutation())
    }
}

/// The `σ`-images of the generators:
///
/// ```text
/// X12 -> X⊗1     X03 -> Y⊗T + Z⊗(T-1)
/// X23 -> Y⊗1     X01 -> Z⊗T' + X⊗(T'-1)
/// X31 -> Z⊗1     X02 -> X⊗T'' + Y⊗(T''-1)
/// ```
///
/// and `X_{ji} = -X_{ij}`.
pub fn generator_image(g: GeneratorId) -> TetraElem {
    let s: RingElem = RingElem::one();
    let (t, tp, tpp) = (
        RingElem::t(),
        RingElem::t_prime(),
        RingElem::t_double_prime(),
    );
    let u = match (g.i, g.j) {
        (1, 2) => LoopElem::pure(Slot::X, s),
        (2, 3) => LoopElem::pure(Slot::Y, s),
        (3, 1) => LoopElem::pure(Slot::Z, s),
        (0, 3) => LoopElem::new(RingElem::zero(), t.clone(), &t - &s),
        (0, 1) => LoopElem::new(&tp - &s, RingElem::zero(), tp),
        (0, 2) => LoopElem::new(tpp.clone(), &tpp - &s, RingElem::zero()),
        _ => return -generator_image(g.reversed()),
    };
    TetraElem(u)
}

pub fn tetra_bracket(u: &TetraElem, v: &TetraElem) -> TetraElem {
    TetraElem(loop_bracket(&u.0, &v.0))
}

/// The homomorphism `sl2 -> ⊠` with `X -> X_hi`, `Y -> X_ij`, `Z -> X_jh`.
pub fn std_hom_sl2(u: &Sl2Elem, triple: [u8; 3]) -> Result<TetraElem> {
    let [h, i, j] = distinct(triple)?;
    let gen = |a, b| generator_image(GeneratorId { i: a, j: b });
    Ok(&(&gen(h, i).scale(&u.x) + &gen(i, j).scale(&u.y)) + &gen(j, h).scale(&u.z))
}

/// The standard quadruple for `L(sl2) -> ⊠`.
pub const STANDARD_LOOP_QUAD: [u8; 4] = [1, 2, 3, 0];

/// The homomorphism `L(sl2) -> ⊠` for the quadruple `(h,i,j,k)`:
/// `X1 -> X_hi, Y1 -> X_ij, Z1 -> X_jh, X0 -> X_jk, Y0 -> X_kh, Z0 -> X_hj`.
///
/// For the standard quadruple `(1,2,3,0)` this is the identity on normal
/// forms; other quadruples are reached through the `S4` action.
pub fn loop_image(u: &LoopElem, quad: [u8; 4]) -> Result<TetraElem> {
    let quad = distinct(quad)?;
    if !u.in_loop_algebra() {
        return Err(Error::NotInLoopAlgebra);
    }
    let tau = Permutation::carrying(STANDARD_LOOP_QUAD, quad)?;
    Ok(TetraElem(u.clone()).permute(&tau))
}

impl Scalable for TetraElem {
    fn scale_by(&self, c: &Rational) -> Self {
        self.scale(c)
    }
}

impl Scalable for LoopElem {
    fn scale_by(&self, c: &Rational) -> Self {
        self.scale(c)
    }
}

impl Add for &TetraElem {
    type Output = TetraElem;
    fn add(self, rhs: &TetraElem) -> TetraElem {
        TetraElem(&self.0 + &rhs.0)
    }
}

impl Sub for &TetraElem {
    type Output = TetraElem;
    fn sub(self, rhs: &TetraElem) -> TetraElem {
        TetraElem(&self.0 - &rhs.0)
    }
}

impl Neg for &TetraElem {
    type Output = TetraElem;
    fn neg(self) -> TetraElem {
        TetraElem(-&self.0)
    }
}

impl Neg for TetraElem {
    type Output = TetraElem;
    fn neg(self) -> TetraElem {
        TetraElem(-self.0)
    }
}

impl std::iter::Sum for TetraElem {
    fn sum<I: Iterator<Item = TetraElem>>(iter: I) -> TetraElem {
        iter.fold(TetraElem::zero(), |a, b| &a + &b)
    }
}

impl fmt::Display for TetraElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// `2 X_{hi} + 2 X_{ij}`, the right-hand side of the triangle relation.
pub(crate) fn triangle_rhs(h: u8, i: u8, j: u8) -> TetraElem {
    let two = rat(2);
    &generator_image(GeneratorId { i: h, j: i }).scale(&two)
        + &generator_image(GeneratorId { i, j }).scale(&two)
}
