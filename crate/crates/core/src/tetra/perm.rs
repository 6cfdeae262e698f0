//! Permutations of the vertex set `{0, 1, 2, 3}`.
//!
//! Products act from the right: `a.then(&b)` applies `a` first and then `b`.

use std::fmt;

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: [u8; 4],
}

/// The automorphisms with special names.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum NamedAuto {
    /// `(123)`
    Prime,
    /// `(13)`
    Omega,
    /// `(13)(02)`
    D,
    /// `(12)`
    Down,
    /// `(03)`
    DoubleDown,
    /// `(01)(23)`
    Star,
}

impl NamedAuto {
    pub const ALL: [NamedAuto; 6] = [
        NamedAuto::Prime,
        NamedAuto::Omega,
        NamedAuto::D,
        NamedAuto::Down,
        NamedAuto::DoubleDown,
        NamedAuto::Star,
    ];

    pub fn permutation(self) -> Permutation {
        let images = match self {
            NamedAuto::Prime => [0, 2, 3, 1],
            NamedAuto::Omega => [0, 3, 2, 1],
            NamedAuto::D => [2, 3, 0, 1],
            NamedAuto::Down => [0, 2, 1, 3],
            NamedAuto::DoubleDown => [3, 1, 2, 0],
            NamedAuto::Star => [1, 0, 3, 2],
        };
        Permutation { images }
    }

    /// Surface-syntax name.
    pub fn name(self) -> &'static str {
        match self {
            NamedAuto::Prime => "prime",
            NamedAuto::Omega => "omega",
            NamedAuto::D => "d",
            NamedAuto::Down => "down",
            NamedAuto::DoubleDown => "Down",
            NamedAuto::Star => "star",
        }
    }

    pub fn from_name(s: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|a| a.name() == s)
    }
}

impl Permutation {
    pub const IDENTITY: Permutation = Permutation {
        images: [0, 1, 2, 3],
    };

    /// Builds the permutation sending `v` to `images[v]`.
    pub fn new(images: [u8; 4]) -> Result<Self> {
        let mut seen = [false; 4];
        for &v in &images {
            if v > 3 || std::mem::replace(&mut seen[v as usize], true) {
                return Err(Error::IndexTuple(images.to_vec()));
            }
        }
        Ok(Permutation { images })
    }

    pub fn images(&self) -> [u8; 4] {
        self.images
    }

    pub fn apply(&self, v: u8) -> u8 {
        self.images[v as usize]
    }

    /// `self` first, then `next`.
    pub fn then(&self, next: &Permutation) -> Permutation {
        Permutation {
            images: self.images.map(|v| next.apply(v)),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = [0; 4];
        for (v, &w) in self.images.iter().enumerate() {
            images[w as usize] = v as u8;
        }
        Permutation { images }
    }

    /// The unique permutation carrying `from[k]` to `to[k]` for every `k`;
    /// both must list all four vertices.
    pub fn carrying(from: [u8; 4], to: [u8; 4]) -> Result<Permutation> {
        let from = Permutation::new(from)?;
        let to = Permutation::new(to)?;
        Ok(from.inverse().then(&to))
    }

    /// All 24 elements, in lexicographic order of their image lists.
    pub fn all() -> Vec<Permutation> {
        let mut out = Vec::with_capacity(24);
        for a in 0..4u8 {
            for b in 0..4u8 {
                for c in 0..4u8 {
                    let Some(d) = 6u8.checked_sub(a + b + c) else {
                        continue;
                    };
                    if let Ok(p) = Permutation::new([a, b, c, d]) {
                        out.push(p);
                    }
                }
            }
        }
        out
    }
}

/// Image-list notation `perm(abcd)`: `a` is the image of 0, and so on.
impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c, d] = self.images;
        write!(f, "perm({a}{b}{c}{d})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn group_structure() {
        let all = Permutation::all();
        assert_eq!(all.len(), 24);
        let p = NamedAuto::Prime.permutation();
        assert_eq!(p.then(&p).then(&p), Permutation::IDENTITY);
        assert_eq!(p.then(&p.inverse()), Permutation::IDENTITY);
        assert!(Permutation::new([0, 0, 1, 2]).is_err());
        assert!(Permutation::new([0, 1, 2, 4]).is_err());
    }

    #[test]
    fn right_action_order() {
        // 1 under prime goes to 2, then star sends 2 to 3.
        let ps = NamedAuto::Prime.permutation().then(&NamedAuto::Star.permutation());
        assert_eq!(ps.apply(1), 3);
        assert_eq!(ps.apply(2), 2);
    }

    #[test]
    fn carrying_quads() {
        let t = Permutation::carrying([1, 2, 0, 3], [2, 3, 0, 1]).unwrap();
        assert_eq!(t, NamedAuto::Prime.permutation());
    }

    #[test]
    fn subgroup_orders() {
        fn closure(gens: &[Permutation]) -> usize {
            let mut set = vec![Permutation::IDENTITY];
            let mut i = 0;
            while i < set.len() {
                for g in gens {
                    let p = set[i].then(g);
                    if !set.contains(&p) {
                        set.push(p);
                    }
                }
                i += 1;
            }
            set.len()
        }
        use NamedAuto::*;
        assert_eq!(closure(&[Prime.permutation(), Omega.permutation()]), 6);
        assert_eq!(
            closure(&[Down.permutation(), DoubleDown.permutation(), Star.permutation()]),
            8
        );
        assert_eq!(closure(&[Omega.permutation(), D.permutation()]), 4);
    }
}
