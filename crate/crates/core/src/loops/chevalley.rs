//! Generators of `L(sl2)` and its two presentations.

use std::fmt;

use super::{loop_bracket, LoopElem};
use crate::linalg::rank;
use crate::onsager::dolan_grady_holds;
use crate::rational::rat;
use crate::report::Report;
use crate::ring::RingElem;
use crate::sl2::{efh_to_equitable, Sl2Elem};

/// Cartan matrix of the affine algebra behind `L(sl2)`.
pub const CARTAN: [[i64; 2]; 2] = [[2, -2], [-2, 2]];

/// `e_i, f_i, h_i` for `i ∈ {0, 1}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ChevalleyGen {
    E(u8),
    F(u8),
    H(u8),
}

/// `X_i, Y_i, Z_i` for `i ∈ {0, 1}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum EquitableGen {
    X(u8),
    Y(u8),
    Z(u8),
}

impl ChevalleyGen {
    pub const ALL: [ChevalleyGen; 6] = [
        ChevalleyGen::E(0),
        ChevalleyGen::F(0),
        ChevalleyGen::H(0),
        ChevalleyGen::E(1),
        ChevalleyGen::F(1),
        ChevalleyGen::H(1),
    ];
}

impl EquitableGen {
    pub const ALL: [EquitableGen; 6] = [
        EquitableGen::X(0),
        EquitableGen::Y(0),
        EquitableGen::Z(0),
        EquitableGen::X(1),
        EquitableGen::Y(1),
        EquitableGen::Z(1),
    ];
}

impl fmt::Display for ChevalleyGen {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ChevalleyGen::E(i) => write!(f, "e{i}"),
            ChevalleyGen::F(i) => write!(f, "f{i}"),
            ChevalleyGen::H(i) => write!(f, "h{i}"),
        }
    }
}

impl fmt::Display for EquitableGen {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EquitableGen::X(i) => write!(f, "X{i}"),
            EquitableGen::Y(i) => write!(f, "Y{i}"),
            EquitableGen::Z(i) => write!(f, "Z{i}"),
        }
    }
}

fn e() -> Sl2Elem {
    efh_to_equitable(&rat(1), &rat(0), &rat(0))
}

fn f() -> Sl2Elem {
    efh_to_equitable(&rat(0), &rat(1), &rat(0))
}

fn h() -> Sl2Elem {
    efh_to_equitable(&rat(0), &rat(0), &rat(1))
}

/// `e1 = e⊗1, f1 = f⊗1, h1 = h⊗1, e0 = f⊗T, f0 = e⊗T^-1, h0 = -h⊗1`.
///
/// # Panics
///
/// If the index is not 0 or 1.
pub fn chevalley_generator(g: ChevalleyGen) -> LoopElem {
    match g {
        ChevalleyGen::E(1) => LoopElem::constant(&e()),
        ChevalleyGen::F(1) => LoopElem::constant(&f()),
        ChevalleyGen::H(1) => LoopElem::constant(&h()),
        ChevalleyGen::E(0) => LoopElem::tensor(&f(), &RingElem::t()),
        ChevalleyGen::F(0) => LoopElem::tensor(&e(), &RingElem::t_inverse()),
        ChevalleyGen::H(0) => LoopElem::constant(&-&h()),
        _ => panic!("generator index must be 0 or 1"),
    }
}

/// `X_i = 2e_i - h_i`, `Y_i = -2f_i - h_i`, `Z_i = h_i`.
///
/// # Panics
///
/// If the index is not 0 or 1.
pub fn equitable_generator(g: EquitableGen) -> LoopElem {
    let two = rat(2);
    match g {
        EquitableGen::X(i) => {
            &chevalley_generator(ChevalleyGen::E(i)).scale(&two)
                - &chevalley_generator(ChevalleyGen::H(i))
        }
        EquitableGen::Y(i) => {
            &chevalley_generator(ChevalleyGen::F(i)).scale(&-two)
                - &chevalley_generator(ChevalleyGen::H(i))
        }
        EquitableGen::Z(i) => chevalley_generator(ChevalleyGen::H(i)),
    }
}

fn br(u: &LoopElem, v: &LoopElem) -> LoopElem {
    loop_bracket(u, v)
}

fn chevalley_relations(report: &mut Report) {
    use ChevalleyGen::{E, F, H};
    let g = chevalley_generator;
    report.record("h0 + h1 = 0", (&g(H(0)) + &g(H(1))).is_zero());
    for i in 0..2u8 {
        for j in 0..2u8 {
            let a = rat(CARTAN[i as usize][j as usize]);
            report.record(
                format!("[h{i},e{j}] = {a}*e{j}"),
                br(&g(H(i)), &g(E(j))) == g(E(j)).scale(&a),
            );
            report.record(
                format!("[h{i},f{j}] = {}*f{j}", -&a),
                br(&g(H(i)), &g(F(j))) == g(F(j)).scale(&-&a),
            );
            let expected = if i == j { g(H(j)) } else { LoopElem::zero() };
            report.record(
                format!("[e{i},f{j}] = {}", if i == j { format!("h{j}") } else { "0".into() }),
                br(&g(E(i)), &g(F(j))) == expected,
            );
            if i != j {
                let (ei, ej) = (g(E(i)), g(E(j)));
                report.record(
                    format!("[e{i},[e{i},[e{i},e{j}]]] = 0"),
                    br(&ei, &br(&ei, &br(&ei, &ej))).is_zero(),
                );
                let (fi, fj) = (g(F(i)), g(F(j)));
                report.record(
                    format!("[f{i},[f{i},[f{i},f{j}]]] = 0"),
                    br(&fi, &br(&fi, &br(&fi, &fj))).is_zero(),
                );
            }
        }
    }
}

fn equitable_relations(report: &mut Report) {
    use EquitableGen::{X, Y, Z};
    let g = equitable_generator;
    let two = rat(2);
    let twice_sum = |a: &LoopElem, b: &LoopElem| &a.scale(&two) + &b.scale(&two);
    report.record("Z0 + Z1 = 0", (&g(Z(0)) + &g(Z(1))).is_zero());
    for i in 0..2u8 {
        let (x, y, z) = (g(X(i)), g(Y(i)), g(Z(i)));
        report.record(format!("[X{i},Y{i}] = 2X{i}+2Y{i}"), br(&x, &y) == twice_sum(&x, &y));
        report.record(format!("[Y{i},Z{i}] = 2Y{i}+2Z{i}"), br(&y, &z) == twice_sum(&y, &z));
        report.record(format!("[Z{i},X{i}] = 2Z{i}+2X{i}"), br(&z, &x) == twice_sum(&z, &x));
        let j = 1 - i;
        let xj = g(X(j));
        report.record(format!("[Y{i},X{j}] = 2Y{i}+2X{j}"), br(&y, &xj) == twice_sum(&y, &xj));
        report.record(
            format!("[X{i},[X{i},[X{i},X{j}]]] = 4[X{i},X{j}]"),
            dolan_grady_holds(&x, &xj, br),
        );
        report.record(
            format!("[Y{i},[Y{i},[Y{i},Y{j}]]] = 4[Y{i},Y{j}]"),
            dolan_grady_holds(&y, &g(Y(j)), br),
        );
    }
}

/// `sl2 ⊗ T^k` as three vectors.
fn homogeneous_basis(k: i64) -> Vec<LoopElem> {
    let tk = if k >= 0 {
        RingElem::power(crate::ring::Atom::T, k as u32)
    } else {
        let inv = RingElem::t_inverse();
        (0..-k).fold(RingElem::one(), |acc, _| &acc * &inv)
    };
    [Sl2Elem::basis_x(), Sl2Elem::basis_y(), Sl2Elem::basis_z()]
        .iter()
        .map(|u| LoopElem::tensor(u, &tk))
        .collect()
}

fn span_rank(vs: &[LoopElem]) -> usize {
    rank(vs.iter().map(LoopElem::coordinates))
}

/// Reaches `sl2 ⊗ T^{±k}` for `1 <= k <= maxdeg` by bracketing with `e0`
/// (resp. `f0`) and closing under `ad e1`, `ad f1`; checks that each
/// degree is spanned exactly.
fn generation(maxdeg: u32, report: &mut Report) {
    use ChevalleyGen::{E, F};
    let (e1, f1) = (chevalley_generator(E(1)), chevalley_generator(F(1)));
    for (sign, step) in [(1i64, chevalley_generator(E(0))), (-1, chevalley_generator(F(0)))] {
        let mut current = homogeneous_basis(0);
        for k in 1..=maxdeg as i64 {
            let mut next: Vec<LoopElem> = current.iter().map(|x| br(&step, x)).collect();
            for _ in 0..2 {
                let more: Vec<LoopElem> = next
                    .iter()
                    .flat_map(|x| [br(&e1, x), br(&f1, x)])
                    .collect();
                next.extend(more);
            }
            next.retain(|x| !x.is_zero());
            let target = homogeneous_basis(sign * k);
            let mut union = next.clone();
            union.extend(target.iter().cloned());
            let ok = span_rank(&next) == 3 && span_rank(&union) == 3;
            report.record(format!("generated sl2 ⊗ T^{}", sign * k), ok);
            // Keep an independent basis of this degree for the next step.
            current = target;
        }
    }
}

/// Checks both presentations of `L(sl2)` on the concrete generators, and
/// that the generators reach every degree `|k| <= maxdeg`.
pub fn check_loop_presentation(maxdeg: u32) -> Report {
    let mut report = Report::new();
    chevalley_relations(&mut report);
    equitable_relations(&mut report);
    generation(maxdeg, &mut report);
    report
}

#[cfg(test)]
mod tests {
    use super::*;

    fn l(s: &str) -> LoopElem {
        s.parse().unwrap()
    }

    #[test]
    fn generator_forms() {
        assert_eq!(chevalley_generator(ChevalleyGen::H(1)), l("Z[1]"));
        assert_eq!(chevalley_generator(ChevalleyGen::E(0)), l("Y[-1/2*T]; Z[-1/2*T]"));
        assert_eq!(equitable_generator(EquitableGen::X(1)), l("X[1]"));
        assert_eq!(equitable_generator(EquitableGen::Y(1)), l("Y[1]"));
        assert_eq!(equitable_generator(EquitableGen::Z(0)), l("Z[-1]"));
        assert_eq!(equitable_generator(EquitableGen::X(0)), l("Y[-T]; Z[1 - T]"));
    }

    #[test]
    fn presentation_holds() {
        let r = check_loop_presentation(4);
        assert!(r.all_passed(), "{r}");
        assert!(r.get("generated sl2 ⊗ T^-4").is_some());
    }
}
