//! Verification routines that compare the normal-form arithmetic with the
//! identities it must satisfy.

use super::table::{table_image, Family, OnsagerEmbedding, STANDARD_ONSAGER_QUAD};
use super::{
    generator_image, loop_image, onsager_image, std_hom_sl2, tetra_bracket, triangle_rhs,
    GeneratorId, NamedAuto, Permutation, TetraElem, STANDARD_LOOP_QUAD,
};
use crate::linalg::rank;
use crate::loops::{
    chevalley_generator, equitable_generator, loop_prime, ChevalleyGen, EquitableGen, LoopElem,
};
use crate::onsager::{dolan_grady_holds, OnsagerAuto, OnsagerBasis, OnsagerElem};
use crate::rational::{frac, rat};
use crate::report::Report;
use crate::sl2::Sl2Elem;

fn x(i: u8, j: u8) -> TetraElem {
    generator_image(GeneratorId { i, j })
}

fn quads() -> impl Iterator<Item = [u8; 4]> {
    Permutation::all().into_iter().map(|p| p.images())
}

/// The three defining relations on every admissible index tuple: 12 pairs,
/// 24 triples and 24 quadruples.
pub fn verify_tetra_relations() -> Report {
    let mut report = Report::new();
    for g in GeneratorId::all() {
        let sum = &generator_image(g) + &generator_image(g.reversed());
        report.record(format!("X{}{} + X{}{} = 0", g.i, g.j, g.j, g.i), sum.is_zero());
    }
    for [h, i, j, _] in quads() {
        let lhs = tetra_bracket(&x(h, i), &x(i, j));
        report.record(
            format!("[X{h}{i},X{i}{j}] = 2X{h}{i}+2X{i}{j}"),
            lhs == triangle_rhs(h, i, j),
        );
    }
    for [h, i, j, k] in quads() {
        report.record(
            format!("[X{h}{i},[X{h}{i},[X{h}{i},X{j}{k}]]] = 4[X{h}{i},X{j}{k}]"),
            dolan_grady_holds(&x(h, i), &x(j, k), tetra_bracket),
        );
    }
    report
}

/// The closed-form table against the bracket recursion, for all nine rows
/// (`a_m`, `a_{1-m}`, `g_m` in each family) and `1 <= m <= max_m`.
pub fn verify_table(max_m: u32) -> Report {
    let mut report = Report::new();
    for family in Family::ALL {
        let mut emb = OnsagerEmbedding::new(family.quad()).expect("family quads are distinct");
        let mark = match family {
            Family::Omega => "",
            Family::OmegaPrime => "'",
            Family::OmegaDoublePrime => "''",
        };
        for m in 1..=max_m as i64 {
            let rows = [
                (format!("a{mark}_{m}"), OnsagerBasis::A(m)),
                (format!("a{mark}_{}", 1 - m), OnsagerBasis::A(1 - m)),
                (format!("g{mark}_{m}"), OnsagerBasis::G(m as u64)),
            ];
            for (name, b) in rows {
                report.record(
                    format!("table {name} = recursion"),
                    table_image(family, b) == emb.basis_image(b),
                );
            }
        }
    }
    report
}

fn sum_of(range: impl Iterator<Item = LoopElem>) -> LoopElem {
    range.sum()
}

/// The six bracket formulas for `[a'_0, ·]` and `[a'_1, ·]` against
/// `a_m, a_{1-m}, g_m`, for `1 <= m <= max_m`.
pub fn verify_lemma76(max_m: u32) -> Report {
    let mut report = Report::new();
    let a = |m: i64| table_image(Family::Omega, OnsagerBasis::A(m));
    let g = |l: i64| table_image(Family::Omega, OnsagerBasis::G(l as u64));
    let a0p = table_image(Family::OmegaPrime, OnsagerBasis::A(0));
    let a1p = table_image(Family::OmegaPrime, OnsagerBasis::A(1));
    let br = crate::loops::loop_bracket;
    let (two, four) = (rat(2), rat(4));
    for m in 1..=max_m as i64 {
        let sum_a = sum_of((1..m).map(a));
        let sum_a_neg = sum_of((1..m).map(|i| a(1 - i)));
        let sum_g = sum_of((1..m).map(g));
        let sum_all = sum_of((1 - m..=m).map(a));

        let rhs20 = &(&(&a0p.scale(&-&two) + &a(m).scale(&two)) + &sum_a.scale(&four))
            - &sum_g.scale(&four);
        let rhs21 = &(&(&a0p.scale(&-&two) - &a(1 - m).scale(&two)) - &sum_a_neg.scale(&four))
            - &sum_g.scale(&four);
        let rhs22 = sum_all.scale(&two);
        let rhs23 = &(&(&a1p.scale(&two) - &a(m).scale(&two)) - &sum_a.scale(&four))
            - &sum_g.scale(&four);
        let rhs24 = &(&(&a1p.scale(&two) + &a(1 - m).scale(&two)) + &sum_a_neg.scale(&four))
            - &sum_g.scale(&four);
        let rhs25 = rhs22.clone();

        let cases = [
            ("[a'_0,a_m]", br(&a0p, &a(m)), rhs20),
            ("[a'_0,a_{1-m}]", br(&a0p, &a(1 - m)), rhs21),
            ("[a'_0,g_m]", br(&a0p, &g(m)), rhs22),
            ("[a'_1,a_m]", br(&a1p, &a(m)), rhs23),
            ("[a'_1,a_{1-m}]", br(&a1p, &a(1 - m)), rhs24),
            ("[a'_1,g_m]", br(&a1p, &g(m)), rhs25),
        ];
        for (name, lhs, rhs) in cases {
            report.record(format!("{name} m={m}"), lhs == rhs);
        }
    }
    report
}

/// A fixed sample of bracket words in the generators, as index lists.
fn sample_words() -> Vec<Vec<GeneratorId>> {
    let g = |i, j| GeneratorId { i, j };
    vec![
        vec![g(0, 1)],
        vec![g(1, 2), g(0, 3)],
        vec![g(0, 2), g(2, 3), g(3, 1)],
        vec![g(3, 0), g(1, 2), g(0, 1), g(2, 3)],
        vec![g(1, 3), g(0, 2)],
    ]
}

/// Right-normed bracket `[w_0, [w_1, [..., w_n]]]`, with generators mapped
/// through `f`.
fn word(w: &[GeneratorId], f: impl Fn(GeneratorId) -> TetraElem) -> TetraElem {
    let mut it = w.iter().rev();
    let last = f(*it.next().expect("words are nonempty"));
    it.fold(last, |acc, g| tetra_bracket(&f(*g), &acc))
}

/// Distinctness of the 24 induced maps on the six canonical generators, and
/// bracket preservation of each on a fixed sample of words.
pub fn verify_s4_injection() -> Report {
    let mut report = Report::new();
    let all = Permutation::all();
    let maps: Vec<Vec<TetraElem>> = all
        .iter()
        .map(|tau| {
            GeneratorId::canonical_six()
                .iter()
                .map(|g| generator_image(g.permuted(tau)))
                .collect()
        })
        .collect();
    let mut distinct = 0;
    for (n, m) in maps.iter().enumerate() {
        let unique = maps.iter().enumerate().all(|(k, other)| k == n || other != m);
        report.record(format!("{} is distinct from the other 23", all[n]), unique);
        distinct += usize::from(unique);
    }
    report.record(format!("{distinct} distinct maps out of 24"), distinct == 24);
    for tau in &all {
        let ok = sample_words().iter().all(|w| {
            let permuted_word = word(w, |g| generator_image(g.permuted(tau)));
            let acted = word(w, generator_image).permute(tau);
            permuted_word == acted
        });
        report.record(format!("{tau} preserves brackets on sample words"), ok);
    }
    report
}

/// The commuting squares relating the automorphisms of `sl2`, `O`,
/// `L(sl2)` and `L(sl2)+` to those of `⊠`.
pub fn verify_diagrams() -> Report {
    let mut report = Report::new();
    let sl2_std = |u: &Sl2Elem| std_hom_sl2(u, [1, 2, 3]).expect("distinct triple");
    for (name, u) in [
        ("X", Sl2Elem::basis_x()),
        ("Y", Sl2Elem::basis_y()),
        ("Z", Sl2Elem::basis_z()),
    ] {
        report.record(
            format!("sl2 square for prime on {name}"),
            sl2_std(&u.prime()) == sl2_std(&u).named(NamedAuto::Prime),
        );
        report.record(
            format!("sl2 square for omega on {name}"),
            sl2_std(&u.omega()) == sl2_std(&u).named(NamedAuto::Omega),
        );
    }

    let ons_std = |u: &OnsagerElem| onsager_image(u, STANDARD_ONSAGER_QUAD).expect("distinct quad");
    let ons_autos = [
        ("down", OnsagerAuto::Down, NamedAuto::Down),
        ("Down", OnsagerAuto::DoubleDown, NamedAuto::DoubleDown),
        ("star", OnsagerAuto::Star, NamedAuto::Star),
    ];
    for (name, oa, ta) in ons_autos {
        for m in -2..=3 {
            let u = OnsagerElem::a(m);
            report.record(
                format!("Onsager square for {name} on A_{m}"),
                ons_std(&u.auto(oa)) == ons_std(&u).named(ta),
            );
        }
        for l in 1..=2 {
            let u = OnsagerElem::g(l);
            report.record(
                format!("Onsager square for {name} on G_{l}"),
                ons_std(&u.auto(oa)) == ons_std(&u).named(ta),
            );
        }
    }

    let loop_std = |u: &LoopElem| loop_image(u, STANDARD_LOOP_QUAD).expect("in L(sl2)");
    for g in EquitableGen::ALL {
        let (omega_g, d_g) = match g {
            EquitableGen::X(i) => (-equitable_generator(EquitableGen::Y(i)), EquitableGen::X(1 - i)),
            EquitableGen::Y(i) => (-equitable_generator(EquitableGen::X(i)), EquitableGen::Y(1 - i)),
            EquitableGen::Z(i) => (-equitable_generator(EquitableGen::Z(i)), EquitableGen::Z(1 - i)),
        };
        let u = equitable_generator(g);
        report.record(
            format!("loop square for omega on {g}"),
            loop_std(&omega_g) == loop_std(&u).named(NamedAuto::Omega),
        );
        report.record(
            format!("loop square for d on {g}"),
            loop_std(&equitable_generator(d_g)) == loop_std(&u).named(NamedAuto::D),
        );
    }

    let prime = NamedAuto::Prime.permutation();
    for g in GeneratorId::all() {
        report.record(
            format!("sigma square for prime on {g}"),
            loop_prime(generator_image(g).normal_form())
                == *generator_image(g.permuted(&prime)).normal_form(),
        );
    }

    // Natural inclusion against σ after the standard loop homomorphism, with
    // X1, Y1, Z1, X0, Y0, Z0 sent to X12, X23, X31, X30, X01, X13.
    let half = frac(1, 2);
    let (x1, y1, z1) = (x(1, 2), x(2, 3), x(3, 1));
    let (x0, y0, z0) = (x(3, 0), x(0, 1), x(1, 3));
    let chased = |g: ChevalleyGen| -> TetraElem {
        let (xi, yi, zi) = match g {
            ChevalleyGen::E(1) | ChevalleyGen::F(1) | ChevalleyGen::H(1) => (&x1, &y1, &z1),
            _ => (&x0, &y0, &z0),
        };
        match g {
            ChevalleyGen::E(_) => (xi + zi).scale(&half),
            ChevalleyGen::F(_) => (yi + zi).scale(&-&half),
            ChevalleyGen::H(_) => zi.clone(),
        }
    };
    for g in ChevalleyGen::ALL {
        let natural = chevalley_generator(g);
        report.record(
            format!("natural inclusion square on {g}"),
            *chased(g).normal_form() == natural
                && *loop_std(&natural).normal_form() == natural,
        );
    }
    report
}

/// The standard Onsager homomorphism preserves brackets of basis elements
/// with `|m|, l <= bound`.
pub fn verify_onsager_homomorphism(bound: i64) -> Report {
    let mut report = Report::new();
    let mut basis: Vec<OnsagerBasis> = (-bound..=bound).map(OnsagerBasis::A).collect();
    basis.extend((1..=bound as u64).map(OnsagerBasis::G));
    let img = |u: &OnsagerElem| onsager_image(u, STANDARD_ONSAGER_QUAD).expect("distinct quad");
    for (n, &p) in basis.iter().enumerate() {
        for &q in &basis[n + 1..] {
            let (u, v) = (OnsagerElem::basis(p), OnsagerElem::basis(q));
            report.record(
                format!("image of [{u},{v}]"),
                img(&u.bracket(&v)) == tetra_bracket(&img(&u), &img(&v)),
            );
        }
    }
    report
}

/// Rank of `{a_m, g_l : |m| <= n, l <= n}` in all three families together;
/// returns `(rank, number of vectors)`.
pub fn omega_family_rank(n: i64) -> (usize, usize) {
    let mut vectors = Vec::new();
    for family in Family::ALL {
        for m in -n..=n {
            vectors.push(table_image(family, OnsagerBasis::A(m)));
        }
        for l in 1..=n as u64 {
            vectors.push(table_image(family, OnsagerBasis::G(l)));
        }
    }
    let count = vectors.len();
    (rank(vectors.iter().map(LoopElem::coordinates)), count)
}

/// The Dolan-Grady relations for the images of `A_0, A_1` along every one
/// of the 24 quadruples.
pub fn verify_dolan_grady_conjugates() -> Report {
    let mut report = Report::new();
    for quad in quads() {
        let mut emb = OnsagerEmbedding::new(quad).expect("permutation images are distinct");
        let a = TetraElem::from_normal_form(emb.basis_image(OnsagerBasis::A(0)));
        let b = TetraElem::from_normal_form(emb.basis_image(OnsagerBasis::A(1)));
        let [h, i, j, k] = quad;
        report.record(
            format!("Dolan-Grady for X{h}{i}, X{j}{k}"),
            dolan_grady_holds(&a, &b, tetra_bracket) && dolan_grady_holds(&b, &a, tetra_bracket),
        );
    }
    report
}
