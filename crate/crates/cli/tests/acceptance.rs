//! Acceptance gate: one PASS/FAIL line per criterion, nonzero exit if any
//! criterion fails.

use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use tetrahedron::chebyshev::chebyshev_u;
use tetrahedron::expr::{parse, AutoName, ExprNode};
use tetrahedron::loops::{
    check_loop_presentation, chevalley_generator, delta_membership, loop_bracket, ChevalleyGen,
    DeltaKind,
};
use tetrahedron::poly::Polynomial;
use tetrahedron::rational::{frac, Rational};
use tetrahedron::ring::{Atom, RingElem};
use tetrahedron::tetra::checks::{
    omega_family_rank, verify_diagrams, verify_dolan_grady_conjugates, verify_lemma76,
    verify_s4_injection, verify_table, verify_tetra_relations,
};
use tetrahedron::tetra::{
    omega_decompose, onsager_image, reconstruct, Family, GeneratorId, NamedAuto, Permutation,
};
use tetrahedron::LoopElem;

struct Outcome {
    passed: bool,
    detail: String,
}

fn outcome(passed: bool, detail: impl Into<String>) -> Outcome {
    Outcome {
        passed,
        detail: detail.into(),
    }
}

fn timed<T>(f: impl FnOnce() -> T) -> (T, Duration) {
    let start = Instant::now();
    let out = f();
    (out, start.elapsed())
}

fn rational(rng: &mut StdRng) -> Rational {
    frac(rng.gen_range(-6..=6), rng.gen_range(1..=4))
}

fn ring_elem(rng: &mut StdRng) -> RingElem {
    let mut out = RingElem::constant(rational(rng));
    for _ in 0..rng.gen_range(0..=4) {
        let atom = Atom::ALL[rng.gen_range(0..3)];
        out = &out + &RingElem::term(rational(rng), atom, rng.gen_range(1..=4));
    }
    out
}

fn loop_elem(rng: &mut StdRng) -> LoopElem {
    LoopElem::new(ring_elem(rng), ring_elem(rng), ring_elem(rng))
}

fn eval_point(rng: &mut StdRng) -> Rational {
    loop {
        let t = frac(rng.gen_range(-9..=9), rng.gen_range(1..=5));
        if t != frac(0, 1) && t != frac(1, 1) {
            return t;
        }
    }
}

fn generator(rng: &mut StdRng) -> ExprNode {
    ExprNode::Generator(GeneratorId::all()[rng.gen_range(0..12)])
}

/// A bracket word whose nesting depth is at most `depth`.
fn bracket_word(rng: &mut StdRng, depth: u32) -> ExprNode {
    if depth == 0 || rng.gen_bool(0.35) {
        return generator(rng);
    }
    let a = bracket_word(rng, depth - 1);
    let b = if rng.gen_bool(0.6) {
        generator(rng)
    } else {
        bracket_word(rng, depth - 1)
    };
    ExprNode::bracket(a, b)
}

fn random_ast(rng: &mut StdRng, depth: u32) -> ExprNode {
    if depth == 0 || rng.gen_bool(0.3) {
        return generator(rng);
    }
    match rng.gen_range(0..3) {
        0 => ExprNode::bracket(random_ast(rng, depth - 1), random_ast(rng, depth - 1)),
        1 => ExprNode::Sum(
            (0..rng.gen_range(1..=3))
                .map(|_| (rational(rng), random_ast(rng, depth - 1)))
                .collect(),
        ),
        _ => {
            let name = if rng.gen_bool(0.5) {
                AutoName::Named(NamedAuto::ALL[rng.gen_range(0..6)])
            } else {
                AutoName::Perm(Permutation::all()[rng.gen_range(0..24)])
            };
            ExprNode::auto(name, random_ast(rng, depth - 1))
        }
    }
}

fn relations() -> Outcome {
    let (r, t) = timed(verify_tetra_relations);
    outcome(
        r.all_passed() && r.checked() == 60 && t < Duration::from_secs(1),
        format!("{} in {t:.2?}", r.summary()),
    )
}

fn table() -> Outcome {
    let (r, t) = timed(|| verify_table(20));
    outcome(
        r.all_passed() && r.checked() == 180 && t < Duration::from_secs(5),
        format!("{} in {t:.2?}", r.summary()),
    )
}

fn prime_brackets() -> Outcome {
    let r = verify_lemma76(15);
    outcome(r.all_passed() && r.checked() == 90, r.summary())
}

fn round_trip(rng: &mut StdRng) -> Outcome {
    let n = 200;
    let mut failures = 0;
    for _ in 0..n {
        let u = bracket_word(rng, 5).evaluate();
        let c = omega_decompose(&u);
        let mut ok = reconstruct(&c) == u;
        for (family, kind) in Family::ALL.into_iter().zip(DeltaKind::ALL) {
            let part = onsager_image(c.get(family), family.quad()).unwrap();
            ok &= delta_membership(part.normal_form(), kind);
        }
        failures += usize::from(!ok);
    }
    outcome(failures == 0, format!("{n} words, {failures} failures"))
}

fn independence() -> Outcome {
    let (rank, count) = omega_family_rank(8);
    outcome(rank == 75 && count == 75, format!("rank {rank} of {count} vectors"))
}

fn presentation() -> Outcome {
    let mut r = check_loop_presentation(12);
    r.extend(verify_dolan_grady_conjugates());
    outcome(r.all_passed(), r.summary())
}

fn diagrams() -> Outcome {
    let r = verify_diagrams();
    let chase = parse("1/2*X30 + 1/2*X13").unwrap().evaluate();
    let e0 = chevalley_generator(ChevalleyGen::E(0));
    let ok = chase.normal_form() == &e0 && chase.to_string() == "X[]; Y[-1/2*T]; Z[-1/2*T]";
    outcome(
        r.all_passed() && ok,
        format!("{}, e0 chase gives {chase}", r.summary()),
    )
}

fn s4() -> Outcome {
    let r = verify_s4_injection();
    let distinct = r.get("24 distinct maps out of 24").is_some_and(|c| c.passed);
    outcome(r.all_passed() && distinct, r.summary())
}

fn core_properties(rng: &mut StdRng) -> Outcome {
    let mut cases = 0;
    let mut failures = Vec::new();
    let mut check = |name: &str, ok: bool| {
        cases += 1;
        if !ok {
            failures.push(name.to_string());
        }
    };
    for _ in 0..100 {
        let (a, b, c) = (ring_elem(rng), ring_elem(rng), ring_elem(rng));
        check("associativity", &(&a * &b) * &c == &a * &(&b * &c));
        check("commutativity", &a * &b == &b * &a);
        check("distributivity", &a * &(&b + &c) == &(&a * &b) + &(&a * &c));
        check("prime order 3", a.prime().prime().prime() == a);
        let t = eval_point(rng);
        check(
            "evaluation homomorphism",
            (&a * &b).eval_at(&t).unwrap() == a.eval_at(&t).unwrap() * b.eval_at(&t).unwrap(),
        );
    }
    for _ in 0..60 {
        let (a, b, c) = (loop_elem(rng), loop_elem(rng), loop_elem(rng));
        let j = &(&loop_bracket(&a, &loop_bracket(&b, &c)) + &loop_bracket(&b, &loop_bracket(&c, &a)))
            + &loop_bracket(&c, &loop_bracket(&a, &b));
        check("Jacobi", j.is_zero());
    }
    let two_x = Polynomial::from_i64(&[0, 2]);
    for n in 0..=40 {
        let rhs = &(&two_x * &chebyshev_u(n).unwrap()) - &chebyshev_u(n - 1).unwrap();
        check("Chebyshev recurrence", chebyshev_u(n + 1).unwrap() == rhs);
    }
    let detail = if failures.is_empty() {
        format!("{cases} cases")
    } else {
        format!("{cases} cases, failed: {}", failures.join(", "))
    };
    outcome(failures.is_empty() && cases >= 500, detail)
}

fn parser(rng: &mut StdRng) -> Outcome {
    let n = 200;
    let mut failures = 0;
    for _ in 0..n {
        let ast = random_ast(rng, 6);
        failures += usize::from(parse(&ast.to_string()).ok() != Some(ast));
    }
    let mut errors_ok = 0;
    for (input, pos) in [("X11", 0), ("[X12 X03]", 5), ("perm(0012)(X01)", 6)] {
        let out = Command::new(env!("CARGO_BIN_EXE_tetra"))
            .args(["eval", input])
            .output()
            .expect("binary runs");
        let stderr = String::from_utf8_lossy(&out.stderr);
        errors_ok += usize::from(
            out.status.code() == Some(2) && stderr.contains(&format!("at position {pos}")),
        );
    }
    outcome(
        failures == 0 && errors_ok == 3,
        format!("{n} ASTs, {failures} round-trip failures; {errors_ok}/3 error cases"),
    )
}

fn main() -> ExitCode {
    let mut rng = StdRng::seed_from_u64(20061018);
    let criteria: Vec<(&str, Outcome)> = vec![
        ("relation suite", relations()),
        ("table reproduction", table()),
        ("bracket formulas for a'_0, a'_1", prime_brackets()),
        ("direct-sum round trip", round_trip(&mut rng)),
        ("basis independence", independence()),
        ("presentation suite", presentation()),
        ("diagram suite", diagrams()),
        ("S4 injection", s4()),
        ("core algebraic properties", core_properties(&mut rng)),
        ("parser round trip and errors", parser(&mut rng)),
    ];
    let mut all = true;
    for (n, (name, o)) in criteria.iter().enumerate() {
        println!(
            "{} {:>2} {name}: {}",
            if o.passed { "PASS" } else { "FAIL" },
            n + 1,
            o.detail
        );
        all &= o.passed;
    }
    if all {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
