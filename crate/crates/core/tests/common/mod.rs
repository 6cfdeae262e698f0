#![allow(dead_code)]

use proptest::prelude::*;

use tetrahedron::expr::{AutoName, ExprNode};
use tetrahedron::onsager::{OnsagerBasis, OnsagerElem};
use tetrahedron::rational::{frac, Rational};
use tetrahedron::ring::{Atom, RingElem};
use tetrahedron::tetra::{GeneratorId, NamedAuto, Permutation};
use tetrahedron::{LoopElem, Sl2Elem};

pub fn small_rational() -> impl Strategy<Value = Rational> {
    (-6i64..=6, 1i64..=4).prop_map(|(n, d)| frac(n, d))
}

pub fn nonzero_rational() -> impl Strategy<Value = Rational> {
    small_rational().prop_filter("nonzero", |r| *r != frac(0, 1))
}

fn atom() -> impl Strategy<Value = Atom> {
    prop_oneof![Just(Atom::T), Just(Atom::U), Just(Atom::V)]
}

pub fn ring_elem() -> impl Strategy<Value = RingElem> {
    (
        small_rational(),
        prop::collection::vec((atom(), 1u32..=4, small_rational()), 0..=4),
    )
        .prop_map(|(c, terms)| {
            terms
                .into_iter()
                .fold(RingElem::constant(c), |acc, (a, i, c)| {
                    &acc + &RingElem::term(c, a, i)
                })
        })
}

/// Sample points avoiding the poles at 0 and 1.
pub fn eval_point() -> impl Strategy<Value = Rational> {
    prop_oneof![(2i64..=9, 1i64..=5), (-9i64..=-1, 1i64..=5)]
        .prop_map(|(n, d)| frac(n, d))
        .prop_filter("away from poles", |t| *t != frac(0, 1) && *t != frac(1, 1))
}

pub fn sl2_elem() -> impl Strategy<Value = Sl2Elem> {
    (small_rational(), small_rational(), small_rational())
        .prop_map(|(x, y, z)| Sl2Elem::new(x, y, z))
}

pub fn loop_elem() -> impl Strategy<Value = LoopElem> {
    (ring_elem(), ring_elem(), ring_elem()).prop_map(|(x, y, z)| LoopElem::new(x, y, z))
}

pub fn onsager_basis() -> impl Strategy<Value = OnsagerBasis> {
    prop_oneof![
        (-5i64..=5).prop_map(OnsagerBasis::A),
        (1u64..=5).prop_map(OnsagerBasis::G),
    ]
}

pub fn onsager_elem() -> impl Strategy<Value = OnsagerElem> {
    prop::collection::vec((onsager_basis(), small_rational()), 0..=4).prop_map(|terms| {
        let mut out = OnsagerElem::zero();
        for (b, c) in terms {
            out.add_term(b, c);
        }
        out
    })
}

pub fn generator() -> impl Strategy<Value = GeneratorId> {
    (0usize..12).prop_map(|k| GeneratorId::all()[k])
}

pub fn permutation() -> impl Strategy<Value = Permutation> {
    (0usize..24).prop_map(|k| Permutation::all()[k])
}

fn auto_name() -> impl Strategy<Value = AutoName> {
    prop_oneof![
        (0usize..6).prop_map(|k| AutoName::Named(NamedAuto::ALL[k])),
        permutation().prop_map(AutoName::Perm),
    ]
}

/// Bracket words of depth at most `depth`.
pub fn bracket_word(depth: u32) -> impl Strategy<Value = ExprNode> {
    generator()
        .prop_map(ExprNode::Generator)
        .prop_recursive(depth, 64, 2, |inner| {
            (inner.clone(), inner).prop_map(|(a, b)| ExprNode::bracket(a, b))
        })
}

/// Arbitrary expressions of depth at most `depth`.
pub fn expr_node(depth: u32) -> impl Strategy<Value = ExprNode> {
    generator()
        .prop_map(ExprNode::Generator)
        .prop_recursive(depth, 48, 3, |inner| {
            prop_oneof![
                (inner.clone(), inner.clone()).prop_map(|(a, b)| ExprNode::bracket(a, b)),
                prop::collection::vec((small_rational(), inner.clone()), 1..=3)
                    .prop_map(ExprNode::Sum),
                (auto_name(), inner).prop_map(|(n, e)| ExprNode::auto(n, e)),
            ]
        })
}
