//! Expressions in the generators `X_ij`: sums, brackets and automorphisms.
//!
//! ```text
//! expr      := ["-"] term { ("+" | "-") term }
//! term      := [ rational "*" ] factor
//! factor    := generator | "[" expr "," expr "]" | auto "(" expr ")" | "(" expr ")"
//! generator := "X" digit digit          (distinct digits from 0123)
//! auto      := "prime" | "omega" | "d" | "down" | "Down" | "star"
//!            | "perm" "(" digit digit digit digit ")"
//! rational  := integer [ "/" positive-integer ]
//! ```
//!
//! `perm(abcd)` is the permutation sending `0, 1, 2, 3` to `a, b, c, d`.

mod parser;

pub use parser::parse;

use std::fmt;

use num_traits::One;

use crate::rational::{format_rational, Rational};
use crate::tetra::{generator_image, tetra_bracket, GeneratorId, NamedAuto, Permutation, TetraElem};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum AutoName {
    Named(NamedAuto),
    Perm(Permutation),
}

impl AutoName {
    pub fn permutation(&self) -> Permutation {
        match self {
            AutoName::Named(a) => a.permutation(),
            AutoName::Perm(p) => *p,
        }
    }
}

impl fmt::Display for AutoName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AutoName::Named(a) => f.write_str(a.name()),
            AutoName::Perm(p) => p.fmt(f),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum ExprNode {
    Generator(GeneratorId),
    Bracket(Box<ExprNode>, Box<ExprNode>),
    /// Nonempty list of scaled terms, in the order written.
    Sum(Vec<(Rational, ExprNode)>),
    Auto(AutoName, Box<ExprNode>),
}

impl ExprNode {
    pub fn bracket(a: ExprNode, b: ExprNode) -> Self {
        ExprNode::Bracket(Box::new(a), Box::new(b))
    }

    pub fn auto(name: AutoName, e: ExprNode) -> Self {
        ExprNode::Auto(name, Box::new(e))
    }

    pub fn evaluate(&self) -> TetraElem {
        evaluate(self)
    }

    /// Nesting depth; generators have depth 0.
    pub fn depth(&self) -> usize {
        match self {
            ExprNode::Generator(_) => 0,
            ExprNode::Bracket(a, b) => 1 + a.depth().max(b.depth()),
            ExprNode::Sum(terms) => 1 + terms.iter().map(|(_, e)| e.depth()).max().unwrap_or(0),
            ExprNode::Auto(_, e) => 1 + e.depth(),
        }
    }
}

pub fn evaluate(ast: &ExprNode) -> TetraElem {
    act(ast, &Permutation::IDENTITY)
}

/// Evaluates `ast` with every generator `X_ij` replaced by
/// `X_{τ(i) τ(j)}`. An automorphism node composes with `tau` so that the
/// inner permutation is applied first.
pub fn act(ast: &ExprNode, tau: &Permutation) -> TetraElem {
    match ast {
        ExprNode::Generator(g) => generator_image(g.permuted(tau)),
        ExprNode::Bracket(a, b) => tetra_bracket(&act(a, tau), &act(b, tau)),
        ExprNode::Sum(terms) => terms
            .iter()
            .map(|(c, e)| act(e, tau).scale(c))
            .sum(),
        ExprNode::Auto(name, e) => act(e, &name.permutation().then(tau)),
    }
}

fn write_factor(f: &mut fmt::Formatter<'_>, e: &ExprNode) -> fmt::Result {
    match e {
        ExprNode::Sum(_) => write!(f, "({e})"),
        _ => write!(f, "{e}"),
    }
}

/// Prints in the input grammar so that `parse` returns an equal tree.
impl fmt::Display for ExprNode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExprNode::Generator(g) => g.fmt(f),
            ExprNode::Bracket(a, b) => write!(f, "[{a}, {b}]"),
            ExprNode::Auto(name, e) => write!(f, "{name}({e})"),
            ExprNode::Sum(terms) => {
                let single = terms.len() == 1;
                for (n, (c, e)) in terms.iter().enumerate() {
                    let negative = *c < Rational::from_integer(0.into());
                    let abs = if negative { -c } else { c.clone() };
                    if n == 0 {
                        if negative {
                            f.write_str("-")?;
                        }
                    } else {
                        f.write_str(if negative { " - " } else { " + " })?;
                    }
                    // A lone `+1` coefficient is written out so that the term
                    // still parses as a sum.
                    if !abs.is_one() || (single && !negative) {
                        write!(f, "{}*", format_rational(&abs))?;
                    }
                    write_factor(f, e)?;
                }
                Ok(())
            }
        }
    }
}
