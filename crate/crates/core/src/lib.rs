//! Exact computation in the Tetrahedron algebra `⊠` through its isomorphism
//! with the three-point `sl2` loop algebra.
//!
//! ```
//! use tetrahedron::expr::parse;
//!
//! let u = parse("[X23, X30]").unwrap().evaluate();
//! assert_eq!(u.to_string(), "X[]; Y[2 - 2*T]; Z[2 - 2*T]");
//! ```

pub mod chebyshev;
pub mod error;
pub mod expr;
pub mod linalg;
pub mod loops;
pub mod onsager;
pub mod poly;
pub mod rational;
pub mod report;
pub mod ring;
pub mod sl2;
pub mod suites;
pub mod tetra;

pub use error::{Error, ParseError, Result};
pub use loops::LoopElem;
pub use onsager::OnsagerElem;
pub use poly::Polynomial;
pub use rational::Rational;
pub use report::Report;
pub use ring::RingElem;
pub use sl2::Sl2Elem;
pub use tetra::{GeneratorId, Permutation, TetraElem};

#[cfg(doctest)]
mod book {
    macro_rules! chapter {
        ($name:ident, $file:literal) => {
            #[doc = include_str!(concat!("../../../book/src/", $file))]
            mod $name {}
        };
    }

    chapter!(introduction, "introduction.md");
    chapter!(coefficient_ring, "coefficient-ring.md");
    chapter!(chebyshev, "chebyshev.md");
    chapter!(loop_algebras, "loop-algebras.md");
    chapter!(onsager, "onsager.md");
    chapter!(tetrahedron, "tetrahedron.md");
    chapter!(decomposition, "decomposition.md");
    chapter!(expressions, "expressions.md");
    chapter!(verification, "verification.md");
    chapter!(cli, "cli.md");
}
