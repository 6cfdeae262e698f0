//! Named groups of verification checks, as run by `tetra verify`.

use std::fmt;
use std::str::FromStr;

use crate::loops::check_loop_presentation;
use crate::onsager::{check_dolan_grady, OnsagerElem};
use crate::report::Report;
use crate::tetra::checks::{
    verify_diagrams, verify_dolan_grady_conjugates, verify_lemma76, verify_onsager_homomorphism,
    verify_s4_injection, verify_table, verify_tetra_relations,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Suite {
    Relations,
    Table,
    Brackets,
    Diagrams,
    Presentation,
    S4,
    All,
}

impl Suite {
    pub const ALL: [Suite; 7] = [
        Suite::Relations,
        Suite::Table,
        Suite::Brackets,
        Suite::Diagrams,
        Suite::Presentation,
        Suite::S4,
        Suite::All,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Relations => "relations",
            Suite::Table => "table",
            Suite::Brackets => "brackets",
            Suite::Diagrams => "diagrams",
            Suite::Presentation => "presentation",
            Suite::S4 => "s4",
            Suite::All => "all",
        }
    }

    /// Runs the suite; `max_degree` bounds the index range of the table,
    /// bracket and presentation checks.
    pub fn run(self, max_degree: u32) -> Report {
        match self {
            Suite::Relations => verify_tetra_relations(),
            Suite::Table => verify_table(max_degree),
            Suite::Brackets => {
                let mut r = verify_lemma76(max_degree);
                r.record(
                    "Dolan-Grady for A_0, A_1 in O",
                    check_dolan_grady(&OnsagerElem::a(0), &OnsagerElem::a(1)),
                );
                r.extend(verify_onsager_homomorphism(5));
                r
            }
            Suite::Diagrams => verify_diagrams(),
            Suite::Presentation => {
                let mut r = check_loop_presentation(max_degree);
                r.extend(verify_dolan_grady_conjugates());
                r
            }
            Suite::S4 => verify_s4_injection(),
            Suite::All => {
                let mut r = Report::new();
                for s in &Suite::ALL[..6] {
                    r.extend(s.run(max_degree));
                }
                r
            }
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        Suite::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| format!("unknown suite `{s}`"))
    }
}
