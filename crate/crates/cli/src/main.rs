use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use tetrahedron::chebyshev::{chebyshev_shifted, chebyshev_u};
use tetrahedron::expr::{act, parse, ExprNode};
use tetrahedron::suites::Suite;
use tetrahedron::tetra::{omega_decompose, NamedAuto, OmegaCoords, Permutation};
use tetrahedron::ParseError;

/// Exact computation in the Tetrahedron algebra.
///
/// Expressions are sums of scaled terms built from generators `X01` ... `X32`,
/// brackets `[a, b]` and automorphisms `prime`, `omega`, `d`, `down`, `Down`,
/// `star` or `perm(abcd)`, where `perm(abcd)` sends 0,1,2,3 to a,b,c,d.
#[derive(Parser)]
#[command(name = "tetra", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the normal form of an expression.
    Eval {
        expr: String,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        #[arg(long, value_enum, default_value_t = Basis::Loop)]
        basis: Basis,
    },
    /// Print the coordinates of an expression in Omega + Omega' + Omega''.
    Decompose { expr: String },
    /// Print the Chebyshev polynomial U_N, or U_N(1-2T) with --shifted.
    Chebyshev {
        #[arg(allow_negative_numbers = true)]
        n: i64,
        #[arg(long)]
        shifted: bool,
    },
    /// Apply a permutation of {0,1,2,3} to the generators of an expression.
    Act {
        expr: String,
        /// Four image digits such as `0132`, `perm(0132)`, or a named
        /// automorphism.
        #[arg(long)]
        perm: String,
    },
    /// Run a verification suite.
    Verify {
        #[arg(long, default_value = "all", value_parser = parse_suite)]
        suite: Suite,
        #[arg(long, default_value_t = 12)]
        max_degree: u32,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum Basis {
    Loop,
    Omega,
}

fn parse_suite(s: &str) -> Result<Suite, String> {
    s.parse()
}

fn parse_perm(s: &str) -> Result<Permutation, String> {
    if let Some(a) = NamedAuto::from_name(s) {
        return Ok(a.permutation());
    }
    let digits = s
        .strip_prefix("perm(")
        .and_then(|r| r.strip_suffix(')'))
        .unwrap_or(s);
    let bytes = digits.as_bytes();
    if bytes.len() != 4 || !bytes.iter().all(|b| (b'0'..=b'3').contains(b)) {
        return Err(format!("`{s}` is not four digits from 0123"));
    }
    let images = [0, 1, 2, 3].map(|k| bytes[k] - b'0');
    Permutation::new(images).map_err(|_| format!("`{s}` repeats a digit"))
}

fn report_parse_error(input: &str, e: &ParseError) {
    eprintln!("error: {e}");
    eprintln!("  {input}");
    eprintln!("  {}^", " ".repeat(e.pos));
}

fn parse_or_report(input: &str) -> Result<ExprNode, ExitCode> {
    parse(input).map_err(|e| {
        report_parse_error(input, &e);
        ExitCode::from(2)
    })
}

fn omega_text(c: &OmegaCoords) -> String {
    format!(
        "Omega: {}\nOmega': {}\nOmega'': {}",
        c.omega, c.omega_p, c.omega_pp
    )
}

fn omega_json(c: &OmegaCoords) -> Value {
    json!({
        "Omega": c.omega.to_json(),
        "Omega'": c.omega_p.to_json(),
        "Omega''": c.omega_pp.to_json(),
    })
}

fn run(cli: Cli) -> Result<(), ExitCode> {
    match cli.command {
        Command::Eval {
            expr,
            format,
            basis,
        } => {
            let u = parse_or_report(&expr)?.evaluate();
            let out = match (basis, format) {
                (Basis::Loop, Format::Text) => u.to_string(),
                (Basis::Loop, Format::Json) => u.normal_form().to_json().to_string(),
                (Basis::Omega, Format::Text) => omega_text(&omega_decompose(&u)),
                (Basis::Omega, Format::Json) => omega_json(&omega_decompose(&u)).to_string(),
            };
            println!("{out}");
        }
        Command::Decompose { expr } => {
            let u = parse_or_report(&expr)?.evaluate();
            println!("{}", omega_text(&omega_decompose(&u)));
        }
        Command::Chebyshev { n, shifted } => {
            let out = if shifted {
                chebyshev_shifted(n).map(|p| p.to_string())
            } else {
                chebyshev_u(n).map(|p| p.to_string_in("x"))
            };
            match out {
                Ok(s) => println!("{s}"),
                Err(e) => {
                    eprintln!("error: {e}");
                    return Err(ExitCode::from(2));
                }
            }
        }
        Command::Act { expr, perm } => {
            let tau = parse_perm(&perm).map_err(|e| {
                eprintln!("error: {e}");
                ExitCode::from(2)
            })?;
            let ast = parse_or_report(&expr)?;
            println!("{}", act(&ast, &tau));
        }
        Command::Verify { suite, max_degree } => {
            let report = suite.run(max_degree);
            println!("{report}");
            if !report.all_passed() {
                return Err(ExitCode::from(1));
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(code) => code,
    }
}
