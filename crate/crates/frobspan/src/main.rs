//! Command-line pipeline: parse -> compile -> normalize -> compare,
//! evaluate, or export.
//!
//! Exit codes: 0 success (or "equal"), 1 not equal, 2 any error.

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use frobspan::axioms::run_axiom_suite;
use frobspan::cospan::Semantics;
use frobspan::dot::to_dot;
use frobspan::normal::{normalize, NormalCospan};
use frobspan::termlang::{parse, FrobTerm};
use frobspan::tqft::{builtin, eval_normal_cospan, parse_algebra, FrobeniusAlgebra};

#[derive(Parser)]
#[command(
    name = "frobspan",
    about = "Compose cospans of finite sets with graph apexes, normalize them to 2-cobordism classification data, and evaluate them in commutative Frobenius algebras"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the canonical normal form of a term file.
    Normalize {
        term_file: PathBuf,
        /// Compose by strict set pushout instead of homotopy pushout.
        #[arg(long)]
        strict: bool,
    },
    /// Compare two term files up to normal form (exit 0 equal, 1 not).
    Eq {
        term_file_a: PathBuf,
        term_file_b: PathBuf,
        #[arg(long)]
        strict: bool,
    },
    /// Evaluate a term in a Frobenius algebra; prints the matrix row-major.
    Eval {
        term_file: PathBuf,
        /// Algebra definition file, or a built-in name (rationals,
        /// dual_numbers, split, truncated_cubic).
        #[arg(long)]
        algebra: String,
        #[arg(long)]
        strict: bool,
        /// Refuse terms whose domain or codomain exceeds this bound.
        #[arg(long, default_value_t = 8)]
        max_arity: usize,
    },
    /// Export the compiled apex as Graphviz DOT.
    Dot {
        term_file: PathBuf,
        #[arg(long)]
        strict: bool,
        /// Apply the mapping-cylinder replacement before exporting.
        #[arg(long)]
        cylinder: bool,
    },
    /// Run the Frobenius axiom suite and report PASS/FAIL per axiom.
    CheckAxioms {
        #[arg(long)]
        strict: bool,
        /// Seed for the random identity-whiskered instantiations.
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Number of whiskered instantiations per axiom.
        #[arg(long, default_value_t = 100)]
        whiskers: usize,
    },
}

fn semantics(strict: bool) -> Semantics {
    if strict {
        Semantics::Strict
    } else {
        Semantics::Homotopy
    }
}

fn load_term(path: &Path) -> Result<FrobTerm, String> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| format!("{}: {}", path.display(), e))?;
    let term = parse(&text).map_err(|e| format!("{}: {}", path.display(), e))?;
    term.infer_arity()
        .map_err(|e| format!("{}: {}", path.display(), e))?;
    Ok(term)
}

fn load_normal(path: &Path, sem: Semantics) -> Result<NormalCospan, String> {
    let term = load_term(path)?;
    let cospan = term
        .compile(sem)
        .map_err(|e| format!("{}: {}", path.display(), e))?;
    Ok(normalize(&cospan))
}

fn load_algebra(spec: &str) -> Result<FrobeniusAlgebra, String> {
    let path = Path::new(spec);
    if path.is_file() {
        let text = std::fs::read_to_string(path).map_err(|e| format!("{}: {}", spec, e))?;
        let data = parse_algebra(&text).map_err(|e| format!("{}: {}", spec, e))?;
        FrobeniusAlgebra::from_data(data).map_err(|e| format!("{}: {}", spec, e))
    } else if let Some(a) = builtin::by_name(spec) {
        Ok(a)
    } else {
        Err(format!(
            "algebra '{}' is neither a readable file nor one of the built-ins ({})",
            spec,
            builtin::NAMES.join(", ")
        ))
    }
}

fn run(cli: Cli) -> Result<ExitCode, String> {
    match cli.command {
        Command::Normalize { term_file, strict } => {
            let normal = load_normal(&term_file, semantics(strict))?;
            print!("{}", normal);
            Ok(ExitCode::SUCCESS)
        }
        Command::Eq {
            term_file_a,
            term_file_b,
            strict,
        } => {
            let sem = semantics(strict);
            let a = load_normal(&term_file_a, sem)?;
            let b = load_normal(&term_file_b, sem)?;
            if a == b {
                println!("equal");
                Ok(ExitCode::SUCCESS)
            } else {
                println!("not equal");
                Ok(ExitCode::from(1))
            }
        }
        Command::Eval {
            term_file,
            algebra,
            strict,
            max_arity,
        } => {
            if max_arity == 0 {
                return Err("--max-arity must be at least 1".to_string());
            }
            let term = load_term(&term_file)?;
            let arity = term.infer_arity().expect("checked by load_term");
            if arity.dom > max_arity || arity.cod > max_arity {
                return Err(format!(
                    "term arity ({} -> {}) exceeds the bound {} (raise --max-arity)",
                    arity.dom, arity.cod, max_arity
                ));
            }
            let algebra = load_algebra(&algebra)?;
            let cospan = term
                .compile(semantics(strict))
                .map_err(|e| format!("{}: {}", term_file.display(), e))?;
            let matrix = eval_normal_cospan(&normalize(&cospan), &algebra);
            print!("{}", matrix.to_text());
            Ok(ExitCode::SUCCESS)
        }
        Command::Dot {
            term_file,
            strict,
            cylinder,
        } => {
            let term = load_term(&term_file)?;
            let mut cospan = term
                .compile(semantics(strict))
                .map_err(|e| format!("{}: {}", term_file.display(), e))?;
            if cylinder {
                cospan = cospan.mapping_cylinder();
            }
            print!("{}", to_dot(&cospan));
            Ok(ExitCode::SUCCESS)
        }
        Command::CheckAxioms {
            strict,
            seed,
            whiskers,
        } => {
            let report = run_axiom_suite(semantics(strict), seed, whiskers);
            print!("{}", report.render());
            if report.as_expected {
                Ok(ExitCode::SUCCESS)
            } else {
                Ok(ExitCode::from(1))
            }
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(message) => {
            eprintln!("error: {}", message);
            ExitCode::from(2)
        }
    }
}
