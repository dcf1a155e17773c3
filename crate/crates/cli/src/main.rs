//! `polyadica` command-line front-end.
//!
//! Reads JSON from `--in` or stdin and writes one JSON document to stdout.
//! Exit status: 0 on success, 1 for domain errors, 2 for malformed input.

mod commands;
mod ops;

use std::io::{Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, CommandFactory, FromArgMatches, Parser, Subcommand, ValueEnum};
use polyadica::numeric::Mode;
use polyadica::Error;
use serde_json::{json, Value};

#[derive(Debug, Parser)]
#[command(name = "polyadica", version, about = "Polyadic hypercomplex algebra toolkit")]
pub struct Cli {
    /// Scalar field: exact rationals or tolerance-compared doubles.
    #[arg(long, global = true, env = "POLYADICA_MODE", default_value = "rational")]
    pub mode: Mode,

    /// Input JSON file; stdin when omitted.
    #[arg(long = "in", global = true, value_name = "PATH")]
    pub input: Option<PathBuf>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Multiply factors: n-ary Z-matrix product, or a binary product with --arity 2.
    Mul(MulArgs),
    /// Querelement of a Z-matrix, or inverse/conjugate with --arity 2.
    Quer(QuerArgs),
    /// Squared polyadic norm (or the norm of the querelement with --quer).
    Norm(NormArgs),
    /// Polyadic power of a Z-matrix.
    Power(PowerArgs),
    /// Polyadic unit, idempotent, nilpotent and neutral-polyad checks.
    IdentityCheck(IdentityArgs),
    /// Block-monomial shape of a polyadic Cayley-Dickson tower.
    TowerShape(TowerArgs),
    /// (m+1)-ary vector product, or its structure constants.
    Vecmul(VecmulArgs),
    /// Quervector of a vector.
    Quervec,
    /// Ternary imaginary algebras.
    Imaginary(ImaginaryArgs),
    /// Seeded property suites.
    Props(PropsArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Oracle {
    Cyclic,
    Dense,
}

#[derive(Debug, Args)]
pub struct MulArgs {
    /// Coefficient algebra: R, dual, C, H or O.
    #[arg(long, default_value = "R")]
    pub algebra: String,
    /// Arity; read from the first factor's "arity" field when omitted.
    #[arg(long)]
    pub arity: Option<usize>,
    /// `dense` multiplies the full matrices instead of using the cyclic formula.
    #[arg(long, value_enum, default_value = "cyclic")]
    pub oracle: Oracle,
    /// With --arity 2, add instead of multiplying.
    #[arg(long)]
    pub sum: bool,
}

#[derive(Debug, Args)]
pub struct QuerArgs {
    #[arg(long, default_value = "R")]
    pub algebra: String,
    #[arg(long)]
    pub arity: Option<usize>,
    /// With --arity 2, return the conjugate instead of the inverse.
    #[arg(long)]
    pub conj: bool,
}

#[derive(Debug, Args)]
pub struct NormArgs {
    #[arg(long, default_value = "R")]
    pub algebra: String,
    #[arg(long)]
    pub arity: Option<usize>,
    /// Closed-form norm of the querelement.
    #[arg(long)]
    pub quer: bool,
}

#[derive(Debug, Args)]
pub struct PowerArgs {
    #[arg(long, default_value = "R")]
    pub algebra: String,
    #[arg(long, default_value_t = 1)]
    pub ell: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum IdentityKind {
    Unit,
    Idempotent,
    Nilpotent,
    Neutral,
}

#[derive(Debug, Args)]
pub struct IdentityArgs {
    #[arg(long, value_enum)]
    pub kind: IdentityKind,
    #[arg(long, default_value = "R")]
    pub algebra: String,
    /// Needed for --kind unit; read from the input otherwise.
    #[arg(long)]
    pub arity: Option<usize>,
    #[arg(long, default_value_t = 1)]
    pub ell: usize,
}

#[derive(Debug, Args)]
pub struct TowerArgs {
    /// Stage arities, innermost first, e.g. 5,3,4.
    #[arg(long, value_delimiter = ',', required = true)]
    pub arities: Vec<usize>,
    /// Explicit chain factors; checked against the arities.
    #[arg(long, value_delimiter = ',')]
    pub kappas: Option<Vec<usize>>,
    /// Fail when the arity chain is not integral.
    #[arg(long)]
    pub strict: bool,
    /// Include a text rendering of the shape.
    #[arg(long)]
    pub render: bool,
}

#[derive(Debug, Args)]
pub struct VecmulArgs {
    /// Multiply through shift matrices and read the result back.
    #[arg(long)]
    pub via_matrix: bool,
    /// Print the structure constants for --dim instead of multiplying.
    #[arg(long)]
    pub structure_constants: bool,
    #[arg(long)]
    pub dim: Option<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ImaginaryOp {
    Mul,
    Quer,
    Norm,
    TwoSquares,
    Nestings,
    Unit,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
#[value(rename_all = "snake_case")]
pub enum ImaginaryKind {
    ImaginaryComplex,
    HalfQuaternion,
    HalfOctonion,
}

#[derive(Debug, Args)]
pub struct ImaginaryArgs {
    #[arg(value_enum)]
    pub op: ImaginaryOp,
    /// Defaults to the "kind" field of the input.
    #[arg(long, value_enum)]
    pub kind: Option<ImaginaryKind>,
    /// Use the closed component formula for mul.
    #[arg(long)]
    pub components: bool,
    /// Grid half-width for the unit search.
    #[arg(long, default_value_t = 2)]
    pub grid: i64,
}

#[derive(Debug, Args)]
pub struct PropsArgs {
    #[arg(long, required_unless_present = "list")]
    pub suite: Option<String>,
    #[arg(long, default_value_t = polyadica::props::DEFAULT_CASES)]
    pub cases: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// List suite names and exit.
    #[arg(long)]
    pub list: bool,
}

/// Lazily read input document.
pub struct Input {
    path: Option<PathBuf>,
}

impl Input {
    pub fn read(&self) -> polyadica::Result<Value> {
        let text = match &self.path {
            Some(p) => std::fs::read_to_string(p).map_err(|e| Error::Malformed(format!("{}: {e}", p.display())))?,
            None => {
                let mut s = String::new();
                std::io::stdin().read_to_string(&mut s).map_err(|e| Error::Malformed(e.to_string()))?;
                s
            }
        };
        serde_json::from_str(&text).map_err(|e| Error::Malformed(format!("invalid JSON: {e}")))
    }
}

/// Result of a run: the document to print and the exit status.
pub struct Outcome {
    pub doc: Value,
    pub code: u8,
}

fn error_doc(e: &Error) -> Outcome {
    Outcome { doc: json!({ "error": e.code(), "detail": e.to_string() }), code: if e.is_malformed() { 2 } else { 1 } }
}

fn main() -> ExitCode {
    let matches = Cli::command().after_long_help(ops::help_table()).get_matches();
    let cli = Cli::from_arg_matches(&matches).unwrap_or_else(|e| e.exit());
    let input = Input { path: cli.input.clone() };
    let outcome = match commands::run(&cli, &input) {
        Ok(outcome) => outcome,
        Err(e) => error_doc(&e),
    };
    // A closed pipe is not an error worth reporting.
    let _ = writeln!(std::io::stdout().lock(), "{}", outcome.doc);
    ExitCode::from(outcome.code)
}
