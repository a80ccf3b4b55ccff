//! `schurweyl` command line tool.

mod cache;
mod objects;
mod table;
mod verbs;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

#[derive(Parser, Debug)]
#[command(name = "schurweyl", version, about = "Strict polynomial functors, Schur algebras and their highest weight structure")]
pub struct Cli {
    #[command(subcommand)]
    pub verb: Verb,
    #[command(flatten)]
    pub params: Params,
}

#[derive(Subcommand, Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verb {
    /// List the partitions of d (at most n parts when --n is given).
    Partitions,
    /// Kostka number K(lambda, mu).
    Kostka,
    /// Dimension of the Schur algebra S(n, d).
    SchurDim,
    /// Rank of Hom(source, target).
    Hom,
    /// Ext^1(source, target).
    Ext,
    /// The Weyl module W_lambda(k^n) and its tableau basis.
    Weyl,
    /// The standard object Delta(lambda).
    Delta,
    /// The costandard object Nabla(lambda).
    Nabla,
    /// The simple head L(lambda) over a field.
    Simple,
    /// The Cauchy filtration of Gamma^d(k^n ⊗ k^m), or of Gamma^mu with --mu.
    Cauchy,
    /// Highest weight certificate for S(n, d).
    VerifyHwc,
    /// The characteristic tilting object ⊕ Lambda^lambda.
    Tilting,
    /// Ringel self-duality check End(⊕Gamma^lambda) ≅ End(⊕Lambda^lambda).
    Ringel,
}

#[derive(clap::Args, Debug, Clone, Default)]
pub struct Params {
    #[arg(long, global = true)]
    pub n: Option<usize>,
    #[arg(long, global = true)]
    pub d: Option<usize>,
    /// Second rank for `cauchy` (defaults to n).
    #[arg(long, global = true)]
    pub m: Option<usize>,
    /// Z, Q or Fp:<prime>.
    #[arg(long, global = true, default_value = "Q")]
    pub ring: String,
    #[arg(long, global = true)]
    pub lambda: Option<String>,
    #[arg(long, global = true)]
    pub mu: Option<String>,
    /// Source object for hom/ext, as kind:parts (gamma, sym, ext, tensor, delta, nabla, weyl, schur, simple).
    #[arg(long, global = true)]
    pub source: Option<String>,
    /// Target object for hom/ext, as kind:parts.
    #[arg(long, global = true)]
    pub target: Option<String>,
    #[arg(long, global = true, conflicts_with = "text")]
    pub json: bool,
    #[arg(long, global = true)]
    pub text: bool,
    #[arg(long, global = true)]
    pub cache_dir: Option<PathBuf>,
    /// Worker threads for independent sub-checks.
    #[arg(long, global = true)]
    pub jobs: Option<usize>,
}

#[derive(Debug)]
pub enum Failure {
    Usage(String),
    Compute(String),
}

impl From<schurweyl::Error> for Failure {
    fn from(e: schurweyl::Error) -> Self {
        match e {
            schurweyl::Error::Parse(_) => Failure::Usage(e.to_string()),
            _ => Failure::Compute(e.to_string()),
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(j) = cli.params.jobs {
        if j == 0 {
            eprintln!("error: --jobs must be positive");
            return ExitCode::from(2);
        }
        rayon::ThreadPoolBuilder::new().num_threads(j).build_global().ok();
    }
    match verbs::run(cli.verb, &cli.params) {
        Ok(out) => {
            if cli.params.json {
                println!("{}", serde_json::to_string_pretty(&out.json).expect("json output"));
            } else {
                println!("{}", out.text);
            }
            if out.ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("usage error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Compute(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}
