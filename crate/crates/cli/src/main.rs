//! `connwidth`: command-line front end.
//!
//! Standard output carries JSON only (one document per line); diagnostics and
//! summaries go to standard error. Exit codes: 0 success/confirmed,
//! 1 violation/mismatch, 2 input or guard error, 3 precondition failed or
//! budget exceeded.

mod commands;
mod output;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use connwidth::corpus::Generator;
use connwidth::{IhVariant, Provenance};

#[derive(Parser, Debug)]
#[command(
    name = "connwidth",
    version,
    about = "Linear-width, single ideals and linear obstacles on connectivity systems"
)]
struct Cli {
    /// TOML file with guard overrides.
    #[arg(long, global = true, value_name = "PATH")]
    config: Option<PathBuf>,

    /// Guard override, `key=val` (repeatable; comma lists allowed).
    #[arg(long = "budget", global = true, value_name = "KEY=VAL")]
    budget: Vec<String>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check that an instance is symmetric submodular and satisfies the derived inequalities.
    Validate {
        instance: PathBuf,
        #[command(flatten)]
        out: OutArg,
    },
    /// Compute linear-width exactly.
    Width {
        instance: PathBuf,
        /// Also run the n! brute-force oracle and fail if it disagrees.
        #[arg(long)]
        oracle: bool,
        #[command(flatten)]
        out: OutArg,
    },
    /// Evaluate a family against both axiom systems.
    CheckFamily {
        instance: PathBuf,
        family: PathBuf,
        #[command(flatten)]
        k: KArgs,
        /// Also require the exactness axiom IE.
        #[arg(long)]
        ie: bool,
        #[command(flatten)]
        out: OutArg,
    },
    /// Sweep all families of k-efficient sets comparing ideals (+IE) with obstacles.
    Theorem1 {
        instance: PathBuf,
        #[command(flatten)]
        k: KArgs,
        /// Worker threads for the family sweep.
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        #[command(flatten)]
        out: OutArg,
    },
    /// Compare linear-width >= k+1 with existence of an ideal satisfying IE.
    Duality {
        instance: PathBuf,
        #[command(flatten)]
        k: KArgs,
        #[command(flatten)]
        out: OutArg,
    },
    /// Stream every family of k-efficient sets, one JSON object per line.
    Enumerate {
        instance: PathBuf,
        #[arg(long)]
        k: u32,
        #[command(flatten)]
        out: OutArg,
    },
    /// Generate instance files.
    Gen(GenArgs),
}

#[derive(Args, Debug)]
struct OutArg {
    /// Write JSON here instead of standard output.
    #[arg(long, value_name = "PATH")]
    out: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct KArgs {
    /// Order parameter; when omitted, every k from f(∅) to max f({e}) + 1.
    #[arg(long)]
    k: Option<u32>,
    #[arg(long, value_enum, default_value_t = VariantArg::Guarded)]
    variant: VariantArg,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum VariantArg {
    Literal,
    Guarded,
}

impl From<VariantArg> for IhVariant {
    fn from(v: VariantArg) -> Self {
        match v {
            VariantArg::Literal => IhVariant::Literal,
            VariantArg::Guarded => IhVariant::Guarded,
        }
    }
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum GeneratorArg {
    Path,
    Cycle,
    Complete,
    Star,
    Random,
}

impl From<GeneratorArg> for Generator {
    fn from(g: GeneratorArg) -> Self {
        match g {
            GeneratorArg::Path => Generator::Path,
            GeneratorArg::Cycle => Generator::Cycle,
            GeneratorArg::Complete => Generator::Complete,
            GeneratorArg::Star => Generator::Star,
            GeneratorArg::Random => Generator::Random,
        }
    }
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum KindArg {
    GraphCut,
    GraphBoundary,
}

impl From<KindArg> for Provenance {
    fn from(k: KindArg) -> Self {
        match k {
            KindArg::GraphCut => Provenance::GraphCut,
            KindArg::GraphBoundary => Provenance::GraphBoundary,
        }
    }
}

#[derive(Args, Debug)]
struct GenArgs {
    #[arg(long, value_enum)]
    generator: GeneratorArg,
    /// Number of vertices.
    #[arg(long)]
    n: usize,
    /// Edge probability for `random`.
    #[arg(long, default_value_t = 0.5)]
    p: f64,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Emit this many instances with consecutive seeds.
    #[arg(long, default_value_t = 1)]
    count: u64,
    #[arg(long, value_enum, default_value_t = KindArg::GraphCut)]
    kind: KindArg,
    /// Output directory.
    #[arg(long, value_name = "DIR")]
    out: PathBuf,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match commands::run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(commands::EXIT_INPUT)
        }
    }
}
