mod commands;
mod corpus_run;
mod output;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use lexcoh::rng::DEFAULT_SEED;
use lexcoh::Error;

use output::Format;

/// Exit status for a computed verdict of false.
pub const EXIT_FALSE: u8 = 2;
/// Exit status for unreadable or out-of-range input.
pub const EXIT_INPUT: u8 = 3;
/// Exit status when independent gin trials disagree.
pub const EXIT_GIN: u8 = 4;

#[derive(Parser, Debug)]
#[command(name = "lexcoh", version, about = "Lex-ideals, generic initial ideals and local cohomology of graded ideals")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Output format.
    #[arg(long, global = true, value_enum, default_value = "text")]
    pub format: Format,
    /// Write output to this file instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// Master seed for random changes of coordinates.
    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    pub seed: u64,
    /// Independent gin trials that must agree.
    #[arg(long, global = true, default_value_t = 2)]
    pub trials: usize,
    /// Compute generic initial ideals over the rationals.
    #[arg(long, global = true)]
    pub rational: bool,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Hilbert series, polynomial and values of R/I.
    Hilbert {
        file: PathBuf,
        /// Degrees to tabulate, as lo:hi.
        #[arg(long, default_value = "0:10", allow_hyphen_values = true)]
        degrees: String,
    },
    /// The lex-ideal with the Hilbert function of I.
    Lex { file: PathBuf },
    /// The saturation I : m^∞.
    Sat { file: PathBuf },
    /// The degrevlex generic initial ideal.
    Gin { file: PathBuf },
    /// The Björner–Wachs polynomial of R/I (monomial I).
    Bw { file: PathBuf },
    /// Hilbert functions of the local cohomology modules of R/I.
    Localcoh {
        file: PathBuf,
        #[arg(long, value_enum, default_value = "ext")]
        method: Method,
        /// Degree window lo:hi; defaults to one covering all generator data.
        #[arg(long, allow_hyphen_values = true)]
        window: Option<String>,
    },
    /// Whether R/I is sequentially Cohen–Macaulay.
    Scm { file: PathBuf },
    /// Whether R/I is i-sequentially Cohen–Macaulay.
    Pscm {
        file: PathBuf,
        #[arg(long)]
        i: usize,
    },
    /// Run a checker; exit 2 when its conditions disagree.
    Check {
        #[arg(value_enum)]
        checker: Checker,
        file: PathBuf,
        /// Level for `levels` and `ws-levels`.
        #[arg(long)]
        i: Option<usize>,
    },
    /// Random corpora.
    Corpus {
        #[command(subcommand)]
        action: CorpusAction,
    },
}

#[derive(Subcommand, Debug)]
pub enum CorpusAction {
    /// Run checkers over a corpus described by a TOML file; JSON lines out.
    Run { spec: PathBuf },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum Method {
    Layers,
    Ext,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Checker {
    SatRigidity,
    Bw,
    Levels,
    WsLevels,
    Rows,
    SingleRow,
    Cancel,
    Serre,
}

/// Failure of a command, carrying its exit status.
#[derive(Debug)]
pub struct Failure {
    pub code: u8,
    pub message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::GinCertification(_) => EXIT_GIN,
            Error::Internal(_) | Error::Infeasible(_) => 1,
            _ => EXIT_INPUT,
        };
        Failure { code, message: e.to_string() }
    }
}

impl Failure {
    pub fn input(message: impl Into<String>) -> Self {
        Failure { code: EXIT_INPUT, message: message.into() }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match commands::run(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("lexcoh: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
