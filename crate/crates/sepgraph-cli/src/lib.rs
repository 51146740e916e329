//! Command-line front end for separated graphs: level construction,
//! hereditary saturated sets, quotients, Grothendieck groups, balls,
//! subshift representations, classification, primeness, binary subshifts,
//! DOT export and the acceptance reproduction harness.

mod commands;
mod error;
mod export;
mod input;
pub mod repro;

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use sepgraph_classify::DEFAULT_BOUND;
use sepgraph_hereditary::DEFAULT_LATTICE_CAP;

pub use error::CliError;
pub use export::{document, graph_json, graph_summary, render_json, to_dot, SCHEMA_VERSION};
pub use input::{load_graph, SubshiftSpec};

/// Exit code for a successful command.
pub const EXIT_OK: i32 = 0;
/// Exit code for a domain error: unreadable input, violated preconditions, failed checks.
pub const EXIT_DOMAIN: i32 = 1;
/// Exit code for malformed command lines.
pub const EXIT_USAGE: i32 = 2;

/// Output format of commands that produce a graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum GraphFormat {
    Sgf,
    Json,
    Dot,
}

/// Graph inputs are SGF file paths, `-` for standard input, or `corpus:NAME`
/// for a built-in example graph.
#[derive(Debug, Parser)]
#[command(name = "sepgraph", version, about = "Finite bipartite separated graphs and their Bratteli diagrams")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Parse a graph and print a summary, or fail with a diagnostic.
    Validate { input: String },
    /// The level `(E_n, C^n)` of the Bratteli diagram.
    Level {
        #[arg(short = 'n')]
        n: usize,
        input: String,
        #[arg(long, value_enum, default_value = "sgf")]
        format: GraphFormat,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Layer sizes of levels `0..=n`; with `-o DIR` also writes every level
    /// and the naming maps.
    Tower {
        #[arg(short = 'n')]
        n: usize,
        input: String,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// The lattice of hereditary saturated sets of level `n`.
    Hsets {
        input: String,
        #[arg(short = 'n', default_value_t = 0)]
        n: usize,
        #[arg(long, default_value_t = DEFAULT_LATTICE_CAP)]
        cap: usize,
    },
    /// The hereditary saturated closure of a comma-separated vertex set of level `n`.
    Closure {
        input: String,
        #[arg(short = 'n', default_value_t = 0)]
        n: usize,
        #[arg(long)]
        set: String,
    },
    /// The quotient of level `n` by a hereditary saturated vertex set.
    Quotient {
        input: String,
        #[arg(short = 'n', default_value_t = 0)]
        n: usize,
        #[arg(long)]
        set: String,
        #[arg(long, value_enum, default_value = "sgf")]
        format: GraphFormat,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// The Grothendieck group of the graph monoid of `F_n`.
    K0 {
        input: String,
        #[arg(short = 'n', default_value_t = 0)]
        n: usize,
    },
    /// All `n`-balls of the configuration space, one per vertex of level `n`.
    Balls {
        input: String,
        #[arg(short = 'n')]
        n: usize,
    },
    /// The allowed balls of a finite-type subshift and their recoding alphabet.
    Recode {
        /// JSON file with `alphabet`, `radius`, `forbidden` and optional `n`.
        spec: String,
        #[arg(short = 'n')]
        n: Option<usize>,
    },
    /// The separated graph representing a finite-type subshift.
    Represent {
        /// JSON file with `alphabet`, `radius` and `forbidden`.
        spec: String,
        #[arg(long, value_enum, default_value = "sgf")]
        format: GraphFormat,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Simplicity classification over levels `0..=bound`.
    Classify {
        input: String,
        #[arg(long, default_value_t = DEFAULT_BOUND)]
        bound: usize,
    },
    /// Dead ends, the Cantor criterion and isolated-point witnesses.
    Cantor { input: String },
    /// Primeness through maximal unlinkable pairs.
    Prime { input: String },
    /// The hereditary saturated set of a binary subshift given by forbidden words.
    Fromwords {
        /// Comma-separated binary words.
        words: Option<String>,
        #[arg(short = 'n')]
        n: usize,
        /// Forbid every word of the given length except the rotations of the single word.
        #[arg(long)]
        orbit: bool,
        /// Use the even shift instead of explicit words.
        #[arg(long, conflicts_with_all = ["words", "orbit"])]
        even: bool,
        /// Search for a generating level up to this bound.
        #[arg(long)]
        detect: Option<usize>,
        /// Include the word-named quotient of level `n`.
        #[arg(long)]
        quotient: bool,
        /// Write the quotient SGF to this file.
        #[arg(short, long, requires = "quotient")]
        output: Option<PathBuf>,
    },
    /// DOT rendering of level `n` with edges colored by group.
    Dot {
        input: String,
        #[arg(short = 'n', default_value_t = 0)]
        n: usize,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Runs the acceptance criteria and prints a pass/fail table.
    Repro {
        /// Run only these criteria.
        #[arg(long, value_delimiter = ',')]
        only: Vec<u32>,
        #[arg(long)]
        json: bool,
    },
}

/// Parses `args` (including the program name), runs the command and returns
/// the exit code; regular output goes to `out` and diagnostics to `err`.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                let _ = write!(err, "{text}");
                EXIT_USAGE
            } else {
                let _ = write!(out, "{text}");
                EXIT_OK
            };
        }
    };
    match commands::dispatch(cli.command) {
        Ok(text) => match out.write_all(text.as_bytes()) {
            Ok(()) => EXIT_OK,
            Err(e) => {
                let _ = writeln!(err, "error: {e}");
                EXIT_DOMAIN
            }
        },
        Err(commands::Failure { error, output }) => {
            if let Some(text) = output {
                let _ = out.write_all(text.as_bytes());
            }
            let _ = writeln!(err, "error: {error}");
            EXIT_DOMAIN
        }
    }
}
