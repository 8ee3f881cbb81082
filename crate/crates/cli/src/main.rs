//! `toric-puzzle`: characteristic maps, diagrams and puzzles from the shell.

mod cache;
mod commands;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(
    name = "toric-puzzle",
    version,
    about = "Characteristic maps over wedged simplicial spheres and their puzzles"
)]
pub struct Cli {
    /// Worker threads for parallel sections (default: all cores).
    #[arg(long, global = true, env = "TORIC_PUZZLE_THREADS")]
    pub threads: Option<usize>,
    /// Directory for cached diagrams.
    #[arg(long, global = true)]
    pub cache_dir: Option<PathBuf>,
    /// Write the result here instead of stdout.
    #[arg(short, long, global = true)]
    pub output: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Inspect a complex file.
    Complex {
        #[command(subcommand)]
        command: ComplexCommand,
    },
    /// Generate complex files.
    Gen {
        #[command(subcommand)]
        command: GenCommand,
    },
    /// List the D-J classes of characteristic maps.
    Charmaps {
        complex: PathBuf,
        #[command(flatten)]
        ring: RingArgs,
    },
    /// Build the pre-diagram.
    Prediagram {
        complex: PathBuf,
        #[command(flatten)]
        ring: RingArgs,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Build the diagram (pre-diagram plus realizable squares).
    Diagram {
        complex: PathBuf,
        #[command(flatten)]
        ring: RingArgs,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Count or list realizable puzzles on the board of `J`.
    Puzzles {
        #[command(subcommand)]
        command: PuzzlesCommand,
    },
    /// Compare the puzzle count with a direct enumeration over `K(J)`.
    Crosscheck {
        complex: PathBuf,
        /// Multiplicities, e.g. `2,3,1,1,1,1`.
        #[arg(long, value_name = "J")]
        j: String,
        /// Also compare the direct and square-completion routes on every candidate.
        #[arg(long)]
        squares: bool,
        /// Largest `Σj` for the direct enumeration.
        #[arg(long, default_value_t = 12)]
        limit: usize,
    },
}

#[derive(Subcommand, Debug)]
pub enum ComplexCommand {
    /// Vertices, dimension, Picard number, minimal non-faces and seed status.
    Info {
        complex: PathBuf,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
}

#[derive(Subcommand, Debug)]
pub enum GenCommand {
    /// Boundary of a k-gon.
    Ngon { k: usize },
    /// Boundary of the cyclic n-polytope with m vertices.
    Cyclic { n: usize, m: usize },
    /// Boundary of the d-simplex.
    Simplex { d: usize },
    /// Join of two complexes.
    Join { a: PathBuf, b: PathBuf },
    /// Simplicial wedge at a vertex (1-based).
    Wedge {
        complex: PathBuf,
        #[arg(long)]
        vertex: usize,
    },
    /// Iterated wedge `K(J)`.
    Expand {
        complex: PathBuf,
        #[arg(long, value_name = "J")]
        j: String,
    },
}

#[derive(Subcommand, Debug)]
pub enum PuzzlesCommand {
    /// Print the number of realizable puzzles.
    Count {
        complex: PathBuf,
        #[arg(long, value_name = "J")]
        j: String,
        #[command(flatten)]
        ring: RingArgs,
        /// Also print the count per center class.
        #[arg(long)]
        histogram: bool,
    },
    /// Write every realizable puzzle as JSON.
    List {
        complex: PathBuf,
        #[arg(long, value_name = "J")]
        j: String,
        #[command(flatten)]
        ring: RingArgs,
    },
}

#[derive(Args, Debug, Clone)]
pub struct RingArgs {
    #[arg(long, value_enum, default_value_t = RingArg::Z2)]
    pub ring: RingArg,
    /// Entry bound for the Z search.
    #[arg(long, default_value_t = 1)]
    pub bound: i64,
    /// Use this class list instead of enumerating.
    #[arg(long)]
    pub classes: Option<PathBuf>,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum RingArg {
    Z2,
    Z,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Json,
    Dot,
    Text,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(n) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global()
        {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    }
    match commands::run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
