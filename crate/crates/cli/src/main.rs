mod commands;
mod input;

use std::io::{self, Write};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::json;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error(transparent)]
    Domain(#[from] filoop::Error),
    #[error(transparent)]
    Io(#[from] io::Error),
    #[error("{0}")]
    Check(String),
}

impl CliError {
    fn kind(&self) -> &'static str {
        match self {
            CliError::Domain(e) => e.kind(),
            CliError::Io(_) => "IoError",
            CliError::Check(_) => "CheckFailed",
        }
    }
}

#[derive(Parser)]
#[command(name = "filoop", version, about = "Filoops, chord diagrams and their interlace graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Worker threads for enumeration commands (default: all cores).
    #[arg(long, global = true)]
    jobs: Option<usize>,
    /// Seed for randomised checks.
    #[arg(long, global = true, env = "FILOOP_SEED", default_value_t = 1)]
    seed: u64,
}

#[derive(Args)]
struct Input {
    /// Word (e.g. AbaB, optional root=x), graph JSON, a file holding either, or - for stdin.
    input: String,
}

#[derive(Subcommand)]
enum Command {
    /// Parse inputs and report their size; with --random, run seeded self-checks.
    Validate {
        input: Option<String>,
        /// Number of random connected graphs to check.
        #[arg(long)]
        random: Option<usize>,
    },
    /// Faces and genus of framed words: {word, n, f, g}.
    Genus(Input),
    /// Interlace graph as JSON, or DOT with --dot.
    Interlace {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        dot: bool,
    },
    /// Rosenstiehl and intersection forms, EN1/EN2/RC, CL2 weightings.
    Forms(Input),
    /// Minimal genus over framings, with minimising colourings.
    Mingenus(Input),
    /// Split decomposition with weights, as GLT JSON or DOT.
    Decompose {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        dot: bool,
    },
    /// All chord diagrams realizing a connected graph.
    Realize {
        #[command(flatten)]
        input: Input,
        /// Require a prime graph and check its realization is unique.
        #[arg(long)]
        certify_unique: bool,
    },
    /// All spheriloops with a connected Gaussian interlace graph.
    Spheriloops(Input),
    /// Connected Gaussian graphs up to isomorphism, from the grammar.
    Generate {
        #[arg(long, default_value_t = 7)]
        max_n: usize,
        /// Restrict to circle graphs.
        #[arg(long)]
        chordiagraphs: bool,
        /// Emit spheriloop classes as words instead of graphs.
        #[arg(long)]
        spheriloops: bool,
    },
    /// CSV counts per size: spheriloop classes, or Gaussian graphs with --graphs.
    Tabulate {
        #[arg(long, default_value_t = 7)]
        max_n: usize,
        #[arg(long)]
        graphs: bool,
    },
    /// SVG of a chord diagram, or DOT of a graph with --dot.
    Render {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        dot: bool,
    },
}

fn run(cli: Cli, out: &mut dyn Write) -> Result<(), CliError> {
    if let Some(jobs) = cli.jobs {
        // only fails if a pool already exists
        let _ = rayon::ThreadPoolBuilder::new().num_threads(jobs.max(1)).build_global();
    }
    use commands::*;
    match cli.command {
        Command::Validate { input, random } => validate(input.as_deref(), random, cli.seed, out),
        Command::Genus(i) => genus(&i.input, out),
        Command::Interlace { input, dot } => interlace(&input.input, dot, out),
        Command::Forms(i) => forms(&i.input, out),
        Command::Mingenus(i) => mingenus(&i.input, out),
        Command::Decompose { input, dot } => decompose(&input.input, dot, out),
        Command::Realize { input, certify_unique } => realize(&input.input, certify_unique, out),
        Command::Spheriloops(i) => spheriloops(&i.input, out),
        Command::Generate { max_n, chordiagraphs, spheriloops } => generate(max_n, chordiagraphs, spheriloops, out),
        Command::Tabulate { max_n, graphs } => tabulate(max_n, graphs, out),
        Command::Render { input, dot } => render(&input.input, dot, out),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = io::stdout();
    let mut out = io::BufWriter::new(stdout.lock());
    let result = run(cli, &mut out).and_then(|()| out.flush().map_err(CliError::from));
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(CliError::Io(e)) if e.kind() == io::ErrorKind::BrokenPipe => ExitCode::SUCCESS,
        Err(e) => {
            let _ = out.flush();
            eprintln!("{}", json!({"error": e.kind(), "detail": e.to_string()}));
            ExitCode::from(1)
        }
    }
}
