use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

mod commands;

use commands::Failure;

#[derive(Parser)]
#[command(author, version, about = "Majorization of tree degree sequences", long_about = None)]
struct Args {
    /// Output mode; `--csv` and `--dot` on individual commands override it.
    #[arg(short, long, value_enum, global = true, default_value_t = OutputMode::Text)]
    format: OutputMode,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum OutputMode {
    Text,
    /// JSON
    Structured,
    Dot,
    Csv,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Chain,
    Direct,
}

#[derive(Subcommand)]
enum Command {
    /// Compare two degree sequences in the majorization order.
    Compare { left: String, right: String },
    /// Emit the vertices of a Lorenz curve.
    Lorenz {
        sequence: String,
        #[arg(long)]
        normalized: bool,
        #[arg(long)]
        csv: bool,
    },
    /// Plan basic transfers from a sequence up to one that majorizes it.
    Plan { source: String, target: String },
    /// Build a tree with the given degree sequence.
    Realize {
        sequence: String,
        #[arg(long, value_enum, default_value_t = Method::Chain)]
        method: Method,
        #[arg(long)]
        dot: bool,
    },
    /// List the non-isomorphic trees on N nodes.
    Enumerate {
        n: usize,
        /// Print the census of degree sequences instead of trees.
        #[arg(long)]
        delta_only: bool,
    },
    /// Run exhaustive checks on all trees with N nodes.
    Verify {
        n: usize,
        #[arg(long)]
        theorem: bool,
        #[arg(long)]
        total_order: bool,
        #[arg(long)]
        chain_minimal: bool,
        #[arg(long)]
        convex: bool,
        #[arg(long)]
        all: bool,
        /// Seed for the random connected graphs of the chain check.
        #[arg(long, default_value_t = 2024)]
        seed: u64,
        /// Number of random connected graphs for the chain check.
        #[arg(long, default_value_t = 100)]
        samples: usize,
    },
    /// Move a branch of a tree read from a file (edge list or JSON).
    Move {
        tree_file: PathBuf,
        donor: usize,
        gateway: usize,
        target: usize,
        #[arg(long)]
        enforce_degree_rule: bool,
        #[arg(long)]
        dot: bool,
    },
    /// Hasse diagram of the census order as DOT.
    Hasse { n: usize },
}

fn run(args: Args) -> Result<String, Failure> {
    let mode = args.format;
    let pick = |flag: bool, forced: OutputMode| if flag { forced } else { mode };
    match args.command {
        Command::Compare { left, right } => commands::compare(&left, &right, mode),
        Command::Lorenz {
            sequence,
            normalized,
            csv,
        } => commands::lorenz(&sequence, normalized, pick(csv, OutputMode::Csv)),
        Command::Plan { source, target } => commands::plan(&source, &target, mode),
        Command::Realize {
            sequence,
            method,
            dot,
        } => commands::realize(&sequence, method, pick(dot, OutputMode::Dot)),
        Command::Enumerate { n, delta_only } => commands::enumerate(n, delta_only, mode),
        Command::Verify {
            n,
            theorem,
            total_order,
            chain_minimal,
            convex,
            all,
            seed,
            samples,
        } => {
            let none = !(theorem || total_order || chain_minimal || convex);
            let checks = commands::Checks {
                theorem: all || none || theorem,
                total_order: all || none || total_order,
                chain_minimal: all || none || chain_minimal,
                convex: all || none || convex,
            };
            commands::verify(n, checks, seed, samples, mode)
        }
        Command::Move {
            tree_file,
            donor,
            gateway,
            target,
            enforce_degree_rule,
            dot,
        } => commands::move_branch(
            &tree_file,
            (donor, gateway, target),
            enforce_degree_rule,
            pick(dot, OutputMode::Dot),
        ),
        Command::Hasse { n } => commands::hasse(n, mode),
    }
}

fn main() -> ExitCode {
    let args = Args::parse();
    match run(args) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(failure) => {
            if let Some(out) = failure.stdout() {
                print!("{out}");
            }
            if let Some(msg) = failure.message() {
                eprintln!("error: {msg}");
            }
            ExitCode::from(failure.code())
        }
    }
}
