use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use schubert_iso::commands::{self, Options, Output, EXIT_ERROR};
use schubert_iso::weyl::DEFAULT_WORD_CAP;

/// Isomorphism checks for Schubert varieties given as JSON data.
///
/// Exit codes: 0 isomorphic, 1 not isomorphic, 2 unknown, 3 error.
#[derive(Parser)]
#[command(name = "schubert", version)]
struct Cli {
    /// Emit machine-readable JSON.
    #[arg(long, global = true)]
    json: bool,
    /// Replace non-minimal words by their minimal coset representative.
    #[arg(long, global = true)]
    normalize: bool,
    /// Most reduced words enumerated for one element.
    #[arg(long, global = true, default_value_t = DEFAULT_WORD_CAP)]
    cap: usize,
    /// Worker threads for pairwise classification.
    #[arg(long, global = true)]
    threads: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Decide whether two data give isomorphic Schubert varieties.
    Check { a: PathBuf, b: PathBuf },
    /// Classify the Schubert surfaces.
    Surfaces {
        /// Re-check every pairwise verdict and certificate.
        #[arg(long)]
        verify: bool,
    },
    /// Chevalley products by degree-two classes.
    Cohomology {
        file: PathBuf,
        /// Node label of the degree-two class (default: all).
        #[arg(long)]
        generator: Option<String>,
        /// Comma-separated word of the basis element, e.g. "2,1" (default: all).
        #[arg(long)]
        element: Option<String>,
    },
    /// The Bruhat interval [1, w]^I.
    Interval { file: PathBuf },
    /// Enumerate fully supported data.
    Enumerate {
        #[arg(long, default_value_t = 2)]
        max_rank: usize,
        #[arg(long, default_value_t = 2)]
        max_length: usize,
        /// Also classify the data up to isomorphism.
        #[arg(long)]
        classify: bool,
    },
    /// Positive roots with coroot coordinates.
    Roots { file: PathBuf },
}

fn run(cli: Cli) -> Result<Output, schubert_iso::Error> {
    let opts = Options {
        json: cli.json,
        normalize: cli.normalize,
        cap: cli.cap,
    };
    match cli.command {
        Command::Check { a, b } => commands::cmd_check(&a, &b, &opts),
        Command::Surfaces { verify } => commands::cmd_surfaces(verify, &opts),
        Command::Cohomology {
            file,
            generator,
            element,
        } => commands::cmd_cohomology(&file, generator.as_deref(), element.as_deref(), &opts),
        Command::Interval { file } => commands::cmd_interval(&file, &opts),
        Command::Enumerate {
            max_rank,
            max_length,
            classify,
        } => commands::cmd_enumerate(max_rank, max_length, classify, &opts),
        Command::Roots { file } => commands::cmd_roots(&file, &opts),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if e.use_stderr() => {
            let _ = e.print();
            return ExitCode::from(EXIT_ERROR as u8);
        }
        Err(e) => e.exit(),
    };
    if let Some(n) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global()
        {
            eprintln!("schubert: {e}");
            return ExitCode::from(EXIT_ERROR as u8);
        }
    }
    match run(cli) {
        Ok(out) => {
            for w in &out.warnings {
                eprintln!("warning: {w}");
            }
            print!("{}", out.stdout);
            ExitCode::from(out.code as u8)
        }
        Err(e) => {
            eprintln!("schubert: {e}");
            ExitCode::from(EXIT_ERROR as u8)
        }
    }
}
