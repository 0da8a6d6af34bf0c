mod cache;
mod commands;
mod report;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use commands::{cmd_homology, cmd_spectral, cmd_verify, cmd_wreath, GroupSpec, RunConfig};

/// Exact homology of the labeled complex of injective words.
#[derive(Parser)]
#[command(name = "injword", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    opts: Opts,
}

#[derive(Subcommand, Clone, Copy)]
enum Command {
    /// Betti table, vanishing below the top degree, and rank H_n against d(l)_n.
    Homology,
    /// E1 page of the filtration by the position of one letter, d1 and the null-homotopy.
    Spectral,
    /// Fixed-point-free count and action checks in the wreath product G_n.
    Wreath,
    /// Every suite over the grid n <= N, l <= L (defaults 4 and 2).
    Verify,
}

#[derive(Args)]
struct Opts {
    /// Number of letters (grid bound for verify).
    #[arg(long, global = true)]
    n: Option<usize>,
    /// Number of labels, l >= 1 (grid bound for verify).
    #[arg(long, global = true, value_parser = clap::value_parser!(u32).range(1..))]
    labels: Option<u32>,
    /// Label group: cyclic:K or file:PATH (JSON with order, table, identity).
    #[arg(long, global = true)]
    group: Option<GroupSpec>,
    /// Distinguished letter for the filtration (defaults to n).
    #[arg(long, global = true)]
    letter: Option<u32>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Directory for cached Smith forms.
    #[arg(long, global = true)]
    cache: Option<PathBuf>,
    /// Maximum number of generators (or group elements) to enumerate.
    #[arg(long, global = true, default_value_t = 50_000)]
    budget: u128,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let o = cli.opts;
    let cfg = RunConfig {
        n: o.n,
        labels: o.labels.map(|l| l as usize),
        group: o.group,
        letter: o.letter,
        cache: o.cache,
        budget: o.budget,
    };
    let result = match cli.command {
        Command::Homology => cmd_homology(&cfg),
        Command::Spectral => cmd_spectral(&cfg),
        Command::Wreath => cmd_wreath(&cfg),
        Command::Verify => cmd_verify(&cfg),
    };
    match result {
        Ok(report) => {
            match o.format {
                Format::Text => print!("{}", report.render_text()),
                Format::Json => println!("{}", report.render_json()),
            }
            if report.pass {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
