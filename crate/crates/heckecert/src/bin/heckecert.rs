use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use heckecert::cli::{self, Mode, RunConfig, Task};
use heckecert::ring::DEFAULT_PRIME;

#[derive(Parser, Debug)]
#[command(version, about = "Hecke algebra freeness certificates for rank-2 exceptional groups")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Group order and center data from both presentations.
    GroupInfo(Common),
    /// Checks the isomorphism maps between the two presentations.
    IsoCheck(Common),
    /// Certifies that the spanning set is a basis.
    Freeness(Common),
    /// Specializes to roots of unity and compares with the regular representation.
    GroupAlgebra(Common),
    /// Builds braid group representations of dimension 2 to 5.
    B3rep(Common),
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum ModeArg {
    Exact,
    Modp,
}

#[derive(Args, Debug)]
struct Common {
    /// Comma list or range: `G4,G6`, `G4..G16`, `all`.
    #[arg(long, default_value = "all")]
    groups: String,
    /// Comma list or inclusive range: `1..5`.
    #[arg(long, default_value = "1")]
    seeds: String,
    #[arg(long, default_value_t = DEFAULT_PRIME)]
    prime: u64,
    #[arg(long, value_enum, default_value_t = ModeArg::Modp)]
    mode: ModeArg,
    /// Write the JSON report here.
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long)]
    catalog_dir: Option<PathBuf>,
    /// Print the JSON report instead of the table.
    #[arg(long)]
    json: bool,
}

fn config(task: Task, c: &Common) -> Result<RunConfig, cli::CliError> {
    Ok(RunConfig {
        groups: cli::parse_groups(&c.groups)?,
        tasks: vec![task],
        seeds: cli::parse_seeds(&c.seeds)?,
        prime: c.prime,
        mode: match c.mode {
            ModeArg::Exact => Mode::Exact,
            ModeArg::Modp => Mode::Modp,
        },
        out: c.out.clone(),
        catalog_dir: c.catalog_dir.clone(),
    })
}

fn main() -> ExitCode {
    let args = Cli::parse();
    let (task, common) = match &args.command {
        Command::GroupInfo(c) => (Task::GroupInfo, c),
        Command::IsoCheck(c) => (Task::IsoCheck, c),
        Command::Freeness(c) => (Task::Freeness, c),
        Command::GroupAlgebra(c) => (Task::GroupAlgebra, c),
        Command::B3rep(c) => (Task::B3Reps, c),
    };
    let report = config(task, common).and_then(|c| cli::run_and_write(&c));
    match report {
        Ok(r) => {
            if common.json {
                println!("{}", r.to_json());
            } else {
                print!("{}", r.summary_table());
            }
            ExitCode::from(r.exit_code() as u8)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
