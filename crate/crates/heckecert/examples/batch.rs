//! Drives the same batch runner as the `heckecert` binary from code and
//! prints its summary table and the JSON of the first record.

use heckecert::cli::{parse_groups, run, RunConfig, Task};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let config = RunConfig {
        groups: parse_groups("G4..G8,G17,G22")?,
        tasks: vec![Task::GroupInfo, Task::Freeness],
        seeds: vec![1, 2],
        ..RunConfig::default()
    };
    let report = run(&config)?;
    print!("{}", report.summary_table());
    println!("{}", serde_json::to_string_pretty(&report.records[0])?);
    std::process::exit(report.exit_code());
}
