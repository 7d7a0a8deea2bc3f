//! Runs every check for one worked example and prints the report summary.
//!
//! `cargo run --example run_case -- d8-wreath`

use coxalg::cases::CaseName;
use coxalg::driver::{run_case, CaseConfig};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let name: CaseName = std::env::args().nth(1).unwrap_or_else(|| "s3".into()).parse()?;
    let report = run_case(name, &CaseConfig::default())?;
    print!("{}", report.summary());
    std::process::exit(report.exit_code());
}
