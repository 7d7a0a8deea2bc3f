//! Bounded checks that every element with prescribed valuations lifts to a
//! product of the synthesized generators.
//!
//! `cargo run --example lifting_condition -- s3 4`

use coxalg::cases::{self, CaseName};
use coxalg::coxring::{verify_lifting_condition, LiftingOptions};
use coxalg::matgroup::ActionConvention;

fn main() -> coxalg::Result<()> {
    let mut args = std::env::args().skip(1);
    let name: CaseName = args.next().as_deref().unwrap_or("s3").parse()?;
    let d_max = args.next().map_or(3, |s| s.parse().expect("degree"));
    let case = cases::load(name, ActionConvention::Direct)?;
    let opts = LiftingOptions { d_max, truncate: if name == CaseName::G4 { Some(12) } else { None }, joint: name != CaseName::G4 };
    for item in verify_lifting_condition(&case, &opts) {
        println!("{:<8} {:<40} {}", item.status.name(), item.id, item.detail);
    }
    Ok(())
}
