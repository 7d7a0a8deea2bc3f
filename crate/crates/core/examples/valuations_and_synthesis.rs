//! Monomial valuations of the commutator invariants, intersection numbers
//! with the exceptional classes, and the resulting Cox ring generators.
//!
//! `cargo run --example valuations_and_synthesis -- g4`

use coxalg::cases::{self, CaseName};
use coxalg::coxring::synthesize_cox_generators;
use coxalg::matgroup::ActionConvention;
use coxalg::valuation::intersection_numbers;

fn main() -> coxalg::Result<()> {
    let name: CaseName = std::env::args().nth(1).as_deref().unwrap_or("s3").parse()?;
    let case = cases::load(name, ActionConvention::Direct)?;
    println!("{}: {} reflection classes, Cartan matrix {:?}", case.name, case.class_count(), case.cartan.matrix.to_i64_rows());
    println!("class orders {:?}", case.cartan.orders);

    let vals = case.valuations()?;
    for g in &case.table {
        let nu = vals.iter().map(|v| v.eval(&g.poly)).collect::<coxalg::Result<Vec<_>>>()?;
        let e = intersection_numbers(&nu, &case.cartan)?;
        println!("{:>6}  deg {}  nu {:?}  E.D {:?}", g.name, g.poly.total_degree().unwrap_or(0), nu, e);
    }

    println!("Cox ring generators:");
    for g in synthesize_cox_generators(&case)? {
        println!("  {}", g.label(&case.t_names));
    }
    Ok(())
}
