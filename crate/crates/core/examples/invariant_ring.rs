//! Molien series, Reynolds operator and invariant generators.

use coxalg::cases::{group_of, CaseName};
use coxalg::groupfile::parse_group_file;
use coxalg::invariants::{invariant_basis, invariant_generators, molien_series, reynolds};

fn main() -> coxalg::Result<()> {
    let file = parse_group_file(CaseName::S3.group_text())?;
    let ring = file.ring();
    let g = group_of(&file)?;
    let h = g.commutator_subgroup();

    println!("Molien series of G:  {:?}", molien_series(&g, 6)?);
    println!("Molien series of G': {:?}", molien_series(&h, 6)?);

    let f = ring.parse("x1*y1 + x2^3")?;
    let rf = reynolds(&f, &g);
    println!("Reynolds({f}) = {rf}");
    println!("idempotent: {}", reynolds(&rf, &g) == rf);

    println!("degree-3 invariants of G': {}", invariant_basis(&ring, &h, 3)?.len());
    for p in invariant_generators(&ring, &h, 6)? {
        println!("  {p}");
    }
    Ok(())
}
