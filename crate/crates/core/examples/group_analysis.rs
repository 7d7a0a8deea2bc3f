//! Closure and structure of a finite matrix group read from a group file.
//!
//! `cargo run --example group_analysis -- crates/core/data/g4.group`

use coxalg::cases::{group_facts, group_of};
use coxalg::groupfile::read_group_file;

fn main() -> coxalg::Result<()> {
    let path = std::env::args().nth(1).unwrap_or_else(|| concat!(env!("CARGO_MANIFEST_DIR"), "/data/d8.group").into());
    let file = read_group_file(path.as_ref())?;
    let g = group_of(&file)?;
    let facts = group_facts(&g)?;
    println!("{path}");
    println!("  dimension {}, field Q(z{})", g.dim(), file.cyclotomic_order);
    println!("  order {}, abelian: {}", facts.order, g.is_abelian());
    println!("  conjugacy classes: {}", g.conjugacy_classes().len());
    println!("  commutator subgroup of order {}", facts.commutator_order);
    println!("  abelianization {}", g.abelianization()?.structure());
    for c in g.symplectic_reflections() {
        println!("  symplectic reflection class of size {} and order {}", c.members.len(), c.order);
    }
    println!("  reflections lie in the commutator subgroup: {}", g.reflections_in_commutator());
    Ok(())
}
