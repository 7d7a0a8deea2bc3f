//! Minimal supports of χ-semistable points for a torus action on affine
//! space, and whether the isotropy group along each support is trivial.
//!
//! `cargo run --example semistable_supports -- crates/core/data/d8.weights 2,1`

use coxalg::gitfan::{isotropy_trivial, parse_weight_file, semistable_supports};

fn main() -> coxalg::Result<()> {
    let mut args = std::env::args().skip(1);
    let path = args.next().unwrap_or_else(|| concat!(env!("CARGO_MANIFEST_DIR"), "/data/d8.weights").into());
    let chi: Vec<i64> = args.next().unwrap_or_else(|| "2,1".into()).split(',').map(|s| s.trim().parse().expect("integer character")).collect();
    let text = std::fs::read_to_string(&path).map_err(|e| coxalg::Error::Io(format!("{path}: {e}")))?;
    let ws = parse_weight_file(&text, chi.clone())?;
    println!("character {chi:?}, {} coordinates", ws.names.len());
    for s in semistable_supports(&ws)? {
        println!("  {{{}}}  isotropy trivial: {}", ws.names_of(&s).join(", "), isotropy_trivial(&ws, &s));
    }
    Ok(())
}
