//! Gröbner bases and the ideal operations built on them.

use coxalg::arith::CycField;
use coxalg::groebner::Ideal;
use coxalg::poly::PolyRing;

fn main() -> coxalg::Result<()> {
    let r = PolyRing::new(&["x", "y", "z"], CycField::get(12));
    let i = Ideal::parse(&r, &["x^2 - y*z", "x*y - z^2"])?;
    println!("I = ({})", i.gen_strings().join(", "));
    for g in i.groebner()?.iter() {
        println!("  gb: {g}");
    }
    let f = r.parse("x^3*z - y*z^3")?;
    println!("{f} in I: {}", i.contains(&f)?);
    println!("dim V(I) = {}", i.krull_dimension()?);

    let a = Ideal::parse(&r, &["x", "y"])?;
    let b = Ideal::parse(&r, &["y", "z"])?;
    println!("(x,y) ∩ (y,z) = ({})", a.intersect(&b)?.gen_strings().join(", "));
    println!("(x,y)·(y,z) = ({})", a.product(&b)?.gen_strings().join(", "));

    // twisted cubic as the kernel of t ↦ (t, t², t³): eliminate t
    let s = PolyRing::new(&["t", "x", "y", "z"], CycField::get(12));
    let graph = Ideal::parse(&s, &["x - t", "y - t^2", "z - t^3"])?;
    println!("twisted cubic: ({})", graph.eliminate(&[0])?.gen_strings().join(", "));

    let j = Ideal::parse(&r, &["x^3", "y^2"])?;
    println!("x*y in rad(x^3, y^2): {}", j.radical_contains(&r.parse("x*y")?)?);
    Ok(())
}
