//! Exact arithmetic in ℚ(ζ₁₂).

use coxalg::arith::{CycField, CycNum, Rational};

fn main() -> coxalg::Result<()> {
    let k = CycField::get(12);
    let z = k.zeta_pow(1);
    println!("degree of Q(z12) over Q: {}", k.degree());
    println!("z^12 = {}", z.pow(12)?);

    let i = k.zeta_pow(3);
    println!("i = z^3 = {i}, i^2 = {}", &i * &i);

    // √3 = ζ + ζ⁻¹
    let s = &z + &k.zeta_pow(11);
    println!("sqrt3 = {s}, sqrt3^2 = {}", &s * &s);

    let x = &CycNum::from_rational(k, Rational::new(3, 2)) + &z;
    let inv = x.inverse()?;
    println!("(3/2 + z)^-1 = {inv}");
    println!("check: {}", &x * &inv);
    println!("complex conjugate of z = {}", z.conj());
    Ok(())
}
