//! Cones, duality, Hilbert bases and complete fans in the plane.

use coxalg::gitfan::{dual_cone, hilbert_basis, Cone, Fan};

fn main() -> coxalg::Result<()> {
    let c = Cone::new(2, vec![vec![1, 0], vec![1, 3]])?;
    let d = dual_cone(&c)?;
    println!("cone {:?}, dual {:?}", c.rays(), d.rays());
    println!("dual of dual equals cone: {}", dual_cone(&d)? == c);
    println!("Hilbert basis of the cone: {:?}", hilbert_basis(&c)?);

    let sigma = Cone::new(3, vec![vec![1, 0, 1], vec![0, 1, 1], vec![-1, 0, 1], vec![0, -1, 1]])?;
    println!("3d cone with {} faces, dual Hilbert basis {:?}", sigma.faces()?.len(), hilbert_basis(&dual_cone(&sigma)?)?);

    // Hirzebruch surface F_a from rays (1,0), (0,1), (-1,a), (0,-1)
    for a in [0, 1, 4] {
        let rays = [vec![1, 0], vec![0, 1], vec![-1, a], vec![0, -1]];
        let cones: Vec<Cone> = (0..4).map(|i| Cone::new(2, vec![rays[i].clone(), rays[(i + 1) % 4].clone()])).collect::<coxalg::Result<_>>()?;
        let fan = Fan::from_cones(2, &cones)?;
        let h = fan.hirzebruch().map(|h| h.a);
        println!("F_{a}: complete {:?}, smooth {}, classified as F_{:?}", fan.is_complete(), fan.is_smooth(), h);
    }
    Ok(())
}
