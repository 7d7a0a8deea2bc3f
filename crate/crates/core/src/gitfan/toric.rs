//! Affine toric varieties as binomial ideals and their orbit closures.

use std::sync::Arc;

use super::cone::{dot_i64, Cone, Vector};
use crate::arith::CycNum;
use crate::error::{Error, Result};
use crate::groebner::{Ideal, RingMap};
use crate::poly::{Monomial, Poly, PolyRing};

/// Kernel of `v_i ↦ s^{points[i]}` into the Laurent ring `k[s^{±1}]`.
pub fn toric_ideal(ring: &Arc<PolyRing>, points: &[Vector]) -> Result<Ideal> {
    if points.len() != ring.nvars() {
        return Err(Error::Dimension(format!("{} points for {} variables", points.len(), ring.nvars())));
    }
    let n = points.first().map_or(0, |p| p.len());
    if points.iter().any(|p| p.len() != n) {
        return Err(Error::Dimension("points of different ranks".into()));
    }
    let names: Vec<String> = (1..=n).map(|i| format!("s{i}")).collect();
    let base = PolyRing::new(&names, ring.field());
    let refs: Vec<&str> = names.iter().map(|s| s.as_str()).collect();
    let (target, pairs) = RingMap::laurent_ring(&base, &refs)?;
    let images = points
        .iter()
        .map(|p| {
            let mut m = Monomial::one(target.nvars());
            for (k, &e) in p.iter().enumerate() {
                let (v, vi) = pairs[k];
                if e >= 0 {
                    m.0[v] = e as u16;
                } else {
                    m.0[vi] = (-e) as u16;
                }
            }
            Poly::monomial(&target, m, CycNum::one(ring.field()))
        })
        .collect();
    RingMap::new(ring, &target, images)?.with_inverses(pairs).kernel()
}

/// The face `τ` of `sigma` whose orbit closure is `V(sub)` inside the toric
/// variety `V(toric)`, where variable `i` is the character `coords[i]` of
/// `σ∨`. The closure of the orbit of `τ` is cut out by the characters not
/// orthogonal to `τ`, so `τ` is found from the coordinates vanishing on
/// `V(sub)`, and the ideals are then compared.
pub fn orbit_face(sigma: &Cone, coords: &[Vector], toric: &Ideal, sub: &Ideal) -> Result<Cone> {
    let ring = toric.ring();
    if coords.len() != ring.nvars() {
        return Err(Error::Dimension(format!("{} characters for {} variables", coords.len(), ring.nvars())));
    }
    let full = toric.sum(sub)?;
    let mut vanishing = Vec::new();
    for i in 0..ring.nvars() {
        if full.radical_contains(&ring.var(i))? {
            vanishing.push(i);
        }
    }
    let expected = toric.sum(&Ideal::new(ring, vanishing.iter().map(|&i| ring.var(i)).collect()))?;
    for face in sigma.faces()? {
        let perp: Vec<usize> = (0..coords.len()).filter(|&i| face.rays().iter().all(|v| dot_i64(&coords[i], v) == 0)).collect();
        let complement: Vec<usize> = (0..coords.len()).filter(|i| !perp.contains(i)).collect();
        if complement == vanishing {
            if !expected.equals(&full)? {
                return Err(Error::NotOrbitClosure(format!(
                    "the coordinates vanishing on it match a face, but its ideal is not generated by them and the toric relations (missing {})",
                    full.missing_from(&expected)?.map_or("-".into(), |p| p.to_string())
                )));
            }
            return Ok(face);
        }
    }
    Err(Error::NotOrbitClosure(format!("no face of the cone has exactly {} non-orthogonal characters", vanishing.len())))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::CycField;

    #[test]
    fn small_toric_ideals() {
        let r = PolyRing::new(&["v1", "v2"], CycField::get(1));
        let i = toric_ideal(&r, &[vec![2], vec![3]]).unwrap();
        assert!(i.equals(&Ideal::parse(&r, &["v1^3 - v2^2"]).unwrap()).unwrap());
        let j = toric_ideal(&r, &[vec![1, 0], vec![0, 1]]).unwrap();
        assert!(j.gens().iter().all(|g| g.is_zero()) || j.gens().is_empty());
    }

    #[test]
    fn faces_of_the_plane() {
        let r = PolyRing::new(&["a", "b"], CycField::get(1));
        let sigma = Cone::new(2, vec![vec![1, 0], vec![0, 1]]).unwrap();
        let coords = vec![vec![1, 0], vec![0, 1]];
        let toric = Ideal::zero(&r);
        assert_eq!(orbit_face(&sigma, &coords, &toric, &Ideal::zero(&r)).unwrap().rays().len(), 0);
        let f = orbit_face(&sigma, &coords, &toric, &Ideal::parse(&r, &["a"]).unwrap()).unwrap();
        assert_eq!(f.rays(), &[vec![1, 0]]);
        assert!(orbit_face(&sigma, &coords, &toric, &Ideal::parse(&r, &["a - b"]).unwrap()).is_err());
    }
}
