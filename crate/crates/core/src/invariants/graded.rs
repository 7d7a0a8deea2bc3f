//! Linear algebra on homogeneous components of a polynomial ring.

use std::collections::HashMap;
use std::sync::Arc;

use crate::arith::CycNum;
use crate::error::{Error, Result};
use crate::linalg::FieldMatrix;
use crate::poly::{Monomial, Poly, PolyRing};

/// All monomials of total degree `d` in `n` variables, lexicographically
/// decreasing (`x1^d` first).
pub fn monomials_of_degree(n: usize, d: u32) -> Vec<Monomial> {
    fn rec(n: usize, i: usize, left: u32, cur: &mut Vec<u16>, out: &mut Vec<Monomial>) {
        if i + 1 == n {
            cur[i] = left as u16;
            out.push(Monomial::from_exps(cur));
            return;
        }
        for e in (0..=left).rev() {
            cur[i] = e as u16;
            rec(n, i + 1, left - e, cur, out);
        }
        cur[i] = 0;
    }
    let mut out = Vec::new();
    if n == 0 {
        if d == 0 {
            out.push(Monomial::one(0));
        }
        return out;
    }
    rec(n, 0, d, &mut vec![0; n], &mut out);
    out
}

/// Coordinates on the degree-`d` component with respect to the monomial
/// basis of [`monomials_of_degree`].
pub struct Component {
    ring: Arc<PolyRing>,
    degree: u32,
    monos: Vec<Monomial>,
    pos: HashMap<Monomial, usize>,
}

impl Component {
    pub fn new(ring: &Arc<PolyRing>, degree: u32) -> Component {
        let monos = monomials_of_degree(ring.nvars(), degree);
        let pos = monos.iter().cloned().enumerate().map(|(i, m)| (m, i)).collect();
        Component { ring: ring.clone(), degree, monos, pos }
    }

    pub fn dim(&self) -> usize {
        self.monos.len()
    }

    pub fn monomials(&self) -> &[Monomial] {
        &self.monos
    }

    pub fn vector(&self, f: &Poly) -> Result<Vec<CycNum>> {
        let mut v = vec![CycNum::zero(self.ring.field()); self.monos.len()];
        for (m, c) in f.terms() {
            let i = *self.pos.get(m).ok_or_else(|| Error::Invalid(format!("{f} is not homogeneous of degree {}", self.degree)))?;
            v[i] = c.clone();
        }
        Ok(v)
    }

    pub fn poly(&self, v: &[CycNum]) -> Poly {
        Poly::from_terms(&self.ring, self.monos.iter().cloned().zip(v.iter().cloned()).filter(|(_, c)| !c.is_zero()).collect::<Vec<_>>())
    }

    pub fn matrix(&self, polys: &[Poly]) -> Result<FieldMatrix> {
        if polys.is_empty() {
            return Ok(FieldMatrix::zeros(self.ring.field(), 0, self.dim()));
        }
        FieldMatrix::from_rows(polys.iter().map(|p| self.vector(p)).collect::<Result<Vec<_>>>()?)
    }

    /// Canonical (reduced row echelon) basis of the span of `polys`.
    pub fn span_basis(&self, polys: &[Poly]) -> Result<Vec<Poly>> {
        let (r, piv) = self.matrix(polys)?.rref();
        Ok((0..piv.len()).map(|i| self.poly(r.row(i))).collect())
    }

    pub fn rank(&self, polys: &[Poly]) -> Result<usize> {
        Ok(self.matrix(polys)?.rank())
    }
}

/// All products of `gens` (homogeneous, positive degree) of total degree `d`.
pub fn products_of_degree(ring: &Arc<PolyRing>, gens: &[Poly], d: u32) -> Vec<Poly> {
    fn rec(gens: &[(u32, &Poly)], start: usize, left: u32, cur: &Poly, out: &mut Vec<Poly>) {
        if left == 0 {
            out.push(cur.clone());
            return;
        }
        for i in start..gens.len() {
            let (dg, g) = gens[i];
            if dg <= left {
                rec(gens, i, left - dg, &(cur * g), out);
            }
        }
    }
    let gs: Vec<(u32, &Poly)> = gens.iter().filter_map(|g| g.total_degree().filter(|&x| x > 0).map(|x| (x, g))).collect();
    let mut out = Vec::new();
    rec(&gs, 0, d, &Poly::one(ring), &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::CycField;

    #[test]
    fn counts() {
        assert_eq!(monomials_of_degree(4, 2).len(), 10);
        assert_eq!(monomials_of_degree(4, 6).len(), 84);
        assert_eq!(monomials_of_degree(3, 0).len(), 1);
        let r = PolyRing::new(&["x", "y"], CycField::get(4));
        let p = products_of_degree(&r, &[r.parse("x+y").unwrap(), r.parse("x*y").unwrap()], 4);
        assert_eq!(p.len(), 3);
        let c = Component::new(&r, 2);
        assert_eq!(c.rank(&[r.parse("x^2").unwrap(), r.parse("2*x^2").unwrap(), r.parse("x*y").unwrap()]).unwrap(), 2);
    }
}
