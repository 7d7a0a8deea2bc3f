use std::sync::Arc;

use super::{cached_groebner, default_options, normal_form_by, GbOptions, MonomialOrder};
use crate::error::Result;
use crate::poly::{Poly, PolyRing};

/// Decides membership in `k[g_1, …, g_k]` by normal forms modulo
/// `(w_i − g_i)` under an order eliminating the original variables.
///
/// When every generator is homogeneous of positive degree the tag ideal is
/// graded (tag `w_i` gets weight `deg g_i`) and the basis is only computed up
/// to the largest degree the checker was built for.
pub struct SubalgebraChecker {
    ring: Arc<PolyRing>,
    big: Arc<PolyRing>,
    tags: Arc<PolyRing>,
    basis: Arc<Vec<Poly>>,
    ord: MonomialOrder,
    max_degree: Option<u32>,
}

impl SubalgebraChecker {
    /// `max_degree` bounds the degree of polynomials that will be tested;
    /// it is only used for homogeneous generators.
    pub fn new(gens: &[Poly], max_degree: Option<u32>) -> Result<SubalgebraChecker> {
        let ring = gens.first().expect("at least one generator").ring().clone();
        let n = ring.nvars();
        let k = gens.len();
        let tag_names: Vec<String> = (1..=k).map(|i| format!("w{i}")).collect();
        let tags = PolyRing::new(&tag_names, ring.field());
        let mut names = ring.names().to_vec();
        for t in &tag_names {
            let mut c = t.clone();
            while names.contains(&c) {
                c.push('\'');
            }
            names.push(c);
        }
        let big = PolyRing::new(&names, ring.field());
        let xmap: Vec<usize> = (0..n).collect();
        let mut ideal = Vec::with_capacity(k);
        for (i, g) in gens.iter().enumerate() {
            ideal.push(&Poly::var(&big, n + i) - &g.map_vars(&big, &xmap));
        }
        let graded = gens.iter().all(|g| g.is_homogeneous() && g.total_degree().unwrap_or(0) > 0);
        let (ord, opts) = if graded {
            let mut w = vec![1u32; n];
            w.extend(gens.iter().map(|g| g.total_degree().unwrap()));
            let ord = MonomialOrder::weighted_elimination(n, &w);
            let opts = match max_degree {
                Some(d) => GbOptions { weights: Some(w), max_degree: d as u64, truncate: true, ..default_options() },
                None => GbOptions { weights: Some(w), ..default_options() },
            };
            (ord, opts)
        } else {
            (MonomialOrder::elimination(n, n + k), default_options())
        };
        let basis = cached_groebner(&ideal, &ord, &opts)?;
        Ok(SubalgebraChecker { ring, big, tags, basis, ord, max_degree: if graded { max_degree } else { None } })
    }

    /// The ring `k[w_1..w_k]` representations live in.
    pub fn tag_ring(&self) -> &Arc<PolyRing> {
        &self.tags
    }

    /// `Some(h)` with `h(g_1..g_k) = f` if `f` lies in the subalgebra.
    pub fn represent(&self, f: &Poly) -> Result<Option<Poly>> {
        let n = self.ring.nvars();
        if let Some(d) = self.max_degree {
            debug_assert!(f.total_degree().unwrap_or(0) <= d, "degree above the truncation bound");
        }
        let fx = f.to_ring(&self.ring)?.map_vars(&self.big, &(0..n).collect::<Vec<_>>());
        let r = normal_form_by(&fx, &self.basis, &self.ord);
        if r.support().iter().any(|&i| i < n) {
            return Ok(None);
        }
        let back: Vec<usize> = (0..self.big.nvars()).map(|i| i.saturating_sub(n)).collect();
        Ok(Some(r.map_vars(&self.tags, &back)))
    }
}

/// One-shot form of [`SubalgebraChecker::represent`].
pub fn subalgebra_membership(f: &Poly, gens: &[Poly]) -> Result<Option<Poly>> {
    let d = f.total_degree().unwrap_or(0);
    SubalgebraChecker::new(gens, Some(d))?.represent(f)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::CycField;

    #[test]
    fn symmetric_functions() {
        let r = PolyRing::new(&["x", "y"], CycField::get(12));
        let gens = vec![r.parse("x + y").unwrap(), r.parse("x*y").unwrap()];
        let h = subalgebra_membership(&r.parse("x^2 + y^2").unwrap(), &gens).unwrap().unwrap();
        assert_eq!(h, h.ring().parse("w1^2 - 2*w2").unwrap());
        assert!(subalgebra_membership(&r.parse("x - y").unwrap(), &gens).unwrap().is_none());
        let back = h.substitute(&gens);
        assert_eq!(back, r.parse("x^2 + y^2").unwrap());
    }
}
