//! The fiber of `Spec R → V/G` over the origin and checks of a claimed
//! decomposition into components.

use std::sync::Arc;

use crate::arith::{CycNum, Rational};
use crate::coxring::{embedding_map, CaseSpec, CoxGenerator};
use crate::error::{Error, Result};
use crate::groebner::{Ideal, SubalgebraChecker};
use crate::invariants::invariant_generators;
use crate::linalg::FieldMatrix;
use crate::poly::{Monomial, Poly, PolyRing};

/// Torus-invariant lifts to `ℂ[w, u]` of generators of `ℂ[V]^G` up to
/// degree `bound`.
///
/// Each invariant is written as a polynomial in the table generators; terms
/// with nontrivial class-group character are dropped (they cancel), and the
/// rest are multiplied by the `u`-monomial that makes their torus weight
/// zero.
pub fn lifted_invariants(case: &CaseSpec, gens: &[CoxGenerator], bound: u32) -> Result<Vec<Poly>> {
    let n = case.table.len();
    let m = case.class_count();
    let ring = case.embedding_ring().clone();
    let field = ring.field();
    let cartan = FieldMatrix::from_ints(field, &case.cartan.matrix.to_i64_rows().iter().map(|r| r.as_slice()).collect::<Vec<_>>());
    let cinv_t = cartan.transpose().inverse()?;
    let checker = SubalgebraChecker::new(&case.table_polys(), Some(bound))?;
    let psi = embedding_map(case, gens)?;
    let mut out = Vec::new();
    for f in invariant_generators(&case.ring, &case.group, bound)? {
        let rep = checker.represent(&f)?.ok_or_else(|| Error::Invalid(format!("invariant {f} is not in the subalgebra of the table")))?;
        let mut lift = Poly::zero(&ring);
        for (mono, c) in rep.terms() {
            let mut e = vec![0i64; m];
            for (j, &a) in mono.exps().iter().enumerate() {
                for (k, ek) in e.iter_mut().enumerate() {
                    *ek += a as i64 * gens[j].t_exponents[k];
                }
            }
            // u-exponents s with Σ s_k (row k of the Cartan matrix) = −e
            let rhs: Vec<CycNum> = e.iter().map(|&x| CycNum::from_int(field, -x)).collect();
            let s: Vec<Option<Rational>> = cinv_t.mul_vec(&rhs).iter().map(|x| x.to_rational()).collect();
            if s.iter().any(|x| !x.as_ref().is_some_and(|r| r.is_integer())) {
                continue;
            }
            let s: Vec<i64> = s.into_iter().map(|x| x.unwrap().to_i64().expect("small exponent")).collect();
            if s.iter().any(|&x| x < 0) {
                return Err(Error::Hypothesis(format!("invariant term {mono:?} needs a negative power of a torus monomial")));
            }
            let mut exps: Vec<u16> = mono.exps().to_vec();
            exps.resize(n, 0);
            exps.extend(s.iter().map(|&x| x as u16));
            lift.add_term(Monomial::from_exps(&exps), c);
        }
        if psi.apply(&lift) != f.to_ring(psi.target())? {
            return Err(Error::Invalid(format!("lift of {f} does not map back to it")));
        }
        out.push(lift);
    }
    Ok(out)
}

/// The embedding ideal plus the lifted positive-degree invariants.
pub fn central_fiber_ideal(case: &CaseSpec, gens: &[CoxGenerator], embedding: &Ideal, bound: u32) -> Result<Ideal> {
    let lifts = lifted_invariants(case, gens, bound)?;
    embedding.sum(&Ideal::new(embedding.ring(), lifts))
}

/// Outcome of checking `V(fiber) = ⋃ V(components)`.
#[derive(Clone, Debug)]
pub struct ComponentReport {
    pub names: Vec<String>,
    /// Component `i` contains the fiber ideal.
    pub contains_fiber: Vec<bool>,
    /// A generator of `⋂ components` outside `rad(fiber)`, if any.
    pub outside_radical: Option<Poly>,
    pub dims: Vec<usize>,
    /// Pairs `(i, j)` with component `i` inside component `j`.
    pub nested: Vec<(usize, usize)>,
}

impl ComponentReport {
    pub fn decomposition_holds(&self) -> bool {
        self.contains_fiber.iter().all(|&b| b) && self.outside_radical.is_none() && self.nested.is_empty()
    }
}

/// Checks each component contains the fiber, the intersection of the
/// components lies in the radical of the fiber, no component lies inside
/// another, and records the Krull dimensions.
pub fn verify_components(fiber: &Ideal, components: &[(String, Ideal)]) -> Result<ComponentReport> {
    let ideals: Vec<Ideal> = components.iter().map(|(_, i)| i.clone()).collect();
    let contains_fiber = ideals.iter().map(|c| c.contains_ideal(fiber)).collect::<Result<Vec<_>>>()?;
    let inter = Ideal::intersect_all(&ideals)?;
    let mut outside_radical = None;
    for g in inter.gens() {
        if !fiber.radical_contains(g)? {
            outside_radical = Some(g.clone());
            break;
        }
    }
    let dims = ideals.iter().map(|c| c.krull_dimension()).collect::<Result<Vec<_>>>()?;
    let mut nested = Vec::new();
    for i in 0..ideals.len() {
        for j in 0..ideals.len() {
            // V(I_i) ⊆ V(I_j) iff I_j ⊆ rad(I_i)
            if i != j && ideals[j].gens().iter().map(|g| ideals[i].radical_contains(g)).collect::<Result<Vec<_>>>()?.into_iter().all(|b| b) {
                nested.push((i, j));
            }
        }
    }
    Ok(ComponentReport { names: components.iter().map(|(n, _)| n.clone()).collect(), contains_fiber, outside_radical, dims, nested })
}

/// Whether `V(component)` meets the locus where some support monomial is
/// nonzero.
pub fn meets_semistable_locus(component: &Ideal, supports: &[Vec<usize>]) -> Result<bool> {
    let ring = component.ring();
    for s in supports {
        let m = s.iter().fold(Poly::one(ring), |acc, &i| &acc * &ring.var(i));
        if !component.radical_contains(&m)? {
            return Ok(true);
        }
    }
    Ok(false)
}

/// `(ideal + (1 − y·v)) ∩ k[keep]`: the closure of `V(ideal) ∩ {v ≠ 0}`
/// projected to the `keep` coordinates, returned in a ring with those
/// variables renamed to `names`.
pub fn chart_image(ideal: &Ideal, v: usize, keep: &[usize], names: &[&str]) -> Result<Ideal> {
    let ring = ideal.ring();
    let y = ring.fresh_names("y", 1);
    let big = ring.extended(&y);
    let map: Vec<usize> = (0..ring.nvars()).collect();
    let mut gens: Vec<Poly> = ideal.gens().iter().map(|g| g.map_vars(&big, &map)).collect();
    gens.push(&Poly::one(&big) - &(&Poly::var(&big, ring.nvars()) * &Poly::var(&big, v)));
    let drop: Vec<usize> = (0..big.nvars()).filter(|i| !keep.contains(i)).collect();
    let elim = Ideal::new(&big, gens).eliminate(&drop)?;
    let small: Arc<PolyRing> = PolyRing::new(names, ring.field());
    let mut to_small = vec![0usize; big.nvars()];
    for (k, &i) in keep.iter().enumerate() {
        to_small[i] = k;
    }
    Ok(Ideal::new(&small, elim.gens().iter().map(|g| g.map_vars(&small, &to_small)).collect()))
}

/// A plane curve `V(f) ⊂ ℙ²` is smooth when the partials of `f` have no
/// common zero besides the origin.
pub fn projective_curve_is_smooth(f: &Poly) -> Result<bool> {
    let ring = f.ring();
    let mut gens = vec![f.clone()];
    gens.extend((0..ring.nvars()).map(|i| f.derivative(i)));
    let sing = Ideal::new(ring, gens);
    for i in 0..ring.nvars() {
        if !sing.radical_contains(&ring.var(i))? {
            return Ok(false);
        }
    }
    Ok(true)
}
