//! Cox-ring generators of a symplectic resolution, the ideal of relations
//! among them, and bounded checks of the valuation-lifting condition.

mod lifting;

use std::fmt;
use std::sync::Arc;

use num_traits::{Signed, ToPrimitive};

pub use lifting::{
    lifted_valuation_ideal, minimal_monomials_at_least, valuation_ideal, verify_lifting_condition, LiftingOptions,
};

use crate::arith::CycNum;
use crate::error::{Error, Result};
use crate::groebner::{Ideal, RingMap};
use crate::invariants::{reynolds, AbRep, GradedGenerator};
use crate::linalg::{FieldMatrix, IntMatrix};
use crate::matgroup::{character_of, ActionConvention, FiniteMatrixGroup, ReflectionClass};
use crate::poly::{Monomial, Poly, PolyRing};
use crate::valuation::{intersection_numbers, lifted_valuation, CartanData, MonomialValuation};

/// Everything needed to synthesize and verify one Cox ring.
#[derive(Clone, Debug)]
pub struct CaseSpec {
    pub name: String,
    /// Coordinate ring of `V`.
    pub ring: Arc<PolyRing>,
    pub group: FiniteMatrixGroup,
    pub commutator: FiniteMatrixGroup,
    /// Elements generating `Ab(G)` with their orders there.
    pub ab_reps: Vec<AbRep>,
    /// Generators of `ℂ[V]^{[G,G]}` that are `Ab(G)`-eigenvectors.
    pub table: Vec<GradedGenerator>,
    /// One variable per table entry, in table order.
    pub w_names: Vec<String>,
    /// One variable per reflection class (the torus monomials).
    pub u_names: Vec<String>,
    /// Coordinates of the Picard torus, one per reflection class.
    pub t_names: Vec<String>,
    pub cartan: CartanData,
    /// Reflection classes aligned with the rows of the Cartan matrix.
    pub classes: Vec<ReflectionClass>,
    /// Known generators of `∩ K_T` over the members of each class.
    pub intersection_gens: Vec<Option<Vec<Poly>>>,
    pub conv: ActionConvention,
    w_ring: Arc<PolyRing>,
    wu_ring: Arc<PolyRing>,
}

impl CaseSpec {
    #[allow(clippy::too_many_arguments)]
    pub fn new(
        name: &str,
        ring: &Arc<PolyRing>,
        group: FiniteMatrixGroup,
        ab_reps: Vec<AbRep>,
        table: Vec<GradedGenerator>,
        w_names: Vec<String>,
        u_names: Vec<String>,
        t_names: Vec<String>,
        conv: ActionConvention,
    ) -> Result<CaseSpec> {
        if w_names.len() != table.len() {
            return Err(Error::Dimension(format!("{} w-names for {} table entries", w_names.len(), table.len())));
        }
        let cartan = CartanData::from_group(&group)?;
        let m = cartan.rank();
        if u_names.len() != m || t_names.len() != m {
            return Err(Error::Dimension(format!("{m} reflection classes need {m} u- and t-names")));
        }
        let commutator = group.commutator_subgroup();
        let mut spec = CaseSpec {
            name: name.into(),
            ring: ring.clone(),
            group,
            commutator,
            ab_reps,
            table,
            w_names: w_names.clone(),
            u_names: u_names.clone(),
            t_names,
            cartan: cartan.clone(),
            classes: Vec::new(),
            intersection_gens: vec![None; m],
            conv,
            w_ring: PolyRing::new(&w_names, ring.field()),
            wu_ring: PolyRing::new(&w_names.iter().chain(&u_names).cloned().collect::<Vec<_>>(), ring.field()),
        };
        spec.align_classes()?;
        Ok(spec)
    }

    fn align_classes(&mut self) -> Result<()> {
        let all = self.group.symplectic_reflections();
        self.classes = self
            .cartan
            .representatives
            .iter()
            .map(|r| all.iter().find(|c| c.members.contains(r)).cloned().ok_or(Error::NotReflection))
            .collect::<Result<_>>()?;
        Ok(())
    }

    /// Replaces the automatically assembled intersection matrix.
    pub fn with_cartan(mut self, cartan: CartanData) -> Result<CaseSpec> {
        if cartan.rank() != self.t_names.len() {
            return Err(Error::Dimension("Cartan rank differs from the number of torus coordinates".into()));
        }
        self.cartan = cartan;
        self.align_classes()?;
        Ok(self)
    }

    pub fn with_intersection_gens(mut self, class: usize, gens: Vec<Poly>) -> CaseSpec {
        self.intersection_gens[class] = Some(gens);
        self
    }

    pub fn field(&self) -> &'static crate::arith::CycField {
        self.ring.field()
    }

    pub fn class_count(&self) -> usize {
        self.cartan.rank()
    }

    /// The representative `T_i` of class `i`.
    pub fn class_matrix(&self, i: usize) -> &FieldMatrix {
        self.group.element(self.cartan.representatives[i])
    }

    /// `ν_i` for every class representative.
    pub fn valuations(&self) -> Result<Vec<MonomialValuation>> {
        (0..self.class_count()).map(|i| MonomialValuation::of_matrix(self.class_matrix(i), self.conv)).collect()
    }

    /// `a_ij` with `T_i φ_j = ζ_{r_i}^{a_ij} φ_j`.
    pub fn lifted_weights(&self) -> Result<Vec<Vec<u32>>> {
        let reps: Vec<(FieldMatrix, u32)> = (0..self.class_count()).map(|i| (self.class_matrix(i).clone(), self.cartan.orders[i])).collect();
        let polys: Vec<Poly> = self.table.iter().map(|g| g.poly.clone()).collect();
        lifted_valuation(&reps, &polys, self.conv)
    }

    /// `ℂ[w_1, …, w_n]`.
    pub fn w_ring(&self) -> &Arc<PolyRing> {
        &self.w_ring
    }

    /// `ℂ[w_1, …, w_n, u_1, …, u_m]`.
    pub fn embedding_ring(&self) -> &Arc<PolyRing> {
        &self.wu_ring
    }

    pub fn table_polys(&self) -> Vec<Poly> {
        self.table.iter().map(|g| g.poly.clone()).collect()
    }
}

/// A generator `φ·t^e` of the Cox ring inside `𝒫[t^{±1}]`; `φ = 1` for the
/// torus monomials.
#[derive(Clone, Debug, PartialEq)]
pub struct CoxGenerator {
    /// Name of `φ`, empty for the torus monomials.
    pub base_name: String,
    pub base: Poly,
    pub t_exponents: Vec<i64>,
}

impl CoxGenerator {
    /// `phi8*t`, `t1^-2*t2`, `phi1`.
    pub fn label(&self, t_names: &[String]) -> String {
        let mut parts: Vec<String> = Vec::new();
        if !self.base_name.is_empty() {
            parts.push(self.base_name.clone());
        }
        for (e, t) in self.t_exponents.iter().zip(t_names) {
            match e {
                0 => {}
                1 => parts.push(t.clone()),
                _ => parts.push(format!("{t}^{e}")),
            }
        }
        if parts.is_empty() {
            "1".into()
        } else {
            parts.join("*")
        }
    }

    /// `(base name, exponents)` for set comparisons.
    pub fn signature(&self) -> (String, Vec<i64>) {
        (self.base_name.clone(), self.t_exponents.clone())
    }
}

impl fmt::Display for CoxGenerator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<String> = (1..=self.t_exponents.len()).map(|i| format!("t{i}")).collect();
        write!(f, "{}", self.label(&names))
    }
}

/// Lifted table generators `φ_j ∏ t_i^{D̄_j.C_i}` in table order, followed by
/// the torus monomials `∏ t_j^{E_i.C_j}`.
pub fn synthesize_cox_generators(case: &CaseSpec) -> Result<Vec<CoxGenerator>> {
    if case.group.reflections_in_commutator() {
        return Err(Error::Hypothesis("the commutator subgroup contains a symplectic reflection".into()));
    }
    let vals = case.valuations()?;
    let mut out = Vec::new();
    for g in &case.table {
        let nu = vals.iter().map(|v| v.eval(&g.poly)).collect::<Result<Vec<_>>>()?;
        let e = intersection_numbers(&nu, &case.cartan)?;
        if e.iter().any(|&x| x < 0) {
            return Err(Error::Hypothesis(format!("{} has negative intersection numbers {e:?}", g.name)));
        }
        out.push(CoxGenerator { base_name: g.name.clone(), base: g.poly.clone(), t_exponents: e });
    }
    for i in 0..case.class_count() {
        let row = (0..case.class_count()).map(|j| case.cartan.matrix.get(i, j).to_i64().expect("small")).collect();
        out.push(CoxGenerator { base_name: String::new(), base: Poly::one(&case.ring), t_exponents: row });
    }
    Ok(out)
}

/// `|Ab(G)|` against `|det (E_i.C_j)|`; equality means the classes of the
/// exceptional divisors span the class group.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IndexCheck {
    pub ab_order: u64,
    pub det_abs: u64,
    pub pass: bool,
}

pub fn class_group_index_check(ab_order: u64, cartan: &IntMatrix) -> IndexCheck {
    let det_abs = cartan.det().abs().to_u64().expect("small determinant");
    IndexCheck { ab_order, det_abs, pass: ab_order == det_abs }
}

/// Ideal of `ker(T − id)`, generated by linear forms.
pub fn fixed_subspace_ideal(ring: &Arc<PolyRing>, t: &FieldMatrix) -> Result<Ideal> {
    let n = t.rows();
    if n != ring.nvars() {
        return Err(Error::Dimension(format!("{n}x{n} matrix on {} variables", ring.nvars())));
    }
    let m = t.sub(&FieldMatrix::identity(t.field(), n));
    let (r, piv) = m.rref();
    if n < 2 || piv.len() != 2 {
        return Err(Error::NotReflection);
    }
    let gens = (0..piv.len())
        .map(|i| {
            let terms = (0..n).filter(|&j| !r.get(i, j).is_zero()).map(|j| {
                let mut e = Monomial::one(n);
                e.0[j] = 1;
                (e, r.get(i, j).clone())
            });
            Poly::from_terms(ring, terms.collect::<Vec<_>>())
        })
        .collect();
    Ok(Ideal::new(ring, gens))
}

/// `κ: w_j ↦ φ_j`, graded by the degrees of the `φ_j`.
pub fn kappa(case: &CaseSpec) -> Result<RingMap> {
    let w = case.w_ring();
    let degs: Vec<u32> = case.table.iter().map(|g| g.degree).collect();
    Ok(RingMap::new(w, &case.ring, case.table_polys())?.with_weights(degs, vec![1; case.ring.nvars()]))
}

/// `Ψ: w_j ↦ φ̄_j, u_i ↦ ∏ t_j^{E_i.C_j}` into `ℂ[V][t^{±1}]`, with the
/// inverse `t_i_inv` as extra variables.
pub fn embedding_map(case: &CaseSpec, gens: &[CoxGenerator]) -> Result<RingMap> {
    let n = case.table.len();
    let m = case.class_count();
    if gens.len() != n + m {
        return Err(Error::Dimension(format!("{} generators for {} variables", gens.len(), n + m)));
    }
    let base = case.ring.extended(&case.t_names);
    let tn: Vec<&str> = case.t_names.iter().map(|s| s.as_str()).collect();
    let (target, pairs) = RingMap::laurent_ring(&base, &tn)?;
    let images = gens
        .iter()
        .map(|g| {
            let mut e = Monomial::one(target.nvars());
            for (k, &x) in g.t_exponents.iter().enumerate() {
                let (v, vi) = pairs[k];
                if x >= 0 {
                    e.0[v] = x as u16;
                } else {
                    e.0[vi] = (-x) as u16;
                }
            }
            let t = Poly::monomial(&target, e, CycNum::one(target.field()));
            Ok(&g.base.to_ring(&target)? * &t)
        })
        .collect::<Result<Vec<_>>>()?;
    let mut sw: Vec<u32> = case.table.iter().map(|g| g.degree).collect();
    sw.extend(std::iter::repeat_n(0, m));
    let mut tw = vec![1u32; case.ring.nvars()];
    tw.extend(std::iter::repeat_n(0, 2 * m));
    Ok(RingMap::new(case.embedding_ring(), &target, images)?.with_inverses(pairs).with_weights(sw, tw))
}

/// `ker Ψ`: the ideal of `Spec` of the Cox ring in `ℂ^{n+m}`.
pub fn embedding_ideal(case: &CaseSpec, gens: &[CoxGenerator]) -> Result<Ideal> {
    embedding_map(case, gens)?.kernel()
}

/// `Ab(G)`-character exponents of `f ∈ 𝒫` when `f` is homogeneous for the
/// class-group grading, `None` when it mixes characters.
pub fn cl_y_homogeneity_check(case: &CaseSpec, f: &Poly) -> Result<Option<Vec<u32>>> {
    if reynolds(f, &case.commutator) != *f {
        return Err(Error::Invalid(format!("{f} is not invariant under the commutator subgroup")));
    }
    let mut out = Vec::new();
    for r in &case.ab_reps {
        if f.is_zero() {
            out.push(0);
            continue;
        }
        match character_of(&r.matrix, f, case.conv) {
            Ok(c) => out.push(c.discrete_log(r.order).ok_or_else(|| Error::NotEigenvector(format!("eigenvalue {c}")))?),
            Err(Error::NotEigenvector(_)) => return Ok(None),
            Err(e) => return Err(e),
        }
    }
    Ok(Some(out))
}
