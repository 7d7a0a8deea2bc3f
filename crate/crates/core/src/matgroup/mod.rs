//! Finite matrix groups over ℚ(ζ_N): closure, conjugacy classes,
//! commutator subgroup, abelianization and symplectic reflections.

use std::collections::{HashMap, VecDeque};
use std::fmt;

use num_traits::ToPrimitive;

use crate::arith::{CycField, CycNum};
use crate::error::{Error, Result};
use crate::linalg::{linear_forms, FieldMatrix, IntMatrix};
use crate::poly::Poly;

/// Default bound on the number of elements produced by [`group_closure`].
pub const DEFAULT_CLOSURE_BOUND: usize = 512;

/// How a matrix acts on polynomial functions.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub enum ActionConvention {
    /// `(g·f)(x) = f(g x)`.
    #[default]
    Direct,
    /// `(g·f)(x) = f(g⁻¹ x)`.
    Inverse,
}

impl ActionConvention {
    pub fn name(self) -> &'static str {
        match self {
            ActionConvention::Direct => "direct",
            ActionConvention::Inverse => "inverse",
        }
    }

    pub fn parse(s: &str) -> Result<Self> {
        match s {
            "direct" => Ok(ActionConvention::Direct),
            "inverse" => Ok(ActionConvention::Inverse),
            _ => Err(Error::Invalid(format!("unknown action convention {s:?}"))),
        }
    }
}

/// `g·f` under the given convention. `g` must be invertible for
/// [`ActionConvention::Inverse`].
pub fn act(g: &FieldMatrix, f: &Poly, conv: ActionConvention) -> Result<Poly> {
    let m = match conv {
        ActionConvention::Direct => g.clone(),
        ActionConvention::Inverse => g.inverse()?,
    };
    if m.rows() != f.ring().nvars() {
        return Err(Error::Dimension(format!("{}x{} matrix on {} variables", m.rows(), m.cols(), f.ring().nvars())));
    }
    Ok(f.substitute(&linear_forms(f.ring(), &m)))
}

/// The scalar `λ` with `g·f = λ f`.
pub fn character_of(g: &FieldMatrix, f: &Poly, conv: ActionConvention) -> Result<CycNum> {
    if f.is_zero() {
        return Err(Error::NotEigenvector("zero polynomial".into()));
    }
    let gf = act(g, f, conv)?;
    gf.proportional_to(f).ok_or_else(|| Error::NotEigenvector(f.to_string()))
}

/// A closed finite set of invertible matrices.
///
/// Elements are stored in breadth-first discovery order, identity first and
/// then the generators in the order given.
#[derive(Clone)]
pub struct FiniteMatrixGroup {
    gens: Vec<FieldMatrix>,
    elements: Vec<FieldMatrix>,
    index: HashMap<FieldMatrix, usize>,
    dim: usize,
    field: &'static CycField,
}

/// Breadth-first closure of `gens` under multiplication.
pub fn group_closure(gens: &[FieldMatrix], bound: usize) -> Result<FiniteMatrixGroup> {
    let first = gens.first().ok_or_else(|| Error::Invalid("no generators".into()))?;
    let dim = first.rows();
    let field = first.field();
    for g in gens {
        if g.rows() != dim || !g.is_square() {
            return Err(Error::Dimension("generators of different sizes".into()));
        }
        if g.det()?.is_zero() {
            return Err(Error::SingularMatrix);
        }
    }
    let mut elements = vec![FieldMatrix::identity(field, dim)];
    let mut index = HashMap::new();
    index.insert(elements[0].clone(), 0);
    let mut queue = VecDeque::from([0usize]);
    while let Some(i) = queue.pop_front() {
        for g in gens {
            let p = elements[i].mul(g)?;
            if !index.contains_key(&p) {
                if elements.len() == bound {
                    return Err(Error::BoundExceeded(bound));
                }
                index.insert(p.clone(), elements.len());
                queue.push_back(elements.len());
                elements.push(p);
            }
        }
    }
    Ok(FiniteMatrixGroup { gens: gens.to_vec(), elements, index, dim, field })
}

/// A conjugacy class of symplectic reflections.
#[derive(Clone, Debug)]
pub struct ReflectionClass {
    /// Index of the chosen representative `T_i`.
    pub representative: usize,
    pub members: Vec<usize>,
    /// Order `r_i` of the representative.
    pub order: u32,
}

/// `G/[G,G] ≅ ∏ ℤ_{d_i}`.
#[derive(Clone, Debug)]
pub struct Abelianization {
    /// Invariant factors `d_1 | d_2 | …`, all greater than one.
    pub invariants: Vec<u64>,
    /// Coordinates in `∏ ℤ_{d_i}` of each group element.
    pub coords: Vec<Vec<u64>>,
}

impl Abelianization {
    pub fn order(&self) -> u64 {
        self.invariants.iter().product()
    }

    /// `ℤ2 x ℤ2`-style name; `1` for the trivial group.
    pub fn structure(&self) -> String {
        if self.invariants.is_empty() {
            return "1".into();
        }
        self.invariants.iter().map(|d| format!("Z{d}")).collect::<Vec<_>>().join(" x ")
    }
}

impl FiniteMatrixGroup {
    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn field(&self) -> &'static CycField {
        self.field
    }

    pub fn generators(&self) -> &[FieldMatrix] {
        &self.gens
    }

    pub fn elements(&self) -> &[FieldMatrix] {
        &self.elements
    }

    pub fn element(&self, i: usize) -> &FieldMatrix {
        &self.elements[i]
    }

    pub fn index_of(&self, m: &FieldMatrix) -> Option<usize> {
        self.index.get(m).copied()
    }

    pub fn contains(&self, m: &FieldMatrix) -> bool {
        self.index.contains_key(m)
    }

    pub fn mul(&self, i: usize, j: usize) -> usize {
        let p = self.elements[i].mul(&self.elements[j]).expect("square");
        self.index[&p]
    }

    pub fn inverse(&self, i: usize) -> usize {
        // g^{-1} = g^{ord-1}; avoids a field inversion
        let mut cur = i;
        loop {
            let next = self.mul(cur, i);
            if next == 0 {
                return cur;
            }
            cur = next;
        }
    }

    pub fn element_order(&self, i: usize) -> u32 {
        let mut cur = i;
        let mut k = 1;
        while cur != 0 {
            cur = self.mul(cur, i);
            k += 1;
        }
        k
    }

    pub fn is_abelian(&self) -> bool {
        self.gens.iter().all(|a| self.gens.iter().all(|b| a.mul(b).unwrap() == b.mul(a).unwrap()))
    }

    /// Classes ordered by their first element; members sorted by index.
    pub fn conjugacy_classes(&self) -> Vec<Vec<usize>> {
        let n = self.order();
        let inv: Vec<usize> = (0..n).map(|g| self.inverse(g)).collect();
        let mut class_of = vec![usize::MAX; n];
        let mut classes = Vec::new();
        for x in 0..n {
            if class_of[x] != usize::MAX {
                continue;
            }
            let id = classes.len();
            let mut members = Vec::new();
            for g in 0..n {
                let c = self.mul(self.mul(g, x), inv[g]);
                if class_of[c] == usize::MAX {
                    class_of[c] = id;
                    members.push(c);
                }
            }
            members.sort_unstable();
            classes.push(members);
        }
        classes
    }

    /// Closure of all commutators `g h g⁻¹ h⁻¹`.
    pub fn commutator_subgroup(&self) -> FiniteMatrixGroup {
        let n = self.order();
        let inv: Vec<usize> = (0..n).map(|g| self.inverse(g)).collect();
        let mut seen = vec![false; n];
        let mut gens = Vec::new();
        for g in 0..n {
            for h in 0..n {
                let c = self.mul(self.mul(g, h), self.mul(inv[g], inv[h]));
                if !seen[c] {
                    seen[c] = true;
                    if c != 0 {
                        gens.push(self.elements[c].clone());
                    }
                }
            }
        }
        if gens.is_empty() {
            gens.push(self.elements[0].clone());
        }
        let sub = group_closure(&gens, n).expect("subgroup of a finite group");
        // keep only the generators actually needed, for readable output
        let mut needed: Vec<FieldMatrix> = Vec::new();
        for g in &gens {
            let cur = if needed.is_empty() { 1 } else { group_closure(&needed, n).unwrap().order() };
            if cur == sub.order() {
                break;
            }
            let mut trial = needed.clone();
            trial.push(g.clone());
            if group_closure(&trial, n).unwrap().order() > cur {
                needed = trial;
            }
        }
        if needed.is_empty() {
            needed.push(self.elements[0].clone());
        }
        group_closure(&needed, n).expect("subgroup of a finite group")
    }

    /// Whether every element of `sub` lies in `self` and `g sub g⁻¹ = sub`.
    pub fn is_normal_subgroup(&self, sub: &FiniteMatrixGroup) -> bool {
        if !sub.elements.iter().all(|h| self.contains(h)) {
            return false;
        }
        self.gens.iter().all(|g| {
            let gi = g.inverse().expect("invertible");
            sub.gens.iter().all(|h| sub.contains(&g.mul(h).unwrap().mul(&gi).unwrap()))
        })
    }

    /// Structure of `G/[G,G]` via the Smith form of the relation lattice
    /// among the images of the generators.
    pub fn abelianization(&self) -> Result<Abelianization> {
        let h = self.commutator_subgroup();
        let n = self.order();
        // coset id of each element: smallest index in g·H
        let coset: Vec<usize> = (0..n)
            .map(|g| h.elements.iter().map(|x| self.index[&self.elements[g].mul(x).unwrap()]).min().unwrap())
            .collect();
        let gen_idx: Vec<usize> = self.gens.iter().map(|g| self.index[g]).collect();
        let s = gen_idx.len();
        let ords: Vec<u64> = gen_idx
            .iter()
            .map(|&g| {
                let mut cur = coset[g];
                let mut k = 1u64;
                while cur != coset[0] {
                    cur = coset[self.mul(cur, g)];
                    k += 1;
                }
                k
            })
            .collect();
        let boxsize: u64 = ords.iter().product();
        if boxsize > 1 << 20 {
            return Err(Error::ResourceLimit(format!("abelianization search box of size {boxsize}")));
        }
        // relations: r_i e_i and every box vector mapping to the trivial coset;
        // also record one exponent vector per coset
        let mut rels: Vec<Vec<i64>> = Vec::new();
        for (i, &o) in ords.iter().enumerate() {
            let mut v = vec![0i64; s];
            v[i] = o as i64;
            rels.push(v);
        }
        let mut word_of: HashMap<usize, Vec<i64>> = HashMap::new();
        let mut e = vec![0u64; s];
        loop {
            let mut cur = 0usize;
            for (i, &k) in e.iter().enumerate() {
                for _ in 0..k {
                    cur = self.mul(cur, gen_idx[i]);
                }
            }
            let c = coset[cur];
            let ev: Vec<i64> = e.iter().map(|&x| x as i64).collect();
            if c == coset[0] && e.iter().any(|&x| x > 0) {
                rels.push(ev.clone());
            }
            word_of.entry(c).or_insert(ev);
            // odometer
            let mut i = 0;
            while i < s {
                e[i] += 1;
                if e[i] < ords[i] {
                    break;
                }
                e[i] = 0;
                i += 1;
            }
            if i == s {
                break;
            }
        }
        let snf = IntMatrix::from_rows(&rels).smith_normal_form();
        let diag: Vec<u64> = (0..s).map(|i| snf.d.get(i, i).to_u64().expect("small invariant factor")).collect();
        let keep: Vec<usize> = (0..s).filter(|&i| diag[i] > 1).collect();
        let v = snf.v.to_i64_rows();
        let coords = (0..n)
            .map(|g| {
                let w = &word_of[&coset[g]];
                keep.iter()
                    .map(|&j| {
                        let x: i64 = (0..s).map(|i| w[i] * v[i][j]).sum();
                        x.rem_euclid(diag[j] as i64) as u64
                    })
                    .collect()
            })
            .collect();
        Ok(Abelianization { invariants: keep.iter().map(|&i| diag[i]).collect(), coords })
    }

    /// Dimension of the fixed space `ker(g − id)`.
    pub fn fixed_dim(&self, i: usize) -> usize {
        let g = &self.elements[i];
        g.sub(&FieldMatrix::identity(self.field, self.dim)).kernel().len()
    }

    pub fn is_symplectic_reflection(&self, i: usize) -> bool {
        i != 0 && self.dim >= 2 && self.fixed_dim(i) == self.dim - 2
    }

    /// Symplectic reflections grouped by conjugacy class.
    ///
    /// Representatives are, in order of preference: a generator, a power of a
    /// generator, the element discovered first.
    pub fn symplectic_reflections(&self) -> Vec<ReflectionClass> {
        let mut preferred: Vec<usize> = Vec::new();
        for g in &self.gens {
            let gi = self.index[g];
            let mut cur = gi;
            while cur != 0 {
                if !preferred.contains(&cur) {
                    preferred.push(cur);
                }
                cur = self.mul(cur, gi);
            }
        }
        self.conjugacy_classes()
            .into_iter()
            .filter(|c| self.is_symplectic_reflection(c[0]))
            .map(|members| {
                let representative = preferred.iter().copied().find(|p| members.contains(p)).unwrap_or(members[0]);
                ReflectionClass { representative, order: self.element_order(representative), members }
            })
            .collect()
    }

    /// Whether `[G,G]` contains a symplectic reflection.
    pub fn reflections_in_commutator(&self) -> bool {
        let h = self.commutator_subgroup();
        (1..h.order()).any(|i| h.is_symplectic_reflection(i))
    }

    /// Whether every generator satisfies `gᵀ Ω g = Ω`.
    pub fn preserves_form(&self, omega: &FieldMatrix) -> bool {
        self.gens.iter().all(|g| g.transpose().mul(omega).unwrap().mul(g).unwrap() == *omega)
    }
}

impl fmt::Debug for FiniteMatrixGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FiniteMatrixGroup(order {}, dim {})", self.order(), self.dim)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::PolyRing;

    fn field() -> &'static CycField {
        CycField::get(12)
    }

    fn d8() -> FiniteMatrixGroup {
        let f = field();
        let t0 = FieldMatrix::from_ints(f, &[&[1, 0, 0, 0], &[0, -1, 0, 0], &[0, 0, 1, 0], &[0, 0, 0, -1]]);
        let t2 = FieldMatrix::from_ints(f, &[&[0, 1, 0, 0], &[1, 0, 0, 0], &[0, 0, 0, 1], &[0, 0, 1, 0]]);
        group_closure(&[t0, t2], DEFAULT_CLOSURE_BOUND).unwrap()
    }

    #[test]
    fn trivial_and_bound() {
        let f = field();
        let g = group_closure(&[FieldMatrix::identity(f, 2)], 8).unwrap();
        assert_eq!(g.order(), 1);
        assert_eq!(g.abelianization().unwrap().order(), 1);
        let z = f.zeta_pow(1);
        let rot = FieldMatrix::diagonal(&[z.clone(), z.inverse().unwrap()]);
        assert!(matches!(group_closure(std::slice::from_ref(&rot), 5), Err(Error::BoundExceeded(5))));
        assert_eq!(group_closure(&[rot], 12).unwrap().order(), 12);
    }

    #[test]
    fn dihedral_facts() {
        let g = d8();
        assert_eq!(g.order(), 8);
        let h = g.commutator_subgroup();
        assert_eq!(h.order(), 2);
        assert!(g.is_normal_subgroup(&h));
        let ab = g.abelianization().unwrap();
        assert_eq!(ab.invariants, vec![2, 2]);
        let refl = g.symplectic_reflections();
        assert_eq!(refl.len(), 2);
        assert_eq!(refl[0].representative, 1);
        assert_eq!(refl[1].representative, 2);
        assert!(refl.iter().all(|c| c.members.len() == 2 && c.order == 2));
        assert!(!g.reflections_in_commutator());
        let sizes: usize = g.conjugacy_classes().iter().map(|c| c.len()).sum();
        assert_eq!(sizes, 8);
    }

    #[test]
    fn characters() {
        let g = d8();
        let r = PolyRing::numbered("x", 4, field());
        let phi01 = r.parse("-2*(x1*x4 + x2*x3)").unwrap();
        let conv = ActionConvention::Direct;
        assert_eq!(character_of(g.element(1), &phi01, conv).unwrap(), CycNum::from_int(field(), -1));
        assert_eq!(character_of(g.element(2), &phi01, conv).unwrap(), CycNum::one(field()));
        assert!(matches!(character_of(g.element(2), &r.parse("x1").unwrap(), conv), Err(Error::NotEigenvector(_))));
    }
}
