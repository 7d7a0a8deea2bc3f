//! GIT for diagonal torus actions on affine space and the toric geometry
//! used to describe quotients.

pub mod cone;
pub mod fiber;
pub mod toric;

use std::collections::BTreeSet;
use std::sync::Arc;

use rand::seq::index::sample;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub use cone::{dual_cone, hilbert_basis, quotient_fan, Cone, Fan, Hirzebruch, Vector};
pub use fiber::{central_fiber_ideal, verify_components, ComponentReport};
pub use toric::{orbit_face, toric_ideal};

use crate::arith::CycNum;
use crate::error::{Error, Result};
use crate::groebner::Ideal;
use crate::linalg::IntMatrix;
use crate::poly::{Poly, PolyRing};

/// A diagonal torus action: one character per variable, and a
/// linearization character.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightSystem {
    pub names: Vec<String>,
    pub weights: Vec<Vector>,
    pub chi: Vector,
}

impl WeightSystem {
    pub fn new(names: Vec<String>, weights: Vec<Vector>, chi: Vector) -> Result<WeightSystem> {
        if names.len() != weights.len() {
            return Err(Error::Dimension(format!("{} names for {} weights", names.len(), weights.len())));
        }
        if weights.iter().any(|w| w.len() != chi.len()) {
            return Err(Error::Dimension("weights and character have different ranks".into()));
        }
        if chi.iter().all(|&x| x == 0) {
            return Err(Error::Invalid("the linearization character is zero".into()));
        }
        Ok(WeightSystem { names, weights, chi })
    }

    pub fn rank(&self) -> usize {
        self.chi.len()
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn names_of(&self, support: &[usize]) -> Vec<String> {
        support.iter().map(|&i| self.names[i].clone()).collect()
    }

    pub fn with_chi(&self, chi: Vector) -> Result<WeightSystem> {
        WeightSystem::new(self.names.clone(), self.weights.clone(), chi)
    }
}

/// Parses `name: a, b, …` lines (`#` starts a comment).
pub fn parse_weight_file(text: &str, chi: Vector) -> Result<WeightSystem> {
    let mut names = Vec::new();
    let mut weights = Vec::new();
    for (ln, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let Some((name, rest)) = line.split_once(':') else {
            return Err(Error::Parse { line: ln + 1, col: 1, msg: "expected `name: w1, w2, ...`".into() });
        };
        let w = rest
            .split(',')
            .map(|s| s.trim().parse::<i64>().map_err(|e| Error::Parse { line: ln + 1, col: raw.find(':').unwrap_or(0) + 2, msg: e.to_string() }))
            .collect::<Result<Vec<_>>>()?;
        names.push(name.trim().to_string());
        weights.push(w);
    }
    WeightSystem::new(names, weights, chi)
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, k, &mut Vec::new(), &mut out);
    out
}

/// Inclusion-minimal sets `S` of variables with `χ` in the rational cone
/// spanned by their weights. A point is semistable exactly when its
/// nonvanishing coordinates contain one of them.
///
/// By Carathéodory a minimal `S` has linearly independent weights, so only
/// sets of size at most the rank are examined.
pub fn semistable_supports(ws: &WeightSystem) -> Result<Vec<Vec<usize>>> {
    let n = ws.weights.len();
    let mut found: Vec<Vec<usize>> = Vec::new();
    for k in 1..=ws.rank().min(n) {
        for s in subsets(n, k) {
            if found.iter().any(|f| f.iter().all(|i| s.contains(i))) {
                continue;
            }
            let c = Cone::new(ws.rank(), s.iter().map(|&i| ws.weights[i].clone()).collect())?;
            if !c.rays().is_empty() && c.contains(&ws.chi)? {
                found.push(s);
            }
        }
    }
    found.sort();
    Ok(found)
}

fn support_monomial(ring: &Arc<PolyRing>, s: &[usize]) -> Poly {
    s.iter().fold(Poly::one(ring), |acc, &i| &acc * &ring.var(i))
}

/// For each support `S`, whether every point of `V(ideal)` with the
/// coordinates of `S` nonzero has all coordinates of some support in `by`
/// nonzero, i.e. `∏_S x ∈ rad(ideal + (∏_T x : T ∈ by))`. Two support lists
/// describe the same semistable locus on `V(ideal)` when each is covered by
/// the other.
pub fn supports_covered(ideal: &Ideal, supports: &[Vec<usize>], by: &[Vec<usize>]) -> Result<Vec<bool>> {
    let ring = ideal.ring();
    let test = ideal.sum(&Ideal::new(ring, by.iter().map(|t| support_monomial(ring, t)).collect()))?;
    supports.iter().map(|s| test.radical_contains(&support_monomial(ring, s))).collect()
}

/// Whether the weights of the support generate the whole character
/// lattice, i.e. points with exactly these coordinates nonzero have trivial
/// stabilizer.
pub fn isotropy_trivial(ws: &WeightSystem, support: &[usize]) -> bool {
    let rows: Vec<Vec<i64>> = support.iter().map(|&i| ws.weights[i].clone()).collect();
    if rows.is_empty() {
        return false;
    }
    let f = IntMatrix::from_rows(&rows).smith_normal_form().invariant_factors();
    f.len() == ws.rank() && f.iter().all(|d| d.magnitude() == &num_bigint::BigUint::from(1u32))
}

/// A minor of the Jacobian that is a single term.
#[derive(Clone, Debug)]
pub struct MinorHit {
    /// 0-based variable (row) indices.
    pub rows: Vec<usize>,
    /// 0-based generator (column) indices.
    pub cols: Vec<usize>,
    pub value: Poly,
    /// Names of the variables occurring in the monomial.
    pub support: Vec<String>,
}

/// `∂ gens[j] / ∂ x_i`, rows indexed by variables.
pub fn jacobian(gens: &[Poly]) -> Vec<Vec<Poly>> {
    let ring = gens[0].ring();
    (0..ring.nvars()).map(|i| gens.iter().map(|g| g.derivative(i)).collect()).collect()
}

/// Determinant of the submatrix by expansion over column subsets.
pub fn minor_det(jac: &[Vec<Poly>], rows: &[usize], cols: &[usize]) -> Poly {
    use std::collections::HashMap;
    let ring = jac[0][0].ring().clone();
    let k = rows.len();
    let mut memo: HashMap<(usize, u32), Poly> = HashMap::new();
    fn go(r: usize, used: u32, jac: &[Vec<Poly>], rows: &[usize], cols: &[usize], ring: &Arc<PolyRing>, memo: &mut HashMap<(usize, u32), Poly>) -> Poly {
        if r == rows.len() {
            return Poly::one(ring);
        }
        if let Some(p) = memo.get(&(r, used)) {
            return p.clone();
        }
        let mut acc = Poly::zero(ring);
        let mut sign_pos = true;
        for (c, &col) in cols.iter().enumerate() {
            if used & (1 << c) != 0 {
                continue;
            }
            let e = &jac[rows[r]][col];
            if !e.is_zero() {
                let sub = go(r + 1, used | (1 << c), jac, rows, cols, ring, memo);
                let t = e * &sub;
                acc = if sign_pos { &acc + &t } else { &acc - &t };
            }
            sign_pos = !sign_pos;
        }
        memo.insert((r, used), acc.clone());
        acc
    }
    debug_assert_eq!(k, cols.len());
    go(0, 0, jac, rows, cols, &ring, &mut memo)
}

fn hit(jac: &[Vec<Poly>], rows: &[usize], cols: &[usize], allowed: &BTreeSet<usize>) -> Option<MinorHit> {
    let d = minor_det(jac, rows, cols);
    if d.num_terms() != 1 {
        return None;
    }
    let support = d.support();
    if !support.iter().all(|i| allowed.contains(i)) {
        return None;
    }
    let ring = d.ring().clone();
    Some(MinorHit { rows: rows.to_vec(), cols: cols.to_vec(), support: support.iter().map(|&i| ring.name(i).to_string()).collect(), value: d })
}

/// Options for [`monomial_minor_search`].
#[derive(Clone, Debug)]
pub struct MinorSearch {
    /// 0-based `(rows, cols)` tried first.
    pub seeds: Vec<(Vec<usize>, Vec<usize>)>,
    pub random_tries: usize,
    pub seed: u64,
}

impl Default for MinorSearch {
    fn default() -> Self {
        MinorSearch { seeds: Vec::new(), random_tries: 20_000, seed: 0 }
    }
}

/// Searches for `size × size` minors of the Jacobian of `gens` that are a
/// single nonzero term in the variables `allowed`. Tries the seeds, then a
/// backtracking search for lower-triangular arrangements with monomial
/// diagonal, then random row and column sets. Returns the first hit.
pub fn monomial_minor_search(gens: &[Poly], size: usize, allowed: &[usize], opts: &MinorSearch) -> Result<Option<MinorHit>> {
    let Some(first) = gens.first() else { return Ok(None) };
    let nv = first.ring().nvars();
    if size == 0 || size > nv.min(gens.len()) || size > 16 {
        return Err(Error::Dimension(format!("minor size {size} for a {nv}x{} Jacobian", gens.len())));
    }
    let jac = jacobian(gens);
    let allowed: BTreeSet<usize> = allowed.iter().copied().collect();
    for (r, c) in &opts.seeds {
        if r.len() == size && c.len() == size {
            if let Some(h) = hit(&jac, r, c, &allowed) {
                return Ok(Some(h));
            }
        }
    }
    // entries usable on a triangular diagonal
    let good = |i: usize, j: usize| {
        let e = &jac[i][j];
        e.num_terms() == 1 && e.support().iter().all(|v| allowed.contains(v))
    };
    let mut budget = 200_000usize;
    let mut rows = Vec::new();
    let mut cols = Vec::new();
    if let Some(h) = triangular(&jac, size, &good, &allowed, &mut rows, &mut cols, &mut budget) {
        return Ok(Some(h));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    for _ in 0..opts.random_tries {
        let mut r = sample(&mut rng, nv, size).into_vec();
        let mut c = sample(&mut rng, gens.len(), size).into_vec();
        r.sort_unstable();
        c.sort_unstable();
        if let Some(h) = hit(&jac, &r, &c, &allowed) {
            return Ok(Some(h));
        }
    }
    Ok(None)
}

fn triangular(
    jac: &[Vec<Poly>],
    size: usize,
    good: &dyn Fn(usize, usize) -> bool,
    allowed: &BTreeSet<usize>,
    rows: &mut Vec<usize>,
    cols: &mut Vec<usize>,
    budget: &mut usize,
) -> Option<MinorHit> {
    if rows.len() == size {
        let mut r = rows.clone();
        let mut c = cols.clone();
        r.sort_unstable();
        c.sort_unstable();
        return hit(jac, &r, &c, allowed);
    }
    for i in 0..jac.len() {
        if rows.contains(&i) {
            continue;
        }
        for j in 0..jac[0].len() {
            if *budget == 0 {
                return None;
            }
            *budget -= 1;
            if cols.contains(&j) || !good(i, j) {
                continue;
            }
            // the new column must vanish on earlier rows
            if rows.iter().any(|&r| !jac[r][j].is_zero()) {
                continue;
            }
            rows.push(i);
            cols.push(j);
            if let Some(h) = triangular(jac, size, good, allowed, rows, cols, budget) {
                return Some(h);
            }
            rows.pop();
            cols.pop();
        }
    }
    None
}

/// Sets the named variables to zero.
pub fn zero_out(gens: &[Poly], vars: &[usize]) -> Vec<Poly> {
    let Some(first) = gens.first() else { return Vec::new() };
    let zero = CycNum::zero(first.field());
    let values: Vec<(usize, CycNum)> = vars.iter().map(|&v| (v, zero.clone())).collect();
    gens.iter().map(|g| g.specialize(&values)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::CycField;

    fn d8_weights() -> WeightSystem {
        let w = "w01: 1, 0\nw02: 1, 1\nw03: 1, 0\nw04: 1, 0\nw12: 0, 1\nw13: 0, 0\nw14: 0, 0\nw23: 0, 1\nw24: 0, 1\nw34: 0, 0\nu0: -2, 0\nu2: 0, -2\n";
        parse_weight_file(w, vec![2, 1]).unwrap()
    }

    #[test]
    fn supports_and_isotropy() {
        let ws = d8_weights();
        let s = semistable_supports(&ws).unwrap();
        // the twelve pairs plus {w02, u2}
        assert_eq!(s.len(), 13);
        for t in &s {
            // {w02, u2} has weights of determinant −2
            assert_eq!(isotropy_trivial(&ws, t), t != &vec![1, 11], "{t:?}");
        }
        assert_eq!(semistable_supports(&ws.with_chi(vec![6, 3]).unwrap()).unwrap(), s);
        let bad = WeightSystem::new(vec!["a".into(), "b".into()], vec![vec![2, 0], vec![0, 2]], vec![1, 1]).unwrap();
        assert!(!isotropy_trivial(&bad, &[0, 1]));
        assert_eq!(semistable_supports(&bad.with_chi(vec![-1, 0]).unwrap()).unwrap(), Vec::<Vec<usize>>::new());
        let one = WeightSystem::new(vec!["a".into()], vec![vec![1]], vec![1]).unwrap();
        assert_eq!(semistable_supports(&one).unwrap(), vec![vec![0]]);
    }

    #[test]
    fn trivial_minor() {
        let r = PolyRing::new(&["x"], CycField::get(1));
        let h = monomial_minor_search(&[r.v("x")], 1, &[], &MinorSearch::default()).unwrap().unwrap();
        assert!(h.value.is_constant());
        assert!(h.support.is_empty());
    }
}
