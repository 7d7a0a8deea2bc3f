//! Gröbner bases over ℚ(ζ_N) and the ideal operations built from them.

mod buchberger;
pub mod cache;
mod order;
mod ringmap;
mod subalgebra;

use std::sync::{Arc, OnceLock, RwLock};

pub use buchberger::{groebner_basis, normal_form_by, GbOptions, GbStats};
pub use order::MonomialOrder;
pub use ringmap::RingMap;
pub use subalgebra::{subalgebra_membership, SubalgebraChecker};

use crate::arith::CycNum;
use crate::error::{Error, Result};
use crate::poly::{Poly, PolyRing};

fn defaults() -> &'static RwLock<GbOptions> {
    static D: OnceLock<RwLock<GbOptions>> = OnceLock::new();
    D.get_or_init(|| RwLock::new(GbOptions::default()))
}

/// Resource limits used when a caller does not pass explicit options.
pub fn default_options() -> GbOptions {
    defaults().read().expect("options poisoned").clone()
}

pub fn set_default_options(o: GbOptions) {
    *defaults().write().expect("options poisoned") = o;
}

/// Cached reduced Gröbner basis of `gens`.
pub fn cached_groebner(gens: &[Poly], ord: &MonomialOrder, opts: &GbOptions) -> Result<Arc<Vec<Poly>>> {
    let key = cache::cache_key(gens, ord, opts);
    if let Some(b) = cache::lookup(&key) {
        return Ok(b);
    }
    if let Some(first) = gens.first() {
        if let Some(b) = cache::disk_lookup(&key, first.ring()) {
            let b = Arc::new(b);
            cache::store(key, b.clone());
            return Ok(b);
        }
    }
    let (b, _) = groebner_basis(gens, ord, opts)?;
    cache::disk_store(&key, &b);
    let b = Arc::new(b);
    cache::store(key, b.clone());
    Ok(b)
}

/// An ideal given by generators, with a lazily computed grevlex basis.
#[derive(Clone)]
pub struct Ideal {
    ring: Arc<PolyRing>,
    gens: Vec<Poly>,
    gb: OnceLock<Arc<Vec<Poly>>>,
}

impl std::fmt::Debug for Ideal {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "(")?;
        for (i, g) in self.gens.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{g}")?;
        }
        write!(f, ")")
    }
}

impl Ideal {
    pub fn new(ring: &Arc<PolyRing>, gens: Vec<Poly>) -> Ideal {
        let gens = gens.into_iter().filter(|g| !g.is_zero()).collect::<Vec<_>>();
        debug_assert!(gens.iter().all(|g| g.ring().same(ring)));
        Ideal { ring: ring.clone(), gens, gb: OnceLock::new() }
    }

    pub fn zero(ring: &Arc<PolyRing>) -> Ideal {
        Ideal::new(ring, Vec::new())
    }

    pub fn parse<S: AsRef<str>>(ring: &Arc<PolyRing>, gens: &[S]) -> Result<Ideal> {
        let g = gens.iter().map(|s| ring.parse(s.as_ref())).collect::<Result<Vec<_>>>()?;
        Ok(Ideal::new(ring, g))
    }

    pub fn ring(&self) -> &Arc<PolyRing> {
        &self.ring
    }

    pub fn gens(&self) -> &[Poly] {
        &self.gens
    }

    /// Reduced grevlex Gröbner basis.
    pub fn groebner(&self) -> Result<Arc<Vec<Poly>>> {
        if let Some(b) = self.gb.get() {
            return Ok(b.clone());
        }
        let b = cached_groebner(&self.gens, &MonomialOrder::Grevlex, &default_options())?;
        let _ = self.gb.set(b.clone());
        Ok(b)
    }

    pub fn groebner_with(&self, ord: &MonomialOrder, opts: &GbOptions) -> Result<Arc<Vec<Poly>>> {
        if *ord == MonomialOrder::Grevlex && !opts.truncate {
            return self.groebner();
        }
        cached_groebner(&self.gens, ord, opts)
    }

    /// Remainder of `f` modulo the reduced grevlex basis.
    pub fn normal_form(&self, f: &Poly) -> Result<Poly> {
        self.check(f)?;
        Ok(normal_form_by(f, &self.groebner()?, &MonomialOrder::Grevlex))
    }

    pub fn contains(&self, f: &Poly) -> Result<bool> {
        Ok(self.normal_form(f)?.is_zero())
    }

    pub fn contains_ideal(&self, other: &Ideal) -> Result<bool> {
        self.check_ideal(other)?;
        for g in &other.gens {
            if !self.contains(g)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Mutual containment.
    pub fn equals(&self, other: &Ideal) -> Result<bool> {
        Ok(self.contains_ideal(other)? && other.contains_ideal(self)?)
    }

    /// First generator of `other` not in `self`, if any.
    pub fn missing_from(&self, other: &Ideal) -> Result<Option<Poly>> {
        self.check_ideal(other)?;
        for g in &other.gens {
            if !self.contains(g)? {
                return Ok(Some(g.clone()));
            }
        }
        Ok(None)
    }

    pub fn is_unit(&self) -> Result<bool> {
        let b = self.groebner()?;
        Ok(b.len() == 1 && b[0].is_constant())
    }

    pub fn is_homogeneous(&self) -> bool {
        self.gens.iter().all(|g| g.is_homogeneous())
    }

    fn check(&self, f: &Poly) -> Result<()> {
        if !f.ring().same(&self.ring) {
            return Err(Error::RingMismatch(format!("{:?} vs {:?}", f.ring(), self.ring)));
        }
        Ok(())
    }

    fn check_ideal(&self, o: &Ideal) -> Result<()> {
        if !o.ring.same(&self.ring) {
            return Err(Error::RingMismatch(format!("{:?} vs {:?}", o.ring, self.ring)));
        }
        Ok(())
    }

    pub fn sum(&self, other: &Ideal) -> Result<Ideal> {
        self.check_ideal(other)?;
        let mut g = self.gens.clone();
        g.extend(other.gens.iter().cloned());
        Ok(Ideal::new(&self.ring, g))
    }

    pub fn product(&self, other: &Ideal) -> Result<Ideal> {
        self.check_ideal(other)?;
        let mut g = Vec::new();
        for a in &self.gens {
            for b in &other.gens {
                g.push(a * b);
            }
        }
        Ok(Ideal::new(&self.ring, dedup(g)))
    }

    /// `I^d`, generated by all `d`-fold products of generators.
    pub fn power(&self, d: u32) -> Ideal {
        assert!(d >= 1, "ideal power needs d >= 1");
        let n = self.gens.len();
        let mut out = Vec::new();
        // multisets of size d from n generators, as non-decreasing index lists
        let mut idx = vec![0usize; d as usize];
        if n == 0 {
            return Ideal::zero(&self.ring);
        }
        loop {
            let mut p = Poly::one(&self.ring);
            for &i in &idx {
                p = &p * &self.gens[i];
            }
            out.push(p);
            let mut k = d as usize;
            while k > 0 && idx[k - 1] == n - 1 {
                k -= 1;
            }
            if k == 0 {
                break;
            }
            idx[k - 1] += 1;
            let v = idx[k - 1];
            for x in idx.iter_mut().skip(k) {
                *x = v;
            }
        }
        Ideal::new(&self.ring, dedup(out))
    }

    /// `I ∩ J` by eliminating `t` from `t·I + (1 − t)·J`.
    pub fn intersect(&self, other: &Ideal) -> Result<Ideal> {
        self.check_ideal(other)?;
        if self.gens.is_empty() || other.gens.is_empty() {
            return Ok(Ideal::zero(&self.ring));
        }
        let t = self.ring.fresh_names("t", 1);
        let mut names = t.clone();
        names.extend(self.ring.names().iter().cloned());
        let big = PolyRing::new(&names, self.ring.field());
        let shift: Vec<usize> = (1..=self.ring.nvars()).collect();
        let tv = Poly::var(&big, 0);
        let one_minus_t = &Poly::one(&big) - &tv;
        let mut g = Vec::new();
        for f in &self.gens {
            g.push(&tv * &f.map_vars(&big, &shift));
        }
        for f in &other.gens {
            g.push(&one_minus_t * &f.map_vars(&big, &shift));
        }
        let mut weights = vec![1u32; big.nvars()];
        if self.is_homogeneous() && other.is_homogeneous() {
            weights[0] = 0;
        }
        let elim = eliminate_prefix(&g, 1, &weights)?;
        let back: Vec<usize> = std::iter::once(usize::MAX).chain(0..self.ring.nvars()).collect();
        Ok(Ideal::new(&self.ring, elim.iter().map(|p| drop_prefix(p, &self.ring, &back)).collect()))
    }

    /// Intersection of several ideals.
    pub fn intersect_all(ideals: &[Ideal]) -> Result<Ideal> {
        let mut it = ideals.iter();
        let mut acc = it.next().expect("at least one ideal").clone();
        for j in it {
            acc = acc.intersect(j)?;
        }
        Ok(acc)
    }

    /// `I ∩ k[remaining variables]`, returned in the same ring.
    pub fn eliminate(&self, vars: &[usize]) -> Result<Ideal> {
        self.eliminate_weighted(vars, None)
    }

    pub fn eliminate_weighted(&self, vars: &[usize], weights: Option<&[u32]>) -> Result<Ideal> {
        if vars.is_empty() {
            return Ok(self.clone());
        }
        let n = self.ring.nvars();
        let mut perm: Vec<usize> = vars.to_vec();
        perm.extend((0..n).filter(|i| !vars.contains(i)));
        // perm[new] = old; build inverse map old -> new
        let mut to_new = vec![0usize; n];
        for (new, &old) in perm.iter().enumerate() {
            to_new[old] = new;
        }
        let names: Vec<String> = perm.iter().map(|&i| self.ring.name(i).to_string()).collect();
        let big = PolyRing::new(&names, self.ring.field());
        let g: Vec<Poly> = self.gens.iter().map(|f| f.map_vars(&big, &to_new)).collect();
        let w: Vec<u32> = match weights {
            Some(w) => perm.iter().map(|&i| w[i]).collect(),
            None => vec![1; n],
        };
        let elim = eliminate_prefix(&g, vars.len(), &w)?;
        Ok(Ideal::new(&self.ring, elim.iter().map(|p| p.map_vars(&self.ring, &perm)).collect()))
    }

    /// Whether some power of `f` lies in the ideal (Rabinowitsch trick).
    pub fn radical_contains(&self, f: &Poly) -> Result<bool> {
        self.check(f)?;
        if f.is_zero() {
            return Ok(true);
        }
        let y = self.ring.fresh_names("y", 1);
        let big = self.ring.extended(&y);
        let map: Vec<usize> = (0..self.ring.nvars()).collect();
        let yv = Poly::var(&big, self.ring.nvars());
        let mut g: Vec<Poly> = self.gens.iter().map(|p| p.map_vars(&big, &map)).collect();
        g.push(&Poly::one(&big) - &(&yv * &f.map_vars(&big, &map)));
        let b = cached_groebner(&g, &MonomialOrder::Grevlex, &default_options())?;
        Ok(b.len() == 1 && b[0].is_constant())
    }

    /// Krull dimension of the quotient ring: the size of a largest set of
    /// variables containing no leading monomial of the Gröbner basis.
    pub fn krull_dimension(&self) -> Result<usize> {
        let b = self.groebner()?;
        if b.len() == 1 && b[0].is_constant() {
            return Err(Error::UnitIdeal);
        }
        let n = self.ring.nvars();
        let leads: Vec<u64> = b
            .iter()
            .map(|p| {
                let (m, _) = p.leading_term(&MonomialOrder::Grevlex).expect("nonzero");
                m.support().iter().fold(0u64, |acc, &i| acc | (1 << i))
            })
            .collect();
        assert!(n <= 64, "krull_dimension supports at most 64 variables");
        let mut best = 0;
        independent_search(0, n, 0, 0, &leads, &mut best);
        Ok(best)
    }

    /// Generators with the same ring, as strings, for reports.
    pub fn gen_strings(&self) -> Vec<String> {
        self.gens.iter().map(|g| g.to_string()).collect()
    }

    /// Scalar multiple-free copy: each generator made monic under grevlex.
    pub fn monic_gens(&self) -> Vec<Poly> {
        self.gens.iter().map(|g| g.monic(&MonomialOrder::Grevlex)).collect()
    }

    /// Substitutes constants for some variables in every generator.
    pub fn specialize(&self, values: &[(usize, CycNum)]) -> Ideal {
        Ideal::new(&self.ring, self.gens.iter().map(|g| g.specialize(values)).collect())
    }
}

fn independent_search(i: usize, n: usize, set: u64, size: usize, leads: &[u64], best: &mut usize) {
    if size + (n - i) <= *best {
        return;
    }
    if i == n {
        *best = size;
        return;
    }
    let with = set | (1 << i);
    if leads.iter().all(|&l| l & !with != 0) {
        independent_search(i + 1, n, with, size + 1, leads, best);
    }
    independent_search(i + 1, n, set, size, leads, best);
}

fn dedup(v: Vec<Poly>) -> Vec<Poly> {
    let mut out: Vec<Poly> = Vec::with_capacity(v.len());
    for p in v {
        if !p.is_zero() && !out.contains(&p) {
            out.push(p);
        }
    }
    out
}

/// Gröbner basis elements free of the first `k` variables, under a block
/// order eliminating them.
pub(crate) fn eliminate_prefix(gens: &[Poly], k: usize, weights: &[u32]) -> Result<Vec<Poly>> {
    eliminate_prefix_truncated(gens, k, weights, None)
}

/// As [`eliminate_prefix`]; with `truncate = Some(d)` the result is only
/// complete up to `weights`-degree `d` (inputs must be homogeneous).
pub(crate) fn eliminate_prefix_truncated(gens: &[Poly], k: usize, weights: &[u32], truncate: Option<u64>) -> Result<Vec<Poly>> {
    let ord = MonomialOrder::weighted_elimination(k, weights);
    let mut opts = GbOptions { weights: Some(weights.to_vec()), ..default_options() };
    if let Some(d) = truncate {
        opts.max_degree = d;
        opts.truncate = true;
    }
    let b = cached_groebner(gens, &ord, &opts)?;
    Ok(b.iter().filter(|p| p.support().iter().all(|&i| i >= k)).cloned().collect())
}

/// Moves a polynomial free of the variables mapped to `usize::MAX` into `target`.
fn drop_prefix(p: &Poly, target: &Arc<PolyRing>, back: &[usize]) -> Poly {
    let terms = p.terms().map(|(m, c)| {
        let mut e = crate::poly::Monomial::one(target.nvars());
        for (i, &x) in m.exps().iter().enumerate() {
            if x > 0 {
                e.0[back[i]] = x;
            }
        }
        (e, c.clone())
    });
    Poly::from_terms(target, terms.collect::<Vec<_>>())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::CycField;

    fn ring(names: &[&str]) -> Arc<PolyRing> {
        PolyRing::new(names, CycField::get(12))
    }

    #[test]
    fn intersection_of_coordinate_ideals() {
        let r = ring(&["x", "y"]);
        let i = Ideal::parse(&r, &["x"]).unwrap();
        let j = Ideal::parse(&r, &["y"]).unwrap();
        assert!(i.intersect(&j).unwrap().equals(&Ideal::parse(&r, &["x*y"]).unwrap()).unwrap());
    }

    #[test]
    fn elimination_examples() {
        let r = ring(&["t", "x", "y"]);
        let i = Ideal::parse(&r, &["t*x - 1", "t*y"]).unwrap();
        let e = i.eliminate(&[0]).unwrap();
        assert!(e.equals(&Ideal::parse(&r, &["y"]).unwrap()).unwrap());
        let r2 = ring(&["x", "w1", "w2"]);
        let g = Ideal::parse(&r2, &["w1 - x^2", "w2 - x^3"]).unwrap();
        let e = g.eliminate(&[0]).unwrap();
        assert!(e.equals(&Ideal::parse(&r2, &["w1^3 - w2^2"]).unwrap()).unwrap());
    }

    #[test]
    fn power_and_equality() {
        let r = ring(&["x", "y"]);
        let m = Ideal::parse(&r, &["x", "y"]).unwrap();
        let sq = m.power(2);
        assert_eq!(sq.gens().len(), 3);
        assert!(sq.equals(&Ideal::parse(&r, &["x^2", "x*y", "y^2"]).unwrap()).unwrap());
        assert!(Ideal::parse(&r, &["x"]).unwrap().equals(&Ideal::parse(&r, &["x", "x^2"]).unwrap()).unwrap());
    }

    #[test]
    fn radical_and_dimension() {
        let r = ring(&["x", "y", "z"]);
        let i = Ideal::parse(&r, &["x^2"]).unwrap();
        assert!(i.radical_contains(&r.v("x")).unwrap());
        assert!(!i.radical_contains(&r.v("y")).unwrap());
        assert_eq!(Ideal::zero(&r).krull_dimension().unwrap(), 3);
        assert_eq!(i.krull_dimension().unwrap(), 2);
        assert!(matches!(Ideal::parse(&r, &["1"]).unwrap().krull_dimension(), Err(Error::UnitIdeal)));
    }
}
