//! Sparse multivariate polynomials over ℚ(ζ_N).

mod parse;

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use smallvec::SmallVec;

use crate::arith::{CycField, CycNum, Rational};
use crate::error::{Error, Result};
use crate::groebner::MonomialOrder;

pub use parse::{parse_expr, parse_scalar};
pub(crate) use parse::parse_scalar_at;

/// Variable names plus the coefficient field.
#[derive(Clone)]
pub struct PolyRing {
    names: Vec<String>,
    field: &'static CycField,
}

impl PolyRing {
    pub fn new<S: AsRef<str>>(names: &[S], field: &'static CycField) -> Arc<PolyRing> {
        Arc::new(PolyRing { names: names.iter().map(|s| s.as_ref().to_string()).collect(), field })
    }

    /// A ring with `n` variables named `{prefix}1 .. {prefix}n`.
    pub fn numbered(prefix: &str, n: usize, field: &'static CycField) -> Arc<PolyRing> {
        let names: Vec<String> = (1..=n).map(|i| format!("{prefix}{i}")).collect();
        Self::new(&names, field)
    }

    pub fn nvars(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn field(&self) -> &'static CycField {
        self.field
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn var(self: &Arc<Self>, i: usize) -> Poly {
        Poly::var(self, i)
    }

    /// Looks a variable up by name; panics if absent.
    pub fn v(self: &Arc<Self>, name: &str) -> Poly {
        let i = self.index_of(name).unwrap_or_else(|| panic!("no variable named {name}"));
        Poly::var(self, i)
    }

    pub fn vars(self: &Arc<Self>) -> Vec<Poly> {
        (0..self.nvars()).map(|i| Poly::var(self, i)).collect()
    }

    /// Parses a polynomial written in this ring's variables.
    pub fn parse(self: &Arc<Self>, s: &str) -> Result<Poly> {
        parse_expr(s, self)
    }

    /// Same variables with fresh ones appended.
    pub fn extended<S: AsRef<str>>(&self, extra: &[S]) -> Arc<PolyRing> {
        let mut names = self.names.clone();
        names.extend(extra.iter().map(|s| s.as_ref().to_string()));
        Arc::new(PolyRing { names, field: self.field })
    }

    /// Fresh variable names that do not clash with existing ones.
    pub fn fresh_names(&self, base: &str, count: usize) -> Vec<String> {
        let mut out = Vec::with_capacity(count);
        let mut k = 0usize;
        while out.len() < count {
            let cand = if count == 1 && k == 0 { base.to_string() } else { format!("{base}{k}") };
            k += 1;
            if self.index_of(&cand).is_none() && !out.contains(&cand) {
                out.push(cand);
            }
        }
        out
    }

    pub fn same(&self, other: &PolyRing) -> bool {
        std::ptr::eq(self, other) || (self.field.order() == other.field.order() && self.names == other.names)
    }
}

impl fmt::Debug for PolyRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}[{}]", self.field, self.names.join(","))
    }
}

/// Exponent vector; lexicographic `Ord` is only the storage order.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Monomial(pub SmallVec<[u16; 16]>);

impl Monomial {
    pub fn one(n: usize) -> Self {
        Monomial(SmallVec::from_elem(0, n))
    }

    pub fn from_exps(e: &[u16]) -> Self {
        Monomial(SmallVec::from_slice(e))
    }

    pub fn exps(&self) -> &[u16] {
        &self.0
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|&e| e as u32).sum()
    }

    pub fn weighted_degree(&self, w: &[u32]) -> u64 {
        self.0.iter().zip(w).map(|(&e, &w)| e as u64 * w as u64).sum()
    }

    pub fn mul(&self, o: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&o.0).map(|(a, b)| a + b).collect())
    }

    pub fn divides(&self, o: &Monomial) -> bool {
        self.0.iter().zip(&o.0).all(|(a, b)| a <= b)
    }

    pub fn div(&self, o: &Monomial) -> Option<Monomial> {
        if !o.divides(self) {
            return None;
        }
        Some(Monomial(self.0.iter().zip(&o.0).map(|(a, b)| a - b).collect()))
    }

    pub fn lcm(&self, o: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&o.0).map(|(a, b)| *a.max(b)).collect())
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    /// Indices of variables with positive exponent.
    pub fn support(&self) -> Vec<usize> {
        self.0.iter().enumerate().filter(|(_, &e)| e > 0).map(|(i, _)| i).collect()
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0.as_slice())
    }
}

/// A polynomial: a map from monomials to nonzero coefficients.
#[derive(Clone)]
pub struct Poly {
    ring: Arc<PolyRing>,
    terms: BTreeMap<Monomial, CycNum>,
}

impl Poly {
    pub fn zero(ring: &Arc<PolyRing>) -> Poly {
        Poly { ring: ring.clone(), terms: BTreeMap::new() }
    }

    pub fn one(ring: &Arc<PolyRing>) -> Poly {
        Self::constant(ring, CycNum::one(ring.field))
    }

    pub fn constant(ring: &Arc<PolyRing>, c: CycNum) -> Poly {
        Self::monomial(ring, Monomial::one(ring.nvars()), c)
    }

    pub fn from_int(ring: &Arc<PolyRing>, n: i64) -> Poly {
        Self::constant(ring, CycNum::from_int(ring.field, n))
    }

    pub fn var(ring: &Arc<PolyRing>, i: usize) -> Poly {
        let mut m = Monomial::one(ring.nvars());
        m.0[i] = 1;
        Self::monomial(ring, m, CycNum::one(ring.field))
    }

    pub fn monomial(ring: &Arc<PolyRing>, m: Monomial, c: CycNum) -> Poly {
        debug_assert_eq!(m.0.len(), ring.nvars());
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Poly { ring: ring.clone(), terms }
    }

    /// Sums the given terms, merging repeated monomials.
    pub fn from_terms(ring: &Arc<PolyRing>, it: impl IntoIterator<Item = (Monomial, CycNum)>) -> Poly {
        let mut p = Poly::zero(ring);
        for (m, c) in it {
            p.add_term(m, &c);
        }
        p
    }

    pub fn ring(&self) -> &Arc<PolyRing> {
        &self.ring
    }

    pub fn field(&self) -> &'static CycField {
        self.ring.field
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &CycNum)> + ExactSizeIterator {
        self.terms.iter()
    }

    pub fn into_terms(self) -> impl Iterator<Item = (Monomial, CycNum)> {
        self.terms.into_iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|m| m.is_one())
    }

    /// The constant term.
    pub fn constant_term(&self) -> CycNum {
        self.terms
            .get(&Monomial::one(self.ring.nvars()))
            .cloned()
            .unwrap_or_else(|| CycNum::zero(self.ring.field))
    }

    pub fn coeff(&self, m: &Monomial) -> CycNum {
        self.terms.get(m).cloned().unwrap_or_else(|| CycNum::zero(self.ring.field))
    }

    pub fn add_term(&mut self, m: Monomial, c: &CycNum) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c.clone());
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let s = e.get() + c;
                if s.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = s;
                }
            }
        }
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|m| m.degree()).max()
    }

    pub fn weighted_degree(&self, w: &[u32]) -> Option<u64> {
        self.terms.keys().map(|m| m.weighted_degree(w)).max()
    }

    pub fn min_degree(&self) -> Option<u32> {
        self.terms.keys().map(|m| m.degree()).min()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut it = self.terms.keys().map(|m| m.degree());
        match it.next() {
            None => true,
            Some(d) => it.all(|e| e == d),
        }
    }

    pub fn is_weighted_homogeneous(&self, w: &[u32]) -> bool {
        let mut it = self.terms.keys().map(|m| m.weighted_degree(w));
        match it.next() {
            None => true,
            Some(d) => it.all(|e| e == d),
        }
    }

    /// The degree-`d` homogeneous component.
    pub fn homogeneous_part(&self, d: u32) -> Poly {
        Poly {
            ring: self.ring.clone(),
            terms: self.terms.iter().filter(|(m, _)| m.degree() == d).map(|(m, c)| (m.clone(), c.clone())).collect(),
        }
    }

    pub fn scale(&self, c: &CycNum) -> Poly {
        if c.is_zero() {
            return Poly::zero(&self.ring);
        }
        Poly { ring: self.ring.clone(), terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect() }
    }

    pub fn scale_rational(&self, r: &Rational) -> Poly {
        self.scale(&CycNum::from_rational(self.ring.field, r.clone()))
    }

    pub fn mul_monomial(&self, m: &Monomial, c: &CycNum) -> Poly {
        if c.is_zero() {
            return Poly::zero(&self.ring);
        }
        Poly { ring: self.ring.clone(), terms: self.terms.iter().map(|(k, a)| (k.mul(m), a * c)).collect() }
    }

    pub fn pow(&self, e: u32) -> Poly {
        let mut acc = Poly::one(&self.ring);
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Variables that occur in some term.
    pub fn support(&self) -> Vec<usize> {
        let mut used = vec![false; self.ring.nvars()];
        for m in self.terms.keys() {
            for i in m.support() {
                used[i] = true;
            }
        }
        used.iter().enumerate().filter(|(_, &u)| u).map(|(i, _)| i).collect()
    }

    /// Leading monomial and coefficient under `ord`.
    pub fn leading_term(&self, ord: &MonomialOrder) -> Option<(&Monomial, &CycNum)> {
        self.terms.iter().max_by(|a, b| ord.cmp(a.0.exps(), b.0.exps()))
    }

    /// Terms sorted by `ord`, largest first.
    pub fn sorted_terms(&self, ord: &MonomialOrder) -> Vec<(&Monomial, &CycNum)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|a, b| ord.cmp(b.0.exps(), a.0.exps()));
        v
    }

    /// Divides by the leading coefficient under `ord`.
    pub fn monic(&self, ord: &MonomialOrder) -> Poly {
        match self.leading_term(ord) {
            None => self.clone(),
            Some((_, c)) => self.scale(&c.inverse().expect("nonzero")),
        }
    }

    /// Substitutes `images[i]` for variable `i`; the result lives in the
    /// ring of the images.
    pub fn substitute(&self, images: &[Poly]) -> Poly {
        assert_eq!(images.len(), self.ring.nvars(), "substitution arity");
        let target = match images.first() {
            Some(p) => p.ring.clone(),
            None => return self.clone(),
        };
        // cache powers of each image as we go
        let mut powers: Vec<Vec<Poly>> = images.iter().map(|p| vec![Poly::one(&target), p.clone()]).collect();
        let mut out = Poly::zero(&target);
        for (m, c) in &self.terms {
            let mut t = Poly::constant(&target, c.clone());
            for (i, &e) in m.0.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                while powers[i].len() <= e as usize {
                    let next = &powers[i][powers[i].len() - 1] * &images[i];
                    powers[i].push(next);
                }
                t = &t * &powers[i][e as usize];
            }
            out = &out + &t;
        }
        out
    }

    /// Replaces some variables by constants, keeping the ring.
    pub fn specialize(&self, values: &[(usize, CycNum)]) -> Poly {
        let mut images = self.ring.vars();
        for (i, c) in values {
            images[*i] = Poly::constant(&self.ring, c.clone());
        }
        self.substitute(&images)
    }

    /// Re-expresses `self` in `target`, sending variable `i` to `map[i]`.
    pub fn map_vars(&self, target: &Arc<PolyRing>, map: &[usize]) -> Poly {
        assert_eq!(map.len(), self.ring.nvars());
        let n = target.nvars();
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| {
                let mut e = Monomial::one(n);
                for (i, &x) in m.0.iter().enumerate() {
                    e.0[map[i]] += x;
                }
                (e, c.clone())
            })
            .collect::<Vec<_>>();
        Poly::from_terms(target, terms)
    }

    /// Moves `self` into a ring whose variable names include all of ours.
    pub fn to_ring(&self, target: &Arc<PolyRing>) -> Result<Poly> {
        if self.ring.same(target) {
            return Ok(Poly { ring: target.clone(), terms: self.terms.clone() });
        }
        let map: Option<Vec<usize>> = self.ring.names.iter().map(|n| target.index_of(n)).collect();
        match map {
            Some(m) => Ok(self.map_vars(target, &m)),
            None => Err(Error::RingMismatch(format!("{:?} does not embed into {:?}", self.ring, target))),
        }
    }

    pub fn derivative(&self, var: usize) -> Poly {
        let mut out = Poly::zero(&self.ring);
        for (m, c) in &self.terms {
            let e = m.0[var];
            if e == 0 {
                continue;
            }
            let mut m2 = m.clone();
            m2.0[var] -= 1;
            out.add_term(m2, &c.scale(&Rational::from_int(e as i64)));
        }
        out
    }

    /// Whether every coefficient is rational.
    pub fn has_rational_coeffs(&self) -> bool {
        self.terms.values().all(|c| c.is_rational())
    }

    /// `Some(c)` if `self = c · other`.
    pub fn proportional_to(&self, other: &Poly) -> Option<CycNum> {
        if other.is_zero() {
            return if self.is_zero() { Some(CycNum::zero(self.ring.field)) } else { None };
        }
        if self.is_zero() {
            return Some(CycNum::zero(self.ring.field));
        }
        let (m, c) = other.terms.iter().next().unwrap();
        let a = self.terms.get(m)?;
        let ratio = a / c;
        if &other.scale(&ratio) == self {
            Some(ratio)
        } else {
            None
        }
    }

    fn check_ring(&self, other: &Poly) {
        debug_assert!(self.ring.same(&other.ring), "ring mismatch: {:?} vs {:?}", self.ring, other.ring);
    }
}

impl PartialEq for Poly {
    fn eq(&self, other: &Self) -> bool {
        self.ring.same(&other.ring) && self.terms == other.terms
    }
}

impl Eq for Poly {}

impl Hash for Poly {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.ring.names.hash(state);
        for (m, c) in &self.terms {
            m.hash(state);
            c.hash(state);
        }
    }
}

impl<'a> Add<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        self.check_ring(rhs);
        let (big, small) = if self.terms.len() >= rhs.terms.len() { (self, rhs) } else { (rhs, self) };
        let mut out = big.clone();
        for (m, c) in &small.terms {
            out.add_term(m.clone(), c);
        }
        out
    }
}

impl<'a> Sub<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        self.check_ring(rhs);
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), &-c);
        }
        out
    }
}

impl<'a> Mul<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        self.check_ring(rhs);
        let mut out = Poly::zero(&self.ring);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &rhs.terms {
                out.add_term(m1.mul(m2), &(c1 * c2));
            }
        }
        out
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly { ring: self.ring.clone(), terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect() }
    }
}

impl Neg for Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        -&self
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<Poly> for Poly {
            type Output = Poly;
            fn $m(self, rhs: Poly) -> Poly {
                (&self).$m(&rhs)
            }
        }
        impl<'a> $tr<&'a Poly> for Poly {
            type Output = Poly;
            fn $m(self, rhs: &Poly) -> Poly {
                (&self).$m(rhs)
            }
        }
        impl<'a> $tr<Poly> for &'a Poly {
            type Output = Poly;
            fn $m(self, rhs: Poly) -> Poly {
                self.$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

fn fmt_monomial(f: &mut fmt::Formatter<'_>, ring: &PolyRing, m: &Monomial) -> fmt::Result {
    let mut first = true;
    for (i, &e) in m.0.iter().enumerate() {
        if e == 0 {
            continue;
        }
        if !first {
            write!(f, "*")?;
        }
        first = false;
        if e == 1 {
            write!(f, "{}", ring.names[i])?;
        } else {
            write!(f, "{}^{}", ring.names[i], e)?;
        }
    }
    Ok(())
}

impl fmt::Display for Poly {
    /// Terms in decreasing graded-reverse-lex order; the output parses back.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let ord = MonomialOrder::Grevlex;
        for (k, (m, c)) in self.sorted_terms(&ord).into_iter().enumerate() {
            let (neg, c) = match c.to_rational() {
                Some(r) if r.is_negative() => (true, -c),
                _ => (false, c.clone()),
            };
            if k == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            if m.is_one() {
                if c.needs_parens() {
                    write!(f, "({c})")?;
                } else {
                    write!(f, "{c}")?;
                }
                continue;
            }
            if !c.is_one() {
                if c.needs_parens() {
                    write!(f, "({c})*")?;
                } else {
                    write!(f, "{c}*")?;
                }
            }
            fmt_monomial(f, &self.ring, m)?;
        }
        Ok(())
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Compares two polynomials by their leading terms under `ord`.
pub fn cmp_by_lead(a: &Poly, b: &Poly, ord: &MonomialOrder) -> Ordering {
    match (a.leading_term(ord), b.leading_term(ord)) {
        (None, None) => Ordering::Equal,
        (None, _) => Ordering::Less,
        (_, None) => Ordering::Greater,
        (Some((x, _)), Some((y, _))) => ord.cmp(x.exps(), y.exps()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ring() -> Arc<PolyRing> {
        PolyRing::new(&["x", "y", "z2"], CycField::get(12))
    }

    #[test]
    fn arithmetic_basics() {
        let r = ring();
        let x = r.v("x");
        let y = r.v("y");
        let p = &(&x + &y) * &(&x - &y);
        assert_eq!(p, &x.pow(2) - &y.pow(2));
        assert_eq!(p.total_degree(), Some(2));
        assert!((&p - &p).is_zero());
    }

    #[test]
    fn display_round_trips() {
        let r = ring();
        let p = r.parse("3/2*z^2*x^2*y - (z + 1)*x + 7 - y^3").unwrap();
        let s = p.to_string();
        assert_eq!(r.parse(&s).unwrap(), p);
    }

    #[test]
    fn substitution_is_a_homomorphism() {
        let r = ring();
        let f = r.parse("x^2 + y").unwrap();
        let g = r.parse("x*y - 1").unwrap();
        let imgs = vec![r.parse("x + y").unwrap(), r.parse("x*y").unwrap(), r.v("z2")];
        assert_eq!((&f * &g).substitute(&imgs), &f.substitute(&imgs) * &g.substitute(&imgs));
    }

    #[test]
    fn derivative_and_proportional() {
        let r = ring();
        let f = r.parse("x^3*y + 2*x").unwrap();
        assert_eq!(f.derivative(0), r.parse("3*x^2*y + 2").unwrap());
        let g = f.scale(&CycField::get(12).zeta_pow(1));
        assert_eq!(g.proportional_to(&f), Some(CycField::get(12).zeta_pow(1)));
        assert_eq!(r.v("x").proportional_to(&r.v("y")), None);
    }
}
