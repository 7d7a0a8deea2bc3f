//! Buchberger's algorithm with the Gebauer–Möller criteria and the sugar
//! selection strategy.
//!
//! Polynomials are converted to a dense-sorted internal form (terms in
//! decreasing order) for the duration of the computation.

use std::cmp::Ordering;
use std::sync::Arc;

use smallvec::SmallVec;

use super::order::MonomialOrder;
use crate::arith::CycNum;
use crate::error::{Error, Result};
use crate::poly::{Monomial, Poly, PolyRing};

pub(crate) type Exps = SmallVec<[u16; 24]>;

#[derive(Clone)]
pub(crate) struct Term {
    pub e: Exps,
    pub c: CycNum,
}

/// Resource limits and optional degree truncation for one computation.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GbOptions {
    /// Maximum number of S-pairs reduced.
    pub max_pairs: usize,
    /// Maximum number of elements in the (unreduced) basis.
    pub max_basis: usize,
    /// Maximum sugar degree of a processed pair; exceeding it is an error
    /// unless `truncate` is set.
    pub max_degree: u64,
    /// Grading used for sugar and truncation; all ones when `None`.
    pub weights: Option<Vec<u32>>,
    /// Silently drop pairs above `max_degree`. Only meaningful when the input
    /// is homogeneous for `weights`: the result is then a Gröbner basis up to
    /// that degree.
    pub truncate: bool,
}

impl Default for GbOptions {
    fn default() -> Self {
        GbOptions { max_pairs: 200_000, max_basis: 20_000, max_degree: 60, weights: None, truncate: false }
    }
}

impl GbOptions {
    pub fn truncated(weights: Vec<u32>, degree: u64) -> Self {
        GbOptions { weights: Some(weights), max_degree: degree, truncate: true, ..Default::default() }
    }
}

struct GPoly {
    terms: Vec<Term>,
    sugar: u64,
    mask: u64,
}

fn mask_of(e: &[u16]) -> u64 {
    let mut m = 0u64;
    for (i, &x) in e.iter().enumerate() {
        if x > 0 {
            m |= 1 << (i % 64);
        }
    }
    m
}

fn divides(a: &[u16], b: &[u16]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

fn lcm(a: &[u16], b: &[u16]) -> Exps {
    a.iter().zip(b).map(|(x, y)| *x.max(y)).collect()
}

fn coprime(a: &[u16], b: &[u16]) -> bool {
    a.iter().zip(b).all(|(x, y)| *x == 0 || *y == 0)
}

fn wdeg(e: &[u16], w: &[u32]) -> u64 {
    e.iter().zip(w).map(|(&x, &w)| x as u64 * w as u64).sum()
}

/// `f - c·x^m·g`, where the leading terms are known to cancel; both inputs
/// are passed without their leading terms.
fn sub_mul(f: &[Term], c: &CycNum, m: &[u16], g: &[Term], ord: &MonomialOrder) -> Vec<Term> {
    let mut out = Vec::with_capacity(f.len() + g.len());
    let mut i = 0;
    let mut j = 0;
    let mut shifted: Exps = SmallVec::new();
    let next_g = |j: usize, buf: &mut Exps| {
        buf.clear();
        buf.extend(g[j].e.iter().zip(m).map(|(a, b)| a + b));
    };
    if j < g.len() {
        next_g(j, &mut shifted);
    }
    while i < f.len() && j < g.len() {
        match ord.cmp(&f[i].e, &shifted) {
            Ordering::Greater => {
                out.push(f[i].clone());
                i += 1;
            }
            Ordering::Less => {
                out.push(Term { e: shifted.clone(), c: -(c * &g[j].c) });
                j += 1;
                if j < g.len() {
                    next_g(j, &mut shifted);
                }
            }
            Ordering::Equal => {
                let v = &f[i].c - &(c * &g[j].c);
                if !v.is_zero() {
                    out.push(Term { e: shifted.clone(), c: v });
                }
                i += 1;
                j += 1;
                if j < g.len() {
                    next_g(j, &mut shifted);
                }
            }
        }
    }
    out.extend_from_slice(&f[i..]);
    while j < g.len() {
        out.push(Term { e: shifted.clone(), c: -(c * &g[j].c) });
        j += 1;
        if j < g.len() {
            next_g(j, &mut shifted);
        }
    }
    out
}

fn make_monic(terms: &mut [Term]) {
    if let Some(t) = terms.first() {
        if !t.c.is_one() {
            let inv = t.c.inverse().expect("nonzero lead");
            for t in terms.iter_mut() {
                t.c = &t.c * &inv;
            }
        }
    }
}

/// Reducers are indexed by lead exponent and mask for quick divisor lookup.
struct Reducers<'a> {
    polys: &'a [GPoly],
    active: &'a [usize],
}

impl Reducers<'_> {
    fn find(&self, e: &[u16], mask: u64) -> Option<&GPoly> {
        for &k in self.active {
            let g = &self.polys[k];
            if g.mask & !mask == 0 && divides(&g.terms[0].e, e) {
                return Some(g);
            }
        }
        None
    }
}

/// Full reduction of `f` (sorted, decreasing) modulo the reducers.
fn reduce_full(mut f: Vec<Term>, red: &Reducers<'_>, ord: &MonomialOrder, head_only: bool) -> Vec<Term> {
    let mut done: Vec<Term> = Vec::new();
    let mut start = 0;
    while start < f.len() {
        let lt = &f[start];
        let mask = mask_of(&lt.e);
        match red.find(&lt.e, mask) {
            Some(g) => {
                let m: Exps = lt.e.iter().zip(&g.terms[0].e).map(|(a, b)| a - b).collect();
                let c = &lt.c * &g.terms[0].c.inverse().expect("nonzero lead");
                f = sub_mul(&f[start + 1..], &c, &m, &g.terms[1..], ord);
                start = 0;
            }
            None => {
                if head_only {
                    break;
                }
                done.push(f[start].clone());
                start += 1;
            }
        }
    }
    if head_only {
        return f.split_off(start);
    }
    done
}

struct Pair {
    i: usize,
    j: usize,
    lcm: Exps,
    sugar: u64,
}

pub(crate) fn to_terms(p: &Poly, ord: &MonomialOrder) -> Vec<Term> {
    let mut v: Vec<Term> = p.terms().map(|(m, c)| Term { e: SmallVec::from_slice(m.exps()), c: c.clone() }).collect();
    v.sort_by(|a, b| ord.cmp(&b.e, &a.e));
    v
}

pub(crate) fn from_terms(ring: &Arc<PolyRing>, t: Vec<Term>) -> Poly {
    Poly::from_terms(ring, t.into_iter().map(|t| (Monomial::from_exps(&t.e), t.c)))
}

/// Statistics of a run, mostly for reports and tests.
#[derive(Clone, Debug, Default)]
pub struct GbStats {
    pub pairs_reduced: usize,
    pub zero_reductions: usize,
    pub max_sugar: u64,
    pub truncated_pairs: usize,
}

/// Reduced Gröbner basis of the ideal generated by `gens`.
///
/// The output is monic, sorted by increasing leading monomial, and unique for
/// a given ideal and order (up to degree `max_degree` when truncating).
pub fn groebner_basis(gens: &[Poly], ord: &MonomialOrder, opts: &GbOptions) -> Result<(Vec<Poly>, GbStats)> {
    let mut stats = GbStats::default();
    let ring = match gens.first() {
        Some(p) => p.ring().clone(),
        None => return Ok((Vec::new(), stats)),
    };
    let n = ring.nvars();
    let weights: Vec<u32> = opts.weights.clone().unwrap_or_else(|| vec![1; n]);
    let one = Poly::one(&ring);

    let mut polys: Vec<GPoly> = Vec::new();
    let mut active: Vec<usize> = Vec::new();
    let mut pairs: Vec<Pair> = Vec::new();

    // inputs: interreduce lightly by inserting one at a time through reduction
    let mut inputs: Vec<Vec<Term>> = gens.iter().filter(|p| !p.is_zero()).map(|p| to_terms(p, ord)).collect();
    if inputs.iter().any(|t| t.len() == 1 && t[0].e.iter().all(|&x| x == 0)) {
        return Ok((vec![one], stats));
    }
    inputs.sort_by(|a, b| ord.cmp(&a[0].e, &b[0].e));

    let mut queue_inputs = inputs.into_iter();
    loop {
        // feed the next input or the next pair
        let (candidate, sugar) = if let Some(t) = queue_inputs.next() {
            let s = t.iter().map(|x| wdeg(&x.e, &weights)).max().unwrap_or(0);
            (t, s)
        } else {
            if pairs.is_empty() {
                break;
            }
            // lowest sugar, then smallest lcm
            let mut best = 0;
            for k in 1..pairs.len() {
                let a = &pairs[k];
                let b = &pairs[best];
                if a.sugar < b.sugar || (a.sugar == b.sugar && ord.cmp(&a.lcm, &b.lcm) == Ordering::Less) {
                    best = k;
                }
            }
            let p = pairs.swap_remove(best);
            if p.sugar > opts.max_degree {
                if opts.truncate {
                    stats.truncated_pairs += 1;
                    continue;
                }
                return Err(Error::ResourceLimit(format!("degree bound {} exceeded", opts.max_degree)));
            }
            stats.pairs_reduced += 1;
            stats.max_sugar = stats.max_sugar.max(p.sugar);
            if stats.pairs_reduced > opts.max_pairs {
                return Err(Error::ResourceLimit(format!("more than {} S-pairs", opts.max_pairs)));
            }
            let (f, g) = (&polys[p.i], &polys[p.j]);
            let mf: Exps = p.lcm.iter().zip(&f.terms[0].e).map(|(a, b)| a - b).collect();
            let mg: Exps = p.lcm.iter().zip(&g.terms[0].e).map(|(a, b)| a - b).collect();
            let fm: Vec<Term> = f.terms[1..]
                .iter()
                .map(|t| Term { e: t.e.iter().zip(&mf).map(|(a, b)| a + b).collect(), c: t.c.clone() })
                .collect();
            let s = sub_mul(&fm, &CycNum::one(ring.field()), &mg, &g.terms[1..], ord);
            (s, p.sugar)
        };

        let red = Reducers { polys: &polys, active: &active };
        let mut h = reduce_full(candidate, &red, ord, true);
        if h.is_empty() {
            stats.zero_reductions += 1;
            continue;
        }
        h = reduce_full(h, &red, ord, false);
        make_monic(&mut h);
        if h[0].e.iter().all(|&x| x == 0) {
            return Ok((vec![one], stats));
        }
        if polys.len() >= opts.max_basis {
            return Err(Error::ResourceLimit(format!("basis larger than {}", opts.max_basis)));
        }
        let hidx = polys.len();
        let hmask = mask_of(&h[0].e);
        polys.push(GPoly { terms: h, sugar, mask: hmask });
        update(&mut pairs, &mut active, &polys, hidx, &weights);
    }

    // interreduce the minimal basis
    let mut basis: Vec<usize> = active.clone();
    basis.sort_by(|&a, &b| ord.cmp(&polys[a].terms[0].e, &polys[b].terms[0].e));
    let mut out = Vec::with_capacity(basis.len());
    for (k, &idx) in basis.iter().enumerate() {
        let others: Vec<usize> = basis.iter().enumerate().filter(|(j, _)| *j != k).map(|(_, &x)| x).collect();
        let red = Reducers { polys: &polys, active: &others };
        let lt = polys[idx].terms[0].clone();
        let mut tail = reduce_full(polys[idx].terms[1..].to_vec(), &red, ord, false);
        let mut t = vec![lt];
        t.append(&mut tail);
        make_monic(&mut t);
        out.push(from_terms(&ring, t));
    }
    Ok((out, stats))
}

/// The Gebauer–Möller update after adding `polys[h]`.
fn update(pairs: &mut Vec<Pair>, active: &mut Vec<usize>, polys: &[GPoly], h: usize, w: &[u32]) {
    let lh = &polys[h].terms[0].e;
    let pair_sugar = |i: usize, l: &Exps| {
        let si = polys[i].sugar + wdeg(l, w) - wdeg(&polys[i].terms[0].e, w);
        let sh = polys[h].sugar + wdeg(l, w) - wdeg(lh, w);
        si.max(sh)
    };
    let cands: Vec<(usize, Exps)> = active.iter().map(|&g| (g, lcm(lh, &polys[g].terms[0].e))).collect();

    // criterion M and F on the new pairs
    let mut keep: Vec<(usize, Exps, bool)> = Vec::new();
    for (k, (g, l)) in cands.iter().enumerate() {
        let cop = coprime(lh, &polys[*g].terms[0].e);
        let dominated = !cop
            && (cands.iter().enumerate().any(|(k2, (_, l2))| {
                k2 > k && divides(l2, l)
            }) || keep.iter().any(|(_, l2, _)| divides(l2, l)));
        if !dominated {
            keep.push((*g, l.clone(), cop));
        }
    }
    // criterion B on old pairs
    pairs.retain(|p| {
        !(divides(lh, &p.lcm)
            && lcm(&polys[p.i].terms[0].e, lh) != p.lcm
            && lcm(&polys[p.j].terms[0].e, lh) != p.lcm)
    });
    for (g, l, cop) in keep {
        if !cop {
            let s = pair_sugar(g, &l);
            pairs.push(Pair { i: g, j: h, lcm: l, sugar: s });
        }
    }
    active.retain(|&g| !divides(lh, &polys[g].terms[0].e));
    active.push(h);
}

/// Normal form of `f` modulo a Gröbner basis (assumed reduced or at least a
/// Gröbner basis for `ord`).
pub fn normal_form_by(f: &Poly, basis: &[Poly], ord: &MonomialOrder) -> Poly {
    if f.is_zero() || basis.is_empty() {
        return f.clone();
    }
    let polys: Vec<GPoly> = basis
        .iter()
        .map(|b| {
            let t = to_terms(b, ord);
            let mask = mask_of(&t[0].e);
            GPoly { terms: t, sugar: 0, mask }
        })
        .collect();
    let active: Vec<usize> = (0..polys.len()).collect();
    let red = Reducers { polys: &polys, active: &active };
    from_terms(f.ring(), reduce_full(to_terms(f, ord), &red, ord, false))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::CycField;

    fn gb(ring: &Arc<PolyRing>, gens: &[&str]) -> Vec<Poly> {
        let g: Vec<Poly> = gens.iter().map(|s| ring.parse(s).unwrap()).collect();
        groebner_basis(&g, &MonomialOrder::Grevlex, &GbOptions::default()).unwrap().0
    }

    #[test]
    fn small_examples() {
        let r = PolyRing::new(&["x", "y"], CycField::get(12));
        assert_eq!(gb(&r, &["x - y"]), vec![r.parse("x - y").unwrap()]);
        assert_eq!(gb(&r, &["x^2", "x*y", "y^2", "x"]), vec![r.parse("x").unwrap(), r.parse("y^2").unwrap()]);
        assert_eq!(gb(&r, &["x", "x + 1"]), vec![Poly::one(&r)]);
    }

    #[test]
    fn twisted_cubic() {
        let r = PolyRing::new(&["t", "x", "y", "z"], CycField::get(12));
        let g: Vec<Poly> = ["x - t", "y - t^2", "z - t^3"].iter().map(|s| r.parse(s).unwrap()).collect();
        let ord = MonomialOrder::elimination(1, 4);
        let (b, _) = groebner_basis(&g, &ord, &GbOptions::default()).unwrap();
        let elim: Vec<&Poly> = b.iter().filter(|p| !p.support().contains(&0)).collect();
        assert_eq!(elim.len(), 3);
        for p in elim {
            let v = p.substitute(&[r.v("t"), r.v("t"), r.parse("t^2").unwrap(), r.parse("t^3").unwrap()]);
            assert!(v.is_zero());
        }
    }

    #[test]
    fn cyclotomic_coefficients() {
        let r = PolyRing::new(&["x", "y"], CycField::get(12));
        // x^2 + 1 = (x - i)(x + i); adding x - z^3 leaves x - i and nothing else
        let b = gb(&r, &["x^2 + 1", "x*y - z^3*y", "x - z^3"]);
        assert_eq!(b, vec![r.parse("x - z^3").unwrap()]);
    }
}
