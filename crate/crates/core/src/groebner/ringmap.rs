use std::sync::Arc;

use super::{eliminate_prefix_truncated, Ideal};
use crate::error::{Error, Result};
use crate::poly::{Monomial, Poly, PolyRing};

/// A ring homomorphism `source → target` given by the images of the source
/// variables.
///
/// Some target variables may be declared invertible. The target ring then
/// carries, for each such `v`, a companion variable `v̄` standing for `v⁻¹`;
/// images use `v̄` for negative powers and the relation `v·v̄ − 1` is added
/// whenever an ideal computation needs it.
#[derive(Clone, Debug)]
pub struct RingMap {
    source: Arc<PolyRing>,
    target: Arc<PolyRing>,
    images: Vec<Poly>,
    inverses: Vec<(usize, usize)>,
    weights: Option<(Vec<u32>, Vec<u32>)>,
    truncate: Option<u64>,
}

impl RingMap {
    pub fn new(source: &Arc<PolyRing>, target: &Arc<PolyRing>, images: Vec<Poly>) -> Result<RingMap> {
        if images.len() != source.nvars() {
            return Err(Error::Dimension(format!("{} images for {} variables", images.len(), source.nvars())));
        }
        if let Some(p) = images.iter().find(|p| !p.ring().same(target)) {
            return Err(Error::RingMismatch(format!("image {p} not in target ring")));
        }
        Ok(RingMap { source: source.clone(), target: target.clone(), images, inverses: Vec::new(), weights: None, truncate: None })
    }

    /// Extends `base` by companions `{v}_inv` for each listed variable.
    /// Returns the new ring and the `(v, v_inv)` index pairs.
    pub fn laurent_ring(base: &Arc<PolyRing>, invertible: &[&str]) -> Result<(Arc<PolyRing>, Vec<(usize, usize)>)> {
        let names: Vec<String> = invertible.iter().map(|v| format!("{v}_inv")).collect();
        let ring = base.extended(&names);
        let mut pairs = Vec::new();
        for (k, v) in invertible.iter().enumerate() {
            let i = base.index_of(v).ok_or_else(|| Error::Invalid(format!("no variable {v}")))?;
            pairs.push((i, base.nvars() + k));
        }
        Ok((ring, pairs))
    }

    /// Declares `(v, v_inv)` pairs of target variables as mutually inverse.
    pub fn with_inverses(mut self, pairs: Vec<(usize, usize)>) -> RingMap {
        self.inverses = pairs;
        self
    }

    /// Gradings on source and target making every `x − φ(x)` homogeneous;
    /// enables degree-aware pair selection in the kernel computation.
    pub fn with_weights(mut self, source: Vec<u32>, target: Vec<u32>) -> RingMap {
        self.weights = Some((source, target));
        self
    }

    /// Kernels and preimages are only computed up to this degree of the
    /// grading set by [`RingMap::with_weights`].
    pub fn with_truncation(mut self, degree: u64) -> RingMap {
        self.truncate = Some(degree);
        self
    }

    pub fn source(&self) -> &Arc<PolyRing> {
        &self.source
    }

    pub fn target(&self) -> &Arc<PolyRing> {
        &self.target
    }

    pub fn images(&self) -> &[Poly] {
        &self.images
    }

    /// Cancels `v·v̄` in every term.
    pub fn laurent_normalize(&self, p: &Poly) -> Poly {
        if self.inverses.is_empty() {
            return p.clone();
        }
        let terms: Vec<(Monomial, _)> = p
            .terms()
            .map(|(m, c)| {
                let mut e = m.clone();
                for &(v, w) in &self.inverses {
                    let k = e.0[v].min(e.0[w]);
                    e.0[v] -= k;
                    e.0[w] -= k;
                }
                (e, c.clone())
            })
            .collect();
        Poly::from_terms(&self.target, terms)
    }

    /// `φ(f)`, normalised in the Laurent sense.
    pub fn apply(&self, f: &Poly) -> Poly {
        self.laurent_normalize(&f.substitute(&self.images))
    }

    /// Graph ring: target variables first (to be eliminated), then source.
    fn graph(&self) -> (Arc<PolyRing>, Vec<Poly>, Vec<usize>, Vec<usize>) {
        let nt = self.target.nvars();
        let ns = self.source.nvars();
        let mut names: Vec<String> = self.target.names().to_vec();
        for n in self.source.names() {
            // source and target names may overlap; keep them apart
            let mut cand = n.clone();
            while names.contains(&cand) {
                cand.push('\'');
            }
            names.push(cand);
        }
        let ring = PolyRing::new(&names, self.target.field());
        let tmap: Vec<usize> = (0..nt).collect();
        let smap: Vec<usize> = (nt..nt + ns).collect();
        let mut gens = Vec::with_capacity(ns + self.inverses.len());
        for (i, img) in self.images.iter().enumerate() {
            gens.push(&Poly::var(&ring, nt + i) - &img.map_vars(&ring, &tmap));
        }
        for &(v, w) in &self.inverses {
            gens.push(&(&Poly::var(&ring, v) * &Poly::var(&ring, w)) - &Poly::one(&ring));
        }
        (ring, gens, tmap, smap)
    }

    fn graph_weights(&self) -> Vec<u32> {
        match &self.weights {
            Some((s, t)) => t.iter().chain(s.iter()).copied().collect(),
            None => vec![1; self.target.nvars() + self.source.nvars()],
        }
    }

    fn eliminate_target(&self, extra: &[Poly]) -> Result<Ideal> {
        let (ring, mut gens, tmap, _) = self.graph();
        for p in extra {
            gens.push(p.map_vars(&ring, &tmap));
        }
        let nt = self.target.nvars();
        let elim = eliminate_prefix_truncated(&gens, nt, &self.graph_weights(), self.truncate)?;
        let back: Vec<usize> = (0..ring.nvars()).map(|i| if i < nt { usize::MAX } else { i - nt }).collect();
        let out = elim
            .iter()
            .map(|p| {
                let terms = p.terms().map(|(m, c)| {
                    let mut e = Monomial::one(self.source.nvars());
                    for (i, &x) in m.exps().iter().enumerate() {
                        if x > 0 {
                            e.0[back[i]] = x;
                        }
                    }
                    (e, c.clone())
                });
                Poly::from_terms(&self.source, terms.collect::<Vec<_>>())
            })
            .collect();
        Ok(Ideal::new(&self.source, out))
    }

    /// `ker φ`.
    pub fn kernel(&self) -> Result<Ideal> {
        self.eliminate_target(&[])
    }

    /// `φ⁻¹(J)` for an ideal `J` of the target ring (or of a ring whose
    /// variables all occur in the target).
    pub fn preimage(&self, j: &Ideal) -> Result<Ideal> {
        let gens = j.gens().iter().map(|g| g.to_ring(&self.target)).collect::<Result<Vec<_>>>()?;
        self.eliminate_target(&gens)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::CycField;

    #[test]
    fn kernels() {
        let f = CycField::get(12);
        let s = PolyRing::new(&["w1", "w2"], f);
        let t = PolyRing::new(&["x"], f);
        let m = RingMap::new(&s, &t, vec![t.parse("x^2").unwrap(), t.parse("x^3").unwrap()]).unwrap();
        let k = m.kernel().unwrap();
        assert!(k.equals(&Ideal::parse(&s, &["w1^3 - w2^2"]).unwrap()).unwrap());
        for g in k.gens() {
            assert!(m.apply(g).is_zero());
        }
        let s1 = PolyRing::new(&["w"], f);
        let id = RingMap::new(&s1, &t, vec![t.v("x")]).unwrap();
        assert!(id.kernel().unwrap().gens().is_empty());
    }

    #[test]
    fn laurent_targets() {
        let f = CycField::get(12);
        let base = PolyRing::new(&["x", "t"], f);
        let (t, pairs) = RingMap::laurent_ring(&base, &["t"]).unwrap();
        let s = PolyRing::new(&["a", "b", "u"], f);
        let imgs = vec![t.parse("x*t").unwrap(), t.parse("x").unwrap(), t.parse("t_inv").unwrap()];
        let m = RingMap::new(&s, &t, imgs).unwrap().with_inverses(pairs);
        let k = m.kernel().unwrap();
        assert!(k.equals(&Ideal::parse(&s, &["a*u - b"]).unwrap()).unwrap());
        let j = Ideal::parse(&t, &["x"]).unwrap();
        let pre = m.preimage(&j).unwrap();
        assert!(pre.equals(&Ideal::parse(&s, &["a", "b"]).unwrap()).unwrap());
    }
}
