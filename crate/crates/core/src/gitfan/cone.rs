//! Rational polyhedral cones in `ℝⁿ` with lattice `ℤⁿ`.

use std::collections::BTreeSet;

use num_integer::Integer;

use crate::error::{Error, Result};

/// Largest ambient rank accepted by the double description.
pub const MAX_DD_RANK: usize = 8;
/// Largest ambient rank accepted by the Hilbert basis enumeration.
pub const MAX_HILBERT_RANK: usize = 4;

pub type Vector = Vec<i64>;

/// A cone given by generators. Rays are primitive, sorted and distinct; a
/// cone with lineality lists each lineality direction as a pair of opposite
/// rays.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Cone {
    ambient: usize,
    rays: Vec<Vector>,
}

fn primitive(v: &[i128]) -> Vector {
    let g = v.iter().fold(0i128, |g, &x| g.gcd(&x));
    v.iter().map(|&x| i64::try_from(if g == 0 { x } else { x / g }).expect("cone entries fit in i64")).collect()
}

fn to_wide(v: &[i64]) -> Vec<i128> {
    v.iter().map(|&x| x as i128).collect()
}

fn dot(a: &[i64], b: &[i64]) -> i128 {
    a.iter().zip(b).map(|(&x, &y)| x as i128 * y as i128).sum()
}

pub(crate) fn dot_i64(a: &[i64], b: &[i64]) -> i64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

fn dot_wide(a: &[i128], b: &[i128]) -> i128 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// `a·x − b·y`, made primitive.
fn combine(a: i128, x: &[i128], b: i128, y: &[i128]) -> Vec<i128> {
    let v: Vec<i128> = x.iter().zip(y).map(|(p, q)| a * p - b * q).collect();
    let g = v.iter().fold(0i128, |g, &t| g.gcd(&t));
    if g <= 1 {
        v
    } else {
        v.iter().map(|t| t / g).collect()
    }
}

/// Rank of a list of integer vectors (fraction-free elimination).
pub fn rank(vectors: &[Vector]) -> usize {
    let mut rows: Vec<Vec<i128>> = vectors.iter().map(|v| to_wide(v)).collect();
    let cols = rows.first().map_or(0, |r| r.len());
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows.len()).find(|&i| rows[i][c] != 0) else { continue };
        rows.swap(r, p);
        for i in 0..rows.len() {
            if i != r && rows[i][c] != 0 {
                let (a, b) = (rows[r][c], rows[i][c]);
                rows[i] = combine(a, &rows[i], b, &rows[r]);
            }
        }
        r += 1;
    }
    r
}

/// Determinant of a square integer matrix given by rows.
pub fn det(m: &[Vector]) -> i128 {
    let n = m.len();
    if n == 0 {
        return 1;
    }
    // Bareiss
    let mut a: Vec<Vec<i128>> = m.iter().map(|r| to_wide(r)).collect();
    let mut sign = 1i128;
    let mut prev = 1i128;
    for k in 0..n {
        let Some(p) = (k..n).find(|&i| a[i][k] != 0) else { return 0 };
        if p != k {
            a.swap(p, k);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
            }
        }
        prev = a[k][k];
    }
    sign * a[n - 1][n - 1]
}

fn minor(m: &[Vector], skip_row: usize, skip_col: usize) -> Vec<Vector> {
    m.iter()
        .enumerate()
        .filter(|(i, _)| *i != skip_row)
        .map(|(_, r)| r.iter().enumerate().filter(|(j, _)| *j != skip_col).map(|(_, &x)| x).collect())
        .collect()
}

/// Adjugate `adj(m)` with `adj(m)·m = det(m)·id`.
fn adjugate(m: &[Vector]) -> Vec<Vec<i128>> {
    let n = m.len();
    let mut out = vec![vec![0i128; n]; n];
    for i in 0..n {
        for j in 0..n {
            let s = if (i + j) % 2 == 0 { 1 } else { -1 };
            out[j][i] = s * det(&minor(m, i, j));
        }
    }
    out
}

type Bits = Vec<u64>;

fn bits_new(n: usize) -> Bits {
    vec![0; n.div_ceil(64).max(1)]
}

fn bits_set(b: &mut Bits, i: usize) {
    b[i / 64] |= 1 << (i % 64);
}

fn bits_and(a: &Bits, b: &Bits) -> Bits {
    a.iter().zip(b).map(|(x, y)| x & y).collect()
}

fn bits_subset(a: &Bits, b: &Bits) -> bool {
    a.iter().zip(b).all(|(x, y)| x & !y == 0)
}

/// `{m : m·h ≥ 0 for all h in constraints}` as (rays, lineality basis).
fn double_description(n: usize, constraints: &[Vector]) -> (Vec<Vec<i128>>, Vec<Vec<i128>>) {
    let mut lin: Vec<Vec<i128>> = (0..n).map(|i| (0..n).map(|j| (i == j) as i128).collect()).collect();
    let mut rays: Vec<(Vec<i128>, Bits)> = Vec::new();
    let k = constraints.len();
    for (ci, h) in constraints.iter().enumerate() {
        let h = to_wide(h);
        if let Some(pos) = lin.iter().position(|l| dot_wide(&h, l) != 0) {
            let mut l0 = lin.remove(pos);
            if dot_wide(&h, &l0) < 0 {
                l0.iter_mut().for_each(|x| *x = -*x);
            }
            let a = dot_wide(&h, &l0);
            for l in &mut lin {
                let b = dot_wide(&h, l);
                if b != 0 {
                    *l = combine(a, l, b, &l0);
                }
            }
            for (r, z) in &mut rays {
                let b = dot_wide(&h, r);
                if b != 0 {
                    *r = combine(a, r, b, &l0);
                }
                bits_set(z, ci);
            }
            let mut z = bits_new(k);
            for j in 0..ci {
                bits_set(&mut z, j);
            }
            rays.push((l0, z));
            continue;
        }
        let vals: Vec<i128> = rays.iter().map(|(r, _)| dot_wide(&h, r)).collect();
        let mut next: Vec<(Vec<i128>, Bits)> = Vec::new();
        for (i, (r, z)) in rays.iter().enumerate() {
            if vals[i] > 0 {
                next.push((r.clone(), z.clone()));
            } else if vals[i] == 0 {
                let mut z = z.clone();
                bits_set(&mut z, ci);
                next.push((r.clone(), z));
            }
        }
        for p in 0..rays.len() {
            if vals[p] <= 0 {
                continue;
            }
            for q in 0..rays.len() {
                if vals[q] >= 0 {
                    continue;
                }
                let common = bits_and(&rays[p].1, &rays[q].1);
                let adjacent = (0..rays.len()).all(|r| r == p || r == q || !bits_subset(&common, &rays[r].1));
                if adjacent {
                    let v = combine(vals[p], &rays[q].0, vals[q], &rays[p].0);
                    let mut z = common;
                    bits_set(&mut z, ci);
                    next.push((v, z));
                }
            }
        }
        rays = next;
    }
    (rays.into_iter().map(|(r, _)| r).collect(), lin)
}

impl Cone {
    /// Normalizes the generators: zero vectors are dropped, the rest made
    /// primitive, sorted and deduplicated. Redundant generators are kept;
    /// see [`Cone::extremal`].
    pub fn new(ambient: usize, rays: Vec<Vector>) -> Result<Cone> {
        if let Some(r) = rays.iter().find(|r| r.len() != ambient) {
            return Err(Error::Dimension(format!("ray {r:?} in rank {ambient}")));
        }
        let set: BTreeSet<Vector> = rays.iter().filter(|r| r.iter().any(|&x| x != 0)).map(|r| primitive(&to_wide(r))).collect();
        Ok(Cone { ambient, rays: set.into_iter().collect() })
    }

    pub fn from_rays(rays: &[[i64; 4]]) -> Cone {
        Cone::new(4, rays.iter().map(|r| r.to_vec()).collect()).expect("rank-4 rays")
    }

    pub fn ambient_rank(&self) -> usize {
        self.ambient
    }

    pub fn rays(&self) -> &[Vector] {
        &self.rays
    }

    /// Dimension of the linear span.
    pub fn dim(&self) -> usize {
        rank(&self.rays)
    }

    pub fn is_full_dimensional(&self) -> bool {
        self.dim() == self.ambient
    }

    /// No line through the origin lies in the cone.
    pub fn is_strongly_convex(&self) -> Result<bool> {
        Ok(dual_cone(self)?.is_full_dimensional())
    }

    /// The same cone generated by its extremal rays (and lineality pairs).
    pub fn extremal(&self) -> Result<Cone> {
        dual_cone(&dual_cone(self)?)
    }

    pub fn contains(&self, v: &[i64]) -> Result<bool> {
        let d = dual_cone(self)?;
        Ok(d.rays.iter().all(|m| dot(m, v) >= 0))
    }

    pub fn contains_cone(&self, other: &Cone) -> Result<bool> {
        let d = dual_cone(self)?;
        Ok(other.rays.iter().all(|v| d.rays.iter().all(|m| dot(m, v) >= 0)))
    }

    /// Vectors orthogonal to every ray.
    pub fn orthogonal_contains(&self, m: &[i64]) -> bool {
        self.rays.iter().all(|v| dot(m, v) == 0)
    }

    /// Every face as a cone, sorted by dimension and then rays; the zero
    /// face comes first and the cone itself last. Requires a strongly
    /// convex cone.
    pub fn faces(&self) -> Result<Vec<Cone>> {
        let e = self.extremal()?;
        Ok(e.face_sets()?.into_iter().map(|s| e.sub(&s)).collect())
    }

    fn sub(&self, idx: &[usize]) -> Cone {
        Cone { ambient: self.ambient, rays: idx.iter().map(|&i| self.rays[i].clone()).collect() }
    }

    /// Faces as sets of ray indices.
    fn face_sets(&self) -> Result<Vec<Vec<usize>>> {
        let normals = dual_cone(self)?.rays;
        let all: Vec<usize> = (0..self.rays.len()).collect();
        let mut seen: BTreeSet<Vec<usize>> = BTreeSet::new();
        let mut stack = vec![all];
        while let Some(f) = stack.pop() {
            if !seen.insert(f.clone()) {
                continue;
            }
            for m in &normals {
                let g: Vec<usize> = f.iter().copied().filter(|&i| dot(m, &self.rays[i]) == 0).collect();
                if g.len() < f.len() {
                    stack.push(g);
                }
            }
        }
        let mut out: Vec<Vec<usize>> = seen.into_iter().collect();
        out.sort_by_key(|f| (rank(&f.iter().map(|&i| self.rays[i].clone()).collect::<Vec<_>>()), f.clone()));
        Ok(out)
    }

    /// Simplicial cones (as ray index sets) triangulating a strongly convex
    /// cone, pulling the lowest-index ray of each face first.
    fn triangulation(&self) -> Result<Vec<Vec<usize>>> {
        let faces: Vec<(Vec<usize>, usize)> = self
            .face_sets()?
            .into_iter()
            .map(|f| {
                let d = rank(&f.iter().map(|&i| self.rays[i].clone()).collect::<Vec<_>>());
                (f, d)
            })
            .collect();
        fn go(face: &[usize], dim: usize, faces: &[(Vec<usize>, usize)], out: &mut Vec<Vec<usize>>) {
            if face.len() == dim {
                out.push(face.to_vec());
                return;
            }
            let r = face[0];
            for (g, gd) in faces {
                if *gd + 1 == dim && !g.contains(&r) && g.iter().all(|i| face.contains(i)) {
                    let mut sub = Vec::new();
                    go(g, *gd, faces, &mut sub);
                    for mut s in sub {
                        s.push(r);
                        s.sort_unstable();
                        out.push(s);
                    }
                }
            }
        }
        let all: Vec<usize> = (0..self.rays.len()).collect();
        let mut out = Vec::new();
        go(&all, self.dim(), &faces, &mut out);
        Ok(out)
    }
}

/// `σ∨ = {m : ⟨m, v⟩ ≥ 0 for all v ∈ σ}`, by double description.
pub fn dual_cone(c: &Cone) -> Result<Cone> {
    if c.ambient > MAX_DD_RANK {
        return Err(Error::ResourceLimit(format!("double description in rank {} (limit {MAX_DD_RANK})", c.ambient)));
    }
    let (rays, lin) = double_description(c.ambient, &c.rays);
    let mut all: Vec<Vector> = rays.iter().map(|r| primitive(r)).collect();
    for l in &lin {
        let p = primitive(l);
        all.push(p.iter().map(|x| -x).collect());
        all.push(p);
    }
    Cone::new(c.ambient, all)
}

/// Minimal generators of the monoid `σ ∩ ℤⁿ` for a full-dimensional
/// strongly convex cone: lattice points of the fundamental parallelepipeds
/// of a triangulation, filtered to the irreducible ones.
pub fn hilbert_basis(c: &Cone) -> Result<Vec<Vector>> {
    if c.ambient > MAX_HILBERT_RANK {
        return Err(Error::ResourceLimit(format!("Hilbert basis in rank {} (limit {MAX_HILBERT_RANK})", c.ambient)));
    }
    let c = c.extremal()?;
    if !c.is_full_dimensional() || !c.is_strongly_convex()? {
        return Err(Error::Invalid("Hilbert basis needs a full-dimensional strongly convex cone".into()));
    }
    let n = c.ambient;
    let mut cand: BTreeSet<Vector> = c.rays.iter().cloned().collect();
    for simplex in c.triangulation()? {
        // columns are the rays; work with rows of B = transpose
        let b: Vec<Vector> = (0..n).map(|i| simplex.iter().map(|&r| c.rays[r][i]).collect()).collect();
        let d = det(&b);
        let adj = adjugate(&b);
        let lo: Vec<i64> = b.iter().map(|row| row.iter().filter(|&&x| x < 0).sum()).collect();
        let hi: Vec<i64> = b.iter().map(|row| row.iter().filter(|&&x| x > 0).sum()).collect();
        let mut x = lo.clone();
        loop {
            let inside = adj.iter().all(|row| {
                let mu: i128 = row.iter().zip(&x).map(|(a, &v)| a * v as i128).sum();
                if d > 0 {
                    (0..d).contains(&mu)
                } else {
                    mu <= 0 && mu > d
                }
            });
            if inside && x.iter().any(|&v| v != 0) {
                cand.insert(x.clone());
            }
            let mut i = 0;
            while i < n {
                if x[i] < hi[i] {
                    x[i] += 1;
                    break;
                }
                x[i] = lo[i];
                i += 1;
            }
            if i == n {
                break;
            }
        }
    }
    let normals = dual_cone(&c)?.rays;
    let in_cone = |v: &[i64]| normals.iter().all(|m| dot(m, v) >= 0);
    let cand: Vec<Vector> = cand.into_iter().collect();
    let out = cand
        .iter()
        .filter(|x| {
            !cand.iter().any(|y| {
                let diff: Vector = x.iter().zip(y).map(|(a, b)| a - b).collect();
                y != *x && diff.iter().any(|&v| v != 0) && in_cone(&diff)
            })
        })
        .cloned()
        .collect();
    Ok(out)
}

/// A collection of cones closed under faces.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Fan {
    rank: usize,
    cones: Vec<Cone>,
}

/// A smooth complete fan with four rays in rank 2 is the fan of a
/// Hirzebruch surface `𝔽_a`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Hirzebruch {
    pub a: i64,
    /// Rays in counterclockwise order.
    pub rays: Vec<Vector>,
    /// `a_i` with `v_{i−1} + v_{i+1} = −a_i·v_i`.
    pub wall_numbers: Vec<i64>,
}

fn half(v: &[i64]) -> bool {
    v[1] > 0 || (v[1] == 0 && v[0] > 0)
}

fn angle_cmp(a: &[i64], b: &[i64]) -> std::cmp::Ordering {
    half(b).cmp(&half(a)).then_with(|| 0.cmp(&(a[0] as i128 * b[1] as i128 - a[1] as i128 * b[0] as i128)))
}

impl Fan {
    /// The fan of all faces of the given strongly convex cones.
    pub fn from_cones(rank: usize, cones: &[Cone]) -> Result<Fan> {
        let mut set: BTreeSet<Cone> = BTreeSet::new();
        for c in cones {
            if c.ambient != rank {
                return Err(Error::Dimension(format!("cone of rank {} in a fan of rank {rank}", c.ambient)));
            }
            set.extend(c.extremal()?.faces()?);
        }
        let mut cones: Vec<Cone> = set.into_iter().collect();
        cones.sort_by_key(|c| (c.dim(), c.rays.clone()));
        Ok(Fan { rank, cones })
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn cones(&self) -> &[Cone] {
        &self.cones
    }

    pub fn rays(&self) -> Vec<Vector> {
        self.cones.iter().filter(|c| c.rays.len() == 1).map(|c| c.rays[0].clone()).collect()
    }

    pub fn maximal_cones(&self) -> Vec<&Cone> {
        self.cones.iter().filter(|c| !self.cones.iter().any(|d| d != *c && d.rays.len() > c.rays.len() && c.rays.iter().all(|r| d.rays.contains(r)))).collect()
    }

    /// Every cone is generated by part of a lattice basis.
    pub fn is_smooth(&self) -> bool {
        self.cones.iter().all(|c| {
            let k = c.rays.len();
            if rank(&c.rays) != k {
                return false;
            }
            if k == 0 {
                return true;
            }
            let m = crate::linalg::IntMatrix::from_rows(&c.rays);
            m.smith_normal_form().invariant_factors().iter().all(|d| d.magnitude() == &num_bigint::BigUint::from(1u32))
        })
    }

    /// Rays in counterclockwise order; rank 2 only.
    pub fn rays_ccw(&self) -> Vec<Vector> {
        let mut r = self.rays();
        r.sort_by(|a, b| angle_cmp(a, b));
        r
    }

    /// Whether the cones cover `ℝ^rank` without overlapping. Decided for
    /// rank 1 and 2; `None` in higher rank.
    pub fn is_complete(&self) -> Option<bool> {
        match self.rank {
            1 => {
                let r = self.rays();
                Some(r.contains(&vec![1]) && r.contains(&vec![-1]))
            }
            2 => {
                let rays = self.rays_ccw();
                if rays.len() < 3 {
                    return Some(false);
                }
                let two: BTreeSet<Vec<Vector>> = self.cones.iter().filter(|c| c.rays.len() == 2).map(|c| c.rays.clone()).collect();
                let n = rays.len();
                let mut expect = BTreeSet::new();
                for i in 0..n {
                    let (a, b) = (&rays[i], &rays[(i + 1) % n]);
                    if (a[0] as i128 * b[1] as i128 - a[1] as i128 * b[0] as i128) <= 0 {
                        return Some(false);
                    }
                    let mut pair = vec![a.clone(), b.clone()];
                    pair.sort();
                    expect.insert(pair);
                }
                Some(two == expect)
            }
            _ => None,
        }
    }

    /// Identifies `𝔽_a` from the wall relations of a smooth complete
    /// four-ray fan in rank 2.
    pub fn hirzebruch(&self) -> Option<Hirzebruch> {
        if self.rank != 2 || self.is_complete() != Some(true) || !self.is_smooth() {
            return None;
        }
        let rays = self.rays_ccw();
        if rays.len() != 4 {
            return None;
        }
        let mut walls = Vec::new();
        for i in 0..4 {
            let (p, v, q) = (&rays[(i + 3) % 4], &rays[i], &rays[(i + 1) % 4]);
            let s = [p[0] + q[0], p[1] + q[1]];
            // s = −a·v with v primitive
            let a = if v[0] != 0 { -s[0] / v[0] } else { -s[1] / v[1] };
            if s[0] != -a * v[0] || s[1] != -a * v[1] {
                return None;
            }
            walls.push(a);
        }
        let a = walls.iter().map(|x| x.abs()).max().unwrap_or(0);
        let pattern_ok = (0..4).any(|k| {
            let w: Vec<i64> = (0..4).map(|i| walls[(i + k) % 4]).collect();
            w == [a, 0, -a, 0]
        });
        pattern_ok.then_some(Hirzebruch { a, rays, wall_numbers: walls })
    }
}

/// Apply an integer matrix (given by rows) to a vector.
pub fn apply(m: &[Vector], v: &[i64]) -> Vector {
    m.iter().map(|row| row.iter().zip(v).map(|(a, b)| a * b).sum()).collect()
}

/// Images under `projection` of the faces of `sigma` containing none of
/// `removed`, as a fan.
pub fn quotient_fan(sigma: &Cone, removed: &[Cone], projection: &[Vector]) -> Result<Fan> {
    let k = projection.len();
    if projection.iter().any(|r| r.len() != sigma.ambient) {
        return Err(Error::Dimension("projection columns differ from the cone rank".into()));
    }
    if rank(projection) != k {
        return Err(Error::Dimension("projection does not have full row rank".into()));
    }
    let sigma = sigma.extremal()?;
    let mut images = Vec::new();
    for f in sigma.faces()? {
        if removed.iter().any(|r| r.rays.iter().all(|v| f.rays.contains(v)) && !r.rays.is_empty()) {
            continue;
        }
        let img = Cone::new(k, f.rays.iter().map(|v| apply(projection, v)).collect())?;
        images.push(img);
    }
    Fan::from_cones(k, &images)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cone(rays: &[&[i64]]) -> Cone {
        Cone::new(rays[0].len(), rays.iter().map(|r| r.to_vec()).collect()).unwrap()
    }

    #[test]
    fn duals() {
        let q = cone(&[&[1, 0], &[0, 1]]);
        assert_eq!(dual_cone(&q).unwrap(), q);
        let half = cone(&[&[1, 0], &[0, 1], &[0, -1]]);
        let d = dual_cone(&half).unwrap();
        assert_eq!(d.rays(), &[vec![1, 0]]);
        assert!(!half.is_strongly_convex().unwrap());
        assert_eq!(dual_cone(&d).unwrap(), half);
        let zero = Cone::new(2, vec![]).unwrap();
        assert_eq!(dual_cone(&zero).unwrap().rays().len(), 4);
    }

    #[test]
    fn hilbert_small() {
        assert_eq!(hilbert_basis(&cone(&[&[1, 0], &[1, 2]])).unwrap(), vec![vec![1, 0], vec![1, 1], vec![1, 2]]);
        assert_eq!(hilbert_basis(&cone(&[&[1, 0], &[0, 1]])).unwrap(), vec![vec![0, 1], vec![1, 0]]);
        let a = cone(&[&[1, 0, 0], &[0, 1, 0], &[1, 1, 2]]);
        assert_eq!(hilbert_basis(&a).unwrap().len(), 4);
    }

    #[test]
    fn faces_of_square_pyramid() {
        let c = cone(&[&[1, 0, 1], &[0, 1, 1], &[-1, 0, 1], &[0, -1, 1]]);
        let f = c.faces().unwrap();
        assert_eq!(f.len(), 1 + 4 + 4 + 1);
        assert_eq!(c.triangulation().unwrap().len(), 2);
    }

    #[test]
    fn hirzebruch_fans() {
        for a in 0..4 {
            let r: Vec<Vector> = vec![vec![1, 0], vec![0, 1], vec![-1, a], vec![0, -1]];
            let cones: Vec<Cone> = (0..4).map(|i| Cone::new(2, vec![r[i].clone(), r[(i + 1) % 4].clone()]).unwrap()).collect();
            let fan = Fan::from_cones(2, &cones).unwrap();
            assert_eq!(fan.is_complete(), Some(true));
            assert!(fan.is_smooth());
            assert_eq!(fan.hirzebruch().unwrap().a, a);
        }
        let line = quotient_fan(&cone(&[&[1, 0], &[0, 1]]), &[], &[vec![1, 0]]).unwrap();
        assert_eq!(line.rays(), vec![vec![1]]);
    }
}
