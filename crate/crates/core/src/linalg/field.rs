use std::fmt;
use std::sync::Arc;

use crate::arith::{CycField, CycNum, Rational};
use crate::error::{Error, Result};
use crate::poly::{Poly, PolyRing};

/// Dense matrix over ℚ(ζ_N), row-major.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FieldMatrix {
    rows: usize,
    cols: usize,
    data: Vec<CycNum>,
}

impl FieldMatrix {
    pub fn zeros(field: &'static CycField, rows: usize, cols: usize) -> Self {
        FieldMatrix { rows, cols, data: vec![CycNum::zero(field); rows * cols] }
    }

    pub fn identity(field: &'static CycField, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.data[i * n + i] = CycNum::one(field);
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<CycNum>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        if rows.iter().any(|x| x.len() != c) {
            return Err(Error::Dimension("ragged rows".into()));
        }
        Ok(FieldMatrix { rows: r, cols: c, data: rows.into_iter().flatten().collect() })
    }

    /// Integer matrix convenience constructor.
    pub fn from_ints(field: &'static CycField, rows: &[&[i64]]) -> Self {
        let v = rows.iter().map(|r| r.iter().map(|&x| CycNum::from_int(field, x)).collect()).collect();
        Self::from_rows(v).expect("rectangular")
    }

    pub fn diagonal(entries: &[CycNum]) -> Self {
        let f = entries.first().expect("nonempty").field();
        let n = entries.len();
        let mut m = Self::zeros(f, n, n);
        for (i, e) in entries.iter().enumerate() {
            m.data[i * n + i] = e.clone();
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn field(&self) -> &'static CycField {
        self.data.first().map_or_else(|| CycField::get(1), |x| x.field())
    }

    pub fn get(&self, i: usize, j: usize) -> &CycNum {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: CycNum) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[CycNum] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<CycNum> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn row_vectors(&self) -> Vec<Vec<CycNum>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn from_columns(cols: &[Vec<CycNum>]) -> Result<Self> {
        Ok(Self::from_rows(cols.to_vec())?.transpose())
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn is_identity(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| (0..self.cols).all(|j| if i == j { self.get(i, j).is_one() } else { self.get(i, j).is_zero() }))
    }

    pub fn transpose(&self) -> Self {
        let mut data = Vec::with_capacity(self.data.len());
        for j in 0..self.cols {
            for i in 0..self.rows {
                data.push(self.get(i, j).clone());
            }
        }
        FieldMatrix { rows: self.cols, cols: self.rows, data }
    }

    pub fn mul(&self, o: &FieldMatrix) -> Result<FieldMatrix> {
        if self.cols != o.rows {
            return Err(Error::Dimension(format!("{}x{} * {}x{}", self.rows, self.cols, o.rows, o.cols)));
        }
        let f = self.field();
        let mut out = Self::zeros(f, self.rows, o.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..o.cols {
                    let b = o.get(k, j);
                    if !b.is_zero() {
                        let idx = i * o.cols + j;
                        out.data[idx] = &out.data[idx] + &(a * b);
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &[CycNum]) -> Vec<CycNum> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|i| {
                let mut acc = CycNum::zero(self.field());
                for (a, b) in self.row(i).iter().zip(v) {
                    if !a.is_zero() && !b.is_zero() {
                        acc += &(a * b);
                    }
                }
                acc
            })
            .collect()
    }

    pub fn add(&self, o: &FieldMatrix) -> FieldMatrix {
        assert_eq!((self.rows, self.cols), (o.rows, o.cols));
        FieldMatrix { rows: self.rows, cols: self.cols, data: self.data.iter().zip(&o.data).map(|(a, b)| a + b).collect() }
    }

    pub fn sub(&self, o: &FieldMatrix) -> FieldMatrix {
        assert_eq!((self.rows, self.cols), (o.rows, o.cols));
        FieldMatrix { rows: self.rows, cols: self.cols, data: self.data.iter().zip(&o.data).map(|(a, b)| a - b).collect() }
    }

    pub fn scale(&self, c: &CycNum) -> FieldMatrix {
        FieldMatrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(|a| a * c).collect() }
    }

    pub fn pow(&self, e: u32) -> FieldMatrix {
        let mut acc = Self::identity(self.field(), self.rows);
        for _ in 0..e {
            acc = acc.mul(self).expect("square");
        }
        acc
    }

    /// Reduced row echelon form and pivot columns.
    pub fn rref(&self) -> (FieldMatrix, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !m.get(i, c).is_zero()) else { continue };
            if p != r {
                for j in 0..m.cols {
                    m.data.swap(p * m.cols + j, r * m.cols + j);
                }
            }
            let inv = m.get(r, c).inverse().expect("nonzero pivot");
            for j in c..m.cols {
                let v = m.get(r, j) * &inv;
                m.set(r, j, v);
            }
            for i in 0..m.rows {
                if i == r {
                    continue;
                }
                let f = m.get(i, c).clone();
                if f.is_zero() {
                    continue;
                }
                for j in c..m.cols {
                    let v = m.get(i, j) - &(&f * m.get(r, j));
                    m.set(i, j, v);
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Canonical basis of the right null space (one vector per free column).
    pub fn kernel(&self) -> Vec<Vec<CycNum>> {
        let (r, piv) = self.rref();
        let f = self.field();
        let free: Vec<usize> = (0..self.cols).filter(|c| !piv.contains(c)).collect();
        free.iter()
            .map(|&fc| {
                let mut v = vec![CycNum::zero(f); self.cols];
                v[fc] = CycNum::one(f);
                for (i, &pc) in piv.iter().enumerate() {
                    v[pc] = -r.get(i, fc);
                }
                v
            })
            .collect()
    }

    pub fn det(&self) -> Result<CycNum> {
        if !self.is_square() {
            return Err(Error::Dimension("determinant of a non-square matrix".into()));
        }
        let f = self.field();
        let mut m = self.clone();
        let n = self.rows;
        let mut det = CycNum::one(f);
        for c in 0..n {
            let Some(p) = (c..n).find(|&i| !m.get(i, c).is_zero()) else { return Ok(CycNum::zero(f)) };
            if p != c {
                for j in 0..n {
                    m.data.swap(p * n + j, c * n + j);
                }
                det = -det;
            }
            let piv = m.get(c, c).clone();
            det = &det * &piv;
            let inv = piv.inverse()?;
            for i in c + 1..n {
                let factor = m.get(i, c) * &inv;
                if factor.is_zero() {
                    continue;
                }
                for j in c..n {
                    let v = m.get(i, j) - &(&factor * m.get(c, j));
                    m.set(i, j, v);
                }
            }
        }
        Ok(det)
    }

    pub fn inverse(&self) -> Result<FieldMatrix> {
        if !self.is_square() {
            return Err(Error::Dimension("inverse of a non-square matrix".into()));
        }
        let n = self.rows;
        let f = self.field();
        let mut aug = Self::zeros(f, n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug.set(i, j, self.get(i, j).clone());
            }
            aug.set(i, n + i, CycNum::one(f));
        }
        let (r, piv) = aug.rref();
        if piv.len() < n || piv[n - 1] != n - 1 {
            return Err(Error::SingularMatrix);
        }
        let mut out = Self::zeros(f, n, n);
        for i in 0..n {
            for j in 0..n {
                out.set(i, j, r.get(i, n + j).clone());
            }
        }
        Ok(out)
    }

    pub fn trace(&self) -> CycNum {
        let mut t = CycNum::zero(self.field());
        for i in 0..self.rows.min(self.cols) {
            t += self.get(i, i);
        }
        t
    }

    /// Coefficients `c_0..c_n` of `det(I − t·M) = Σ c_k t^k`, by
    /// Faddeev–LeVerrier.
    pub fn reversed_char_poly(&self) -> Vec<CycNum> {
        let n = self.rows;
        let f = self.field();
        // char poly p(λ) = λ^n + a_1 λ^{n-1} + … + a_n ; det(I - tM) = 1 + a_1 t + … + a_n t^n
        let mut coeffs = vec![CycNum::one(f)];
        let id = Self::identity(f, n);
        let mut mk = Self::zeros(f, n, n);
        let mut a_prev = CycNum::one(f);
        for k in 1..=n {
            mk = self.mul(&mk.add(&id.scale(&a_prev))).expect("square");
            let a_k = mk.trace().scale(&Rational::new(-1, k as i64));
            coeffs.push(a_k.clone());
            a_prev = a_k;
        }
        coeffs
    }

    /// `f(M·x)`: each variable `x_i` is replaced by `Σ_j M_ij x_j`.
    pub fn substitute_into(&self, f: &Poly) -> Result<Poly> {
        linear_substitute(f, self)
    }
}

/// Replaces the variable vector `x` of `f` by `P·x`; `P` must be invertible.
pub fn linear_substitute(f: &Poly, p: &FieldMatrix) -> Result<Poly> {
    let ring: &Arc<PolyRing> = f.ring();
    let n = ring.nvars();
    if p.rows != n || p.cols != n {
        return Err(Error::Dimension(format!("{}x{} matrix for {} variables", p.rows, p.cols, n)));
    }
    if p.det()?.is_zero() {
        return Err(Error::SingularMatrix);
    }
    Ok(f.substitute(&linear_forms(ring, p)))
}

/// Images `Σ_j P_ij x_j` of the variables, without the invertibility check.
pub fn linear_forms(ring: &Arc<PolyRing>, p: &FieldMatrix) -> Vec<Poly> {
    let vars = ring.vars();
    (0..p.rows)
        .map(|i| {
            let mut acc = Poly::zero(ring);
            for (j, v) in vars.iter().enumerate() {
                let c = p.get(i, j);
                if !c.is_zero() {
                    acc = &acc + &v.scale(c);
                }
            }
            acc
        })
        .collect()
}

/// Simultaneous eigen-decomposition of a matrix of finite order `r`.
///
/// Returns `(P, a)` with `M = P·diag(ζ_r^{a_1},…)·P⁻¹`. Eigenvalue exponents
/// are sorted in decreasing order; inside an eigenspace the eigenvectors are
/// the rows of the reduced row echelon basis.
pub fn diagonalize_finite_order(m: &FieldMatrix, r: u32) -> Result<(FieldMatrix, Vec<u32>)> {
    if !m.is_square() {
        return Err(Error::Dimension("non-square matrix".into()));
    }
    let f = m.field();
    let zeta = f.root_of_unity(r)?;
    if !m.pow(r).is_identity() {
        return Err(Error::NotFiniteOrder(r));
    }
    let n = m.rows;
    let id = FieldMatrix::identity(f, n);
    let mut cols: Vec<Vec<CycNum>> = Vec::new();
    let mut exps = Vec::new();
    for k in (0..r).rev() {
        let lam = zeta.pow(k as i64)?;
        let ker = m.sub(&id.scale(&lam)).kernel();
        if ker.is_empty() {
            continue;
        }
        let (basis, piv) = FieldMatrix::from_rows(ker)?.rref();
        for i in 0..piv.len() {
            cols.push(basis.row(i).to_vec());
            exps.push(k);
        }
    }
    if cols.len() != n {
        return Err(Error::NotFiniteOrder(r));
    }
    Ok((FieldMatrix::from_columns(&cols)?, exps))
}

impl fmt::Debug for FieldMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, "; ")?;
            }
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", self.get(i, j))?;
            }
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f() -> &'static CycField {
        CycField::get(12)
    }

    #[test]
    fn inverse_and_det() {
        let m = FieldMatrix::from_ints(f(), &[&[2, 1], &[1, 1]]);
        assert_eq!(m.det().unwrap(), CycNum::from_int(f(), 1));
        assert!(m.mul(&m.inverse().unwrap()).unwrap().is_identity());
        let s = FieldMatrix::from_ints(f(), &[&[1, 2], &[2, 4]]);
        assert!(matches!(s.inverse(), Err(Error::SingularMatrix)));
        assert_eq!(s.kernel().len(), 1);
    }

    #[test]
    fn diagonalize_swap() {
        // coordinates (x1, y1, x2, y2); T swaps x_i and y_i
        let t = FieldMatrix::from_ints(f(), &[&[0, 1, 0, 0], &[1, 0, 0, 0], &[0, 0, 0, 1], &[0, 0, 1, 0]]);
        let (p, a) = diagonalize_finite_order(&t, 2).unwrap();
        assert_eq!(a, vec![1, 1, 0, 0]);
        let z = f().root_of_unity(2).unwrap();
        let d = FieldMatrix::diagonal(&a.iter().map(|&k| z.pow(k as i64).unwrap()).collect::<Vec<_>>());
        assert_eq!(p.mul(&d).unwrap().mul(&p.inverse().unwrap()).unwrap(), t);
        assert_eq!(p.column(0), FieldMatrix::from_ints(f(), &[&[1, -1, 0, 0]]).row(0).to_vec());
        let id = FieldMatrix::identity(f(), 3);
        assert_eq!(diagonalize_finite_order(&id, 1).unwrap(), (id.clone(), vec![0, 0, 0]));
        assert!(matches!(diagonalize_finite_order(&t, 5), Err(Error::OrderIncompatible { .. })));
        assert!(matches!(diagonalize_finite_order(&t, 3), Err(Error::NotFiniteOrder(3))));
    }

    #[test]
    fn char_poly_of_rotation() {
        let m = FieldMatrix::from_ints(f(), &[&[0, -1], &[1, 0]]);
        let c = m.reversed_char_poly();
        assert_eq!(c, vec![CycNum::one(f()), CycNum::zero(f()), CycNum::one(f())]);
    }

    #[test]
    fn substitution_example() {
        let r = PolyRing::new(&["x1", "y1", "x2", "y2"], f());
        let h = Rational::new(1, 2);
        let half = CycNum::from_rational(f(), h.clone());
        let mh = CycNum::from_rational(f(), -h);
        let z = CycNum::zero(f());
        // new coordinates (u1, v1, u2, v2) with x = (u+v)/2, y = (v-u)/2
        let p = FieldMatrix::from_rows(vec![
            vec![half.clone(), half.clone(), z.clone(), z.clone()],
            vec![mh.clone(), half.clone(), z.clone(), z.clone()],
            vec![z.clone(), z.clone(), half.clone(), half.clone()],
            vec![z.clone(), z.clone(), mh.clone(), half.clone()],
        ])
        .unwrap();
        let g = linear_substitute(&r.parse("x1*y2 - x2*y1").unwrap(), &p).unwrap();
        assert_eq!(g, r.parse("1/2*x1*y2 - 1/2*y1*x2").unwrap());
    }
}
