//! Monomial valuations of finite-order operators and the dictionary between
//! valuations of invariants and intersection numbers on the resolution.

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};

use crate::arith::Rational;
use crate::error::{Error, Result};
use crate::invariants::GradedGenerator;
use crate::linalg::{diagonalize_finite_order, linear_substitute, FieldMatrix, IntMatrix};
use crate::matgroup::{character_of, ActionConvention, FiniteMatrixGroup};
use crate::poly::Poly;

/// Smallest `r ≤ limit` with `M^r = id`.
pub fn matrix_order(m: &FieldMatrix, limit: u32) -> Result<u32> {
    let id = FieldMatrix::identity(m.field(), m.rows());
    let mut cur = m.clone();
    for r in 1..=limit {
        if cur == id {
            return Ok(r);
        }
        cur = cur.mul(m)?;
    }
    Err(Error::NotFiniteOrder(limit))
}

/// `ν_T(f) = min ⟨a, α⟩` over the monomials `y^α` of `f` written in
/// eigen-coordinates `y` of `T`.
#[derive(Clone, Debug)]
pub struct MonomialValuation {
    order: u32,
    /// Columns are eigenvectors; old coordinates are `x = P y`.
    p: FieldMatrix,
    weights: Vec<u32>,
}

impl MonomialValuation {
    /// Valuation of a finite-order matrix. Weights are the exponents with
    /// which `T` scales the eigen-coordinate functions under `conv`.
    pub fn of_matrix(t: &FieldMatrix, conv: ActionConvention) -> Result<MonomialValuation> {
        let r = matrix_order(t, 4 * t.field().order().max(6))?;
        let (p, a) = diagonalize_finite_order(t, r)?;
        let weights = match conv {
            ActionConvention::Direct => a,
            ActionConvention::Inverse => a.iter().map(|&x| (r - x) % r).collect(),
        };
        Ok(MonomialValuation { order: r, p, weights })
    }

    /// A diagonal operator already in eigen-coordinates.
    pub fn diagonal(weights: Vec<u32>, order: u32, field: &'static crate::arith::CycField) -> MonomialValuation {
        let n = weights.len();
        MonomialValuation { order, p: FieldMatrix::identity(field, n), weights }
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn weights(&self) -> &[u32] {
        &self.weights
    }

    pub fn eigenbasis(&self) -> &FieldMatrix {
        &self.p
    }

    /// `f` in eigen-coordinates.
    pub fn to_eigen(&self, f: &Poly) -> Result<Poly> {
        if self.p.is_identity() {
            return Ok(f.clone());
        }
        linear_substitute(f, &self.p)
    }

    pub fn eval(&self, f: &Poly) -> Result<u64> {
        if f.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let g = self.to_eigen(f)?;
        Ok(g.terms().map(|(m, _)| m.weighted_degree(&self.weights)).min().expect("nonzero"))
    }
}

/// Free-function form of [`MonomialValuation::eval`].
pub fn nu_eval(nu: &MonomialValuation, f: &Poly) -> Result<u64> {
    nu.eval(f)
}

/// `a_ij`: `T_i φ_j = ζ_{r_i}^{a_ij} φ_j`, with `0 ≤ a_ij < r_i`.
pub fn lifted_valuation(reps: &[(FieldMatrix, u32)], gens: &[Poly], conv: ActionConvention) -> Result<Vec<Vec<u32>>> {
    reps.iter()
        .map(|(t, r)| {
            gens.iter()
                .map(|g| {
                    let c = character_of(t, g, conv)?;
                    c.discrete_log(*r).ok_or_else(|| Error::NotEigenvector(format!("{g}: eigenvalue {c} is not a power of the {r}-th root")))
                })
                .collect()
        })
        .collect()
}

/// Intersection matrix `(E_i.C_j)` with the classes it belongs to.
#[derive(Clone, Debug)]
pub struct CartanData {
    pub matrix: IntMatrix,
    /// Order `r_i` of the representative of class `i`.
    pub orders: Vec<u32>,
    /// Group-element index of each class representative.
    pub representatives: Vec<usize>,
}

impl CartanData {
    pub fn new(matrix: IntMatrix, orders: Vec<u32>, representatives: Vec<usize>) -> Result<CartanData> {
        let m = orders.len();
        if matrix.rows() != m || matrix.cols() != m {
            return Err(Error::Dimension(format!("{}x{} intersection matrix for {m} classes", matrix.rows(), matrix.cols())));
        }
        if matrix.det().is_zero() {
            return Err(Error::SingularMatrix);
        }
        Ok(CartanData { matrix, orders, representatives })
    }

    /// Assembles a direct sum of `A_{r-1}` blocks from the reflection classes:
    /// the classes of `T, T², …, T^{r−1}` form one chain.
    pub fn from_group(g: &FiniteMatrixGroup) -> Result<CartanData> {
        let mut classes = g.symplectic_reflections();
        // generators sit right after the identity, so chains start at them
        classes.sort_by_key(|c| c.representative);
        let class_of = |e: usize| classes.iter().position(|c| c.members.contains(&e));
        let mut order_in_matrix: Vec<usize> = Vec::new();
        let mut blocks: Vec<usize> = Vec::new();
        for (ci, c) in classes.iter().enumerate() {
            if order_in_matrix.contains(&ci) {
                continue;
            }
            let t = c.representative;
            let mut chain = Vec::new();
            let mut cur = t;
            for _ in 1..c.order {
                let k = class_of(cur).ok_or_else(|| Error::Hypothesis("a power of a reflection is not a reflection".into()))?;
                if chain.contains(&k) || order_in_matrix.contains(&k) {
                    return Err(Error::Hypothesis("reflection classes do not form A_n chains; supply the intersection matrix".into()));
                }
                chain.push(k);
                cur = g.mul(cur, t);
            }
            blocks.push(chain.len());
            order_in_matrix.extend(chain);
        }
        let m = order_in_matrix.len();
        let mut rows = vec![vec![0i64; m]; m];
        let mut off = 0;
        for b in blocks {
            for i in 0..b {
                rows[off + i][off + i] = -2;
                if i + 1 < b {
                    rows[off + i][off + i + 1] = 1;
                    rows[off + i + 1][off + i] = 1;
                }
            }
            off += b;
        }
        let mut reps = Vec::new();
        let mut orders = Vec::new();
        for &ci in &order_in_matrix {
            let c = &classes[ci];
            reps.push(c.representative);
            orders.push(c.order);
        }
        CartanData::new(IntMatrix::from_rows(&rows), orders, reps)
    }

    pub fn rank(&self) -> usize {
        self.orders.len()
    }

    pub fn determinant(&self) -> BigInt {
        self.matrix.det()
    }
}

/// `(D̄.C_1, …, D̄.C_m) = −(ν_1/r_1, …, ν_m/r_m) · (E_i.C_j)`.
pub fn intersection_numbers(nu: &[u64], cartan: &CartanData) -> Result<Vec<i64>> {
    let m = cartan.rank();
    if nu.len() != m {
        return Err(Error::Dimension(format!("{} valuations for {m} classes", nu.len())));
    }
    (0..m)
        .map(|j| {
            let mut acc = Rational::ZERO;
            for i in 0..m {
                let e = cartan.matrix.get(i, j).to_i64().expect("small entry");
                acc -= &(&Rational::new(nu[i] as i64, cartan.orders[i] as i64) * &Rational::from_int(e));
            }
            if !acc.is_integer() {
                return Err(Error::NonIntegral(format!("intersection number {acc} with C_{}", j + 1)));
            }
            Ok(acc.to_i64().expect("small"))
        })
        .collect()
}

/// Valuation vector `(ν_1(φ), …, ν_m(φ))` of a table entry.
pub fn valuation_vector(vals: &[MonomialValuation], g: &GradedGenerator) -> Result<Vec<u64>> {
    vals.iter().map(|v| v.eval(&g.poly)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::CycField;
    use crate::matgroup::group_closure;
    use crate::poly::PolyRing;

    fn f() -> &'static CycField {
        CycField::get(12)
    }

    #[test]
    fn s3_swap() {
        let t = FieldMatrix::from_ints(f(), &[&[0, 1, 0, 0], &[1, 0, 0, 0], &[0, 0, 0, 1], &[0, 0, 1, 0]]);
        let nu = MonomialValuation::of_matrix(&t, ActionConvention::Direct).unwrap();
        assert_eq!(nu.weights(), &[1, 1, 0, 0]);
        let r = PolyRing::new(&["x1", "y1", "x2", "y2"], f());
        assert_eq!(nu.eval(&r.parse("x1*y2 - x2*y1").unwrap()).unwrap(), 1);
        assert_eq!(nu.eval(&r.parse("x1*y1").unwrap()).unwrap(), 0);
        assert_eq!(nu.eval(&r.parse("x1^3 - y1^3").unwrap()).unwrap(), 1);
        assert_eq!(nu.eval(&r.parse("(x1 - y1)^2*(x2-y2)").unwrap()).unwrap(), 3);
        assert!(matches!(nu.eval(&Poly::zero(&r)), Err(Error::ZeroPolynomial)));
        let id = MonomialValuation::of_matrix(&FieldMatrix::identity(f(), 4), ActionConvention::Direct).unwrap();
        assert_eq!(id.eval(&r.parse("x1 + 3").unwrap()).unwrap(), 0);
    }

    #[test]
    fn cartan_and_numbers() {
        let t0 = FieldMatrix::from_ints(f(), &[&[1, 0, 0, 0], &[0, -1, 0, 0], &[0, 0, 1, 0], &[0, 0, 0, -1]]);
        let t2 = FieldMatrix::from_ints(f(), &[&[0, 1, 0, 0], &[1, 0, 0, 0], &[0, 0, 0, 1], &[0, 0, 1, 0]]);
        let g = group_closure(&[t0, t2], 64).unwrap();
        let c = CartanData::from_group(&g).unwrap();
        assert_eq!(c.matrix, IntMatrix::from_rows(&[vec![-2, 0], vec![0, -2]]));
        assert_eq!(intersection_numbers(&[1, 1], &c).unwrap(), vec![1, 1]);
        assert_eq!(intersection_numbers(&[0, 0], &c).unwrap(), vec![0, 0]);
        assert_eq!(intersection_numbers(&[1, 2], &c).unwrap(), vec![1, 2]);
        let a2 = CartanData::new(IntMatrix::from_rows(&[vec![-2, 1], vec![1, -2]]), vec![3, 3], vec![0, 0]).unwrap();
        assert_eq!(intersection_numbers(&[1, 2], &a2).unwrap(), vec![0, 1]);
        assert_eq!(intersection_numbers(&[2, 1], &a2).unwrap(), vec![1, 0]);
        assert!(matches!(intersection_numbers(&[1, 0], &a2), Err(Error::NonIntegral(_))));
    }
}
