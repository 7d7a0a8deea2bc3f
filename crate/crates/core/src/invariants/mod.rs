//! Invariant rings of finite matrix groups: Reynolds operator, Molien
//! series, generator search and splitting into eigenvectors of a second
//! (abelian) action.

mod graded;

use std::collections::BTreeMap;
use std::sync::Arc;

pub use graded::{monomials_of_degree, products_of_degree, Component};

use crate::arith::{CycNum, Rational};
use crate::error::{Error, Result};
use crate::groebner::SubalgebraChecker;
use crate::linalg::{linear_forms, FieldMatrix};
use crate::matgroup::{act, character_of, ActionConvention, FiniteMatrixGroup};
use crate::poly::{Poly, PolyRing};

/// An `H`-invariant polynomial that is an eigenvector of the abelianization.
#[derive(Clone, Debug, PartialEq)]
pub struct GradedGenerator {
    pub name: String,
    pub poly: Poly,
    pub degree: u32,
    /// Eigenvalue under each abelianization representative.
    pub character: Vec<CycNum>,
    /// `character[i] = ζ_{r_i}^{exponents[i]}`.
    pub exponents: Vec<u32>,
}

/// An element acting on the invariant ring together with its order in
/// `Ab(G)`; eigenvalues are recorded as powers of `ζ_order`.
#[derive(Clone, Debug)]
pub struct AbRep {
    pub matrix: FieldMatrix,
    pub order: u32,
}

impl GradedGenerator {
    /// Builds an entry with the stated character exponents (not checked).
    pub fn stated(name: &str, poly: Poly, reps: &[AbRep], exponents: Vec<u32>) -> Result<GradedGenerator> {
        let field = poly.field();
        let character = reps.iter().zip(&exponents).map(|(r, &k)| field.root_of_unity(r.order)?.pow(k as i64)).collect::<Result<Vec<_>>>()?;
        let degree = poly.total_degree().ok_or(Error::ZeroPolynomial)?;
        Ok(GradedGenerator { name: name.into(), poly, degree, character, exponents })
    }
}

/// `(1/|H|) Σ h·f`.
pub fn reynolds(f: &Poly, h: &FiniteMatrixGroup) -> Poly {
    let ring = f.ring();
    let mut acc = Poly::zero(ring);
    for g in h.elements() {
        acc = &acc + &f.substitute(&linear_forms(ring, g));
    }
    acc.scale_rational(&Rational::new(1, h.order() as i64))
}

/// `dim ℂ[V]^H_d` for `d = 0..=bound`, from `(1/|H|) Σ 1/det(1 − t h)`.
pub fn molien_series(h: &FiniteMatrixGroup, bound: u32) -> Result<Vec<u64>> {
    let field = h.field();
    let len = bound as usize + 1;
    let mut total = vec![CycNum::zero(field); len];
    for g in h.elements() {
        let c = g.reversed_char_poly();
        let mut s = vec![CycNum::zero(field); len];
        s[0] = CycNum::one(field);
        for k in 1..len {
            let mut acc = CycNum::zero(field);
            for j in 1..c.len().min(k + 1) {
                acc -= &(&c[j] * &s[k - j]);
            }
            s[k] = acc;
        }
        for k in 0..len {
            total[k] += &s[k];
        }
    }
    let inv = Rational::new(1, h.order() as i64);
    total
        .into_iter()
        .map(|x| {
            let r = x.scale(&inv).to_rational().filter(|r| r.is_integer() && !r.is_negative());
            r.and_then(|r| r.to_i64()).map(|v| v as u64).ok_or_else(|| Error::NonIntegral("Molien coefficient".into()))
        })
        .collect()
}

/// Canonical basis of `ℂ[V]^H_d`: the reduced echelon basis of the Reynolds
/// images of all degree-`d` monomials.
pub fn invariant_basis(ring: &Arc<PolyRing>, h: &FiniteMatrixGroup, d: u32) -> Result<Vec<Poly>> {
    let comp = Component::new(ring, d);
    let images: Vec<Poly> = comp.monomials().iter().map(|m| reynolds(&Poly::monomial(ring, m.clone(), CycNum::one(ring.field())), h)).collect();
    comp.span_basis(&images)
}

/// Minimal homogeneous generators of `ℂ[V]^H` up to degree `bound`.
///
/// Degree by degree, an invariant-basis element is kept when it is not in
/// the span of products of previously kept generators and kept elements of
/// the same degree.
pub fn invariant_generators(ring: &Arc<PolyRing>, h: &FiniteMatrixGroup, bound: u32) -> Result<Vec<Poly>> {
    let mut kept: Vec<Poly> = Vec::new();
    for d in 1..=bound {
        let comp = Component::new(ring, d);
        let mut span = products_of_degree(ring, &kept, d);
        let mut rank = comp.rank(&span)?;
        for b in invariant_basis(ring, h, d)? {
            span.push(b.clone());
            let r = comp.rank(&span)?;
            if r > rank {
                rank = r;
                kept.push(b);
            } else {
                span.pop();
            }
        }
    }
    Ok(kept)
}

fn homogeneous_degree(p: &Poly) -> Result<u32> {
    if !p.is_homogeneous() || p.is_zero() {
        return Err(Error::Invalid(format!("{p} is not a nonzero homogeneous polynomial")));
    }
    Ok(p.total_degree().unwrap())
}

/// Rebases the graded span of `gens` onto simultaneous eigenvectors of
/// `reps`.
///
/// Within each degree, eigenspaces are visited in lexicographic order of
/// exponent vectors and each eigenspace gets its reduced echelon basis.
pub fn split_eigenvectors(gens: &[Poly], reps: &[AbRep], conv: ActionConvention) -> Result<Vec<GradedGenerator>> {
    let ring = match gens.first() {
        Some(g) => g.ring().clone(),
        None => return Ok(Vec::new()),
    };
    let field = ring.field();
    let mut by_degree: BTreeMap<u32, Vec<Poly>> = BTreeMap::new();
    for g in gens {
        by_degree.entry(homogeneous_degree(g)?).or_default().push(g.clone());
    }
    let roots: Vec<CycNum> = reps.iter().map(|r| field.root_of_unity(r.order)).collect::<Result<_>>()?;
    let mut out = Vec::new();
    for (d, polys) in by_degree {
        let comp = Component::new(&ring, d);
        let (basis_m, piv) = comp.matrix(&polys)?.rref();
        let k = piv.len();
        let basis: Vec<Vec<CycNum>> = (0..k).map(|i| basis_m.row(i).to_vec()).collect();
        // action matrices in the basis, acting on coordinate columns
        let mut mats = Vec::new();
        for r in reps {
            let mut cols = Vec::with_capacity(k);
            for b in &basis {
                let img = comp.vector(&act(&r.matrix, &comp.poly(b), conv)?)?;
                let coords: Vec<CycNum> = piv.iter().map(|&p| img[p].clone()).collect();
                let mut back = vec![CycNum::zero(field); comp.dim()];
                for (c, bb) in coords.iter().zip(&basis) {
                    for (x, y) in back.iter_mut().zip(bb) {
                        *x += &(c * y);
                    }
                }
                if back != img {
                    return Err(Error::NonStableSpan(d));
                }
                cols.push(coords);
            }
            mats.push(FieldMatrix::from_columns(&cols)?);
        }
        let id = FieldMatrix::identity(field, k);
        let mut found = 0;
        let total: u32 = reps.iter().map(|r| r.order).product();
        for code in 0..total {
            // mixed radix, first representative most significant
            let mut exps = vec![0u32; reps.len()];
            let mut c = code;
            for (i, r) in reps.iter().enumerate().rev() {
                exps[i] = c % r.order;
                c /= r.order;
            }
            let mut rows = Vec::new();
            for (i, m) in mats.iter().enumerate() {
                let lam = roots[i].pow(exps[i] as i64)?;
                rows.extend(m.sub(&id.scale(&lam)).row_vectors());
            }
            let ker = if rows.is_empty() { id.row_vectors() } else { FieldMatrix::from_rows(rows)?.kernel() };
            if ker.is_empty() {
                continue;
            }
            let eig: Vec<Poly> = ker
                .iter()
                .map(|c| {
                    let mut v = vec![CycNum::zero(field); comp.dim()];
                    for (x, bb) in c.iter().zip(&basis) {
                        for (y, z) in v.iter_mut().zip(bb) {
                            *y += &(x * z);
                        }
                    }
                    comp.poly(&v)
                })
                .collect();
            let character: Vec<CycNum> = exps.iter().zip(&roots).map(|(&e, z)| z.pow(e as i64)).collect::<Result<_>>()?;
            for p in comp.span_basis(&eig)? {
                found += 1;
                out.push(GradedGenerator { name: format!("g{}", out.len() + 1), poly: p, degree: d, character: character.clone(), exponents: exps.clone() });
            }
        }
        if found != k {
            return Err(Error::NonStableSpan(d));
        }
    }
    Ok(out)
}

/// Outcome of one check in [`verify_generating_table`].
#[derive(Clone, Debug)]
pub struct TableCheck {
    pub id: &'static str,
    pub pass: bool,
    pub detail: String,
    pub witness: Option<String>,
}

#[derive(Clone, Debug)]
pub struct TableVerification {
    pub checks: Vec<TableCheck>,
    /// `dim ℂ[V]^H_d` for `d = 0..=bound`.
    pub molien: Vec<u64>,
    /// Dimension of the degree-`d` part of the subalgebra generated by the table.
    pub generated: Vec<usize>,
}

impl TableVerification {
    pub fn pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &TableCheck> {
        self.checks.iter().filter(|c| !c.pass)
    }
}

/// Checks that `table` consists of `H`-invariant eigenvectors with the stated
/// characters and generates `ℂ[V]^H` up to degree `bound`.
///
/// Generation is certified twice: per degree, by comparing the span of
/// products of table entries with the Molien coefficient, and per Reynolds
/// image of a monomial, by an explicit polynomial in the table entries found
/// by elimination (checked by substituting back).
pub fn verify_generating_table(table: &[GradedGenerator], h: &FiniteMatrixGroup, reps: &[AbRep], bound: u32, conv: ActionConvention) -> Result<TableVerification> {
    let ring = table.first().ok_or_else(|| Error::Invalid("empty table".into()))?.poly.ring().clone();
    let mut checks = Vec::new();

    let bad_inv = table.iter().find(|g| h.generators().iter().any(|m| act(m, &g.poly, conv).map_or(true, |x| x != g.poly)));
    checks.push(TableCheck {
        id: "invariance",
        pass: bad_inv.is_none(),
        detail: format!("{} entries checked against {} generators of H", table.len(), h.generators().len()),
        witness: bad_inv.map(|g| g.name.clone()),
    });

    let mut bad_char = None;
    'outer: for g in table {
        for (i, r) in reps.iter().enumerate() {
            let ok = matches!(character_of(&r.matrix, &g.poly, conv), Ok(ref c) if Some(c) == g.character.get(i));
            if !ok {
                let got = character_of(&r.matrix, &g.poly, conv).map(|c| c.to_string()).unwrap_or_else(|_| "not an eigenvector".into());
                bad_char = Some(format!("{} under representative {}: stated {}, found {}", g.name, i, g.character.get(i).map(|c| c.to_string()).unwrap_or_default(), got));
                break 'outer;
            }
        }
    }
    checks.push(TableCheck { id: "eigenvalues", pass: bad_char.is_none(), detail: format!("{} representatives", reps.len()), witness: bad_char });

    let polys: Vec<Poly> = table.iter().map(|g| g.poly.clone()).collect();
    let molien = molien_series(h, bound)?;
    let mut generated = vec![1usize];
    let mut dim_fail = None;
    let mut basis_fail = None;
    for d in 1..=bound {
        let comp = Component::new(&ring, d);
        let inv = invariant_basis(&ring, h, d)?;
        if inv.len() as u64 != molien[d as usize] && basis_fail.is_none() {
            basis_fail = Some(format!("degree {d}: Reynolds span {} vs Molien {}", inv.len(), molien[d as usize]));
        }
        let g = comp.rank(&products_of_degree(&ring, &polys, d))?;
        generated.push(g);
        if g as u64 != molien[d as usize] && dim_fail.is_none() {
            dim_fail = Some(format!("degree {d}: generated {g} vs Molien {}", molien[d as usize]));
        }
    }
    checks.push(TableCheck { id: "molien", pass: basis_fail.is_none(), detail: format!("Molien coefficients {:?}", molien), witness: basis_fail });
    checks.push(TableCheck { id: "graded-dimensions", pass: dim_fail.is_none(), detail: format!("generated dimensions {:?}", generated), witness: dim_fail });

    let checker = SubalgebraChecker::new(&polys, Some(bound))?;
    let mut tested = 0usize;
    let mut gen_fail = None;
    let mut seen: Vec<Poly> = Vec::new();
    'deg: for d in 1..=bound {
        for m in monomials_of_degree(ring.nvars(), d) {
            let mono = Poly::monomial(&ring, m, CycNum::one(ring.field()));
            let f = reynolds(&mono, h);
            if f.is_zero() {
                continue;
            }
            let key = f.monic(&crate::groebner::MonomialOrder::Grevlex);
            if seen.contains(&key) {
                continue;
            }
            seen.push(key);
            tested += 1;
            match checker.represent(&f)? {
                Some(rep) if rep.substitute(&polys) == f => {}
                Some(_) => {
                    gen_fail = Some(format!("certificate for R({mono}) does not substitute back"));
                    break 'deg;
                }
                None => {
                    gen_fail = Some(format!("R({mono}) = {f}"));
                    break 'deg;
                }
            }
        }
    }
    checks.push(TableCheck { id: "generation", pass: gen_fail.is_none(), detail: format!("{tested} distinct Reynolds images up to degree {bound}"), witness: gen_fail });
    Ok(TableVerification { checks, molien, generated })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::CycField;
    use crate::matgroup::group_closure;

    fn field() -> &'static CycField {
        CycField::get(12)
    }

    fn s3_h() -> (Arc<PolyRing>, FiniteMatrixGroup, AbRep) {
        let f = field();
        let e = f.zeta_pow(4);
        let ei = f.zeta_pow(8);
        let eps = FieldMatrix::diagonal(&[e.clone(), ei.clone(), e, ei]);
        let t = FieldMatrix::from_ints(f, &[&[0, 1, 0, 0], &[1, 0, 0, 0], &[0, 0, 0, 1], &[0, 0, 1, 0]]);
        let ring = PolyRing::new(&["x1", "y1", "x2", "y2"], f);
        (ring, group_closure(&[eps], 64).unwrap(), AbRep { matrix: t, order: 2 })
    }

    #[test]
    fn reynolds_basics() {
        let (r, h, _) = s3_h();
        let f = r.parse("x1*y1").unwrap();
        assert_eq!(reynolds(&f, &h), f);
        assert!(reynolds(&r.parse("x1").unwrap(), &h).is_zero());
        let g = reynolds(&r.parse("x1^2*y2 + x2").unwrap(), &h);
        assert_eq!(reynolds(&g, &h), g);
    }

    #[test]
    fn molien_small() {
        let (_, h, _) = s3_h();
        let m = molien_series(&h, 3).unwrap();
        assert_eq!(m[0], 1);
        assert_eq!(m[2], 4);
        let f = field();
        let minus = group_closure(&[FieldMatrix::identity(f, 4).scale(&CycNum::from_int(f, -1))], 4).unwrap();
        assert_eq!(molien_series(&minus, 2).unwrap(), vec![1, 0, 10]);
        let triv = group_closure(&[FieldMatrix::identity(f, 2)], 4).unwrap();
        assert_eq!(molien_series(&triv, 3).unwrap(), vec![1, 2, 3, 4]);
    }

    #[test]
    fn generators_and_split() {
        let (r, h, t) = s3_h();
        let gens = invariant_generators(&r, &h, 6).unwrap();
        let degs: Vec<u32> = gens.iter().map(|g| g.total_degree().unwrap()).collect();
        assert_eq!(degs, vec![2, 2, 2, 2, 3, 3, 3, 3, 3, 3, 3, 3]);
        let split = split_eigenvectors(&gens, std::slice::from_ref(&t), ActionConvention::Direct).unwrap();
        assert_eq!(split.iter().filter(|g| g.exponents == vec![1]).count(), 5);
        let v = verify_generating_table(&split, &h, &[t], 6, ActionConvention::Direct).unwrap();
        assert!(v.pass(), "{:?}", v.checks);
    }
}
