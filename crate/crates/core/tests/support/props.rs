//! Randomized property suites shared by `properties.rs` and `acceptance.rs`.
//! Each suite runs `CASES` deterministic instances and returns the first
//! counterexample as an error string.

#![allow(dead_code)]

use std::sync::{Arc, OnceLock};

use proptest::prelude::*;
use proptest::test_runner::{Config, RngAlgorithm, TestCaseError, TestRng, TestRunner};

use coxalg::arith::{CycField, CycNum, Rational};
use coxalg::cases::{self, CaseName};
use coxalg::coxring::CaseSpec;
use coxalg::gitfan::{dual_cone, hilbert_basis, Cone};
use coxalg::groebner::{groebner_basis, GbOptions, Ideal, MonomialOrder};
use coxalg::invariants::reynolds;
use coxalg::matgroup::{act, ActionConvention};
use coxalg::poly::{Monomial, Poly, PolyRing};
use coxalg::valuation::MonomialValuation;

pub const CASES: u32 = 128;

pub const SUITES: [(&str, fn() -> Result<(), String>); 9] = [
    ("field axioms", field_axioms),
    ("Gröbner basis determinism", gb_determinism),
    ("ideal membership soundness", membership_soundness),
    ("ideal operation identities", ideal_identities),
    ("Reynolds idempotence", reynolds_idempotence),
    ("valuation additivity", valuation_additivity),
    ("valuation congruence with characters", valuation_congruence),
    ("cone double duality", cone_double_duality),
    ("Hilbert basis irreducibility", hilbert_basis_irreducible),
];

fn runner() -> TestRunner {
    let config = Config { cases: CASES, failure_persistence: None, ..Config::default() };
    TestRunner::new_with_rng(config, TestRng::deterministic_rng(RngAlgorithm::ChaCha))
}

fn run<S: Strategy>(strategy: S, test: impl Fn(S::Value) -> Result<(), TestCaseError>) -> Result<(), String> {
    runner().run(&strategy, test).map_err(|e| e.to_string())
}

fn field() -> &'static CycField {
    CycField::get(12)
}

fn cyc() -> impl Strategy<Value = CycNum> {
    prop::collection::vec((-6i64..=6, 1i64..=4), 4).prop_map(|c| {
        let k = field();
        c.iter().enumerate().fold(CycNum::zero(k), |acc, (i, &(n, d))| &acc + &(&CycNum::from_rational(k, Rational::new(n, d)) * &k.zeta_pow(i as i64)))
    })
}

/// Nonzero polynomials with up to `terms` terms, exponents `<= max_exp`
/// and coefficients `c·ζ^k`.
fn poly(ring: Arc<PolyRing>, terms: usize, max_exp: u16) -> impl Strategy<Value = Poly> {
    let n = ring.nvars();
    prop::collection::vec((prop::collection::vec(0..=max_exp, n), -3i64..=3, 0i64..12), 1..=terms).prop_filter_map("zero polynomial", move |ts| {
        let k = ring.field();
        let mut p = Poly::zero(&ring);
        for (e, c, z) in ts {
            if c != 0 {
                p.add_term(Monomial::from_exps(&e), &(&CycNum::from_int(k, c) * &k.zeta_pow(z)));
            }
        }
        (!p.is_zero()).then_some(p)
    })
}

fn xyz() -> Arc<PolyRing> {
    static R: OnceLock<Arc<PolyRing>> = OnceLock::new();
    R.get_or_init(|| PolyRing::new(&["x", "y", "z"], field())).clone()
}

fn case(name: CaseName) -> &'static CaseSpec {
    static CASES: OnceLock<Vec<CaseSpec>> = OnceLock::new();
    let all = CASES.get_or_init(|| CaseName::ALL.iter().map(|&n| cases::load(n, ActionConvention::Direct).expect("bundled case")).collect());
    &all[CaseName::ALL.iter().position(|&n| n == name).expect("case")]
}

fn valuations(name: CaseName) -> &'static [MonomialValuation] {
    static VALS: OnceLock<Vec<Vec<MonomialValuation>>> = OnceLock::new();
    let all = VALS.get_or_init(|| CaseName::ALL.iter().map(|&n| case(n).valuations().expect("valuations")).collect());
    &all[CaseName::ALL.iter().position(|&n| n == name).expect("case")]
}

fn sorted_strings(ps: &[Poly]) -> Vec<String> {
    let mut v: Vec<String> = ps.iter().map(|p| p.to_string()).collect();
    v.sort();
    v
}

#[allow(clippy::eq_op)]
pub fn field_axioms() -> Result<(), String> {
    run((cyc(), cyc(), cyc()), |(a, b, c)| {
        let k = field();
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a - &a, CycNum::zero(k));
        prop_assert_eq!(&a * &CycNum::one(k), a.clone());
        if !a.is_zero() {
            let inv = a.inverse().map_err(|e| TestCaseError::fail(e.to_string()))?;
            prop_assert!((&a * &inv).is_one());
            prop_assert_eq!(&(&b / &a) * &a, b.clone());
        }
        prop_assert_eq!(a.conj().conj(), a.clone());
        prop_assert_eq!((&a * &b).conj(), &a.conj() * &b.conj());
        Ok(())
    })
}

pub fn gb_determinism() -> Result<(), String> {
    let r = xyz();
    run(prop::collection::vec(poly(r.clone(), 3, 2), 1..=3), |gens| {
        let opts = GbOptions::default();
        let g = |gs: &[Poly]| groebner_basis(gs, &MonomialOrder::Grevlex, &opts).map(|(b, _)| sorted_strings(&b)).map_err(|e| TestCaseError::fail(e.to_string()));
        let first = g(&gens)?;
        prop_assert_eq!(&first, &g(&gens)?);
        let mut rev = gens.clone();
        rev.reverse();
        prop_assert_eq!(&first, &g(&rev)?);
        Ok(())
    })
}

pub fn membership_soundness() -> Result<(), String> {
    let r = xyz();
    let gens = prop::collection::vec(poly(r.clone(), 3, 2), 1..=3);
    let mults = prop::collection::vec(poly(r.clone(), 2, 2), 3);
    run((gens, mults, poly(r.clone(), 3, 3)), |(gens, mults, f)| {
        let err = |e: coxalg::Error| TestCaseError::fail(e.to_string());
        let i = Ideal::new(&xyz(), gens.clone());
        let comb = gens.iter().zip(&mults).fold(Poly::zero(&xyz()), |acc, (g, h)| &acc + &(g * h));
        prop_assert!(i.contains(&comb).map_err(err)?);
        for g in &gens {
            prop_assert!(i.contains(g).map_err(err)?);
        }
        // f and its normal form differ by an element of the ideal, and the
        // normal form is fixed by a second reduction
        let nf = i.normal_form(&f).map_err(err)?;
        prop_assert!(i.contains(&(&f - &nf)).map_err(err)?);
        prop_assert_eq!(i.normal_form(&nf).map_err(err)?, nf.clone());
        prop_assert_eq!(i.contains(&f).map_err(err)?, nf.is_zero());
        Ok(())
    })
}

pub fn ideal_identities() -> Result<(), String> {
    let r = xyz();
    let ideal = move || prop::collection::vec(poly(r.clone(), 2, 2), 1..=2);
    run((ideal(), ideal()), |(a, b)| {
        let err = |e: coxalg::Error| TestCaseError::fail(e.to_string());
        let i = Ideal::new(&xyz(), a);
        let j = Ideal::new(&xyz(), b);
        let cap = i.intersect(&j).map_err(err)?;
        let prod = i.product(&j).map_err(err)?;
        let sum = i.sum(&j).map_err(err)?;
        prop_assert!(cap.contains_ideal(&prod).map_err(err)?);
        prop_assert!(i.contains_ideal(&cap).map_err(err)?);
        prop_assert!(j.contains_ideal(&cap).map_err(err)?);
        prop_assert!(sum.contains_ideal(&i).map_err(err)?);
        prop_assert!(sum.equals(&j.sum(&i).map_err(err)?).map_err(err)?);
        prop_assert!(cap.equals(&j.intersect(&i).map_err(err)?).map_err(err)?);
        // (I + J)(I ∩ J) ⊆ IJ
        prop_assert!(prod.contains_ideal(&sum.product(&cap).map_err(err)?).map_err(err)?);
        Ok(())
    })
}

pub fn reynolds_idempotence() -> Result<(), String> {
    let names = [CaseName::S3, CaseName::D8Wreath, CaseName::G4];
    let strategy = (0usize..3).prop_flat_map(move |k| (Just(k), poly(case(names[k]).ring.clone(), 3, 2)));
    run(strategy, |(k, f)| {
        let c = case(names[k]);
        let rf = reynolds(&f, &c.group);
        prop_assert_eq!(reynolds(&rf, &c.group), rf.clone());
        for g in c.group.generators() {
            prop_assert_eq!(act(g, &rf, c.conv).map_err(|e| TestCaseError::fail(e.to_string()))?, rf.clone());
        }
        Ok(())
    })
}

pub fn valuation_additivity() -> Result<(), String> {
    let names = [CaseName::S3, CaseName::D8Wreath, CaseName::G4];
    let strategy = (0usize..3).prop_flat_map(move |k| {
        let r = case(names[k]).ring.clone();
        (Just(k), poly(r.clone(), 3, 2), poly(r, 3, 2))
    });
    run(strategy, |(k, f, g)| {
        let err = |e: coxalg::Error| TestCaseError::fail(e.to_string());
        for v in valuations(names[k]) {
            prop_assert_eq!(v.eval(&(&f * &g)).map_err(err)?, v.eval(&f).map_err(err)? + v.eval(&g).map_err(err)?);
        }
        Ok(())
    })
}

pub fn valuation_congruence() -> Result<(), String> {
    let names = [CaseName::S3, CaseName::D8Wreath, CaseName::G4];
    let strategy = (0usize..3).prop_flat_map(move |k| (Just(k), prop::collection::vec(0..case(names[k]).table.len(), 1..=3)));
    run(strategy, |(k, picks)| {
        let err = |e: coxalg::Error| TestCaseError::fail(e.to_string());
        let c = case(names[k]);
        let a = c.lifted_weights().map_err(err)?;
        let prod = picks.iter().fold(Poly::one(&c.ring), |acc, &j| &acc * &c.table[j].poly);
        for (i, v) in valuations(names[k]).iter().enumerate() {
            let r = c.cartan.orders[i] as u64;
            let nu = v.eval(&prod).map_err(err)?;
            let expected: u64 = picks.iter().map(|&j| a[i][j] as u64).sum();
            prop_assert_eq!(nu % r, expected % r, "class {} of {}", i, c.name);
        }
        Ok(())
    })
}

fn rays(dim: usize) -> impl Strategy<Value = Vec<Vec<i64>>> {
    prop::collection::vec(prop::collection::vec(-3i64..=3, dim), 1..=4).prop_filter("zero ray", |rs| rs.iter().all(|r| r.iter().any(|&x| x != 0)))
}

pub fn cone_double_duality() -> Result<(), String> {
    let strategy = (2usize..=4).prop_flat_map(rays);
    run(strategy, |rs| {
        let err = |e: coxalg::Error| TestCaseError::fail(e.to_string());
        let c = Cone::new(rs[0].len(), rs.clone()).map_err(err)?;
        let dd = dual_cone(&dual_cone(&c).map_err(err)?).map_err(err)?;
        for r in &rs {
            prop_assert!(dd.contains(r).map_err(err)?);
        }
        prop_assert!(c.contains_cone(&dd).map_err(err)?);
        prop_assert_eq!(dd.extremal().map_err(err)?, c.extremal().map_err(err)?);
        Ok(())
    })
}

pub fn hilbert_basis_irreducible() -> Result<(), String> {
    // last coordinate positive keeps the cone pointed
    let strategy = (2usize..=3).prop_flat_map(|dim| {
        prop::collection::vec((prop::collection::vec(-3i64..=3, dim - 1), 1i64..=3), dim..=dim + 2)
            .prop_map(|rs| rs.into_iter().map(|(mut v, z)| {
                v.push(z);
                v
            }).collect::<Vec<_>>())
            .prop_filter("not full-dimensional", |rs| Cone::new(rs[0].len(), rs.clone()).is_ok_and(|c| c.is_full_dimensional()))
    });
    run(strategy, |rs| {
        let err = |e: coxalg::Error| TestCaseError::fail(e.to_string());
        let c = Cone::new(rs[0].len(), rs.clone()).map_err(err)?;
        let hb = hilbert_basis(&c).map_err(err)?;
        for ray in c.extremal().map_err(err)?.rays() {
            prop_assert!(hb.contains(ray), "primitive ray {:?} missing from {:?}", ray, hb);
        }
        for h in &hb {
            prop_assert!(c.contains(h).map_err(err)?);
            for b in &hb {
                if b != h {
                    let d: Vec<i64> = h.iter().zip(b).map(|(x, y)| x - y).collect();
                    prop_assert!(!c.contains(&d).map_err(err)?, "{:?} = {:?} + {:?}", h, b, d);
                }
            }
        }
        Ok(())
    })
}
