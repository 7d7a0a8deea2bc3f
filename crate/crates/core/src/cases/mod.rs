//! The three worked examples: `S3` on two copies of its standard
//! representation, `ℤ2 ≀ S2` (dihedral of order 8) on `ℂ⁴`, and the binary
//! tetrahedral group on `ℂ²⊕ℂ²`.

pub mod d8;

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::groebner::Ideal;
use crate::groupfile::{parse_group_file, GroupFile};
use crate::invariants::{AbRep, GradedGenerator};
use crate::linalg::IntMatrix;
use crate::matgroup::{group_closure, ActionConvention, FiniteMatrixGroup};
use crate::poly::{Poly, PolyRing};
use crate::coxring::CaseSpec;

pub const S3_GROUP: &str = include_str!("../../data/s3.group");
pub const D8_GROUP: &str = include_str!("../../data/d8.group");
pub const G4_GROUP: &str = include_str!("../../data/g4.group");

/// Upper bound on group orders accepted by the closure.
pub const CLOSURE_BOUND: usize = 10_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CaseName {
    S3,
    D8Wreath,
    G4,
}

impl CaseName {
    pub const ALL: [CaseName; 3] = [CaseName::S3, CaseName::D8Wreath, CaseName::G4];

    pub fn as_str(self) -> &'static str {
        match self {
            CaseName::S3 => "s3",
            CaseName::D8Wreath => "d8-wreath",
            CaseName::G4 => "g4",
        }
    }

    pub fn group_text(self) -> &'static str {
        match self {
            CaseName::S3 => S3_GROUP,
            CaseName::D8Wreath => D8_GROUP,
            CaseName::G4 => G4_GROUP,
        }
    }

    /// Degree up to which the generating table is verified.
    pub fn table_bound(self) -> u32 {
        match self {
            CaseName::S3 => 6,
            CaseName::D8Wreath => 4,
            CaseName::G4 => 6,
        }
    }
}

impl fmt::Display for CaseName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for CaseName {
    type Err = Error;

    fn from_str(s: &str) -> Result<CaseName> {
        match s {
            "s3" => Ok(CaseName::S3),
            "d8" | "d8-wreath" => Ok(CaseName::D8Wreath),
            "g4" => Ok(CaseName::G4),
            _ => Err(Error::Invalid(format!("unknown case `{s}` (expected s3, d8-wreath or g4)"))),
        }
    }
}

/// Structural facts a case's group is expected to have.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupFacts {
    pub order: usize,
    pub commutator_order: usize,
    /// Invariant factors of the abelianization.
    pub abelianization: Vec<u64>,
    /// Sizes of the conjugacy classes of symplectic reflections, sorted.
    pub reflection_class_sizes: Vec<usize>,
}

pub fn expected_group_facts(name: CaseName) -> GroupFacts {
    match name {
        CaseName::S3 => GroupFacts { order: 6, commutator_order: 3, abelianization: vec![2], reflection_class_sizes: vec![3] },
        CaseName::D8Wreath => GroupFacts { order: 8, commutator_order: 2, abelianization: vec![2, 2], reflection_class_sizes: vec![2, 2] },
        CaseName::G4 => GroupFacts { order: 24, commutator_order: 8, abelianization: vec![3], reflection_class_sizes: vec![4, 4] },
    }
}

pub fn group_facts(g: &FiniteMatrixGroup) -> Result<GroupFacts> {
    let mut sizes: Vec<usize> = g.symplectic_reflections().iter().map(|c| c.members.len()).collect();
    sizes.sort_unstable();
    Ok(GroupFacts {
        order: g.order(),
        commutator_order: g.commutator_subgroup().order(),
        abelianization: g.abelianization()?.invariants,
        reflection_class_sizes: sizes,
    })
}

pub fn group_of(file: &GroupFile) -> Result<FiniteMatrixGroup> {
    group_closure(&file.matrices(), CLOSURE_BOUND)
}

fn generator<'a>(file: &'a GroupFile, name: &str) -> &'a crate::linalg::FieldMatrix {
    &file.generators.iter().find(|(n, _)| n == name).expect("bundled group file names its generators").1
}

fn names(prefix: &str, items: impl IntoIterator<Item = impl fmt::Display>) -> Vec<String> {
    items.into_iter().map(|i| format!("{prefix}{i}")).collect()
}

fn table(ring: &Arc<PolyRing>, reps: &[AbRep], rows: &[(&str, &str, &[u32])]) -> Result<Vec<GradedGenerator>> {
    rows.iter().map(|(name, text, exps)| GradedGenerator::stated(name, ring.parse(text)?, reps, exps.to_vec())).collect()
}

fn parse_all(ring: &Arc<PolyRing>, gens: &[&str]) -> Result<Vec<Poly>> {
    gens.iter().map(|s| ring.parse(s)).collect()
}

pub fn load(name: CaseName, conv: ActionConvention) -> Result<CaseSpec> {
    match name {
        CaseName::S3 => s3(conv),
        CaseName::D8Wreath => d8(conv),
        CaseName::G4 => g4(conv),
    }
}

pub fn s3(conv: ActionConvention) -> Result<CaseSpec> {
    let file = parse_group_file(S3_GROUP)?;
    let ring = file.ring();
    let reps = vec![AbRep { matrix: generator(&file, "T").clone(), order: 2 }];
    let rows: [(&str, &str, &[u32]); 12] = [
        ("phi1", "x1*y1", &[0]),
        ("phi2", "x2*y2", &[0]),
        ("phi3", "x1*y2 + x2*y1", &[0]),
        ("phi4", "x1^3 + y1^3", &[0]),
        ("phi5", "x2^3 + y2^3", &[0]),
        ("phi6", "x1^2*x2 + y1^2*y2", &[0]),
        ("phi7", "x1*x2^2 + y1*y2^2", &[0]),
        ("phi8", "x1*y2 - x2*y1", &[1]),
        ("phi9", "x1^3 - y1^3", &[1]),
        ("phi10", "x2^3 - y2^3", &[1]),
        ("phi11", "x1^2*x2 - y1^2*y2", &[1]),
        ("phi12", "x1*x2^2 - y1*y2^2", &[1]),
    ];
    let tab = table(&ring, &reps, &rows)?;
    let inter = parse_all(&ring, &["y1*x2 - x1*y2", "x2^3 - y2^3", "x1*x2^2 - y1*y2^2", "x1^2*x2 - y1^2*y2", "x1^3 - y1^3"])?;
    Ok(CaseSpec::new("s3", &ring, group_of(&file)?, reps, tab, names("w", 1..=12), vec!["u".into()], vec!["t".into()], conv)?
        .with_intersection_gens(0, inter))
}

/// Table entries for the dihedral case in the order of the `w` variables.
pub const D8_W_NAMES: [&str; 10] = ["w01", "w02", "w03", "w04", "w12", "w13", "w14", "w23", "w24", "w34"];

fn d8_with(phi02: &str, conv: ActionConvention) -> Result<CaseSpec> {
    let file = parse_group_file(D8_GROUP)?;
    let ring = file.ring();
    let reps = vec![
        AbRep { matrix: generator(&file, "T0").clone(), order: 2 },
        AbRep { matrix: generator(&file, "T2").clone(), order: 2 },
    ];
    let rows: [(&str, &str, &[u32]); 10] = [
        ("phi01", "-2*(x1*x4 + x2*x3)", &[1, 0]),
        ("phi02", phi02, &[1, 1]),
        ("phi03", "2*z^3*(x1*x2 + x3*x4)", &[1, 0]),
        ("phi04", "2*(-x1*x2 + x3*x4)", &[1, 0]),
        ("phi12", "2*(x1*x3 - x2*x4)", &[0, 1]),
        ("phi13", "-x1^2 - x2^2 + x3^2 + x4^2", &[0, 0]),
        ("phi14", "z^3*(x1^2 + x2^2 + x3^2 + x4^2)", &[0, 0]),
        ("phi23", "z^3*(-x1^2 + x2^2 - x3^2 + x4^2)", &[0, 1]),
        ("phi24", "x1^2 - x2^2 - x3^2 + x4^2", &[0, 1]),
        ("phi34", "2*(x1*x3 + x2*x4)", &[0, 0]),
    ];
    let tab = table(&ring, &reps, &rows)?;
    let w_names = D8_W_NAMES.iter().map(|s| s.to_string()).collect();
    let spec = CaseSpec::new("d8-wreath", &ring, group_of(&file)?, reps, tab, w_names, names("u", [0, 2]), names("t", [0, 2]), conv)?;
    let k0 = parse_all(&ring, &["x1*x2", "x1*x4", "x2*x3", "x3*x4"])?;
    let k2 = parse_all(&ring, &["x1^2 - x2^2", "(x1 - x2)*(x3 + x4)", "(x3 - x4)*(x1 + x2)", "x3^2 - x4^2"])?;
    Ok(spec.with_intersection_gens(0, k0).with_intersection_gens(1, k2))
}

/// The dihedral case with `φ02 = 2i(x2x3 − x1x4)`, the sign for which the
/// relations of [`d8::EMBEDDING_RELATIONS`] hold.
pub fn d8(conv: ActionConvention) -> Result<CaseSpec> {
    d8_with(d8::PHI02_NORMALIZED, conv)
}

/// The dihedral case with the opposite sign `φ02 = 2i(x1x4 − x2x3)`.
pub fn d8_opposite_phi02(conv: ActionConvention) -> Result<CaseSpec> {
    d8_with(d8::PHI02_OPPOSITE, conv)
}

pub fn g4(conv: ActionConvention) -> Result<CaseSpec> {
    let file = parse_group_file(G4_GROUP)?;
    let ring = file.ring();
    let reps = vec![AbRep { matrix: generator(&file, "tau").clone(), order: 3 }];
    // a is a primitive 12th root of unity with a² = z^10
    let rows: [(&str, &str, &[u32]); 18] = [
        ("phi1", "y1*x2 - x1*y2", &[0]),
        ("phi2", "x2^5*y2 - x2*y2^5", &[0]),
        ("phi3", "x1^5*y1 - x1*y1^5", &[0]),
        ("phi4", "x1^4 + (-4*a^2 + 2)*x1^2*y1^2 + y1^4", &[0]),
        ("phi5", "x2^4 + (4*a^2 - 2)*x2^2*y2^2 + y2^4", &[0]),
        ("phi6", "x1*x2^3 + (-2*a^2 + 1)*y1*x2^2*y2 + (-2*a^2 + 1)*x1*x2*y2^2 + y1*y2^3", &[0]),
        ("phi7", "x1^3*x2 + (2*a^2 - 1)*x1*y1^2*x2 + (2*a^2 - 1)*x1^2*y1*y2 + y1^3*y2", &[0]),
        (
            "phi8",
            "(2*a^2 - 2)*x1^2*y1*x2^3 + (2*a^2 - 2)*x1^3*x2^2*y2 + (-2*a^2 + 2)*y1^3*x2*y2^2 + (-2*a^2 + 2)*x1*y1^2*y2^3",
            &[0],
        ),
        (
            "phi9",
            "-a^2*x1^2*x2^2 + (-(1/3)*a^2 + 2/3)*y1^2*x2^2 + (-(4/3)*a^2 + 8/3)*x1*y1*x2*y2 + (-(1/3)*a^2 + 2/3)*x1^2*y2^2 - a^2*y1^2*y2^2",
            &[1],
        ),
        ("phi10", "x2^4 + (-4*a^2 + 2)*x2^2*y2^2 + y2^4", &[1]),
        ("phi11", "x1^3*x2 + (-2*a^2 + 1)*x1*y1^2*x2 + (-2*a^2 + 1)*x1^2*y1*y2 + y1^3*y2", &[1]),
        ("phi12", "-10*x1^4*y1*x2 + 2*y1^5*x2 - 2*x1^5*y2 + 10*x1*y1^4*y2", &[1]),
        ("phi13", "2*x1*y1*x2^4 + 4*x1^2*x2^3*y2 - 4*y1^2*x2*y2^3 - 2*x1*y1*y2^4", &[1]),
        (
            "phi14",
            "(a^2 - 1)*x1^2*x2^2 + ((1/3)*a^2 + 1/3)*y1^2*x2^2 + ((4/3)*a^2 + 4/3)*x1*y1*x2*y2 + ((1/3)*a^2 + 1/3)*x1^2*y2^2 + (a^2 - 1)*y1^2*y2^2",
            &[2],
        ),
        ("phi15", "x1^4 + (4*a^2 - 2)*x1^2*y1^2 + y1^4", &[2]),
        ("phi16", "x1*x2^3 + (2*a^2 - 1)*y1*x2^2*y2 + (2*a^2 - 1)*x1*x2*y2^2 + y1*y2^3", &[2]),
        ("phi17", "2*y1*x2^5 + 10*x1*x2^4*y2 - 10*y1*x2*y2^4 - 2*x1*y2^5", &[2]),
        ("phi18", "-4*x1^3*y1*x2^2 - 2*x1^4*x2*y2 + 2*y1^4*x2*y2 + 4*x1*y1^3*y2^2", &[2]),
    ];
    let rows: Vec<(String, String, &[u32])> = rows.iter().map(|(n, t, e)| (n.to_string(), t.replace("a^2", "z^10"), *e)).collect();
    let rows: Vec<(&str, &str, &[u32])> = rows.iter().map(|(n, t, e)| (n.as_str(), t.as_str(), *e)).collect();
    let tab = table(&ring, &reps, &rows)?;
    CaseSpec::new("g4", &ring, group_of(&file)?, reps, tab, names("w", 1..=18), names("u", 1..=2), names("t", 1..=2), conv)
}

/// Expected Cox generators as `(table name, t-exponents)`; torus monomials
/// have an empty name.
pub fn expected_cox_generators(name: CaseName) -> Vec<(String, Vec<i64>)> {
    let named = |n: &str, e: &[i64]| (n.to_string(), e.to_vec());
    let mut out = Vec::new();
    match name {
        CaseName::S3 => {
            out.extend((1..=7).map(|i| named(&format!("phi{i}"), &[0])));
            out.extend((8..=12).map(|i| named(&format!("phi{i}"), &[1])));
            out.push(named("", &[-2]));
        }
        CaseName::D8Wreath => {
            out.push(named("phi02", &[1, 1]));
            out.extend(["phi01", "phi03", "phi04"].iter().map(|n| named(n, &[1, 0])));
            out.extend(["phi12", "phi23", "phi24"].iter().map(|n| named(n, &[0, 1])));
            out.extend(["phi13", "phi14", "phi34"].iter().map(|n| named(n, &[0, 0])));
            out.push(named("", &[-2, 0]));
            out.push(named("", &[0, -2]));
        }
        CaseName::G4 => {
            out.extend((1..=8).map(|i| named(&format!("phi{i}"), &[0, 0])));
            out.extend((9..=13).map(|i| named(&format!("phi{i}"), &[0, 1])));
            out.extend((14..=18).map(|i| named(&format!("phi{i}"), &[1, 0])));
            out.push(named("", &[-2, 1]));
            out.push(named("", &[1, -2]));
        }
    }
    out.sort();
    out
}

/// `|Ab(G)|` and intersection matrix for the 32-element group of which the
/// dihedral case is a subgroup: five disjoint `A1` classes.
pub fn order32_index_data() -> (u64, IntMatrix) {
    let rows: Vec<Vec<i64>> = (0..5).map(|i| (0..5).map(|j| if i == j { -2 } else { 0 }).collect()).collect();
    (16, IntMatrix::from_rows(&rows))
}

/// Both sides of `K ∩ K' ∩ K'' = (z1z4 − z2z3) + K·K'·K''` for the three
/// planes `K = (z1, z2)`, `K' = (z3, z4)`, `K'' = (z1 + z3, z2 + z4)`.
pub fn three_planes_identity() -> Result<(Ideal, Ideal)> {
    let ring = PolyRing::numbered("z", 4, crate::arith::CycField::get(1));
    let k = Ideal::parse(&ring, &["z1", "z2"])?;
    let k1 = Ideal::parse(&ring, &["z3", "z4"])?;
    let k2 = Ideal::parse(&ring, &["z1 + z3", "z2 + z4"])?;
    let lhs = Ideal::intersect_all(&[k.clone(), k1.clone(), k2.clone()])?;
    let rhs = Ideal::parse(&ring, &["z1*z4 - z2*z3"])?.sum(&k.product(&k1)?.product(&k2)?)?;
    Ok((lhs, rhs))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coxring::synthesize_cox_generators;

    #[test]
    fn group_facts_match() {
        for name in CaseName::ALL {
            let file = parse_group_file(name.group_text()).unwrap();
            let g = group_of(&file).unwrap();
            assert_eq!(group_facts(&g).unwrap(), expected_group_facts(name), "{name}");
        }
    }

    #[test]
    fn synthesis_matches() {
        for name in CaseName::ALL {
            let case = load(name, ActionConvention::Direct).unwrap();
            let mut got: Vec<_> = synthesize_cox_generators(&case).unwrap().iter().map(|g| g.signature()).collect();
            got.sort();
            assert_eq!(got, expected_cox_generators(name), "{name}");
        }
    }

    #[test]
    fn three_planes() {
        let (l, r) = three_planes_identity().unwrap();
        assert!(l.equals(&r).unwrap());
    }

    #[test]
    fn tables_verify() {
        for name in CaseName::ALL {
            let case = load(name, ActionConvention::Direct).unwrap();
            let v = crate::invariants::verify_generating_table(&case.table, &case.commutator, &case.ab_reps, name.table_bound(), case.conv).unwrap();
            assert!(v.pass(), "{name}: {:?}", v.failures().collect::<Vec<_>>());
        }
    }

    #[test]
    fn lifting_s3_and_d8() {
        for name in [CaseName::S3, CaseName::D8Wreath] {
            let case = load(name, ActionConvention::Direct).unwrap();
            let items = crate::coxring::verify_lifting_condition(&case, &crate::coxring::LiftingOptions::default());
            assert!(items.iter().all(|i| i.status != crate::report::Status::Fail));
        }
    }

    #[test]
    fn d8_embedding_ideal() {
        let case = d8(ActionConvention::Direct).unwrap();
        let gens = synthesize_cox_generators(&case).unwrap();
        let k = crate::coxring::embedding_ideal(&case, &gens).unwrap();
        let stated = Ideal::parse(k.ring(), &d8::EMBEDDING_RELATIONS).unwrap();
        assert!(k.equals(&stated).unwrap());
    }
}
