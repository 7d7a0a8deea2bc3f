//! Geometry of the dihedral case: the embedding of `Spec R`, stability,
//! smoothness minors, the central fiber and the toric component `W02`.

use std::cell::OnceCell;
use std::sync::Arc;

use serde_json::{json, Value};

use super::{CaseConfig, Items};
use crate::cases::d8::{
    COMPONENTS, EMBEDDING_RELATIONS, CHI, MINOR_CLAIMS, PLANE_QUADRIC, PRINTED_QUOTIENT_RAYS, QUOTIENT_PROJECTION, STABLE_COMPONENTS, TORUS_CHARACTERS,
    UNSTABLE_STRATA, W02_BINOMIALS, W02_COORDS, W02_DUAL_HILBERT_BASIS, W02_RAYS, W02_SUBSTITUTION,
};
use crate::cases::d8_opposite_phi02;
use crate::coxring::{embedding_ideal, embedding_map, synthesize_cox_generators, CaseSpec, CoxGenerator};
use crate::error::{Error, Result};
use crate::gitfan::fiber::{chart_image, meets_semistable_locus, projective_curve_is_smooth};
use crate::gitfan::{
    central_fiber_ideal, dual_cone, hilbert_basis, isotropy_trivial, monomial_minor_search, orbit_face, quotient_fan, semistable_supports, supports_covered,
    toric_ideal, verify_components, zero_out, Cone, MinorSearch, Vector, WeightSystem,
};
use crate::groebner::Ideal;
use crate::linalg::{linear_substitute, FieldMatrix};
use crate::poly::{Monomial, PolyRing};
use crate::report::Outcome;

/// The stated relations of `Spec R` in `ℂ[w, u]`.
pub fn d8_embedding_relations(case: &CaseSpec) -> Result<Ideal> {
    Ideal::parse(case.embedding_ring(), &EMBEDDING_RELATIONS)
}

/// Torus weights of the coordinates of `ℂ¹²` (the exponents of `t` in the
/// images of the generators) with the linearization `(2, 1)`.
pub fn d8_weight_system(case: &CaseSpec, gens: &[CoxGenerator]) -> Result<WeightSystem> {
    WeightSystem::new(case.embedding_ring().names().to_vec(), gens.iter().map(|g| g.t_exponents.clone()).collect(), CHI.to_vec())
}

fn indices(ring: &Arc<PolyRing>, names: &[&str]) -> Result<Vec<usize>> {
    names.iter().map(|n| ring.index_of(n).ok_or_else(|| Error::Invalid(format!("no variable {n}")))).collect()
}

fn component_ideals(ring: &Arc<PolyRing>) -> Result<Vec<(String, Ideal)>> {
    COMPONENTS.iter().map(|(n, g, _)| Ok((n.to_string(), Ideal::parse(ring, g)?))).collect()
}

fn sorted_names(ws: &WeightSystem, s: &[usize]) -> Vec<String> {
    let mut v = ws.names_of(s);
    v.sort();
    v
}

/// The toric description of `W02` in binomial coordinates: its coordinate
/// ring, the character of each coordinate, and its toric ideal.
#[derive(Clone, Debug)]
pub struct W02Toric {
    pub ring: Arc<PolyRing>,
    pub sigma: Cone,
    pub coords: Vec<Vector>,
    pub toric: Ideal,
}

/// Computes the Hilbert basis of `σ^∨` and assigns its elements to the
/// coordinates of `W02` so that torus weights agree and the toric ideal is
/// the stated binomial ideal. Errors when no such assignment exists.
pub fn w02_toric_setup(ws: &WeightSystem) -> Result<W02Toric> {
    let sigma = Cone::new(4, W02_RAYS.iter().map(|r| r.to_vec()).collect())?;
    let hb = hilbert_basis(&dual_cone(&sigma)?)?;
    let ring = PolyRing::new(&W02_COORDS, ws_field());
    let binomials = Ideal::parse(&ring, &W02_BINOMIALS)?;
    let weight_of = |m: &Vector| -> Vector { TORUS_CHARACTERS.iter().map(|a| a.iter().zip(m).map(|(x, y)| x * y).sum()).collect() };
    let coord_weights: Vec<Vector> = W02_COORDS.iter().map(|n| ws.weights[ws.index_of(n).expect("W02 coordinate")].clone()).collect();
    // toric ideal with variable i standing for hb[i]
    let generic = toric_ideal(&ring, &hb)?;
    let mut found = None;
    permutations(hb.len(), &mut Vec::new(), &mut |perm: &[usize]| {
        // perm[k]: the basis element assigned to coordinate k
        if found.is_some() || (0..perm.len()).any(|k| weight_of(&hb[perm[k]]) != coord_weights[k]) {
            return Ok(());
        }
        let mut to_coord = vec![0usize; perm.len()];
        for (k, &i) in perm.iter().enumerate() {
            to_coord[i] = k;
        }
        let renamed = Ideal::new(&ring, generic.gens().iter().map(|g| g.map_vars(&ring, &to_coord)).collect());
        if renamed.equals(&binomials)? {
            found = Some((perm.iter().map(|&i| hb[i].clone()).collect::<Vec<_>>(), renamed));
        }
        Ok(())
    })?;
    let (coords, toric) = found.ok_or_else(|| Error::Invalid("no weight-compatible assignment of the Hilbert basis gives the binomials".into()))?;
    Ok(W02Toric { ring, sigma, coords, toric })
}

fn ws_field() -> &'static crate::arith::CycField {
    crate::arith::CycField::get(12)
}

fn permutations(n: usize, cur: &mut Vec<usize>, f: &mut dyn FnMut(&[usize]) -> Result<()>) -> Result<()> {
    if cur.len() == n {
        return f(cur);
    }
    for i in 0..n {
        if !cur.contains(&i) {
            cur.push(i);
            permutations(n, cur, f)?;
            cur.pop();
        }
    }
    Ok(())
}

/// Matrix `S` with `new = S·old` for the linear change of coordinates on
/// the embedding ring.
fn w02_substitution(ring: &Arc<PolyRing>) -> Result<FieldMatrix> {
    let n = ring.nvars();
    let mut s = FieldMatrix::identity(ring.field(), n);
    for (new, expr) in W02_SUBSTITUTION {
        let i = indices(ring, &[new])?[0];
        let e = ring.parse(expr)?;
        for j in 0..n {
            let mut m = Monomial::one(n);
            m.0[j] = 1;
            s.set(i, j, e.coeff(&m));
        }
    }
    Ok(s)
}

fn rays_json(rays: &[Vector]) -> Value {
    json!(rays)
}

pub(super) fn geometry_items<'f>(case: &CaseSpec, config: &CaseConfig, filter: &'f dyn Fn(&str) -> bool) -> Items<'f> {
    let mut items = Items::new(filter);
    // shared values are computed by the first item that needs them
    let gens_cell = OnceCell::new();
    let gens = || gens_cell.get_or_init(|| synthesize_cox_generators(case)).clone();
    let stated = || d8_embedding_relations(case);
    let ring = case.embedding_ring().clone();

    items.run("embedding/kernel", "the kernel of w ↦ φ̄, u ↦ t^{-2} is generated by the 20 stated relations", || {
        let k = embedding_ideal(case, &gens()?)?;
        let missing = stated()?.missing_from(&k)?.or(k.missing_from(&stated()?)?);
        let detail = match &missing {
            None => format!("kernel has {} generators, equal to the stated ideal", k.gens().len()),
            Some(p) => format!("ideals differ at {p}"),
        };
        Ok(Outcome::check(missing.is_none(), detail, json!({ "kernel": k.gen_strings() })))
    });

    items.run("embedding/opposite-sign", "with φ02 = 2i(x1x4 − x2x3) some stated relation is not in the kernel", || {
        let other = d8_opposite_phi02(case.conv)?;
        let og = synthesize_cox_generators(&other)?;
        let psi = embedding_map(&other, &og)?;
        let failing: Vec<String> = d8_embedding_relations(&other)?.gens().iter().filter(|g| !psi.apply(g).is_zero()).map(|g| g.to_string()).collect();
        Ok(Outcome::check(!failing.is_empty(), format!("{} of 20 relations fail", failing.len()), json!(failing)))
    });

    let ws = || -> Result<WeightSystem> { d8_weight_system(case, &gens()?) };
    // the stated supports as index sets
    let stated_supports = || -> Result<Vec<Vec<usize>>> {
        let ws = ws()?;
        crate::cases::d8::semistable_supports()
            .iter()
            .map(|s| {
                let mut v = s.iter().map(|n| ws.index_of(n).ok_or_else(|| Error::Invalid(format!("no variable {n}")))).collect::<Result<Vec<_>>>()?;
                v.sort_unstable();
                Ok(v)
            })
            .collect()
    };

    items.run("git/supports", "on Spec R the χ-semistable points for χ = (2, 1) are those with w02·w0i ≠ 0 or w0i·w2j ≠ 0", || {
        let ws = ws()?;
        let all = semistable_supports(&ws)?;
        let listed = stated_supports()?;
        let missing: Vec<Vec<String>> = listed.iter().filter(|s| !all.contains(s)).map(|s| sorted_names(&ws, s)).collect();
        let extra: Vec<Vec<usize>> = all.iter().filter(|s| !listed.contains(s)).cloned().collect();
        let covered = supports_covered(&stated()?, &extra, &listed)?;
        let uncovered: Vec<Vec<String>> = extra.iter().zip(&covered).filter(|(_, c)| !**c).map(|(s, _)| sorted_names(&ws, s)).collect();
        let witness = json!({
            "ambient": all.iter().map(|s| sorted_names(&ws, s)).collect::<Vec<_>>(),
            "not_minimal": missing,
            "extra_covered_on_spec_r": extra.iter().map(|s| sorted_names(&ws, s)).collect::<Vec<_>>(),
            "extra_uncovered": uncovered,
        });
        let detail = format!(
            "{} minimal supports in ℂ¹²; stated ones all minimal: {}; extra {:?} covered on Spec R: {}",
            all.len(),
            missing.is_empty(),
            extra.iter().map(|s| sorted_names(&ws, s)).collect::<Vec<_>>(),
            uncovered.is_empty()
        );
        Ok(Outcome::check(missing.is_empty() && uncovered.is_empty(), detail, witness))
    });

    items.run("git/isotropy", "every minimal semistable support has trivial isotropy", || {
        let ws = ws()?;
        let kept = stated_supports()?;
        let bad: Vec<Vec<String>> = kept.iter().filter(|s| !isotropy_trivial(&ws, s)).map(|s| sorted_names(&ws, s)).collect();
        Ok(Outcome::check(bad.is_empty() && !kept.is_empty(), format!("{} supports checked", kept.len()), json!({ "nontrivial": bad })))
    });

    for (k, claim) in MINOR_CLAIMS.iter().enumerate() {
        let anchor = format!(
            "after setting {{{}}} to zero some 6×6 Jacobian minor is a monomial in {{{}}}",
            claim.zeroed.join(", "),
            claim.support.join(", ")
        );
        items.run(format!("git/minors/{}", k + 1), anchor, || {
            let rel = stated()?;
            let zeroed = indices(&ring, claim.zeroed)?;
            let allowed = indices(&ring, claim.support)?;
            let g = zero_out(rel.gens(), &zeroed);
            let seed = (claim.rows.iter().map(|r| r - 1).collect(), claim.cols.iter().map(|c| c - 1).collect());
            let opts = MinorSearch { seeds: vec![seed], random_tries: config.minor_random_tries, seed: config.seed };
            let Some(h) = monomial_minor_search(&g, 6, &allowed, &opts)? else {
                return Ok(Outcome::check(false, "no monomial minor found", Value::Null));
            };
            let rows: Vec<usize> = h.rows.iter().map(|r| r + 1).collect();
            let cols: Vec<usize> = h.cols.iter().map(|c| c + 1).collect();
            let seeded = rows == claim.rows && cols == claim.cols;
            let detail = format!("det(rows {rows:?} | cols {cols:?}) = {}{}", h.value, if seeded { "" } else { " (found by search; stated indices differ)" });
            Ok(Outcome::check(true, detail, json!({ "rows": rows, "cols": cols, "minor": h.value.to_string(), "support": h.support, "stated_indices_hit": seeded })))
        });
    }

    let bound = config.fiber_bound.unwrap_or(case.group.order() as u32);
    let fiber_cell = OnceCell::new();
    let fiber = || fiber_cell.get_or_init(|| gens().and_then(|g| central_fiber_ideal(case, &g, &stated()?, bound))).clone();

    items.run("fiber/components", "the preimage of 0 ∈ V/G is Wu ∪ W02 ∪ W0 ∪ W2 with dimensions (2, 4, 4, 4)", || {
        let comps = component_ideals(&ring)?;
        let r = verify_components(&fiber()?, &comps)?;
        let want: Vec<usize> = COMPONENTS.iter().map(|c| c.2).collect();
        let ok = r.decomposition_holds() && r.dims == want;
        let detail = format!(
            "dims {:?}, each contains the fiber: {:?}, intersection in radical: {}, nested pairs: {:?}",
            r.dims,
            r.contains_fiber,
            r.outside_radical.is_none(),
            r.nested
        );
        Ok(Outcome::check(ok, detail, json!({ "dims": r.dims, "fiber_generators": fiber()?.gen_strings() })))
    });

    items.run("fiber/without-w0", "dropping W0 leaves part of the fiber uncovered", || {
        let comps: Vec<(String, Ideal)> = component_ideals(&ring)?.into_iter().filter(|(n, _)| n != "W0").collect();
        let r = verify_components(&fiber()?, &comps)?;
        let witness = r.outside_radical.as_ref().map(|p| p.to_string());
        Ok(Outcome::check(!r.decomposition_holds(), format!("uncovered witness: {witness:?}"), json!({ "witness": witness })))
    });

    items.run("fiber/stable", "the components with χ-stable points are exactly W2 and W02", || {
        let kept = stated_supports()?;
        let mut stable = Vec::new();
        for (n, i) in component_ideals(&ring)? {
            if meets_semistable_locus(&i, &kept)? {
                stable.push(n);
            }
        }
        let mut want: Vec<String> = STABLE_COMPONENTS.iter().map(|s| s.to_string()).collect();
        want.sort();
        stable.sort();
        Ok(Outcome::check(stable == want, format!("stable components {stable:?}"), json!(stable)))
    });

    items.run("fiber/plane-quadric", "W02 ∩ W2 on the chart w02 ≠ 0 is the smooth conic z1² + z3² + z4² = 0", || {
        let comps = component_ideals(&ring)?;
        let get = |n: &str| comps.iter().find(|c| c.0 == n).map(|c| c.1.clone()).expect("component");
        let meet = get("W02").sum(&get("W2"))?;
        let v = indices(&ring, &["w02"])?[0];
        let keep = indices(&ring, &["w01", "w03", "w04"])?;
        let img = chart_image(&meet, v, &keep, &["z1", "z3", "z4"])?;
        let q = img.ring().parse(PLANE_QUADRIC)?;
        let want = Ideal::new(img.ring(), vec![q.clone()]);
        let equal = img.equals(&want)?;
        let smooth = projective_curve_is_smooth(&q)?;
        Ok(Outcome::check(equal && smooth, format!("image {img:?}, smooth: {smooth}"), json!({ "image": img.gen_strings() })))
    });

    items.run("toric/binomial-coordinates", "after the linear change of coordinates W02 is a binomial ideal", || {
        let s = w02_substitution(&ring)?;
        let sinv = s.inverse()?;
        let w02 = Ideal::parse(&ring, COMPONENTS[1].1)?;
        let moved = Ideal::new(&ring, w02.gens().iter().map(|g| linear_substitute(g, &sinv)).collect::<Result<Vec<_>>>()?);
        let mut want: Vec<&str> = W02_BINOMIALS.to_vec();
        want.extend(["w13", "w14", "w34", "u0", "u2"]);
        let ok = moved.equals(&Ideal::parse(&ring, &want)?)?;
        Ok(Outcome::check(ok, format!("substituted ideal {moved:?}"), json!(moved.gen_strings())))
    });

    items.run("toric/dual-hilbert-basis", "σ has the five stated rays and σ^∨ has a 7-element Hilbert basis", || {
        let sigma = Cone::new(4, W02_RAYS.iter().map(|r| r.to_vec()).collect())?;
        let dual = dual_cone(&sigma)?;
        let back = dual_cone(&dual)?;
        let mut hb = hilbert_basis(&dual)?;
        hb.sort();
        let mut want: Vec<Vector> = W02_DUAL_HILBERT_BASIS.iter().map(|r| r.to_vec()).collect();
        want.sort();
        let ok = back == sigma && sigma.rays().len() == 5 && hb == want;
        Ok(Outcome::check(ok, format!("{} dual rays, Hilbert basis {hb:?}", dual.rays().len()), json!({ "dual_rays": rays_json(dual.rays()), "hilbert_basis": hb })))
    });

    let toric_cell = OnceCell::new();
    let toric = || toric_cell.get_or_init(|| ws().and_then(|w| w02_toric_setup(&w))).clone();
    items.run("toric/ideal", "the relations among the Hilbert basis are the six binomials", || {
        let t = toric()?;
        let assignment: Vec<Value> = W02_COORDS.iter().zip(&t.coords).map(|(n, c)| json!({ "coordinate": n, "character": c })).collect();
        Ok(Outcome::check(true, format!("toric ideal {:?}", t.toric), json!(assignment)))
    });

    items.run("toric/faces", "Y1 and Y2 are the orbit closures of the faces σ1 and σ2", || {
        let t = toric()?;
        let mut ok = true;
        let mut found = Vec::new();
        for (name, gens, rays) in UNSTABLE_STRATA {
            let sub = Ideal::parse(&t.ring, gens)?;
            let face = orbit_face(&t.sigma, &t.coords, &t.toric, &sub)?;
            let want = Cone::new(4, rays.iter().map(|r| r.to_vec()).collect())?;
            ok &= face == want;
            found.push(json!({ "stratum": name, "rays": face.rays() }));
        }
        let whole = orbit_face(&t.sigma, &t.coords, &t.toric, &Ideal::zero(&t.ring))?;
        ok &= whole.rays().is_empty();
        Ok(Outcome::check(ok, serde_json::to_string(&found).unwrap_or_default(), json!(found)))
    });

    items.run("toric/quotient-fan", "the quotient of W02 minus Y1 ∪ Y2 by the torus is the Hirzebruch surface 𝔽4", || {
        let sigma = Cone::new(4, W02_RAYS.iter().map(|r| r.to_vec()).collect())?;
        let removed = UNSTABLE_STRATA.iter().map(|(_, _, r)| Cone::new(4, r.iter().map(|v| v.to_vec()).collect())).collect::<Result<Vec<_>>>()?;
        let proj: Vec<Vector> = QUOTIENT_PROJECTION.iter().map(|r| r.to_vec()).collect();
        // the projection must kill exactly the torus characters
        let annihilates = proj.iter().all(|p| TORUS_CHARACTERS.iter().all(|a| a.iter().zip(p).map(|(x, y)| x * y).sum::<i64>() == 0));
        let fan = quotient_fan(&sigma, &removed, &proj)?;
        let rays = fan.rays_ccw();
        let complete = fan.is_complete() == Some(true);
        let smooth = fan.is_smooth();
        let hz = fan.hirzebruch();
        let a = hz.as_ref().map(|h| h.a);
        let printed: Vec<Vector> = PRINTED_QUOTIENT_RAYS.iter().map(|r| r.to_vec()).collect();
        let printed_spans = Cone::new(2, printed.clone())?.contains_cone(&Cone::new(2, vec![vec![1, 0], vec![-1, 0], vec![0, 1], vec![0, -1]])?)?;
        let mut sorted_rays = rays.clone();
        sorted_rays.sort();
        let mut sorted_printed = printed.clone();
        sorted_printed.sort();
        let discrepancy = sorted_rays != sorted_printed;
        let ok = annihilates && complete && smooth && rays.len() == 4 && a == Some(4);
        let detail = format!(
            "computed rays {rays:?}, complete {complete}, smooth {smooth}, Hirzebruch a = {a:?}; printed rays {printed:?} {}",
            if discrepancy {
                if printed_spans {
                    "differ from the computed ones"
                } else {
                    "differ from the computed ones and do not span the plane positively"
                }
            } else {
                "agree"
            }
        );
        let witness = json!({
            "computed_rays": rays,
            "printed_rays": printed,
            "printed_rays_span_plane": printed_spans,
            "discrepancy": discrepancy,
            "wall_numbers": hz.map(|h| h.wall_numbers),
        });
        Ok(Outcome::check(ok, detail, witness))
    });

    items
}
