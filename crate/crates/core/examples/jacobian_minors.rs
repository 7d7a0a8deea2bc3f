//! Searching the Jacobian of the D8 relations for 6×6 minors that are a
//! single monomial, which shows the relations cut out a smooth variety of
//! codimension 6 where that monomial is nonzero. Searches start unseeded.

use coxalg::cases::{self, d8::MINOR_CLAIMS};
use coxalg::driver::d8_embedding_relations;
use coxalg::gitfan::{monomial_minor_search, zero_out, MinorSearch};
use coxalg::matgroup::ActionConvention;

fn main() -> coxalg::Result<()> {
    let case = cases::d8(ActionConvention::Direct)?;
    let rel = d8_embedding_relations(&case)?;
    let ring = rel.ring().clone();
    let idx = |names: &[&str]| names.iter().map(|v| ring.index_of(v).expect("coordinate")).collect::<Vec<_>>();
    let opts = MinorSearch { seeds: Vec::new(), random_tries: 50_000, seed: 7 };
    for claim in &MINOR_CLAIMS {
        let g = zero_out(rel.gens(), &idx(claim.zeroed));
        let chart = format!("{{{}}} = 0, monomial in {{{}}}", claim.zeroed.join(", "), claim.support.join(", "));
        match monomial_minor_search(&g, 6, &idx(claim.support), &opts)? {
            Some(hit) => println!("{chart}: rows {:?} cols {:?} det = {}", hit.rows, hit.cols, hit.value),
            None => println!("{chart}: none found"),
        }
    }
    Ok(())
}
