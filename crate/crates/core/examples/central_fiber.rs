//! The fiber of `Spec R → V/G` over the origin for D8, as the embedding
//! ideal plus the lifted invariants of G.

use coxalg::cases;
use coxalg::coxring::synthesize_cox_generators;
use coxalg::driver::d8_embedding_relations;
use coxalg::gitfan::central_fiber_ideal;
use coxalg::matgroup::ActionConvention;

fn main() -> coxalg::Result<()> {
    let case = cases::d8(ActionConvention::Direct)?;
    let gens = synthesize_cox_generators(&case)?;
    let rel = d8_embedding_relations(&case)?;
    let fiber = central_fiber_ideal(&case, &gens, &rel, case.group.order() as u32)?;
    println!("fiber ideal with {} generators, dimension {}", fiber.gens().len(), fiber.krull_dimension()?);
    let ring = fiber.ring();
    for v in ["w13", "w14", "w34", "u0", "w02"] {
        let p = ring.parse(v)?;
        println!("  {v} vanishes on the fiber: {}", fiber.radical_contains(&p)?);
    }
    Ok(())
}
