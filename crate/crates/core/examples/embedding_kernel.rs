//! Relations among the Cox ring generators as the kernel of the map to
//! `ℂ[V][t^±]`, compared with a stated presentation.

use coxalg::cases;
use coxalg::coxring::{embedding_ideal, synthesize_cox_generators};
use coxalg::driver::d8_embedding_relations;
use coxalg::matgroup::ActionConvention;

fn main() -> coxalg::Result<()> {
    let case = cases::d8(ActionConvention::Direct)?;
    let gens = synthesize_cox_generators(&case)?;
    let t = std::time::Instant::now();
    let kernel = embedding_ideal(&case, &gens)?;
    println!("kernel computed in {:?}, {} generators:", t.elapsed(), kernel.gens().len());
    for g in kernel.gens() {
        println!("  {g}");
    }
    let stated = d8_embedding_relations(&case)?;
    println!("equals the {} stated relations: {}", stated.gens().len(), kernel.equals(&stated)?);
    println!("dimension of Spec R: {}", kernel.krull_dimension()?);
    Ok(())
}
