//! The rank-3 worked example: KL, the three highest tensors, their energies
//! and ε^C, and the SSOT count.

use qweight::crystal::{energy, enumerate_highest, ssot_enumerate};
use qweight::kl::kl_poly;
use qweight::length::LengthFunction;
use qweight::partition::Partition;
use qweight::roots::RootType;
use qweight::weight::Weight;

fn main() -> qweight::error::Result<()> {
    let std = LengthFunction::Standard;
    let l: Partition = "1,1".parse()?;
    println!("KL_(1,1),0 = {}", kl_poly(RootType::C, 3, &l, &Partition::empty(), &std)?);

    let l: Partition = "2,2,1".parse()?;
    let m: Partition = "1,1,1".parse()?;
    println!("KL_(2,2,1),(1,1,1) = {}", kl_poly(RootType::C, 3, &l, &m, &std)?);

    for t in enumerate_highest(3, &Weight(vec![1, 0, 0]), 3) {
        println!("{t}  E = {}  ε^C = {}", energy(&t), t.max_index());
    }

    let shape: Partition = "1".parse()?;
    println!("SSOTs of shape (1), weight (1,1,1), g ≤ 2: {}", ssot_enumerate(&shape, &[1, 1, 1], 2).len());
    Ok(())
}
