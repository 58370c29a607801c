//! Classical highest weight box tensors of a given weight, with energy,
//! and a walk down one f-string.

use qweight::crystal::{energy, enumerate_highest};
use qweight::weight::Weight;

fn main() -> qweight::error::Result<()> {
    let target = Weight(vec![2, 1, 0]);
    let highest = enumerate_highest(5, &target, 3);
    println!("{} highest elements of weight {target} in (B^1,1)^⊗5:", highest.len());
    for t in &highest {
        println!("  {t}  E = {}", energy(t));
    }

    let mut t = highest[0].clone();
    println!("f_1-string from {t}:");
    while let Some(next) = t.crystal_f(1, 3)? {
        println!("  {next}  weight {}  E = {}", next.weight_in(3), energy(&next));
        t = next;
    }
    Ok(())
}
