//! Type A: KL equals the Kostka–Foulkes polynomial, and the energy of a
//! standard tableau's column tensor equals its charge.

use qweight::crystal::{energy, kostka_foulkes, standard_tableaux};
use qweight::kl::kl_poly;
use qweight::length::LengthFunction;
use qweight::partition::Partition;
use qweight::roots::RootType;

fn main() -> qweight::error::Result<()> {
    let mu: Partition = "1,1,1,1".parse()?;
    for lambda in Partition::all_of_size(4, 4, 4) {
        let kl = kl_poly(RootType::A, 4, &lambda, &mu, &LengthFunction::Standard)?;
        println!("K_{lambda},{mu} = {}   KL = {kl}", kostka_foulkes(&lambda, &mu));
    }
    let shape: Partition = "2,1".parse()?;
    for t in standard_tableaux(&shape) {
        println!("{t}  charge {}  energy {}", t.charge(), energy(&t.column_tensor()));
    }
    Ok(())
}
