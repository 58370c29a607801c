//! Truncated Demazure character of e^μ Π 1/(1 − q^L e^α), expanded in Weyl
//! characters, next to the KL polynomials.

use qweight::demazure::Demazure;
use qweight::kl::KlEngine;
use qweight::length::LengthFunction;
use qweight::roots::RootType;
use qweight::weight::Weight;

fn main() -> qweight::error::Result<()> {
    let (kind, rank, q_max) = (RootType::C, 3, 4);
    let mu = Weight::zero(rank);
    let d = Demazure::new(kind, rank)?;
    let engine = KlEngine::new(kind, rank, LengthFunction::Standard)?;

    let chi = d.kl_generating_character(&mu, &LengthFunction::Standard, q_max)?;
    println!("{} weights in the truncated character", chi.len());
    for (lambda, c) in d.expand_in_characters(&chi) {
        let kl = engine.kl_weights(&lambda, &mu).truncate(q_max);
        println!("χ^{lambda}: {c}   KL = {kl}");
    }
    Ok(())
}
