//! Table of KL^L_{λμ}(q) for every dominant pair of a small rank, with the
//! standard and gl_n length functions side by side.
//!
//! Usage: `cargo run --example kl_table -- [TYPE] [RANK] [MAX_SIZE]`

use qweight::kl::KlEngine;
use qweight::length::LengthFunction;
use qweight::partition::Partition;
use qweight::roots::RootType;

fn main() -> qweight::error::Result<()> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let kind: RootType = args.first().map(|s| s.parse()).transpose()?.unwrap_or(RootType::C);
    let rank: usize = args.get(1).and_then(|s| s.parse().ok()).unwrap_or(2);
    let max_size: u32 = args.get(2).and_then(|s| s.parse().ok()).unwrap_or(3);

    let std = KlEngine::new(kind, rank, LengthFunction::Standard)?;
    let gla = KlEngine::new(kind, rank, LengthFunction::GlA)?;
    let all = Partition::all_up_to(max_size, rank);
    println!("{:<10} {:<10} {:<28} glA", "lambda", "mu", "standard");
    for l in &all {
        for m in &all {
            let p = std.kl(l, m)?;
            if p.is_zero() {
                continue;
            }
            println!("{:<10} {:<10} {:<28} {}", l.to_string(), m.to_string(), p.to_string(), gla.kl(l, m)?);
        }
    }
    Ok(())
}
