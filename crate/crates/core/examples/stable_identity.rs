//! Stable KL with the gl_n length function against the standard one, with
//! the shift (|λ|−|μ|)/2, and the stabilization threshold k*.

use qweight::harness::{CheckSpec, Harness};
use qweight::partition::Partition;
use qweight::roots::RootType;

fn main() -> qweight::error::Result<()> {
    let h = Harness::new();
    let pairs = [("2", ""), ("2,2", "1,1"), ("2,1", "1")];
    for kind in [RootType::B, RootType::C, RootType::D] {
        for (l, m) in pairs {
            let spec = CheckSpec::stable_identity(kind, 2, l.parse::<Partition>()?, m.parse::<Partition>()?);
            println!("{}", h.run(&spec)?.line());
        }
    }
    let spec = CheckSpec::stabilization(RootType::C, 3, "1,1".parse()?, Partition::empty(), Some(4));
    let r = h.run(&spec)?;
    println!("{}  {}", r.line(), r.lhs);
    Ok(())
}
