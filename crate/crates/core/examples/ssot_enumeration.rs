//! Lists oscillating tableaux of a given shape and weight, with their
//! tensor images and ε^C.
//!
//! Usage: `cargo run --example ssot_enumeration -- [SHAPE] [WEIGHT] [GCAP]`

use qweight::crystal::ssot_enumerate;
use qweight::partition::Partition;

fn main() -> qweight::error::Result<()> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let shape: Partition = args.first().map(String::as_str).unwrap_or("1").parse()?;
    let weight: Vec<u32> = args
        .get(1)
        .map(String::as_str)
        .unwrap_or("1,2")
        .split(',')
        .filter(|s| !s.is_empty())
        .map(|s| s.parse().expect("strip sizes are integers"))
        .collect();
    let g_cap: u32 = args.get(2).and_then(|s| s.parse().ok()).unwrap_or(2);

    let all = ssot_enumerate(&shape, &weight, g_cap);
    println!("{} tableaux", all.len());
    for s in &all {
        let chain: Vec<String> = s.steps().iter().map(|st| st.peak().to_string()).collect();
        let columns: Vec<String> = s
            .to_columns()
            .iter()
            .map(|c| format!("{:?}", Vec::<i32>::from(c.clone())))
            .collect();
        println!("peaks {}  columns {}  ε^C = {}", chain.join(" "), columns.join(" ⊗ "), s.epsilon_c());
    }
    Ok(())
}
