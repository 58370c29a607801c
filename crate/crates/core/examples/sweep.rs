//! A parallel sweep with a persistent cache; the second run is served from
//! the cache and yields the same reports.

use qweight::harness::{grids, CheckReport, Harness, KlCache};

fn main() -> qweight::error::Result<()> {
    let dir = std::env::temp_dir().join("qweight-sweep-example");
    std::fs::create_dir_all(&dir)?;
    let path = dir.join("kl-cache.jsonl");
    let _ = std::fs::remove_file(&path);

    let specs = grids::conj1_box(3, 2);
    let mut runs = Vec::new();
    for _ in 0..2 {
        let h = Harness::with_cache(KlCache::open(&path)?);
        let sweep = h.run_sweep(specs.clone(), 4)?;
        println!(
            "{} checks, {} pass, {} KL evaluations",
            sweep.summary.total,
            sweep.summary.pass,
            h.evaluations()
        );
        runs.push(sweep.reports.iter().map(CheckReport::untimed).collect::<Vec<_>>());
    }
    println!("identical reports: {}", runs[0] == runs[1]);
    Ok(())
}
