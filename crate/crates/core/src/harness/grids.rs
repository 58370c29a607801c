//! Parameter grids for sweeps.

use crate::length::LengthFunction;
use crate::partition::Partition;
use crate::roots::RootType;

use super::spec::CheckSpec;

fn ranks(kind: RootType, max_n: usize) -> std::ops::RangeInclusive<usize> {
    let lo = if kind == RootType::D { 2 } else { 1 };
    lo..=max_n
}

/// `(λ, μ)` with at most `n` parts, `|λ| ≤ max_size` and `|μ| ≤ |λ|`.
pub fn dominant_pairs(n: usize, max_size: u32) -> Vec<(Partition, Partition)> {
    let all = Partition::all_up_to(max_size, n);
    let mut out = Vec::new();
    for lambda in &all {
        for mu in &all {
            if mu.size() <= lambda.size() {
                out.push((lambda.clone(), mu.clone()));
            }
        }
    }
    out
}

/// Every `λ ⊆ (gⁿ)` for `n ≤ max_n`, `g ≤ max_g`.
pub fn conj1_box(max_n: usize, max_g: u32) -> Vec<CheckSpec> {
    let mut out = Vec::new();
    for n in 1..=max_n {
        for g in 1..=max_g {
            for lambda in Partition::all_in_rectangle(n, g) {
                out.push(CheckSpec::conj1_box(n, g, lambda));
            }
        }
    }
    out
}

/// Every `λ, μ ⊆ (gⁿ)` for `n ≤ max_n`, `g ≤ max_g`.
pub fn conj1_count(max_n: usize, max_g: u32) -> Vec<CheckSpec> {
    let mut out = Vec::new();
    for n in 1..=max_n {
        for g in 1..=max_g {
            let rect = Partition::all_in_rectangle(n, g);
            for lambda in &rect {
                for mu in &rect {
                    out.push(CheckSpec::conj1_count(n, g, lambda.clone(), mu.clone()));
                }
            }
        }
    }
    out
}

pub fn conj2(max_n: usize, max_size: u32) -> Vec<CheckSpec> {
    pairs(max_n, max_size, CheckSpec::conj2)
}

pub fn monotonicity(max_n: usize, max_size: u32) -> Vec<CheckSpec> {
    pairs(max_n, max_size, CheckSpec::monotonicity)
}

pub fn kl_positivity(kind: RootType, max_n: usize, max_size: u32) -> Vec<CheckSpec> {
    let mut out = Vec::new();
    for n in ranks(kind, max_n) {
        for (l, m) in dominant_pairs(n, max_size) {
            out.push(CheckSpec::kl_positivity(kind, n, l, m));
        }
    }
    out
}

fn pairs(
    max_n: usize,
    max_size: u32,
    make: fn(usize, Partition, Partition) -> CheckSpec,
) -> Vec<CheckSpec> {
    let mut out = Vec::new();
    for n in 1..=max_n {
        for (l, m) in dominant_pairs(n, max_size) {
            out.push(make(n, l, m));
        }
    }
    out
}

pub fn stable_identity(kinds: &[RootType], max_n: usize, max_size: u32) -> Vec<CheckSpec> {
    let mut out = Vec::new();
    for &kind in kinds {
        for n in ranks(kind, max_n) {
            for (l, m) in dominant_pairs(n, max_size) {
                out.push(CheckSpec::stable_identity(kind, n, l, m));
            }
        }
    }
    out
}

/// Every `λ, μ` with `|λ|, |μ| ≤ max_size` and the default `k_max`.
pub fn stabilization(kind: RootType, max_n: usize, max_size: u32) -> Vec<CheckSpec> {
    let mut out = Vec::new();
    for n in ranks(kind, max_n) {
        let all = Partition::all_up_to(max_size, n);
        for l in &all {
            for m in &all {
                out.push(CheckSpec::stabilization(kind, n, l.clone(), m.clone(), None));
            }
        }
    }
    out
}

pub fn typea_charge(max_n: usize, weight_bound: u32) -> Vec<CheckSpec> {
    (1..=max_n).map(|n| CheckSpec::typea_charge(n, weight_bound)).collect()
}

/// Every `μ` with `|μ| ≤ max_size` for one `(type, rank)`.
pub fn demazure(kind: RootType, n: usize, max_size: u32, length: &LengthFunction, q_max: u32) -> Vec<CheckSpec> {
    Partition::all_up_to(max_size, n)
        .into_iter()
        .map(|mu| CheckSpec::demazure(kind, n, mu, length.clone(), q_max))
        .collect()
}

/// The full default suite.
pub fn default_suite() -> Vec<CheckSpec> {
    let mut out = vec![CheckSpec::example_13()];
    out.extend(conj1_box(4, 3));
    out.extend(conj1_count(3, 2));
    out.extend(conj2(3, 6));
    out.extend(monotonicity(3, 6));
    out.extend(kl_positivity(RootType::C, 3, 6));
    out.extend(stable_identity(&[RootType::B, RootType::C, RootType::D], 3, 5));
    out.extend(stabilization(RootType::C, 3, 4));
    out.extend(typea_charge(4, 6));
    for n in [2, 3] {
        out.extend(demazure(RootType::C, n, 3, &LengthFunction::Standard, 6));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grid_sizes() {
        // 1 + 2 + 3 + 4 partitions in the n×1 boxes, and so on
        assert_eq!(conj1_box(1, 1).len(), 2);
        assert_eq!(conj1_box(2, 2).len(), 2 + 3 + 3 + 6);
        assert_eq!(conj1_count(1, 1).len(), 4);
        assert!(stable_identity(&[RootType::D], 1, 3).is_empty());
        assert_eq!(dominant_pairs(1, 2).len(), 6);
        assert_eq!(typea_charge(4, 6).len(), 4);
    }
}
