//! Lusztig `q`-weight multiplicities through the alternating sum
//! `KL^L_{λμ}(q) = Σ_{w∈W} (−1)^w P^L_q(w(λ+ρ) − (μ+ρ))`, and the stable
//! version that sums over `S_n ⊂ W` only.

use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::Arc;

use crate::error::{param, Result};
use crate::kostant::{Kostant, QKostant};
use crate::length::LengthFunction;
use crate::partition::Partition;
use crate::poly::QPoly;
use crate::roots::{RootSystem, RootType};
use crate::weight::Weight;
use crate::weyl::{weyl_group, SignedPermutation};

/// Everything needed to evaluate `KL^L` for one `(type, rank, L)`, with the
/// partition-function memo shared across calls.
#[derive(Debug)]
pub struct KlEngine {
    system: Arc<RootSystem>,
    length: LengthFunction,
    kostant: QKostant,
    group: Vec<SignedPermutation>,
    evaluations: AtomicU64,
}

impl KlEngine {
    pub fn new(kind: RootType, rank: usize, length: LengthFunction) -> Result<Self> {
        let system = Arc::new(RootSystem::new(kind, rank)?);
        let kostant = QKostant::new(system.clone(), &length)?;
        let group = weyl_group(kind, rank)?;
        Ok(Self {
            system,
            length,
            kostant,
            group,
            evaluations: AtomicU64::new(0),
        })
    }

    pub fn system(&self) -> &RootSystem {
        &self.system
    }

    pub fn length(&self) -> &LengthFunction {
        &self.length
    }

    /// How many alternating sums this engine has evaluated.
    pub fn evaluations(&self) -> u64 {
        self.evaluations.load(Ordering::Relaxed)
    }

    pub fn q_kostant(&self, beta: &Weight) -> QPoly {
        self.kostant.count(beta)
    }

    /// `KL^L_{λμ}` for arbitrary integral weights `λ, μ` of the right rank.
    pub fn kl_weights(&self, lambda: &Weight, mu: &Weight) -> QPoly {
        self.alternating_sum(lambda, mu, false)
    }

    /// The `S_n`-restricted sum `∞KL^L_{λμ}`.
    pub fn stable_kl_weights(&self, lambda: &Weight, mu: &Weight) -> QPoly {
        self.alternating_sum(lambda, mu, true)
    }

    pub fn kl(&self, lambda: &Partition, mu: &Partition) -> Result<QPoly> {
        let (l, m) = self.weights(lambda, mu)?;
        Ok(self.kl_weights(&l, &m))
    }

    pub fn stable_kl(&self, lambda: &Partition, mu: &Partition) -> Result<QPoly> {
        let (l, m) = self.weights(lambda, mu)?;
        Ok(self.stable_kl_weights(&l, &m))
    }

    fn weights(&self, lambda: &Partition, mu: &Partition) -> Result<(Weight, Weight)> {
        let n = self.system.rank();
        for (name, p) in [("lambda", lambda), ("mu", mu)] {
            if p.len() > n {
                return param(format!("{name} = {p} has more than {n} parts"));
            }
        }
        Ok((Weight::from_partition(lambda, n), Weight::from_partition(mu, n)))
    }

    fn alternating_sum(&self, lambda: &Weight, mu: &Weight, stable_only: bool) -> QPoly {
        self.evaluations.fetch_add(1, Ordering::Relaxed);
        let two_rho = self.system.two_rho();
        let top = &lambda.scale(2) + two_rho;
        let base = &mu.scale(2) + two_rho;
        let mut total = QPoly::zero();
        for w in &self.group {
            if stable_only && !w.is_unsigned() {
                continue;
            }
            let beta = (&w.apply(&top) - &base)
                .halved()
                .expect("w(λ+ρ) − (μ+ρ) lies in the root lattice");
            let p = self.kostant.count(&beta);
            total.add_scaled_shifted(&p, 0, w.sign());
        }
        total
    }
}

/// `kl_poly(type, rank, λ, μ, L)`.
pub fn kl_poly(
    kind: RootType,
    rank: usize,
    lambda: &Partition,
    mu: &Partition,
    length: &LengthFunction,
) -> Result<QPoly> {
    KlEngine::new(kind, rank, length.clone())?.kl(lambda, mu)
}

/// `stable_kl_poly(type, rank, λ, μ, L)`.
pub fn stable_kl_poly(
    kind: RootType,
    rank: usize,
    lambda: &Partition,
    mu: &Partition,
    length: &LengthFunction,
) -> Result<QPoly> {
    KlEngine::new(kind, rank, length.clone())?.stable_kl(lambda, mu)
}

/// Dimension of the `μ`-weight space of the irreducible module `V(λ)` by
/// Kostant's multiplicity formula, with plain integer partition counts.
pub fn weight_multiplicity(
    kind: RootType,
    rank: usize,
    lambda: &Partition,
    mu: &Partition,
) -> Result<i64> {
    let system = Arc::new(RootSystem::new(kind, rank)?);
    if lambda.len() > rank || mu.len() > rank {
        return param("partition longer than the rank");
    }
    let kostant = Kostant::new(system.clone());
    let top = &Weight::from_partition(lambda, rank).scale(2) + system.two_rho();
    let base = &Weight::from_partition(mu, rank).scale(2) + system.two_rho();
    let mut total = 0i64;
    for w in weyl_group(kind, rank)? {
        let beta = (&w.apply(&top) - &base).halved().expect("root lattice");
        total += w.sign() * kostant.count(&beta) as i64;
    }
    Ok(total)
}
