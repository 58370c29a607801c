//! The `q`-analogue of Kostant's partition function,
//! `Π_{α>0} 1/(1 − q^{L(α)} e^α) = Σ_β P_q(β) e^β`.

use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::Arc;

use dashmap::DashMap;

use crate::error::Result;
use crate::length::LengthFunction;
use crate::poly::QPoly;
use crate::roots::{first_index, RootSystem};
use crate::weight::Weight;

/// Memoized `P_q(β)` for one root system and one length function.
///
/// Uses `P(β, k) = P(β, k+1) + q^{L(α_k)} P(β − α_k, k)` over the fixed root
/// order; the memo is keyed by `(β, k)`.
#[derive(Debug)]
pub struct QKostant {
    system: Arc<RootSystem>,
    lengths: Vec<u32>,
    heights: Vec<i64>,
    firsts: Vec<usize>,
    memo: DashMap<(Weight, usize), QPoly>,
    misses: AtomicU64,
}

impl QKostant {
    pub fn new(system: Arc<RootSystem>, length: &LengthFunction) -> Result<Self> {
        let lengths = length.values(&system)?;
        let heights = system
            .positive_roots()
            .iter()
            .map(|r| system.height(&r.vector))
            .collect();
        let firsts = system
            .positive_roots()
            .iter()
            .map(|r| first_index(r.kind))
            .collect();
        Ok(Self {
            system,
            lengths,
            heights,
            firsts,
            memo: DashMap::new(),
            misses: AtomicU64::new(0),
        })
    }

    pub fn system(&self) -> &RootSystem {
        &self.system
    }

    pub fn count(&self, beta: &Weight) -> QPoly {
        assert_eq!(beta.rank(), self.system.rank(), "weight rank mismatch");
        let h = self.system.height(beta);
        self.rec(beta, h, 0)
    }

    /// Number of memo entries actually computed.
    pub fn computed(&self) -> u64 {
        self.misses.load(Ordering::Relaxed)
    }

    fn rec(&self, beta: &Weight, h: i64, k: usize) -> QPoly {
        if h < 0 {
            return QPoly::zero();
        }
        if h == 0 || k == self.lengths.len() {
            return if beta.is_zero() { QPoly::one() } else { QPoly::zero() };
        }
        // coordinates before the first index of root k are never touched again
        if beta.0[..self.firsts[k]].iter().any(|&x| x != 0) {
            return QPoly::zero();
        }
        let key = (beta.clone(), k);
        if let Some(hit) = self.memo.get(&key) {
            return hit.clone();
        }
        self.misses.fetch_add(1, Ordering::Relaxed);
        let root = &self.system.positive_roots()[k].vector;
        let mut out = self.rec(beta, h, k + 1);
        let rest = beta - root;
        let sub = self.rec(&rest, h - self.heights[k], k);
        out.add_scaled_shifted(&sub, self.lengths[k] as usize, 1);
        self.memo.insert(key, out.clone());
        out
    }
}

/// `q_kostant(β, roots, L)`.
pub fn q_kostant(beta: &Weight, system: &RootSystem, length: &LengthFunction) -> Result<QPoly> {
    Ok(QKostant::new(Arc::new(system.clone()), length)?.count(beta))
}

/// Plain (ungraded) Kostant partition function, counted with machine
/// integers and no polynomial arithmetic.
#[derive(Debug)]
pub struct Kostant {
    system: Arc<RootSystem>,
    memo: DashMap<(Weight, usize), u64>,
}

impl Kostant {
    pub fn new(system: Arc<RootSystem>) -> Self {
        Self {
            system,
            memo: DashMap::new(),
        }
    }

    pub fn count(&self, beta: &Weight) -> u64 {
        self.rec(beta, 0)
    }

    fn rec(&self, beta: &Weight, k: usize) -> u64 {
        let roots = self.system.positive_roots();
        if self.system.height(beta) < 0 {
            return 0;
        }
        if k == roots.len() {
            return u64::from(beta.is_zero());
        }
        let key = (beta.clone(), k);
        if let Some(hit) = self.memo.get(&key) {
            return *hit;
        }
        let mut total = 0;
        let mut rest = beta.clone();
        while self.system.height(&rest) >= 0 {
            total += self.rec(&rest, k + 1);
            rest = &rest - &roots[k].vector;
        }
        self.memo.insert(key, total);
        total
    }
}
