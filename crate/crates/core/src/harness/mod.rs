//! Verification procedures that tie the weight-multiplicity engine to the
//! crystal side, plus sweeps, reports and the persistent result cache.

mod cache;
mod checks;
pub mod grids;
mod report;
mod spec;

use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::Arc;
use std::time::Instant;

use dashmap::DashMap;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::demazure::Demazure;
use crate::error::{Error, Result};
use crate::kl::KlEngine;
use crate::length::LengthFunction;
use crate::partition::Partition;
use crate::poly::QPoly;
use crate::roots::RootType;

pub use cache::{CacheKey, KlCache};
pub use report::{write_summary_csv, CheckReport, Status, Summary};
pub use spec::{Backing, CheckKind, CheckSpec};

/// Shared state for running checks: one `KL` engine per `(type, rank, L)`,
/// one Demazure engine per `(type, rank)`, and the polynomial cache.
#[derive(Debug, Default)]
pub struct Harness {
    engines: DashMap<(RootType, usize, LengthFunction), Arc<KlEngine>>,
    demazure: DashMap<(RootType, usize), Arc<Demazure>>,
    cache: KlCache,
    evaluations: AtomicU64,
}

/// Reports of a sweep, ordered by spec key, and their counts.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Sweep {
    pub reports: Vec<CheckReport>,
    pub summary: Summary,
}

impl Harness {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with_cache(cache: KlCache) -> Self {
        Self {
            cache,
            ..Self::default()
        }
    }

    pub fn cache(&self) -> &KlCache {
        &self.cache
    }

    /// `KL` polynomials computed so far (cache hits excluded).
    pub fn evaluations(&self) -> u64 {
        self.evaluations.load(Ordering::Relaxed)
    }

    pub fn engine(&self, kind: RootType, n: usize, length: &LengthFunction) -> Result<Arc<KlEngine>> {
        let key = (kind, n, length.clone());
        if let Some(e) = self.engines.get(&key) {
            return Ok(e.clone());
        }
        let engine = Arc::new(KlEngine::new(kind, n, length.clone())?);
        Ok(self.engines.entry(key).or_insert(engine).clone())
    }

    pub fn demazure(&self, kind: RootType, n: usize) -> Result<Arc<Demazure>> {
        if let Some(d) = self.demazure.get(&(kind, n)) {
            return Ok(d.clone());
        }
        let d = Arc::new(Demazure::new(kind, n)?);
        Ok(self.demazure.entry((kind, n)).or_insert(d).clone())
    }

    /// `KL^L_{λμ}` through the cache.
    pub fn kl(
        &self,
        kind: RootType,
        n: usize,
        lambda: &Partition,
        mu: &Partition,
        length: &LengthFunction,
    ) -> Result<QPoly> {
        self.cached(kind, n, lambda, mu, length, false)
    }

    /// `∞KL^L_{λμ}` through the cache.
    pub fn stable_kl(
        &self,
        kind: RootType,
        n: usize,
        lambda: &Partition,
        mu: &Partition,
        length: &LengthFunction,
    ) -> Result<QPoly> {
        self.cached(kind, n, lambda, mu, length, true)
    }

    fn cached(
        &self,
        kind: RootType,
        n: usize,
        lambda: &Partition,
        mu: &Partition,
        length: &LengthFunction,
        stable: bool,
    ) -> Result<QPoly> {
        let key = CacheKey {
            root_type: kind,
            n,
            lambda: lambda.clone(),
            mu: mu.clone(),
            length: length.clone(),
            stable,
        };
        self.cache.get_or_compute(key, || {
            self.evaluations.fetch_add(1, Ordering::Relaxed);
            let engine = self.engine(kind, n, length)?;
            if stable {
                engine.stable_kl(lambda, mu)
            } else {
                engine.kl(lambda, mu)
            }
        })
    }

    /// Validates and runs one check. Parameter errors are returned; requests
    /// the engines refuse become `UNSUPPORTED` reports.
    pub fn run(&self, spec: &CheckSpec) -> Result<CheckReport> {
        spec.validate()?;
        let start = Instant::now();
        let report = match self.dispatch(spec) {
            Ok(r) => r,
            Err(Error::Unsupported(reason)) => CheckReport::unsupported(spec.clone(), reason),
            Err(e) => return Err(e),
        };
        Ok(CheckReport {
            millis: start.elapsed().as_millis() as u64,
            ..report
        })
    }

    fn dispatch(&self, spec: &CheckSpec) -> Result<CheckReport> {
        let std = LengthFunction::Standard;
        match spec.check {
            CheckKind::Example13 => self.verify_example_13(),
            CheckKind::Conj1Box => {
                self.verify_conj1_boxcase(spec.need_n()?, spec.need_g()?, spec.need_lambda()?)
            }
            CheckKind::Conj1Count => self.verify_conj1_count(
                spec.need_n()?,
                spec.need_g()?,
                spec.need_lambda()?,
                spec.need_mu()?,
            ),
            CheckKind::Conj2 => self.verify_conj2(spec.need_n()?, spec.need_lambda()?, spec.need_mu()?),
            CheckKind::Monotonicity => {
                self.verify_monotonicity(spec.need_n()?, spec.need_lambda()?, spec.need_mu()?)
            }
            CheckKind::KlPositivity => self.verify_kl_positivity(
                spec.need_type()?,
                spec.need_n()?,
                spec.need_lambda()?,
                spec.need_mu()?,
            ),
            CheckKind::StableIdentity => self.verify_stable_identity(
                spec.need_type()?,
                spec.need_n()?,
                spec.need_lambda()?,
                spec.need_mu()?,
            ),
            CheckKind::Stabilization => self.verify_stabilization(
                spec.need_type()?,
                spec.need_n()?,
                spec.need_lambda()?,
                spec.need_mu()?,
                spec.length.as_ref().unwrap_or(&std),
                spec.bound,
            ),
            CheckKind::TypeaCharge => {
                self.verify_typea_charge(spec.need_n()?, spec.bound.unwrap_or_default())
            }
            CheckKind::Demazure => self.verify_demazure(
                spec.need_type()?,
                spec.need_n()?,
                spec.need_mu()?,
                spec.length.as_ref().unwrap_or(&std),
                spec.bound.unwrap_or_default(),
            ),
        }
    }

    /// Runs every spec on a pool of `jobs` threads. Duplicate specs run once;
    /// reports come back sorted by spec key whatever the schedule. Every spec
    /// is validated before any work starts.
    pub fn run_sweep(&self, specs: Vec<CheckSpec>, jobs: usize) -> Result<Sweep> {
        let mut keyed: Vec<(String, CheckSpec)> = specs.into_iter().map(|s| (s.key(), s)).collect();
        keyed.sort_by(|a, b| a.0.cmp(&b.0));
        keyed.dedup_by(|a, b| a.0 == b.0);
        for (_, s) in &keyed {
            s.validate()?;
        }
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(jobs.max(1))
            .build()
            .map_err(|e| Error::Parameter(format!("cannot start {jobs} workers: {e}")))?;
        let reports = pool.install(|| {
            keyed
                .par_iter()
                .map(|(_, s)| self.run(s))
                .collect::<Result<Vec<_>>>()
        })?;
        let summary = Summary::of(&reports);
        Ok(Sweep { reports, summary })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_sweep() {
        let h = Harness::new();
        let s = h.run_sweep(Vec::new(), 2).unwrap();
        assert!(s.reports.is_empty());
        assert_eq!(s.summary, Summary::default());
        assert_eq!(s.summary.exit_code(), 0);
    }

    #[test]
    fn cache_is_used_across_checks() {
        let h = Harness::new();
        let l: Partition = "1,1".parse().unwrap();
        let a = h.kl(RootType::C, 3, &l, &Partition::empty(), &LengthFunction::Standard).unwrap();
        let b = h.kl(RootType::C, 3, &l, &Partition::empty(), &LengthFunction::Standard).unwrap();
        assert_eq!(a, b);
        assert_eq!(h.evaluations(), 1);
        assert_eq!(h.cache().hits(), 1);
    }

    #[test]
    fn invalid_spec_is_an_error() {
        let h = Harness::new();
        let bad = CheckSpec::conj1_box(2, 1, "3".parse().unwrap());
        assert!(matches!(h.run(&bad), Err(Error::Parameter(_))));
        assert!(h.run_sweep(vec![CheckSpec::example_13(), bad], 1).is_err());
    }
}
