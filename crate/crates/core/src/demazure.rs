//! Demazure operators on `Z[q][P]`, truncated in `q`-degree.
//!
//! This is the independent route to `KL^L`: apply `D_{w0}` to
//! `e^μ Π_{α>0} 1/(1 − q^{L(α)} e^α)` and compare with `Σ_λ KL^L_{λμ} χ^λ`.
//! The weight placed inside the operator is the lower index of `KL`.

use std::collections::btree_map::Entry;
use std::collections::{BTreeMap, BTreeSet, HashSet};
use std::sync::Arc;

use dashmap::DashMap;

use crate::error::{Error, Result};
use crate::kl::KlEngine;
use crate::length::LengthFunction;
use crate::poly::QPoly;
use crate::roots::{RootSystem, RootType};
use crate::weight::Weight;
use crate::weyl::weyl_group;

/// A finite sum `Σ c_β(q) e^β` with every `c_β` of degree at most
/// `max_degree`. Zero coefficients are never stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FormalCharacter {
    terms: BTreeMap<Weight, QPoly>,
    max_degree: usize,
}

impl FormalCharacter {
    pub fn zero(max_degree: usize) -> Self {
        Self {
            terms: BTreeMap::new(),
            max_degree,
        }
    }

    pub fn monomial(weight: Weight, max_degree: usize) -> Self {
        let mut f = Self::zero(max_degree);
        f.add_term(weight, &QPoly::one());
        f
    }

    pub fn max_degree(&self) -> usize {
        self.max_degree
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Weight, &QPoly)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, weight: &Weight) -> QPoly {
        self.terms.get(weight).cloned().unwrap_or_default()
    }

    pub fn add_term(&mut self, weight: Weight, coeff: &QPoly) {
        let c = coeff.truncate(self.max_degree);
        if c.is_zero() {
            return;
        }
        match self.terms.entry(weight) {
            Entry::Vacant(slot) => {
                slot.insert(c);
            }
            Entry::Occupied(mut slot) => {
                *slot.get_mut() += &c;
                if slot.get().is_zero() {
                    slot.remove();
                }
            }
        }
    }

    /// `self += coeff · other`.
    pub fn add_scaled(&mut self, other: &FormalCharacter, coeff: &QPoly) {
        for (w, c) in &other.terms {
            self.add_term(w.clone(), &(c * coeff));
        }
    }

    /// Multiplies by `Σ_{c ≥ 0, c·l ≤ max_degree} q^{c·l} e^{c·root}`, the
    /// truncation of `1/(1 − q^l e^root)`. Requires `l ≥ 1`.
    pub fn mul_geometric(&self, root: &Weight, l: usize) -> Self {
        assert!(l >= 1, "geometric series in e^α does not truncate when L(α) = 0");
        let mut out = Self::zero(self.max_degree);
        for (w, c) in &self.terms {
            let mut shifted = w.clone();
            let mut deg = 0;
            while deg <= self.max_degree {
                out.add_term(shifted.clone(), &c.shift(deg));
                shifted = &shifted + root;
                deg += l;
            }
        }
        out
    }

    /// The `q^0` part.
    pub fn at_q_zero(&self) -> BTreeMap<Weight, i64> {
        self.terms
            .iter()
            .filter(|(_, c)| c.coeff(0) != 0)
            .map(|(w, c)| (w.clone(), c.coeff(0)))
            .collect()
    }

    fn max_abs_coordinate(&self) -> i64 {
        self.terms.keys().map(Weight::max_abs).max().unwrap_or(0)
    }
}

/// Demazure operators for one root system, with Weyl characters cached.
#[derive(Debug)]
pub struct Demazure {
    system: Arc<RootSystem>,
    word: Vec<usize>,
    characters: DashMap<Weight, FormalCharacter>,
}

impl Demazure {
    pub fn new(kind: RootType, rank: usize) -> Result<Self> {
        let system = Arc::new(RootSystem::new(kind, rank)?);
        let word = system.longest_word();
        Ok(Self {
            system,
            word,
            characters: DashMap::new(),
        })
    }

    pub fn system(&self) -> &RootSystem {
        &self.system
    }

    /// The reduced word for `w0` used by [`Self::apply_longest`].
    pub fn longest_word(&self) -> &[usize] {
        &self.word
    }

    /// `D_i f = (f − e^{−α_i} s_i f) / (1 − e^{−α_i})`, evaluated termwise:
    /// for `m = ⟨β, α_i^∨⟩`, `D_i e^β` is `e^β + ⋯ + e^{β−mα_i}` when `m ≥ 0`,
    /// zero when `m = −1`, and `−(e^{β+α_i} + ⋯ + e^{β−(m+1)α_i})` when
    /// `m ≤ −2`.
    pub fn apply_simple(&self, i: usize, f: &FormalCharacter) -> FormalCharacter {
        let alpha = &self.system.simple_roots()[i];
        let mut out = FormalCharacter::zero(f.max_degree);
        for (beta, c) in &f.terms {
            let m = self.system.coroot_pairing(beta, i);
            if m >= 0 {
                let mut w = beta.clone();
                for _ in 0..=m {
                    out.add_term(w.clone(), c);
                    w = &w - alpha;
                }
            } else if m <= -2 {
                let neg = c.scale(-1);
                let mut w = beta.clone();
                for _ in 1..=(-m - 1) {
                    w = &w + alpha;
                    out.add_term(w.clone(), &neg);
                }
            }
        }
        out
    }

    /// `D_{w0} = D_{i_1} ∘ ⋯ ∘ D_{i_N}` along the stored reduced word.
    pub fn apply_longest(&self, f: &FormalCharacter) -> FormalCharacter {
        self.word
            .iter()
            .rev()
            .fold(f.clone(), |acc, &i| self.apply_simple(i, &acc))
    }

    /// `χ^λ = D_{w0}(e^λ)` as a degree-0 character.
    pub fn weyl_character(&self, lambda: &Weight) -> FormalCharacter {
        if let Some(hit) = self.characters.get(lambda) {
            return hit.clone();
        }
        let chi = self.apply_longest(&FormalCharacter::monomial(lambda.clone(), 0));
        self.characters.insert(lambda.clone(), chi.clone());
        chi
    }

    /// `D_{w0}(e^μ Π_{α>0} 1/(1 − q^{L(α)} e^α))` truncated at `q^max_degree`.
    pub fn kl_generating_character(
        &self,
        lambda: &Weight,
        length: &LengthFunction,
        max_degree: usize,
    ) -> Result<FormalCharacter> {
        let lengths = length.values(&self.system)?;
        if lengths.contains(&0) {
            return Err(Error::Unsupported(format!(
                "length function {length} vanishes on a root; the truncated Demazure expansion needs L(α) ≥ 1"
            )));
        }
        let mut f = FormalCharacter::monomial(lambda.clone(), max_degree);
        for (root, &l) in self.system.positive_roots().iter().zip(&lengths) {
            f = f.mul_geometric(&root.vector, l as usize);
        }
        let bound = lambda.max_abs() + 2 * max_degree as i64;
        assert!(
            f.max_abs_coordinate() <= bound,
            "initial support exceeds the asserted bound"
        );
        let out = self.apply_longest(&f);
        assert!(
            out.max_abs_coordinate() <= bound,
            "Demazure output escaped the support bound {bound}"
        );
        Ok(out)
    }

    /// Dominant weights `λ` that can carry a nonzero coefficient of degree at
    /// most `max_degree` in `KL^L_{λμ}`: those with `w(λ+ρ) − (μ+ρ)` a sum of at
    /// most `max_degree` positive roots for some `w`.
    pub fn candidate_weights(&self, mu: &Weight, max_degree: usize) -> Result<BTreeSet<Weight>> {
        let n = self.system.rank();
        let roots: Vec<Weight> = self
            .system
            .positive_roots()
            .iter()
            .map(|r| r.vector.clone())
            .collect();
        let mut sums: HashSet<Weight> = HashSet::from([Weight::zero(n)]);
        let mut frontier = sums.clone();
        for _ in 0..max_degree {
            let mut next = HashSet::new();
            for s in &frontier {
                for r in &roots {
                    let t = s + r;
                    if !sums.contains(&t) {
                        next.insert(t);
                    }
                }
            }
            sums.extend(next.iter().cloned());
            frontier = next;
        }
        let two_rho = self.system.two_rho();
        let base = &mu.scale(2) + two_rho;
        let group = weyl_group(self.system.kind(), n)?;
        let mut out = BTreeSet::new();
        for s in &sums {
            let shifted = &base + &s.scale(2);
            for w in &group {
                if let Some(lambda) = (&w.apply(&shifted) - two_rho).halved() {
                    if self.system.is_dominant(&lambda) {
                        out.insert(lambda);
                    }
                }
            }
        }
        Ok(out)
    }

    /// `Σ_λ KL^L_{λμ}(q) χ^λ` truncated at `q^max_degree`, with `KL` from the
    /// alternating-sum engine and `χ^λ` from [`Self::weyl_character`].
    pub fn character_expansion(
        &self,
        engine: &KlEngine,
        mu: &Weight,
        max_degree: usize,
    ) -> Result<FormalCharacter> {
        let mut out = FormalCharacter::zero(max_degree);
        for lambda in self.candidate_weights(mu, max_degree)? {
            let kl = engine.kl_weights(&lambda, mu).truncate(max_degree);
            if kl.is_zero() {
                continue;
            }
            out.add_scaled(&self.weyl_character(&lambda), &kl);
        }
        Ok(out)
    }

    /// Writes a `W`-invariant character as `Σ_μ c_μ(q) χ^μ` by peeling off
    /// the dominant weight of greatest height until nothing is left.
    pub fn expand_in_characters(&self, f: &FormalCharacter) -> BTreeMap<Weight, QPoly> {
        let mut rest = f.clone();
        let mut out = BTreeMap::new();
        while let Some(top) = rest
            .terms
            .keys()
            .filter(|w| self.system.is_dominant(w))
            .max_by_key(|w| (self.system.height(w), (*w).clone()))
            .cloned()
        {
            let c = rest.coeff(&top);
            rest.add_scaled(&self.weyl_character(&top), &c.scale(-1));
            out.insert(top, c);
        }
        assert!(rest.is_empty(), "character is not W-invariant");
        out
    }
}

/// `demazure_kl_check(type, rank, λ, L, Q_max)`.
pub fn demazure_kl_check(
    kind: RootType,
    rank: usize,
    lambda: &Weight,
    length: &LengthFunction,
    max_degree: usize,
) -> Result<FormalCharacter> {
    Demazure::new(kind, rank)?.kl_generating_character(lambda, length, max_degree)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(v: &[i64]) -> Weight {
        Weight(v.to_vec())
    }

    #[test]
    fn weyl_character_of_vector_representation() {
        let d = Demazure::new(RootType::C, 2).unwrap();
        let chi = d.weyl_character(&w(&[1, 0]));
        let support: Vec<_> = chi.terms().map(|(w, c)| (w.0.clone(), c.clone())).collect();
        assert_eq!(support.len(), 4);
        assert!(chi.terms().all(|(_, c)| *c == QPoly::one()));
    }

    #[test]
    fn weyl_dimension() {
        // dim of sp(6) modules: ω1 → 6, ω2 → 14, 2ω1 → 21; so(7): ω1 → 7
        let d = Demazure::new(RootType::C, 3).unwrap();
        let dim = |v: &[i64]| d.weyl_character(&w(v)).terms().map(|(_, c)| c.at_one()).sum::<i64>();
        assert_eq!(dim(&[1, 0, 0]), 6);
        assert_eq!(dim(&[1, 1, 0]), 14);
        assert_eq!(dim(&[2, 0, 0]), 21);
        let b = Demazure::new(RootType::B, 3).unwrap();
        assert_eq!(b.weyl_character(&w(&[1, 0, 0])).terms().map(|(_, c)| c.at_one()).sum::<i64>(), 7);
    }

    #[test]
    fn degree_zero_is_weyl_character() {
        for kind in RootType::ALL {
            let d = Demazure::new(kind, 3).unwrap();
            let lam = w(&[2, 1, 0]);
            let f = d
                .kl_generating_character(&lam, &LengthFunction::Standard, 0)
                .unwrap();
            assert_eq!(f, d.weyl_character(&lam), "{kind}");
        }
    }

    #[test]
    fn gla_is_refused() {
        let err = demazure_kl_check(RootType::C, 2, &w(&[1, 0]), &LengthFunction::GlA, 3);
        assert!(matches!(err, Err(Error::Unsupported(_))));
    }

    #[test]
    fn c2_vector_matches_alternating_sum() {
        let d = Demazure::new(RootType::C, 2).unwrap();
        let engine = KlEngine::new(RootType::C, 2, LengthFunction::Standard).unwrap();
        let lam = w(&[1, 0]);
        let lhs = d.kl_generating_character(&lam, &LengthFunction::Standard, 4).unwrap();
        let rhs = d.character_expansion(&engine, &lam, 4).unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn c3_coefficient_over_zero_weight() {
        let d = Demazure::new(RootType::C, 3).unwrap();
        let f = d
            .kl_generating_character(&w(&[0, 0, 0]), &LengthFunction::Standard, 4)
            .unwrap();
        let expansion = d.expand_in_characters(&f);
        assert_eq!(expansion[&w(&[1, 1, 0])], QPoly::from_coeffs(vec![0, 0, 1, 0, 1]));
        assert_eq!(expansion[&w(&[0, 0, 0])], QPoly::one());
    }
}
