//! Root data for the classical series, realized in the ε-basis of `Z^n`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{param, Error, Result};
use crate::weight::Weight;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum RootType {
    A,
    B,
    C,
    D,
}

impl RootType {
    pub const ALL: [RootType; 4] = [RootType::A, RootType::B, RootType::C, RootType::D];
}

impl FromStr for RootType {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "A" | "a" => Ok(Self::A),
            "B" | "b" => Ok(Self::B),
            "C" | "c" => Ok(Self::C),
            "D" | "d" => Ok(Self::D),
            other => param(format!("unknown root type {other:?}")),
        }
    }
}

impl fmt::Display for RootType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Self::A => "A",
            Self::B => "B",
            Self::C => "C",
            Self::D => "D",
        };
        f.write_str(s)
    }
}

/// Shape of a positive root; indices are 0-based and `i < j`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum RootKind {
    /// `ε_i − ε_j`, the type-A roots.
    Difference(usize, usize),
    /// `ε_i + ε_j`.
    Sum(usize, usize),
    /// `2ε_i` (type C).
    Long(usize),
    /// `ε_i` (type B).
    Short(usize),
}

impl RootKind {
    pub fn is_type_a(self) -> bool {
        matches!(self, Self::Difference(..))
    }

    fn first_index(self) -> usize {
        match self {
            Self::Difference(i, _) | Self::Sum(i, _) | Self::Long(i) | Self::Short(i) => i,
        }
    }

    fn sort_key(self) -> (usize, usize, u8) {
        match self {
            Self::Long(i) => (i, i, 0),
            Self::Short(i) => (i, i, 0),
            Self::Difference(i, j) => (i, j, 1),
            Self::Sum(i, j) => (i, j, 2),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PositiveRoot {
    pub kind: RootKind,
    pub vector: Weight,
}

/// Positive roots, simple roots and `2ρ` of a classical root system.
///
/// Type `A` is the `A_{n−1}` system embedded in rank `n` (roots `ε_i − ε_j`).
/// `ρ` is stored doubled because it is half-integral in type `B`.
#[derive(Clone, Debug)]
pub struct RootSystem {
    kind: RootType,
    rank: usize,
    positive: Vec<PositiveRoot>,
    simple: Vec<Weight>,
    two_rho: Weight,
}

impl RootSystem {
    pub fn new(kind: RootType, rank: usize) -> Result<Self> {
        if rank == 0 {
            return param("rank must be at least 1");
        }
        if kind == RootType::D && rank < 2 {
            return param("type D needs rank at least 2");
        }
        let n = rank;
        let mut kinds = Vec::new();
        for i in 0..n {
            match kind {
                RootType::B => kinds.push(RootKind::Short(i)),
                RootType::C => kinds.push(RootKind::Long(i)),
                RootType::A | RootType::D => {}
            }
            for j in i + 1..n {
                kinds.push(RootKind::Difference(i, j));
                if kind != RootType::A {
                    kinds.push(RootKind::Sum(i, j));
                }
            }
        }
        kinds.sort_by_key(|k| k.sort_key());
        let positive: Vec<_> = kinds
            .into_iter()
            .map(|kind| PositiveRoot {
                kind,
                vector: root_vector(kind, n),
            })
            .collect();

        let mut simple: Vec<Weight> = (0..n.saturating_sub(1))
            .map(|i| root_vector(RootKind::Difference(i, i + 1), n))
            .collect();
        match kind {
            RootType::A => {}
            RootType::B => simple.push(Weight::unit(n, n - 1)),
            RootType::C => simple.push(Weight::unit(n, n - 1).scale(2)),
            RootType::D => simple.push(root_vector(RootKind::Sum(n - 2, n - 1), n)),
        }

        let two_rho = positive
            .iter()
            .fold(Weight::zero(n), |acc, r| &acc + &r.vector);

        Ok(Self {
            kind,
            rank,
            positive,
            simple,
            two_rho,
        })
    }

    pub fn kind(&self) -> RootType {
        self.kind
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Positive roots in the fixed order: by first index, then second index,
    /// with `2ε_i`/`ε_i` before `ε_i − ε_j` before `ε_i + ε_j`.
    pub fn positive_roots(&self) -> &[PositiveRoot] {
        &self.positive
    }

    pub fn simple_roots(&self) -> &[Weight] {
        &self.simple
    }

    pub fn two_rho(&self) -> &Weight {
        &self.two_rho
    }

    /// `ρ` when it is integral (all types but `B`).
    ///
    /// For embedded type A the half-sum `((n−1)/2, …, −(n−1)/2)` is replaced
    /// by `(n−1, …, 1, 0)`; constant shifts do not change any `wρ − ρ`.
    pub fn rho(&self) -> Option<Weight> {
        match self.kind {
            RootType::A => Some(Weight(
                (0..self.rank).rev().map(|i| i as i64).collect(),
            )),
            _ => self.two_rho.halved(),
        }
    }

    /// A linear functional that is strictly positive on every positive root.
    pub fn height(&self, v: &Weight) -> i64 {
        let n = self.rank as i64;
        v.0.iter()
            .enumerate()
            .map(|(i, x)| (n - i as i64) * x)
            .sum()
    }

    /// `⟨v, α_i^∨⟩` for the simple root `α_i`.
    pub fn coroot_pairing(&self, v: &Weight, i: usize) -> i64 {
        let a = &self.simple[i];
        let num = 2 * v.dot(a);
        let den = a.dot(a);
        debug_assert_eq!(num % den, 0, "{v} is not integral against {a}");
        num / den
    }

    pub fn reflect(&self, v: &Weight, i: usize) -> Weight {
        let m = self.coroot_pairing(v, i);
        v - &self.simple[i].scale(m)
    }

    pub fn is_dominant(&self, v: &Weight) -> bool {
        (0..self.simple.len()).all(|i| self.coroot_pairing(v, i) >= 0)
    }

    /// Index of the first simple root with positive pairing against `v`.
    fn first_positive_simple(&self, v: &Weight) -> Option<usize> {
        (0..self.simple.len()).find(|&i| self.coroot_pairing(v, i) > 0)
    }

    /// A reduced word for the longest element, found by reflecting the
    /// strictly dominant `2ρ` down to the antidominant chamber one descent at
    /// a time.
    pub fn longest_word(&self) -> Vec<usize> {
        let mut v = self.two_rho.clone();
        let mut word = Vec::new();
        while let Some(i) = self.first_positive_simple(&v) {
            v = self.reflect(&v, i);
            word.push(i);
        }
        assert_eq!(
            word.len(),
            self.positive.len(),
            "descent walk did not produce a reduced word for w0"
        );
        word
    }
}

fn root_vector(kind: RootKind, n: usize) -> Weight {
    let mut v = vec![0; n];
    match kind {
        RootKind::Difference(i, j) => {
            v[i] = 1;
            v[j] = -1;
        }
        RootKind::Sum(i, j) => {
            v[i] = 1;
            v[j] = 1;
        }
        RootKind::Long(i) => v[i] = 2,
        RootKind::Short(i) => v[i] = 1,
    }
    Weight(v)
}

pub(crate) fn first_index(kind: RootKind) -> usize {
    kind.first_index()
}

/// `positive_roots(type, rank)`.
pub fn positive_roots(kind: RootType, rank: usize) -> Result<RootSystem> {
    RootSystem::new(kind, rank)
}
