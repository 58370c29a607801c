//! Tensor products of single boxes `B^{1,1}` and the signature rule.
//!
//! Tensor factors are stored rightmost first: `factors[0]` is `a_1` in the
//! displayed element `a_n ⊗ ⋯ ⊗ a_1`. The tensor rule is the anti-Kashiwara
//! one used by Sage, so the rightmost factor of a highest weight element is
//! itself highest.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{param, Result};
use crate::weight::Weight;

use super::letter::Letter;

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct BoxTensor {
    factors: Vec<Letter>,
}

impl BoxTensor {
    /// From factors listed rightmost first (`a_1, a_2, …, a_n`).
    pub fn from_rightmost_first(factors: Vec<Letter>) -> Self {
        Self { factors }
    }

    /// From factors as displayed, leftmost first (`a_n, …, a_1`).
    pub fn from_displayed(mut factors: Vec<Letter>) -> Self {
        factors.reverse();
        Self { factors }
    }

    /// From signed integers as displayed (`[-1, 1, 1]` is `1̄ ⊗ 1 ⊗ 1`).
    pub fn parse_displayed(signed: &[i32]) -> Result<Self> {
        let letters = signed
            .iter()
            .map(|&v| Letter::from_signed(v))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::from_displayed(letters))
    }

    /// Signed integers as displayed; inverse of [`BoxTensor::parse_displayed`].
    pub fn to_displayed_signed(&self) -> Vec<i32> {
        self.factors.iter().rev().map(|l| l.signed()).collect()
    }

    /// `a_1, …, a_n`.
    pub fn factors(&self) -> &[Letter] {
        &self.factors
    }

    /// `a_t` for `t` in `1..=n`.
    pub fn a(&self, t: usize) -> Letter {
        self.factors[t - 1]
    }

    pub fn len(&self) -> usize {
        self.factors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn max_index(&self) -> u32 {
        self.factors.iter().map(|l| l.index()).max().unwrap_or(0)
    }

    /// Coordinate `i` is `#{i} − #{ī}`; the vector has length `max_index`.
    pub fn weight(&self) -> Weight {
        self.weight_in(self.max_index() as usize)
    }

    /// The weight padded to `rank` coordinates. Panics if a letter exceeds it.
    pub fn weight_in(&self, rank: usize) -> Weight {
        let mut v = vec![0i64; rank];
        for l in &self.factors {
            let slot = &mut v[l.index() as usize - 1];
            *slot += if l.is_barred() { -1 } else { 1 };
        }
        Weight(v)
    }

    fn replaced(&self, pos: usize, letter: Letter) -> Self {
        let mut factors = self.factors.clone();
        factors[pos] = letter;
        Self { factors }
    }

    /// Positions hit by `e_i` and `f_i`, after cancelling `+ −` pairs in the
    /// sequence `−^{ε_i(a_1)} +^{φ_i(a_1)} −^{ε_i(a_2)} +^{φ_i(a_2)} ⋯`.
    fn signature(&self, i: u32, rank: u32) -> Result<(Option<usize>, Option<usize>)> {
        let mut open_plus: Vec<usize> = Vec::new();
        let mut last_minus = None;
        for (pos, l) in self.factors.iter().enumerate() {
            for _ in 0..l.epsilon(i, rank)? {
                if open_plus.pop().is_none() {
                    last_minus = Some(pos);
                }
            }
            for _ in 0..l.phi(i, rank)? {
                open_plus.push(pos);
            }
        }
        Ok((last_minus, open_plus.first().copied()))
    }

    pub fn epsilon(&self, i: u32, rank: u32) -> Result<u32> {
        let mut e = 0;
        let mut t = self.clone();
        while let Some(next) = t.crystal_e(i, rank)? {
            e += 1;
            t = next;
        }
        Ok(e)
    }

    /// `e_i` by the signature rule; `None` when it annihilates.
    pub fn crystal_e(&self, i: u32, rank: u32) -> Result<Option<Self>> {
        let (minus, _) = self.signature(i, rank)?;
        Ok(minus.map(|pos| {
            let l = self.factors[pos].e(i).expect("unmatched minus has an e-arrow");
            self.replaced(pos, l)
        }))
    }

    /// `f_i` by the signature rule; `None` when it annihilates.
    pub fn crystal_f(&self, i: u32, rank: u32) -> Result<Option<Self>> {
        let (_, plus) = self.signature(i, rank)?;
        Ok(plus.map(|pos| {
            let l = self.factors[pos].f(i).expect("unmatched plus has an f-arrow");
            self.replaced(pos, l)
        }))
    }

    /// Annihilated by every `e_i`, `1 ≤ i ≤ rank`. The rank has to exceed every
    /// letter index so the zero letter never comes into play.
    pub fn is_classical_highest(&self, rank: u32) -> Result<bool> {
        if rank <= self.max_index() {
            return param(format!(
                "rank {rank} must exceed the largest letter index {}",
                self.max_index()
            ));
        }
        for i in 1..=rank {
            if self.signature(i, rank)?.0.is_some() {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// Displayed leftmost first: `1̄ ⊗ 1 ⊗ 1`.
impl fmt::Display for BoxTensor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return write!(f, "∅");
        }
        for (k, l) in self.factors.iter().rev().enumerate() {
            if k > 0 {
                write!(f, " ⊗ ")?;
            }
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

/// `crystal_e(i, t, rank)`.
pub fn crystal_e(i: u32, t: &BoxTensor, rank: u32) -> Result<Option<BoxTensor>> {
    t.crystal_e(i, rank)
}

/// `crystal_f(i, t, rank)`.
pub fn crystal_f(i: u32, t: &BoxTensor, rank: u32) -> Result<Option<BoxTensor>> {
    t.crystal_f(i, rank)
}

/// `is_classical_highest(t, rank)`.
pub fn is_classical_highest(t: &BoxTensor, rank: u32) -> Result<bool> {
    t.is_classical_highest(rank)
}

/// All classical highest weight elements of `(B^{1,1})^{⊗n}` of the given
/// weight, using letters with index at most `letter_cap` (checked in rank
/// `letter_cap + 1`). The search grows tensors from the rightmost factor and
/// prunes every non-highest right segment.
pub fn enumerate_highest(n: usize, target: &Weight, letter_cap: u32) -> Vec<BoxTensor> {
    let cap = letter_cap as usize;
    if target.0.iter().skip(cap).any(|&x| x != 0) {
        return Vec::new();
    }
    let mut goal = target.0.clone();
    goal.resize(cap, 0);
    let letters = Letter::all_up_to(letter_cap);
    let rank = letter_cap + 1;

    let mut out = Vec::new();
    let mut factors = Vec::with_capacity(n);
    let mut current = vec![0i64; cap];
    grow(n, &goal, &letters, rank, &mut factors, &mut current, &mut out);
    out
}

fn grow(
    n: usize,
    goal: &[i64],
    letters: &[Letter],
    rank: u32,
    factors: &mut Vec<Letter>,
    current: &mut [i64],
    out: &mut Vec<BoxTensor>,
) {
    let left = (n - factors.len()) as i64;
    let distance: i64 = goal.iter().zip(current.iter()).map(|(g, c)| (g - c).abs()).sum();
    if distance > left || (left - distance) % 2 != 0 {
        return;
    }
    if left == 0 {
        out.push(BoxTensor::from_rightmost_first(factors.clone()));
        return;
    }
    for &l in letters {
        factors.push(l);
        let t = BoxTensor::from_rightmost_first(factors.clone());
        if t.is_classical_highest(rank).expect("rank exceeds every letter") {
            let slot = l.index() as usize - 1;
            let d = if l.is_barred() { -1 } else { 1 };
            current[slot] += d;
            grow(n, goal, letters, rank, factors, current, out);
            current[slot] -= d;
        }
        factors.pop();
    }
}
