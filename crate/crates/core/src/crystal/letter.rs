use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{param, Error, Result};

/// A nonzero letter of the type-B vector crystal: `i` or `ī` with `i ≥ 1`.
///
/// Ordered `1 ≺ 2 ≺ ⋯ ≺ G ≺ Ḡ ≺ ⋯ ≺ 1̄`. Serializes as a signed integer,
/// negative for barred letters.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "i32", into = "i32")]
pub struct Letter {
    index: u32,
    barred: bool,
}

impl Letter {
    pub fn plain(index: u32) -> Self {
        assert!(index >= 1, "letters start at 1");
        Self { index, barred: false }
    }

    pub fn bar(index: u32) -> Self {
        assert!(index >= 1, "letters start at 1");
        Self { index, barred: true }
    }

    pub fn from_signed(v: i32) -> Result<Self> {
        match v.cmp(&0) {
            Ordering::Greater => Ok(Self::plain(v as u32)),
            Ordering::Less => Ok(Self::bar(v.unsigned_abs())),
            Ordering::Equal => param("the zero letter is not supported"),
        }
    }

    pub fn signed(self) -> i32 {
        if self.barred {
            -(self.index as i32)
        } else {
            self.index as i32
        }
    }

    pub fn index(self) -> u32 {
        self.index
    }

    pub fn is_barred(self) -> bool {
        self.barred
    }

    /// Every letter with index at most `cap`, in crystal order.
    pub fn all_up_to(cap: u32) -> Vec<Letter> {
        (1..=cap)
            .map(Letter::plain)
            .chain((1..=cap).rev().map(Letter::bar))
            .collect()
    }

    fn check_arrow(self, i: u32, rank: u32) -> Result<()> {
        if i == 0 || i > rank {
            return param(format!("crystal operator index {i} outside 1..={rank}"));
        }
        if i == rank && self.index == rank {
            return Err(Error::Unsupported(format!(
                "e_{i}/f_{i} on {self} passes through the zero letter of B_{rank}"
            )));
        }
        Ok(())
    }

    /// `ε_i` in the type-`B_rank` vector crystal.
    pub fn epsilon(self, i: u32, rank: u32) -> Result<u32> {
        self.check_arrow(i, rank)?;
        if i == rank {
            return Ok(0);
        }
        Ok(u32::from(
            (!self.barred && self.index == i + 1) || (self.barred && self.index == i),
        ))
    }

    /// `φ_i` in the type-`B_rank` vector crystal.
    pub fn phi(self, i: u32, rank: u32) -> Result<u32> {
        self.check_arrow(i, rank)?;
        if i == rank {
            return Ok(0);
        }
        Ok(u32::from(
            (!self.barred && self.index == i) || (self.barred && self.index == i + 1),
        ))
    }

    /// `f_i`: `i → i+1` and `(i+1)̄ → ī`.
    pub fn f(self, i: u32) -> Option<Letter> {
        match (self.barred, self.index) {
            (false, x) if x == i => Some(Letter::plain(i + 1)),
            (true, x) if x == i + 1 => Some(Letter::bar(i)),
            _ => None,
        }
    }

    pub fn e(self, i: u32) -> Option<Letter> {
        match (self.barred, self.index) {
            (false, x) if x == i + 1 => Some(Letter::plain(i)),
            (true, x) if x == i => Some(Letter::bar(i + 1)),
            _ => None,
        }
    }

    fn order_key(self) -> (bool, i64) {
        if self.barred {
            (true, -(self.index as i64))
        } else {
            (false, self.index as i64)
        }
    }
}

impl Ord for Letter {
    fn cmp(&self, other: &Self) -> Ordering {
        self.order_key().cmp(&other.order_key())
    }
}

impl PartialOrd for Letter {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl TryFrom<i32> for Letter {
    type Error = Error;
    fn try_from(v: i32) -> Result<Self> {
        Self::from_signed(v)
    }
}

impl From<Letter> for i32 {
    fn from(l: Letter) -> Self {
        l.signed()
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.barred {
            write!(f, "{}\u{0305}", self.index)
        } else {
            write!(f, "{}", self.index)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn total_order() {
        let letters = Letter::all_up_to(3);
        let signed: Vec<i32> = letters.iter().map(|l| l.signed()).collect();
        assert_eq!(signed, vec![1, 2, 3, -3, -2, -1]);
        assert!(letters.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn arrows() {
        assert_eq!(Letter::plain(1).f(1), Some(Letter::plain(2)));
        assert_eq!(Letter::bar(2).f(1), Some(Letter::bar(1)));
        assert_eq!(Letter::bar(1).f(1), None);
        assert_eq!(Letter::bar(1).e(1), Some(Letter::bar(2)));
        for l in Letter::all_up_to(4) {
            for i in 1..4 {
                if let Some(m) = l.f(i) {
                    assert_eq!(m.e(i), Some(l));
                }
                assert_eq!(l.phi(i, 5).unwrap(), u32::from(l.f(i).is_some()));
                assert_eq!(l.epsilon(i, 5).unwrap(), u32::from(l.e(i).is_some()));
            }
        }
    }

    #[test]
    fn zero_letter_region_is_refused() {
        assert!(matches!(Letter::plain(3).phi(3, 3), Err(Error::Unsupported(_))));
        assert!(matches!(Letter::bar(3).epsilon(3, 3), Err(Error::Unsupported(_))));
        assert_eq!(Letter::plain(2).phi(3, 3).unwrap(), 0);
        assert!(Letter::from_signed(0).is_err());
    }
}
