//! Integer partitions, used for dominant weights and for the shapes inside
//! oscillating tableaux.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{param, Error, Result};

/// A weakly decreasing sequence of positive integers.
///
/// Trailing zeros are dropped on construction, so `(2,1,0)` and `(2,1)` are
/// the same partition.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct Partition(Vec<u32>);

impl Partition {
    pub fn new(mut parts: Vec<u32>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if let Some(w) = parts.windows(2).find(|w| w[0] < w[1]) {
            return param(format!(
                "parts must be weakly decreasing, found {} before {}",
                w[0], w[1]
            ));
        }
        if parts.contains(&0) {
            return param("zero part followed by a positive part");
        }
        Ok(Self(parts))
    }

    pub fn empty() -> Self {
        Self(Vec::new())
    }

    /// The rectangle `(cols^rows)`.
    pub fn rectangle(rows: usize, cols: u32) -> Self {
        if cols == 0 {
            Self::empty()
        } else {
            Self(vec![cols; rows])
        }
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    /// Part `i` (0-based), zero past the end.
    pub fn part(&self, i: usize) -> u32 {
        self.0.get(i).copied().unwrap_or(0)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `|λ|`.
    pub fn size(&self) -> u32 {
        self.0.iter().sum()
    }

    /// Number of columns, i.e. the first part.
    pub fn width(&self) -> u32 {
        self.part(0)
    }

    pub fn transpose(&self) -> Self {
        let cols = self.width() as usize;
        let mut out = vec![0u32; cols];
        for &p in &self.0 {
            for c in out.iter_mut().take(p as usize) {
                *c += 1;
            }
        }
        Self(out)
    }

    /// `other ⊆ self` as Young diagrams.
    pub fn contains(&self, other: &Partition) -> bool {
        other.len() <= self.len() && other.0.iter().zip(&self.0).all(|(o, s)| o <= s)
    }

    pub fn fits_in_rectangle(&self, rows: usize, cols: u32) -> bool {
        self.len() <= rows && self.width() <= cols
    }

    /// The parts padded with zeros to length `n`. Panics if longer than `n`.
    pub fn padded(&self, n: usize) -> Vec<u32> {
        assert!(self.len() <= n, "partition {self} longer than {n}");
        let mut v = self.0.clone();
        v.resize(n, 0);
        v
    }

    /// `λ + (k^n)`.
    pub fn add_columns(&self, k: u32, n: usize) -> Self {
        let v = self.padded(n).into_iter().map(|p| p + k).collect();
        Self::new(v).expect("adding a rectangle keeps parts decreasing")
    }

    /// `||λ|| = Σ (i−1) λ_i`.
    pub fn norm(&self) -> u64 {
        self.0
            .iter()
            .enumerate()
            .map(|(i, &p)| i as u64 * p as u64)
            .sum()
    }

    /// All partitions of `size` with at most `max_len` parts, each at most
    /// `max_part`, in reverse lexicographic order.
    pub fn all_of_size(size: u32, max_len: usize, max_part: u32) -> Vec<Partition> {
        fn rec(left: u32, cap: u32, slots: usize, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
            if left == 0 {
                out.push(Partition(cur.clone()));
                return;
            }
            if slots == 0 {
                return;
            }
            for p in (1..=cap.min(left)).rev() {
                cur.push(p);
                rec(left - p, p, slots - 1, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(size, max_part, max_len, &mut Vec::new(), &mut out);
        out
    }

    /// All partitions with at most `max_len` parts and size at most `max_size`,
    /// ordered by size then reverse lexicographically.
    pub fn all_up_to(max_size: u32, max_len: usize) -> Vec<Partition> {
        (0..=max_size)
            .flat_map(|s| Self::all_of_size(s, max_len, s))
            .collect()
    }

    /// All partitions inside the `rows × cols` rectangle.
    pub fn all_in_rectangle(rows: usize, cols: u32) -> Vec<Partition> {
        (0..=rows as u32 * cols)
            .flat_map(|s| Self::all_of_size(s, rows, cols))
            .collect()
    }

    /// Checks that `self / inner` is a horizontal strip. On failure returns
    /// the reason and the first offending column (1-based).
    pub fn horizontal_strip_over(&self, inner: &Partition) -> std::result::Result<(), (String, u32)> {
        for i in 0..self.len().max(inner.len()) {
            if inner.part(i) > self.part(i) {
                return Err((format!("row {} of the inner shape sticks out", i + 1), self.part(i) + 1));
            }
        }
        for i in 0..self.len() {
            let below = self.part(i + 1);
            if inner.part(i) < below {
                return Err((
                    format!("rows {} and {} both gain a cell", i + 1, i + 2),
                    inner.part(i) + 1,
                ));
            }
        }
        Ok(())
    }
}

impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0.cmp(&other.0)
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl TryFrom<Vec<u32>> for Partition {
    type Error = Error;
    fn try_from(v: Vec<u32>) -> Result<Self> {
        Self::new(v)
    }
}

impl From<Partition> for Vec<u32> {
    fn from(p: Partition) -> Self {
        p.0
    }
}

/// Comma-separated parts; the empty string (or `∅`) is the empty partition.
impl FromStr for Partition {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() || s == "∅" {
            return Ok(Self::empty());
        }
        let parts = s
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<u32>()
                    .map_err(|_| Error::Parameter(format!("bad part {t:?} in {s:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(parts)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "∅");
        }
        write!(f, "(")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

/// Rectangular complement of `λ` inside `(g^n)`: `λ̃_i = g − λ_{n+1−i}`.
pub fn rect_complement(lambda: &Partition, g: u32, n: usize) -> Result<Partition> {
    if !lambda.fits_in_rectangle(n, g) {
        return param(format!("{lambda} does not fit in the {n}x{g} rectangle"));
    }
    let padded = lambda.padded(n);
    Partition::new(padded.iter().rev().map(|&p| g - p).collect())
}

/// `Σ (i−1) μ_i`.
pub fn mu_norm(mu: &Partition) -> u64 {
    mu.norm()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[u32]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn normalizes_trailing_zeros() {
        assert_eq!(p(&[2, 1, 0, 0]), p(&[2, 1]));
        assert!(Partition::new(vec![1, 2]).is_err());
        assert!(Partition::new(vec![0, 1]).is_err());
    }

    #[test]
    fn parse() {
        assert_eq!("".parse::<Partition>().unwrap(), Partition::empty());
        assert_eq!("2, 1".parse::<Partition>().unwrap(), p(&[2, 1]));
        assert!("1,2".parse::<Partition>().is_err());
        assert!("a".parse::<Partition>().is_err());
    }

    #[test]
    fn transpose_and_size() {
        assert_eq!(p(&[3, 1]).transpose(), p(&[2, 1, 1]));
        assert_eq!(Partition::empty().transpose(), Partition::empty());
        assert_eq!(p(&[3, 1]).size(), 4);
    }

    #[test]
    fn rectangular_complement() {
        assert_eq!(rect_complement(&p(&[1, 1]), 1, 3).unwrap(), p(&[1]));
        assert_eq!(rect_complement(&Partition::empty(), 1, 3).unwrap(), p(&[1, 1, 1]));
        assert_eq!(rect_complement(&p(&[2, 2, 1]), 2, 3).unwrap(), p(&[1]));
        assert!(rect_complement(&p(&[3]), 2, 3).is_err());
        assert!(rect_complement(&p(&[1, 1, 1, 1]), 2, 3).is_err());
    }

    #[test]
    fn norm() {
        assert_eq!(mu_norm(&p(&[1, 1, 1])), 3);
        assert_eq!(mu_norm(&Partition::empty()), 0);
        assert_eq!(mu_norm(&p(&[3, 1])), 1);
    }

    #[test]
    fn enumeration_counts() {
        // p(5) = 7
        assert_eq!(Partition::all_of_size(5, 5, 5).len(), 7);
        // binomial(2+3, 3) partitions in a 3x2 box
        assert_eq!(Partition::all_in_rectangle(3, 2).len(), 10);
        assert_eq!(Partition::all_up_to(0, 3), vec![Partition::empty()]);
    }

    #[test]
    fn horizontal_strips() {
        assert!(p(&[3, 1]).horizontal_strip_over(&p(&[1])).is_ok());
        assert!(p(&[3, 1]).horizontal_strip_over(&p(&[2, 1])).is_ok());
        let (_, col) = p(&[2, 2]).horizontal_strip_over(&p(&[1])).unwrap_err();
        assert_eq!(col, 2);
        assert!(p(&[1]).horizontal_strip_over(&p(&[2])).is_err());
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        fn partition() -> impl Strategy<Value = Partition> {
            proptest::collection::vec(0u32..8, 0..6).prop_map(|mut v| {
                v.sort_unstable_by(|a, b| b.cmp(a));
                Partition::new(v).unwrap()
            })
        }

        proptest! {
            #[test]
            fn transpose_is_involution(l in partition()) {
                prop_assert_eq!(l.transpose().transpose(), l.clone());
                prop_assert_eq!(l.transpose().size(), l.size());
            }

            #[test]
            fn complement_is_involution(l in partition()) {
                let n = l.len().max(1) + 1;
                let g = l.width() + 1;
                let c = rect_complement(&l, g, n).unwrap();
                prop_assert_eq!(rect_complement(&c, g, n).unwrap(), l);
            }
        }
    }
}
