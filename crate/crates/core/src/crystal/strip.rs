use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partition::Partition;

use super::letter::Letter;

/// An oscillating horizontal strip `(α, β, γ)`: `α, γ ⊆ β` with `β/α` and
/// `β/γ` horizontal strips. Serialized as the triple `[α, β, γ]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "[Partition; 3]", into = "[Partition; 3]")]
pub struct OscHStrip {
    start: Partition,
    peak: Partition,
    end: Partition,
}

impl OscHStrip {
    pub fn new(start: Partition, peak: Partition, end: Partition) -> Result<Self> {
        for (name, inner) in [("β/α", &start), ("β/γ", &end)] {
            peak.horizontal_strip_over(inner)
                .map_err(|(reason, column)| Error::Strip {
                    reason: format!("{name} is not a horizontal strip: {reason}"),
                    column,
                })?;
        }
        Ok(Self { start, peak, end })
    }

    /// `α`
    pub fn start(&self) -> &Partition {
        &self.start
    }

    /// `β`
    pub fn peak(&self) -> &Partition {
        &self.peak
    }

    /// `γ`
    pub fn end(&self) -> &Partition {
        &self.end
    }

    /// `2|β| − |α| − |γ|`
    pub fn size(&self) -> u32 {
        2 * self.peak.size() - self.start.size() - self.end.size()
    }

    pub fn to_column(&self) -> Column {
        Column {
            unbarred: strip_columns(&self.peak, &self.start),
            barred: strip_columns(&self.peak, &self.end),
        }
    }
}

impl TryFrom<[Partition; 3]> for OscHStrip {
    type Error = Error;
    fn try_from([a, b, c]: [Partition; 3]) -> Result<Self> {
        Self::new(a, b, c)
    }
}

impl From<OscHStrip> for [Partition; 3] {
    fn from(s: OscHStrip) -> Self {
        [s.start, s.peak, s.end]
    }
}

/// Columns (1-based) holding a cell of the horizontal strip `outer/inner`.
fn strip_columns(outer: &Partition, inner: &Partition) -> BTreeSet<u32> {
    (0..outer.len())
        .flat_map(|i| inner.part(i) + 1..=outer.part(i))
        .collect()
}

/// A column element of `B^{ℓ,1}` in raw form: `i` present iff `β/α` has a
/// cell in column `i`, `ī` present iff `β/γ` does. Both may occur.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(into = "Vec<i32>")]
pub struct Column {
    pub unbarred: BTreeSet<u32>,
    pub barred: BTreeSet<u32>,
}

impl Column {
    pub fn height(&self) -> usize {
        self.unbarred.len() + self.barred.len()
    }

    pub fn max_index(&self) -> u32 {
        self.unbarred
            .iter()
            .chain(&self.barred)
            .copied()
            .max()
            .unwrap_or(0)
    }

    /// Entries in crystal order.
    pub fn letters(&self) -> Vec<Letter> {
        let mut v: Vec<Letter> = self
            .unbarred
            .iter()
            .map(|&i| Letter::plain(i))
            .chain(self.barred.iter().map(|&i| Letter::bar(i)))
            .collect();
        v.sort();
        v
    }

    /// The single letter of a height-one column.
    pub fn as_letter(&self) -> Option<Letter> {
        match self.letters().as_slice() {
            [l] => Some(*l),
            _ => None,
        }
    }
}

impl From<Column> for Vec<i32> {
    fn from(c: Column) -> Self {
        c.letters().into_iter().map(Letter::signed).collect()
    }
}

/// `validate_strip(α, β, γ)`.
pub fn validate_strip(start: &Partition, peak: &Partition, end: &Partition) -> Result<OscHStrip> {
    OscHStrip::new(start.clone(), peak.clone(), end.clone())
}

/// `strip_to_column(s)`.
pub fn strip_to_column(s: &OscHStrip) -> Column {
    s.to_column()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(v: &[u32]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn worked_strip() {
        let s = validate_strip(&p(&[1]), &p(&[3, 1]), &p(&[2, 1])).unwrap();
        assert_eq!(s.size(), 4);
        let c = s.to_column();
        assert_eq!(c.unbarred, BTreeSet::from([1, 2, 3]));
        assert_eq!(c.barred, BTreeSet::from([3]));
        assert_eq!(c.height(), 4);
        assert_eq!(Vec::<i32>::from(c), vec![1, 2, 3, -3]);
    }

    #[test]
    fn empty_and_small_strips() {
        let s = validate_strip(&p(&[2]), &p(&[2]), &p(&[2])).unwrap();
        assert_eq!(s.size(), 0);
        assert_eq!(s.to_column(), Column::default());

        let s = validate_strip(&p(&[1]), &p(&[1, 1]), &p(&[1])).unwrap();
        assert_eq!(s.size(), 2);
        assert_eq!(s.to_column().unbarred, BTreeSet::from([1]));
        assert_eq!(s.to_column().barred, BTreeSet::from([1]));

        let c = validate_strip(&p(&[1]), &p(&[2]), &p(&[1])).unwrap().to_column();
        assert_eq!(c.unbarred, BTreeSet::from([2]));
        assert_eq!(c.barred, BTreeSet::from([2]));
    }

    #[test]
    fn invalid_strips_name_a_column() {
        // two cells stacked in column 1
        let err = validate_strip(&Partition::empty(), &p(&[1, 1]), &p(&[1, 1])).unwrap_err();
        assert!(matches!(err, Error::Strip { column: 1, .. }), "{err}");
        // γ not contained in β
        let err = validate_strip(&p(&[1]), &p(&[1]), &p(&[2])).unwrap_err();
        assert!(matches!(err, Error::Strip { column: 2, .. }), "{err}");
    }

    #[test]
    fn json_is_triple() {
        let s = validate_strip(&p(&[1]), &p(&[3, 1]), &p(&[2, 1])).unwrap();
        assert_eq!(serde_json::to_string(&s).unwrap(), "[[1],[3,1],[2,1]]");
        let bad: std::result::Result<OscHStrip, _> = serde_json::from_str("[[],[1,1],[1,1]]");
        assert!(bad.is_err());
    }

    fn partition() -> impl Strategy<Value = Partition> {
        proptest::collection::vec(0u32..5, 0..4).prop_map(|mut v| {
            v.sort_unstable_by(|a, b| b.cmp(a));
            Partition::new(v).unwrap()
        })
    }

    proptest! {
        #[test]
        fn column_height_is_strip_size(a in partition(), b in partition(), c in partition()) {
            if let Ok(s) = validate_strip(&a, &b, &c) {
                prop_assert_eq!(s.to_column().height(), s.size() as usize);
            }
        }
    }
}
