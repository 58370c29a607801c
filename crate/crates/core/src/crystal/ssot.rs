//! Semistandard oscillating tableaux: chains `∅ = ν⁰, ν¹, …, ν^ℓ` where each
//! `(ν^{t−1}, β^t, ν^t)` is an oscillating horizontal strip.

use serde::{Deserialize, Serialize};

use crate::error::{param, Result};
use crate::partition::Partition;

use super::strip::{Column, OscHStrip};
use super::tensor::BoxTensor;

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Ssot {
    steps: Vec<OscHStrip>,
}

impl Ssot {
    pub fn new(steps: Vec<OscHStrip>) -> Result<Self> {
        let mut prev = Partition::empty();
        for (t, s) in steps.iter().enumerate() {
            if *s.start() != prev {
                return param(format!(
                    "step {} starts at {} but the previous step ended at {prev}",
                    t + 1,
                    s.start()
                ));
            }
            prev = s.end().clone();
        }
        Ok(Self { steps })
    }

    pub fn steps(&self) -> &[OscHStrip] {
        &self.steps
    }

    /// The final partition.
    pub fn shape(&self) -> Partition {
        self.steps
            .last()
            .map(|s| s.end().clone())
            .unwrap_or_default()
    }

    /// Strip sizes, in step order.
    pub fn weight(&self) -> Vec<u32> {
        self.steps.iter().map(OscHStrip::size).collect()
    }

    /// Largest number of columns of any partition in the chain, peaks included.
    pub fn epsilon_c(&self) -> u32 {
        self.steps.iter().map(|s| s.peak().width()).max().unwrap_or(0)
    }

    /// One column per step, step 1 first (the rightmost tensor factor).
    pub fn to_columns(&self) -> Vec<Column> {
        self.steps.iter().map(OscHStrip::to_column).collect()
    }

    /// The image in `(B^{1,1})^{⊗n}` when every strip has size one.
    pub fn to_box_tensor(&self) -> Option<BoxTensor> {
        self.steps
            .iter()
            .map(|s| s.to_column().as_letter())
            .collect::<Option<Vec<_>>>()
            .map(BoxTensor::from_rightmost_first)
    }
}

/// `ssot_to_tensor(T)`.
pub fn ssot_to_tensor(t: &Ssot) -> Vec<Column> {
    t.to_columns()
}

/// `epsilon_C(T)`.
pub fn epsilon_c(t: &Ssot) -> u32 {
    t.epsilon_c()
}

/// Partitions `β ⊇ α` with `β/α` a horizontal strip of `size` cells and at
/// most `max_width` columns.
pub fn add_horizontal_strips(start: &Partition, size: u32, max_width: u32) -> Vec<Partition> {
    let rows = start.len() + 1;
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(rows);
    fn rec(
        start: &Partition,
        rows: usize,
        max_width: u32,
        left: u32,
        cur: &mut Vec<u32>,
        out: &mut Vec<Partition>,
    ) {
        let i = cur.len();
        if i == rows {
            if left == 0 {
                out.push(Partition::new(cur.clone()).expect("interlacing keeps parts decreasing"));
            }
            return;
        }
        let lo = start.part(i);
        let hi = if i == 0 { max_width } else { start.part(i - 1) };
        if lo > hi {
            return;
        }
        for x in lo..=hi.min(lo + left) {
            cur.push(x);
            rec(start, rows, max_width, left - (x - lo), cur, out);
            cur.pop();
        }
    }
    rec(start, rows, max_width, size, &mut cur, &mut out);
    out
}

/// Partitions `γ ⊆ β` with `β/γ` a horizontal strip of `size` cells.
pub fn remove_horizontal_strips(peak: &Partition, size: u32) -> Vec<Partition> {
    let rows = peak.len();
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(rows);
    fn rec(peak: &Partition, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
        let i = cur.len();
        if i == peak.len() {
            if left == 0 {
                out.push(Partition::new(cur.clone()).expect("interlacing keeps parts decreasing"));
            }
            return;
        }
        let hi = peak.part(i);
        let lo = peak.part(i + 1).max(hi.saturating_sub(left));
        for x in (lo..=hi).rev() {
            cur.push(x);
            rec(peak, left - (hi - x), cur, out);
            cur.pop();
        }
    }
    if rows > 0 || size == 0 {
        rec(peak, size, &mut cur, &mut out);
    }
    out
}

fn distance(a: &Partition, b: &Partition) -> u32 {
    (0..a.len().max(b.len()))
        .map(|i| a.part(i).abs_diff(b.part(i)))
        .sum()
}

/// Every SSOT of the given final shape whose `t`-th strip has size
/// `weight[t]`, with `ε^C ≤ g_cap`. Deterministic depth-first order.
pub fn ssot_enumerate(shape: &Partition, weight: &[u32], g_cap: u32) -> Vec<Ssot> {
    let mut suffix = vec![0u32; weight.len() + 1];
    for t in (0..weight.len()).rev() {
        suffix[t] = suffix[t + 1] + weight[t];
    }
    let mut out = Vec::new();
    let mut steps = Vec::new();
    extend(shape, weight, &suffix, g_cap, &Partition::empty(), &mut steps, &mut out);
    out
}

fn extend(
    shape: &Partition,
    weight: &[u32],
    suffix: &[u32],
    g_cap: u32,
    current: &Partition,
    steps: &mut Vec<OscHStrip>,
    out: &mut Vec<Ssot>,
) {
    let t = steps.len();
    if distance(current, shape) > suffix[t] {
        return;
    }
    if t == weight.len() {
        if current == shape {
            out.push(Ssot { steps: steps.clone() });
        }
        return;
    }
    let size = weight[t];
    for added in 0..=size {
        for peak in add_horizontal_strips(current, added, g_cap) {
            for end in remove_horizontal_strips(&peak, size - added) {
                let strip = OscHStrip::new(current.clone(), peak.clone(), end.clone())
                    .expect("constructed as a valid strip");
                steps.push(strip);
                extend(shape, weight, suffix, g_cap, &end, steps, out);
                steps.pop();
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::crystal::energy::image_weight;
    use crate::crystal::tensor::enumerate_highest;

    fn p(v: &[u32]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    fn chain(parts: &[&[u32]]) -> Ssot {
        // unit steps only: the peak is the larger neighbour
        let mut steps = Vec::new();
        for w in parts.windows(2) {
            let (a, c) = (p(w[0]), p(w[1]));
            let b = if a.size() > c.size() { a.clone() } else { c.clone() };
            steps.push(OscHStrip::new(a, b, c).unwrap());
        }
        Ssot::new(steps).unwrap()
    }

    #[test]
    fn example_counts() {
        let one = p(&[1]);
        assert_eq!(ssot_enumerate(&one, &[1, 1, 1], 1).len(), 2);
        assert_eq!(ssot_enumerate(&one, &[1, 1, 1], 2).len(), 3);
        let empty = ssot_enumerate(&Partition::empty(), &[], 0);
        assert_eq!(empty, vec![Ssot::default()]);
    }

    #[test]
    fn example_images() {
        let t = chain(&[&[], &[1], &[1, 1], &[1]]);
        assert_eq!(t.to_box_tensor().unwrap().to_string(), "1\u{305} ⊗ 1 ⊗ 1");
        assert_eq!(t.epsilon_c(), 1);
        let t = chain(&[&[], &[1], &[2], &[1]]);
        assert_eq!(t.to_box_tensor().unwrap().to_string(), "2\u{305} ⊗ 2 ⊗ 1");
        assert_eq!(t.epsilon_c(), 2);
        assert_eq!(Ssot::default().to_box_tensor(), Some(BoxTensor::default()));
        assert_eq!(Ssot::default().epsilon_c(), 0);
    }

    #[test]
    fn broken_chain_is_rejected() {
        let a = OscHStrip::new(p(&[]), p(&[1]), p(&[1])).unwrap();
        let b = OscHStrip::new(p(&[2]), p(&[2]), p(&[2])).unwrap();
        assert!(Ssot::new(vec![a, b]).is_err());
    }

    #[test]
    fn enumerated_tableaux_are_consistent() {
        for shape in Partition::all_in_rectangle(2, 2) {
            for weight in [vec![1, 2], vec![2, 2, 1], vec![0, 3], vec![2, 0, 2]] {
                for g in 1..=3 {
                    let all = ssot_enumerate(&shape, &weight, g);
                    let unique: std::collections::HashSet<_> = all.iter().collect();
                    assert_eq!(unique.len(), all.len());
                    for s in &all {
                        assert_eq!(s.shape(), shape);
                        assert_eq!(s.weight(), weight);
                        assert!(s.epsilon_c() <= g);
                        let cols = s.to_columns();
                        let max_letter = cols.iter().map(Column::max_index).max().unwrap_or(0);
                        assert!(max_letter <= s.epsilon_c());
                        assert!(Ssot::new(s.steps().to_vec()).is_ok());
                    }
                }
            }
        }
    }

    #[test]
    fn box_images_are_the_highest_weight_elements() {
        for n in 0..=4 {
            for g in 1..=3 {
                for shape in Partition::all_in_rectangle(n, g) {
                    let mut from_ssot: Vec<BoxTensor> = ssot_enumerate(&shape, &vec![1; n], g)
                        .iter()
                        .map(|s| s.to_box_tensor().unwrap())
                        .collect();
                    from_ssot.sort();
                    let w = image_weight(&shape, g).unwrap();
                    let mut from_crystal = enumerate_highest(n, &w, g);
                    from_crystal.sort();
                    assert_eq!(from_ssot, from_crystal, "n={n} g={g} {shape}");
                    for t in &from_ssot {
                        assert_eq!(t.weight_in(g as usize), w);
                    }
                }
            }
        }
    }

    #[test]
    fn strip_helpers() {
        assert_eq!(add_horizontal_strips(&p(&[1]), 1, 2), vec![p(&[1, 1]), p(&[2])]);
        assert_eq!(add_horizontal_strips(&p(&[2]), 1, 2), vec![p(&[2, 1])]);
        assert_eq!(remove_horizontal_strips(&p(&[2, 1]), 1), vec![p(&[2]), p(&[1, 1])]);
        assert_eq!(remove_horizontal_strips(&Partition::empty(), 0), vec![Partition::empty()]);
        assert!(remove_horizontal_strips(&Partition::empty(), 1).is_empty());
    }
}
