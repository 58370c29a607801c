//! Energy on tensor products of single boxes.
//!
//! `E(a_n ⊗ ⋯ ⊗ a_1) = Σ_{i=1}^{n−1} (n−i) H(a_{i+1}, a_i)` where `a_1` is the
//! rightmost factor and `H(b, a)` is 2 on `(1̄, 1)`, 1 when `b ≻ a` strictly,
//! and 0 when `b ⪯ a`.

use crate::error::{param, Result};
use crate::partition::Partition;
use crate::poly::QPoly;
use crate::weight::Weight;

use super::letter::Letter;
use super::ssot::ssot_enumerate;
use super::tensor::{enumerate_highest, BoxTensor};

/// How `H` treats equal letters.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LocalH {
    /// `H(x, x) = 0`.
    Strict,
    /// `H(x, x) = 1`, the `b ⪰ a` reading. Kept as a negative control.
    Weak,
}

/// Which end of the displayed tensor is `a_1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FactorOrder {
    RightmostFirst,
    LeftmostFirst,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EnergyRule {
    pub h: LocalH,
    pub order: FactorOrder,
}

impl EnergyRule {
    /// The convention that reproduces the worked example and the charge.
    pub const CALIBRATED: EnergyRule = EnergyRule {
        h: LocalH::Strict,
        order: FactorOrder::RightmostFirst,
    };

    pub fn local_h(&self, b: Letter, a: Letter) -> u32 {
        if a == Letter::plain(1) && b == Letter::bar(1) {
            return 2;
        }
        let above = match self.h {
            LocalH::Strict => b > a,
            LocalH::Weak => b >= a,
        };
        u32::from(above)
    }

    pub fn energy(&self, t: &BoxTensor) -> u64 {
        let mut a: Vec<Letter> = t.factors().to_vec();
        if self.order == FactorOrder::LeftmostFirst {
            a.reverse();
        }
        let n = a.len();
        (1..n)
            .map(|i| (n - i) as u64 * self.local_h(a[i], a[i - 1]) as u64)
            .sum()
    }
}

impl Default for EnergyRule {
    fn default() -> Self {
        Self::CALIBRATED
    }
}

/// `local_h(b, a)` under the calibrated rule.
pub fn local_h(b: Letter, a: Letter) -> u32 {
    EnergyRule::CALIBRATED.local_h(b, a)
}

/// `energy(t)` under the calibrated rule.
pub fn energy(t: &BoxTensor) -> u64 {
    EnergyRule::CALIBRATED.energy(t)
}

/// Weight of the tensor image of an oscillating tableau of shape `shape`:
/// letters record columns, so the weight is the column-length vector
/// `shapeᵗ`, padded to `g_cap` coordinates. `None` if it needs more.
pub fn image_weight(shape: &Partition, g_cap: u32) -> Option<Weight> {
    let cols = shape.transpose();
    if cols.len() > g_cap as usize {
        return None;
    }
    Some(Weight::from_partition(&cols, g_cap as usize))
}

fn check_box_case(shape: &Partition, n: usize) -> Result<()> {
    if shape.len() > n {
        return param(format!("shape {shape} has more than {n} rows"));
    }
    Ok(())
}

/// `Σ q^{E(t)}` over the highest weight elements of `(B^{1,1})^{⊗n}` with
/// weight `shapeᵗ` and letters at most `g_cap`.
pub fn x_polynomial_boxcase(shape: &Partition, n: usize, g_cap: u32) -> Result<QPoly> {
    x_polynomial_boxcase_with(shape, n, g_cap, EnergyRule::CALIBRATED)
}

pub fn x_polynomial_boxcase_with(
    shape: &Partition,
    n: usize,
    g_cap: u32,
    rule: EnergyRule,
) -> Result<QPoly> {
    check_box_case(shape, n)?;
    let Some(weight) = image_weight(shape, g_cap) else {
        return Ok(QPoly::zero());
    };
    Ok(enumerate_highest(n, &weight, g_cap)
        .iter()
        .map(|t| QPoly::monomial(rule.energy(t) as usize, 1))
        .sum())
}

/// The same sum computed through oscillating tableaux of weight `(1^n)`.
pub fn x_polynomial_via_ssot(shape: &Partition, n: usize, g_cap: u32) -> Result<QPoly> {
    check_box_case(shape, n)?;
    Ok(ssot_enumerate(shape, &vec![1; n], g_cap)
        .iter()
        .map(|s| {
            let t = s.to_box_tensor().expect("unit strips give single boxes");
            QPoly::monomial(energy(&t) as usize, 1)
        })
        .sum())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(displayed: &[i32]) -> BoxTensor {
        BoxTensor::parse_displayed(displayed).unwrap()
    }

    #[test]
    fn local_h_table() {
        assert_eq!(local_h(Letter::bar(1), Letter::plain(1)), 2);
        assert_eq!(local_h(Letter::bar(2), Letter::plain(2)), 1);
        assert_eq!(local_h(Letter::plain(1), Letter::plain(1)), 0);
        assert_eq!(local_h(Letter::plain(1), Letter::bar(1)), 0);
    }

    #[test]
    fn example_energies() {
        assert_eq!(energy(&t(&[-1, 1, 1])), 2);
        assert_eq!(energy(&t(&[1, -1, 1])), 4);
        assert_eq!(energy(&t(&[-2, 2, 1])), 3);
        assert_eq!(energy(&t(&[1, 2])), 0);
    }

    #[test]
    fn broken_rules_disagree_with_example() {
        let weak = EnergyRule {
            h: LocalH::Weak,
            order: FactorOrder::RightmostFirst,
        };
        let energies: Vec<u64> = [[-1, 1, 1], [1, -1, 1], [-2, 2, 1]]
            .iter()
            .map(|d| weak.energy(&t(d)))
            .collect();
        assert_eq!(energies, vec![4, 4, 3]);
        let flipped = EnergyRule {
            h: LocalH::Strict,
            order: FactorOrder::LeftmostFirst,
        };
        assert_ne!(flipped.energy(&t(&[-1, 1, 1])), 2);
    }

    #[test]
    fn example_polynomials() {
        let one = Partition::new(vec![1]).unwrap();
        assert_eq!(
            x_polynomial_boxcase(&one, 3, 1).unwrap(),
            QPoly::from_coeffs(vec![0, 0, 1, 0, 1])
        );
        assert_eq!(
            x_polynomial_boxcase(&one, 3, 2).unwrap(),
            QPoly::from_coeffs(vec![0, 0, 1, 1, 1])
        );
        assert_eq!(x_polynomial_boxcase(&Partition::empty(), 0, 2).unwrap(), QPoly::one());
    }

    #[test]
    fn pipelines_agree() {
        for n in 0..=4 {
            for g in 1..=3 {
                for shape in Partition::all_in_rectangle(n, g) {
                    assert_eq!(
                        x_polynomial_boxcase(&shape, n, g).unwrap(),
                        x_polynomial_via_ssot(&shape, n, g).unwrap(),
                        "n={n} g={g} {shape}"
                    );
                }
            }
        }
    }
}
