//! Exact polynomials in one variable `q` with integer coefficients.

use std::fmt;
use std::iter::Sum;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use serde::{Deserialize, Serialize};

/// Dense coefficient vector, index = exponent, with no trailing zeros.
/// The zero polynomial is the empty vector.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(from = "Vec<i64>", into = "Vec<i64>")]
pub struct QPoly {
    coeffs: Vec<i64>,
}

impl QPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(0, 1)
    }

    pub fn monomial(exp: usize, coeff: i64) -> Self {
        let mut coeffs = vec![0; exp + 1];
        coeffs[exp] = coeff;
        Self::from_coeffs(coeffs)
    }

    pub fn from_coeffs(mut coeffs: Vec<i64>) -> Self {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    pub fn coeff(&self, exp: usize) -> i64 {
        self.coeffs.get(exp).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Nonzero `(exponent, coefficient)` pairs in increasing exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (usize, i64)> + '_ {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(e, &c)| (e, c))
    }

    /// Value at `q = 1`, the coefficient sum.
    pub fn at_one(&self) -> i64 {
        self.coeffs.iter().sum()
    }

    pub fn eval(&self, q: i64) -> i64 {
        self.coeffs.iter().rev().fold(0, |acc, &c| acc * q + c)
    }

    /// Multiplication by `q^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![0; k];
        coeffs.extend_from_slice(&self.coeffs);
        Self { coeffs }
    }

    /// Drops every term of degree above `max_degree`.
    pub fn truncate(&self, max_degree: usize) -> Self {
        Self::from_coeffs(self.coeffs.iter().take(max_degree + 1).copied().collect())
    }

    /// True when every coefficient is nonnegative.
    pub fn is_nonnegative(&self) -> bool {
        self.coeffs.iter().all(|&c| c >= 0)
    }

    pub fn scale(&self, k: i64) -> Self {
        Self::from_coeffs(self.coeffs.iter().map(|&c| c * k).collect())
    }

    /// `self += coeff · q^exp · other`, the hot loop of the partition
    /// function recursion.
    pub fn add_scaled_shifted(&mut self, other: &QPoly, exp: usize, coeff: i64) {
        if other.is_zero() || coeff == 0 {
            return;
        }
        let need = other.coeffs.len() + exp;
        if self.coeffs.len() < need {
            self.coeffs.resize(need, 0);
        }
        for (i, &c) in other.coeffs.iter().enumerate() {
            self.coeffs[i + exp] += coeff * c;
        }
        self.trim();
    }

    fn trim(&mut self) {
        while self.coeffs.last() == Some(&0) {
            self.coeffs.pop();
        }
    }
}

impl From<Vec<i64>> for QPoly {
    fn from(v: Vec<i64>) -> Self {
        Self::from_coeffs(v)
    }
}

impl From<QPoly> for Vec<i64> {
    fn from(p: QPoly) -> Self {
        p.coeffs
    }
}

impl AddAssign<&QPoly> for QPoly {
    fn add_assign(&mut self, rhs: &QPoly) {
        self.add_scaled_shifted(rhs, 0, 1);
    }
}

impl SubAssign<&QPoly> for QPoly {
    fn sub_assign(&mut self, rhs: &QPoly) {
        self.add_scaled_shifted(rhs, 0, -1);
    }
}

impl Add for &QPoly {
    type Output = QPoly;
    fn add(self, rhs: &QPoly) -> QPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for QPoly {
    type Output = QPoly;
    fn add(mut self, rhs: QPoly) -> QPoly {
        self += &rhs;
        self
    }
}

impl Sub for &QPoly {
    type Output = QPoly;
    fn sub(self, rhs: &QPoly) -> QPoly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Sub for QPoly {
    type Output = QPoly;
    fn sub(mut self, rhs: QPoly) -> QPoly {
        self -= &rhs;
        self
    }
}

impl Neg for QPoly {
    type Output = QPoly;
    fn neg(self) -> QPoly {
        self.scale(-1)
    }
}

impl Mul for &QPoly {
    type Output = QPoly;
    fn mul(self, rhs: &QPoly) -> QPoly {
        let mut out = QPoly::zero();
        for (e, c) in self.terms() {
            out.add_scaled_shifted(rhs, e, c);
        }
        out
    }
}

impl Mul for QPoly {
    type Output = QPoly;
    fn mul(self, rhs: QPoly) -> QPoly {
        &self * &rhs
    }
}

impl Sum for QPoly {
    fn sum<I: Iterator<Item = QPoly>>(iter: I) -> Self {
        iter.fold(QPoly::zero(), |acc, p| acc + p)
    }
}

/// Increasing exponents: `q^2 + q^4`, `1 + 2q - q^3`, `0`.
impl fmt::Display for QPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (k, (e, c)) in self.terms().enumerate() {
            let abs = c.unsigned_abs();
            match (k, c < 0) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            match (e, abs) {
                (0, a) => write!(f, "{a}")?,
                (_, 1) => {}
                (_, a) => write!(f, "{a}")?,
            }
            match e {
                0 => {}
                1 => write!(f, "q")?,
                _ => write!(f, "q^{e}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn qp(v: &[i64]) -> QPoly {
        QPoly::from_coeffs(v.to_vec())
    }

    #[test]
    fn display() {
        assert_eq!(qp(&[0, 0, 1, 0, 1]).to_string(), "q^2 + q^4");
        assert_eq!(qp(&[1, 2, 0, -1]).to_string(), "1 + 2q - q^3");
        assert_eq!(qp(&[-3]).to_string(), "-3");
        assert_eq!(QPoly::zero().to_string(), "0");
    }

    #[test]
    fn json_is_dense_array() {
        let s = serde_json::to_string(&qp(&[0, 0, 1, 0, 1])).unwrap();
        assert_eq!(s, "[0,0,1,0,1]");
        let back: QPoly = serde_json::from_str("[1,0,0]").unwrap();
        assert_eq!(back, QPoly::one());
    }

    #[test]
    fn arithmetic() {
        let a = qp(&[1, 1]);
        assert_eq!(&a * &a, qp(&[1, 2, 1]));
        assert_eq!(&a - &a, QPoly::zero());
        assert_eq!(a.shift(2), qp(&[0, 0, 1, 1]));
        assert_eq!(qp(&[1, 2, 3]).truncate(1), qp(&[1, 2]));
        assert_eq!(qp(&[1, 2, 3]).at_one(), 6);
        assert_eq!(qp(&[1, 2, 3]).eval(2), 17);
        assert!(!qp(&[1, -1]).is_nonnegative());
    }

    fn poly() -> impl Strategy<Value = QPoly> {
        proptest::collection::vec(-5i64..5, 0..6).prop_map(QPoly::from_coeffs)
    }

    proptest! {
        #[test]
        fn ring_laws(a in poly(), b in poly(), c in poly()) {
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!((&a + &b).at_one(), a.at_one() + b.at_one());
            prop_assert_eq!((&a * &b).at_one(), a.at_one() * b.at_one());
        }

        #[test]
        fn json_roundtrip(a in poly()) {
            let s = serde_json::to_string(&a).unwrap();
            prop_assert_eq!(serde_json::from_str::<QPoly>(&s).unwrap(), a);
        }
    }
}
