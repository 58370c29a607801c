//! Tableaux, charge and Kostka–Foulkes polynomials.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::partition::Partition;
use crate::poly::QPoly;

use super::letter::Letter;
use super::ssot::add_horizontal_strips;
use super::tensor::BoxTensor;

/// A tableau in English notation, rows top to bottom.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Tableau {
    rows: Vec<Vec<u32>>,
}

impl Tableau {
    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    pub fn shape(&self) -> Partition {
        Partition::new(self.rows.iter().map(|r| r.len() as u32).collect())
            .expect("rows are weakly decreasing")
    }

    /// Rows from bottom to top, each left to right.
    pub fn reading_word(&self) -> Vec<u32> {
        self.rows.iter().rev().flatten().copied().collect()
    }

    pub fn charge(&self) -> u64 {
        charge(&self.reading_word())
    }

    /// For a standard tableau with entries `1..=n`: the tensor whose factor
    /// `a_t` is the column (1-based) holding `t`.
    pub fn column_tensor(&self) -> BoxTensor {
        let n: usize = self.rows.iter().map(Vec::len).sum();
        let mut col = vec![0u32; n];
        for row in &self.rows {
            for (c, &x) in row.iter().enumerate() {
                col[x as usize - 1] = c as u32 + 1;
            }
        }
        BoxTensor::from_rightmost_first(col.into_iter().map(Letter::plain).collect())
    }
}

impl fmt::Display for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, row) in self.rows.iter().enumerate() {
            if i > 0 {
                write!(f, "/")?;
            }
            for (j, x) in row.iter().enumerate() {
                if j > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{x}")?;
            }
        }
        Ok(())
    }
}

/// Semistandard tableaux of shape `shape` with `content[k]` entries equal to
/// `k + 1`.
pub fn semistandard_tableaux(shape: &Partition, content: &[u32]) -> Vec<Tableau> {
    if content.iter().sum::<u32>() != shape.size() {
        return Vec::new();
    }
    let mut out = Vec::new();
    let mut chain = vec![Partition::empty()];
    fill(shape, content, &mut chain, &mut out);
    out
}

fn fill(shape: &Partition, content: &[u32], chain: &mut Vec<Partition>, out: &mut Vec<Tableau>) {
    let k = chain.len() - 1;
    if k == content.len() {
        let mut rows: Vec<Vec<u32>> = vec![Vec::new(); shape.len()];
        for (letter, w) in chain.windows(2).enumerate() {
            for (i, row) in rows.iter_mut().enumerate() {
                for _ in w[0].part(i)..w[1].part(i) {
                    row.push(letter as u32 + 1);
                }
            }
        }
        out.push(Tableau { rows });
        return;
    }
    let current = chain[k].clone();
    for next in add_horizontal_strips(&current, content[k], shape.width()) {
        if shape.contains(&next) {
            chain.push(next);
            fill(shape, content, chain, out);
            chain.pop();
        }
    }
}

pub fn standard_tableaux(shape: &Partition) -> Vec<Tableau> {
    semistandard_tableaux(shape, &vec![1; shape.size() as usize])
}

/// Charge of a word whose content is a partition.
///
/// Standard subwords are extracted repeatedly: start at the rightmost `1`,
/// then scan leftward cyclically for `2, 3, …`; the index grows by one each
/// time the scan wraps past the left end.
pub fn charge(word: &[u32]) -> u64 {
    let mut alive: Vec<Option<u32>> = word.iter().map(|&x| Some(x)).collect();
    let mut total = 0u64;
    while let Some(mut pos) = alive.iter().rposition(|x| *x == Some(1)) {
        alive[pos] = None;
        let mut index = 0u64;
        let mut letter = 2u32;
        loop {
            let left = alive[..pos].iter().rposition(|x| *x == Some(letter));
            let found = match left {
                Some(p) => Some(p),
                None => {
                    let p = alive.iter().rposition(|x| *x == Some(letter));
                    if p.is_some() {
                        index += 1;
                    }
                    p
                }
            };
            let Some(p) = found else { break };
            total += index;
            alive[p] = None;
            pos = p;
            letter += 1;
        }
    }
    total
}

/// `K_{λμ}(q) = Σ_T q^{charge(T)}` over semistandard tableaux of shape `λ`
/// and content `μ`; zero when the sizes differ.
pub fn kostka_foulkes(lambda: &Partition, mu: &Partition) -> QPoly {
    semistandard_tableaux(lambda, mu.parts())
        .iter()
        .map(|t| QPoly::monomial(t.charge() as usize, 1))
        .sum()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::crystal::energy::energy;

    fn p(v: &[u32]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn charge_of_small_words() {
        assert_eq!(charge(&[2, 1]), 0);
        assert_eq!(charge(&[1, 2]), 1);
        assert_eq!(charge(&[1, 2, 3]), 3);
        assert_eq!(charge(&[3, 2, 1]), 0);
        assert_eq!(charge(&[2, 1, 1]), 0);
        assert_eq!(charge(&[1, 1, 2]), 1);
        assert_eq!(charge(&[1, 2, 1]), 0);
    }

    #[test]
    fn kostka_foulkes_table() {
        let k = |l: &[u32], m: &[u32]| kostka_foulkes(&p(l), &p(m));
        assert_eq!(k(&[3], &[1, 1, 1]), QPoly::from_coeffs(vec![0, 0, 0, 1]));
        assert_eq!(k(&[2, 1], &[1, 1, 1]), QPoly::from_coeffs(vec![0, 1, 1]));
        assert_eq!(k(&[1, 1, 1], &[1, 1, 1]), QPoly::one());
        assert_eq!(k(&[2, 2], &[2, 1, 1]), QPoly::monomial(1, 1));
        assert_eq!(k(&[3, 1], &[2, 1, 1]), QPoly::from_coeffs(vec![0, 1, 1]));
        assert_eq!(k(&[4], &[2, 2]), QPoly::monomial(2, 1));
        assert_eq!(k(&[2, 1], &[2, 2]), QPoly::zero());
        assert_eq!(k(&[2], &[1]), QPoly::zero());
    }

    #[test]
    fn standard_counts() {
        assert_eq!(standard_tableaux(&p(&[3, 2])).len(), 5);
        assert_eq!(standard_tableaux(&p(&[2, 2, 1])).len(), 5);
        assert_eq!(standard_tableaux(&p(&[3, 2, 1])).len(), 16);
        assert_eq!(semistandard_tableaux(&p(&[2, 1]), &[1, 1, 1]).len(), 2);
        assert_eq!(semistandard_tableaux(&p(&[2, 1]), &[2, 1]).len(), 1);
    }

    #[test]
    fn at_one_is_kostka_number() {
        for lambda in Partition::all_of_size(5, 5, 5) {
            for mu in Partition::all_of_size(5, 5, 5) {
                let n = semistandard_tableaux(&lambda, mu.parts()).len() as i64;
                assert_eq!(kostka_foulkes(&lambda, &mu).at_one(), n);
            }
        }
    }

    #[test]
    fn column_tensor_energy_is_charge() {
        for size in 0..=6 {
            for lambda in Partition::all_of_size(size, 6, 6) {
                for t in standard_tableaux(&lambda) {
                    assert_eq!(energy(&t.column_tensor()), t.charge(), "{t}");
                }
            }
        }
    }
}
