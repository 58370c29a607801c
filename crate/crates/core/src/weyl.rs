//! Weyl groups of the classical series as (signed) permutation groups.

use itertools::Itertools;

use crate::error::Result;
use crate::roots::{RootSystem, RootType};
use crate::weight::Weight;

/// A signed permutation `w` acting by `(w·v)_{π(j)} = s_{π(j)} · v_j`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SignedPermutation {
    perm: Vec<usize>,
    signs: Vec<i8>,
}

impl SignedPermutation {
    /// `perm[j]` is the image of coordinate `j`; `signs[i]` is the sign put on
    /// output coordinate `i`.
    pub fn new(perm: Vec<usize>, signs: Vec<i8>) -> Self {
        assert_eq!(perm.len(), signs.len());
        debug_assert!(perm.iter().sorted().copied().eq(0..perm.len()));
        Self { perm, signs }
    }

    pub fn identity(n: usize) -> Self {
        Self::new((0..n).collect(), vec![1; n])
    }

    pub fn rank(&self) -> usize {
        self.perm.len()
    }

    pub fn perm(&self) -> &[usize] {
        &self.perm
    }

    pub fn signs(&self) -> &[i8] {
        &self.signs
    }

    /// True when every sign is `+1`, i.e. `w` lies in `S_n`.
    pub fn is_unsigned(&self) -> bool {
        self.signs.iter().all(|&s| s == 1)
    }

    /// `(−1)^w`, the determinant of the signed permutation matrix.
    pub fn sign(&self) -> i64 {
        let inversions = (0..self.perm.len())
            .tuple_combinations()
            .filter(|&(a, b)| self.perm[a] > self.perm[b])
            .count();
        let negatives = self.signs.iter().filter(|&&s| s < 0).count();
        if (inversions + negatives) % 2 == 0 {
            1
        } else {
            -1
        }
    }

    pub fn apply(&self, v: &Weight) -> Weight {
        assert_eq!(v.rank(), self.rank());
        let mut out = vec![0; v.rank()];
        for (j, &x) in v.0.iter().enumerate() {
            let i = self.perm[j];
            out[i] = self.signs[i] as i64 * x;
        }
        Weight(out)
    }
}

/// Every element of the Weyl group of `kind` in rank `n`, each exactly once.
///
/// Orders: `n!` (A), `2^n n!` (B, C), `2^{n−1} n!` (D).
pub fn weyl_group(kind: RootType, rank: usize) -> Result<Vec<SignedPermutation>> {
    // validates the parameters
    RootSystem::new(kind, rank)?;
    let sign_vectors: Vec<Vec<i8>> = match kind {
        RootType::A => vec![vec![1; rank]],
        _ => (0..rank)
            .map(|_| [1i8, -1])
            .multi_cartesian_product()
            .filter(|s| kind != RootType::D || s.iter().filter(|&&x| x < 0).count() % 2 == 0)
            .collect(),
    };
    let mut out = Vec::new();
    for perm in (0..rank).permutations(rank) {
        for signs in &sign_vectors {
            out.push(SignedPermutation::new(perm.clone(), signs.clone()));
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn orders() {
        assert_eq!(weyl_group(RootType::C, 2).unwrap().len(), 8);
        assert_eq!(weyl_group(RootType::C, 3).unwrap().len(), 48);
        assert_eq!(weyl_group(RootType::B, 3).unwrap().len(), 48);
        assert_eq!(weyl_group(RootType::D, 3).unwrap().len(), 24);
        assert_eq!(weyl_group(RootType::D, 4).unwrap().len(), 192);
        let a = weyl_group(RootType::A, 3).unwrap();
        assert_eq!(a.len(), 6);
        assert!(a.iter().all(|w| w.is_unsigned()));
    }

    #[test]
    fn elements_are_distinct() {
        let g = weyl_group(RootType::C, 3).unwrap();
        let set: std::collections::HashSet<_> = g.iter().collect();
        assert_eq!(set.len(), g.len());
    }

    #[test]
    fn sign_matches_determinant() {
        // a transposition and a single sign flip are both odd
        let t = SignedPermutation::new(vec![1, 0], vec![1, 1]);
        let f = SignedPermutation::new(vec![0, 1], vec![1, -1]);
        assert_eq!(t.sign(), -1);
        assert_eq!(f.sign(), -1);
        assert_eq!(SignedPermutation::identity(3).sign(), 1);
        // half the group is odd
        let g = weyl_group(RootType::B, 3).unwrap();
        assert_eq!(g.iter().map(|w| w.sign()).sum::<i64>(), 0);
    }

    #[test]
    fn action_preserves_root_system() {
        for kind in RootType::ALL {
            let rs = RootSystem::new(kind, 3).unwrap();
            let roots: std::collections::HashSet<Weight> = rs
                .positive_roots()
                .iter()
                .flat_map(|r| [r.vector.clone(), -&r.vector])
                .collect();
            for w in weyl_group(kind, 3).unwrap() {
                for r in &roots {
                    assert!(roots.contains(&w.apply(r)), "{kind}: {w:?} moves {r} off the roots");
                }
            }
        }
    }

    #[test]
    fn action_is_invertible_and_linear() {
        let v = Weight(vec![3, -1, 2]);
        let u = Weight(vec![0, 5, -4]);
        for w in weyl_group(RootType::C, 3).unwrap() {
            assert_eq!(w.apply(&(&v + &u)), &w.apply(&v) + &w.apply(&u));
            assert_eq!(w.apply(&v).dot(&w.apply(&u)), v.dot(&u));
        }
    }
}
