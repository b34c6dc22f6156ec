use std::cmp::Ordering;
use std::fmt;

use crate::bitset::ElementSet;
use crate::error::{Error, Result};

use super::Monomial;

/// A linear order on the ground set, `sequence[0] < sequence[1] < …`, and the
/// monomial order it induces.
///
/// Monomials are compared by degree first. Two monomials of equal degree are
/// compared by the largest element (under this order) of their symmetric
/// difference: whichever contains it is larger. With this choice the initial
/// monomial of `∂(e_C)` is the broken circuit `C ∖ min(C)`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VariableOrder {
    sequence: Vec<usize>,
    position: Vec<usize>,
}

impl VariableOrder {
    pub fn identity(n: usize) -> Self {
        VariableOrder {
            sequence: (0..n).collect(),
            position: (0..n).collect(),
        }
    }

    /// Builds the order listing elements from smallest to largest.
    pub fn from_sequence(sequence: Vec<usize>) -> Result<Self> {
        let n = sequence.len();
        let mut position = vec![usize::MAX; n];
        for (pos, &e) in sequence.iter().enumerate() {
            if e >= n || position[e] != usize::MAX {
                return Err(Error::InvalidOrder(format!("{sequence:?}")));
            }
            position[e] = pos;
        }
        Ok(VariableOrder { sequence, position })
    }

    /// Builds the order from the permutation `π`: element `i` gets rank `perm[i]`.
    pub fn from_permutation(perm: &[usize]) -> Result<Self> {
        let n = perm.len();
        let mut sequence = vec![usize::MAX; n];
        for (e, &pos) in perm.iter().enumerate() {
            if pos >= n || sequence[pos] != usize::MAX {
                return Err(Error::InvalidOrder(format!("{perm:?}")));
            }
            sequence[pos] = e;
        }
        Ok(VariableOrder {
            sequence,
            position: perm.to_vec(),
        })
    }

    pub fn len(&self) -> usize {
        self.sequence.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sequence.is_empty()
    }

    /// Elements from smallest to largest.
    pub fn sequence(&self) -> &[usize] {
        &self.sequence
    }

    /// Rank of element `e` (0 for the smallest).
    #[inline]
    pub fn position(&self, e: usize) -> usize {
        self.position[e]
    }

    #[inline]
    pub fn less(&self, a: usize, b: usize) -> bool {
        self.position[a] < self.position[b]
    }

    /// Smallest element of `set` under this order.
    pub fn min_of(&self, set: ElementSet) -> Option<usize> {
        set.iter().min_by_key(|&e| self.position[e])
    }

    pub fn max_of(&self, set: ElementSet) -> Option<usize> {
        set.iter().max_by_key(|&e| self.position[e])
    }

    /// Relabels `set` into rank space: bit `position(e)` for each member `e`.
    #[inline]
    pub fn rank_bits(&self, set: ElementSet) -> u64 {
        set.iter()
            .fold(0u64, |acc, e| acc | 1u64 << self.position[e])
    }

    /// Sort key realising the monomial order: `(degree, rank bits)`.
    ///
    /// For equal degree, comparing rank bits as integers finds the highest
    /// differing rank, which is the largest element of the symmetric difference.
    #[inline]
    pub fn key(&self, m: Monomial) -> (usize, u64) {
        (m.degree(), self.rank_bits(m.set()))
    }

    pub fn compare(&self, x: Monomial, y: Monomial) -> Ordering {
        self.key(x).cmp(&self.key(y))
    }
}

impl fmt::Debug for VariableOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.sequence.iter().map(|e| (e + 1).to_string()).collect();
        write!(f, "VariableOrder({})", parts.join("<"))
    }
}
