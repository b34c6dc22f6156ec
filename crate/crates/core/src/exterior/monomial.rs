use std::fmt;

use crate::bitset::ElementSet;

/// A square-free monomial `e_X`; the empty set is the unit.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Monomial(ElementSet);

impl Monomial {
    pub const ONE: Monomial = Monomial(ElementSet::EMPTY);

    pub fn new(set: ElementSet) -> Self {
        Monomial(set)
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(indices: I) -> Self {
        Monomial(ElementSet::from_indices(indices))
    }

    pub fn set(self) -> ElementSet {
        self.0
    }

    pub fn degree(self) -> usize {
        self.0.len()
    }

    pub fn is_one(self) -> bool {
        self.0.is_empty()
    }

    /// `e_X` divides `e_Y` iff `X ⊆ Y`.
    pub fn divides(self, other: Monomial) -> bool {
        self.0.is_subset(other.0)
    }

    /// `e_X ∧ e_Y = sign · e_{X∪Y}`, or `None` when `X ∩ Y ≠ ∅`.
    ///
    /// The sign is `(-1)^k` with `k` the number of pairs `(x, y) ∈ X × Y` with `x > y`.
    pub fn wedge(self, other: Monomial) -> Option<(i8, Monomial)> {
        let (x, y) = (self.0, other.0);
        if !x.is_disjoint(y) {
            return None;
        }
        let mut inversions = 0u32;
        for j in y.iter() {
            let above = if j >= 63 { 0 } else { x.bits() >> (j + 1) };
            inversions += above.count_ones();
        }
        let sign = if inversions.is_multiple_of(2) { 1 } else { -1 };
        Some((sign, Monomial(x.union(y))))
    }
}

impl From<ElementSet> for Monomial {
    fn from(s: ElementSet) -> Self {
        Monomial(s)
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        write!(f, "e")?;
        for (k, i) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", i + 1)?;
        }
        Ok(())
    }
}
