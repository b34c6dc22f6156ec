//! The Orlik–Solomon ideal `I(M)`, its decomposable part `Λ⁺I(M)`, Gröbner
//! bases (Forge's combinatorial one and an independent linear-algebra one) and
//! graded dimensions over any supported field.

mod dims;
mod groebner;

use std::collections::HashMap;

use crate::bitset::ElementSet;
use crate::exterior::{Domain, ExtElement};
use crate::matroid::Matroid;

pub use dims::{
    decomposable_dim_by_counting, graded_dims, nbc_dimension_check, DegreeDims, GradedDims,
};
pub use groebner::{forge_basis, reduced_gb_oracle, BasisSource, GbOracle, GroebnerBasis};

/// `{∂(e_C) : C ∈ 𝒞(M)}` over the integers, in circuit order.
pub fn os_generators(m: &Matroid) -> Vec<ExtElement> {
    m.circuits()
        .iter()
        .map(|&c| ExtElement::boundary_of_set(Domain::Integer, c))
        .collect()
}

/// Sparse integer vector over monomials of one degree.
pub(crate) type SparseRow = Vec<(ElementSet, i64)>;

/// `e_S ∧ ∂(e_C)` as a sparse integer vector (empty when the product vanishes).
pub(crate) fn boundary_multiple(s: ElementSet, c: ElementSet) -> SparseRow {
    let mut out = Vec::new();
    if s.intersection(c).len() > 1 {
        return out;
    }
    for (k, i) in c.iter().enumerate() {
        let face = c.without(i);
        if !face.is_disjoint(s) {
            continue;
        }
        // sign of e_S ∧ e_face
        let mut inversions = 0u32;
        for j in face.iter() {
            inversions += if j >= 63 {
                0
            } else {
                (s.bits() >> (j + 1)).count_ones()
            };
        }
        let sign = if (k as u32 + inversions).is_multiple_of(2) {
            1
        } else {
            -1
        };
        out.push((s.union(face), sign));
    }
    out
}

/// Integer spanning set of the degree-`q` piece of `I(M)` (all multiples
/// `e_S ∧ ∂(e_C)`) or, when `decomposable` is set, of `Λ⁺I(M)` (only `S ≠ ∅`).
/// Redundant vectors are kept.
pub(crate) fn degree_spanning_set(m: &Matroid, q: usize, decomposable: bool) -> Vec<SparseRow> {
    let n = m.n();
    let mut rows = Vec::new();
    for &c in m.circuits() {
        let gen_degree = c.len() - 1;
        if gen_degree > q {
            continue;
        }
        let k = q - gen_degree;
        if decomposable && k == 0 {
            continue;
        }
        for s in ElementSet::subsets_of_size(n, k) {
            if s.intersection(c).len() > 1 {
                continue;
            }
            let row = boundary_multiple(s, c);
            if !row.is_empty() {
                rows.push(row);
            }
        }
    }
    rows
}

/// Monomials of one degree with a column index.
pub(crate) struct DegreeBasis {
    pub monomials: Vec<ElementSet>,
    index: HashMap<ElementSet, usize>,
}

impl DegreeBasis {
    pub fn new(n: usize, q: usize) -> Self {
        let monomials: Vec<ElementSet> = ElementSet::subsets_of_size(n, q).collect();
        let index = monomials.iter().enumerate().map(|(i, &s)| (s, i)).collect();
        DegreeBasis { monomials, index }
    }

    pub fn len(&self) -> usize {
        self.monomials.len()
    }

    pub fn column(&self, s: ElementSet) -> usize {
        self.index[&s]
    }
}
