use rayon::prelude::*;
use serde::Serialize;

use crate::bitset::binomial;
use crate::error::Result;
use crate::exterior::{Domain, VariableOrder};
use crate::linalg::{Echelon, Field};
use crate::matroid::Matroid;
use crate::with_field;

use super::{degree_spanning_set, DegreeBasis, SparseRow};

/// Dimensions of the degree-`q` pieces over one field.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct DegreeDims {
    pub degree: usize,
    /// `dim Λ^q = C(n, q)`
    pub exterior: usize,
    /// `dim I^q`
    pub ideal: usize,
    /// `dim (Λ⁺I)^q`
    pub decomposable: usize,
    /// `dim A^q`
    pub algebra: usize,
    /// `dim A₊^q`
    pub decomposable_algebra: usize,
    /// `dim (I/Λ⁺I)^q`
    pub quotient: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GradedDims {
    pub field: Domain,
    pub degrees: Vec<DegreeDims>,
}

impl GradedDims {
    pub fn degree(&self, q: usize) -> Option<&DegreeDims> {
        self.degrees.iter().find(|d| d.degree == q)
    }

    /// Same numbers, ignoring the field tag.
    pub fn same_table(&self, other: &GradedDims) -> bool {
        self.degrees == other.degrees
    }
}

/// Exact dimensions for degrees `0..=max_degree` (default `rank + 1`, capped at `n`).
pub fn graded_dims(m: &Matroid, field: Domain, max_degree: Option<usize>) -> Result<GradedDims> {
    let top = max_degree.unwrap_or(m.rank() + 1).min(m.n());
    let degrees = with_field!(field, |f| {
        (0..=top)
            .into_par_iter()
            .map(|q| degree_dims(&f, m, q))
            .collect::<Vec<_>>()
    })?;
    Ok(GradedDims { field, degrees })
}

fn dense<F: Field>(f: &F, basis: &DegreeBasis, row: &SparseRow) -> Vec<F::Elem> {
    let mut out = vec![f.zero(); basis.len()];
    for &(s, v) in row {
        out[basis.column(s)] = f.embed(v);
    }
    out
}

fn degree_dims<F: Field>(f: &F, m: &Matroid, q: usize) -> DegreeDims {
    let basis = DegreeBasis::new(m.n(), q);
    let mut ech = Echelon::new(f, basis.len());
    for row in degree_spanning_set(m, q, true) {
        ech.insert(dense(f, &basis, &row));
        if ech.is_full() {
            break;
        }
    }
    let decomposable = ech.rank();
    // Adding the bare boundaries of (q+1)-circuits completes I^q.
    for &c in m.circuits().iter().filter(|c| c.len() == q + 1) {
        let row = super::boundary_multiple(crate::bitset::ElementSet::EMPTY, c);
        ech.insert(dense(f, &basis, &row));
        if ech.is_full() {
            break;
        }
    }
    let ideal = ech.rank();
    let exterior = binomial(m.n(), q);
    DegreeDims {
        degree: q,
        exterior,
        ideal,
        decomposable,
        algebra: exterior - ideal,
        decomposable_algebra: exterior - decomposable,
        quotient: ideal - decomposable,
    }
}

/// `|𝒞^π_{q+1}(M)|`: Forge circuits of length `q + 1`.
pub fn decomposable_dim_by_counting(m: &Matroid, q: usize, order: &VariableOrder) -> usize {
    m.forge_circuits(order)
        .iter()
        .filter(|c| c.len() == q + 1)
        .count()
}

/// Whether the number of nbc sets equals `dim A^q` in every degree.
pub fn nbc_dimension_check(m: &Matroid, order: &VariableOrder, field: Domain) -> Result<bool> {
    let dims = graded_dims(m, field, Some(m.n()))?;
    Ok(dims
        .degrees
        .iter()
        .all(|d| m.nbc_sets(order, d.degree).len() == d.algebra))
}
