//! Integer presentations of `A₊^q`, `A^q` and `(I/Λ⁺I)^q`, and torsion
//! certificates read off their Smith normal forms.

mod lattice;
mod snf;

use num_bigint::BigInt;
use rayon::prelude::*;

use crate::bitset::binomial;
use crate::error::{Error, Result};
use crate::exterior::Domain;
use crate::matroid::Matroid;
use crate::osideal::{degree_spanning_set, graded_dims, DegreeBasis, GradedDims};

pub use lattice::LatticeBasis;
pub use snf::{smith_normal_form, IntMatrix, SnfResult};

fn spanning_matrix(m: &Matroid, q: usize, decomposable: bool) -> IntMatrix {
    let basis = DegreeBasis::new(m.n(), q);
    let rows = degree_spanning_set(m, q, decomposable)
        .into_iter()
        .map(|row| {
            let mut dense = vec![BigInt::from(0); basis.len()];
            for (s, v) in row {
                dense[basis.column(s)] = BigInt::from(v);
            }
            dense
        })
        .collect();
    IntMatrix::from_rows(basis.len(), rows)
}

/// Rows are the coordinate vectors of every `e_S ∧ ∂(e_C)` with `S ≠ ∅` in
/// degree `q`; the cokernel in `ℤ^{C(n,q)}` is `A₊^q`.
pub fn presentation_aplus(m: &Matroid, q: usize) -> IntMatrix {
    spanning_matrix(m, q, true)
}

/// Same with `S = ∅` allowed: the cokernel is `A^q`.
pub fn presentation_ideal(m: &Matroid, q: usize) -> IntMatrix {
    spanning_matrix(m, q, false)
}

/// SNF of the matrix reduced to a lattice basis first (same row lattice, so
/// same elementary divisors).
pub fn lattice_snf(m: &IntMatrix) -> SnfResult {
    let basis = LatticeBasis::from_rows(m.ncols(), m.rows().iter().map(|r| r.as_slice()));
    let mut r = smith_normal_form(&basis.to_matrix());
    r.rows = m.nrows();
    r
}

/// Structure of `(I/Λ⁺I)^q` over ℤ.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuotientGroup {
    /// Rank of the lattice `I^q_ℤ`.
    pub ideal_rank: usize,
    /// SNF of the `Λ⁺I` generators written in lattice coordinates of `I^q_ℤ`.
    pub snf: SnfResult,
}

impl QuotientGroup {
    pub fn free_rank(&self) -> usize {
        self.snf.cokernel_free_rank()
    }

    pub fn torsion(&self) -> Vec<BigInt> {
        self.snf.torsion()
    }

    pub fn is_torsion_free(&self) -> bool {
        self.snf.all_unit()
    }
}

/// `(I/Λ⁺I)^q` as a lattice quotient: a basis of `I^q_ℤ`, the decomposable
/// generators in its coordinates, and the SNF of the coordinate matrix.
pub fn quotient_group_i_mod_decomposable(m: &Matroid, q: usize) -> Result<QuotientGroup> {
    let full = presentation_ideal(m, q);
    let basis = LatticeBasis::from_rows(full.ncols(), full.rows().iter().map(|r| r.as_slice()));
    let decomposable = presentation_aplus(m, q);
    let coords = decomposable
        .rows()
        .iter()
        .map(|r| basis.coordinates(r))
        .collect::<Result<Vec<_>>>()?;
    let coords = IntMatrix::from_rows(basis.rank(), coords);
    Ok(QuotientGroup {
        ideal_rank: basis.rank(),
        snf: lattice_snf(&coords),
    })
}

/// Whether `A^q = Λ^q/I^q_ℤ` is free, i.e. all divisors of the degree-`q`
/// generator matrix of `I` equal 1.
pub fn saturation_check_i(m: &Matroid, q: usize) -> bool {
    lattice_snf(&presentation_ideal(m, q)).all_unit()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegreeTorsion {
    pub degree: usize,
    /// Presentation of `A₊^q`.
    pub aplus: SnfResult,
    pub quotient: QuotientGroup,
    /// `I^q_ℤ` is saturated (so `A^q` is free).
    pub ideal_saturated: bool,
}

impl DegreeTorsion {
    pub fn aplus_free_rank(&self) -> usize {
        self.aplus.cokernel_free_rank()
    }

    pub fn torsion_free(&self) -> bool {
        self.aplus.all_unit() && self.quotient.is_torsion_free()
    }
}

/// Fields used to cross-check integer ranks.
pub const CHECK_FIELDS: [Domain; 4] = [
    Domain::Rational,
    Domain::Prime(2),
    Domain::Prime(3),
    Domain::Prime(5),
];

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TorsionReport {
    pub degrees: Vec<DegreeTorsion>,
    /// Dimension tables over ℚ, 𝔽₂, 𝔽₃, 𝔽₅.
    pub field_dims: Vec<GradedDims>,
}

impl TorsionReport {
    pub fn torsion_free(&self) -> bool {
        self.degrees.iter().all(DegreeTorsion::torsion_free)
    }

    pub fn degree(&self, q: usize) -> Option<&DegreeTorsion> {
        self.degrees.iter().find(|d| d.degree == q)
    }

    /// Integer free ranks agree with every field dimension.
    pub fn ranks_match_fields(&self) -> bool {
        self.degrees.iter().all(|d| {
            self.field_dims.iter().all(|dims| {
                dims.degree(d.degree).is_some_and(|fd| {
                    fd.decomposable_algebra == d.aplus_free_rank()
                        && fd.quotient == d.quotient.free_rank()
                })
            })
        })
    }

    /// Whether the dimension tables coincide across fields (torsion in the
    /// integral groups would make some prime field jump).
    pub fn fields_agree(&self) -> bool {
        self.field_dims.windows(2).all(|w| w[0].same_table(&w[1]))
    }
}

/// Per-degree SNF certificates for every degree `0..=n`, cross-checked against
/// dimensions over ℚ, 𝔽₂, 𝔽₃, 𝔽₅.
pub fn torsion_report(m: &Matroid) -> Result<TorsionReport> {
    let degrees = (0..=m.n())
        .into_par_iter()
        .map(|q| {
            let aplus = lattice_snf(&presentation_aplus(m, q));
            let quotient = quotient_group_i_mod_decomposable(m, q)?;
            let ideal_saturated = saturation_check_i(m, q);
            if aplus.cols != binomial(m.n(), q) {
                return Err(Error::Invariant("presentation width mismatch".into()));
            }
            Ok(DegreeTorsion {
                degree: q,
                aplus,
                quotient,
                ideal_saturated,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let field_dims = CHECK_FIELDS
        .iter()
        .map(|&f| graded_dims(m, f, Some(m.n())))
        .collect::<Result<Vec<_>>>()?;
    let report = TorsionReport {
        degrees,
        field_dims,
    };
    if report.torsion_free() && !report.ranks_match_fields() {
        return Err(Error::Invariant(
            "torsion-free integral groups whose ranks disagree with field dimensions".into(),
        ));
    }
    Ok(report)
}
