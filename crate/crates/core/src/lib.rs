//! Orlik–Solomon ideals of simple matroids.
//!
//! The crate builds the Orlik–Solomon ideal `I(M)` and its decomposable part
//! `Λ⁺I(M)` inside the exterior algebra, computes Forge's reduced Gröbner bases
//! for every variable order, checks them against an independent linear-algebra
//! construction, and certifies torsion freeness of `A₊(M) = Λ/Λ⁺I(M)` and of
//! `I/Λ⁺I` through integer Smith normal forms.

pub mod bitset;
pub mod corpus;
pub mod error;
pub mod exterior;
pub mod linalg;
pub mod matroid;
pub mod osideal;
pub mod search;
pub mod torsion;

pub use bitset::ElementSet;
pub use error::{Error, Result};
pub use exterior::{Coefficient, Domain, ExtElement, Monomial, VariableOrder};
pub use matroid::Matroid;
