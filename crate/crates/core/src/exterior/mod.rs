//! Exact exterior algebra on at most 64 generators.
//!
//! Coefficients may be integers, rationals or residues modulo a prime. The
//! boundary derivation, permutation-induced monomial orders and polynomial
//! reduction live here.

mod coeff;
mod element;
mod monomial;
mod order;
mod reduce;

pub(crate) use coeff::pow_mod;
pub use coeff::{Coefficient, Domain};
pub use element::ExtElement;
pub use monomial::Monomial;
pub use order::VariableOrder;
pub use reduce::{initial_monomial, leading_term, make_monic, normal_form};
