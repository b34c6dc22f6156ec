use std::collections::BTreeMap;

use serde::Serialize;

use crate::bitset::{binomial, ElementSet};
use crate::error::{Error, Result};
use crate::exterior::{
    initial_monomial, leading_term, make_monic, Coefficient, Domain, ExtElement, Monomial,
    VariableOrder,
};
use crate::linalg::{rref, Echelon, Field};
use crate::matroid::{Circuit, Matroid};
use crate::with_field;

use super::{degree_spanning_set, DegreeBasis};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum BasisSource {
    Forge,
    Oracle,
}

/// A reduced Gröbner basis: monic elements sorted by increasing initial monomial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroebnerBasis {
    order: VariableOrder,
    elements: Vec<ExtElement>,
    source: BasisSource,
    circuits: Option<Vec<Circuit>>,
}

impl GroebnerBasis {
    fn new(
        order: VariableOrder,
        mut elements: Vec<ExtElement>,
        source: BasisSource,
        circuits: Option<Vec<Circuit>>,
    ) -> Self {
        let keys: Vec<_> = elements
            .iter()
            .map(|g| order.key(initial_monomial(&order, g).expect("nonzero")))
            .collect();
        let mut perm: Vec<usize> = (0..elements.len()).collect();
        perm.sort_by_key(|&i| keys[i]);
        elements = perm.iter().map(|&i| elements[i].clone()).collect();
        let circuits = circuits.map(|cs| perm.iter().map(|&i| cs[i]).collect());
        GroebnerBasis {
            order,
            elements,
            source,
            circuits,
        }
    }

    pub fn order(&self) -> &VariableOrder {
        &self.order
    }

    pub fn elements(&self) -> &[ExtElement] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn source(&self) -> BasisSource {
        self.source
    }

    /// The circuits behind a Forge basis; `None` for oracle bases.
    pub fn circuits(&self) -> Option<&[Circuit]> {
        self.circuits.as_deref()
    }

    pub fn domain(&self) -> Option<Domain> {
        self.elements.first().map(|g| g.domain())
    }

    pub fn initial_monomials(&self) -> Vec<Monomial> {
        self.elements
            .iter()
            .map(|g| initial_monomial(&self.order, g).expect("nonzero"))
            .collect()
    }

    /// Same basis with coefficients mapped into `domain`.
    pub fn to_domain(&self, domain: Domain) -> Result<GroebnerBasis> {
        let elements = self
            .elements
            .iter()
            .map(|g| g.to_domain(domain))
            .collect::<Result<Vec<_>>>()?;
        Ok(GroebnerBasis::new(
            self.order.clone(),
            elements,
            self.source,
            self.circuits.clone(),
        ))
    }

    /// Same element set, regardless of where the bases came from.
    pub fn same_elements(&self, other: &GroebnerBasis) -> bool {
        self.order == other.order && self.elements == other.elements
    }

    /// Checks reducedness: homogeneous monic elements whose initial monomials
    /// divide no monomial in the support of any other element.
    pub fn check_reduced(&self) -> Result<()> {
        let leads = self.initial_monomials();
        for (g, &lead) in self.elements.iter().zip(&leads) {
            if g.homogeneous_degree().is_none() {
                return Err(Error::Invariant(format!("{g} is not homogeneous")));
            }
            let (_, c) = leading_term(&self.order, g)?;
            if !c.is_one() {
                return Err(Error::Invariant(format!("{g} is not monic")));
            }
            for (h, &other_lead) in self.elements.iter().zip(&leads) {
                if other_lead == lead {
                    continue;
                }
                if let Some(m) = h.support().find(|&m| lead.divides(m)) {
                    return Err(Error::Invariant(format!(
                        "initial monomial {lead:?} of {g} divides {m:?} in {h}"
                    )));
                }
            }
        }
        Ok(())
    }
}

/// Forge's basis `{∂(e_C) : C ∈ 𝒞^π(M)}` over the integers, each element scaled
/// to leading coefficient +1.
pub fn forge_basis(m: &Matroid, order: &VariableOrder) -> GroebnerBasis {
    let circuits = m.forge_circuits(order);
    let elements = circuits
        .iter()
        .map(|&c| {
            make_monic(order, &ExtElement::boundary_of_set(Domain::Integer, c))
                .expect("boundary leads are ±1")
        })
        .collect();
    GroebnerBasis::new(order.clone(), elements, BasisSource::Forge, Some(circuits))
}

/// The unique reduced Gröbner basis of `I(M)` over `field`, computed by linear
/// algebra alone. One-shot wrapper around [`GbOracle`].
pub fn reduced_gb_oracle(
    m: &Matroid,
    order: &VariableOrder,
    field: Domain,
) -> Result<GroebnerBasis> {
    Ok(GbOracle::new(m, field)?.basis(order))
}

/// Degree-wise spanning sets of `I(M)` over a field, reusable across orders.
///
/// For a given order each degree is brought into reduced row echelon form with
/// columns sorted from the largest monomial down. A pivot row whose pivot is not
/// divisible by a leading monomial from a lower degree is a reduced basis element:
/// its other entries lie in non-pivot columns, i.e. on standard monomials.
pub struct GbOracle {
    n: usize,
    domain: Domain,
    degrees: Vec<OracleDegree>,
}

struct OracleDegree {
    monomials: Vec<ElementSet>,
    /// Linearly independent spanning rows over the field, as (column, value).
    rows: Vec<Vec<(usize, i64)>>,
}

impl GbOracle {
    pub fn new(m: &Matroid, field: Domain) -> Result<GbOracle> {
        with_field!(field, |f| Self::build(&f, m))
    }

    fn build<F: Field>(f: &F, m: &Matroid) -> GbOracle {
        let n = m.n();
        let mut degrees = Vec::new();
        for q in 1..=n {
            let basis = DegreeBasis::new(n, q);
            let mut ech = Echelon::new(f, basis.len());
            let mut kept = Vec::new();
            for row in degree_spanning_set(m, q, false) {
                let sparse: Vec<(usize, i64)> =
                    row.iter().map(|&(s, v)| (basis.column(s), v)).collect();
                let mut dense = vec![f.zero(); basis.len()];
                for &(c, v) in &sparse {
                    dense[c] = f.embed(v);
                }
                if ech.insert(dense) {
                    kept.push(sparse);
                }
                if ech.is_full() {
                    break;
                }
            }
            let full = kept.len() == binomial(n, q);
            degrees.push(OracleDegree {
                monomials: basis.monomials,
                rows: kept,
            });
            // Every monomial of higher degree is divisible by one of this degree.
            if full {
                break;
            }
        }
        GbOracle {
            n,
            domain: f.domain(),
            degrees,
        }
    }

    pub fn domain(&self) -> Domain {
        self.domain
    }

    /// Dimension of `I(M)` in each degree `1..` up to the first full degree.
    pub fn ideal_dims(&self) -> Vec<usize> {
        self.degrees.iter().map(|d| d.rows.len()).collect()
    }

    pub fn basis(&self, order: &VariableOrder) -> GroebnerBasis {
        assert_eq!(order.len(), self.n, "order size differs from ground set");
        let elements = with_field!(self.domain, |f| self.basis_over(&f, order))
            .expect("oracle domain is a field");
        GroebnerBasis::new(order.clone(), elements, BasisSource::Oracle, None)
    }

    fn basis_over<F: Field>(&self, f: &F, order: &VariableOrder) -> Vec<ExtElement> {
        let mut leads: Vec<ElementSet> = Vec::new();
        let mut elements = Vec::new();
        for degree in &self.degrees {
            if degree.rows.is_empty() {
                continue;
            }
            // column j of the permuted matrix holds monomial perm[j], largest first
            let mut perm: Vec<usize> = (0..degree.monomials.len()).collect();
            perm.sort_by_key(|&i| std::cmp::Reverse(order.key(Monomial::new(degree.monomials[i]))));
            let mut position = vec![0; perm.len()];
            for (j, &i) in perm.iter().enumerate() {
                position[i] = j;
            }
            let rows: Vec<Vec<F::Elem>> = degree
                .rows
                .iter()
                .map(|sparse| {
                    let mut dense = vec![f.zero(); perm.len()];
                    for &(c, v) in sparse {
                        dense[position[c]] = f.embed(v);
                    }
                    dense
                })
                .collect();
            let (reduced, pivots) = rref(f, rows);
            let mut new_leads = Vec::new();
            for (row, &p) in reduced.iter().zip(&pivots) {
                let lead = degree.monomials[perm[p]];
                if leads.iter().any(|l| l.is_subset(lead)) {
                    continue;
                }
                new_leads.push(lead);
                let terms: BTreeMap<Monomial, Coefficient> = row
                    .iter()
                    .enumerate()
                    .filter(|(_, x)| !f.is_zero(x))
                    .map(|(j, x)| {
                        (
                            Monomial::new(degree.monomials[perm[j]]),
                            f.to_coefficient(x),
                        )
                    })
                    .collect();
                elements.push(ExtElement::from_parts(f.domain(), terms));
            }
            leads.extend(new_leads);
        }
        elements
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(ix: &[usize]) -> ElementSet {
        ElementSet::from_indices(ix.iter().map(|i| i - 1))
    }

    fn worked_example() -> Matroid {
        Matroid::from_circuits(
            6,
            vec![
                set(&[5, 6, 2, 3]),
                set(&[5, 6, 1, 4]),
                set(&[5, 1, 2, 3, 4]),
                set(&[6, 1, 2, 3, 4]),
            ],
        )
        .unwrap()
    }

    #[test]
    fn forge_sizes_for_the_two_orders() {
        let m = worked_example();
        let natural = VariableOrder::identity(6);
        let hp = VariableOrder::from_sequence(vec![4, 5, 0, 1, 2, 3]).unwrap();
        assert_eq!(forge_basis(&m, &natural).len(), 4);
        assert_eq!(forge_basis(&m, &hp).len(), 3);
        assert!(forge_basis(&Matroid::free(3), &VariableOrder::identity(3)).is_empty());
        forge_basis(&m, &hp).check_reduced().unwrap();
    }

    #[test]
    fn oracle_matches_forge_on_worked_example() {
        let m = worked_example();
        let hp = VariableOrder::from_sequence(vec![4, 5, 0, 1, 2, 3]).unwrap();
        let oracle = reduced_gb_oracle(&m, &hp, Domain::Rational).unwrap();
        oracle.check_reduced().unwrap();
        let forge = forge_basis(&m, &hp).to_domain(Domain::Rational).unwrap();
        assert!(forge.same_elements(&oracle));
    }

    #[test]
    fn oracle_on_u23_over_f2() {
        let m = Matroid::uniform(2, 3).unwrap();
        let b = reduced_gb_oracle(&m, &VariableOrder::identity(3), Domain::Prime(2)).unwrap();
        assert_eq!(b.len(), 1);
        let expected = ExtElement::boundary_of_set(Domain::Prime(2), set(&[1, 2, 3]));
        assert_eq!(b.elements()[0], expected);
        assert!(b.elements()[0].terms().all(|(_, c)| c.is_one()));
    }

    #[test]
    fn oracle_rejects_integers() {
        let m = Matroid::uniform(2, 3).unwrap();
        assert!(matches!(
            reduced_gb_oracle(&m, &VariableOrder::identity(3), Domain::Integer),
            Err(Error::NotAField(Domain::Integer))
        ));
    }
}
