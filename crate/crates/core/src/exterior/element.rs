use std::collections::BTreeMap;
use std::fmt;

use crate::bitset::ElementSet;
use crate::error::{Error, Result};

use super::{Coefficient, Domain, Monomial};

/// An element `Σ a_X e_X` of the exterior algebra over a fixed coefficient domain.
///
/// Zero coefficients are never stored, so two elements are equal iff their term
/// maps are equal.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ExtElement {
    domain: Domain,
    terms: BTreeMap<Monomial, Coefficient>,
}

impl ExtElement {
    pub fn zero(domain: Domain) -> Self {
        ExtElement {
            domain,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(domain: Domain) -> Self {
        Self::monomial(domain, Monomial::ONE)
    }

    pub fn monomial(domain: Domain, m: Monomial) -> Self {
        Self::term(domain.one(), m)
    }

    pub fn term(coefficient: Coefficient, m: Monomial) -> Self {
        let domain = coefficient.domain();
        let mut terms = BTreeMap::new();
        if !coefficient.is_zero() {
            terms.insert(m, coefficient);
        }
        ExtElement { domain, terms }
    }

    /// Builds an element from integer coefficients mapped into `domain`.
    pub fn from_int_terms<I>(domain: Domain, terms: I) -> Self
    where
        I: IntoIterator<Item = (Monomial, i64)>,
    {
        let mut out = ExtElement::zero(domain);
        for (m, c) in terms {
            out.add_term(m, Coefficient::from_i64(domain, c));
        }
        out
    }

    pub fn domain(&self) -> Domain {
        self.domain
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in increasing bit-pattern order of the monomials (not the monomial order).
    pub fn terms(&self) -> impl Iterator<Item = (Monomial, &Coefficient)> {
        self.terms.iter().map(|(m, c)| (*m, c))
    }

    pub fn support(&self) -> impl Iterator<Item = Monomial> + '_ {
        self.terms.keys().copied()
    }

    pub fn coefficient(&self, m: Monomial) -> Option<&Coefficient> {
        self.terms.get(&m)
    }

    /// `Some(d)` when every term has degree `d`; `None` for zero or mixed degrees.
    pub fn homogeneous_degree(&self) -> Option<usize> {
        let mut degrees = self.terms.keys().map(|m| m.degree());
        let d = degrees.next()?;
        degrees.all(|e| e == d).then_some(d)
    }

    fn check(&self, other: &ExtElement) -> Result<()> {
        if self.domain == other.domain {
            Ok(())
        } else {
            Err(Error::DomainMismatch(self.domain, other.domain))
        }
    }

    pub(crate) fn add_term(&mut self, m: Monomial, c: Coefficient) {
        debug_assert_eq!(c.domain(), self.domain);
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(existing) => {
                let sum = existing.add(&c);
                if sum.is_zero() {
                    self.terms.remove(&m);
                } else {
                    *existing = sum;
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    pub fn add(&self, other: &ExtElement) -> Result<ExtElement> {
        self.check(other)?;
        let mut out = self.clone();
        for (m, c) in other.terms() {
            out.add_term(m, c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &ExtElement) -> Result<ExtElement> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> ExtElement {
        ExtElement {
            domain: self.domain,
            terms: self.terms.iter().map(|(m, c)| (*m, c.neg())).collect(),
        }
    }

    pub fn scale(&self, c: &Coefficient) -> Result<ExtElement> {
        if c.domain() != self.domain {
            return Err(Error::DomainMismatch(self.domain, c.domain()));
        }
        if c.is_zero() {
            return Ok(ExtElement::zero(self.domain));
        }
        Ok(ExtElement {
            domain: self.domain,
            terms: self.terms.iter().map(|(m, a)| (*m, a.mul(c))).collect(),
        })
    }

    /// `c · e_S ∧ self`.
    pub(crate) fn left_multiply(&self, c: &Coefficient, s: Monomial) -> ExtElement {
        let mut out = ExtElement::zero(self.domain);
        for (m, a) in self.terms() {
            if let Some((sign, prod)) = s.wedge(m) {
                let mut coeff = a.mul(c);
                if sign < 0 {
                    coeff = coeff.neg();
                }
                out.add_term(prod, coeff);
            }
        }
        out
    }

    /// Exterior product; bilinear extension of the monomial rule in [`Monomial::wedge`].
    pub fn wedge(&self, other: &ExtElement) -> Result<ExtElement> {
        self.check(other)?;
        let mut out = ExtElement::zero(self.domain);
        for (x, a) in self.terms() {
            for (y, b) in other.terms() {
                if let Some((sign, prod)) = x.wedge(y) {
                    let mut c = a.mul(b);
                    if sign < 0 {
                        c = c.neg();
                    }
                    out.add_term(prod, c);
                }
            }
        }
        Ok(out)
    }

    /// The degree −1 derivation with `∂(e_i) = 1`:
    /// `∂(e_{i_1 < … < i_m}) = Σ_k (−1)^{k−1} e_{X ∖ i_k}`.
    pub fn boundary(&self) -> ExtElement {
        let mut out = ExtElement::zero(self.domain);
        for (m, a) in self.terms() {
            for (k, i) in m.set().iter().enumerate() {
                let c = if k % 2 == 0 { a.clone() } else { a.neg() };
                out.add_term(Monomial::new(m.set().without(i)), c);
            }
        }
        out
    }

    /// `∂(e_X)` for a subset `X`.
    pub fn boundary_of_set(domain: Domain, set: ElementSet) -> ExtElement {
        let mut out = ExtElement::zero(domain);
        for (k, i) in set.iter().enumerate() {
            let c = Coefficient::from_i64(domain, if k % 2 == 0 { 1 } else { -1 });
            out.add_term(Monomial::new(set.without(i)), c);
        }
        out
    }

    /// Reinterprets integer coefficients in another domain. Fails for rational
    /// sources with non-integral entries unless the target is rational.
    pub fn to_domain(&self, target: Domain) -> Result<ExtElement> {
        let mut out = ExtElement::zero(target);
        for (m, c) in self.terms() {
            let mapped = match (c, target) {
                (_, t) if t == self.domain => c.clone(),
                (Coefficient::Integer(v), t) => Coefficient::from_bigint(t, v),
                (Coefficient::Rational(v), Domain::Integer) if v.is_integer() => {
                    Coefficient::Integer(v.to_integer())
                }
                (Coefficient::Rational(v), Domain::Prime(_)) if v.is_integer() => {
                    Coefficient::from_bigint(target, &v.to_integer())
                }
                _ => return Err(Error::DomainMismatch(self.domain, target)),
            };
            out.add_term(m, mapped);
        }
        Ok(out)
    }

    pub(crate) fn from_parts(domain: Domain, terms: BTreeMap<Monomial, Coefficient>) -> Self {
        debug_assert!(terms.values().all(|c| !c.is_zero() && c.domain() == domain));
        ExtElement { domain, terms }
    }

    /// Renders with user labels, e.g. `e_{y,z,H} - e_{x,z,H}`.
    pub fn display_with<'a>(&'a self, labels: &'a [String]) -> impl fmt::Display + 'a {
        Labelled {
            element: self,
            labels: Some(labels),
        }
    }
}

struct Labelled<'a> {
    element: &'a ExtElement,
    labels: Option<&'a [String]>,
}

impl fmt::Display for Labelled<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.element.is_zero() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.element.terms().enumerate() {
            let text = c.to_string();
            let (negative, magnitude) = match text.strip_prefix('-') {
                Some(rest) => (true, rest.to_string()),
                None => (false, text),
            };
            match (k, negative) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            if magnitude != "1" {
                write!(f, "{magnitude}")?;
                if !m.is_one() {
                    write!(f, "*")?;
                }
            } else if m.is_one() {
                write!(f, "1")?;
            }
            if !m.is_one() {
                let names: Vec<String> = m
                    .set()
                    .iter()
                    .map(|i| match self.labels {
                        Some(l) if i < l.len() => l[i].clone(),
                        _ => (i + 1).to_string(),
                    })
                    .collect();
                write!(f, "e_{{{}}}", names.join(","))?;
            }
        }
        Ok(())
    }
}

impl fmt::Display for ExtElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        Labelled {
            element: self,
            labels: None,
        }
        .fmt(f)
    }
}

impl fmt::Debug for ExtElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}] {}", self.domain, self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(ix: &[usize]) -> Monomial {
        Monomial::from_indices(ix.iter().map(|i| i - 1))
    }

    fn e(ix: &[usize]) -> ExtElement {
        ExtElement::monomial(Domain::Integer, m(ix))
    }

    #[test]
    fn wedge_examples() {
        assert_eq!(e(&[1]).wedge(&e(&[2])).unwrap(), e(&[1, 2]));
        assert_eq!(e(&[2]).wedge(&e(&[1])).unwrap(), e(&[1, 2]).neg());
        assert!(e(&[1]).wedge(&e(&[1])).unwrap().is_zero());
    }

    #[test]
    fn wedge_rejects_mixed_domains() {
        let a = ExtElement::monomial(Domain::Prime(2), m(&[1]));
        let b = ExtElement::monomial(Domain::Rational, m(&[2]));
        assert_eq!(
            a.wedge(&b),
            Err(Error::DomainMismatch(Domain::Prime(2), Domain::Rational))
        );
        assert!(a.add(&b).is_err());
    }

    #[test]
    fn boundary_examples() {
        assert_eq!(e(&[5]).boundary(), ExtElement::one(Domain::Integer));
        let expected = ExtElement::from_int_terms(
            Domain::Integer,
            [(m(&[2, 3]), 1), (m(&[1, 3]), -1), (m(&[1, 2]), 1)],
        );
        assert_eq!(e(&[1, 2, 3]).boundary(), expected);
        assert!(e(&[1, 2, 3, 4]).boundary().boundary().is_zero());
        assert_eq!(
            ExtElement::boundary_of_set(Domain::Integer, m(&[1, 2, 3]).set()),
            expected
        );
    }

    #[test]
    fn boundary_over_f2_has_no_signs() {
        let b = ExtElement::boundary_of_set(Domain::Prime(2), m(&[1, 2, 3]).set());
        assert!(b.terms().all(|(_, c)| c.is_one()));
        assert_eq!(b.len(), 3);
    }

    #[test]
    fn display_uses_labels() {
        let labels: Vec<String> = ["x", "y", "z"].iter().map(|s| s.to_string()).collect();
        let b = e(&[1, 2, 3]).boundary();
        assert_eq!(
            b.display_with(&labels).to_string(),
            "e_{x,y} - e_{x,z} + e_{y,z}"
        );
        assert_eq!(ExtElement::zero(Domain::Integer).to_string(), "0");
    }
}
