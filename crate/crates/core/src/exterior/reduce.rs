use crate::error::{Error, Result};

use super::{Coefficient, ExtElement, Monomial, VariableOrder};

/// Largest monomial of `supp(f)` under the order.
pub fn initial_monomial(order: &VariableOrder, f: &ExtElement) -> Result<Monomial> {
    f.support()
        .max_by_key(|&m| order.key(m))
        .ok_or(Error::EmptyElement)
}

/// Initial monomial together with its coefficient.
pub fn leading_term<'a>(
    order: &VariableOrder,
    f: &'a ExtElement,
) -> Result<(Monomial, &'a Coefficient)> {
    let m = initial_monomial(order, f)?;
    Ok((
        m,
        f.coefficient(m)
            .expect("initial monomial is in the support"),
    ))
}

/// Scales `f` so its leading coefficient is 1.
pub fn make_monic(order: &VariableOrder, f: &ExtElement) -> Result<ExtElement> {
    let (_, lead) = leading_term(order, f)?;
    let inv = lead
        .inverse()
        .ok_or_else(|| Error::NonInvertibleLead(lead.to_string(), f.domain()))?;
    f.scale(&inv)
}

/// Fully reduces `f` modulo `divisors`.
///
/// At every step the largest term of the remainder divisible by some initial
/// monomial is cancelled, using the first such divisor in list order. Over the
/// integers the divisors must have unit leading coefficients.
pub fn normal_form(
    f: &ExtElement,
    divisors: &[ExtElement],
    order: &VariableOrder,
) -> Result<ExtElement> {
    let domain = f.domain();
    let mut leads = Vec::with_capacity(divisors.len());
    for g in divisors {
        if g.domain() != domain {
            return Err(Error::DomainMismatch(domain, g.domain()));
        }
        let (m, c) = leading_term(order, g)?;
        let inv = c
            .inverse()
            .ok_or_else(|| Error::NonInvertibleLead(c.to_string(), domain))?;
        leads.push((m, inv));
    }

    let mut r = f.clone();
    loop {
        // Largest reducible term, with its first applicable divisor.
        let mut best: Option<((usize, u64), Monomial, usize)> = None;
        for t in r.support() {
            let key = order.key(t);
            if best.as_ref().is_some_and(|(k, _, _)| *k >= key) {
                continue;
            }
            if let Some(idx) = leads.iter().position(|(lm, _)| lm.divides(t)) {
                best = Some((key, t, idx));
            }
        }
        let Some((_, t, idx)) = best else {
            return Ok(r);
        };
        let (lm, inv) = &leads[idx];
        let cofactor = Monomial::new(t.set().difference(lm.set()));
        let (sign, _) = cofactor.wedge(*lm).expect("disjoint by construction");
        // e_S ∧ g has leading term sign·lc(g)·e_T; cancel c·e_T.
        let mut factor = r.coefficient(t).expect("term in support").mul(inv);
        if sign > 0 {
            factor = factor.neg();
        }
        let correction = divisors[idx].left_multiply(&factor, cofactor);
        r = r.add(&correction)?;
    }
}
