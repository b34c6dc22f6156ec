//! Searching variable orders for small Forge bases.
//!
//! Orders are scored independently, possibly in parallel, and reduced by
//! `(score, lexicographically least order)` so results never depend on
//! scheduling.

use std::collections::BTreeMap;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exterior::{Domain, VariableOrder};
use crate::matroid::Matroid;
use crate::osideal::graded_dims;

/// Largest ground set searched exhaustively (8! = 40320 orders).
pub const EXHAUSTIVE_LIMIT: usize = 8;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum Strategy {
    Exhaustive,
    Random { seed: u64, samples: usize },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Objective {
    /// `|𝒞^π_{q+1}(M)|` for the given `q`.
    Degree(usize),
    /// `|𝒞^π(M)|`, the size of the reduced Gröbner basis.
    Total,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchResult {
    pub objective: Objective,
    pub best_order: VariableOrder,
    pub best_count: usize,
    pub orders_examined: usize,
    pub strategy: Strategy,
    /// Number of examined orders achieving each count.
    pub histogram: BTreeMap<usize, usize>,
}

impl SearchResult {
    pub fn degree(&self) -> Option<usize> {
        match self.objective {
            Objective::Degree(q) => Some(q),
            Objective::Total => None,
        }
    }

    /// Smallest count seen, from the histogram.
    pub fn min_examined(&self) -> Option<usize> {
        self.histogram.keys().next().copied()
    }
}

fn factorial(n: usize) -> usize {
    (1..=n).product()
}

/// The `index`-th permutation of `0..n` in lexicographic order.
fn nth_permutation(n: usize, mut index: usize) -> Vec<usize> {
    let mut pool: Vec<usize> = (0..n).collect();
    let mut out = Vec::with_capacity(n);
    for k in (0..n).rev() {
        let f = factorial(k);
        out.push(pool.remove(index / f));
        index %= f;
    }
    out
}

fn orders_for(n: usize, strategy: Strategy) -> Result<Vec<VariableOrder>> {
    match strategy {
        Strategy::Exhaustive => {
            if n > EXHAUSTIVE_LIMIT {
                return Err(Error::SearchTooLarge {
                    n,
                    max: EXHAUSTIVE_LIMIT,
                });
            }
            Ok((0..factorial(n))
                .map(|i| VariableOrder::from_sequence(nth_permutation(n, i)).expect("permutation"))
                .collect())
        }
        Strategy::Random { seed, samples } => {
            if samples == 0 {
                return Err(Error::InvalidStrategy(
                    "sample count must be positive".into(),
                ));
            }
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            Ok((0..samples)
                .map(|_| {
                    let mut seq: Vec<usize> = (0..n).collect();
                    seq.shuffle(&mut rng);
                    VariableOrder::from_sequence(seq).expect("permutation")
                })
                .collect())
        }
    }
}

fn run<S>(m: &Matroid, strategy: Strategy, objective: Objective, score: S) -> Result<SearchResult>
where
    S: Fn(&VariableOrder) -> usize + Sync,
{
    let orders = orders_for(m.n(), strategy)?;
    let scored: Vec<usize> = orders.par_iter().map(&score).collect();
    let mut histogram = BTreeMap::new();
    for &s in &scored {
        *histogram.entry(s).or_insert(0) += 1;
    }
    let (best_count, best_order) = scored
        .iter()
        .zip(&orders)
        .min_by(|a, b| {
            a.0.cmp(b.0)
                .then_with(|| a.1.sequence().cmp(b.1.sequence()))
        })
        .map(|(s, o)| (*s, o.clone()))
        .expect("at least one order");
    Ok(SearchResult {
        objective,
        best_order,
        best_count,
        orders_examined: orders.len(),
        strategy,
        histogram,
    })
}

/// Order minimising `|𝒞^π_{q+1}(M)|`.
pub fn minimize_forge_count(m: &Matroid, q: usize, strategy: Strategy) -> Result<SearchResult> {
    run(m, strategy, Objective::Degree(q), |o| {
        m.forge_circuits(o)
            .iter()
            .filter(|c| c.len() == q + 1)
            .count()
    })
}

/// Order minimising the size of the reduced Gröbner basis.
pub fn minimize_total_gb_size(m: &Matroid, strategy: Strategy) -> Result<SearchResult> {
    run(m, strategy, Objective::Total, |o| m.forge_circuits(o).len())
}

/// Outcome of checking that the minimum Forge count in degree `q` equals
/// `dim (I/Λ⁺I)^q` over each field.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PropositionCheck {
    pub degree: usize,
    pub search: SearchResult,
    pub field_dims: Vec<(Domain, usize)>,
}

impl PropositionCheck {
    /// The minimum equals every field dimension.
    pub fn minimum_attains_dimension(&self) -> bool {
        self.field_dims
            .iter()
            .all(|&(_, d)| d == self.search.best_count)
    }

    /// No examined order undercuts any field dimension.
    pub fn lower_bound_holds(&self) -> bool {
        let min = self.search.min_examined().unwrap_or(0);
        self.field_dims.iter().all(|&(_, d)| min >= d)
    }

    pub fn holds(&self) -> bool {
        self.minimum_attains_dimension() && self.lower_bound_holds()
    }
}

pub fn check_proposition(m: &Matroid, q: usize, fields: &[Domain]) -> Result<PropositionCheck> {
    let search = minimize_forge_count(m, q, Strategy::Exhaustive)?;
    let field_dims = fields
        .iter()
        .map(|&f| {
            let dims = graded_dims(m, f, Some(q.min(m.n())))?;
            Ok((f, dims.degree(q).map_or(0, |d| d.quotient)))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(PropositionCheck {
        degree: q,
        search,
        field_dims,
    })
}

/// Exhaustively checks that the least `|𝒞^π_{q+1}(M)|` equals
/// `dim (I/Λ⁺I)^q` over every field in `fields`, and that no order goes below it.
pub fn verify_proposition(m: &Matroid, q: usize, fields: &[Domain]) -> Result<bool> {
    Ok(check_proposition(m, q, fields)?.holds())
}

/// Per-degree minima and whether one order reaches all of them at once.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JointMinimum {
    pub per_degree: BTreeMap<usize, usize>,
    pub attained_by: Option<VariableOrder>,
}

pub fn joint_minimum(m: &Matroid, strategy: Strategy) -> Result<JointMinimum> {
    let orders = orders_for(m.n(), strategy)?;
    let censuses: Vec<BTreeMap<usize, usize>> = orders
        .par_iter()
        .map(|o| {
            let mut census = BTreeMap::new();
            for c in m.forge_circuits(o) {
                *census.entry(c.len() - 1).or_insert(0usize) += 1;
            }
            census
        })
        .collect();
    let degrees: Vec<usize> = m.circuits().iter().map(|c| c.len() - 1).collect();
    let mut per_degree = BTreeMap::new();
    for &q in &degrees {
        let min = censuses
            .iter()
            .map(|c| c.get(&q).copied().unwrap_or(0))
            .min()
            .unwrap_or(0);
        per_degree.insert(q, min);
    }
    let attained_by = censuses
        .iter()
        .zip(&orders)
        .filter(|(c, _)| {
            per_degree
                .iter()
                .all(|(q, min)| c.get(q).copied().unwrap_or(0) == *min)
        })
        .map(|(_, o)| o)
        .min_by(|a, b| a.sequence().cmp(b.sequence()))
        .cloned();
    Ok(JointMinimum {
        per_degree,
        attained_by,
    })
}
