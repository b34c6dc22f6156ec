//! Simple matroids presented by their circuits.
//!
//! A [`Matroid`] can be built from an explicit circuit list, from the normals of
//! a hyperplane arrangement, or from a simple graph. Every other oracle (rank,
//! closure, activity, Forge's circuit selection) is derived from the circuits.

mod arrangement;
mod graph;

use std::collections::BTreeMap;

use serde::Serialize;

use crate::bitset::{ElementSet, MAX_ELEMENTS};
use crate::error::{Error, Result};
use crate::exterior::VariableOrder;

pub use arrangement::Arrangement;
pub use graph::Graph;

pub type Circuit = ElementSet;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matroid {
    n: usize,
    circuits: Vec<Circuit>,
    labels: Vec<String>,
    rank: usize,
}

/// Circuit counts keyed by circuit length.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CircuitCensus(pub BTreeMap<usize, usize>);

impl Matroid {
    /// Validates and wraps a circuit list.
    ///
    /// Checks that every circuit lies in the ground set with at least three
    /// elements, that no circuit contains another, and that circuit elimination
    /// holds for every pair: `(C₁ ∪ C₂) ∖ e` contains a listed circuit for each
    /// `e ∈ C₁ ∩ C₂`.
    pub fn from_circuits(n: usize, circuits: Vec<Circuit>) -> Result<Matroid> {
        if n > MAX_ELEMENTS {
            return Err(Error::TooManyElements {
                n,
                max: MAX_ELEMENTS,
            });
        }
        let ground = ElementSet::full(n);
        let mut circuits = circuits;
        circuits.sort_by(|a, b| a.cmp_len_lex(b));
        circuits.dedup();
        for c in &circuits {
            if let Some(bad) = c.difference(ground).first() {
                return Err(Error::ElementOutOfRange { element: bad, n });
            }
            if c.len() < 3 {
                return Err(Error::NonSimple(format!(
                    "circuit {:?} has fewer than 3 elements",
                    one_based(*c)
                )));
            }
        }
        for (i, a) in circuits.iter().enumerate() {
            for b in &circuits[i + 1..] {
                if a.is_subset(*b) || b.is_subset(*a) {
                    return Err(Error::AntichainViolation(one_based(*a), one_based(*b)));
                }
            }
        }
        for (i, &a) in circuits.iter().enumerate() {
            for &b in &circuits[i + 1..] {
                let union = a.union(b);
                for e in a.intersection(b).iter() {
                    let rest = union.without(e);
                    if !circuits.iter().any(|c| c.is_subset(rest)) {
                        return Err(Error::IncompleteCircuits {
                            first: one_based(a),
                            second: one_based(b),
                            element: e + 1,
                        });
                    }
                }
            }
        }
        Ok(Self::from_complete_circuits(n, circuits))
    }

    /// Trusted constructor for circuit lists that are complete by construction.
    pub(crate) fn from_complete_circuits(n: usize, mut circuits: Vec<Circuit>) -> Matroid {
        circuits.sort_by(|a, b| a.cmp_len_lex(b));
        circuits.dedup();
        let mut m = Matroid {
            n,
            circuits,
            labels: (1..=n).map(|i| i.to_string()).collect(),
            rank: 0,
        };
        m.rank = m.rank_of(ElementSet::full(n));
        m
    }

    /// The free matroid on `n` elements.
    pub fn free(n: usize) -> Matroid {
        Self::from_complete_circuits(n, Vec::new())
    }

    /// The uniform matroid `U_{r,n}`: circuits are all `(r+1)`-subsets.
    pub fn uniform(r: usize, n: usize) -> Result<Matroid> {
        if r < 2 && r < n {
            return Err(Error::NonSimple(format!(
                "U_{{{r},{n}}} has loops or parallel pairs"
            )));
        }
        let circuits = if r >= n {
            Vec::new()
        } else {
            ElementSet::subsets_of_size(n, r + 1).collect()
        };
        Ok(Self::from_complete_circuits(n, circuits))
    }

    pub fn from_matrix(arrangement: &Arrangement) -> Result<Matroid> {
        arrangement.matroid()
    }

    pub fn from_graph(vertices: usize, edges: &[(usize, usize)]) -> Result<Matroid> {
        Graph::new(vertices, edges.to_vec())?.matroid()
    }

    /// Replaces display labels; there must be one per element, all distinct.
    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Matroid> {
        if labels.len() != self.n {
            return Err(Error::InvalidOrder(format!(
                "expected {} labels, got {}",
                self.n,
                labels.len()
            )));
        }
        let mut sorted = labels.clone();
        sorted.sort();
        sorted.dedup();
        if sorted.len() != labels.len() || labels.iter().any(|l| l.is_empty()) {
            return Err(Error::InvalidOrder(format!(
                "labels must be distinct: {labels:?}"
            )));
        }
        self.labels = labels;
        Ok(self)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn ground_set(&self) -> ElementSet {
        ElementSet::full(self.n)
    }

    /// Circuits sorted by length, then lexicographically.
    pub fn circuits(&self) -> &[Circuit] {
        &self.circuits
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, e: usize) -> &str {
        &self.labels[e]
    }

    /// Looks up an element by its label.
    pub fn element(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    /// Parses a whitespace-separated list of labels into an order.
    pub fn parse_order(&self, text: &str) -> Result<VariableOrder> {
        let seq = text
            .split(|c: char| c.is_whitespace() || c == ',' || c == '<')
            .filter(|t| !t.is_empty())
            .map(|t| {
                self.element(t)
                    .ok_or_else(|| Error::InvalidOrder(format!("unknown element label {t:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        if seq.len() != self.n {
            return Err(Error::InvalidOrder(format!(
                "order lists {} elements, ground set has {}",
                seq.len(),
                self.n
            )));
        }
        VariableOrder::from_sequence(seq)
    }

    pub fn format_set(&self, s: ElementSet) -> String {
        let names: Vec<&str> = s.iter().map(|e| self.label(e)).collect();
        format!("({})", names.join(","))
    }

    /// Rank of the whole matroid.
    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn is_circuit(&self, s: ElementSet) -> bool {
        self.circuits
            .binary_search_by(|c| c.cmp_len_lex(&s))
            .is_ok()
    }

    pub fn is_independent(&self, s: ElementSet) -> bool {
        !self.circuits.iter().any(|c| c.is_subset(s))
    }

    /// Size of a maximal independent subset of `s`, grown greedily.
    pub fn rank_of(&self, s: ElementSet) -> usize {
        let mut basis = ElementSet::EMPTY;
        for e in s.iter() {
            let grown = basis.with(e);
            if self.is_independent(grown) {
                basis = grown;
            }
        }
        basis.len()
    }

    /// `{ i : rank(S ∪ i) = rank(S) }`.
    pub fn closure(&self, s: ElementSet) -> ElementSet {
        let r = self.rank_of(s);
        self.ground_set()
            .iter()
            .filter(|&i| s.contains(i) || self.rank_of(s.with(i)) == r)
            .collect()
    }

    pub fn circuit_census(&self) -> CircuitCensus {
        let mut census = BTreeMap::new();
        for c in &self.circuits {
            *census.entry(c.len()).or_insert(0) += 1;
        }
        CircuitCensus(census)
    }

    /// Elements `i` such that `I ∪ {i}` contains a circuit whose smallest element is `i`.
    pub fn active_elements(
        &self,
        independent: ElementSet,
        order: &VariableOrder,
    ) -> Result<ElementSet> {
        if !self.is_independent(independent) {
            return Err(Error::Dependent(one_based(independent)));
        }
        Ok(self.active_unchecked(independent, order))
    }

    fn active_unchecked(&self, independent: ElementSet, order: &VariableOrder) -> ElementSet {
        let mut active = ElementSet::EMPTY;
        for &c in &self.circuits {
            let outside = c.difference(independent);
            if outside.len() == 1 {
                let i = outside.first().expect("one element");
                if order.min_of(c) == Some(i) {
                    active = active.with(i);
                }
            }
        }
        active
    }

    /// `C ∖ inf(C)` under the order.
    pub fn broken_circuit(&self, c: Circuit, order: &VariableOrder) -> ElementSet {
        match order.min_of(c) {
            Some(m) => c.without(m),
            None => c,
        }
    }

    /// Smallest active element with respect to the broken circuit of `c`.
    pub fn alpha(&self, c: Circuit, order: &VariableOrder) -> Result<usize> {
        if !self.is_circuit(c) {
            return Err(Error::NotACircuit(one_based(c)));
        }
        Ok(self.alpha_unchecked(c, order))
    }

    fn alpha_unchecked(&self, c: Circuit, order: &VariableOrder) -> usize {
        let active = self.active_unchecked(self.broken_circuit(c, order), order);
        order
            .min_of(active)
            .expect("the minimum of a circuit is active for its broken circuit")
    }

    /// The circuits whose boundaries form Forge's reduced Gröbner basis for `order`.
    ///
    /// A circuit qualifies when (1) its minimum is the smallest element active
    /// for its broken circuit, and (2) its broken circuit is inclusion-minimal
    /// among the broken circuits of circuits satisfying (1).
    pub fn forge_circuits(&self, order: &VariableOrder) -> Vec<Circuit> {
        let first: Vec<(Circuit, ElementSet)> = self
            .circuits
            .iter()
            .filter_map(|&c| {
                let inf = order.min_of(c)?;
                (self.alpha_unchecked(c, order) == inf).then(|| (c, c.without(inf)))
            })
            .collect();
        first
            .iter()
            .filter(|(_, bc)| {
                !first
                    .iter()
                    .any(|(_, other)| other != bc && other.is_subset(*bc))
            })
            .map(|(c, _)| *c)
            .collect()
    }

    /// Number of Forge circuits of each length.
    pub fn forge_census(&self, order: &VariableOrder) -> CircuitCensus {
        let mut census = BTreeMap::new();
        for c in self.forge_circuits(order) {
            *census.entry(c.len()).or_insert(0) += 1;
        }
        CircuitCensus(census)
    }

    /// All `degree`-subsets containing no broken circuit.
    pub fn nbc_sets(&self, order: &VariableOrder, degree: usize) -> Vec<ElementSet> {
        let broken: Vec<ElementSet> = self
            .circuits
            .iter()
            .map(|&c| self.broken_circuit(c, order))
            .collect();
        ElementSet::subsets_of_size(self.n, degree)
            .filter(|s| !broken.iter().any(|b| b.is_subset(*s)))
            .collect()
    }

    /// `min{|C| : |C| > 3} − 2`, the homotopy degree `p` of a hypersolvable,
    /// non-supersolvable arrangement. Whether the arrangement is of that kind is
    /// not checked.
    pub fn homotopy_degree(&self) -> Option<usize> {
        self.circuits
            .iter()
            .map(|c| c.len())
            .filter(|&l| l > 3)
            .min()
            .map(|l| l - 2)
    }
}

pub(crate) fn one_based(s: ElementSet) -> Vec<usize> {
    s.iter().map(|i| i + 1).collect()
}
