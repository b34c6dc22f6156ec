use std::collections::BTreeSet;

use crate::bitset::{ElementSet, MAX_ELEMENTS};
use crate::error::{Error, Result};

use super::Matroid;

/// A simple undirected graph; edge `i` becomes ground element `i` of the cycle matroid.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    vertices: usize,
    edges: Vec<(usize, usize)>,
}

impl Graph {
    /// Vertices are `0..vertices`. Loops and repeated edges are rejected.
    pub fn new(vertices: usize, edges: Vec<(usize, usize)>) -> Result<Graph> {
        if edges.len() > MAX_ELEMENTS {
            return Err(Error::TooManyElements {
                n: edges.len(),
                max: MAX_ELEMENTS,
            });
        }
        let mut seen = BTreeSet::new();
        for (i, &(u, v)) in edges.iter().enumerate() {
            if u >= vertices || v >= vertices {
                return Err(Error::ElementOutOfRange {
                    element: u.max(v) + 1,
                    n: vertices,
                });
            }
            if u == v {
                return Err(Error::NonSimple(format!("edge {} is a loop", i + 1)));
            }
            if !seen.insert((u.min(v), u.max(v))) {
                return Err(Error::NonSimple(format!(
                    "edge {} repeats an earlier edge",
                    i + 1
                )));
            }
        }
        Ok(Graph { vertices, edges })
    }

    pub fn complete(k: usize) -> Graph {
        let edges = (0..k)
            .flat_map(|u| (u + 1..k).map(move |v| (u, v)))
            .collect();
        Graph::new(k, edges).expect("complete graph is simple")
    }

    pub fn vertices(&self) -> usize {
        self.vertices
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    fn adjacency(&self) -> Vec<Vec<(usize, usize)>> {
        let mut adj = vec![Vec::new(); self.vertices];
        for (e, &(u, v)) in self.edges.iter().enumerate() {
            adj[u].push((v, e));
            adj[v].push((u, e));
        }
        adj
    }

    /// Edge sets of all simple cycles.
    pub fn cycles(&self) -> Vec<ElementSet> {
        let adj = self.adjacency();
        let mut found = BTreeSet::new();
        let mut on_path = vec![false; self.vertices];
        for start in 0..self.vertices {
            on_path[start] = true;
            extend_path(
                &adj,
                start,
                start,
                0,
                ElementSet::EMPTY,
                &mut on_path,
                &mut found,
            );
            on_path[start] = false;
        }
        let mut cycles: Vec<ElementSet> = found.into_iter().collect();
        cycles.sort_by(|a, b| a.cmp_len_lex(b));
        cycles
    }

    /// Cycles whose vertex set induces no further edge.
    pub fn chordless_cycles(&self) -> Vec<ElementSet> {
        self.cycles()
            .into_iter()
            .filter(|c| {
                let mut verts = 0u64;
                for e in c.iter() {
                    let (u, v) = self.edges[e];
                    verts |= 1 << u | 1 << v;
                }
                let induced = self
                    .edges
                    .iter()
                    .filter(|(u, v)| verts >> u & 1 == 1 && verts >> v & 1 == 1)
                    .count();
                induced == c.len()
            })
            .collect()
    }

    pub(crate) fn matroid(&self) -> Result<Matroid> {
        Ok(Matroid::from_complete_circuits(
            self.edges.len(),
            self.cycles(),
        ))
    }
}

// Depth-first extension of a path start → … → at, using only vertices above `start`
// so each cycle is rooted at its smallest vertex.
fn extend_path(
    adj: &[Vec<(usize, usize)>],
    start: usize,
    at: usize,
    length: usize,
    used: ElementSet,
    on_path: &mut [bool],
    found: &mut BTreeSet<ElementSet>,
) {
    for &(next, e) in &adj[at] {
        if next == start && length >= 2 && !used.contains(e) {
            found.insert(used.with(e));
        } else if next > start && !on_path[next] {
            on_path[next] = true;
            extend_path(adj, start, next, length + 1, used.with(e), on_path, found);
            on_path[next] = false;
        }
    }
}
