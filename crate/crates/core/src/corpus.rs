//! Named test matroids: uniform matroids, small graphic matroids, the
//! arrangement `xyzt(x+y+z+t)(x−y−z+t) = 0`, and two non-graphic rank-3
//! configurations kept apart as [`extras`].

use crate::matroid::{Arrangement, Graph, Matroid};

#[derive(Clone, Debug)]
pub struct CorpusEntry {
    pub name: &'static str,
    pub matroid: Matroid,
    /// The graph, for graphic entries.
    pub graph: Option<Graph>,
}

impl CorpusEntry {
    fn plain(name: &'static str, matroid: Matroid) -> Self {
        CorpusEntry {
            name,
            matroid,
            graph: None,
        }
    }

    fn graphic(name: &'static str, graph: Graph) -> Self {
        let matroid = Matroid::from_graph(graph.vertices(), graph.edges()).expect("simple graph");
        CorpusEntry {
            name,
            matroid,
            graph: Some(graph),
        }
    }
}

/// Normals of `x, y, z, t, x+y+z+t, x−y−z+t`.
pub fn worked_arrangement() -> Arrangement {
    Arrangement::from_integers(&[
        vec![1, 0, 0, 0],
        vec![0, 1, 0, 0],
        vec![0, 0, 1, 0],
        vec![0, 0, 0, 1],
        vec![1, 1, 1, 1],
        vec![1, -1, -1, 1],
    ])
    .expect("simple arrangement")
}

/// The matroid of [`worked_arrangement`] labelled `x y z t H P`.
pub fn worked_example() -> Matroid {
    Matroid::from_matrix(&worked_arrangement())
        .and_then(|m| m.with_labels(["x", "y", "z", "t", "H", "P"].map(String::from).to_vec()))
        .expect("valid example")
}

/// The seven nonzero 0/1 vectors of ℚ³ (non-Fano configuration).
pub fn non_fano() -> Matroid {
    Matroid::from_matrix(
        &Arrangement::from_integers(&[
            vec![1, 0, 0],
            vec![0, 1, 0],
            vec![0, 0, 1],
            vec![1, 1, 0],
            vec![1, 0, 1],
            vec![0, 1, 1],
            vec![1, 1, 1],
        ])
        .expect("simple"),
    )
    .expect("matroid")
}

/// `e₁, e₂, e₃, e₁+e₂, e₁+e₃, e₂+e₃`: three three-point lines meeting pairwise
/// (the rank-3 whirl).
pub fn whirl3() -> Matroid {
    Matroid::from_matrix(
        &Arrangement::from_integers(&[
            vec![1, 0, 0],
            vec![0, 1, 0],
            vec![0, 0, 1],
            vec![1, 1, 0],
            vec![1, 0, 1],
            vec![0, 1, 1],
        ])
        .expect("simple"),
    )
    .expect("matroid")
}

/// A 5-cycle `0-1-2-3-4-0` with the given chords added.
pub fn five_cycle_with_chords(chords: &[(usize, usize)]) -> Graph {
    let mut edges = vec![(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)];
    edges.extend_from_slice(chords);
    Graph::new(5, edges).expect("simple graph")
}

/// The wheel with four spokes: hub 4 over the square `0-1-2-3`.
pub fn wheel4() -> Graph {
    Graph::new(
        5,
        vec![
            (0, 1),
            (1, 2),
            (2, 3),
            (3, 0),
            (0, 4),
            (1, 4),
            (2, 4),
            (3, 4),
        ],
    )
    .expect("simple graph")
}

pub fn k33() -> Graph {
    let edges = (0..3).flat_map(|u| (3..6).map(move |v| (u, v))).collect();
    Graph::new(6, edges).expect("simple graph")
}

fn uniform(r: usize, n: usize) -> Matroid {
    Matroid::uniform(r, n).expect("simple uniform matroid")
}

/// Instances with at most six elements.
pub fn small() -> Vec<CorpusEntry> {
    vec![
        CorpusEntry::plain("U(2,3)", uniform(2, 3)),
        CorpusEntry::plain("U(3,4)", uniform(3, 4)),
        CorpusEntry::plain("U(3,5)", uniform(3, 5)),
        CorpusEntry::plain("U(4,6)", uniform(4, 6)),
        CorpusEntry::graphic("K4", Graph::complete(4)),
        CorpusEntry::plain("xyzt(x+y+z+t)(x-y-z+t)", worked_example()),
    ]
}

/// Instances with seven to nine elements.
pub fn medium() -> Vec<CorpusEntry> {
    vec![
        CorpusEntry::plain("U(3,7)", uniform(3, 7)),
        CorpusEntry::graphic(
            "C5+chords(0-2,0-3)",
            five_cycle_with_chords(&[(0, 2), (0, 3)]),
        ),
        CorpusEntry::graphic("W4", wheel4()),
        CorpusEntry::graphic("K3,3", k33()),
    ]
}

/// The 5-cycle with increasingly many chords.
pub fn five_cycle_family() -> Vec<CorpusEntry> {
    vec![
        CorpusEntry::graphic("C5", five_cycle_with_chords(&[])),
        CorpusEntry::graphic("C5+chord(0-2)", five_cycle_with_chords(&[(0, 2)])),
        CorpusEntry::graphic(
            "C5+chords(0-2,0-3)",
            five_cycle_with_chords(&[(0, 2), (0, 3)]),
        ),
        CorpusEntry::graphic(
            "C5+chords(0-2,1-3)",
            five_cycle_with_chords(&[(0, 2), (1, 3)]),
        ),
        CorpusEntry::graphic(
            "C5+chords(0-2,0-3,1-3)",
            five_cycle_with_chords(&[(0, 2), (0, 3), (1, 3)]),
        ),
    ]
}

/// Non-graphic, non-uniform rank-3 configurations. In both, the least number
/// of degree-3 Forge circuits over all orders is 2 while `dim (I/Λ⁺I)³ = 1`.
pub fn extras() -> Vec<CorpusEntry> {
    vec![
        CorpusEntry::plain("whirl W3", whirl3()),
        CorpusEntry::plain("non-Fano", non_fano()),
    ]
}

/// Every corpus instance: small, medium, and the 5-cycle family.
pub fn all() -> Vec<CorpusEntry> {
    let mut out = small();
    out.extend(medium());
    for e in five_cycle_family() {
        if !out.iter().any(|o| o.name == e.name) {
            out.push(e);
        }
    }
    out
}
