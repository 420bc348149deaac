//! Graph generators: double windmills, seeded random graphs with minimum
//! degree 3, and the named fixtures the test corpus leans on.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::graph::Graph;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum GenError {
    #[error("windmill needs at least one blade, got l = {l}")]
    BladeCountTooSmall { l: usize },
    #[error("random min-degree-3 graph needs n >= 4, got n = {n}")]
    TooFewVertices { n: usize },
    #[error("edge probability must lie in (0, 1), got {p}")]
    EdgeProbOutOfRange { p: f64 },
}

/// Builds a double windmill with `l` blades on `2l + 2` vertices. Vertices
/// 0 and 1 are the centers; blade `i` is the pair `(2i + 2, 2i + 3)`. Every
/// blade vertex is adjacent to its blade peer and to both centers; the
/// centers are adjacent to each other iff `centers_adjacent`.
pub fn gen_double_windmill(l: usize, centers_adjacent: bool) -> Result<Graph, GenError> {
    if l < 1 {
        return Err(GenError::BladeCountTooSmall { l });
    }
    let mut g = Graph::new(2 * l + 2);
    if centers_adjacent {
        g.add_edge(0, 1).unwrap();
    }
    for i in 0..l {
        let (a, b) = (2 * i + 2, 2 * i + 3);
        g.add_edge(a, b).unwrap();
        for center in [0, 1] {
            g.add_edge(center, a).unwrap();
            g.add_edge(center, b).unwrap();
        }
    }
    Ok(g)
}

/// Samples a simple graph on `n >= 4` vertices with each pair kept with
/// probability `edge_prob`, then repairs degree deficits so the result has
/// minimum degree at least 3. Deterministic for a given seed: the repair
/// walks vertices in ascending order and draws missing neighbors from the
/// seeded stream.
pub fn gen_random_min_deg3(n: usize, edge_prob: f64, seed: u64) -> Result<Graph, GenError> {
    if n < 4 {
        return Err(GenError::TooFewVertices { n });
    }
    if !(edge_prob > 0.0 && edge_prob < 1.0) {
        return Err(GenError::EdgeProbOutOfRange { p: edge_prob });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut g = Graph::new(n);
    for u in 0..n {
        for v in (u + 1)..n {
            if rng.random_bool(edge_prob) {
                g.add_edge(u, v).unwrap();
            }
        }
    }
    for v in 0..n {
        while g.degree(v) < 3 {
            let candidates: Vec<usize> =
                (0..n).filter(|&u| u != v && !g.has_edge(u, v)).collect();
            let pick = candidates[rng.random_range(0..candidates.len())];
            g.add_edge(v, pick).unwrap();
        }
    }
    Ok(g)
}

/// Complete graph on `n` vertices.
pub fn complete_graph(n: usize) -> Graph {
    let mut g = Graph::new(n);
    for u in 0..n {
        for v in (u + 1)..n {
            g.add_edge(u, v).unwrap();
        }
    }
    g
}

/// Complete bipartite graph with parts `0..a` and `a..a+b`.
pub fn complete_bipartite(a: usize, b: usize) -> Graph {
    let mut g = Graph::new(a + b);
    for u in 0..a {
        for v in a..(a + b) {
            g.add_edge(u, v).unwrap();
        }
    }
    g
}

/// Cycle on `n >= 3` vertices.
pub fn cycle_graph(n: usize) -> Graph {
    assert!(n >= 3, "cycle needs at least 3 vertices");
    Graph::from_edges(n, (0..n).map(|v| (v, (v + 1) % n))).unwrap()
}

/// Path on `n` vertices.
pub fn path_graph(n: usize) -> Graph {
    Graph::from_edges(n, (1..n).map(|v| (v - 1, v))).unwrap()
}

/// The Petersen graph in its standard labeling: outer cycle 0..5, inner
/// pentagram 5..10, spokes `i -- i+5`.
pub fn petersen_graph() -> Graph {
    let mut g = Graph::new(10);
    for i in 0..5 {
        g.add_edge(i, (i + 1) % 5).unwrap();
        g.add_edge(5 + i, 5 + (i + 2) % 5).unwrap();
        g.add_edge(i, i + 5).unwrap();
    }
    g
}

/// The 3-cube: vertices 0..8, edges between ids differing in one bit.
pub fn cube_graph() -> Graph {
    let mut g = Graph::new(8);
    for u in 0..8usize {
        for bit in 0..3 {
            let v = u ^ (1 << bit);
            if u < v {
                g.add_edge(u, v).unwrap();
            }
        }
    }
    g
}

/// The triangular prism: triangles (0,1,2) and (3,4,5) joined by a perfect
/// matching.
pub fn prism_graph() -> Graph {
    Graph::from_edges(
        6,
        [
            (0, 1),
            (1, 2),
            (2, 0),
            (3, 4),
            (4, 5),
            (5, 3),
            (0, 3),
            (1, 4),
            (2, 5),
        ],
    )
    .unwrap()
}

/// Disjoint union, with the second graph's ids shifted past the first's.
pub fn disjoint_union(a: &Graph, b: &Graph) -> Graph {
    let offset = a.n();
    let mut g = Graph::new(offset + b.n());
    for (u, v) in a.edges() {
        g.add_edge(u, v).unwrap();
    }
    for (u, v) in b.edges() {
        g.add_edge(u + offset, v + offset).unwrap();
    }
    g
}
