//! Independent connected triplets. A connected triplet is a vertex with two
//! of its neighbors (the closing triangle edge may or may not exist);
//! triplets are independent when they share no vertices. This module decides
//! whether chosen vertices can be the centers of independent triplets using
//! only neighborhood cardinalities, scans for center sets, and materializes
//! concrete disjoint triplets.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::Graph;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum TripletError {
    #[error("chosen vertices must be distinct")]
    NotDistinct,
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
}

/// The seven neighborhood cardinalities for a chosen vertex triple
/// `(a, b, c)`: `n_a` counts neighbors of `a` other than `b`, `c`; the joint
/// counts (`n_ab`, ..., `n_abc`) count common neighbors of the named
/// vertices, excluding all three chosen ones.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct NeighborhoodProfile {
    pub n_a: usize,
    pub n_b: usize,
    pub n_c: usize,
    pub n_ab: usize,
    pub n_ac: usize,
    pub n_bc: usize,
    pub n_abc: usize,
}

/// A connected triplet, stored center-first.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Triplet {
    pub center: usize,
    pub leaves: [usize; 2],
}

impl fmt::Display for Triplet {
    /// Renders as `(center: leaf, leaf)`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}: {}, {})", self.center, self.leaves[0], self.leaves[1])
    }
}

/// A list of pairwise vertex-disjoint connected triplets.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IndependentTriplets {
    pub triplets: Vec<Triplet>,
}

impl IndependentTriplets {
    /// Checks the defining invariants against a graph: every center adjacent
    /// to both of its leaves, and all involved vertices pairwise distinct.
    pub fn is_valid_for(&self, g: &Graph) -> bool {
        let mut seen = BTreeSet::new();
        for t in &self.triplets {
            for v in [t.center, t.leaves[0], t.leaves[1]] {
                if v >= g.n() || !seen.insert(v) {
                    return false;
                }
            }
            if !g.has_edge(t.center, t.leaves[0]) || !g.has_edge(t.center, t.leaves[1]) {
                return false;
            }
        }
        true
    }
}

/// The disjoint refinement of the neighborhoods of `(a, b, c)`: vertices
/// adjacent to exactly the named subset of the three, excluding the chosen
/// vertices themselves. Sorted ascending, so draws are deterministic.
struct NeighborClasses {
    only: [Vec<usize>; 3],
    pair: [Vec<usize>; 3], // indexed by the *excluded* vertex: [bc, ac, ab]
    all: Vec<usize>,
}

fn classify_neighbors(g: &Graph, a: usize, b: usize, c: usize) -> NeighborClasses {
    let chosen = [a, b, c];
    let mut classes = NeighborClasses {
        only: [Vec::new(), Vec::new(), Vec::new()],
        pair: [Vec::new(), Vec::new(), Vec::new()],
        all: Vec::new(),
    };
    let mut candidates: BTreeSet<usize> = BTreeSet::new();
    for &v in &chosen {
        candidates.extend(g.neighbors(v));
    }
    for v in candidates {
        if chosen.contains(&v) {
            continue;
        }
        let mask: usize = (0..3).filter(|&i| g.has_edge(v, chosen[i])).fold(0, |m, i| m | (1 << i));
        match mask {
            0b001 => classes.only[0].push(v),
            0b010 => classes.only[1].push(v),
            0b100 => classes.only[2].push(v),
            0b011 => classes.pair[2].push(v), // adjacent to a,b => excluded vertex c
            0b101 => classes.pair[1].push(v), // a,c => excluded b
            0b110 => classes.pair[0].push(v), // b,c => excluded a
            0b111 => classes.all.push(v),
            _ => unreachable!("v came from some neighborhood"),
        }
    }
    classes
}

/// Computes the seven-cardinality profile for distinct vertices `a, b, c`.
pub fn neighborhood_profile(
    g: &Graph,
    a: usize,
    b: usize,
    c: usize,
) -> Result<NeighborhoodProfile, TripletError> {
    let n = g.n();
    for v in [a, b, c] {
        if v >= n {
            return Err(TripletError::VertexOutOfRange { vertex: v, n });
        }
    }
    if a == b || a == c || b == c {
        return Err(TripletError::NotDistinct);
    }
    let classes = classify_neighbors(g, a, b, c);
    let [oa, ob, oc] = &classes.only;
    let [p_bc, p_ac, p_ab] = &classes.pair;
    let all = classes.all.len();
    Ok(NeighborhoodProfile {
        n_a: oa.len() + p_ab.len() + p_ac.len() + all,
        n_b: ob.len() + p_ab.len() + p_bc.len() + all,
        n_c: oc.len() + p_ac.len() + p_bc.len() + all,
        n_ab: p_ab.len() + all,
        n_ac: p_ac.len() + all,
        n_bc: p_bc.len() + all,
        n_abc: all,
    })
}

/// The cardinality test: `a`, `b`, `c` can be the centers of three
/// independent triplets iff all five inequalities hold.
pub fn three_centers_test(p: &NeighborhoodProfile) -> bool {
    p.n_a >= 2
        && p.n_b >= 2
        && p.n_c >= 2
        && p.n_a + p.n_b >= p.n_ab + 4
        && p.n_a + p.n_c >= p.n_ac + 4
        && p.n_b + p.n_c >= p.n_bc + 4
        && p.n_a + p.n_b + p.n_c + p.n_abc >= p.n_ab + p.n_ac + p.n_bc + 6
}

/// The two-vertex analogue: `a` and `b` are centers of two independent
/// triplets iff both have two usable neighbors and the union of their
/// neighborhoods (minus each other) has at least four vertices.
pub fn two_centers_test(g: &Graph, a: usize, b: usize) -> bool {
    assert!(a != b, "centers must be distinct");
    let sa: BTreeSet<usize> = g.neighbors(a).filter(|&v| v != b).collect();
    let sb: BTreeSet<usize> = g.neighbors(b).filter(|&v| v != a).collect();
    let shared = sa.intersection(&sb).count();
    sa.len() >= 2 && sb.len() >= 2 && sa.len() + sb.len() >= shared + 4
}

/// Demand split of one center's two leaves across its compatible classes.
/// There are ten ways to spread 2 over 4 classes.
const SPLITS4: [[usize; 4]; 10] = [
    [2, 0, 0, 0],
    [1, 1, 0, 0],
    [1, 0, 1, 0],
    [1, 0, 0, 1],
    [0, 2, 0, 0],
    [0, 1, 1, 0],
    [0, 1, 0, 1],
    [0, 0, 2, 0],
    [0, 0, 1, 1],
    [0, 0, 0, 2],
];

/// Materializes three disjoint triplets centered at `(a, b, c)`, assuming the
/// cardinality test passed. Leaves are drawn greedily from the disjoint
/// neighbor classes once a feasible per-class demand split is found; since
/// vertices within a class are interchangeable, feasibility depends only on
/// the counts, and the test passing guarantees a feasible split exists.
fn materialize_three(g: &Graph, a: usize, b: usize, c: usize) -> Option<IndependentTriplets> {
    let classes = classify_neighbors(g, a, b, c);
    let [oa, ob, oc] = &classes.only;
    let [p_bc, p_ac, p_ab] = &classes.pair;
    let all = &classes.all;
    // Compatible classes per center, in draw order.
    let class_sizes = [
        [oa.len(), p_ab.len(), p_ac.len(), all.len()],
        [ob.len(), p_ab.len(), p_bc.len(), all.len()],
        [oc.len(), p_ac.len(), p_bc.len(), all.len()],
    ];
    // Class ids shared between centers: only_x=0/1/2, ab=3, ac=4, bc=5, abc=6.
    let class_ids = [[0usize, 3, 4, 6], [1, 3, 5, 6], [2, 4, 5, 6]];

    for sa in SPLITS4 {
        if sa.iter().zip(class_sizes[0]).any(|(&d, s)| d > s) {
            continue;
        }
        for sb in SPLITS4 {
            if sb.iter().zip(class_sizes[1]).any(|(&d, s)| d > s) {
                continue;
            }
            for sc in SPLITS4 {
                if sc.iter().zip(class_sizes[2]).any(|(&d, s)| d > s) {
                    continue;
                }
                let mut demand = [0usize; 7];
                for (split, ids) in [(sa, class_ids[0]), (sb, class_ids[1]), (sc, class_ids[2])]
                {
                    for (d, id) in split.iter().zip(ids) {
                        demand[id] += d;
                    }
                }
                let supply = [
                    oa.len(),
                    ob.len(),
                    oc.len(),
                    p_ab.len(),
                    p_ac.len(),
                    p_bc.len(),
                    all.len(),
                ];
                if demand.iter().zip(supply).any(|(&d, s)| d > s) {
                    continue;
                }
                // Feasible: hand out lowest ids per class, center a first.
                let pools: [&Vec<usize>; 7] = [oa, ob, oc, p_ab, p_ac, p_bc, all];
                let mut cursor = [0usize; 7];
                let mut draw = |split: [usize; 4], ids: [usize; 4]| -> [usize; 2] {
                    let mut leaves = Vec::with_capacity(2);
                    for (d, id) in split.iter().zip(ids) {
                        for _ in 0..*d {
                            leaves.push(pools[id][cursor[id]]);
                            cursor[id] += 1;
                        }
                    }
                    [leaves[0], leaves[1]]
                };
                let triplets = IndependentTriplets {
                    triplets: vec![
                        Triplet { center: a, leaves: draw(sa, class_ids[0]) },
                        Triplet { center: b, leaves: draw(sb, class_ids[1]) },
                        Triplet { center: c, leaves: draw(sc, class_ids[2]) },
                    ],
                };
                debug_assert!(triplets.is_valid_for(g));
                return Some(triplets);
            }
        }
    }
    None
}

/// Same for two centers, over the three classes only-a / only-b / shared.
fn materialize_two(g: &Graph, a: usize, b: usize) -> Option<IndependentTriplets> {
    let sa: Vec<usize> = g.neighbors(a).filter(|&v| v != b).collect();
    let sb: Vec<usize> = g.neighbors(b).filter(|&v| v != a).collect();
    let shared: Vec<usize> = sa.iter().copied().filter(|v| sb.contains(v)).collect();
    let only_a: Vec<usize> = sa.iter().copied().filter(|v| !shared.contains(v)).collect();
    let only_b: Vec<usize> = sb.iter().copied().filter(|v| !shared.contains(v)).collect();

    const SPLITS2: [[usize; 2]; 3] = [[2, 0], [1, 1], [0, 2]];
    for da in SPLITS2 {
        if da[0] > only_a.len() || da[1] > shared.len() {
            continue;
        }
        for db in SPLITS2 {
            if db[0] > only_b.len() || da[1] + db[1] > shared.len() {
                continue;
            }
            let pools = [&only_a, &only_b, &shared];
            let mut cursor = [0usize; 3];
            let mut draw = |split: [usize; 2], ids: [usize; 2]| -> [usize; 2] {
                let mut leaves = Vec::with_capacity(2);
                for (d, id) in split.iter().zip(ids) {
                    for _ in 0..*d {
                        leaves.push(pools[id][cursor[id]]);
                        cursor[id] += 1;
                    }
                }
                [leaves[0], leaves[1]]
            };
            let triplets = IndependentTriplets {
                triplets: vec![
                    Triplet { center: a, leaves: draw(da, [0, 2]) },
                    Triplet { center: b, leaves: draw(db, [1, 2]) },
                ],
            };
            debug_assert!(triplets.is_valid_for(g));
            return Some(triplets);
        }
    }
    None
}

/// Scans vertex triples in lexicographic order for the first passing the
/// three-centers test and returns materialized disjoint triplets; `None`
/// when no triple passes. Runs in O(n^4): O(n^3) triples, O(n) each.
pub fn find_three_independent_triplets(g: &Graph) -> Option<IndependentTriplets> {
    let n = g.n();
    for a in 0..n {
        for b in (a + 1)..n {
            for c in (b + 1)..n {
                let p = neighborhood_profile(g, a, b, c).expect("distinct in-range vertices");
                if three_centers_test(&p) {
                    let found = materialize_three(g, a, b, c)
                        .expect("cardinality test passed, so an assignment exists");
                    return Some(found);
                }
            }
        }
    }
    None
}

/// Scans vertex pairs in lexicographic order for the first passing the
/// two-centers test and returns materialized disjoint triplets.
pub fn find_two_independent_triplets(g: &Graph) -> Option<IndependentTriplets> {
    let n = g.n();
    for a in 0..n {
        for b in (a + 1)..n {
            if two_centers_test(g, a, b) {
                let found = materialize_two(g, a, b)
                    .expect("cardinality test passed, so an assignment exists");
                return Some(found);
            }
        }
    }
    None
}
