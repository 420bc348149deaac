//! Helpers shared by the integration suites: independent brute-force
//! oracles, the named fixture corpus, and relabeling utilities.

use std::collections::BTreeSet;

use safecolor::generators::{
    complete_bipartite, complete_graph, cube_graph, disjoint_union, gen_double_windmill,
    petersen_graph, prism_graph,
};
use safecolor::{Coloring, Graph};

/// Exhaustive search for vertex-disjoint connected triplets centered exactly
/// at the given vertices. Independent of the cardinality tests: it tries
/// leaf pairs directly.
pub fn brute_force_centers(g: &Graph, centers: &[usize]) -> bool {
    fn rec(g: &Graph, centers: &[usize], used: &mut BTreeSet<usize>) -> bool {
        let Some((&center, rest)) = centers.split_first() else {
            return true;
        };
        let options: Vec<usize> = g.neighbors(center).filter(|v| !used.contains(v)).collect();
        for i in 0..options.len() {
            for j in (i + 1)..options.len() {
                used.insert(options[i]);
                used.insert(options[j]);
                if rec(g, rest, used) {
                    return true;
                }
                used.remove(&options[i]);
                used.remove(&options[j]);
            }
        }
        false
    }
    let mut used: BTreeSet<usize> = centers.iter().copied().collect();
    rec(g, centers, &mut used)
}

/// The named fixtures from the decision-procedure corpus.
pub fn fixtures() -> Vec<(&'static str, Graph)> {
    let k4 = complete_graph(4);
    vec![
        ("petersen", petersen_graph()),
        ("k9", complete_graph(9)),
        ("q3", cube_graph()),
        ("k33", complete_bipartite(3, 3)),
        ("prism", prism_graph()),
        ("two-k4", disjoint_union(&k4, &k4)),
        (
            "three-k4",
            disjoint_union(&disjoint_union(&k4, &k4), &k4),
        ),
        ("k4-k10", disjoint_union(&k4, &complete_graph(10))),
        ("windmill-4-adj", gen_double_windmill(4, true).unwrap()),
        ("windmill-4-nonadj", gen_double_windmill(4, false).unwrap()),
        ("windmill-5-adj", gen_double_windmill(5, true).unwrap()),
        ("windmill-5-nonadj", gen_double_windmill(5, false).unwrap()),
    ]
}

/// Applies the vertex permutation `old_to_new` to a graph and a coloring.
pub fn relabel(g: &Graph, c: &Coloring, old_to_new: &[usize]) -> (Graph, Coloring) {
    let n = g.n();
    let mut new_to_old = vec![0usize; n];
    for (old, &new) in old_to_new.iter().enumerate() {
        new_to_old[new] = old;
    }
    let h = Graph::from_edges(
        n,
        g.edges()
            .into_iter()
            .map(|(u, v)| (old_to_new[u], old_to_new[v])),
    )
    .expect("permutation preserves simplicity");
    (h, c.relabel_vertices(&new_to_old))
}

/// Brute-force graph isomorphism for small graphs: backtracking over
/// degree-compatible vertex mappings.
pub fn isomorphic(a: &Graph, b: &Graph) -> bool {
    let n = a.n();
    if n != b.n() || a.edge_count() != b.edge_count() {
        return false;
    }
    let mut deg_a: Vec<usize> = (0..n).map(|v| a.degree(v)).collect();
    let mut deg_b: Vec<usize> = (0..n).map(|v| b.degree(v)).collect();
    deg_a.sort_unstable();
    deg_b.sort_unstable();
    if deg_a != deg_b {
        return false;
    }

    fn extend(a: &Graph, b: &Graph, mapping: &mut Vec<usize>, used: &mut Vec<bool>) -> bool {
        let u = mapping.len();
        if u == a.n() {
            return true;
        }
        for candidate in 0..b.n() {
            if used[candidate] || a.degree(u) != b.degree(candidate) {
                continue;
            }
            let consistent = (0..u).all(|w| a.has_edge(u, w) == b.has_edge(candidate, mapping[w]));
            if !consistent {
                continue;
            }
            mapping.push(candidate);
            used[candidate] = true;
            if extend(a, b, mapping, used) {
                return true;
            }
            mapping.pop();
            used[candidate] = false;
        }
        false
    }
    extend(a, b, &mut Vec::new(), &mut vec![false; n])
}
