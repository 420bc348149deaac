//! The safety verifier. A coloring is `a`-safe when, for every vertex subset
//! `A` of size `a`, (1) the vertices of `A` do not jointly hold all `k`
//! colors, and (2) some connected component of the graph minus `A` still
//! carries all `k` colors.
//!
//! The sweep enumerates subsets in lexicographic order and reports the first
//! violating subset as a witness, so output is deterministic. For the safe
//! 3-coloring case (`a = 2`, `k = 3`) each pair costs one component scan that
//! touches every edge a constant number of times, giving the O(n^2 m) bound.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::coloring::Coloring;
use crate::graph::{Graph, VertexSet};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum VerifyError {
    #[error("coloring covers {coloring_n} vertices but the graph has {graph_n}")]
    SizeMismatch { graph_n: usize, coloring_n: usize },
    #[error("cannot remove {a} vertices from a graph on {n}")]
    TooManyAttackers { a: usize, n: usize },
}

/// Which defining condition a witness subset violates.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ViolatedCondition {
    /// The subset's own vertices carry every color.
    AttackersHoldAllColors,
    /// No component of the remaining graph carries every color.
    NoRainbowComponent,
}

impl ViolatedCondition {
    pub fn as_str(self) -> &'static str {
        match self {
            ViolatedCondition::AttackersHoldAllColors => "attackers-hold-all-colors",
            ViolatedCondition::NoRainbowComponent => "no-rainbow-component",
        }
    }
}

/// Outcome of a safety check. `witness` is present exactly when `safe` is
/// false, and is the lexicographically first violating subset.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyResult {
    pub safe: bool,
    pub witness: Option<VertexSet>,
    pub violated_condition: Option<ViolatedCondition>,
}

impl VerifyResult {
    fn safe() -> Self {
        VerifyResult {
            safe: true,
            witness: None,
            violated_condition: None,
        }
    }

    fn violated(subset: &[usize], condition: ViolatedCondition) -> Self {
        VerifyResult {
            safe: false,
            witness: Some(subset.iter().copied().collect()),
            violated_condition: Some(condition),
        }
    }
}

/// Ascending-size-`a` subsets of `0..n` in lexicographic order.
pub(crate) struct Subsets {
    n: usize,
    indices: Vec<usize>,
    started: bool,
    done: bool,
}

impl Subsets {
    pub(crate) fn new(n: usize, a: usize) -> Self {
        Subsets {
            n,
            indices: (0..a).collect(),
            started: false,
            done: a > n,
        }
    }

    /// Advances to the next subset; the slice stays valid until the next call.
    pub(crate) fn next(&mut self) -> Option<&[usize]> {
        if self.done {
            return None;
        }
        if !self.started {
            self.started = true;
            return Some(&self.indices);
        }
        let a = self.indices.len();
        // Find the rightmost index that can still move right.
        let mut i = a;
        loop {
            if i == 0 {
                self.done = true;
                return None;
            }
            i -= 1;
            if self.indices[i] < self.n - a + i {
                break;
            }
        }
        self.indices[i] += 1;
        for j in (i + 1)..a {
            self.indices[j] = self.indices[j - 1] + 1;
        }
        Some(&self.indices)
    }
}

/// Checks whether `c` is an `a`-safe coloring of `g`.
///
/// Subsets are swept in lexicographic order; the first violating subset is
/// returned as the witness, with condition (1) checked before condition (2).
/// When `n - a = 0` there is no component left to carry the colors, so the
/// coloring counts as unsafe.
pub fn verify_safe(g: &Graph, c: &Coloring, a: usize) -> Result<VerifyResult, VerifyError> {
    let n = g.n();
    if c.len() != n {
        return Err(VerifyError::SizeMismatch {
            graph_n: n,
            coloring_n: c.len(),
        });
    }
    if a > n {
        return Err(VerifyError::TooManyAttackers { a, n });
    }
    let k = c.k();

    let mut removed = vec![false; n];
    let mut visited = vec![false; n];
    let mut stack: Vec<usize> = Vec::with_capacity(n);
    let mut color_seen = vec![false; k as usize + 1];
    let mut subsets = Subsets::new(n, a);

    while let Some(subset) = subsets.next() {
        // Condition 1: the attackers must not hold all k colors themselves.
        if a >= k as usize {
            debug_assert!(color_seen.iter().all(|&s| !s));
            let mut distinct = 0u32;
            for &v in subset {
                let color = c.color(v) as usize;
                if !color_seen[color] {
                    color_seen[color] = true;
                    distinct += 1;
                }
            }
            for &v in subset {
                color_seen[c.color(v) as usize] = false;
            }
            if distinct == k {
                return Ok(VerifyResult::violated(
                    subset,
                    ViolatedCondition::AttackersHoldAllColors,
                ));
            }
        }

        // Condition 2: some component of the remaining graph is rainbow.
        for &v in subset {
            removed[v] = true;
        }
        let mut rainbow = false;
        'roots: for root in 0..n {
            if removed[root] || visited[root] {
                continue;
            }
            let mut distinct = 0u32;
            visited[root] = true;
            stack.push(root);
            let mut touched_colors: Vec<usize> = Vec::new();
            while let Some(u) = stack.pop() {
                let color = c.color(u) as usize;
                if !color_seen[color] {
                    color_seen[color] = true;
                    touched_colors.push(color);
                    distinct += 1;
                }
                for v in g.neighbors(u) {
                    if !removed[v] && !visited[v] {
                        visited[v] = true;
                        stack.push(v);
                    }
                }
                if distinct == k {
                    break;
                }
            }
            stack.clear();
            for color in touched_colors {
                color_seen[color] = false;
            }
            if distinct == k {
                rainbow = true;
                break 'roots;
            }
        }
        visited.iter_mut().for_each(|x| *x = false);
        for &v in subset {
            removed[v] = false;
        }
        if !rainbow {
            return Ok(VerifyResult::violated(
                subset,
                ViolatedCondition::NoRainbowComponent,
            ));
        }
    }
    Ok(VerifyResult::safe())
}

/// The set of colors present in each component of `g`, in the deterministic
/// component order of [`Graph::components`].
pub fn component_color_sets(
    g: &Graph,
    c: &Coloring,
) -> Result<Vec<std::collections::BTreeSet<u32>>, VerifyError> {
    if c.len() != g.n() {
        return Err(VerifyError::SizeMismatch {
            graph_n: g.n(),
            coloring_n: c.len(),
        });
    }
    Ok(g.components()
        .iter()
        .map(|comp| comp.iter().map(|v| c.color(v)).collect())
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{
        complete_graph, cycle_graph, gen_double_windmill, gen_random_min_deg3,
    };

    fn coloring(k: u32, colors: &[u32]) -> Coloring {
        Coloring::new(k, colors.to_vec()).unwrap()
    }

    #[test]
    fn subsets_enumerate_lexicographically() {
        let mut s = Subsets::new(4, 2);
        let mut got = Vec::new();
        while let Some(sub) = s.next() {
            got.push(sub.to_vec());
        }
        assert_eq!(
            got,
            vec![
                vec![0, 1],
                vec![0, 2],
                vec![0, 3],
                vec![1, 2],
                vec![1, 3],
                vec![2, 3]
            ]
        );
        let mut empty = Subsets::new(3, 0);
        assert_eq!(empty.next(), Some(&[][..]));
        assert_eq!(empty.next(), None);
        let mut too_big = Subsets::new(2, 3);
        assert_eq!(too_big.next(), None);
    }

    #[test]
    fn missing_color_is_never_safe() {
        // Nine vertices, colors {1,2} only under k = 3: no rainbow component
        // can exist for any removed pair.
        let g = complete_graph(9);
        let c = coloring(3, &[1, 2, 1, 2, 1, 2, 1, 2, 1]);
        let r = verify_safe(&g, &c, 2).unwrap();
        assert!(!r.safe);
        assert_eq!(
            r.violated_condition,
            Some(ViolatedCondition::NoRainbowComponent)
        );
        assert_eq!(r.witness.unwrap().to_string(), "{0,1}");
    }

    #[test]
    fn windmill_center_pair_is_first_witness() {
        let g = gen_double_windmill(4, true).unwrap();
        let c = coloring(3, &[1, 2, 3, 1, 2, 3, 1, 2, 3, 1]);
        let r = verify_safe(&g, &c, 2).unwrap();
        assert!(!r.safe);
        assert_eq!(r.witness.unwrap().to_string(), "{0,1}");
    }

    #[test]
    fn k4_has_no_safe_coloring_for_any_assignment() {
        let g = complete_graph(4);
        // Exhaust all 3^4 assignments.
        for code in 0..81u32 {
            let colors: Vec<u32> = (0..4).map(|i| (code / 3u32.pow(i)) % 3 + 1).collect();
            let r = verify_safe(&g, &coloring(3, &colors), 2).unwrap();
            assert!(!r.safe);
        }
    }

    #[test]
    fn rainbow_cycle_is_safe_for_a1() {
        // C9 colored 1,2,3 repeating: any single removal leaves a path that
        // still contains three consecutive distinct colors.
        let g = cycle_graph(9);
        let c = coloring(3, &[1, 2, 3, 1, 2, 3, 1, 2, 3]);
        assert!(verify_safe(&g, &c, 1).unwrap().safe);
        assert!(verify_safe(&g, &c, 2).unwrap().safe);
    }

    #[test]
    fn condition_one_fires_when_attackers_hold_all_colors() {
        // a = 3 >= k = 3: pick the triple holding colors {1,2,3}.
        let g = complete_graph(6);
        let c = coloring(3, &[1, 2, 3, 1, 2, 3]);
        let r = verify_safe(&g, &c, 3).unwrap();
        assert!(!r.safe);
        assert_eq!(
            r.violated_condition,
            Some(ViolatedCondition::AttackersHoldAllColors)
        );
        assert_eq!(r.witness.unwrap().to_string(), "{0,1,2}");
    }

    #[test]
    fn a_equals_n_is_unsafe() {
        let g = complete_graph(2);
        let c = coloring(3, &[1, 2]);
        let r = verify_safe(&g, &c, 2).unwrap();
        assert!(!r.safe);
        assert_eq!(r.witness.unwrap().len(), 2);
    }

    #[test]
    fn zero_attackers_checks_for_rainbow_component() {
        let g = cycle_graph(3);
        assert!(verify_safe(&g, &coloring(3, &[1, 2, 3]), 0).unwrap().safe);
        assert!(!verify_safe(&g, &coloring(3, &[1, 2, 2]), 0).unwrap().safe);
    }

    #[test]
    fn errors_on_mismatch_and_oversized_a() {
        let g = complete_graph(3);
        let c = coloring(3, &[1, 2]);
        assert_eq!(
            verify_safe(&g, &c, 1),
            Err(VerifyError::SizeMismatch {
                graph_n: 3,
                coloring_n: 2
            })
        );
        let c3 = coloring(3, &[1, 2, 3]);
        assert_eq!(
            verify_safe(&g, &c3, 4),
            Err(VerifyError::TooManyAttackers { a: 4, n: 3 })
        );
    }

    #[test]
    fn component_color_sets_per_component() {
        // Two disjoint edges colored (1,1) and (2,3).
        let g = Graph::from_edges(4, [(0, 1), (2, 3)]).unwrap();
        let c = coloring(3, &[1, 1, 2, 3]);
        let sets = component_color_sets(&g, &c).unwrap();
        assert_eq!(sets.len(), 2);
        assert_eq!(sets[0].iter().copied().collect::<Vec<_>>(), vec![1]);
        assert_eq!(sets[1].iter().copied().collect::<Vec<_>>(), vec![2, 3]);
    }

    #[test]
    fn windmill_blades_each_miss_a_color() {
        // Blades of DW(3) minus the centers, colored (1,2),(2,3),(1,3).
        let g = gen_double_windmill(3, true).unwrap();
        let centers = [0, 1].into_iter().collect();
        let (blades, _) = g.remove_vertices(&centers).unwrap();
        let c = coloring(3, &[1, 2, 2, 3, 1, 3]);
        let sets = component_color_sets(&blades, &c).unwrap();
        assert_eq!(sets.len(), 3);
        assert!(sets.iter().all(|s| s.len() == 2));
    }

    // Independent re-implementation of the definition used as a
    // cross-check: removal via remove_vertices, components, then a direct
    // color sweep per component. No code shared with verify_safe's path.
    fn naive_is_safe(g: &Graph, c: &Coloring, a: usize) -> bool {
        fn subsets_rec(n: usize, a: usize, start: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
            if cur.len() == a {
                out.push(cur.clone());
                return;
            }
            for v in start..n {
                cur.push(v);
                subsets_rec(n, a, v + 1, cur, out);
                cur.pop();
            }
        }
        let mut all = Vec::new();
        subsets_rec(g.n(), a, 0, &mut Vec::new(), &mut all);
        let k = c.k();
        all.into_iter().all(|subset| {
            let set: VertexSet = subset.iter().copied().collect();
            let attacker_colors: std::collections::BTreeSet<u32> =
                subset.iter().map(|&v| c.color(v)).collect();
            if attacker_colors.len() == k as usize {
                return false;
            }
            let (rest, map) = g.remove_vertices(&set).unwrap();
            rest.components().iter().any(|comp| {
                let colors: std::collections::BTreeSet<u32> = comp
                    .iter()
                    .map(|v| c.color(map.new_to_old[v]))
                    .collect();
                colors.len() == k as usize
            })
        })
    }

    #[test]
    fn agrees_with_naive_reference_on_small_graphs() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(77);
        for trial in 0..120 {
            let n = rng.random_range(1..=10);
            let mut g = Graph::new(n);
            for u in 0..n {
                for v in (u + 1)..n {
                    if rng.random_bool(0.45) {
                        g.add_edge(u, v).unwrap();
                    }
                }
            }
            let k = rng.random_range(1..=4);
            let colors: Vec<u32> = (0..n).map(|_| rng.random_range(1..=k)).collect();
            let c = Coloring::new(k, colors).unwrap();
            for a in 0..=n.min(3) {
                let got = verify_safe(&g, &c, a).unwrap();
                let want = naive_is_safe(&g, &c, a);
                assert_eq!(got.safe, want, "trial {trial}, n {n}, a {a}");
                assert_eq!(got.witness.is_some(), !want);
            }
        }
    }

    #[test]
    fn no_condition_one_witness_when_a_below_k() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(5);
        for seed in 0..40 {
            let g = gen_random_min_deg3(9, 0.3, seed).unwrap();
            let colors: Vec<u32> = (0..9).map(|_| rng.random_range(1..=3)).collect();
            let c = Coloring::new(3, colors).unwrap();
            for a in 0..=2 {
                let r = verify_safe(&g, &c, a).unwrap();
                assert_ne!(
                    r.violated_condition,
                    Some(ViolatedCondition::AttackersHoldAllColors),
                    "a < k can never hold all colors"
                );
            }
        }
    }
}
