//! Undirected simple graphs over dense vertex ids `0..n`, plus the structural
//! operations the rest of the crate is built on: component decomposition,
//! vertex removal with id remapping, and degree queries.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Errors from structural graph operations.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {vertex}")]
    SelfLoop { vertex: usize },
    #[error("graph has no vertices")]
    EmptyGraph,
}

/// An undirected simple graph. Vertices are `0..n`; the adjacency sets are
/// kept symmetric and loop-free by construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    adjacency: Vec<BTreeSet<usize>>,
}

impl Graph {
    /// Creates a graph on `n` vertices with no edges.
    pub fn new(n: usize) -> Self {
        Graph {
            adjacency: vec![BTreeSet::new(); n],
        }
    }

    /// Builds a graph from an edge list. Duplicate edges collapse silently;
    /// self-loops and out-of-range endpoints are rejected.
    pub fn from_edges(
        n: usize,
        edges: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Self, GraphError> {
        let mut g = Graph::new(n);
        for (u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    /// Number of vertices.
    pub fn n(&self) -> usize {
        self.adjacency.len()
    }

    /// Number of edges.
    pub fn edge_count(&self) -> usize {
        self.adjacency.iter().map(BTreeSet::len).sum::<usize>() / 2
    }

    /// Inserts the undirected edge `{u, v}`. Inserting an existing edge is a
    /// no-op.
    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<(), GraphError> {
        let n = self.n();
        for w in [u, v] {
            if w >= n {
                return Err(GraphError::VertexOutOfRange { vertex: w, n });
            }
        }
        if u == v {
            return Err(GraphError::SelfLoop { vertex: u });
        }
        self.adjacency[u].insert(v);
        self.adjacency[v].insert(u);
        Ok(())
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adjacency.get(u).is_some_and(|s| s.contains(&v))
    }

    /// Neighbors of `v` in ascending order.
    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.adjacency[v].iter().copied()
    }

    pub fn neighbor_set(&self, v: usize) -> &BTreeSet<usize> {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    /// All edges as `(u, v)` pairs with `u < v`, ascending.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n() {
            for &v in &self.adjacency[u] {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    /// Minimum vertex degree. Errors on the empty graph.
    pub fn min_degree(&self) -> Result<usize, GraphError> {
        self.adjacency
            .iter()
            .map(BTreeSet::len)
            .min()
            .ok_or(GraphError::EmptyGraph)
    }

    /// Decomposes the graph into connected components, ordered by their
    /// smallest contained vertex id.
    pub fn components(&self) -> ComponentPartition {
        let n = self.n();
        let mut seen = vec![false; n];
        let mut components = Vec::new();
        let mut stack = Vec::new();
        for root in 0..n {
            if seen[root] {
                continue;
            }
            let mut members = BTreeSet::new();
            seen[root] = true;
            stack.push(root);
            while let Some(u) = stack.pop() {
                members.insert(u);
                for &v in &self.adjacency[u] {
                    if !seen[v] {
                        seen[v] = true;
                        stack.push(v);
                    }
                }
            }
            components.push(VertexSet { members });
        }
        ComponentPartition { components }
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() == 1
    }

    /// Returns the graph with the vertices of `removed` (and their incident
    /// edges) deleted, along with the id mapping between the two graphs.
    /// The original graph is untouched; surviving vertices are compacted to
    /// `0..n-|removed|` preserving relative order.
    pub fn remove_vertices(
        &self,
        removed: &VertexSet,
    ) -> Result<(Graph, VertexIdMap), GraphError> {
        let n = self.n();
        if let Some(&vertex) = removed.members.iter().find(|&&v| v >= n) {
            return Err(GraphError::VertexOutOfRange { vertex, n });
        }
        let mut old_to_new = vec![None; n];
        let mut new_to_old = Vec::with_capacity(n - removed.len());
        for (old, slot) in old_to_new.iter_mut().enumerate() {
            if !removed.contains(old) {
                *slot = Some(new_to_old.len());
                new_to_old.push(old);
            }
        }
        let mut g = Graph::new(new_to_old.len());
        for (new_u, &old_u) in new_to_old.iter().enumerate() {
            for &old_v in &self.adjacency[old_u] {
                if let Some(new_v) = old_to_new[old_v] {
                    if new_u < new_v {
                        g.adjacency[new_u].insert(new_v);
                        g.adjacency[new_v].insert(new_u);
                    }
                }
            }
        }
        Ok((
            g,
            VertexIdMap {
                old_to_new,
                new_to_old,
            },
        ))
    }
}

/// A set of vertex ids of some graph.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct VertexSet {
    members: BTreeSet<usize>,
}

impl VertexSet {
    pub fn new() -> Self {
        VertexSet::default()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.members.contains(&v)
    }

    pub fn insert(&mut self, v: usize) -> bool {
        self.members.insert(v)
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    /// Members in ascending order.
    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.members.iter().copied()
    }

    pub fn min(&self) -> Option<usize> {
        self.members.first().copied()
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        VertexSet {
            members: iter.into_iter().collect(),
        }
    }
}

impl fmt::Display for VertexSet {
    /// Renders as `{0,1,4}`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.members.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

/// Connected components of a graph: disjoint, non-empty vertex sets covering
/// every vertex, ordered by smallest contained id.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComponentPartition {
    components: Vec<VertexSet>,
}

impl ComponentPartition {
    pub fn len(&self) -> usize {
        self.components.len()
    }

    pub fn is_empty(&self) -> bool {
        self.components.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = &VertexSet> {
        self.components.iter()
    }

    pub fn get(&self, i: usize) -> &VertexSet {
        &self.components[i]
    }

    /// Component sizes, in component order.
    pub fn sizes(&self) -> Vec<usize> {
        self.components.iter().map(VertexSet::len).collect()
    }
}

/// Vertex id translation produced by `Graph::remove_vertices`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexIdMap {
    /// Indexed by old id; `None` for removed vertices.
    pub old_to_new: Vec<Option<usize>>,
    /// Indexed by new id.
    pub new_to_old: Vec<usize>,
}

/// The shape parameters of a recognized double windmill: `l` blades (disjoint
/// edges) whose `2l` endpoints are all adjacent to both centers, with the
/// centers themselves adjacent or not.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WindmillShape {
    /// Number of two-vertex blades; total vertex count is `2l + 2`.
    pub l: usize,
    pub centers_adjacent: bool,
    /// The two center vertices, ascending.
    pub center_ids: (usize, usize),
    /// Blade endpoint pairs, each ascending, listed by smaller endpoint.
    pub blades: Vec<(usize, usize)>,
}
