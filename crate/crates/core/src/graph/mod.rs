//! Simple undirected graphs over dense `0..n` vertex indices.
//!
//! Every routine here breaks ties by minimum vertex index or lexicographic
//! edge order, so all downstream algorithms are deterministic.

mod dimacs;
mod generate;
mod union_find;

pub use dimacs::{parse_dimacs, write_dimacs};
pub use generate::{enumerate_connected, generate, GraphFamily, MAX_ENUMERATION_ORDER};
pub use union_find::UnionFind;

use std::collections::VecDeque;
use std::fmt;

use thiserror::Error;

/// Vertex index.
pub type Vertex = usize;

/// An edge as a vertex pair. Inside [`EdgeSet`] it is normalized to `u < v`.
pub type Edge = (Vertex, Vertex);

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("self-loop at vertex {0}")]
    SelfLoop(Vertex),
    #[error("duplicate edge ({0}, {1})")]
    DuplicateEdge(Vertex, Vertex),
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("missing `p edge <n> <m>` header")]
    MissingHeader,
    #[error("edge ({0}, {1}) is not an edge of the graph")]
    EdgeNotInGraph(Vertex, Vertex),
    #[error("edge set does not connect all vertices")]
    NotConnected,
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("enumeration of order {0} is too large (maximum {MAX_ENUMERATION_ORDER})")]
    TooLarge(usize),
}

/// Immutable simple graph with sorted, symmetric adjacency lists.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adjacency: Vec<Vec<Vertex>>,
    m: usize,
}

impl Graph {
    /// Builds a graph on `n` vertices, rejecting self-loops, repeated pairs
    /// (in either orientation) and out-of-range endpoints.
    pub fn from_edges(n: usize, edges: &[Edge]) -> Result<Self, GraphError> {
        let mut adjacency = vec![Vec::new(); n];
        for &(u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(GraphError::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            adjacency[u].push(v);
            adjacency[v].push(u);
        }
        for (u, list) in adjacency.iter_mut().enumerate() {
            list.sort_unstable();
            if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
                let v = w[0];
                return Err(GraphError::DuplicateEdge(u.min(v), u.max(v)));
            }
        }
        Ok(Self {
            adjacency,
            m: edges.len(),
        })
    }

    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        Self {
            adjacency: vec![Vec::new(); n],
            m: 0,
        }
    }

    pub fn n(&self) -> usize {
        self.adjacency.len()
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adjacency[v].len()
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        u < self.n() && v < self.n() && self.adjacency[u].binary_search(&v).is_ok()
    }

    /// All edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = Edge> + '_ {
        self.adjacency
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().filter(move |&&v| u < v).map(move |&v| (u, v)))
    }

    pub fn edge_set(&self) -> EdgeSet {
        EdgeSet(self.edges().collect())
    }

    pub fn vertex_set(&self) -> VertexSet {
        VertexSet::full(self.n())
    }

    /// Minimum degree; 0 when some vertex is isolated (or the graph is empty).
    pub fn min_degree(&self) -> usize {
        self.adjacency.iter().map(Vec::len).min().unwrap_or(0)
    }

    pub fn is_connected(&self) -> bool {
        self.n() <= 1 || self.connected_components(None).is_ok_and(|c| c.len() == 1)
    }

    /// Adjacency lists of the spanning subgraph with edge set `restrict`, or
    /// of the whole graph when `restrict` is `None`.
    fn restricted_adjacency(
        &self,
        restrict: Option<&EdgeSet>,
    ) -> Result<Vec<Vec<Vertex>>, GraphError> {
        let Some(restrict) = restrict else {
            return Ok(self.adjacency.clone());
        };
        let mut adjacency = vec![Vec::new(); self.n()];
        for &(u, v) in restrict.iter() {
            if !self.has_edge(u, v) {
                return Err(GraphError::EdgeNotInGraph(u, v));
            }
            adjacency[u].push(v);
            adjacency[v].push(u);
        }
        for list in &mut adjacency {
            list.sort_unstable();
            list.dedup();
        }
        Ok(adjacency)
    }

    /// Maximal connected vertex sets under the (optionally restricted) edge
    /// set, ordered by their minimum vertex.
    pub fn connected_components(
        &self,
        restrict: Option<&EdgeSet>,
    ) -> Result<Vec<VertexSet>, GraphError> {
        let adjacency = self.restricted_adjacency(restrict)?;
        let n = self.n();
        let mut seen = vec![false; n];
        let mut components = Vec::new();
        let mut queue = VecDeque::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut component = VertexSet::new(n);
            seen[start] = true;
            queue.push_back(start);
            while let Some(u) = queue.pop_front() {
                component.insert(u);
                for &w in &adjacency[u] {
                    if !seen[w] {
                        seen[w] = true;
                        queue.push_back(w);
                    }
                }
            }
            components.push(component);
        }
        Ok(components)
    }

    /// Edges with exactly one endpoint in `h`, oriented `(inside, outside)`
    /// and sorted lexicographically by that orientation.
    pub fn cut_edges(&self, h: &VertexSet) -> Vec<Edge> {
        let mut cut = Vec::new();
        for u in h.iter() {
            for &v in &self.adjacency[u] {
                if !h.contains(v) {
                    cut.push((u, v));
                }
            }
        }
        cut
    }

    /// BFS spanning tree over `restrict` from `root`, visiting neighbors in
    /// ascending order. Edges come back normalized and sorted.
    pub fn bfs_spanning_tree(&self, restrict: &EdgeSet, root: Vertex) -> Result<EdgeSet, GraphError> {
        let n = self.n();
        if root >= n {
            return Err(GraphError::VertexOutOfRange { vertex: root, n });
        }
        let adjacency = self.restricted_adjacency(Some(restrict))?;
        let mut seen = vec![false; n];
        let mut tree = Vec::with_capacity(n.saturating_sub(1));
        let mut queue = VecDeque::from([root]);
        seen[root] = true;
        while let Some(u) = queue.pop_front() {
            for &w in &adjacency[u] {
                if !seen[w] {
                    seen[w] = true;
                    tree.push((u.min(w), u.max(w)));
                    queue.push_back(w);
                }
            }
        }
        if tree.len() + 1 != n {
            return Err(GraphError::NotConnected);
        }
        Ok(EdgeSet::from_pairs(tree))
    }

    /// Returns a proper 2-coloring (colors 1 and 2) when the graph has no odd
    /// cycle.
    pub fn bipartition(&self) -> Option<Vec<u32>> {
        let n = self.n();
        let mut side = vec![0u32; n];
        let mut queue = VecDeque::new();
        for start in 0..n {
            if side[start] != 0 {
                continue;
            }
            side[start] = 1;
            queue.push_back(start);
            while let Some(u) = queue.pop_front() {
                for &w in &self.adjacency[u] {
                    if side[w] == 0 {
                        side[w] = 3 - side[u];
                        queue.push_back(w);
                    } else if side[w] == side[u] {
                        return None;
                    }
                }
            }
        }
        Some(side)
    }

    pub fn is_bipartite(&self) -> bool {
        self.bipartition().is_some()
    }

    /// Spanning subgraph of `self` keeping only the edges in `edges`.
    pub fn spanning_subgraph(&self, edges: &EdgeSet) -> Result<Graph, GraphError> {
        for &(u, v) in edges.iter() {
            if !self.has_edge(u, v) {
                return Err(GraphError::EdgeNotInGraph(u, v));
            }
        }
        Graph::from_edges(self.n(), edges.as_slice())
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n())
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}

/// Membership set over `0..n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct VertexSet {
    members: Vec<bool>,
    len: usize,
}

impl VertexSet {
    pub fn new(n: usize) -> Self {
        Self {
            members: vec![false; n],
            len: 0,
        }
    }

    pub fn full(n: usize) -> Self {
        Self {
            members: vec![true; n],
            len: n,
        }
    }

    pub fn from_vertices(n: usize, vertices: impl IntoIterator<Item = Vertex>) -> Self {
        let mut set = Self::new(n);
        for v in vertices {
            set.insert(v);
        }
        set
    }

    pub fn insert(&mut self, v: Vertex) -> bool {
        let fresh = !self.members[v];
        if fresh {
            self.members[v] = true;
            self.len += 1;
        }
        fresh
    }

    pub fn contains(&self, v: Vertex) -> bool {
        self.members.get(v).copied().unwrap_or(false)
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    /// Size of the universe `0..n` this set lives in.
    pub fn universe(&self) -> usize {
        self.members.len()
    }

    pub fn min(&self) -> Option<Vertex> {
        self.iter().next()
    }

    pub fn iter(&self) -> impl Iterator<Item = Vertex> + '_ {
        self.members
            .iter()
            .enumerate()
            .filter_map(|(v, &inside)| inside.then_some(v))
    }

    pub fn is_disjoint(&self, other: &VertexSet) -> bool {
        self.iter().all(|v| !other.contains(v))
    }

    pub fn to_vec(&self) -> Vec<Vertex> {
        self.iter().collect()
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// Sorted, duplicate-free list of normalized edges.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct EdgeSet(Vec<Edge>);

impl EdgeSet {
    /// Normalizes every pair to `u < v`, then sorts and removes duplicates.
    pub fn from_pairs(pairs: impl IntoIterator<Item = Edge>) -> Self {
        let mut edges: Vec<Edge> = pairs.into_iter().map(|(u, v)| (u.min(v), u.max(v))).collect();
        edges.sort_unstable();
        edges.dedup();
        Self(edges)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, u: Vertex, v: Vertex) -> bool {
        self.0.binary_search(&(u.min(v), u.max(v))).is_ok()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Edge> {
        self.0.iter()
    }

    pub fn as_slice(&self) -> &[Edge] {
        &self.0
    }

    pub fn into_vec(self) -> Vec<Edge> {
        self.0
    }
}

impl FromIterator<Edge> for EdgeSet {
    fn from_iter<I: IntoIterator<Item = Edge>>(iter: I) -> Self {
        Self::from_pairs(iter)
    }
}

impl<'a> IntoIterator for &'a EdgeSet {
    type Item = &'a Edge;
    type IntoIter = std::slice::Iter<'a, Edge>;

    fn into_iter(self) -> Self::IntoIter {
        self.0.iter()
    }
}

/// True when `edges` is a spanning tree on `0..n`: exactly `n - 1` distinct
/// in-range edges with no cycle.
pub fn is_spanning_tree(n: usize, edges: &[Edge]) -> bool {
    if n == 0 || edges.len() + 1 != n {
        return false;
    }
    let mut forest = UnionFind::new(n);
    edges
        .iter()
        .all(|&(u, v)| u < n && v < n && u != v && forest.union(u, v))
}
