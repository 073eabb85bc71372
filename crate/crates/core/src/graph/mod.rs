//! Simple undirected graphs on dense vertex ids `0..n`.

mod distance;
mod io;
mod iso;
mod shape;

pub use distance::{DistanceMatrix, UNREACHABLE};
pub use io::{parse_edge_list, parse_json, to_dot, to_edge_list, to_json, GraphFormat};
pub(crate) use iso::bits;
pub use iso::{
    are_isomorphic, are_isomorphic_with_limit, canonical_form, canonical_form_with_limit, CanonicalForm,
};
pub use shape::{classify_shape, classify_shape_with_limit, Component, ShapeDescription};

use crate::{Error, Result};
use std::collections::VecDeque;

/// An immutable finite simple undirected graph.
///
/// Vertices are `0..n`. Neighbor lists are kept sorted, so two graphs with
/// the same vertex count and edge set compare equal regardless of how they
/// were built.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
    labels: Option<Vec<String>>,
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        Graph {
            adj: vec![Vec::new(); n],
            labels: None,
        }
    }

    /// Builds a graph from an edge list, rejecting self-loops, duplicates
    /// (in either orientation) and out-of-range endpoints.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut adj = vec![Vec::new(); n];
        for (u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            if adj[u].contains(&v) {
                return Err(Error::DuplicateEdge(u.min(v), u.max(v)));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Ok(Graph { adj, labels: None })
    }

    /// Builds a graph from an edge relation that may repeat edges; used by
    /// the product constructions. Panics on loops or bad endpoints, which
    /// would be construction bugs.
    pub(crate) fn from_edge_relation<I>(n: usize, edges: I) -> Self
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut adj = vec![Vec::new(); n];
        for (u, v) in edges {
            assert!(u < n && v < n && u != v, "bad edge ({u}, {v}) on {n} vertices");
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
            list.dedup();
        }
        Graph { adj, labels: None }
    }

    /// Builds a graph from an adjacency predicate evaluated on every pair.
    pub fn from_fn(n: usize, mut adjacent: impl FnMut(usize, usize) -> bool) -> Self {
        let mut adj = vec![Vec::new(); n];
        for u in 0..n {
            for v in (u + 1)..n {
                if adjacent(u, v) {
                    adj[u].push(v);
                    adj[v].push(u);
                }
            }
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Graph { adj, labels: None }
    }

    /// Attaches per-vertex labels. The label count must equal the order.
    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self> {
        if labels.len() != self.n() {
            return Err(Error::InvalidParameter(format!(
                "{} labels for {} vertices",
                labels.len(),
                self.n()
            )));
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    /// Number of vertices.
    pub fn n(&self) -> usize {
        self.adj.len()
    }

    /// Number of edges.
    pub fn m(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n() && v < self.n() && self.adj[u].binary_search(&v).is_ok()
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj.iter().enumerate().flat_map(|(u, list)| {
            list.iter().copied().filter(move |&v| u < v).map(move |v| (u, v))
        })
    }

    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut degrees: Vec<usize> = self.adj.iter().map(Vec::len).collect();
        degrees.sort_unstable_by(|a, b| b.cmp(a));
        degrees
    }

    /// Closed neighborhoods `N[v]`, as bitmasks. Requires `n <= 64`.
    pub fn closed_masks(&self) -> Vec<u64> {
        self.adjacency_masks()
            .into_iter()
            .enumerate()
            .map(|(v, mask)| mask | (1u64 << v))
            .collect()
    }

    /// Open neighborhoods as bitmasks. Requires `n <= 64`.
    pub fn adjacency_masks(&self) -> Vec<u64> {
        assert!(self.n() <= 64, "bitmask view needs at most 64 vertices");
        self.adj
            .iter()
            .map(|list| list.iter().fold(0u64, |mask, &w| mask | (1u64 << w)))
            .collect()
    }

    /// Whether `N[u] == N[v]` (closed neighborhoods coincide). Holds for `u == v`.
    pub fn same_closed_neighborhood(&self, u: usize, v: usize) -> bool {
        if u == v {
            return true;
        }
        if !self.has_edge(u, v) || self.degree(u) != self.degree(v) {
            return false;
        }
        let strip = |x: usize, other: usize| self.adj[x].iter().copied().filter(move |&w| w != other);
        strip(u, v).eq(strip(v, u))
    }

    /// A vertex adjacent to every other vertex.
    pub fn is_universal(&self, v: usize) -> bool {
        self.degree(v) + 1 == self.n()
    }

    pub fn is_complete(&self) -> bool {
        let n = self.n();
        self.m() == n * n.saturating_sub(1) / 2
    }

    /// True iff the graph has exactly one connected component.
    /// `K1` is connected; the empty graph is not.
    pub fn is_connected(&self) -> bool {
        self.n() > 0 && self.components().len() == 1
    }

    /// Connected components, each sorted, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let n = self.n();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            let mut comp = vec![start];
            let mut queue = VecDeque::from([start]);
            while let Some(u) = queue.pop_front() {
                for &w in &self.adj[u] {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                        queue.push_back(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn complement(&self) -> Graph {
        Graph::from_fn(self.n(), |u, v| !self.has_edge(u, v))
    }

    /// The subgraph induced by `keep`, relabeled `0..k` in increasing order
    /// of the kept vertices. Returns the graph and the map back to `self`.
    pub fn induced_subgraph(&self, keep: &[usize]) -> Result<(Graph, Vec<usize>)> {
        let n = self.n();
        let mut index = vec![usize::MAX; n];
        let mut to_parent: Vec<usize> = Vec::with_capacity(keep.len());
        for &v in keep {
            if v >= n {
                return Err(Error::VertexOutOfRange { vertex: v, n });
            }
            to_parent.push(v);
        }
        to_parent.sort_unstable();
        to_parent.dedup();
        for (i, &v) in to_parent.iter().enumerate() {
            index[v] = i;
        }
        let mut adj = vec![Vec::new(); to_parent.len()];
        for (i, &v) in to_parent.iter().enumerate() {
            adj[i] = self.adj[v]
                .iter()
                .filter(|&&w| index[w] != usize::MAX)
                .map(|&w| index[w])
                .collect();
            adj[i].sort_unstable();
        }
        let labels = self
            .labels
            .as_ref()
            .map(|l| to_parent.iter().map(|&v| l[v].clone()).collect());
        Ok((Graph { adj, labels }, to_parent))
    }

    /// The graph with vertex `v` deleted (`G[v^c]`).
    pub fn remove_vertex(&self, v: usize) -> Result<(Graph, Vec<usize>)> {
        if v >= self.n() {
            return Err(Error::VertexOutOfRange { vertex: v, n: self.n() });
        }
        let keep: Vec<usize> = (0..self.n()).filter(|&u| u != v).collect();
        self.induced_subgraph(&keep)
    }

    /// `a ∪ b`: `b`'s vertices are shifted up by `a.n()`.
    pub fn disjoint_union(a: &Graph, b: &Graph) -> Graph {
        let shift = a.n();
        let mut adj = a.adj.clone();
        adj.extend(b.adj.iter().map(|list| list.iter().map(|&w| w + shift).collect()));
        Graph { adj, labels: None }
    }

    /// `count` disjoint copies of `self`.
    pub fn copies(&self, count: usize) -> Graph {
        (0..count).fold(Graph::empty(0), |acc, _| Graph::disjoint_union(&acc, self))
    }

    /// Same vertex set, edges mapped through the permutation `perm`
    /// (vertex `v` becomes `perm[v]`).
    pub fn permuted(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n());
        Graph::from_edge_relation(self.n(), self.edges().map(|(u, v)| (perm[u], perm[v])))
    }

    pub fn distances(&self) -> DistanceMatrix {
        DistanceMatrix::new(self)
    }
}

/// Convenience alias for [`Graph::disjoint_union`].
pub fn disjoint_union(a: &Graph, b: &Graph) -> Graph {
    Graph::disjoint_union(a, b)
}
