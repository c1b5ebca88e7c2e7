//! Immutable simple graphs and structural queries.
//!
//! Vertices are `0..n` internally. Every text format and every `Display`
//! impl uses 1-indexed vertices.

mod canon;
mod io;
mod vertex_set;

pub use canon::{canonical_form, CanonicalForm, CANONICAL_CAP};
pub use io::{parse_edge_list, parse_graph6, parse_graph6_corpus, to_edge_list, to_graph6};
pub use vertex_set::VertexSet;

use std::collections::VecDeque;
use std::fmt;

use crate::error::{FloodError, Result};

/// A finite simple graph on vertices `0..n`.
#[derive(Clone)]
pub struct Graph {
    n: usize,
    adj: Vec<VertexSet>,
    /// Single-word adjacency masks, present when `n <= 64`.
    masks: Option<Vec<u64>>,
    labels: Option<Vec<String>>,
}

/// Result of [`Graph::diameter`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Diameter {
    Finite(usize),
    Infinite,
}

impl fmt::Display for Diameter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Diameter::Finite(d) => write!(f, "{d}"),
            Diameter::Infinite => f.write_str("infinite"),
        }
    }
}

impl Graph {
    /// Builds a graph from 0-indexed edges. Duplicate edges collapse.
    pub fn from_edge_list(n: usize, edges: &[(usize, usize)]) -> Result<Graph> {
        let mut adj = vec![VertexSet::empty(n); n];
        for &(u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(FloodError::IndexOutOfRange { index: w, n });
                }
            }
            if u == v {
                return Err(FloodError::SelfLoop(u));
            }
            adj[u].insert(v);
            adj[v].insert(u);
        }
        Ok(Graph::from_adjacency(adj))
    }

    /// The graph on `n` vertices with no edges.
    pub fn empty(n: usize) -> Graph {
        Graph::from_adjacency(vec![VertexSet::empty(n); n])
    }

    fn from_adjacency(adj: Vec<VertexSet>) -> Graph {
        let n = adj.len();
        let masks = (n <= 64).then(|| adj.iter().map(|s| s.as_mask().unwrap()).collect());
        Graph {
            n,
            adj,
            masks,
            labels: None,
        }
    }

    /// Attaches display labels, one per vertex.
    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Graph> {
        if labels.len() != self.n {
            return Err(FloodError::InvalidParameter(format!(
                "{} labels for {} vertices",
                labels.len(),
                self.n
            )));
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(VertexSet::len).sum::<usize>() / 2
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            out.extend(self.adj[u].iter().filter(|&v| v > u).map(|v| (u, v)));
        }
        out
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && self.adj[u].contains(v)
    }

    /// Panics if `v >= n`.
    pub fn neighbors(&self, v: usize) -> &VertexSet {
        &self.adj[v]
    }

    pub(crate) fn masks(&self) -> Option<&[u64]> {
        self.masks.as_deref()
    }

    pub fn degree(&self, v: usize) -> Result<usize> {
        self.adj
            .get(v)
            .map(VertexSet::len)
            .ok_or(FloodError::IndexOutOfRange { index: v, n: self.n })
    }

    fn deg(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    /// Display label of `v`; defaults to `v<i>` with 1-indexed `i`.
    pub fn label(&self, v: usize) -> String {
        match &self.labels {
            Some(l) => l[v].clone(),
            None => format!("v{}", v + 1),
        }
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn vertex_set(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    /// Vertices of degree at most one.
    pub fn leaves_and_isolated(&self) -> VertexSet {
        VertexSet::from_indices(self.n, (0..self.n).filter(|&v| self.deg(v) <= 1)).unwrap()
    }

    /// Edges whose endpoints both have degree exactly two, as `(u, v)` with
    /// `u < v`, sorted.
    pub fn triggers(&self) -> Vec<(usize, usize)> {
        self.edges()
            .into_iter()
            .filter(|&(u, v)| self.deg(u) == 2 && self.deg(v) == 2)
            .collect()
    }

    /// `self ⊕ other`: the vertices of `other` are shifted by `self.n()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let n = self.n + other.n;
        let mut edges = self.edges();
        edges.extend(other.edges().into_iter().map(|(u, v)| (u + self.n, v + self.n)));
        let mut g = Graph::from_edge_list(n, &edges).expect("shifted edges stay in range");
        if self.labels.is_some() || other.labels.is_some() {
            let labels = (0..self.n)
                .map(|v| self.label(v))
                .chain((0..other.n).map(|v| other.label(v)))
                .collect();
            g.labels = Some(labels);
        }
        g
    }

    /// Breadth-first distances from `src`; `usize::MAX` marks unreachable.
    pub fn distances_from(&self, src: usize) -> Vec<usize> {
        let mut dist = vec![usize::MAX; self.n];
        let mut queue = VecDeque::new();
        dist[src] = 0;
        queue.push_back(src);
        while let Some(u) = queue.pop_front() {
            for w in self.adj[u].iter() {
                if dist[w] == usize::MAX {
                    dist[w] = dist[u] + 1;
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    pub fn diameter(&self) -> Diameter {
        let mut best = 0;
        for s in 0..self.n {
            for d in self.distances_from(s) {
                if d == usize::MAX {
                    return Diameter::Infinite;
                }
                best = best.max(d);
            }
        }
        Diameter::Finite(best)
    }

    /// Connected components, ordered by their smallest vertex.
    pub fn components(&self) -> Vec<VertexSet> {
        let mut seen = VertexSet::empty(self.n);
        let mut out = Vec::new();
        for s in 0..self.n {
            if seen.contains(s) {
                continue;
            }
            let comp = VertexSet::from_indices(
                self.n,
                self.distances_from(s)
                    .iter()
                    .enumerate()
                    .filter(|(_, &d)| d != usize::MAX)
                    .map(|(v, _)| v),
            )
            .unwrap();
            seen = seen.union(&comp);
            out.push(comp);
        }
        out
    }

    /// Relabels vertices: vertex `v` of `self` becomes `perm[v]`.
    pub fn permute(&self, perm: &[usize]) -> Result<Graph> {
        let mut seen = vec![false; self.n];
        if perm.len() != self.n {
            return Err(FloodError::InvalidParameter("permutation length".into()));
        }
        for &p in perm {
            if p >= self.n || std::mem::replace(&mut seen[p], true) {
                return Err(FloodError::InvalidParameter("not a permutation".into()));
            }
        }
        let edges: Vec<_> = self.edges().iter().map(|&(u, v)| (perm[u], perm[v])).collect();
        Graph::from_edge_list(self.n, &edges)
    }

    /// Subgraph induced by `keep`, vertices renumbered in increasing order.
    pub fn induced(&self, keep: &VertexSet) -> Graph {
        let order = keep.to_vec();
        let mut index = vec![usize::MAX; self.n];
        for (i, &v) in order.iter().enumerate() {
            index[v] = i;
        }
        let edges: Vec<_> = self
            .edges()
            .into_iter()
            .filter(|&(u, v)| keep.contains(u) && keep.contains(v))
            .map(|(u, v)| (index[u], index[v]))
            .collect();
        let mut g = Graph::from_edge_list(order.len(), &edges).unwrap();
        if self.labels.is_some() {
            g.labels = Some(order.iter().map(|&v| self.label(v)).collect());
        }
        g
    }

    pub fn canonical_form(&self) -> Result<CanonicalForm> {
        canonical_form(self)
    }
}

/// Two graphs are equal when they have the same vertex count and edge set;
/// labels are ignored.
impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.adj == other.adj
    }
}

impl Eq for Graph {}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let edges: Vec<_> = self.edges().iter().map(|&(u, v)| (u + 1, v + 1)).collect();
        f.debug_struct("Graph")
            .field("n", &self.n)
            .field("edges", &edges)
            .finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path(n: usize) -> Graph {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::from_edge_list(n, &edges).unwrap()
    }

    fn cycle(n: usize) -> Graph {
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::from_edge_list(n, &edges).unwrap()
    }

    fn complete(n: usize) -> Graph {
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                edges.push((u, v));
            }
        }
        Graph::from_edge_list(n, &edges).unwrap()
    }

    #[test]
    fn edge_list_construction() {
        let c4 = Graph::from_edge_list(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        assert_eq!(c4.edge_count(), 4);
        assert_eq!(c4, cycle(4));
        assert_eq!(Graph::from_edge_list(1, &[]).unwrap().n(), 1);
        let p3 = Graph::from_edge_list(3, &[(0, 1), (0, 1), (1, 2)]).unwrap();
        assert_eq!(p3.edge_count(), 2);
    }

    #[test]
    fn edge_list_errors() {
        assert_eq!(
            Graph::from_edge_list(2, &[(0, 2)]),
            Err(FloodError::IndexOutOfRange { index: 2, n: 2 })
        );
        assert_eq!(Graph::from_edge_list(2, &[(1, 1)]), Err(FloodError::SelfLoop(1)));
    }

    #[test]
    fn degrees() {
        assert!(complete(6).vertex_set().iter().all(|v| complete(6).degree(v) == Ok(5)));
        assert_eq!(Graph::empty(1).degree(0), Ok(0));
        assert_eq!(path(3).degree(1), Ok(2));
        assert!(path(3).degree(3).is_err());
    }

    #[test]
    fn leaves() {
        assert_eq!(path(2).leaves_and_isolated().len(), 2);
        assert!(cycle(5).leaves_and_isolated().is_empty());
    }

    #[test]
    fn triggers_of_pendant_square() {
        // v1..v4 square with v5 hanging off v2
        let g = Graph::from_edge_list(5, &[(0, 1), (1, 2), (2, 3), (3, 0), (1, 4)]).unwrap();
        assert_eq!(g.triggers(), vec![(0, 3), (2, 3)]);
        assert_eq!(cycle(4).triggers(), cycle(4).edges());
        assert!(complete(4).triggers().is_empty());
    }

    #[test]
    fn unions() {
        let g = path(4).disjoint_union(&cycle(4));
        assert_eq!((g.n(), g.edge_count()), (8, 7));
        assert_eq!(path(4).disjoint_union(&Graph::empty(0)), path(4));
        let h = path(3).disjoint_union(&cycle(3));
        assert_eq!((h.n(), h.edge_count()), (6, 5));
        assert!(h.has_edge(3, 5));
    }

    #[test]
    fn diameters() {
        for n in 2..7 {
            assert_eq!(complete(n).diameter(), Diameter::Finite(1));
        }
        assert_eq!(Graph::empty(1).diameter(), Diameter::Finite(0));
        assert_eq!(Graph::empty(0).diameter(), Diameter::Finite(0));
        assert_eq!(Graph::empty(2).diameter(), Diameter::Infinite);
        assert_eq!(path(5).diameter(), Diameter::Finite(4));
    }

    #[test]
    fn component_split() {
        let g = path(4).disjoint_union(&cycle(4));
        let sizes: Vec<_> = g.components().iter().map(VertexSet::len).collect();
        assert_eq!(sizes, vec![4, 4]);
        assert_eq!(cycle(5).components().len(), 1);
        assert_eq!(Graph::empty(3).components().len(), 3);
    }

    #[test]
    fn permute_and_induce() {
        let p = path(3).permute(&[1, 0, 2]).unwrap();
        assert!(p.has_edge(1, 0) && p.has_edge(0, 2) && !p.has_edge(1, 2));
        assert!(path(3).permute(&[0, 0, 1]).is_err());
        let keep = VertexSet::from_indices(4, [1, 2, 3]).unwrap();
        assert_eq!(path(4).induced(&keep), path(3));
    }
}
