//! Simple undirected graphs, stored as a dense symmetric bit matrix.

use std::fmt;

use crate::bits;
use crate::digraph::{check_permutation, Digraph, VertexId};
use crate::error::GraphError;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    words: usize,
    adj: Vec<u64>,
    edges: usize,
}

impl Graph {
    pub fn empty(n: usize) -> Self {
        let words = bits::words_for(n);
        Self { n, words, adj: vec![0; n * words], edges: 0 }
    }

    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (VertexId, VertexId)>,
    {
        let mut g = Self::empty(n);
        for (u, v) in edges {
            for x in [u, v] {
                if x >= n {
                    return Err(GraphError::VertexOutOfRange { vertex: x, order: n });
                }
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            g.insert_edge(u, v);
        }
        Ok(g)
    }

    pub fn complete(n: usize) -> Self {
        let mut g = Self::empty(n);
        for u in 0..n {
            for v in u + 1..n {
                g.insert_edge(u, v);
            }
        }
        g
    }

    pub fn cycle(n: usize) -> Self {
        let mut g = Self::empty(n);
        if n >= 3 {
            for v in 0..n {
                g.insert_edge(v, (v + 1) % n);
            }
        }
        g
    }

    pub fn path(n: usize) -> Self {
        let mut g = Self::empty(n);
        for v in 1..n {
            g.insert_edge(v - 1, v);
        }
        g
    }

    pub(crate) fn from_masks(masks: &[u64]) -> Self {
        let n = masks.len();
        debug_assert!(n <= 64);
        let mut g = Self::empty(n);
        for (u, &m) in masks.iter().enumerate() {
            for v in bits::ones(&[m]) {
                if u < v {
                    g.insert_edge(u, v);
                }
            }
        }
        g
    }

    /// Neighbourhood masks; only valid for `n <= 64`.
    pub(crate) fn masks(&self) -> Vec<u64> {
        debug_assert!(self.n <= 64);
        (0..self.n).map(|v| self.row(v).first().copied().unwrap_or(0)).collect()
    }

    #[inline]
    pub(crate) fn insert_edge(&mut self, u: VertexId, v: VertexId) {
        let w = self.words;
        if !bits::test(&self.adj[u * w..(u + 1) * w], v) {
            bits::set(&mut self.adj[u * w..(u + 1) * w], v);
            bits::set(&mut self.adj[v * w..(v + 1) * w], u);
            self.edges += 1;
        }
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges
    }

    #[inline]
    pub(crate) fn row(&self, v: VertexId) -> &[u64] {
        &self.adj[v * self.words..(v + 1) * self.words]
    }

    pub fn has_edge(&self, u: VertexId, v: VertexId) -> bool {
        u < self.n && v < self.n && bits::test(self.row(u), v)
    }

    pub fn neighbours(&self, v: VertexId) -> impl Iterator<Item = VertexId> + '_ {
        bits::ones(self.row(v))
    }

    pub fn degree(&self, v: VertexId) -> usize {
        bits::count(self.row(v))
    }

    pub fn min_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    /// Edges `(u, v)` with `u < v`, in row-major order.
    pub fn edges(&self) -> impl Iterator<Item = (VertexId, VertexId)> + '_ {
        (0..self.n).flat_map(move |u| self.neighbours(u).filter(move |&v| v > u).map(move |v| (u, v)))
    }

    pub fn complement(&self) -> Self {
        let mut g = Self::empty(self.n);
        for u in 0..self.n {
            for v in u + 1..self.n {
                if !self.has_edge(u, v) {
                    g.insert_edge(u, v);
                }
            }
        }
        g
    }

    pub fn induced(&self, vertices: &[VertexId]) -> Result<Self, GraphError> {
        let mut sorted = vertices.to_vec();
        sorted.sort_unstable();
        for pair in sorted.windows(2) {
            if pair[0] == pair[1] {
                return Err(GraphError::DuplicateVertex(pair[0]));
            }
        }
        if let Some(&v) = sorted.last() {
            if v >= self.n {
                return Err(GraphError::VertexOutOfRange { vertex: v, order: self.n });
            }
        }
        let mut g = Self::empty(sorted.len());
        for (i, &u) in sorted.iter().enumerate() {
            for (j, &v) in sorted.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    g.insert_edge(i, j);
                }
            }
        }
        Ok(g)
    }

    pub fn relabel(&self, perm: &[VertexId]) -> Result<Self, GraphError> {
        check_permutation(perm, self.n)?;
        let mut g = Self::empty(self.n);
        for (u, v) in self.edges() {
            g.insert_edge(perm[u], perm[v]);
        }
        Ok(g)
    }

    /// `G↔`: every edge replaced by a digon.
    pub fn bidirect(&self) -> Digraph {
        let mut d = Digraph::empty(self.n);
        for (u, v) in self.edges() {
            d.insert_arc(u, v);
            d.insert_arc(v, u);
        }
        d
    }

    /// Connected components, each sorted, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<VertexId>> {
        let mut comp = vec![usize::MAX; self.n];
        let mut out = Vec::new();
        for s in 0..self.n {
            if comp[s] != usize::MAX {
                continue;
            }
            let id = out.len();
            let mut members = vec![s];
            comp[s] = id;
            let mut i = 0;
            while i < members.len() {
                let u = members[i];
                i += 1;
                for v in self.neighbours(u) {
                    if comp[v] == usize::MAX {
                        comp[v] = id;
                        members.push(v);
                    }
                }
            }
            members.sort_unstable();
            out.push(members);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// Acyclic (as an undirected graph).
    pub fn is_forest(&self) -> bool {
        self.edges + self.components().len() == self.n
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph").field("n", &self.n).field("edges", &self.edges().collect::<Vec<_>>()).finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bidirect_doubles_edges() {
        let k3 = Graph::complete(3);
        let d = k3.bidirect();
        assert_eq!(d.arc_count(), 6);
        assert!(d.arcs().all(|(u, v)| d.has_arc(v, u)));
        assert_eq!(Graph::empty(4).bidirect().arc_count(), 0);
        assert_eq!(d.underlying_graph(), k3);
    }

    #[test]
    fn digon_underlies_single_edge() {
        let d = Digraph::from_arcs(2, [(0, 1), (1, 0)]).unwrap();
        assert_eq!(d.underlying_graph(), Graph::complete(2));
        assert_eq!(Digraph::directed_cycle(3).underlying_graph(), Graph::complete(3));
    }

    #[test]
    fn forest_and_components() {
        assert!(Graph::path(6).is_forest());
        assert!(!Graph::cycle(5).is_forest());
        let g = Graph::from_edges(5, [(0, 1), (3, 4)]).unwrap();
        assert_eq!(g.components(), vec![vec![0, 1], vec![2], vec![3, 4]]);
        assert_eq!(Graph::complete(5).complement(), Graph::empty(5));
    }
}
