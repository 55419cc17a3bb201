//! Dense digraphs on indexed vertices.
//!
//! A [`Digraph`] stores its arc relation as two bit matrices (out-rows and
//! in-rows), so arc tests are O(1) and neighbourhood intersections are word
//! operations. Values are immutable: every edit returns a new digraph.
//!
//! Digons (a pair of opposite arcs) are allowed; self-loops are not. The
//! degree of a vertex is `d⁺(v) + d⁻(v)`, so a vertex on a digon gains two.

use std::collections::BTreeSet;
use std::fmt;

use crate::bits;
use crate::error::GraphError;
use crate::graph::Graph;

/// Index of a vertex, always strictly less than the owning graph's order.
pub type VertexId = usize;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Digraph {
    n: usize,
    words: usize,
    out: Vec<u64>,
    inn: Vec<u64>,
    arcs: usize,
}

impl Digraph {
    /// The arcless digraph of order `n`.
    pub fn empty(n: usize) -> Self {
        let words = bits::words_for(n);
        Self { n, words, out: vec![0; n * words], inn: vec![0; n * words], arcs: 0 }
    }

    /// Builds a digraph from an arc list. Duplicate arcs collapse.
    pub fn from_arcs<I>(n: usize, arcs: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (VertexId, VertexId)>,
    {
        let mut d = Self::empty(n);
        for (u, v) in arcs {
            d.check_vertex(u)?;
            d.check_vertex(v)?;
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            d.insert_arc(u, v);
        }
        Ok(d)
    }

    /// Directed cycle `0 → 1 → … → n-1 → 0`.
    pub fn directed_cycle(n: usize) -> Self {
        let mut d = Self::empty(n);
        if n >= 2 {
            for v in 0..n {
                d.insert_arc(v, (v + 1) % n);
            }
        }
        d
    }

    /// Transitive tournament with arcs `i → j` for all `i < j`.
    pub fn transitive_tournament(n: usize) -> Self {
        let mut d = Self::empty(n);
        for i in 0..n {
            for j in i + 1..n {
                d.insert_arc(i, j);
            }
        }
        d
    }

    /// Circulant tournament on `Z_n` with arcs `v → v + s (mod n)` for `s` in
    /// the connection set. The set must contain exactly one of `d`, `n - d`
    /// for every `d` in `1..n`, which forces `n` odd.
    pub fn circulant_tournament(n: usize, connection_set: &[usize]) -> Result<Self, GraphError> {
        let set: BTreeSet<usize> = connection_set.iter().copied().collect();
        if n == 0 {
            return Err(GraphError::InvalidConnectionSet("order must be positive".into()));
        }
        if n % 2 == 0 {
            return Err(GraphError::InvalidConnectionSet(format!(
                "no circulant tournament exists on an even order ({n})"
            )));
        }
        for &s in &set {
            if s == 0 || s >= n {
                return Err(GraphError::InvalidConnectionSet(format!("shift {s} outside 1..{n}")));
            }
        }
        for s in 1..=n / 2 {
            match (set.contains(&s), set.contains(&(n - s))) {
                (true, true) => {
                    return Err(GraphError::InvalidConnectionSet(format!("both {s} and {} present", n - s)))
                }
                (false, false) => {
                    return Err(GraphError::InvalidConnectionSet(format!("neither {s} nor {} present", n - s)))
                }
                _ => {}
            }
        }
        let mut d = Self::empty(n);
        for v in 0..n {
            for &s in &set {
                d.insert_arc(v, (v + s) % n);
            }
        }
        Ok(d)
    }

    /// Builds from out-neighbourhood masks; only valid for `n <= 64`.
    pub(crate) fn from_out_masks(masks: &[u64]) -> Self {
        let n = masks.len();
        debug_assert!(n <= 64);
        let mut d = Self::empty(n);
        for (u, &m) in masks.iter().enumerate() {
            for v in bits::ones(&[m]) {
                d.insert_arc(u, v);
            }
        }
        d
    }

    #[inline]
    pub(crate) fn insert_arc(&mut self, u: VertexId, v: VertexId) {
        let w = self.words;
        if !bits::test(&self.out[u * w..(u + 1) * w], v) {
            bits::set(&mut self.out[u * w..(u + 1) * w], v);
            bits::set(&mut self.inn[v * w..(v + 1) * w], u);
            self.arcs += 1;
        }
    }

    #[inline]
    pub(crate) fn remove_arc(&mut self, u: VertexId, v: VertexId) {
        let w = self.words;
        if bits::test(&self.out[u * w..(u + 1) * w], v) {
            bits::clear(&mut self.out[u * w..(u + 1) * w], v);
            bits::clear(&mut self.inn[v * w..(v + 1) * w], u);
            self.arcs -= 1;
        }
    }

    fn check_vertex(&self, v: VertexId) -> Result<(), GraphError> {
        if v < self.n {
            Ok(())
        } else {
            Err(GraphError::VertexOutOfRange { vertex: v, order: self.n })
        }
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn arc_count(&self) -> usize {
        self.arcs
    }

    /// Number of 64-bit words per adjacency row.
    pub(crate) fn words(&self) -> usize {
        self.words
    }

    #[inline]
    pub fn has_arc(&self, u: VertexId, v: VertexId) -> bool {
        u < self.n && v < self.n && bits::test(self.out_row(u), v)
    }

    #[inline]
    pub(crate) fn out_row(&self, v: VertexId) -> &[u64] {
        &self.out[v * self.words..(v + 1) * self.words]
    }

    #[inline]
    pub(crate) fn in_row(&self, v: VertexId) -> &[u64] {
        &self.inn[v * self.words..(v + 1) * self.words]
    }

    pub fn out_neighbours(&self, v: VertexId) -> impl Iterator<Item = VertexId> + '_ {
        bits::ones(self.out_row(v))
    }

    pub fn in_neighbours(&self, v: VertexId) -> impl Iterator<Item = VertexId> + '_ {
        bits::ones(self.in_row(v))
    }

    pub fn out_degree(&self, v: VertexId) -> usize {
        bits::count(self.out_row(v))
    }

    pub fn in_degree(&self, v: VertexId) -> usize {
        bits::count(self.in_row(v))
    }

    /// `d⁺(v) + d⁻(v)`.
    pub fn degree(&self, v: VertexId) -> usize {
        self.out_degree(v) + self.in_degree(v)
    }

    pub fn min_out_degree(&self) -> usize {
        (0..self.n).map(|v| self.out_degree(v)).min().unwrap_or(0)
    }

    pub fn min_in_degree(&self) -> usize {
        (0..self.n).map(|v| self.in_degree(v)).min().unwrap_or(0)
    }

    /// Arcs in row-major order.
    pub fn arcs(&self) -> impl Iterator<Item = (VertexId, VertexId)> + '_ {
        (0..self.n).flat_map(move |u| self.out_neighbours(u).map(move |v| (u, v)))
    }

    pub fn has_digon(&self) -> bool {
        (0..self.n).any(|v| bits::intersects(self.out_row(v), self.in_row(v)))
    }

    /// No digons (digirth at least 3).
    pub fn is_oriented(&self) -> bool {
        !self.has_digon()
    }

    /// Exactly one arc between every pair of distinct vertices.
    pub fn is_tournament(&self) -> bool {
        self.is_oriented() && self.arcs == self.n * self.n.saturating_sub(1) / 2
    }

    /// Every in- and out-degree equals `k`.
    pub fn is_k_diregular(&self, k: usize) -> bool {
        (0..self.n).all(|v| self.out_degree(v) == k && self.in_degree(v) == k)
    }

    /// Edge `uv` present iff at least one of `(u, v)`, `(v, u)` is an arc.
    pub fn underlying_graph(&self) -> Graph {
        let mut g = Graph::empty(self.n);
        for (u, v) in self.arcs() {
            g.insert_edge(u, v);
        }
        g
    }

    pub fn with_arc(&self, u: VertexId, v: VertexId) -> Result<Self, GraphError> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(GraphError::SelfLoop(u));
        }
        let mut d = self.clone();
        d.insert_arc(u, v);
        Ok(d)
    }

    /// `D \ uv`.
    pub fn without_arc(&self, u: VertexId, v: VertexId) -> Result<Self, GraphError> {
        if !self.has_arc(u, v) {
            return Err(GraphError::MissingArc(u, v));
        }
        let mut d = self.clone();
        d.remove_arc(u, v);
        Ok(d)
    }

    /// `D - v`; the remaining vertices keep their relative order.
    pub fn without_vertex(&self, v: VertexId) -> Result<Self, GraphError> {
        self.check_vertex(v)?;
        let keep: Vec<VertexId> = (0..self.n).filter(|&u| u != v).collect();
        self.induced(&keep)
    }

    /// `D⟨S⟩`, re-indexed in increasing order of `S`.
    pub fn induced(&self, vertices: &[VertexId]) -> Result<Self, GraphError> {
        let mut sorted = vertices.to_vec();
        sorted.sort_unstable();
        for pair in sorted.windows(2) {
            if pair[0] == pair[1] {
                return Err(GraphError::DuplicateVertex(pair[0]));
            }
        }
        for &v in &sorted {
            self.check_vertex(v)?;
        }
        let mut d = Self::empty(sorted.len());
        for (i, &u) in sorted.iter().enumerate() {
            for (j, &v) in sorted.iter().enumerate() {
                if self.has_arc(u, v) {
                    d.insert_arc(i, j);
                }
            }
        }
        Ok(d)
    }

    /// Reverses every arc.
    pub fn reverse(&self) -> Self {
        Self { n: self.n, words: self.words, out: self.inn.clone(), inn: self.out.clone(), arcs: self.arcs }
    }

    /// Image under `perm`, which maps each old vertex to its new index.
    pub fn relabel(&self, perm: &[VertexId]) -> Result<Self, GraphError> {
        check_permutation(perm, self.n)?;
        let mut d = Self::empty(self.n);
        for (u, v) in self.arcs() {
            d.insert_arc(perm[u], perm[v]);
        }
        Ok(d)
    }

    /// Disjoint union; the vertices of `other` are shifted by `self.order()`.
    pub fn disjoint_union(&self, other: &Digraph) -> Self {
        let off = self.n;
        let mut d = Self::empty(self.n + other.n);
        for (u, v) in self.arcs() {
            d.insert_arc(u, v);
        }
        for (u, v) in other.arcs() {
            d.insert_arc(u + off, v + off);
        }
        d
    }
}

pub(crate) fn check_permutation(perm: &[usize], n: usize) -> Result<(), GraphError> {
    if perm.len() != n {
        return Err(GraphError::VertexOutOfRange { vertex: perm.len(), order: n });
    }
    let mut seen = vec![false; n];
    for &p in perm {
        if p >= n {
            return Err(GraphError::VertexOutOfRange { vertex: p, order: n });
        }
        if std::mem::replace(&mut seen[p], true) {
            return Err(GraphError::DuplicateVertex(p));
        }
    }
    Ok(())
}

impl fmt::Debug for Digraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Digraph").field("n", &self.n).field("arcs", &self.arcs().collect::<Vec<_>>()).finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn st11() -> Digraph {
        Digraph::circulant_tournament(11, &[1, 3, 4, 5, 9]).unwrap()
    }

    #[test]
    fn build_collapses_duplicates() {
        let d = Digraph::from_arcs(3, [(0, 1), (1, 2), (2, 0), (0, 1)]).unwrap();
        assert_eq!(d.arc_count(), 3);
        let digon = Digraph::from_arcs(2, [(0, 1), (1, 0)]).unwrap();
        assert_eq!(digon.arc_count(), 2);
        assert!(digon.has_digon());
        assert!(!digon.is_oriented());
    }

    #[test]
    fn build_rejects_loops_and_range() {
        assert_eq!(Digraph::from_arcs(1, [(0, 0)]), Err(GraphError::SelfLoop(0)));
        assert!(matches!(Digraph::from_arcs(2, [(0, 2)]), Err(GraphError::VertexOutOfRange { vertex: 2, order: 2 })));
    }

    #[test]
    fn circulant_st11() {
        let t = st11();
        assert_eq!(t.arc_count(), 55);
        assert!(t.is_tournament());
        assert!(t.is_k_diregular(5));
        assert_eq!(t.underlying_graph(), Graph::complete(11));
    }

    #[test]
    fn circulant_triangle_and_errors() {
        let t = Digraph::circulant_tournament(3, &[1]).unwrap();
        assert_eq!(t, Digraph::directed_cycle(3));
        assert!(matches!(
            Digraph::circulant_tournament(11, &[1, 2, 3, 4, 5, 9]),
            Err(GraphError::InvalidConnectionSet(_))
        ));
        assert!(Digraph::circulant_tournament(11, &[1, 3, 4, 5]).is_err());
        assert!(Digraph::circulant_tournament(4, &[1]).is_err());
    }

    #[test]
    fn sub_structures() {
        let c4 = Digraph::directed_cycle(4);
        let sub = c4.induced(&[0, 1]).unwrap();
        assert_eq!(sub.arc_count(), 1);
        assert!(sub.has_arc(0, 1));

        let t = st11();
        let six = t.induced(&[0, 2, 3, 5, 8, 10]).unwrap();
        assert!(six.is_tournament());
        assert_eq!(six.arc_count(), 15);

        let cut = t.without_arc(4, 5).unwrap();
        assert_eq!(cut.arc_count(), 54);
        assert_eq!(cut.with_arc(4, 5).unwrap(), t);
        assert_eq!(t.without_arc(5, 4), Err(GraphError::MissingArc(5, 4)));

        let minus = t.without_vertex(0).unwrap();
        assert_eq!(minus.order(), 10);
        assert_eq!(minus.arc_count(), 45);
        assert!(t.induced(&[0, 0]).is_err());
    }

    #[test]
    fn degree_sums_match_arc_count() {
        let t = st11().without_arc(0, 1).unwrap();
        let outs: usize = (0..11).map(|v| t.out_degree(v)).sum();
        let ins: usize = (0..11).map(|v| t.in_degree(v)).sum();
        assert_eq!(outs, t.arc_count());
        assert_eq!(ins, t.arc_count());
    }

    #[test]
    fn rows_span_several_words() {
        let d = Digraph::directed_cycle(130);
        assert_eq!(d.arc_count(), 130);
        assert!(d.has_arc(129, 0));
        assert!(d.has_arc(63, 64));
        assert_eq!(d.out_neighbours(127).collect::<Vec<_>>(), vec![128]);
        assert_eq!(d.reverse().out_neighbours(0).collect::<Vec<_>>(), vec![129]);
    }
}
