//! Exact decision procedures for dicolouring and related problems.
//!
//! Every positive answer carries a certificate that can be checked without
//! trusting the search: a [`Dicolouring`] is verified by testing each class
//! for acyclicity ([`verify_dicolouring`]).

mod acyclic;
pub mod brute;
mod critical;
mod encode;
mod engine;
mod sat;

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::digraph::{Digraph, VertexId};

pub use acyclic::{is_acyclic, is_acyclic_subset, max_induced_acyclic};
pub use critical::{is_dicritical, ArcVerdict, CriticalityFailure, CriticalityReport};
pub use encode::dicolouring_cnf;
pub use sat::is_k_dicolourable_sat;

/// Assignment of colours `1..=k` to the vertices of a digraph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(into = "Certificate", try_from = "Certificate")]
pub struct Dicolouring {
    k: usize,
    colours: Vec<usize>,
}

/// On-disk form, `{"n": .., "k": .., "colouring": [..]}`.
#[derive(Debug, Clone, Serialize, Deserialize)]
struct Certificate {
    n: usize,
    k: usize,
    colouring: Vec<usize>,
}

impl From<Dicolouring> for Certificate {
    fn from(c: Dicolouring) -> Self {
        Self { n: c.colours.len(), k: c.k, colouring: c.colours }
    }
}

impl TryFrom<Certificate> for Dicolouring {
    type Error = String;

    fn try_from(c: Certificate) -> Result<Self, String> {
        if c.colouring.len() != c.n {
            return Err(format!("{} colours listed for {} vertices", c.colouring.len(), c.n));
        }
        Dicolouring::new(c.k, c.colouring).ok_or_else(|| "colour outside 1..=k".to_string())
    }
}

impl Dicolouring {
    /// `None` if some colour lies outside `1..=k`.
    pub fn new(k: usize, colours: Vec<usize>) -> Option<Self> {
        colours.iter().all(|&c| (1..=k).contains(&c)).then_some(Self { k, colours })
    }

    pub(crate) fn from_zero_based(k: usize, colours: Vec<usize>) -> Self {
        Self { k, colours: colours.into_iter().map(|c| c + 1).collect() }
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn colours(&self) -> &[usize] {
        &self.colours
    }

    pub fn colour(&self, v: VertexId) -> usize {
        self.colours[v]
    }

    /// Vertices of each colour, indexed `0..k` for colours `1..=k`.
    pub fn classes(&self) -> Vec<Vec<VertexId>> {
        let mut out = vec![Vec::new(); self.k];
        for (v, &c) in self.colours.iter().enumerate() {
            out[c - 1].push(v);
        }
        out
    }
}

/// Permitted colours for each vertex.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ListAssignment {
    lists: Vec<BTreeSet<usize>>,
}

impl ListAssignment {
    pub fn new(lists: Vec<BTreeSet<usize>>) -> Self {
        Self { lists }
    }

    /// The same list for all `n` vertices.
    pub fn uniform(n: usize, colours: impl IntoIterator<Item = usize>) -> Self {
        let set: BTreeSet<usize> = colours.into_iter().collect();
        Self { lists: vec![set; n] }
    }

    pub fn list(&self, v: VertexId) -> &BTreeSet<usize> {
        &self.lists[v]
    }

    pub fn len(&self) -> usize {
        self.lists.len()
    }

    pub fn is_empty(&self) -> bool {
        self.lists.is_empty()
    }
}

/// Checks that every colour lies in `1..=k` and every class is acyclic.
pub fn verify_dicolouring(d: &Digraph, colouring: &Dicolouring) -> bool {
    if colouring.colours.len() != d.order() {
        return false;
    }
    if colouring.colours.iter().any(|&c| c == 0 || c > colouring.k) {
        return false;
    }
    colouring.classes().iter().all(|cls| is_acyclic_subset(d, cls))
}

/// A `k`-dicolouring of `d`, if one exists.
pub fn is_k_dicolourable(d: &Digraph, k: usize) -> Option<Dicolouring> {
    k_dicolouring_with_stats(d, k).0
}

/// As [`is_k_dicolourable`], also returning the number of search nodes.
pub fn k_dicolouring_with_stats(d: &Digraph, k: usize) -> (Option<Dicolouring>, u64) {
    if k >= 1 && is_acyclic(d) {
        return (Some(Dicolouring::from_zero_based(k, vec![0; d.order()])), 0);
    }
    let out = engine::Engine::new(d, k, None).run();
    (out.colours.map(|c| Dicolouring::from_zero_based(k, c)), out.nodes)
}

/// `χ⃗(D)` with an optimal dicolouring. The empty digraph has `χ⃗ = 0`.
pub fn dichromatic_number(d: &Digraph) -> (usize, Dicolouring) {
    if d.order() == 0 {
        return (0, Dicolouring { k: 0, colours: Vec::new() });
    }
    let mut k = 1;
    loop {
        if let Some(c) = is_k_dicolourable(d, k) {
            return (k, c);
        }
        k += 1;
    }
}

/// An L-dicolouring: each vertex takes a colour from its own list and every
/// colour class is acyclic. The certificate's `k` is the largest colour used
/// in any list.
pub fn is_list_dicolourable(d: &Digraph, lists: &ListAssignment) -> Option<Dicolouring> {
    assert_eq!(lists.len(), d.order(), "one list per vertex");
    let palette: Vec<usize> = lists.lists.iter().flatten().copied().collect::<BTreeSet<_>>().into_iter().collect();
    if palette.first() == Some(&0) {
        return None;
    }
    let domains: Vec<Vec<bool>> = lists.lists.iter().map(|l| palette.iter().map(|c| l.contains(c)).collect()).collect();
    let k = palette.last().copied().unwrap_or(0);
    let out = engine::Engine::new(d, palette.len(), Some(&domains)).run();
    out.colours.map(|cs| Dicolouring { k, colours: cs.into_iter().map(|i| palette[i]).collect() })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;

    fn st11() -> Digraph {
        Digraph::circulant_tournament(11, &[1, 3, 4, 5, 9]).unwrap()
    }

    #[test]
    fn acyclicity_basics() {
        assert!(is_acyclic(&Digraph::transitive_tournament(5)));
        assert!(!is_acyclic(&Digraph::from_arcs(2, [(0, 1), (1, 0)]).unwrap()));
        assert!(!is_acyclic(&st11()));
    }

    #[test]
    fn st11_needs_four_colours() {
        let t = st11();
        assert!(is_k_dicolourable(&t, 3).is_none());
        let c = is_k_dicolourable(&t, 4).unwrap();
        assert!(verify_dicolouring(&t, &c));
        assert_eq!(dichromatic_number(&t).0, 4);
    }

    #[test]
    fn bidirected_complete_graphs() {
        for n in 1..=6 {
            assert_eq!(dichromatic_number(&Graph::complete(n).bidirect()).0, n);
        }
        assert_eq!(dichromatic_number(&Digraph::empty(0)).0, 0);
        assert_eq!(dichromatic_number(&Digraph::empty(3)).0, 1);
    }

    #[test]
    fn acyclic_gets_single_colour() {
        let t = Digraph::transitive_tournament(6);
        let c = is_k_dicolourable(&t, 1).unwrap();
        assert!(c.colours().iter().all(|&x| x == 1));
    }

    #[test]
    fn certificate_json_shape() {
        let c = Dicolouring::new(2, vec![1, 2, 1]).unwrap();
        let j = serde_json::to_string(&c).unwrap();
        assert_eq!(j, r#"{"n":3,"k":2,"colouring":[1,2,1]}"#);
        let back: Dicolouring = serde_json::from_str(&j).unwrap();
        assert_eq!(back, c);
        assert!(serde_json::from_str::<Dicolouring>(r#"{"n":2,"k":2,"colouring":[1,3]}"#).is_err());
    }

    #[test]
    fn verify_rejects_bad_colourings() {
        let c3 = Digraph::directed_cycle(3);
        assert!(!verify_dicolouring(&c3, &Dicolouring::new(1, vec![1, 1, 1]).unwrap()));
        assert!(verify_dicolouring(&c3, &Dicolouring::new(2, vec![1, 1, 2]).unwrap()));
        assert!(!verify_dicolouring(&c3, &Dicolouring::new(2, vec![1, 1]).unwrap()));
    }

    #[test]
    fn list_colouring_examples() {
        let t = Digraph::transitive_tournament(4);
        let c = is_list_dicolourable(&t, &ListAssignment::uniform(4, [1])).unwrap();
        assert_eq!(c.colours(), &[1, 1, 1, 1]);
        let c3 = Digraph::directed_cycle(3);
        assert!(is_list_dicolourable(&c3, &ListAssignment::uniform(3, [1])).is_none());
        let lists = ListAssignment::new(vec![[5].into(), [5].into(), [5, 9].into()]);
        let c = is_list_dicolourable(&c3, &lists).unwrap();
        assert_eq!(c.colours(), &[5, 5, 9]);
    }

    #[test]
    fn large_sparse_instance() {
        // Long chain of digons forces alternating colours.
        let mut arcs = Vec::new();
        for v in 0..399 {
            arcs.push((v, v + 1));
            arcs.push((v + 1, v));
        }
        let d = Digraph::from_arcs(400, arcs).unwrap();
        let c = is_k_dicolourable(&d, 2).unwrap();
        assert!(verify_dicolouring(&d, &c));
        let odd = d.with_arc(0, 399).unwrap().with_arc(399, 0).unwrap();
        assert!(is_k_dicolourable(&odd, 2).is_some());
        let d401 = Graph::cycle(401).bidirect();
        assert!(is_k_dicolourable(&d401, 2).is_none());
    }
}
