//! k-dicriticality with re-checkable evidence.

use serde::{Deserialize, Serialize};

use super::{is_k_dicolourable, verify_dicolouring, Dicolouring};
use crate::digraph::{Digraph, VertexId};

/// Outcome for one arc `a`: a `(k-1)`-dicolouring of `D \ a`, or `None`
/// when `D \ a` still needs `k` colours.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ArcVerdict {
    pub arc: (VertexId, VertexId),
    pub colouring: Option<Dicolouring>,
}

/// Why a digraph is not `k`-dicritical.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "reason", rename_all = "snake_case")]
pub enum CriticalityFailure {
    /// Some vertex has in- or out-degree below `k - 1`. A `k`-dicritical
    /// digraph has none; isolated vertices fall in this case for `k >= 2`.
    LowDegree { vertex: VertexId, in_degree: usize, out_degree: usize },
    /// `D` is already `(k-1)`-dicolourable.
    Colourable { colouring: Dicolouring },
    /// `D` is not `k`-dicolourable.
    TooManyColours,
    /// `χ⃗(D \ a) = k`.
    RedundantArc { arc: (VertexId, VertexId) },
    /// Only `K_1` is 1-dicritical, and only the empty digraph 0-dicritical.
    WrongOrder { order: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CriticalityReport {
    pub k: usize,
    pub is_dicritical: bool,
    pub failure: Option<CriticalityFailure>,
    /// A `k`-dicolouring of `D`, when one was established.
    pub colouring: Option<Dicolouring>,
    /// Per-arc verdicts, in arc order. Empty when an earlier test failed; on
    /// a redundant arc the list stops at that arc.
    pub arcs: Vec<ArcVerdict>,
}

impl CriticalityReport {
    fn fail(k: usize, failure: CriticalityFailure) -> Self {
        Self { k, is_dicritical: false, failure: Some(failure), colouring: None, arcs: Vec::new() }
    }

    /// Re-checks every colouring stored in the report against `d`.
    pub fn certificates_valid(&self, d: &Digraph) -> bool {
        if let Some(c) = &self.colouring {
            if c.k() != self.k || !verify_dicolouring(d, c) {
                return false;
            }
        }
        if let Some(CriticalityFailure::Colourable { colouring }) = &self.failure {
            if colouring.k() + 1 != self.k || !verify_dicolouring(d, colouring) {
                return false;
            }
        }
        self.arcs.iter().all(|a| match &a.colouring {
            None => true,
            Some(c) => c.k() + 1 == self.k && d.without_arc(a.arc.0, a.arc.1).is_ok_and(|e| verify_dicolouring(&e, c)),
        })
    }
}

/// Decides whether `d` is `k`-dicritical: `χ⃗(D) = k` and every arc deletion
/// lowers the dichromatic number. Deleting a vertex removes its arcs, so
/// vertex-deletions need no separate test once isolated vertices are ruled
/// out by the degree filter.
pub fn is_dicritical(d: &Digraph, k: usize) -> CriticalityReport {
    let n = d.order();
    if k <= 1 {
        let ok = n == k && d.arc_count() == 0;
        let mut r = if ok {
            CriticalityReport { k, is_dicritical: true, failure: None, colouring: None, arcs: Vec::new() }
        } else {
            CriticalityReport::fail(k, CriticalityFailure::WrongOrder { order: n })
        };
        if ok && k == 1 {
            r.colouring = Dicolouring::new(1, vec![1]);
        }
        return r;
    }
    for v in 0..n {
        let (i, o) = (d.in_degree(v), d.out_degree(v));
        if i + 1 < k || o + 1 < k {
            return CriticalityReport::fail(
                k,
                CriticalityFailure::LowDegree { vertex: v, in_degree: i, out_degree: o },
            );
        }
    }
    if let Some(c) = is_k_dicolourable(d, k - 1) {
        return CriticalityReport::fail(k, CriticalityFailure::Colourable { colouring: c });
    }
    let Some(colouring) = is_k_dicolourable(d, k) else {
        return CriticalityReport::fail(k, CriticalityFailure::TooManyColours);
    };
    let mut arcs = Vec::with_capacity(d.arc_count());
    for (u, v) in d.arcs() {
        let e = d.without_arc(u, v).expect("arc is present");
        let c = is_k_dicolourable(&e, k - 1);
        let ok = c.is_some();
        arcs.push(ArcVerdict { arc: (u, v), colouring: c });
        if !ok {
            return CriticalityReport {
                k,
                is_dicritical: false,
                failure: Some(CriticalityFailure::RedundantArc { arc: (u, v) }),
                colouring: Some(colouring),
                arcs,
            };
        }
    }
    CriticalityReport { k, is_dicritical: true, failure: None, colouring: Some(colouring), arcs }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;

    #[test]
    fn directed_triangle_is_2_dicritical() {
        let r = is_dicritical(&Digraph::directed_cycle(3), 2);
        assert!(r.is_dicritical);
        assert_eq!(r.arcs.len(), 3);
        assert!(r.certificates_valid(&Digraph::directed_cycle(3)));
    }

    #[test]
    fn chorded_cycle_has_redundant_arc() {
        // 0→1→2→3→0 with chord 0→2: the 4-cycle is no longer needed.
        let d = Digraph::from_arcs(4, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 2)]).unwrap();
        let r = is_dicritical(&d, 2);
        assert!(!r.is_dicritical);
        assert!(matches!(r.failure, Some(CriticalityFailure::RedundantArc { .. })));
        assert!(r.certificates_valid(&d));
    }

    #[test]
    fn bidirected_cliques_and_small_cases() {
        for n in 2..=5 {
            assert!(is_dicritical(&Graph::complete(n).bidirect(), n).is_dicritical);
        }
        assert!(is_dicritical(&Digraph::empty(1), 1).is_dicritical);
        assert!(!is_dicritical(&Digraph::empty(2), 1).is_dicritical);
        let with_isolated = Digraph::directed_cycle(3).disjoint_union(&Digraph::empty(1));
        assert!(matches!(
            is_dicritical(&with_isolated, 2).failure,
            Some(CriticalityFailure::LowDegree { vertex: 3, .. })
        ));
        assert!(matches!(
            is_dicritical(&Digraph::directed_cycle(3), 3).failure,
            Some(CriticalityFailure::LowDegree { .. })
        ));
    }
}
