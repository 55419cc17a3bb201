//! Exhaustive reference routines, used as oracles for the fast searches.
//! All of them are exponential and meant for small inputs only.

use super::acyclic::is_acyclic_mask;
use super::Dicolouring;
use crate::bits;
use crate::digraph::{Digraph, VertexId};
use crate::graph::Graph;

fn class_masks(n: usize, k: usize, colours: &[usize]) -> Vec<Vec<u64>> {
    let mut masks = vec![vec![0u64; bits::words_for(n)]; k];
    for (v, &c) in colours.iter().enumerate() {
        bits::set(&mut masks[c], v);
    }
    masks
}

/// Calls `f` with every assignment in `0..k` for `n` positions, in
/// lexicographic order; stops early when `f` returns `false`.
fn for_each_assignment(n: usize, k: usize, mut f: impl FnMut(&[usize]) -> bool) {
    if k == 0 {
        if n == 0 {
            f(&[]);
        }
        return;
    }
    let mut a = vec![0usize; n];
    loop {
        if !f(&a) {
            return;
        }
        let mut i = n;
        loop {
            if i == 0 {
                return;
            }
            i -= 1;
            a[i] += 1;
            if a[i] < k {
                break;
            }
            a[i] = 0;
        }
    }
}

/// Every `k`-dicolouring of `d` (all `kⁿ` assignments are tried).
pub fn all_dicolourings(d: &Digraph, k: usize) -> Vec<Dicolouring> {
    let mut out = Vec::new();
    for_each_assignment(d.order(), k, |a| {
        if class_masks(d.order(), k, a).iter().all(|m| is_acyclic_mask(d, m)) {
            out.push(Dicolouring::from_zero_based(k, a.to_vec()));
        }
        true
    });
    out
}

pub fn is_k_dicolourable(d: &Digraph, k: usize) -> bool {
    let mut found = false;
    for_each_assignment(d.order(), k, |a| {
        found = class_masks(d.order(), k, a).iter().all(|m| is_acyclic_mask(d, m));
        !found
    });
    found
}

pub fn dichromatic_number(d: &Digraph) -> usize {
    (0..=d.order()).find(|&k| is_k_dicolourable(d, k)).expect("n colours always suffice")
}

/// Largest acyclic induced subdigraph by scanning all `2ⁿ` subsets.
pub fn max_induced_acyclic_size(d: &Digraph) -> usize {
    let n = d.order();
    assert!(n < 64, "subset scan needs n < 64");
    let mut best = 0;
    let mut mask = vec![0u64; d.words()];
    for s in 0u64..1 << n {
        let size = s.count_ones() as usize;
        if size <= best {
            continue;
        }
        mask[0] = s;
        if is_acyclic_mask(d, &mask) {
            best = size;
        }
    }
    best
}

/// Proper vertex colouring number of an undirected graph.
pub fn chromatic_number(g: &Graph) -> usize {
    let n = g.order();
    (0..=n)
        .find(|&k| {
            let mut ok = false;
            for_each_assignment(n, k, |a| {
                ok = g.edges().all(|(u, v)| a[u] != a[v]);
                !ok
            });
            ok
        })
        .expect("n colours always suffice")
}

/// Whether `g⟨S⟩` is a forest.
pub(crate) fn induces_forest(g: &Graph, s: &[VertexId]) -> bool {
    g.induced(s).map(|h| h.is_forest()).unwrap_or(false)
}

/// Vertex arboricity by trying all partitions into `k` parts.
pub fn vertex_arboricity(g: &Graph) -> usize {
    let n = g.order();
    (0..=n)
        .find(|&k| {
            let mut ok = false;
            for_each_assignment(n, k, |a| {
                ok = (0..k).all(|c| {
                    let part: Vec<usize> = (0..n).filter(|&v| a[v] == c).collect();
                    induces_forest(g, &part)
                });
                !ok
            });
            ok
        })
        .expect("singletons are forests")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reference_values() {
        assert_eq!(dichromatic_number(&Digraph::directed_cycle(4)), 2);
        assert_eq!(all_dicolourings(&Digraph::directed_cycle(3), 2).len(), 6);
        assert_eq!(max_induced_acyclic_size(&Digraph::directed_cycle(5)), 4);
        assert_eq!(chromatic_number(&Graph::cycle(5)), 3);
        assert_eq!(vertex_arboricity(&Graph::complete(5)), 3);
        assert_eq!(vertex_arboricity(&Graph::cycle(5)), 2);
    }
}
