//! Vertex arboricity (partition into induced forests) and edge arboricity
//! (Nash-Williams), for graphs on at most 64 vertices.

use crate::graph::Graph;

fn component(adj: &[u64], within: u64, start: usize) -> u64 {
    let mut comp = 1u64 << start;
    let mut frontier = comp;
    while frontier != 0 {
        let mut next = 0;
        let mut f = frontier;
        while f != 0 {
            let x = f.trailing_zeros() as usize;
            f &= f - 1;
            next |= adj[x] & within;
        }
        frontier = next & !comp;
        comp |= next;
    }
    comp
}

/// Whether adding `v` to the induced forest on `part` keeps it a forest.
fn stays_forest(adj: &[u64], part: u64, v: usize) -> bool {
    let mut nb = adj[v] & part;
    while nb != 0 {
        let x = nb.trailing_zeros() as usize;
        let comp = component(adj, part, x);
        if (comp & nb) != (1 << x) {
            return false;
        }
        nb &= !comp;
    }
    true
}

fn partition(adj: &[u64], order: &[usize], parts: &mut Vec<u64>, k: usize, i: usize) -> bool {
    if i == order.len() {
        return true;
    }
    let v = order[i];
    let open = (parts.len() + 1).min(k);
    for p in 0..open {
        if p == parts.len() {
            parts.push(0);
        }
        if stays_forest(adj, parts[p], v) {
            parts[p] |= 1 << v;
            if partition(adj, order, parts, k, i + 1) {
                return true;
            }
            parts[p] &= !(1 << v);
        }
        if parts[p] == 0 {
            parts.pop();
        }
    }
    false
}

/// The least `k` such that the vertices split into `k` sets, each inducing
/// a forest, together with such a partition.
pub fn vertex_arboricity_partition(g: &Graph) -> (usize, Vec<Vec<usize>>) {
    let n = g.order();
    assert!(n <= 64, "arboricity search uses 64-bit rows");
    let adj = g.masks();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| std::cmp::Reverse(g.degree(v)));
    for k in 1..=n.max(1) {
        let mut parts = Vec::new();
        if partition(&adj, &order, &mut parts, k, 0) {
            let lists = parts.iter().map(|&m| (0..n).filter(|&v| m >> v & 1 == 1).collect()).collect();
            return (if n == 0 { 0 } else { k }, lists);
        }
    }
    unreachable!("singletons always work")
}

/// Vertex arboricity `a(G)`.
pub fn arboricity(g: &Graph) -> usize {
    vertex_arboricity_partition(g).0
}

/// Edge arboricity: `max ⌈m(H)/(n(H)−1)⌉` over induced subgraphs with at
/// least two vertices. Exhaustive over subsets, so `n <= 24`.
pub fn edge_arboricity(g: &Graph) -> usize {
    let n = g.order();
    assert!(n <= 24, "subset scan is exponential");
    let adj = g.masks();
    let mut best = 0;
    for s in 1u32..1 << n {
        let size = s.count_ones() as usize;
        if size < 2 {
            continue;
        }
        let mut twice = 0usize;
        let mut t = s;
        while t != 0 {
            let v = t.trailing_zeros() as usize;
            t &= t - 1;
            twice += (adj[v] & s as u64).count_ones() as usize;
        }
        best = best.max((twice / 2).div_ceil(size - 1));
    }
    best
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn examples() {
        assert_eq!(arboricity(&Graph::path(6)), 1);
        assert_eq!(arboricity(&Graph::complete(5)), 3);
        assert_eq!(arboricity(&Graph::cycle(5)), 2);
        assert_eq!(arboricity(&Graph::empty(0)), 0);
        let (k, parts) = vertex_arboricity_partition(&Graph::complete(6));
        assert_eq!(k, 3);
        assert!(parts.iter().all(|p| crate::solver::brute::induces_forest(&Graph::complete(6), p)));
        assert_eq!(edge_arboricity(&Graph::complete(5)), 3);
        assert_eq!(edge_arboricity(&Graph::cycle(5)), 2);
        assert_eq!(edge_arboricity(&Graph::path(4)), 1);
    }
}
