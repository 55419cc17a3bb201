//! Acyclicity tests and maximum induced acyclic subdigraphs.

use crate::bits;
use crate::digraph::{Digraph, VertexId};

pub fn is_acyclic(d: &Digraph) -> bool {
    is_acyclic_mask(d, &bits::full(d.order()))
}

/// Whether `D⟨S⟩` is acyclic.
pub fn is_acyclic_subset(d: &Digraph, vertices: &[VertexId]) -> bool {
    is_acyclic_mask(d, &bits::from_indices(d.order(), vertices.iter().copied()))
}

/// Kahn's algorithm restricted to `mask`.
pub(crate) fn is_acyclic_mask(d: &Digraph, mask: &[u64]) -> bool {
    let n = d.order();
    let mut indeg = vec![0usize; n];
    let mut queue = Vec::new();
    let mut total = 0;
    for v in bits::ones(mask) {
        total += 1;
        indeg[v] = bits::and_count(d.in_row(v), mask);
        if indeg[v] == 0 {
            queue.push(v);
        }
    }
    let mut removed = 0;
    while let Some(v) = queue.pop() {
        removed += 1;
        for (i, &word) in d.out_row(v).iter().enumerate() {
            let mut m = word & mask[i];
            while m != 0 {
                let u = i * 64 + m.trailing_zeros() as usize;
                m &= m - 1;
                indeg[u] -= 1;
                if indeg[u] == 0 {
                    queue.push(u);
                }
            }
        }
    }
    removed == total
}

/// Shortest directed cycle inside `mask`, as a vertex list.
fn shortest_cycle(d: &Digraph, mask: &[u64]) -> Option<Vec<VertexId>> {
    let n = d.order();
    let w = d.words();
    let mut best: Option<Vec<VertexId>> = None;
    let mut parent = vec![usize::MAX; n];
    let mut seen = vec![0u64; w];
    for s in bits::ones(mask) {
        seen.iter_mut().for_each(|x| *x = 0);
        bits::set(&mut seen, s);
        let mut frontier = vec![s];
        let mut len = 0;
        'bfs: while !frontier.is_empty() {
            len += 1;
            if best.as_ref().is_some_and(|b| len >= b.len()) {
                break;
            }
            let mut next = Vec::new();
            for &x in &frontier {
                let row = d.out_row(x);
                if bits::test(row, s) {
                    let mut cyc = vec![x];
                    let mut z = x;
                    while z != s {
                        z = parent[z];
                        cyc.push(z);
                    }
                    cyc.reverse();
                    best = Some(cyc);
                    break 'bfs;
                }
                for i in 0..w {
                    let mut m = row[i] & mask[i] & !seen[i];
                    seen[i] |= m;
                    while m != 0 {
                        let y = i * 64 + m.trailing_zeros() as usize;
                        m &= m - 1;
                        parent[y] = x;
                        next.push(y);
                    }
                }
            }
            frontier = next;
        }
        if best.as_ref().is_some_and(|b| b.len() == 2) {
            break;
        }
    }
    best
}

struct Bnb<'a> {
    d: &'a Digraph,
    best: Vec<u64>,
    best_size: usize,
}

impl Bnb<'_> {
    /// Number of cycles found greedily whose candidate parts are pairwise
    /// disjoint; each one costs at least one candidate vertex.
    fn packing(&self, cur: &[u64], cand: &[u64]) -> usize {
        let mut left = cand.to_vec();
        let mut count = 0;
        loop {
            let all: Vec<u64> = cur.iter().zip(&left).map(|(a, b)| a | b).collect();
            let Some(cyc) = shortest_cycle(self.d, &all) else {
                return count;
            };
            count += 1;
            for v in cyc {
                bits::clear(&mut left, v);
            }
        }
    }

    fn search(&mut self, cur: Vec<u64>, mut cand: Vec<u64>) {
        // Drop candidates that close a cycle with the current set.
        let mut trial = cur.clone();
        for v in bits::ones(&cand.clone()) {
            bits::set(&mut trial, v);
            if !is_acyclic_mask(self.d, &trial) {
                bits::clear(&mut cand, v);
            }
            bits::clear(&mut trial, v);
        }
        let size = bits::count(&cur);
        let nc = bits::count(&cand);
        if size + nc <= self.best_size {
            return;
        }
        let all: Vec<u64> = cur.iter().zip(&cand).map(|(a, b)| a | b).collect();
        if is_acyclic_mask(self.d, &all) {
            self.best = all;
            self.best_size = size + nc;
            return;
        }
        if size + nc - self.packing(&cur, &cand) <= self.best_size {
            return;
        }
        let x = bits::ones(&cand)
            .max_by_key(|&v| {
                let deg = bits::and_count(self.d.out_row(v), &all) + bits::and_count(self.d.in_row(v), &all);
                (deg, std::cmp::Reverse(v))
            })
            .expect("candidates remain");
        bits::clear(&mut cand, x);
        let mut with = cur.clone();
        bits::set(&mut with, x);
        self.search(with, cand.clone());
        self.search(cur, cand);
    }
}

/// A largest vertex set inducing an acyclic subdigraph (the complement of a
/// minimum directed feedback vertex set), sorted increasingly.
pub fn max_induced_acyclic(d: &Digraph) -> Vec<VertexId> {
    let n = d.order();
    let mut greedy = vec![0u64; d.words()];
    for v in 0..n {
        bits::set(&mut greedy, v);
        if !is_acyclic_mask(d, &greedy) {
            bits::clear(&mut greedy, v);
        }
    }
    let mut bnb = Bnb { d, best_size: bits::count(&greedy), best: greedy };
    bnb.search(vec![0; d.words()], bits::full(n));
    bits::ones(&bnb.best).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cycle_finder() {
        let c5 = Digraph::directed_cycle(5);
        assert_eq!(shortest_cycle(&c5, &bits::full(5)).unwrap().len(), 5);
        let d = c5.with_arc(2, 0).unwrap();
        assert_eq!(shortest_cycle(&d, &bits::full(5)).unwrap(), vec![0, 1, 2]);
        assert!(shortest_cycle(&Digraph::transitive_tournament(5), &bits::full(5)).is_none());
    }

    #[test]
    fn small_maxima() {
        assert_eq!(max_induced_acyclic(&Digraph::directed_cycle(6)).len(), 5);
        assert_eq!(max_induced_acyclic(&Digraph::transitive_tournament(7)).len(), 7);
        let t = Digraph::circulant_tournament(7, &[1, 2, 4]).unwrap();
        assert_eq!(max_induced_acyclic(&t).len(), 3);
        assert!(max_induced_acyclic(&Digraph::empty(0)).is_empty());
    }
}
