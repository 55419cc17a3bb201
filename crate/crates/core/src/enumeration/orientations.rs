//! Orientations of a graph with degree bounds.

use std::collections::HashSet;

use crate::canon::canonical_cert;
use crate::digraph::Digraph;
use crate::graph::Graph;

struct Walker<'a, F> {
    edges: Vec<(usize, usize)>,
    min_in: usize,
    min_out: usize,
    out: Vec<u64>,
    outd: Vec<usize>,
    ind: Vec<usize>,
    rem: Vec<usize>,
    visit: &'a mut F,
    stop: bool,
}

impl<F: FnMut(&Digraph) -> bool> Walker<'_, F> {
    fn feasible(&self, x: usize) -> bool {
        self.outd[x] + self.rem[x] >= self.min_out && self.ind[x] + self.rem[x] >= self.min_in
    }

    fn go(&mut self, i: usize) {
        if self.stop {
            return;
        }
        if i == self.edges.len() {
            let d = Digraph::from_out_masks(&self.out);
            if !(self.visit)(&d) {
                self.stop = true;
            }
            return;
        }
        let (a, b) = self.edges[i];
        self.rem[a] -= 1;
        self.rem[b] -= 1;
        for (u, v) in [(a, b), (b, a)] {
            self.out[u] |= 1 << v;
            self.outd[u] += 1;
            self.ind[v] += 1;
            if self.feasible(u) && self.feasible(v) {
                self.go(i + 1);
            }
            self.out[u] &= !(1 << v);
            self.outd[u] -= 1;
            self.ind[v] -= 1;
        }
        self.rem[a] += 1;
        self.rem[b] += 1;
    }
}

/// Calls `visit` on every labelled orientation of `g` whose in- and
/// out-degrees are at least `min_in`, `min_out`; stops early if `visit`
/// returns `false`. Needs `g.order() <= 64`.
pub fn for_each_orientation<F>(g: &Graph, min_in: usize, min_out: usize, mut visit: F)
where
    F: FnMut(&Digraph) -> bool,
{
    let n = g.order();
    assert!(n <= 64, "orientation walk uses 64-bit rows");
    let mut edges: Vec<(usize, usize)> = g.edges().collect();
    // Edges grouped by their larger endpoint, so that vertices settle early.
    edges.sort_by_key(|&(u, v)| (v, u));
    let rem: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut w = Walker {
        edges,
        min_in,
        min_out,
        out: vec![0; n],
        outd: vec![0; n],
        ind: vec![0; n],
        rem,
        visit: &mut visit,
        stop: false,
    };
    if (0..n).all(|x| w.feasible(x)) {
        w.go(0);
    }
}

/// One oriented graph per isomorphism class among the orientations of `g`
/// meeting the degree bounds, in order of first discovery.
pub fn gen_orientations(g: &Graph, min_in: usize, min_out: usize) -> Vec<Digraph> {
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for_each_orientation(g, min_in, min_out, |d| {
        if seen.insert(canonical_cert(d)) {
            out.push(d.clone());
        }
        true
    });
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_examples() {
        assert_eq!(gen_orientations(&Graph::cycle(3), 1, 1).len(), 1);
        assert_eq!(gen_orientations(&Graph::cycle(3), 0, 0).len(), 2);
        assert_eq!(gen_orientations(&Graph::complete(4), 0, 0).len(), 4);
        assert_eq!(gen_orientations(&Graph::complete(5), 0, 0).len(), 12);
        assert!(gen_orientations(&Graph::complete(4), 2, 2).is_empty());
        let mut count = 0;
        for_each_orientation(&Graph::complete(4), 0, 0, |_| {
            count += 1;
            count < 10
        });
        assert_eq!(count, 10);
    }
}
