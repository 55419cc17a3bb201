//! Canonical labelling by partition refinement and individualisation.
//!
//! The search tree follows the usual individualisation-refinement scheme:
//! refine the ordered partition to an equitable one, then branch on the
//! vertices of the first non-singleton cell. Each leaf is a discrete
//! partition, i.e. a relabelling; the canonical form is the relabelled
//! adjacency matrix with the smallest code among the leaves explored.
//!
//! Automorphisms are collected whenever two leaves give the same code. They
//! prune the tree in two ways: children in the same orbit of the pointwise
//! stabiliser of the current path are skipped, and a leaf equivalent to the
//! first leaf aborts the search back to the deepest common ancestor.
//!
//! Only equality of certificates is promised. The actual labelling is an
//! implementation detail and may change between versions.

use std::fmt;

use crate::bits;
use crate::digraph::Digraph;
use crate::graph::Graph;

/// Isomorphism certificate: two digraphs (with the same vertex colouring
/// multiset) have equal certificates iff they are isomorphic.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalCert(Vec<u8>);

impl CanonicalCert {
    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }

    pub fn to_hex(&self) -> String {
        hex::encode(&self.0)
    }

    pub fn from_hex(s: &str) -> Option<Self> {
        hex::decode(s).ok().map(Self)
    }
}

impl fmt::Debug for CanonicalCert {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CanonicalCert({})", self.to_hex())
    }
}

impl fmt::Display for CanonicalCert {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_hex())
    }
}

/// Result of a canonical labelling run.
#[derive(Debug, Clone)]
pub struct Labelling {
    /// `position[v]` is the canonical index of vertex `v`.
    pub position: Vec<usize>,
    pub cert: CanonicalCert,
}

pub fn canonical_cert(d: &Digraph) -> CanonicalCert {
    canonical_labelling(d, None).cert
}

pub fn graph_cert(g: &Graph) -> CanonicalCert {
    canonical_cert(&g.bidirect())
}

/// The canonically relabelled copy of `d`.
pub fn canonical_form(d: &Digraph) -> Digraph {
    let lab = canonical_labelling(d, None);
    d.relabel(&lab.position).expect("labelling is a permutation")
}

pub fn is_isomorphic(a: &Digraph, b: &Digraph) -> bool {
    a.order() == b.order() && a.arc_count() == b.arc_count() && canonical_cert(a) == canonical_cert(b)
}

/// Canonical labelling of `d`, optionally respecting a vertex colouring
/// (automorphisms must preserve colours; cells start ordered by colour).
pub fn canonical_labelling(d: &Digraph, colours: Option<&[u32]>) -> Labelling {
    labelling_and_generators(d, colours).0
}

/// Canonical labelling plus the vertex orbits of the automorphism group:
/// `orbit[v]` is the smallest vertex in the orbit of `v`.
pub(crate) fn labelling_with_orbits(d: &Digraph, colours: Option<&[u32]>) -> (Labelling, Vec<usize>) {
    let (lab, gens) = labelling_and_generators(d, colours);
    let n = d.order();
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(p: &mut [usize], mut x: usize) -> usize {
        while p[x] != x {
            p[x] = p[p[x]];
            x = p[x];
        }
        x
    }
    for g in &gens {
        for (x, &y) in g.iter().enumerate() {
            let (a, b) = (find(&mut parent, x), find(&mut parent, y));
            if a != b {
                parent[a.max(b)] = a.min(b);
            }
        }
    }
    let orbit = (0..n).map(|v| find(&mut parent, v)).collect();
    (lab, orbit)
}

fn labelling_and_generators(d: &Digraph, colours: Option<&[u32]>) -> (Labelling, Vec<Vec<usize>>) {
    let n = d.order();
    let mut initial: Vec<Vec<usize>> = Vec::new();
    let mut header = (n as u32).to_le_bytes().to_vec();
    match colours {
        Some(c) => {
            assert_eq!(c.len(), n, "one colour per vertex");
            let mut distinct: Vec<u32> = c.to_vec();
            distinct.sort_unstable();
            distinct.dedup();
            for col in distinct {
                let cell: Vec<usize> = (0..n).filter(|&v| c[v] == col).collect();
                header.extend_from_slice(&(cell.len() as u32).to_le_bytes());
                initial.push(cell);
            }
        }
        None => {
            if n > 0 {
                initial.push((0..n).collect());
            }
        }
    }
    if n == 0 {
        return (Labelling { position: Vec::new(), cert: CanonicalCert(header) }, Vec::new());
    }
    let mut s = Searcher::new(d);
    let mut path = Vec::new();
    s.search(initial, &mut path);
    let (code, position) = s.best.take().expect("search visits at least one leaf");
    let mut bytes = header;
    bytes.reserve(code.len() * 8);
    for w in code {
        bytes.extend_from_slice(&w.to_le_bytes());
    }
    (Labelling { position, cert: CanonicalCert(bytes) }, s.generators)
}

/// Whether some automorphism (preserving `colours`, if given) maps `u` to `v`.
#[cfg(test)]
fn same_orbit(d: &Digraph, colours: Option<&[u32]>, u: usize, v: usize) -> bool {
    if u == v {
        return true;
    }
    let base: Vec<u32> = match colours {
        Some(c) => c.iter().map(|&x| x.saturating_mul(2)).collect(),
        None => vec![0; d.order()],
    };
    if base[u] != base[v] {
        return false;
    }
    let mut cu = base.clone();
    cu[u] += 1;
    let mut cv = base;
    cv[v] += 1;
    canonical_labelling(d, Some(&cu)).cert == canonical_labelling(d, Some(&cv)).cert
}

/// Whether the automorphism group acts transitively on the arcs.
pub fn is_arc_transitive(d: &Digraph) -> bool {
    let arcs: Vec<(usize, usize)> = d.arcs().collect();
    let Some(&(u0, v0)) = arcs.first() else {
        return true;
    };
    let marked = |u: usize, v: usize| {
        let mut c = vec![0u32; d.order()];
        c[u] = 1;
        c[v] = 2;
        canonical_labelling(d, Some(&c)).cert
    };
    let reference = marked(u0, v0);
    arcs[1..].iter().all(|&(u, v)| marked(u, v) == reference)
}

type Leaf = (Vec<u64>, Vec<usize>);

struct Searcher<'a> {
    d: &'a Digraph,
    n: usize,
    w: usize,
    first: Option<Leaf>,
    first_path: Vec<usize>,
    best: Option<Leaf>,
    generators: Vec<Vec<usize>>,
}

impl<'a> Searcher<'a> {
    fn new(d: &'a Digraph) -> Self {
        Self { d, n: d.order(), w: d.words(), first: None, first_path: Vec::new(), best: None, generators: Vec::new() }
    }

    /// Returns `Some(level)` when the caller chain should unwind to the node
    /// whose path has length `level`.
    fn search(&mut self, cells: Vec<Vec<usize>>, path: &mut Vec<usize>) -> Option<usize> {
        let cells = self.refine(cells);
        if cells.len() == self.n {
            return self.leaf(&cells, path);
        }
        let ti = cells.iter().position(|c| c.len() > 1).expect("non-discrete partition");
        let target = cells[ti].clone();
        let mut explored: Vec<usize> = Vec::new();
        for &v in &target {
            if !explored.is_empty() && self.pruned(v, &explored, path) {
                continue;
            }
            explored.push(v);
            let mut child = Vec::with_capacity(cells.len() + 1);
            child.extend(cells[..ti].iter().cloned());
            child.push(vec![v]);
            child.push(target.iter().copied().filter(|&x| x != v).collect());
            child.extend(cells[ti + 1..].iter().cloned());
            path.push(v);
            let r = self.search(child, path);
            path.pop();
            if let Some(level) = r {
                if level < path.len() {
                    return Some(level);
                }
            }
        }
        None
    }

    fn pruned(&self, v: usize, explored: &[usize], path: &[usize]) -> bool {
        let mut parent: Vec<usize> = (0..self.n).collect();
        fn find(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        let mut any = false;
        for g in &self.generators {
            if path.iter().all(|&p| g[p] == p) {
                any = true;
                for (x, &y) in g.iter().enumerate() {
                    let (a, b) = (find(&mut parent, x), find(&mut parent, y));
                    if a != b {
                        parent[a] = b;
                    }
                }
            }
        }
        if !any {
            return false;
        }
        let rv = find(&mut parent, v);
        explored.iter().any(|&e| find(&mut parent, e) == rv)
    }

    fn leaf(&mut self, cells: &[Vec<usize>], path: &[usize]) -> Option<usize> {
        let mut position = vec![0usize; self.n];
        for (i, c) in cells.iter().enumerate() {
            position[c[0]] = i;
        }
        let w = self.w;
        let mut code = vec![0u64; self.n * w];
        for (i, c) in cells.iter().enumerate() {
            let u = c[0];
            let row = &mut code[i * w..(i + 1) * w];
            for x in self.d.out_neighbours(u) {
                bits::set(row, position[x]);
            }
        }
        match &self.first {
            None => {
                self.first = Some((code.clone(), position.clone()));
                self.first_path = path.to_vec();
                self.best = Some((code, position));
                None
            }
            Some((first_code, first_pos)) => {
                if *first_code == code {
                    let gen = automorphism(first_pos, &position);
                    self.generators.push(gen);
                    let common = path.iter().zip(&self.first_path).take_while(|(a, b)| a == b).count();
                    return Some(common);
                }
                let (best_code, best_pos) = self.best.as_ref().expect("set with first leaf");
                match code.cmp(best_code) {
                    std::cmp::Ordering::Equal => {
                        let gen = automorphism(best_pos, &position);
                        self.generators.push(gen);
                    }
                    std::cmp::Ordering::Less => self.best = Some((code, position)),
                    std::cmp::Ordering::Greater => {}
                }
                None
            }
        }
    }

    /// Refines to the coarsest equitable partition finer than `cells`,
    /// splitting by (out-count, in-count) into each splitter cell.
    fn refine(&self, mut cells: Vec<Vec<usize>>) -> Vec<Vec<usize>> {
        let n = self.n;
        let mut mask = vec![0u64; self.w];
        loop {
            let mut changed = false;
            let mut si = 0;
            while si < cells.len() && cells.len() < n {
                mask.iter_mut().for_each(|x| *x = 0);
                for &v in &cells[si] {
                    bits::set(&mut mask, v);
                }
                let mut next = Vec::with_capacity(cells.len() + 4);
                for cell in cells.drain(..) {
                    if cell.len() == 1 {
                        next.push(cell);
                        continue;
                    }
                    let mut keyed: Vec<(u64, usize)> = cell
                        .iter()
                        .map(|&v| {
                            let o = bits::and_count(self.d.out_row(v), &mask) as u64;
                            let i = bits::and_count(self.d.in_row(v), &mask) as u64;
                            ((o << 32) | i, v)
                        })
                        .collect();
                    keyed.sort_unstable();
                    if keyed[0].0 == keyed[keyed.len() - 1].0 {
                        next.push(cell);
                        continue;
                    }
                    changed = true;
                    let mut start = 0;
                    for i in 1..=keyed.len() {
                        if i == keyed.len() || keyed[i].0 != keyed[start].0 {
                            next.push(keyed[start..i].iter().map(|&(_, v)| v).collect());
                            start = i;
                        }
                    }
                }
                cells = next;
                si += 1;
            }
            if !changed {
                return cells;
            }
        }
    }
}

/// Maps each vertex of leaf `b` to the vertex holding its position in leaf `a`.
fn automorphism(pos_a: &[usize], pos_b: &[usize]) -> Vec<usize> {
    let mut at_a = vec![0usize; pos_a.len()];
    for (v, &p) in pos_a.iter().enumerate() {
        at_a[p] = v;
    }
    pos_b.iter().map(|&p| at_a[p]).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::seq::SliceRandom;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn permutations(n: usize) -> Vec<Vec<usize>> {
        if n == 0 {
            return vec![vec![]];
        }
        let mut out = Vec::new();
        for p in permutations(n - 1) {
            for i in 0..=p.len() {
                let mut q = p.clone();
                q.insert(i, n - 1);
                out.push(q);
            }
        }
        out
    }

    fn random_digraph(rng: &mut ChaCha8Rng, n: usize, p: f64) -> Digraph {
        let mut arcs = Vec::new();
        for u in 0..n {
            for v in 0..n {
                if u != v && rng.random_bool(p) {
                    arcs.push((u, v));
                }
            }
        }
        Digraph::from_arcs(n, arcs).unwrap()
    }

    #[test]
    fn invariant_under_all_relabellings() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for n in 1..=7 {
            let perms = permutations(n);
            for _ in 0..3 {
                let d = random_digraph(&mut rng, n, 0.4);
                let c = canonical_cert(&d);
                for p in &perms {
                    assert_eq!(canonical_cert(&d.relabel(p).unwrap()), c);
                }
            }
        }
    }

    #[test]
    fn distinguishes_non_isomorphic() {
        let c3 = Digraph::directed_cycle(3);
        let tt3 = Digraph::transitive_tournament(3);
        assert_ne!(canonical_cert(&c3), canonical_cert(&tt3));
        assert!(!is_isomorphic(&c3, &tt3));
    }

    #[test]
    fn highly_symmetric_inputs_terminate() {
        for n in [12, 20, 40] {
            let e = Digraph::empty(n);
            let k = Graph::complete(n).bidirect();
            assert_eq!(canonical_form(&e), e);
            assert_eq!(canonical_form(&k), k);
        }
        let c = Graph::cycle(30).bidirect();
        let mut perm: Vec<usize> = (0..30).collect();
        perm.shuffle(&mut ChaCha8Rng::seed_from_u64(1));
        assert!(is_isomorphic(&c, &c.relabel(&perm).unwrap()));
    }

    #[test]
    fn st11_relabellings_agree_and_arc_transitive() {
        let t = Digraph::circulant_tournament(11, &[1, 3, 4, 5, 9]).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let c = canonical_cert(&t);
        for _ in 0..10 {
            let mut perm: Vec<usize> = (0..11).collect();
            perm.shuffle(&mut rng);
            assert_eq!(canonical_cert(&t.relabel(&perm).unwrap()), c);
        }
        assert!(is_arc_transitive(&t));
        assert!(is_arc_transitive(&Digraph::directed_cycle(3)));
        assert!(!is_arc_transitive(&Digraph::transitive_tournament(3)));
    }

    #[test]
    fn orbit_test_uses_automorphisms() {
        let p = Graph::path(5).bidirect();
        assert!(same_orbit(&p, None, 0, 4));
        assert!(same_orbit(&p, None, 1, 3));
        assert!(!same_orbit(&p, None, 0, 2));
        let (_, orbit) = labelling_with_orbits(&p, None);
        assert_eq!(orbit, vec![0, 1, 2, 1, 0]);
        let t = Digraph::circulant_tournament(11, &[1, 3, 4, 5, 9]).unwrap();
        assert!(labelling_with_orbits(&t, None).1.iter().all(|&o| o == 0));
    }
}
