//! k-dicolouring through a CDCL SAT solver with lazily added cycle clauses.
//!
//! The solver starts from "each vertex gets exactly one colour" plus a
//! clause per colour forbidding every digon and directed triangle from
//! being monochromatic. Each model is checked; every monochromatic cycle
//! found (shortest through some vertex) becomes a new clause, and solving
//! resumes until a model is acyclic or the formula is unsatisfiable.
//! Clause learning makes this much faster than plain backtracking on large
//! structured digraphs, such as the outputs of the 3-SAT reduction.

use varisat::{ExtendFormula, Lit, Solver};

use super::Dicolouring;
use crate::digraph::{Digraph, VertexId};

fn lit(n_colours: usize, v: usize, c: usize, positive: bool) -> Lit {
    Lit::from_index(v * n_colours + c, positive)
}

fn forbid(s: &mut Solver<'_>, k: usize, cycle: &[VertexId]) {
    for c in 0..k {
        let clause: Vec<Lit> = cycle.iter().map(|&v| lit(k, v, c, false)).collect();
        s.add_clause(&clause);
    }
}

/// Shortest directed cycle through `v` inside `class` (a membership mask).
fn shortest_cycle(d: &Digraph, class: &[bool], v: VertexId) -> Option<Vec<VertexId>> {
    let n = d.order();
    let mut parent = vec![usize::MAX; n];
    let mut queue = std::collections::VecDeque::new();
    for u in d.out_neighbours(v) {
        if class[u] && parent[u] == usize::MAX {
            parent[u] = v;
            queue.push_back(u);
        }
    }
    while let Some(x) = queue.pop_front() {
        if x == v {
            let mut cycle = vec![v];
            let mut z = parent[v];
            while z != v {
                cycle.push(z);
                z = parent[z];
            }
            cycle.reverse();
            return Some(cycle);
        }
        for y in d.out_neighbours(x) {
            if class[y] && parent[y] == usize::MAX {
                parent[y] = x;
                queue.push_back(y);
            }
        }
    }
    None
}

/// Vertices of `class` left after repeatedly removing sources and sinks:
/// empty iff the class is acyclic, and otherwise all lie on or between cycles.
fn cyclic_core(d: &Digraph, class: &[bool]) -> Vec<bool> {
    let n = d.order();
    let mut alive = class.to_vec();
    let mut indeg: Vec<usize> = (0..n).map(|v| d.in_neighbours(v).filter(|&u| alive[u]).count()).collect();
    let mut outdeg: Vec<usize> = (0..n).map(|v| d.out_neighbours(v).filter(|&u| alive[u]).count()).collect();
    let mut stack: Vec<VertexId> = (0..n).filter(|&v| alive[v] && (indeg[v] == 0 || outdeg[v] == 0)).collect();
    while let Some(v) = stack.pop() {
        if !alive[v] {
            continue;
        }
        alive[v] = false;
        for u in d.out_neighbours(v) {
            if alive[u] {
                indeg[u] -= 1;
                if indeg[u] == 0 {
                    stack.push(u);
                }
            }
        }
        for u in d.in_neighbours(v) {
            if alive[u] {
                outdeg[u] -= 1;
                if outdeg[u] == 0 {
                    stack.push(u);
                }
            }
        }
    }
    alive
}

/// Monochromatic cycles of `colours`: repeatedly takes the shortest cycle
/// through some vertex of the cyclic core, then drops that vertex.
fn violated_cycles(d: &Digraph, k: usize, colours: &[usize]) -> Vec<Vec<VertexId>> {
    let mut found = Vec::new();
    for c in 0..k {
        let mut class: Vec<bool> = colours.iter().map(|&x| x == c).collect();
        loop {
            let core = cyclic_core(d, &class);
            let Some(v) = core.iter().position(|&b| b) else { break };
            if let Some(cyc) = shortest_cycle(d, &core, v) {
                found.push(cyc);
            }
            class[v] = false;
        }
    }
    found
}

/// A `k`-dicolouring of `d`, or `None` if there is none. Equivalent to
/// [`super::is_k_dicolourable`].
pub fn is_k_dicolourable_sat(d: &Digraph, k: usize) -> Option<Dicolouring> {
    let n = d.order();
    if n == 0 {
        return Dicolouring::new(k, Vec::new());
    }
    if k == 0 {
        return None;
    }
    let mut s = Solver::new();
    for v in 0..n {
        let some: Vec<Lit> = (0..k).map(|c| lit(k, v, c, true)).collect();
        s.add_clause(&some);
        for a in 0..k {
            for b in a + 1..k {
                s.add_clause(&[lit(k, v, a, false), lit(k, v, b, false)]);
            }
        }
    }
    // Colour symmetry: the first vertex takes colour 1.
    s.add_clause(&[lit(k, 0, 0, true)]);
    for (u, v) in d.arcs() {
        if u < v && d.has_arc(v, u) {
            forbid(&mut s, k, &[u, v]);
        }
        for w in d.out_neighbours(v) {
            if w != u && u < v.min(w) && d.has_arc(w, u) {
                forbid(&mut s, k, &[u, v, w]);
            }
        }
    }
    loop {
        if !s.solve().expect("no proof output is requested") {
            return None;
        }
        let model = s.model().expect("model after a satisfiable solve");
        let mut colours = vec![0usize; n];
        for l in model.into_iter().filter(|l| l.is_positive()) {
            let (v, c) = (l.index() / k, l.index() % k);
            if v < n {
                colours[v] = c;
            }
        }
        let cycles = violated_cycles(d, k, &colours);
        if cycles.is_empty() {
            return Dicolouring::new(k, colours.into_iter().map(|c| c + 1).collect());
        }
        for cyc in &cycles {
            forbid(&mut s, k, cyc);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::solver::{is_k_dicolourable, verify_dicolouring};
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn agrees_with_backtracking() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..300 {
            let n = rng.random_range(1..=10);
            let p = rng.random_range(0.1..0.8);
            let arcs: Vec<_> = (0..n)
                .flat_map(|u| (0..n).map(move |v| (u, v)))
                .filter(|&(u, v)| u != v)
                .filter(|_| rng.random_bool(p))
                .collect();
            let d = Digraph::from_arcs(n, arcs).unwrap();
            for k in 1..=3 {
                let a = is_k_dicolourable(&d, k);
                let b = is_k_dicolourable_sat(&d, k);
                assert_eq!(a.is_some(), b.is_some());
                if let Some(c) = b {
                    assert!(verify_dicolouring(&d, &c));
                }
            }
        }
    }

    #[test]
    fn long_cycles_are_found_lazily() {
        let c = Digraph::directed_cycle(40);
        assert!(is_k_dicolourable_sat(&c, 1).is_none());
        let col = is_k_dicolourable_sat(&c, 2).unwrap();
        assert!(verify_dicolouring(&c, &col));
        assert!(is_k_dicolourable_sat(&Digraph::from_arcs(0, []).unwrap(), 0).is_some());
    }
}
