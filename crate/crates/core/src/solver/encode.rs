//! CNF encoding of k-dicolourability, for cross-checking with external
//! SAT solvers.
//!
//! Variable `x(v, c)` says vertex `v` has colour `c`. A second family
//! `o(u, v)` for `u < v` fixes a linear order of all vertices (with
//! transitivity clauses); every arc inside a colour class must go forward in
//! that order. A class is acyclic iff such an order exists.

use crate::cnf::CnfFormula;
use crate::digraph::Digraph;

pub fn dicolouring_cnf(d: &Digraph, k: usize) -> CnfFormula {
    let n = d.order();
    let x = |v: usize, c: usize| (v * k + c + 1) as i32;
    let base = n * k;
    let o_index = |u: usize, v: usize| {
        debug_assert!(u < v);
        (base + u * n + v + 1) as i32
    };
    // before(u, v) as a literal
    let before = |u: usize, v: usize| if u < v { o_index(u, v) } else { -o_index(v, u) };
    let mut clauses = Vec::new();
    for v in 0..n {
        clauses.push((0..k).map(|c| x(v, c)).collect());
        for a in 0..k {
            for b in a + 1..k {
                clauses.push(vec![-x(v, a), -x(v, b)]);
            }
        }
    }
    for (u, v) in d.arcs() {
        for c in 0..k {
            clauses.push(vec![-x(u, c), -x(v, c), before(u, v)]);
        }
    }
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                if a != b && b != c && a != c {
                    clauses.push(vec![-before(a, b), -before(b, c), before(a, c)]);
                }
            }
        }
    }
    CnfFormula::new(base + n * n, clauses).expect("literals are in range")
}
