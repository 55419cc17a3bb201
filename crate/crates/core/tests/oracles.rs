//! Fast procedures against exhaustive reference implementations.

use dichroma::canon::{canonical_cert, is_isomorphic};
use dichroma::solver::{
    brute, dichromatic_number, is_k_dicolourable, is_k_dicolourable_sat, max_induced_acyclic, verify_dicolouring,
};
use dichroma::Digraph;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn random_digraph(rng: &mut ChaCha8Rng, n: usize, density: std::ops::Range<f64>) -> Digraph {
    let p = rng.random_range(density);
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

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for i in 0..n {
            let mut q = p.clone();
            q.insert(i, n - 1);
            out.push(q);
        }
    }
    out
}

/// Lexicographically least adjacency string over all relabellings.
fn brute_canonical(d: &Digraph, perms: &[Vec<usize>]) -> Vec<bool> {
    let n = d.order();
    perms
        .iter()
        .map(|p| {
            let e = d.relabel(p).unwrap();
            (0..n * n).map(|i| e.has_arc(i / n, i % n)).collect::<Vec<bool>>()
        })
        .min()
        .unwrap()
}

#[test]
fn canonical_certificates_match_brute_force() {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    for n in 1..=6 {
        let perms = permutations(n);
        let sample: Vec<Digraph> = (0..25).map(|_| random_digraph(&mut rng, n, 0.1..0.7)).collect();
        for a in &sample {
            for b in &sample {
                let brute_same = brute_canonical(a, &perms) == brute_canonical(b, &perms);
                assert_eq!(canonical_cert(a) == canonical_cert(b), brute_same, "{a:?} vs {b:?}");
                assert_eq!(is_isomorphic(a, b), brute_same);
            }
            let p = &perms[rng.random_range(0..perms.len())];
            assert_eq!(canonical_cert(a), canonical_cert(&a.relabel(p).unwrap()));
        }
    }
}

#[test]
fn dicolouring_matches_brute_force() {
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    for i in 0..300 {
        let n = 1 + i % 9;
        let d = random_digraph(&mut rng, n, 0.1..0.9);
        let (chi, c) = dichromatic_number(&d);
        assert_eq!(chi, brute::dichromatic_number(&d));
        assert!(verify_dicolouring(&d, &c));
        for k in 1..=3 {
            let truth = brute::is_k_dicolourable(&d, k);
            assert_eq!(is_k_dicolourable(&d, k).is_some(), truth);
            assert_eq!(is_k_dicolourable_sat(&d, k).is_some(), truth);
        }
    }
}

#[test]
fn acyclic_sets_match_brute_force() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for i in 0..150 {
        let d = random_digraph(&mut rng, 2 + i % 11, 0.1..0.6);
        assert_eq!(max_induced_acyclic(&d).len(), brute::max_induced_acyclic_size(&d));
    }
}

#[test]
fn colour_classes_of_a_tournament_are_transitive() {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    for _ in 0..40 {
        let n = rng.random_range(3..12);
        let mut arcs = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                arcs.push(if rng.random_bool(0.5) { (u, v) } else { (v, u) });
            }
        }
        let t = Digraph::from_arcs(n, arcs).unwrap();
        let (_, c) = dichromatic_number(&t);
        for class in c.classes() {
            let sub = t.induced(&class).unwrap();
            let mut outs: Vec<usize> = (0..sub.order()).map(|v| sub.out_degree(v)).collect();
            outs.sort_unstable();
            assert_eq!(outs, (0..sub.order()).collect::<Vec<_>>());
        }
    }
}
