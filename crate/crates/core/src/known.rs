//! Named digraphs used throughout the test suites and the CLI.

use crate::digraph::Digraph;
use crate::io::from_digraph6;
use crate::solver::max_induced_acyclic;

/// Connection set of the 11-vertex circulant tournament of dichromatic
/// number 4.
pub const ST11_CONNECTION: [usize; 5] = [1, 3, 4, 5, 9];

/// The only 3-dicritical oriented graph on 7 vertices with 20 arcs, as found
/// by the census, in canonical form.
pub const DICRITICAL_7_20: &str = "&FAfG\\GrcT?";

pub fn st11() -> Digraph {
    Digraph::circulant_tournament(11, &ST11_CONNECTION).expect("valid connection set")
}

pub fn dicritical_7_20() -> Digraph {
    from_digraph6(DICRITICAL_7_20).expect("valid digraph6 constant")
}

/// All connection sets of circulant tournaments on an odd number `n` of
/// vertices: one of `i`, `n - i` for each `i <= (n-1)/2`.
pub fn circulant_connection_sets(n: usize) -> Vec<Vec<usize>> {
    assert!(n % 2 == 1, "circulant tournaments need odd order");
    let h = n / 2;
    (0..1u64 << h)
        .map(|mask| {
            let mut s: Vec<usize> = (1..=h).map(|i| if mask >> (i - 1) & 1 == 0 { i } else { n - i }).collect();
            s.sort_unstable();
            s
        })
        .collect()
}

/// The first (lexicographic) connection set on 13 vertices whose circulant
/// tournament has no transitive subtournament on 5 vertices.
pub fn st13() -> Option<(Vec<usize>, Digraph)> {
    let mut sets = circulant_connection_sets(13);
    sets.sort();
    sets.into_iter().find_map(|s| {
        let t = Digraph::circulant_tournament(13, &s).expect("valid connection set");
        (max_induced_acyclic(&t).len() == 4).then_some((s, t))
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::solver::is_dicritical;

    #[test]
    fn constants_decode() {
        let g = dicritical_7_20();
        assert_eq!((g.order(), g.arc_count()), (7, 20));
        assert!(g.is_oriented());
        assert!(is_dicritical(&g, 3).is_dicritical);
        assert!(st11().is_tournament());
    }

    #[test]
    fn st13_found() {
        let (s, t) = st13().unwrap();
        assert_eq!(s.len(), 6);
        assert!(t.is_k_diregular(6));
    }
}
