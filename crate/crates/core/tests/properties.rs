use dichroma::canon::canonical_cert;
use dichroma::io::{from_arc_list, from_digraph6, to_arc_list, to_digraph6};
use dichroma::solver::{is_dicritical, is_k_dicolourable, verify_dicolouring};
use dichroma::structure::structure_report;
use dichroma::Digraph;
use proptest::prelude::*;

fn digraph(max_n: usize) -> impl Strategy<Value = Digraph> {
    (1..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * n).prop_map(move |bits| {
            let arcs = (0..n * n).filter(|&i| bits[i] && i / n != i % n).map(|i| (i / n, i % n));
            Digraph::from_arcs(n, arcs).unwrap()
        })
    })
}

fn with_permutation(max_n: usize) -> impl Strategy<Value = (Digraph, Vec<usize>)> {
    digraph(max_n).prop_flat_map(|d| {
        let n = d.order();
        (Just(d), Just((0..n).collect::<Vec<_>>()).prop_shuffle())
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn digraph6_round_trip(d in digraph(20)) {
        prop_assert_eq!(from_digraph6(&to_digraph6(&d)).unwrap(), d);
    }

    #[test]
    fn arc_list_round_trip(d in digraph(20)) {
        prop_assert_eq!(from_arc_list(&to_arc_list(&d)).unwrap(), d);
    }

    #[test]
    fn serde_round_trip(d in digraph(12)) {
        let s = serde_json::to_string(&d).unwrap();
        prop_assert_eq!(serde_json::from_str::<Digraph>(&s).unwrap(), d);
    }

    #[test]
    fn certificate_is_relabelling_invariant((d, p) in with_permutation(10)) {
        prop_assert_eq!(canonical_cert(&d), canonical_cert(&d.relabel(&p).unwrap()));
    }

    #[test]
    fn colourings_are_valid_certificates(d in digraph(10), k in 1usize..4) {
        if let Some(c) = is_k_dicolourable(&d, k) {
            prop_assert!(verify_dicolouring(&d, &c));
            prop_assert_eq!(c.k(), k);
        }
    }

    #[test]
    fn criticality_certificates_check_out(d in digraph(7), k in 2usize..4) {
        let r = is_dicritical(&d, k);
        prop_assert!(r.certificates_valid(&d));
        prop_assert_eq!(r.is_dicritical, r.failure.is_none());
    }

    #[test]
    fn reversal_preserves_colourability(d in digraph(9), k in 1usize..4) {
        prop_assert_eq!(is_k_dicolourable(&d, k).is_some(), is_k_dicolourable(&d.reverse(), k).is_some());
    }

    #[test]
    fn blocks_cover_every_edge(d in digraph(12)) {
        let r = structure_report(&d);
        let g = d.underlying_graph();
        for (u, v) in g.edges() {
            prop_assert!(r.blocks.iter().any(|b| b.vertices.contains(&u) && b.vertices.contains(&v)));
        }
    }
}
