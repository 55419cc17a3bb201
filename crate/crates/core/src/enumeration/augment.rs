//! Shared acceptance test for canonical augmentation by one vertex.
//!
//! A child on `j` vertices is kept iff its new vertex lies in the orbit of
//! the child's canonical deletion vertex: the vertex with the largest
//! canonical position among those with the smallest invariant. Each
//! isomorphism class then arises from exactly one parent class.

use crate::canon::{labelling_with_orbits, CanonicalCert};
use crate::digraph::Digraph;

pub(crate) fn accept(child: &Digraph, new_v: usize, invariant: &[u64]) -> Option<(CanonicalCert, Vec<usize>)> {
    let lowest = *invariant.iter().min()?;
    if invariant[new_v] != lowest {
        return None;
    }
    let (lab, orbit) = labelling_with_orbits(child, None);
    let w = (0..child.order())
        .filter(|&v| invariant[v] == lowest)
        .max_by_key(|&v| lab.position[v])
        .expect("some vertex has the lowest invariant");
    (orbit[w] == orbit[new_v]).then_some((lab.cert, lab.position))
}
