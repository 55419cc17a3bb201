//! Isomorph-free generation of tournaments.

use std::collections::HashSet;

use rayon::prelude::*;

use super::augment::accept;
use super::graphs::MAX_ORDER;
use super::EnumerationError;
use crate::canon::CanonicalCert;
use crate::digraph::Digraph;

/// Out-masks of the child where the new vertex `j` beats exactly `s`.
pub(crate) fn attach(parent: &[u64], s: u64) -> Vec<u64> {
    let j = parent.len();
    let mut masks: Vec<u64> =
        parent.iter().enumerate().map(|(x, &m)| if s >> x & 1 == 1 { m } else { m | 1 << j }).collect();
    masks.push(s);
    masks
}

fn children(parent: &[u64]) -> Vec<(CanonicalCert, Vec<u64>)> {
    let j = parent.len();
    let score: Vec<u32> = parent.iter().map(|m| m.count_ones()).collect();
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for s in 0u64..1 << j {
        let ds = s.count_ones();
        // The new vertex must have the smallest score in the child.
        if (0..j).any(|x| score[x] + (1 - (s >> x & 1) as u32) < ds) {
            continue;
        }
        let child = Digraph::from_out_masks(&attach(parent, s));
        let inv: Vec<u64> = (0..=j).map(|v| child.out_degree(v) as u64).collect();
        if let Some((cert, pos)) = accept(&child, j, &inv) {
            if seen.insert(cert.clone()) {
                let canon = child.relabel(&pos).expect("labelling is a permutation");
                out.push((cert, (0..=j).map(|v| canon.out_row(v)[0]).collect()));
            }
        }
    }
    out
}

/// Out-neighbourhood masks of one tournament per isomorphism class.
pub(crate) fn tournament_masks(n: usize) -> Result<Vec<Vec<u64>>, EnumerationError> {
    if n > MAX_ORDER {
        return Err(EnumerationError::OrderTooLarge { order: n, max: MAX_ORDER });
    }
    if n == 0 {
        return Ok(vec![Vec::new()]);
    }
    let mut level: Vec<Vec<u64>> = vec![vec![0]];
    for _ in 1..n {
        let mut next: Vec<(CanonicalCert, Vec<u64>)> = level.par_iter().flat_map_iter(|p| children(p)).collect();
        next.sort_unstable_by(|a, b| a.0.cmp(&b.0));
        level = next.into_iter().map(|(_, m)| m).collect();
    }
    Ok(level)
}

/// One tournament per isomorphism class on `n` vertices, in canonical form,
/// sorted by certificate.
pub fn gen_tournaments(n: usize) -> Result<Vec<Digraph>, EnumerationError> {
    Ok(tournament_masks(n)?.iter().map(|m| Digraph::from_out_masks(m)).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn known_counts() {
        let counts: Vec<usize> = (1..=8).map(|n| gen_tournaments(n).unwrap().len()).collect();
        assert_eq!(counts, [1, 1, 2, 4, 12, 56, 456, 6880]);
        assert!(gen_tournaments(5).unwrap().iter().all(|t| t.is_tournament()));
    }
}
