//! Whether every tournament of order `n` is `k`-dicolourable.
//!
//! Each order-`n` tournament is a class representative on `n-1` vertices
//! plus one vertex attached by its out-set, so all `2^(n-1)` attachments of
//! every `(n-1)`-class are covered. For a parent `T`, a subset-DP gives the
//! dichromatic number of every induced subtournament; the attachment is
//! then `k`-dicolourable iff some acyclic `A` with `χ⃗(T - A) <= k-1` stays
//! acyclic once the new vertex joins it.

use std::path::PathBuf;
use std::sync::atomic::{AtomicBool, Ordering};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::checkpoint;
use super::tournaments::{attach, tournament_masks};
use super::EnumerationError;
use crate::digraph::Digraph;

#[derive(Debug, Clone, Default)]
pub struct BoundOptions {
    pub jobs: Option<usize>,
    pub checkpoint: Option<PathBuf>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundCheck {
    pub n: usize,
    pub k: usize,
    /// Parent classes of order `n-1` processed.
    pub parents: u64,
    /// Labelled attachments examined (`parents * 2^(n-1)`).
    pub tournaments: u64,
    /// A tournament of order `n` that is not `k`-dicolourable.
    pub counterexample: Option<Digraph>,
}

impl BoundCheck {
    pub fn holds(&self) -> bool {
        self.counterexample.is_none()
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
struct State {
    n: usize,
    k: usize,
    parents_done: u64,
}

/// Transitive iff the out-degrees inside `a` are pairwise distinct.
fn transitive(out: &[u64], a: u64) -> bool {
    let mut seen = 0u64;
    let mut m = a;
    while m != 0 {
        let x = m.trailing_zeros() as usize;
        m &= m - 1;
        let bit = 1u64 << (out[x] & a).count_ones();
        if seen & bit != 0 {
            return false;
        }
        seen |= bit;
    }
    true
}

/// Acyclic sets `A` of the parent with `χ⃗(T - A) <= k - 1`.
fn good_sets(out: &[u64], k: usize) -> Vec<u64> {
    let n = out.len();
    let full = (1u64 << n) - 1;
    let size = 1usize << n;
    let acyclic: Vec<bool> = (0..size as u64).map(|a| transitive(out, a)).collect();
    let mut chi = vec![0u8; size];
    for m in 1..size {
        let low = m & m.wrapping_neg();
        let rest = m ^ low;
        let mut best = u8::MAX;
        // Subsets of `m` containing its lowest vertex.
        let mut s = rest;
        loop {
            let a = s | low;
            if acyclic[a] {
                best = best.min(chi[m ^ a].saturating_add(1));
            }
            if s == 0 {
                break;
            }
            s = (s - 1) & rest;
        }
        chi[m] = best;
    }
    (0..size as u64).filter(|&a| acyclic[a as usize] && (chi[(full ^ a) as usize] as usize) < k).collect()
}

/// With the new vertex beating exactly `s`, `A + v` is acyclic iff no
/// `x` in `A ∩ s` beats some `y` in `A - s`.
fn extends(out: &[u64], a: u64, s: u64) -> bool {
    let losers = a & !s;
    let mut m = a & s;
    while m != 0 {
        let x = m.trailing_zeros() as usize;
        m &= m - 1;
        if out[x] & losers != 0 {
            return false;
        }
    }
    true
}

fn check_parent(out: &[u64], k: usize) -> Option<Vec<u64>> {
    let good = good_sets(out, k);
    let n = out.len();
    (0..1u64 << n).find(|&s| !good.iter().any(|&a| extends(out, a, s))).map(|s| attach(out, s))
}

/// `verify_census_bound_with` under default options.
pub fn verify_census_bound(n: usize, k: usize) -> Result<BoundCheck, EnumerationError> {
    verify_census_bound_with(n, k, &BoundOptions::default())
}

/// Whether all tournaments of order `n` are `k`-dicolourable (and hence all
/// oriented graphs of order `n`). Parent classes come from the tournament
/// generator, so `n - 1` is limited by what it can list; `n = 10` is a long
/// run. Progress is checkpointed in chunks of parents.
pub fn verify_census_bound_with(n: usize, k: usize, opts: &BoundOptions) -> Result<BoundCheck, EnumerationError> {
    if n == 0 || k >= n {
        return Ok(BoundCheck { n, k, parents: 0, tournaments: 0, counterexample: None });
    }
    if k == 0 {
        let t = Digraph::transitive_tournament(n);
        return Ok(BoundCheck { n, k, parents: 0, tournaments: 0, counterexample: Some(t) });
    }
    let parents = tournament_masks(n - 1)?;
    let mut done = 0u64;
    if let Some(path) = &opts.checkpoint {
        if let Some(st) = checkpoint::load::<State>(path)? {
            if (st.n, st.k) != (n, k) {
                return Err(EnumerationError::CheckpointFormat {
                    path: path.display().to_string(),
                    reason: "saved run has different parameters".into(),
                });
            }
            done = st.parents_done.min(parents.len() as u64);
        }
    }
    let pool = checkpoint::pool(opts.jobs)?;
    const CHUNK: usize = 8192;
    let failed = AtomicBool::new(false);
    let mut counterexample = None;
    for chunk in parents[done as usize..].chunks(CHUNK) {
        let found = pool.install(|| {
            chunk
                .par_iter()
                .enumerate()
                .filter_map(|(i, p)| {
                    if failed.load(Ordering::Relaxed) {
                        return None;
                    }
                    check_parent(p, k).map(|c| {
                        failed.store(true, Ordering::Relaxed);
                        (i, c)
                    })
                })
                .min_by_key(|(i, _)| *i)
        });
        if let Some((_, c)) = found {
            counterexample = Some(Digraph::from_out_masks(&c));
            break;
        }
        done += chunk.len() as u64;
        if let Some(path) = &opts.checkpoint {
            checkpoint::store(path, &State { n, k, parents_done: done })?;
        }
    }
    Ok(BoundCheck { n, k, parents: done, tournaments: done << (n - 1), counterexample })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::solver::is_k_dicolourable;

    #[test]
    fn small_orders() {
        assert!(verify_census_bound(6, 2).unwrap().holds());
        let r = verify_census_bound(7, 2).unwrap();
        let c = r.counterexample.expect("some 7-tournament needs 3 colours");
        assert!(c.is_tournament());
        assert!(is_k_dicolourable(&c, 2).is_none());
        assert!(verify_census_bound(8, 3).unwrap().holds());
        assert!(verify_census_bound(3, 1).unwrap().counterexample.is_some());
    }

    #[test]
    fn matches_solver_on_all_small_tournaments() {
        for n in 2..=6 {
            for k in 1..=3 {
                let direct =
                    crate::enumeration::gen_tournaments(n).unwrap().iter().all(|t| is_k_dicolourable(t, k).is_some());
                assert_eq!(verify_census_bound(n, k).unwrap().holds(), direct, "n={n} k={k}");
            }
        }
    }
}
