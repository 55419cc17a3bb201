//! Census of k-dicritical oriented graphs of a given order.
//!
//! Underlying graphs of minimum degree `2(k-1)` are generated up to
//! isomorphism, pruned by an arboricity filter, and their orientations with
//! minimum in- and out-degree `k-1` are tested for dicriticality. Distinct
//! underlying graphs give non-isomorphic orientations, so deduplication is
//! per graph.

use std::collections::{BTreeSet, HashSet};
use std::path::PathBuf;
use std::str::FromStr;
use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::Mutex;
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::arboricity::{arboricity, edge_arboricity};
use super::checkpoint;
use super::graphs::gen_graphs;
use super::orientations::for_each_orientation;
use super::EnumerationError;
use crate::canon::{canonical_cert, canonical_form, graph_cert};
use crate::digraph::Digraph;
use crate::graph::Graph;
use crate::io::{from_digraph6, to_digraph6};
use crate::solver::{is_dicritical, is_k_dicolourable};

/// Which lower bound on arboricity the underlying graph must meet.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ArboricityFilter {
    /// Vertex arboricity at least `k`.
    #[default]
    Vertex,
    /// Edge arboricity at least `k`. Weaker, since vertex arboricity never
    /// exceeds edge arboricity.
    Edge,
    None,
}

impl FromStr for ArboricityFilter {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "vertex" => Ok(Self::Vertex),
            "edge" => Ok(Self::Edge),
            "none" => Ok(Self::None),
            _ => Err(format!("unknown arboricity filter {s:?} (vertex, edge, none)")),
        }
    }
}

impl ArboricityFilter {
    fn keeps(self, g: &Graph, k: usize) -> bool {
        match self {
            Self::Vertex => arboricity(g) >= k,
            Self::Edge => edge_arboricity(g) >= k,
            Self::None => true,
        }
    }
}

#[derive(Debug, Clone, Default)]
pub struct CensusOptions {
    pub filter: ArboricityFilter,
    /// Worker threads; `None` uses the rayon default.
    pub jobs: Option<usize>,
    /// Stop after the first arc count at which a dicritical graph appears.
    pub min_arcs_only: bool,
    pub checkpoint: Option<PathBuf>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    /// Hex canonical certificate.
    pub cert: String,
    pub digraph6: String,
    pub arcs: usize,
}

impl Witness {
    fn new(d: &Digraph) -> Self {
        Self { cert: canonical_cert(d).to_hex(), digraph6: to_digraph6(d), arcs: d.arc_count() }
    }

    pub fn digraph(&self) -> Digraph {
        from_digraph6(&self.digraph6).expect("witness encodes a digraph")
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct CensusStats {
    /// Underlying graphs of the required minimum degree.
    pub graphs: u64,
    /// Those passing the arboricity filter.
    pub graphs_kept: u64,
    /// Labelled orientations meeting the degree bounds.
    pub orientations: u64,
    /// Orientations discarded as `(k-1)`-dicolourable.
    pub colourable: u64,
    /// Isomorphism classes given the full dicriticality test.
    pub classes_tested: u64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CensusReport {
    pub n: usize,
    pub k: usize,
    pub filter: ArboricityFilter,
    /// False when the run stopped at the minimum arc count.
    pub exhaustive: bool,
    /// Dicritical graphs found (all of them when `exhaustive`).
    pub total: usize,
    pub min_arcs: Option<usize>,
    /// Exactly one witness has `min_arcs` arcs.
    pub unique: bool,
    pub witnesses: Vec<Witness>,
    pub all: Vec<Witness>,
    pub stats: CensusStats,
    pub wall_time_s: f64,
}

impl CensusReport {
    pub fn is_empty(&self) -> bool {
        self.total == 0
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
struct State {
    n: usize,
    k: usize,
    filter: ArboricityFilter,
    min_arcs_only: bool,
    /// Canonical certificates of finished underlying graphs.
    done: BTreeSet<String>,
    /// Dicritical graphs found so far, in digraph6.
    found: BTreeSet<String>,
    stats: CensusStats,
}

#[derive(Default)]
struct Counters {
    orientations: AtomicU64,
    colourable: AtomicU64,
    classes: AtomicU64,
}

fn dicritical_orientations(g: &Graph, k: usize, c: &Counters) -> Vec<Digraph> {
    let mut seen = HashSet::new();
    let mut found = Vec::new();
    let (mut orient, mut col, mut classes) = (0, 0, 0);
    for_each_orientation(g, k - 1, k - 1, |d| {
        orient += 1;
        if is_k_dicolourable(d, k - 1).is_some() {
            col += 1;
            return true;
        }
        if seen.insert(canonical_cert(d)) {
            classes += 1;
            if is_dicritical(d, k).is_dicritical {
                found.push(canonical_form(d));
            }
        }
        true
    });
    c.orientations.fetch_add(orient, Ordering::Relaxed);
    c.colourable.fetch_add(col, Ordering::Relaxed);
    c.classes.fetch_add(classes, Ordering::Relaxed);
    found
}

/// `dicritical_census_with` under default options.
pub fn dicritical_census(n: usize, k: usize) -> Result<CensusReport, EnumerationError> {
    dicritical_census_with(n, k, &CensusOptions::default())
}

/// All `k`-dicritical oriented graphs on `n` vertices, one per isomorphism
/// class. With a checkpoint path, progress is saved periodically and an
/// existing file with matching parameters is resumed.
pub fn dicritical_census_with(n: usize, k: usize, opts: &CensusOptions) -> Result<CensusReport, EnumerationError> {
    if k == 0 {
        return Err(EnumerationError::Infeasible("k must be at least 1".into()));
    }
    let start = Instant::now();
    let fresh = State {
        n,
        k,
        filter: opts.filter,
        min_arcs_only: opts.min_arcs_only,
        done: BTreeSet::new(),
        found: BTreeSet::new(),
        stats: CensusStats::default(),
    };
    let mut state = fresh.clone();
    if let Some(path) = &opts.checkpoint {
        if let Some(saved) = checkpoint::load::<State>(path)? {
            if (saved.n, saved.k, saved.filter, saved.min_arcs_only) != (n, k, opts.filter, opts.min_arcs_only) {
                return Err(EnumerationError::CheckpointFormat {
                    path: path.display().to_string(),
                    reason: "saved run has different parameters".into(),
                });
            }
            state = saved;
        }
    }

    let min_degree = 2 * (k - 1);
    let graphs = if min_degree >= n.max(1) {
        // Only K_1 (for k = 1) can survive; no graph meets the degree bound otherwise.
        if n == 1 && k == 1 {
            gen_graphs(1, 0)?
        } else {
            Vec::new()
        }
    } else {
        gen_graphs(n, min_degree)?
    };
    let mut levels: Vec<(usize, Vec<(String, Graph)>)> = Vec::new();
    for g in graphs {
        let m = g.edges().count();
        let cert = graph_cert(&g).to_hex();
        match levels.iter_mut().find(|(lm, _)| *lm == m) {
            Some((_, v)) => v.push((cert, g)),
            None => levels.push((m, vec![(cert, g)])),
        }
    }
    levels.sort_by_key(|(m, _)| *m);
    for (_, level) in &mut levels {
        level.sort_by(|a, b| a.0.cmp(&b.0));
    }
    state.stats.graphs = levels.iter().map(|(_, l)| l.len() as u64).sum();

    let pool = checkpoint::pool(opts.jobs)?;
    let counters = Counters::default();
    let kept = AtomicU64::new(0);
    let shared = Mutex::new((state, Instant::now()));
    let interval = Duration::from_secs(10);
    let mut stopped_early = false;

    let save = |st: &State| -> Result<(), EnumerationError> {
        match &opts.checkpoint {
            Some(p) => checkpoint::store(p, st),
            None => Ok(()),
        }
    };

    for (m, level) in &levels {
        let pending: Vec<&(String, Graph)> = {
            let guard = shared.lock().expect("census state lock");
            level.iter().filter(|(c, _)| !guard.0.done.contains(c)).collect()
        };
        let results: Result<Vec<()>, EnumerationError> = pool.install(|| {
            pending
                .par_iter()
                .map(|(cert, g)| {
                    let found = if opts.filter.keeps(g, k) {
                        kept.fetch_add(1, Ordering::Relaxed);
                        dicritical_orientations(g, k, &counters)
                    } else {
                        Vec::new()
                    };
                    let mut guard = shared.lock().expect("census state lock");
                    let (st, last) = &mut *guard;
                    st.done.insert(cert.clone());
                    st.found.extend(found.iter().map(to_digraph6));
                    if last.elapsed() >= interval {
                        *last = Instant::now();
                        save(st)?;
                    }
                    Ok(())
                })
                .collect()
        });
        results?;
        let guard = shared.lock().expect("census state lock");
        let st = &guard.0;
        let has_level = st.found.iter().any(|s| from_digraph6(s).map(|d| d.arc_count() == *m).unwrap_or(false));
        if opts.min_arcs_only && has_level {
            stopped_early = levels.last().map(|(lm, _)| lm != m).unwrap_or(false);
            break;
        }
    }

    let (mut state, _) = shared.into_inner().expect("census state lock");
    state.stats.graphs_kept += kept.load(Ordering::Relaxed);
    state.stats.orientations += counters.orientations.load(Ordering::Relaxed);
    state.stats.colourable += counters.colourable.load(Ordering::Relaxed);
    state.stats.classes_tested += counters.classes.load(Ordering::Relaxed);
    save(&state)?;

    let mut all: Vec<Witness> =
        state.found.iter().map(|s| Witness::new(&from_digraph6(s).expect("checkpoint holds valid digraph6"))).collect();
    all.sort_by(|a, b| a.cert.cmp(&b.cert));
    all.dedup_by(|a, b| a.cert == b.cert);
    let min_arcs = all.iter().map(|w| w.arcs).min();
    let witnesses: Vec<Witness> = all.iter().filter(|w| Some(w.arcs) == min_arcs).cloned().collect();
    Ok(CensusReport {
        n,
        k,
        filter: opts.filter,
        exhaustive: !stopped_early,
        total: all.len(),
        min_arcs,
        unique: witnesses.len() == 1,
        witnesses,
        all,
        stats: state.stats,
        wall_time_s: start.elapsed().as_secs_f64(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_orders() {
        let r = dicritical_census(3, 2).unwrap();
        assert_eq!(r.total, 1);
        assert_eq!(r.min_arcs, Some(3));
        assert!(dicritical_census(5, 3).unwrap().is_empty());
        let r = dicritical_census(1, 1).unwrap();
        assert_eq!(r.total, 1);
        assert!(dicritical_census(2, 2).unwrap().is_empty());
    }

    #[test]
    fn order_four_directed_cycles() {
        // The 2-dicritical oriented graphs are exactly the directed cycles.
        let r = dicritical_census(4, 2).unwrap();
        assert_eq!(r.total, 1);
        assert!(r.unique);
        assert_eq!(r.witnesses[0].arcs, 4);
    }

    #[test]
    fn filters_agree() {
        for filter in [ArboricityFilter::Vertex, ArboricityFilter::Edge, ArboricityFilter::None] {
            let opts = CensusOptions { filter, ..Default::default() };
            assert_eq!(dicritical_census_with(5, 2, &opts).unwrap().total, 1);
        }
    }

    #[test]
    fn checkpoint_resume() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("c.json");
        let opts = CensusOptions { checkpoint: Some(path.clone()), ..Default::default() };
        let a = dicritical_census_with(5, 2, &opts).unwrap();
        assert!(path.exists());
        let b = dicritical_census_with(5, 2, &opts).unwrap();
        assert_eq!(a.all, b.all);
        let other = CensusOptions { checkpoint: Some(path), min_arcs_only: true, ..Default::default() };
        assert!(dicritical_census_with(5, 2, &other).is_err());
    }
}
