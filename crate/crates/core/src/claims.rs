//! Executable checks of the headline results, shared by the `verify-paper`
//! command and the acceptance tests.

use std::collections::{BTreeSet, HashSet};
use std::path::PathBuf;
use std::time::Instant;

use num_rational::Rational64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::canon::canonical_cert;
use crate::cnf::CnfFormula;
use crate::digraph::Digraph;
use crate::enumeration::{
    dicritical_census_with, gen_tournaments, verify_census_bound_with, ArboricityFilter, BoundOptions, CensusOptions,
    CensusReport,
};
use crate::io::to_digraph6;
use crate::known;
use crate::reductions::{
    make_eq_gadget, make_neq_gadget, random_3cnf, random_planar_instance, reduce_digon, reduce_oriented,
    verify_equivalence, PlanarIncidenceEmbedding,
};
use crate::solver::{
    brute, dichromatic_number, is_acyclic_subset, is_dicritical, is_k_dicolourable, is_k_dicolourable_sat,
    is_list_dicolourable, max_induced_acyclic, verify_dicolouring, ListAssignment,
};
use crate::structure::{cactus_edge_bound, cactus_induced_forest, gallai_property_check, random_cactus};
use crate::surfaces::{dichromatic_bounds, dicritical_min_arcs, dicritical_order_bound, heawood_number, Surface};

pub const DEFAULT_SEED: u64 = 20_240_601;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Level {
    /// Everything except the long-running checks.
    Quick,
    Full,
}

#[derive(Debug, Clone)]
pub struct ClaimOptions {
    pub seed: u64,
    pub jobs: Option<usize>,
    /// Directory for checkpoint files of the long runs.
    pub checkpoint_dir: Option<PathBuf>,
}

impl Default for ClaimOptions {
    fn default() -> Self {
        Self { seed: DEFAULT_SEED, jobs: None, checkpoint_dir: None }
    }
}

#[derive(Debug, Clone, Copy)]
pub struct Claim {
    pub id: u8,
    pub title: &'static str,
    /// Long-running; only part of the full level.
    pub extended: bool,
}

pub const CLAIMS: [Claim; 12] = [
    Claim { id: 1, title: "ST_11 is 4-dicritical", extended: false },
    Claim { id: 2, title: "census n=7,k=3: 20 arcs, unique; n=6 empty", extended: false },
    Claim { id: 3, title: "census n=8,9, k=3: 21 and 23 arcs, unique", extended: true },
    Claim { id: 4, title: "all 56 tournaments on 6 vertices are 2-dicolourable", extended: false },
    Claim { id: 5, title: "transitive subtournaments of order floor(log2 n)+1", extended: false },
    Claim { id: 6, title: "13-vertex circulant without TT_5", extended: false },
    Claim { id: 7, title: "3-SAT reduction equivalence (hub and planar)", extended: false },
    Claim { id: 8, title: "digon-free gadgets and oriented reduction", extended: false },
    Claim { id: 9, title: "cactus bounds and low-vertex structure", extended: false },
    Claim { id: 10, title: "surface bounds and the dichromatic table", extended: false },
    Claim { id: 11, title: "solver oracle suites", extended: false },
    Claim { id: 12, title: "all tournaments on 10 vertices are 3-dicolourable", extended: true },
];

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ClaimOutcome {
    pub id: u8,
    pub title: String,
    pub passed: bool,
    pub detail: String,
    pub seconds: f64,
    /// A counterexample in digraph6, when a check failed on a concrete digraph.
    pub artifact: Option<String>,
}

struct Failure {
    detail: String,
    artifact: Option<String>,
}

impl From<String> for Failure {
    fn from(detail: String) -> Self {
        Self { detail, artifact: None }
    }
}

type Check = Result<String, Failure>;

macro_rules! ensure {
    ($cond:expr, $($fmt:tt)+) => {
        if !$cond {
            return Err(Failure::from(format!($($fmt)+)));
        }
    };
}

fn fail_on(d: &Digraph, detail: String) -> Failure {
    Failure { detail, artifact: Some(to_digraph6(d)) }
}

pub fn run_claim(id: u8, opts: &ClaimOptions) -> ClaimOutcome {
    let claim = CLAIMS.iter().find(|c| c.id == id).expect("claim id in 1..=12");
    let start = Instant::now();
    let result = match id {
        1 => st11(),
        2 => census_seven(opts),
        3 => census_eight_nine(opts),
        4 => tournaments_six(),
        5 => stearns(),
        6 => st13(),
        7 => reduction_equivalence(opts),
        8 => oriented_gadgets(opts),
        9 => structure_suite(opts),
        10 => bounds_suite(opts),
        11 => oracle_suites(opts),
        12 => order_ten(opts),
        _ => unreachable!(),
    };
    let (passed, detail, artifact) = match result {
        Ok(d) => (true, d, None),
        Err(f) => (false, f.detail, f.artifact),
    };
    ClaimOutcome {
        id,
        title: claim.title.to_string(),
        passed,
        detail,
        seconds: start.elapsed().as_secs_f64(),
        artifact,
    }
}

pub fn run_claims(level: Level, opts: &ClaimOptions) -> Vec<ClaimOutcome> {
    CLAIMS.iter().filter(|c| level == Level::Full || !c.extended).map(|c| run_claim(c.id, opts)).collect()
}

fn st11() -> Check {
    let t = known::st11();
    let (chi, c) = dichromatic_number(&t);
    ensure!(chi == 4 && verify_dicolouring(&t, &c), "dichromatic number {chi}, expected 4");
    ensure!(t.arc_count() == 55, "{} arcs", t.arc_count());
    for (u, v) in t.arcs() {
        let e = t.without_arc(u, v).expect("arc present");
        let three = is_k_dicolourable(&e, 3);
        ensure!(three.as_ref().is_some_and(|c| verify_dicolouring(&e, c)), "ST_11 minus {u}->{v} needs 4 colours");
        if is_k_dicolourable(&e, 2).is_some() {
            return Err(fail_on(&e, format!("ST_11 minus {u}->{v} is 2-dicolourable")));
        }
    }
    let r = is_dicritical(&t, 4);
    ensure!(r.is_dicritical && r.certificates_valid(&t), "criticality report rejected");
    Ok("chi=4; all 55 deletions have chi=3".into())
}

fn census_opts(opts: &ClaimOptions, filter: ArboricityFilter) -> CensusOptions {
    CensusOptions { filter, jobs: opts.jobs, ..Default::default() }
}

fn check_witnesses(r: &CensusReport) -> Result<(), Failure> {
    for w in &r.all {
        let d = w.digraph();
        let rep = is_dicritical(&d, r.k);
        if !rep.is_dicritical || !rep.certificates_valid(&d) {
            return Err(fail_on(&d, format!("census output {} is not {}-dicritical", w.digraph6, r.k)));
        }
    }
    Ok(())
}

fn census_seven(opts: &ClaimOptions) -> Check {
    let six = dicritical_census_with(6, 3, &census_opts(opts, ArboricityFilter::Vertex)).map_err(|e| e.to_string())?;
    ensure!(six.is_empty(), "{} 3-dicritical oriented graphs on 6 vertices", six.total);
    let seven =
        dicritical_census_with(7, 3, &census_opts(opts, ArboricityFilter::Vertex)).map_err(|e| e.to_string())?;
    check_witnesses(&seven)?;
    ensure!(seven.min_arcs == Some(20) && seven.unique, "min_arcs={:?} unique={}", seven.min_arcs, seven.unique);
    let edge = dicritical_census_with(7, 3, &census_opts(opts, ArboricityFilter::Edge)).map_err(|e| e.to_string())?;
    ensure!(edge.all == seven.all, "edge-arboricity filter changes the census");
    ensure!(
        seven.witnesses[0].digraph6 == known::DICRITICAL_7_20,
        "witness {} differs from the stored graph",
        seven.witnesses[0].digraph6
    );
    Ok(format!("n=6 empty; n=7 min_arcs=20 unique=true ({} dicritical in total, filters agree)", seven.total))
}

fn census_eight_nine(opts: &ClaimOptions) -> Check {
    let mut parts = Vec::new();
    for (n, want) in [(8, 21), (9, 23)] {
        let co = CensusOptions {
            filter: ArboricityFilter::Vertex,
            jobs: opts.jobs,
            min_arcs_only: true,
            checkpoint: opts.checkpoint_dir.as_ref().map(|d| d.join(format!("census-{n}-3.json"))),
        };
        let r = dicritical_census_with(n, 3, &co).map_err(|e| e.to_string())?;
        check_witnesses(&r)?;
        ensure!(r.min_arcs == Some(want) && r.unique, "n={n}: min_arcs={:?} unique={}", r.min_arcs, r.unique);
        parts.push(format!("n={n} min_arcs={want} unique=true"));
    }
    Ok(parts.join("; "))
}

fn tournaments_six() -> Check {
    let ts = gen_tournaments(6).map_err(|e| e.to_string())?;
    ensure!(ts.len() == 56, "{} classes of 6-vertex tournaments", ts.len());
    for t in &ts {
        match is_k_dicolourable(t, 2) {
            Some(c) if verify_dicolouring(t, &c) => {}
            _ => return Err(fail_on(t, "tournament is not 2-dicolourable".into())),
        }
    }
    Ok("56 classes, each with a verified 2-dicolouring".into())
}

/// Classes of labelled tournaments on `n` vertices, by listing all of them.
fn labelled_tournament_classes(n: usize) -> usize {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    let mut seen = HashSet::new();
    for mask in 0u64..1 << pairs.len() {
        let arcs = pairs.iter().enumerate().map(|(i, &(u, v))| if mask >> i & 1 == 1 { (u, v) } else { (v, u) });
        seen.insert(canonical_cert(&Digraph::from_arcs(n, arcs).expect("valid tournament")));
    }
    seen.len()
}

fn stearns() -> Check {
    let counts = [4usize, 12, 56, 456, 6880];
    for (n, &want) in (4..=8).zip(&counts) {
        let ts = gen_tournaments(n).map_err(|e| e.to_string())?;
        ensure!(ts.len() == want, "n={n}: {} classes, expected {want}", ts.len());
        if n <= 6 {
            let brute = labelled_tournament_classes(n);
            ensure!(brute == want, "n={n}: brute-force dedup gives {brute}");
        }
        let need = n.ilog2() as usize + 1;
        for t in &ts {
            let a = max_induced_acyclic(t);
            if a.len() < need || !is_acyclic_subset(t, &a) {
                return Err(fail_on(t, format!("n={n}: largest acyclic set has {} < {need} vertices", a.len())));
            }
        }
    }
    Ok("counts 4,12,56,456,6880; every class has TT_{floor(log2 n)+1}".into())
}

fn st13() -> Check {
    let (set, t) = known::st13().ok_or_else(|| "no 13-vertex circulant tournament without TT_5".to_string())?;
    ensure!(t.is_k_diregular(6), "not 6-diregular");
    ensure!(max_induced_acyclic(&t).len() == 4, "largest acyclic set is not 4");
    for v in 0..13 {
        let d = t.without_vertex(v).expect("vertex in range");
        ensure!(
            d.min_in_degree() >= 5 && d.min_out_degree() >= 5 && d.arc_count() >= 60,
            "deleting {v} leaves min degrees {}/{} and {} arcs",
            d.min_in_degree(),
            d.min_out_degree(),
            d.arc_count()
        );
    }
    Ok(format!("connection set {set:?}; 6-diregular; max acyclic set 4; deletions have degrees >= 5 and 66 arcs"))
}

fn sign_patterns() -> CnfFormula {
    let clauses = (0..8).map(|m| (0..3).map(|i| if m >> i & 1 == 1 { i + 1 } else { -(i + 1) }).collect()).collect();
    CnfFormula::new(3, clauses).expect("valid formula")
}

fn hand_built_planar() -> Vec<(CnfFormula, PlanarIncidenceEmbedding)> {
    let star = CnfFormula::new(3, vec![vec![1, -2, 3]]).expect("valid formula");
    let star_e = PlanarIncidenceEmbedding::from_faces(&star, vec![vec![3, 0, 3, 1, 3, 2]]).expect("valid faces");
    // K_{2,3}: two clauses on the same three variables.
    let k23 = CnfFormula::new(3, vec![vec![1, 2, 3], vec![-1, 2, -3]]).expect("valid formula");
    let k23_e = PlanarIncidenceEmbedding::from_faces(&k23, vec![vec![3, 0, 4, 1], vec![3, 1, 4, 2], vec![3, 2, 4, 0]])
        .expect("valid faces");
    // Same incidence graph, other signs.
    let tight = CnfFormula::new(3, vec![vec![1, 2, 3], vec![-1, -2, -3]]).expect("valid formula");
    let tight_e =
        PlanarIncidenceEmbedding::from_faces(&tight, vec![vec![3, 0, 4, 1], vec![3, 1, 4, 2], vec![3, 2, 4, 0]])
            .expect("valid faces");
    vec![(star, star_e), (k23, k23_e), (tight, tight_e)]
}

fn reduction_equivalence(opts: &ClaimOptions) -> Check {
    let (mut sat, mut unsat) = (0, 0);
    let mut instances: Vec<CnfFormula> = (0..50u64)
        .map(|i| random_3cnf(3 + (i % 4) as usize, 1 + (i * 7 % 10) as usize, opts.seed.wrapping_add(i)))
        .collect();
    instances.push(sign_patterns());
    instances.push(CnfFormula::new(1, vec![vec![1, 1, 1], vec![-1, -1, -1]]).expect("valid formula"));
    for phi in &instances {
        let out = reduce_digon(phi, None).map_err(|e| e.to_string())?;
        ensure!(out.digraph.order() == out.roles.expected_order(), "order differs from the role map");
        let eq = verify_equivalence(phi, &out).map_err(|e| e.to_string())?;
        if !eq.holds() {
            return Err(fail_on(&out.digraph, format!("hub mode disagrees on {}", phi.to_dimacs().replace('\n', " "))));
        }
        if eq.satisfiable {
            sat += 1
        } else {
            unsat += 1
        }
    }
    let mut planar: Vec<(CnfFormula, PlanarIncidenceEmbedding)> = hand_built_planar();
    for i in 0..20u64 {
        let vars = 3 + (i % 4) as usize;
        let clauses = 1 + (i % 6) as usize;
        if let Some(pair) = random_planar_instance(vars, clauses, opts.seed.wrapping_add(1000 + i)) {
            planar.push(pair);
        }
    }
    for (phi, e) in &planar {
        let out = reduce_digon(phi, Some(e)).map_err(|e| e.to_string())?;
        let p = verify_equivalence(phi, &out).map_err(|e| e.to_string())?;
        let h =
            verify_equivalence(phi, &reduce_digon(phi, None).map_err(|e| e.to_string())?).map_err(|e| e.to_string())?;
        if !p.holds() || p.dicolourable != h.dicolourable {
            return Err(fail_on(&out.digraph, "planar wiring disagrees".into()));
        }
    }
    Ok(format!(
        "hub: {} instances ({sat} satisfiable, {unsat} not); planar: {} embedded instances agree",
        instances.len(),
        planar.len()
    ))
}

fn oriented_gadgets(opts: &ClaimOptions) -> Check {
    let g3 = known::dicritical_7_20();
    for arc in g3.arcs() {
        let eq = make_eq_gadget(&g3, arc).map_err(|e| format!("arc {arc:?}: {e}"))?;
        ensure!(eq.is_eq().map_err(|e| e.to_string())?, "arc {arc:?}: ends not forced equal");
    }
    let arc = g3.arcs().next().expect("G3 has arcs");
    let eq = make_eq_gadget(&g3, arc).map_err(|e| e.to_string())?;
    let neq = make_neq_gadget(&eq).map_err(|e| e.to_string())?;
    ensure!(neq.digraph.is_oriented(), "≠-gadget has a digon");
    ensure!(neq.is_neq().map_err(|e| e.to_string())?, "≠-gadget ends not forced apart");
    let mut instances: Vec<CnfFormula> = (0..18u64)
        .map(|i| random_3cnf(3 + (i % 2) as usize, 1 + (i % 4) as usize, opts.seed.wrapping_add(500 + i)))
        .collect();
    instances.push(CnfFormula::new(1, vec![vec![1, 1, 1], vec![-1, -1, -1]]).expect("valid formula"));
    instances.push(
        CnfFormula::new(2, vec![vec![1, 1, 2], vec![1, 1, -2], vec![-1, -1, 2], vec![-1, -1, -2]])
            .expect("valid formula"),
    );
    let mut unsat = 0;
    for phi in &instances {
        let out = reduce_oriented(phi, &g3, arc, None).map_err(|e| e.to_string())?;
        if !out.digraph.is_oriented() {
            return Err(fail_on(&out.digraph, "reduction output has a digon".into()));
        }
        let r = verify_equivalence(phi, &out).map_err(|e| e.to_string())?;
        if !r.holds() {
            return Err(fail_on(&out.digraph, "oriented reduction disagrees".into()));
        }
        unsat += usize::from(!r.satisfiable);
    }
    Ok(format!(
        "20 =-gadgets valid; ≠-gadget {} vertices/{} arcs; {} oriented instances agree ({unsat} unsatisfiable)",
        neq.digraph.order(),
        neq.digraph.arc_count(),
        instances.len()
    ))
}

fn structure_suite(opts: &ClaimOptions) -> Check {
    for i in 0..500u64 {
        let n = 1 + (i % 40) as usize;
        let g = random_cactus(n, opts.seed.wrapping_add(i));
        let b = cactus_edge_bound(&g).map_err(|e| e.to_string())?;
        let m = Rational64::from_integer(b.edges as i64);
        ensure!(m <= b.bound, "cactus {i}: {} edges exceed {}", b.edges, b.bound);
        ensure!((m == b.bound) == b.tight, "cactus {i}: tightness does not match all-triangle blocks");
        let f = cactus_induced_forest(&g).map_err(|e| e.to_string())?;
        let forest = g.induced(&f).map(|h| h.is_forest()).unwrap_or(false);
        ensure!(forest && 3 * f.len() >= 2 * n, "cactus {i}: forest of size {} on {n} vertices", f.len());
    }
    let mut checked = 0;
    for (n, k) in [(3, 2), (4, 2), (5, 2), (6, 2), (7, 3)] {
        let r =
            dicritical_census_with(n, k, &census_opts(opts, ArboricityFilter::Vertex)).map_err(|e| e.to_string())?;
        for w in &r.all {
            let d = w.digraph();
            if !gallai_property_check(&d, k) {
                return Err(fail_on(&d, format!("low vertices of a {k}-dicritical graph break the structure")));
            }
            checked += 1;
        }
    }
    Ok(format!("500 cacti satisfy the edge and forest bounds; {checked} census graphs pass the low-vertex check"))
}

/// Rows of the table of small surfaces: surfaces, characteristic, bounds.
const TABLE: [(&[&str], i64, i64, i64); 12] = [
    (&["S0"], 2, 2, 3),
    (&["N1"], 1, 3, 3),
    (&["N2"], 0, 3, 3),
    (&["S1"], 0, 3, 3),
    (&["N3"], -1, 3, 3),
    (&["S2", "N4"], -2, 3, 4),
    (&["N5"], -3, 3, 4),
    (&["S3", "N6"], -4, 3, 4),
    (&["N7"], -5, 3, 4),
    (&["S4", "N8"], -6, 3, 4),
    (&["N9"], -7, 3, 4),
    (&["S5", "N10"], -8, 4, 4),
];

fn bounds_suite(opts: &ClaimOptions) -> Check {
    let h = |c| heawood_number(c).map_err(|e| e.to_string());
    ensure!((h(0)?, h(1)?, h(-8)?) == (7, 6, 11), "Heawood numbers differ");
    for (names, c, lo, hi) in TABLE {
        for name in names {
            let s: Surface = name.parse().map_err(|e: crate::surfaces::SurfaceError| e.to_string())?;
            let r = dichromatic_bounds(&s);
            ensure!(
                (r.euler_characteristic, r.lower, r.upper) == (c, lo, hi),
                "{name}: c={} bounds [{}, {}], expected c={c} [{lo}, {hi}]",
                r.euler_characteristic,
                r.lower,
                r.upper
            );
        }
    }
    ensure!(dicritical_order_bound(4, -1, true) == Some(13), "order bound at c=-1");
    ensure!(dicritical_order_bound(4, -8, true) == Some(76), "order bound at c=-8");
    for n in 1..=200 {
        let got = dicritical_min_arcs(4, n).map_err(|e| e.to_string())?;
        ensure!(got == Rational64::new(70, 23) * n, "min arcs at n={n}: {got}");
    }
    // Census witnesses against the degree, density and order bounds that
    // apply to them. A digraph with m arcs embeds only where m <= 3(n - c).
    let mut witnesses: Vec<(Digraph, usize)> = Vec::new();
    let seven =
        dicritical_census_with(7, 3, &census_opts(opts, ArboricityFilter::Vertex)).map_err(|e| e.to_string())?;
    witnesses.extend(seven.all.iter().map(|w| (w.digraph(), 3)));
    witnesses.push((known::st11(), 4));
    for (d, k) in &witnesses {
        let (n, m) = (d.order() as i64, d.arc_count() as i64);
        ensure!(d.min_in_degree() + 1 >= *k && d.min_out_degree() + 1 >= *k, "degree bound fails");
        ensure!(m >= (*k as i64 - 1) * n, "fewer arcs than the degree bound allows");
        if *k >= 4 {
            let lb = dicritical_min_arcs(*k as i64, n).map_err(|e| e.to_string())?;
            ensure!(Rational64::from_integer(m) >= lb, "{m} arcs below {lb}");
        }
        let c_max = n - (m + 2) / 3;
        for c in (c_max - 20..=c_max.min(2)).rev() {
            if let Some(b) = dicritical_order_bound(*k as i64, c, d.is_oriented()) {
                ensure!(n <= b, "order {n} above the bound {b} at c={c}");
            }
        }
    }
    Ok(format!(
        "Heawood values, 12 table rows, order bounds 13/76, density (3+1/23)n; {} witnesses in bounds",
        witnesses.len()
    ))
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
    Digraph::from_arcs(n, arcs).expect("arcs in range")
}

fn oracle_suites(opts: &ClaimOptions) -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    for i in 0..200 {
        let n = 1 + i % 8;
        let p = rng.random_range(0.1..0.9);
        let d = random_digraph(&mut rng, n, p);
        for k in 1..=3 {
            let fast = is_k_dicolourable(&d, k);
            let sat = is_k_dicolourable_sat(&d, k);
            let truth = brute::is_k_dicolourable(&d, k);
            if fast.is_some() != truth || fast.is_some_and(|c| !verify_dicolouring(&d, &c)) {
                return Err(fail_on(&d, format!("solver and brute force disagree at k={k}")));
            }
            if sat.is_some() != truth || sat.is_some_and(|c| !verify_dicolouring(&d, &c)) {
                return Err(fail_on(&d, format!("SAT back end and brute force disagree at k={k}")));
            }
        }
    }
    for i in 0..100 {
        let n = 3 + i % 10;
        let p = rng.random_range(0.1..0.6);
        let d = random_digraph(&mut rng, n, p);
        let a = max_induced_acyclic(&d);
        if !is_acyclic_subset(&d, &a) || a.len() != brute::max_induced_acyclic_size(&d) {
            return Err(fail_on(&d, "max induced acyclic set differs from brute force".into()));
        }
    }
    for i in 0..100 {
        let n = 1 + i % 8;
        let p = rng.random_range(0.2..0.8);
        let d = random_digraph(&mut rng, n, p);
        let lists: Vec<BTreeSet<usize>> = (0..n)
            .map(|v| {
                let size = d.out_degree(v).max(d.in_degree(v)) + 1;
                let palette = size + 3;
                let mut l = BTreeSet::new();
                while l.len() < size {
                    l.insert(rng.random_range(1..=palette));
                }
                l
            })
            .collect();
        let la = ListAssignment::new(lists);
        match is_list_dicolourable(&d, &la) {
            Some(c) if verify_dicolouring(&d, &c) && (0..n).all(|v| la.list(v).contains(&c.colour(v))) => {}
            _ => return Err(fail_on(&d, "slack lists admit no list dicolouring".into())),
        }
    }
    Ok("200 k-dicolourability (search and SAT), 100 acyclic-set and 100 list-dicolouring instances agree".into())
}

fn order_ten(opts: &ClaimOptions) -> Check {
    let bo = BoundOptions {
        jobs: opts.jobs,
        checkpoint: opts.checkpoint_dir.as_ref().map(|d| d.join("tournaments-10-3.json")),
    };
    let r = verify_census_bound_with(10, 3, &bo).map_err(|e| e.to_string())?;
    if let Some(t) = &r.counterexample {
        return Err(fail_on(t, "a 10-vertex tournament needs 4 colours".into()));
    }
    let sanity = verify_census_bound_with(7, 2, &BoundOptions { jobs: opts.jobs, checkpoint: None })
        .map_err(|e| e.to_string())?;
    ensure!(!sanity.holds(), "the order-7 check should find a 3-chromatic tournament");
    Ok(format!("{} parent classes x 512 attachments, all 3-dicolourable", r.parents))
}
