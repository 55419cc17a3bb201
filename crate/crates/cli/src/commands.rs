use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::time::Instant;

use dichroma::claims::{run_claim, ClaimOptions, ClaimOutcome, CLAIMS};
use dichroma::enumeration::{
    dicritical_census_with, verify_census_bound_with, ArboricityFilter, BoundOptions, CensusOptions,
};
use dichroma::io::{to_arc_list, to_digraph6};
use dichroma::reductions::{
    reduce_digon, reduce_oriented, verify_equivalence, PlanarIncidenceEmbedding, ReductionOutput,
};
use dichroma::solver::{
    dichromatic_number, dicolouring_cnf, is_dicritical, is_k_dicolourable, verify_dicolouring, Dicolouring,
};
use dichroma::structure::structure_report;
use dichroma::surfaces::{dichromatic_bounds, heawood_number, table_surfaces, BoundRecord, Surface, SurfaceKind};
use dichroma::{known, Digraph};
use serde::Serialize;
use serde_json::{json, Value};

use crate::input::{load_cnf, load_digraph, load_json, write, Inputs};
use crate::report::{InputRecord, RunReport};
use crate::{Cli, CliError, Command, Filter, GadgetKind, GraphFormat, Level, Mode};

/// What a command produced: human text, JSON results, and an exit code.
struct Output {
    text: String,
    results: Value,
    timings: BTreeMap<String, f64>,
    code: u8,
}

impl Output {
    fn new(text: String, results: impl Serialize) -> Self {
        let results = serde_json::to_value(results).expect("results serialise");
        Self { text, results, timings: BTreeMap::new(), code: 0 }
    }
}

fn to_json(v: &impl Serialize) -> String {
    serde_json::to_string_pretty(v).expect("value serialises")
}

fn render(d: &Digraph, f: GraphFormat) -> String {
    match f {
        GraphFormat::D6 => to_digraph6(d) + "\n",
        GraphFormat::Arclist => to_arc_list(d),
    }
}

fn command_name(c: &Command) -> &'static str {
    match c {
        Command::Dichi { .. } => "dichi",
        Command::VerifyCert { .. } => "verify-cert",
        Command::CriticalCheck { .. } => "critical-check",
        Command::Structure { .. } => "structure",
        Command::Census { .. } => "census",
        Command::Tournaments { .. } => "tournaments",
        Command::Bounds { .. } => "bounds",
        Command::Reduce { .. } => "reduce",
        Command::Encode { .. } => "encode",
        Command::Convert { .. } => "convert",
        Command::VerifyPaper { .. } => "verify-paper",
    }
}

pub fn run(cli: &Cli, argv: &[String]) -> Result<u8, CliError> {
    let mut inputs = Inputs::default();
    let start = Instant::now();
    let mut out = dispatch(cli, &mut inputs)?;
    out.timings.insert("wall_s".into(), start.elapsed().as_secs_f64());
    if cli.global.json {
        println!("{}", to_json(&out.results));
    } else {
        print!("{}", out.text);
    }
    if let Some(path) = &cli.global.report {
        let report = RunReport {
            command: command_name(&cli.command).into(),
            args: argv.iter().skip(1).cloned().collect(),
            version: env!("CARGO_PKG_VERSION").into(),
            seed: cli.global.seed,
            inputs_digest: inputs.digest(),
            inputs: inputs.files.iter().map(|(p, h)| InputRecord { path: p.clone(), sha256: h.clone() }).collect(),
            exit_code: out.code,
            results: out.results,
            timings: out.timings,
        };
        write(path, &(to_json(&report) + "\n"))?;
    }
    Ok(out.code)
}

fn dispatch(cli: &Cli, inputs: &mut Inputs) -> Result<Output, CliError> {
    let g = &cli.global;
    let fmt = g.format;
    match &cli.command {
        Command::Dichi { input, k, cert } => {
            let d = load_digraph(inputs, input, fmt)?;
            dichi(&d, *k, cert.as_deref())
        }
        Command::VerifyCert { input, cert } => {
            let d = load_digraph(inputs, input, fmt)?;
            let c: Dicolouring = load_json(inputs, cert)?;
            let valid = c.colours().len() == d.order() && verify_dicolouring(&d, &c);
            let mut out = Output::new(format!("valid={valid} k={}\n", c.k()), json!({ "valid": valid, "k": c.k() }));
            out.code = u8::from(!valid);
            Ok(out)
        }
        Command::CriticalCheck { input, k, out: path } => {
            let d = load_digraph(inputs, input, fmt)?;
            critical(&d, *k, path.as_deref(), &g.artifacts)
        }
        Command::Structure { input } => {
            let d = load_digraph(inputs, input, fmt)?;
            let r = structure_report(&d);
            let mut text = format!(
                "n={} m={} blocks={} cactus={} directed_cactus={} gallai_forest={}\n",
                r.n,
                r.m,
                r.blocks.len(),
                r.is_cactus,
                r.is_directed_cactus,
                r.is_directed_gallai_forest
            );
            for b in &r.blocks {
                let kind = serde_json::to_value(b.kind).expect("kind serialises");
                let _ = writeln!(text, "block {} {:?}", kind.as_str().unwrap_or("?"), b.vertices);
            }
            Ok(Output::new(text, r))
        }
        Command::Census { n, k, filter, min_arcs_only, checkpoint, out } => {
            let opts = CensusOptions {
                filter: match filter {
                    Filter::Vertex => ArboricityFilter::Vertex,
                    Filter::Edge => ArboricityFilter::Edge,
                    Filter::None => ArboricityFilter::None,
                },
                jobs: g.jobs,
                min_arcs_only: *min_arcs_only,
                checkpoint: checkpoint.clone(),
            };
            census(*n, *k, &opts, out.as_deref())
        }
        Command::Tournaments { n, k, checkpoint } => {
            let r = verify_census_bound_with(*n, *k, &BoundOptions { jobs: g.jobs, checkpoint: checkpoint.clone() })?;
            let mut text = format!(
                "n={} k={} holds={} parents={} tournaments={}\n",
                r.n,
                r.k,
                r.holds(),
                r.parents,
                r.tournaments
            );
            let mut code = 0;
            if let Some(c) = &r.counterexample {
                let path = g.artifacts.join(format!("tournament-n{n}-k{k}.d6"));
                write(&path, &render(c, GraphFormat::D6))?;
                let _ = writeln!(text, "counterexample {} written to {}", to_digraph6(c), path.display());
                code = 1;
            }
            let mut o = Output::new(text, &r);
            o.code = code;
            Ok(o)
        }
        Command::Bounds { surface, c_range } => bounds(surface, c_range.as_deref()),
        Command::Reduce { input, mode, embedding, gadget, g3, arc, output_format, out, roles, verify } => {
            let phi = load_cnf(inputs, input, fmt)?;
            let emb: Option<PlanarIncidenceEmbedding> = match (mode, embedding) {
                (Mode::Planar, Some(p)) => Some(load_json(inputs, p)?),
                (Mode::Planar, None) => return Err(CliError::Usage("--mode planar needs --embedding".into())),
                (Mode::Hub, Some(_)) => {
                    return Err(CliError::Usage("--embedding only applies to --mode planar".into()))
                }
                (Mode::Hub, None) => None,
            };
            let red = match gadget {
                GadgetKind::Digon => {
                    if g3.is_some() || arc.is_some() {
                        return Err(CliError::Usage("--g3 and --arc need --gadget oriented".into()));
                    }
                    reduce_digon(&phi, emb.as_ref())?
                }
                GadgetKind::Oriented => {
                    let g3 = match g3 {
                        Some(p) => load_digraph(inputs, p, None)?,
                        None => known::dicritical_7_20(),
                    };
                    let arc = match arc {
                        Some(s) => parse_arc(s)?,
                        None => g3.arcs().next().ok_or_else(|| CliError::Usage("G3 has no arcs".into()))?,
                    };
                    reduce_oriented(&phi, &g3, arc, emb.as_ref())?
                }
            };
            reduce_output(&phi, &red, *output_format, out.as_deref(), roles.as_deref(), *verify, &g.artifacts)
        }
        Command::Encode { input, k } => {
            let d = load_digraph(inputs, input, fmt)?;
            let cnf = dicolouring_cnf(&d, *k);
            let text = cnf.to_dimacs();
            Ok(Output::new(
                text.clone(),
                json!({ "vars": cnf.num_vars(), "clauses": cnf.clauses().len(), "dimacs": text }),
            ))
        }
        Command::Convert { input, to } => {
            let d = load_digraph(inputs, input, fmt)?;
            Ok(Output::new(render(&d, *to), json!({ "digraph6": to_digraph6(&d), "n": d.order(), "m": d.arc_count() })))
        }
        Command::VerifyPaper { level, only, checkpoint_dir } => {
            let opts = ClaimOptions { seed: g.seed, jobs: g.jobs, checkpoint_dir: checkpoint_dir.clone() };
            verify_claims(*level, only, &opts, &g.artifacts)
        }
    }
}

fn parse_arc(s: &str) -> Result<(usize, usize), CliError> {
    let bad = || CliError::Usage(format!("--arc expects u,v, got {s:?}"));
    let (a, b) = s.split_once(',').ok_or_else(bad)?;
    Ok((a.trim().parse().map_err(|_| bad())?, b.trim().parse().map_err(|_| bad())?))
}

fn dichi(d: &Digraph, k: Option<usize>, cert: Option<&Path>) -> Result<Output, CliError> {
    let (text, colouring, results) = match k {
        None => {
            let (chi, c) = dichromatic_number(d);
            (format!("k={chi}\n"), Some(c.clone()), json!({ "dichromatic_number": chi, "certificate": c }))
        }
        Some(k) => {
            let c = is_k_dicolourable(d, k);
            let text = format!("k={k} dicolourable={}\n", c.is_some());
            (text, c.clone(), json!({ "k": k, "dicolourable": c.is_some(), "certificate": c }))
        }
    };
    let mut text = text;
    if let Some(c) = &colouring {
        let body = serde_json::to_string(c).expect("certificate serialises");
        match cert {
            Some(p) => write(p, &(body + "\n"))?,
            None => text.push_str(&(body + "\n")),
        }
    }
    Ok(Output::new(text, results))
}

fn critical(d: &Digraph, k: usize, path: Option<&Path>, artifacts: &Path) -> Result<Output, CliError> {
    let r = is_dicritical(d, k);
    let body = to_json(&r) + "\n";
    if let Some(p) = path {
        write(p, &body)?;
    }
    let mut text = format!("dicritical={} k={} n={} arcs={}", r.is_dicritical, k, d.order(), d.arc_count());
    if let Some(f) = &r.failure {
        let v = serde_json::to_value(f).expect("failure serialises");
        let _ = write!(text, " reason={}", v["reason"].as_str().unwrap_or("?"));
    }
    text.push('\n');
    let mut out = Output::new(text, &r);
    if !r.is_dicritical {
        let p = artifacts.join("criticality-report.json");
        write(&p, &body)?;
        let _ = writeln!(out.text, "report written to {}", p.display());
        out.code = 1;
    }
    Ok(out)
}

fn census(n: usize, k: usize, opts: &CensusOptions, out: Option<&Path>) -> Result<Output, CliError> {
    let r = dicritical_census_with(n, k, opts)?;
    let min = r.min_arcs.map_or("none".to_string(), |m| m.to_string());
    let mut text =
        format!("n={n} k={k} total={} min_arcs={min} unique={} exhaustive={}\n", r.total, r.unique, r.exhaustive);
    for w in &r.witnesses {
        let _ = writeln!(text, "witness {} arcs={}", w.digraph6, w.arcs);
    }
    if let Some(p) = out {
        let lines: String = r.all.iter().map(|w| format!("{}\n", w.digraph6)).collect();
        write(p, &lines)?;
    }
    let wall = r.wall_time_s;
    let mut results = serde_json::to_value(&r).expect("report serialises");
    if let Value::Object(m) = &mut results {
        m.remove("wall_time_s");
    }
    let mut o = Output::new(text, results);
    o.timings.insert("census_s".into(), wall);
    Ok(o)
}

fn bound_line(r: &BoundRecord) -> String {
    let src: Vec<String> = r
        .provenance
        .iter()
        .map(|s| serde_json::to_value(s).ok().and_then(|v| v.as_str().map(String::from)).unwrap_or_default())
        .collect();
    format!("{} c={} [{},{}] {}\n", r.surface, r.euler_characteristic, r.lower, r.upper, src.join(","))
}

fn parse_range(s: &str) -> Result<(i64, i64), CliError> {
    let bad = || CliError::Usage(format!("--c-range expects a..b, got {s:?}"));
    let (a, b) = s.split_once("..").ok_or_else(bad)?;
    let (a, b): (i64, i64) = (a.trim().parse().map_err(|_| bad())?, b.trim().parse().map_err(|_| bad())?);
    if a > b {
        return Err(bad());
    }
    if b > 2 {
        return Err(CliError::Usage(format!("no surface has characteristic above 2 (got {b})")));
    }
    Ok((a, b))
}

fn bounds(names: &[String], range: Option<&str>) -> Result<Output, CliError> {
    let mut surfaces: Vec<Surface> = Vec::new();
    for s in names {
        surfaces.push(s.parse()?);
    }
    if let Some(r) = range {
        let (a, b) = parse_range(r)?;
        for c in (a..=b).rev() {
            for kind in [SurfaceKind::Orientable, SurfaceKind::Nonorientable] {
                if let Ok(s) = Surface::from_characteristic(c, kind) {
                    surfaces.push(s);
                }
            }
        }
    }
    if surfaces.is_empty() {
        surfaces = table_surfaces();
    }
    let records: Vec<BoundRecord> = surfaces.iter().map(dichromatic_bounds).collect();
    let text: String = records.iter().map(bound_line).collect();
    let heawood: Vec<Value> = records
        .iter()
        .map(|r| json!({ "surface": r.surface.to_string(), "heawood": heawood_number(r.euler_characteristic).ok() }))
        .collect();
    Ok(Output::new(text, json!({ "bounds": records, "heawood": heawood })))
}

fn reduce_output(
    phi: &dichroma::cnf::CnfFormula,
    red: &ReductionOutput,
    format: GraphFormat,
    out: Option<&Path>,
    roles: Option<&Path>,
    verify: bool,
    artifacts: &Path,
) -> Result<Output, CliError> {
    let d = &red.digraph;
    let body = render(d, format);
    let mut text = String::new();
    match out {
        Some(p) => {
            write(p, &body)?;
            let _ = writeln!(text, "order={} arcs={} written to {}", d.order(), d.arc_count(), p.display());
        }
        None => text.push_str(&body),
    }
    if let Some(p) = roles {
        write(p, &(to_json(&red.roles) + "\n"))?;
    }
    let mut results = json!({
        "order": d.order(),
        "arcs": d.arc_count(),
        "oriented": d.is_oriented(),
        "wiring": red.wiring,
        "neq": red.neq,
        "digraph6": to_digraph6(d),
        "roles": red.roles,
    });
    let mut code = 0;
    if verify {
        let eq = verify_equivalence(phi, red)?;
        let _ =
            writeln!(text, "satisfiable={} dicolourable={} equivalent={}", eq.satisfiable, eq.dicolourable, eq.holds());
        if !eq.holds() {
            let p = artifacts.join("reduction-counterexample.d6");
            write(&p, &render(d, GraphFormat::D6))?;
            let _ = writeln!(text, "counterexample written to {}", p.display());
            code = 1;
        }
        results["equivalence"] = serde_json::to_value(&eq).expect("equivalence serialises");
    }
    let mut o = Output::new(text, results);
    o.code = code;
    Ok(o)
}

fn verify_claims(level: Level, only: &[u8], opts: &ClaimOptions, artifacts: &Path) -> Result<Output, CliError> {
    if let Some(bad) = only.iter().find(|id| !CLAIMS.iter().any(|c| c.id == **id)) {
        return Err(CliError::Usage(format!("no criterion {bad}; expected 1..=12")));
    }
    let selected: Vec<u8> = CLAIMS
        .iter()
        .filter(|c| match only.is_empty() {
            true => level == Level::Full || !c.extended,
            false => only.contains(&c.id),
        })
        .map(|c| c.id)
        .collect();
    let mut text = String::new();
    let mut outcomes: Vec<ClaimOutcome> = Vec::new();
    let mut timings = BTreeMap::new();
    let mut artifact_paths: Vec<PathBuf> = Vec::new();
    for id in selected {
        let o = run_claim(id, opts);
        let verdict = if o.passed { "PASS" } else { "FAIL" };
        let _ = writeln!(text, "{:>2}  {verdict}  {:>8.2}s  {}: {}", o.id, o.seconds, o.title, o.detail);
        if let Some(a) = &o.artifact {
            let p = artifacts.join(format!("criterion-{:02}.d6", o.id));
            write(&p, &format!("{a}\n"))?;
            let _ = writeln!(text, "    counterexample written to {}", p.display());
            artifact_paths.push(p);
        }
        timings.insert(format!("criterion_{:02}_s", o.id), o.seconds);
        outcomes.push(o);
    }
    let failed = outcomes.iter().filter(|o| !o.passed).count();
    let _ = writeln!(text, "{} passed, {failed} failed", outcomes.len() - failed);
    let rows: Vec<Value> = outcomes
        .iter()
        .map(
            |o| json!({ "id": o.id, "title": o.title, "passed": o.passed, "detail": o.detail, "artifact": o.artifact }),
        )
        .collect();
    let mut out = Output::new(text, json!({ "criteria": rows, "failed": failed, "artifacts": artifact_paths }));
    out.timings = timings;
    out.code = u8::from(failed > 0);
    Ok(out)
}
