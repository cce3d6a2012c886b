//! Command-line front end. `run` does all the work and hands back what to
//! print, so tests can drive it without spawning a process.
//!
//! JSON goes to stdout (or `--output`), human text to stderr. Exit codes:
//! 0 clean, 1 some FAIL, 2 some UNKNOWN or CONDITIONAL, 3 bad input or
//! operational error.

use crate::coloring::{Color, PartialEdgeColoring};
use crate::fan::{
    grow_multifan, inducing_map, normalize_typical, search_maximum_multifan, stability_class, EdgeInstance,
    FanStatus, MaxFanResult, SearchMode,
};
use crate::graph::{read_graph6_lines, SimpleGraph, Vertex};
use crate::recolor::{
    all_tau_sequences, build_tau_sequence, shift_tau, verify_rs1_linkage, verify_tau_sequences,
};
use crate::solver::{
    chromatic_index, is_critical_edge_given, overfull_deficiency, sample_colorings, EdgeClass, SolverConfig,
};
use crate::theorems::{scan_corpus, Check, ScanConfig};
use crate::verdict::{Status, Verdict};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};
use std::sync::Arc;

/// Exhaustive fan search is refused from this order on unless forced.
pub const EXHAUSTIVE_LIMIT: usize = 10;
const DEFAULT_FAN_BUDGET: u64 = 200_000;

#[derive(Parser, Debug)]
#[command(name = "fanforge", version, about = "Edge-colouring fans, Kempe recolouring and critical-graph checks")]
pub struct Cli {
    #[command(flatten)]
    pub common: Common,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct Common {
    /// graph6 file, `-` for stdin, or a graph6 string.
    #[arg(long, short, global = true)]
    pub input: Option<String>,
    /// Write the JSON (or TSV) here instead of stdout.
    #[arg(long, short, global = true)]
    pub output: Option<String>,
    /// Seeds colouring samples.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Solver nodes for classify/verify/scan, colourings examined for fan/tau.
    #[arg(long, global = true, env = "FANFORGE_BUDGET")]
    pub budget: Option<u64>,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// χ′, class, overfullness and the Δ-core of each graph.
    Classify,
    /// Per-check verdicts for each graph, one JSON line per graph.
    Verify {
        #[arg(long, default_value = "standard")]
        checks: String,
    },
    /// Maximum multifan of one edge, its typical form and τ-sequences.
    Fan(FanArgs),
    /// τ-sequences of a fan and the shifts they allow.
    Tau {
        #[command(flatten)]
        fan: FanArgs,
        /// Only this colour.
        #[arg(long)]
        tau: Option<Color>,
    },
    /// Runs checks over a corpus in parallel.
    Scan {
        #[arg(long, default_value = "standard")]
        checks: String,
        #[arg(long, default_value_t = 1)]
        workers: usize,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
}

#[derive(Args, Debug, Clone)]
pub struct FanArgs {
    /// The uncoloured edge as `u-v`.
    #[arg(long)]
    pub edge: String,
    /// Fan center; defaults to `u`.
    #[arg(long)]
    pub center: Option<Vertex>,
    #[arg(long, value_enum, default_value_t = Mode::Exhaustive)]
    pub mode: Mode,
    /// Allow exhaustive search on large graphs.
    #[arg(long)]
    pub force: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Mode {
    Exhaustive,
    Reachability,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Tsv,
}

/// What a command wants printed.
#[derive(Debug, Default, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

impl Outcome {
    fn error(msg: impl std::fmt::Display) -> Self {
        Outcome {
            stderr: format!("error: {msg}\n"),
            code: 3,
            ..Default::default()
        }
    }
}

/// Parses `args` (program name first) and runs the command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 3 } else { 0 };
            let text = e.render().to_string();
            return if code == 0 {
                Outcome { stdout: text, ..Default::default() }
            } else {
                Outcome { stderr: text, code, ..Default::default() }
            };
        }
    };
    run_cli(&cli)
}

pub fn run_cli(cli: &Cli) -> Outcome {
    let text = match read_input(cli.common.input.as_deref()) {
        Ok(t) => t,
        Err(e) => return Outcome::error(e),
    };
    let c = &cli.common;
    match &cli.command {
        Command::Classify => classify(&text, c),
        Command::Verify { checks } => scan(&text, c, checks, 1, Format::Json),
        Command::Scan { checks, workers, format } => scan(&text, c, checks, *workers, *format),
        Command::Fan(args) => fan(&text, c, args),
        Command::Tau { fan, tau } => tau_cmd(&text, c, fan, *tau),
    }
}

fn read_input(input: Option<&str>) -> Result<String, String> {
    match input {
        None | Some("-") => {
            let mut s = String::new();
            std::io::Read::read_to_string(&mut std::io::stdin(), &mut s).map_err(|e| e.to_string())?;
            Ok(s)
        }
        Some(p) if std::path::Path::new(p).is_file() => std::fs::read_to_string(p).map_err(|e| format!("{p}: {e}")),
        Some(inline) => Ok(inline.to_string()),
    }
}

fn solver(c: &Common) -> SolverConfig {
    c.budget.map(SolverConfig::with_budget).unwrap_or_default()
}

fn json_lines<T: serde::Serialize>(items: impl IntoIterator<Item = T>) -> String {
    let mut out = String::new();
    for it in items {
        out.push_str(&serde_json::to_string(&it).expect("reports serialize"));
        out.push('\n');
    }
    out
}

fn classify(text: &str, c: &Common) -> Outcome {
    let cfg = solver(c);
    let mut out = Outcome::default();
    let mut records = Vec::new();
    for (line, body, parsed) in read_graph6_lines(text) {
        let g = match parsed {
            Ok(g) => Arc::new(g),
            Err(e) => {
                out.stderr.push_str(&format!("line {line}: {e}\n"));
                out.code = 3;
                records.push(json!({"line": line, "graph6": body, "error": e.to_string()}));
                continue;
            }
        };
        let p = g.degree_profile();
        let mut rec = json!({
            "line": line,
            "graph6": body,
            "n": g.n(),
            "m": g.edge_count(),
            "delta": p.delta,
            "overfull": crate::solver::is_overfull(&g),
            "just_overfull": crate::solver::is_just_overfull(&g),
            "overfull_deficiency": overfull_deficiency(&g).ok(),
            "core_min_degree": p.core_min_degree,
            "core_max_degree": p.core_max_degree,
        });
        if g.edge_count() == 0 {
            rec["chi_prime"] = json!(0);
            rec["class"] = json!("one");
            rec["core_acyclic"] = json!(true);
            rec["overfull_shortcut"] = json!(false);
        } else {
            match chromatic_index(&g, &cfg) {
                Ok(v) => {
                    rec["chi_prime"] = json!(v.chi_prime);
                    rec["class"] = json!(v.class);
                    rec["core_acyclic"] = json!(v.core_acyclic);
                    rec["overfull_shortcut"] = json!(v.overfull_shortcut);
                    rec["nodes"] = json!(v.nodes);
                    rec["witness"] = json!(v.witness);
                }
                Err(e) => {
                    out.code = out.code.max(2);
                    rec["error"] = json!(e.to_string());
                }
            }
        }
        out.stderr.push_str(&format!(
            "{body}: n={} |E|={} Δ={} χ′={} class={} overfull={} just-overfull={} core δ/Δ={}/{} shortcut={}\n",
            rec["n"], rec["m"], rec["delta"], rec.get("chi_prime").unwrap_or(&Value::Null),
            rec.get("class").and_then(Value::as_str).unwrap_or("?"), rec["overfull"], rec["just_overfull"],
            rec["core_min_degree"], rec["core_max_degree"], shortcut_name(&rec),
        ));
        records.push(rec);
    }
    out.stdout = json_lines(records);
    deliver(out, c)
}

fn shortcut_name(rec: &Value) -> &'static str {
    if rec.get("core_acyclic") == Some(&json!(true)) {
        "core-acyclic"
    } else if rec.get("overfull_shortcut") == Some(&json!(true)) {
        "overfull"
    } else {
        "none"
    }
}

fn scan(text: &str, c: &Common, checks: &str, workers: usize, format: Format) -> Outcome {
    let checks = match Check::parse_list(checks) {
        Ok(v) => v,
        Err(e) => return Outcome::error(e),
    };
    let mut cfg = ScanConfig::new(checks);
    cfg.workers = workers.max(1);
    cfg.node_budget = solver(c).node_budget;
    cfg.suite.seed = c.seed;
    cfg.suite.node_budget = cfg.node_budget;
    let res = match scan_corpus(text, &cfg) {
        Ok(r) => r,
        Err(e) => return Outcome::error(e),
    };
    let mut out = Outcome {
        code: res.summary.exit_code(),
        stderr: res.summary.to_tsv(),
        ..Default::default()
    };
    for r in res.reports.iter().filter(|r| r.error.is_some()) {
        out.stderr.push_str(&format!("line {}: {}\n", r.line, r.error.as_deref().unwrap_or("")));
    }
    out.stdout = match format {
        Format::Json => json_lines(&res.reports),
        Format::Tsv => res.summary.to_tsv(),
    };
    deliver(out, c)
}

/// Writes stdout to `--output` when asked.
fn deliver(mut out: Outcome, c: &Common) -> Outcome {
    if let Some(path) = &c.output {
        if let Err(e) = std::fs::write(path, &out.stdout) {
            return Outcome::error(format!("{path}: {e}"));
        }
        out.stdout.clear();
    }
    out
}

/// The single graph of a fan or tau command.
fn one_graph(text: &str) -> Result<(String, Arc<SimpleGraph>), String> {
    let mut it = read_graph6_lines(text);
    let (line, body, parsed) = it.next().ok_or("no graph given")?;
    if it.next().is_some() {
        return Err("fan and tau take a single graph".into());
    }
    let g = parsed.map_err(|e| format!("line {line}: {e}"))?;
    Ok((body.to_string(), Arc::new(g)))
}

fn parse_edge(g: &SimpleGraph, spec: &str) -> Result<(Vertex, Vertex), String> {
    let (u, v) = spec.split_once('-').ok_or_else(|| format!("edge {spec:?} is not of the form u-v"))?;
    let parse = |s: &str| s.trim().parse::<Vertex>().map_err(|_| format!("bad vertex {s:?} in edge {spec:?}"));
    let (u, v) = (parse(u)?, parse(v)?);
    if !g.has_edge(u, v) {
        return Err(format!("{u}-{v} is not an edge"));
    }
    Ok((u, v))
}

/// Shared preamble of `fan` and `tau`.
struct FanRun {
    graph6: String,
    inst: EdgeInstance,
    best: MaxFanResult,
    warnings: Vec<String>,
}

fn fan_run(text: &str, c: &Common, a: &FanArgs) -> Result<FanRun, String> {
    let (graph6, g) = one_graph(text)?;
    let (u, v) = parse_edge(&g, &a.edge)?;
    let r = a.center.unwrap_or(u);
    if r != u && r != v {
        return Err(format!("center {r} is not an end of {u}-{v}"));
    }
    if a.mode == Mode::Exhaustive && g.n() >= EXHAUSTIVE_LIMIT && !a.force {
        return Err(format!(
            "exhaustive search on {} vertices can take very long; use --mode reachability, \
             lower --budget, or pass --force",
            g.n()
        ));
    }
    let e = g.edge_between(u, v).expect("checked above");
    let cfg = SolverConfig::default();
    let class = chromatic_index(&g, &cfg).map_err(|e| e.to_string())?.class;
    let critical = is_critical_edge_given(&g, class, e, &cfg).map_err(|e| e.to_string())?;
    let mut warnings = Vec::new();
    if class == EdgeClass::One {
        warnings.push("graph is class one; fan lemmas do not apply".to_string());
    } else if !critical {
        warnings.push(format!("{u}-{v} is not critical; G − e has no Δ-colouring"));
    }
    let inst = EdgeInstance::from_known(g.clone(), e, r, class == EdgeClass::Two, critical)
        .map_err(|e| e.to_string())?;
    let k = g.max_degree() as u8;
    let start = sample_colorings(&g, Some(e), k, 1, c.seed, cfg.node_budget)
        .map_err(|e| e.to_string())?
        .colorings
        .into_iter()
        .next()
        .ok_or_else(|| format!("G − {u}-{v} has no {k}-edge-colouring"))?;
    let mode = match a.mode {
        Mode::Exhaustive => SearchMode::Exhaustive,
        Mode::Reachability => SearchMode::Reachability,
    };
    let budget = c.budget.unwrap_or(DEFAULT_FAN_BUDGET);
    let best = search_maximum_multifan(&g, e, r, Some(&start), mode, budget).map_err(|e| e.to_string())?;
    Ok(FanRun {
        graph6,
        inst,
        best,
        warnings,
    })
}

fn header(run: &FanRun, a: &FanArgs) -> Value {
    let (u, v) = run.inst.graph.edge(run.inst.edge);
    json!({
        "graph6": run.graph6,
        "edge": [u, v],
        "center": run.inst.center,
        "class_two": run.inst.class_two,
        "critical": run.inst.critical,
        "mode": match a.mode { Mode::Exhaustive => "exhaustive", Mode::Reachability => "reachability" },
        "status": run.best.status,
        "examined": run.best.examined,
        "upper_bound": run.best.upper_bound,
        "warnings": run.warnings,
    })
}

/// The typical-form part of a fan report and the colouring it lives in.
fn typical_section(phi: &PartialEdgeColoring, fan: &crate::fan::Multifan) -> (Value, Option<(PartialEdgeColoring, crate::fan::Multifan)>) {
    match normalize_typical(phi, fan) {
        Ok((p, f, map)) => {
            let induced = inducing_map(&p, &f).map(|m| json!(m)).unwrap_or_else(|e| json!({"error": e.to_string()}));
            (
                json!({"coloring": p, "fan": f, "relabel": map, "inducing_map": induced}),
                Some((p, f)),
            )
        }
        Err(e) => (json!({"error": e.to_string()}), None),
    }
}

fn tau_entries(phi: &PartialEdgeColoring, fan: &crate::fan::Multifan, only: Option<Color>) -> Vec<Value> {
    let fan_colors = phi.missing_union(&fan.vertices());
    let mut out = Vec::new();
    for tau in phi.palette().difference(fan_colors).iter() {
        if only.is_some_and(|t| t != tau) {
            continue;
        }
        let found = all_tau_sequences(phi, fan, tau).len();
        let entry = match build_tau_sequence(phi, fan, tau) {
            Ok(seq) => {
                let shift = if seq.shift_eligible(phi) {
                    match shift_tau(phi, &seq) {
                        Ok(next) => json!({
                            "coloring": next,
                            "stability": stability_class(&next, phi, fan).ok(),
                        }),
                        Err(e) => json!({"error": e.to_string()}),
                    }
                } else {
                    Value::Null
                };
                json!({"tau": tau, "sequence": seq, "sequences_found": found, "shift": shift})
            }
            Err(e) => json!({"tau": tau, "error": e.to_string(), "sequences_found": found}),
        };
        out.push(entry);
    }
    out
}

fn verdict_code(vs: &[&Verdict]) -> i32 {
    match vs.iter().map(|v| v.status).max() {
        Some(Status::Fail) => 1,
        Some(Status::Unknown | Status::Conditional) => 2,
        _ => 0,
    }
}

fn fan(text: &str, c: &Common, a: &FanArgs) -> Outcome {
    let run = match fan_run(text, c, a) {
        Ok(r) => r,
        Err(e) => return Outcome::error(e),
    };
    let (phi, fan) = (&run.best.coloring, &run.best.fan);
    let mut rec = header(&run, a);
    rec["coloring"] = json!(phi);
    rec["fan"] = json!(fan);
    let (typical, normal) = typical_section(phi, fan);
    rec["typical"] = typical;
    rec["tau_sequences"] = match &normal {
        Some((p, f)) => json!(tau_entries(p, f, None)),
        None => json!([]),
    };
    let linkage = verify_rs1_linkage(&run.inst, phi, fan, run.best.status);
    rec["rs1_linkage"] = json!(linkage);
    let mut out = Outcome {
        code: verdict_code(&[&linkage]),
        stdout: format!("{}\n", serde_json::to_string(&rec).expect("serializes")),
        stderr: human_fan(&run, &linkage),
    };
    for w in &run.warnings {
        out.stderr.push_str(&format!("warning: {w}\n"));
    }
    deliver(out, c)
}

fn human_fan(run: &FanRun, v: &Verdict) -> String {
    let f = &run.best.fan;
    let status = match run.best.status {
        FanStatus::Exact => "maximum",
        FanStatus::LowerBound => "lower bound",
    };
    format!(
        "fan at {} over {:?}: |V(F)| = {} ({status}, bound {}), {} colourings examined; rs1 linkage {:?}\n",
        f.center,
        f.sequence,
        f.size(),
        run.best.upper_bound,
        run.best.examined,
        v.status
    )
}

fn tau_cmd(text: &str, c: &Common, a: &FanArgs, only: Option<Color>) -> Outcome {
    let run = match fan_run(text, c, a) {
        Ok(r) => r,
        Err(e) => return Outcome::error(e),
    };
    let mut rec = header(&run, a);
    let (phi, fan) = (&run.best.coloring, &run.best.fan);
    let (typical, normal) = typical_section(phi, fan);
    // a non-typical fan still has τ-sequences; report them in its own colours
    let (p, f) = normal.unwrap_or_else(|| (phi.clone(), grow_multifan(phi, fan.center).expect("fan regrows")));
    rec["typical"] = typical;
    rec["coloring"] = json!(p);
    rec["fan"] = json!(f);
    let entries = tau_entries(&p, &f, only);
    let verdict = verify_tau_sequences(&run.inst, phi, fan, run.best.status);
    let mut stderr = format!("{} colours off the fan\n", entries.len());
    for e in &entries {
        let kind = e["sequence"]["type"].as_str().unwrap_or("-");
        stderr.push_str(&format!("τ = {}: type {kind}\n", e["tau"]));
    }
    rec["tau_sequences"] = json!(entries);
    rec["uniqueness"] = json!(verdict);
    let out = Outcome {
        code: verdict_code(&[&verdict]),
        stdout: format!("{}\n", serde_json::to_string(&rec).expect("serializes")),
        stderr,
    };
    deliver(out, c)
}
