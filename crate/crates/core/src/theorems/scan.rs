use super::facts::GraphFacts;
use super::implication::{check_conjecture, check_parity, check_theorem, check_val, ConjectureName, TheoremName};
use super::suite::{run_lemma_suite, SuiteConfig};
use crate::graph::{read_graph6_lines, SimpleGraph};
use crate::solver::SolverConfig;
use crate::verdict::{Status, Verdict};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

/// A check that `scan` can run on each graph.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Check {
    Val,
    Parity,
    Theorem(TheoremName),
    Conjecture(ConjectureName),
    /// The per-edge lemma suite; one report entry per lemma.
    Lemmas,
}

impl Check {
    /// Everything except the lemma suite, which is costly.
    pub fn standard() -> Vec<Check> {
        let mut v = vec![Check::Val, Check::Parity];
        v.extend(TheoremName::ALL.map(Check::Theorem));
        v.extend(ConjectureName::ALL.map(Check::Conjecture));
        v
    }

    pub fn all() -> Vec<Check> {
        let mut v = Self::standard();
        v.push(Check::Lemmas);
        v
    }

    /// Parses a comma-separated list; `all` and `standard` expand.
    pub fn parse_list(s: &str) -> Result<Vec<Check>, String> {
        let mut out = Vec::new();
        for part in s.split(',').map(str::trim).filter(|p| !p.is_empty()) {
            match part {
                "all" => out.extend(Self::all()),
                "standard" => out.extend(Self::standard()),
                p => out.push(p.parse()?),
            }
        }
        if out.is_empty() {
            return Err("no checks given".into());
        }
        out.sort();
        out.dedup();
        Ok(out)
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Check::Val => f.write_str("val"),
            Check::Parity => f.write_str("parity"),
            Check::Theorem(t) => f.write_str(t.as_str()),
            Check::Conjecture(c) => f.write_str(c.as_str()),
            Check::Lemmas => f.write_str("lemmas"),
        }
    }
}

impl FromStr for Check {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "val" => Ok(Check::Val),
            "parity" => Ok(Check::Parity),
            "lemmas" => Ok(Check::Lemmas),
            _ => s
                .parse::<TheoremName>()
                .map(Check::Theorem)
                .or_else(|_| s.parse::<ConjectureName>().map(Check::Conjecture))
                .map_err(|_| format!("unknown check {s:?}")),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct ScanConfig {
    pub checks: Vec<Check>,
    pub workers: usize,
    /// Node budget of each solver call.
    pub node_budget: u64,
    pub suite: SuiteConfig,
}

impl ScanConfig {
    pub fn new(checks: Vec<Check>) -> Self {
        ScanConfig {
            checks,
            workers: 1,
            node_budget: SolverConfig::default().node_budget,
            suite: SuiteConfig::default(),
        }
    }

    fn solver(&self) -> SolverConfig {
        SolverConfig::with_budget(self.node_budget)
    }
}

/// One JSON-lines record per input graph.
#[derive(Clone, Debug, Serialize)]
pub struct VerificationReport {
    /// 1-based line number in the input.
    pub line: usize,
    pub graph6: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
    /// The facts the hypothesis gates were evaluated on.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub hypotheses: Option<GraphFacts>,
    pub checks: BTreeMap<String, Verdict>,
}

impl VerificationReport {
    pub fn worst(&self) -> Option<Status> {
        self.checks.values().map(|v| v.status).max()
    }
}

/// Per-check verdict counts over a scan.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Counts {
    pub pass: usize,
    pub fail: usize,
    pub inapplicable: usize,
    pub unknown: usize,
    pub conditional: usize,
}

impl Counts {
    fn add(&mut self, s: Status) {
        match s {
            Status::Pass => self.pass += 1,
            Status::Fail => self.fail += 1,
            Status::Inapplicable => self.inapplicable += 1,
            Status::Unknown => self.unknown += 1,
            Status::Conditional => self.conditional += 1,
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub graphs: usize,
    pub errors: usize,
    pub checks: BTreeMap<String, Counts>,
}

impl Summary {
    pub fn of(reports: &[VerificationReport]) -> Self {
        let mut s = Summary::default();
        for r in reports {
            s.graphs += 1;
            s.errors += usize::from(r.error.is_some());
            for (name, v) in &r.checks {
                s.checks.entry(name.clone()).or_default().add(v.status);
            }
        }
        s
    }

    pub fn to_tsv(&self) -> String {
        let mut out = String::from("check\tpass\tfail\tinapplicable\tunknown\tconditional\n");
        for (name, c) in &self.checks {
            out.push_str(&format!(
                "{name}\t{}\t{}\t{}\t{}\t{}\n",
                c.pass, c.fail, c.inapplicable, c.unknown, c.conditional
            ));
        }
        out.push_str(&format!("graphs\t{}\terrors\t{}\n", self.graphs, self.errors));
        out
    }

    /// 0 clean, 1 any FAIL, 2 UNKNOWN or CONDITIONAL without FAIL, 3 any
    /// input error.
    pub fn exit_code(&self) -> i32 {
        let any = |f: fn(&Counts) -> usize| self.checks.values().any(|c| f(c) > 0);
        if self.errors > 0 {
            3
        } else if any(|c| c.fail) {
            1
        } else if any(|c| c.unknown + c.conditional) {
            2
        } else {
            0
        }
    }
}

pub struct ScanResult {
    pub reports: Vec<VerificationReport>,
    pub summary: Summary,
}

/// Runs `checks` on one parsed graph.
pub fn verify_graph(line: usize, graph6: &str, g: SimpleGraph, cfg: &ScanConfig) -> VerificationReport {
    let g = Arc::new(g);
    let mut rep = VerificationReport {
        line,
        graph6: graph6.to_string(),
        error: None,
        hypotheses: None,
        checks: BTreeMap::new(),
    };
    let solver = cfg.solver();
    let facts = match GraphFacts::compute(&g, &solver) {
        Ok(f) => f,
        Err(e) => {
            for c in &cfg.checks {
                rep.checks.insert(c.to_string(), Verdict::unknown(e.to_string()));
            }
            return rep;
        }
    };
    for &c in &cfg.checks {
        match c {
            Check::Val => {
                rep.checks.insert(c.to_string(), check_val(&g, &facts));
            }
            Check::Parity => {
                let v = match &facts.witness {
                    Some(w) => check_parity(w),
                    None => Verdict::inapplicable("no complete colouring"),
                };
                rep.checks.insert(c.to_string(), v);
            }
            Check::Theorem(t) => {
                rep.checks.insert(c.to_string(), check_theorem(t, &g, &facts));
            }
            Check::Conjecture(k) => {
                rep.checks.insert(c.to_string(), check_conjecture(k, &g, &facts, &solver));
            }
            Check::Lemmas => {
                let suite = run_lemma_suite(&g, &facts, &cfg.suite);
                for (name, t) in suite.lemmas {
                    rep.checks.insert(format!("lemma:{name}"), t.verdict());
                }
            }
        }
    }
    rep.hypotheses = Some(facts);
    rep
}

/// Runs the checks over every graph6 line of `text`, one graph per task.
/// Malformed lines yield an error record and the scan goes on. Reports
/// come back in input order whatever the worker count.
pub fn scan_corpus(text: &str, cfg: &ScanConfig) -> Result<ScanResult, rayon::ThreadPoolBuildError> {
    let items: Vec<_> = read_graph6_lines(text)
        .map(|(line, body, parsed)| (line, body.to_string(), parsed))
        .collect();
    let pool = rayon::ThreadPoolBuilder::new().num_threads(cfg.workers.max(1)).build()?;
    let reports: Vec<VerificationReport> = pool.install(|| {
        items
            .into_par_iter()
            .map(|(line, body, parsed)| match parsed {
                Ok(g) => verify_graph(line, &body, g, cfg),
                Err(e) => VerificationReport {
                    line,
                    graph6: body,
                    error: Some(e.to_string()),
                    hypotheses: None,
                    checks: BTreeMap::new(),
                },
            })
            .collect()
    });
    let summary = Summary::of(&reports);
    Ok(ScanResult { reports, summary })
}
