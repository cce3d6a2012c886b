//! Scanning a corpus: the connected graphs on at most six vertices.

use fanforge::theorems::{scan_corpus, Check, ScanConfig};

fn main() {
    let text: String = include_str!("../tests/fixtures/connected_le7.g6")
        .lines()
        .filter(|l| !l.starts_with('F'))
        .map(|l| format!("{l}\n"))
        .collect();
    let mut cfg = ScanConfig::new(Check::all());
    cfg.workers = 2;
    let res = scan_corpus(&text, &cfg).unwrap();
    print!("{}", res.summary.to_tsv());
    for r in res.reports.iter().filter(|r| r.hypotheses.as_ref().is_some_and(|h| h.delta_critical)) {
        println!("Δ-critical: {} (line {})", r.graph6, r.line);
    }
    println!("exit code would be {}", res.summary.exit_code());
}
