//! P-fans, the theorem and conjecture checks, the lemma suite and the
//! corpus scan.

mod facts;
mod implication;
mod lemmas;
mod pfan;
mod scan;
mod suite;

pub use facts::GraphFacts;
pub use implication::{check_conjecture, check_parity, check_theorem, check_val, ConjectureName, TheoremName};
pub use lemmas::verify_low_center;
pub use pfan::{grow_pfan, verify_pfan_adjacency, verify_pfan_properties, P2Status, P2Witness, PFan, Rejected};
pub use scan::{scan_corpus, verify_graph, Check, Counts, ScanConfig, ScanResult, Summary, VerificationReport};
pub use suite::{run_lemma_suite, SuiteConfig, SuiteReport, LEMMA_CHECKS};
