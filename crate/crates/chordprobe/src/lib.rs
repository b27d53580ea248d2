//! Batch search over small graphs: graph6 ingestion, a parallel harness
//! that runs one statement checker per graph, and line-delimited JSON
//! reports and certificates.

pub mod harness;
pub mod ingest;
pub mod report;

pub use chordprobe_core as core;
