//! Parallel search driver. One producer (the graph stream, behind a
//! mutex), `jobs` workers that each check whole graphs, and the calling
//! thread as the single consumer that restores input order before writing.

use std::collections::BTreeMap;
use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::ops::RangeInclusive;
use std::path::PathBuf;
use std::sync::atomic::{AtomicBool, Ordering};
use std::sync::{mpsc, Mutex};
use std::thread;
use std::time::Instant;

use chordprobe_core::conjecture::{check, Certificate, ConjectureId, Outcome};
use chordprobe_core::generate::{ClassFilter, MAX_GENERATED_ORDER};
use chordprobe_core::graph6::encode_graph6;

use crate::ingest::{GraphStream, IngestError, ParsePolicy, Source, StreamItem};
use crate::report::{write_record, write_summary, Record, Report, Summary};

#[derive(Clone, Debug)]
pub struct SearchConfig {
    pub conjecture: ConjectureId,
    /// Orders to generate, or to keep from text input.
    pub orders: RangeInclusive<usize>,
    pub filter: ClassFilter,
    pub source: Source,
    pub jobs: usize,
    /// Report destination; `-` is standard output.
    pub report_path: Option<PathBuf>,
    /// Certificate destination, created on the first violation.
    pub certs_path: Option<PathBuf>,
    pub on_parse_error: ParsePolicy,
    /// Leave out timing fields so reports compare byte for byte.
    pub stable_output: bool,
    pub progress: bool,
}

impl SearchConfig {
    pub fn new(conjecture: ConjectureId, source: Source, orders: RangeInclusive<usize>) -> Self {
        SearchConfig {
            conjecture,
            orders,
            filter: ClassFilter::default(),
            source,
            jobs: 1,
            report_path: None,
            certs_path: None,
            on_parse_error: ParsePolicy::Abort,
            stable_output: false,
            progress: false,
        }
    }

    pub fn validate(&self) -> Result<(), HarnessError> {
        if self.jobs == 0 {
            return Err(HarnessError::Config("jobs must be at least 1".into()));
        }
        if self.source == Source::Internal
            && (*self.orders.start() == 0 || *self.orders.end() > MAX_GENERATED_ORDER)
        {
            return Err(HarnessError::Config(format!(
                "internal generation covers orders 1..={MAX_GENERATED_ORDER}, got {}-{}",
                self.orders.start(),
                self.orders.end()
            )));
        }
        self.filter
            .validate()
            .map_err(|e| HarnessError::Config(e.to_string()))
    }
}

#[derive(Debug, thiserror::Error)]
pub enum HarnessError {
    #[error("invalid configuration: {0}")]
    Config(String),
    #[error(transparent)]
    Ingest(#[from] IngestError),
    #[error("cannot write {path}: {source}")]
    Write { path: PathBuf, source: io::Error },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchOutput {
    pub report: Report,
    pub certificates: Vec<Certificate>,
}

enum Slot {
    Checked(Box<Record>, Option<Certificate>),
    Filtered,
    ParseError(IngestError),
}

fn check_item(cfg: &SearchConfig, index: usize, item: StreamItem, from_text: bool) -> Slot {
    let g = &item.graph;
    if from_text && (!cfg.orders.contains(&g.order()) || !cfg.filter.accepts(g)) {
        return Slot::Filtered;
    }
    let start = Instant::now();
    let verdict = check(g, cfg.conjecture);
    let elapsed = start.elapsed();
    let reason = match &verdict.outcome {
        Outcome::Holds => None,
        Outcome::NotApplicable(gate) => Some(gate.to_string()),
        Outcome::Violated(_) => Some("counterexample certificate written".into()),
    };
    let record = Record {
        index,
        line: item.line,
        graph6: encode_graph6(g),
        order: g.order(),
        status: verdict.status(),
        reason,
        stats: verdict.stats,
        elapsed_us: (!cfg.stable_output).then_some(elapsed.as_micros() as u64),
    };
    let cert = verdict.certificate().cloned();
    Slot::Checked(Box::new(record), cert)
}

struct Sink {
    path: PathBuf,
    out: Option<Box<dyn Write>>,
}

impl Sink {
    fn new(path: PathBuf, eager: bool) -> Result<Sink, HarnessError> {
        let mut s = Sink { path, out: None };
        if eager {
            s.get()?;
        }
        Ok(s)
    }

    fn get(&mut self) -> Result<&mut dyn Write, HarnessError> {
        if self.out.is_none() {
            let w: Box<dyn Write> = if self.path.as_os_str() == "-" {
                Box::new(io::stdout().lock())
            } else {
                let f = File::create(&self.path).map_err(|source| HarnessError::Write {
                    path: self.path.clone(),
                    source,
                })?;
                Box::new(BufWriter::new(f))
            };
            self.out = Some(w);
        }
        Ok(self.out.as_deref_mut().expect("just opened"))
    }

    fn io<T>(&self, r: io::Result<T>) -> Result<T, HarnessError> {
        r.map_err(|source| HarnessError::Write {
            path: self.path.clone(),
            source,
        })
    }

    fn finish(&mut self) -> Result<(), HarnessError> {
        if let Some(w) = self.out.as_mut() {
            let r = w.flush();
            self.io(r)?;
        }
        Ok(())
    }
}

/// Checks every graph of the configured source and collects the report.
/// Records are written as they complete, in input order; certificates go
/// to `certs_path` as soon as a violation is seen.
pub fn run_search(cfg: &SearchConfig) -> Result<SearchOutput, HarnessError> {
    cfg.validate()?;
    let wall = Instant::now();
    let stream = GraphStream::open(&cfg.source, cfg.orders.clone(), cfg.filter)?;
    let from_text = !stream.is_internal();
    let stream = Mutex::new((0usize, stream));
    let stop = AtomicBool::new(false);

    let mut report_sink = cfg
        .report_path
        .clone()
        .map(|p| Sink::new(p, true))
        .transpose()?;
    let mut cert_sink = cfg
        .certs_path
        .clone()
        .map(|p| Sink::new(p, false))
        .transpose()?;

    let mut records = Vec::new();
    let mut certificates = Vec::new();
    let mut filtered_out = 0;
    let mut parse_errors = 0;
    let mut failure = None;

    thread::scope(|scope| -> Result<(), HarnessError> {
        let (tx, rx) = mpsc::channel::<(usize, Slot)>();
        for _ in 0..cfg.jobs {
            let tx = tx.clone();
            let (stream, stop) = (&stream, &stop);
            scope.spawn(move || loop {
                if stop.load(Ordering::Relaxed) {
                    break;
                }
                let (seq, next) = {
                    let mut guard = stream.lock().expect("stream lock");
                    let (seq, s) = &mut *guard;
                    let Some(next) = s.next() else { break };
                    *seq += 1;
                    (*seq - 1, next)
                };
                let slot = match next {
                    Ok(item) => check_item(cfg, seq, item, from_text),
                    Err(e) => Slot::ParseError(e),
                };
                if tx.send((seq, slot)).is_err() {
                    break;
                }
            });
        }
        drop(tx);

        let mut pending = BTreeMap::new();
        let mut next_seq = 0;
        for (seq, slot) in rx {
            pending.insert(seq, slot);
            while let Some(slot) = pending.remove(&next_seq) {
                next_seq += 1;
                if failure.is_some() {
                    continue;
                }
                match slot {
                    Slot::Filtered => filtered_out += 1,
                    Slot::ParseError(e) => {
                        if cfg.on_parse_error == ParsePolicy::Skip
                            && matches!(e, IngestError::Parse { .. })
                        {
                            eprintln!("warning: skipping {e}");
                            parse_errors += 1;
                        } else {
                            stop.store(true, Ordering::Relaxed);
                            failure = Some(HarnessError::from(e));
                        }
                    }
                    Slot::Checked(record, cert) => {
                        if let Some(sink) = report_sink.as_mut() {
                            let r = write_record(sink.get()?, &record);
                            sink.io(r)?;
                        }
                        if let Some(cert) = cert {
                            if let Some(sink) = cert_sink.as_mut() {
                                let w = sink.get()?;
                                let r = serde_json::to_writer(&mut *w, &cert)
                                    .map_err(io::Error::from)
                                    .and_then(|_| w.write_all(b"\n"))
                                    .and_then(|_| w.flush());
                                sink.io(r)?;
                            }
                            certificates.push(cert);
                        }
                        records.push(*record);
                        if cfg.progress && records.len() % 1000 == 0 {
                            eprintln!("progress: {} graphs checked", records.len());
                        }
                    }
                }
            }
        }
        Ok(())
    })?;

    if let Some(e) = failure {
        return Err(e);
    }
    let mut summary = Summary::tally(cfg.conjecture, &records);
    summary.filtered_out = filtered_out;
    summary.parse_errors = parse_errors;
    summary.wall_ms = (!cfg.stable_output).then(|| wall.elapsed().as_millis() as u64);
    if let Some(sink) = report_sink.as_mut() {
        let r = write_summary(sink.get()?, &summary);
        sink.io(r)?;
        sink.finish()?;
    }
    if let Some(sink) = cert_sink.as_mut() {
        sink.finish()?;
    }
    if cfg.progress {
        eprintln!(
            "progress: done, {} graphs checked, {} violated",
            summary.graphs, summary.violated
        );
    }
    Ok(SearchOutput {
        report: Report { records, summary },
        certificates,
    })
}
