//! Line-delimited JSON reports: one record per checked graph, in input
//! order, then one summary line.

use std::fs::File;
use std::io::{self, BufRead, BufReader, BufWriter, Write};
use std::path::Path;

use chordprobe_core::conjecture::{ConjectureId, Stats, Status};
use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Record {
    /// Position of the graph in its source, counting from 0.
    pub index: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub line: Option<usize>,
    pub graph6: String,
    pub order: usize,
    pub status: Status,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
    pub stats: Stats,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub elapsed_us: Option<u64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Summary {
    pub conjecture: ConjectureId,
    pub graphs: usize,
    pub applicable: usize,
    pub holds: usize,
    pub violated: usize,
    pub not_applicable: usize,
    /// Input graphs outside the order range or class filter.
    pub filtered_out: usize,
    pub parse_errors: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub wall_ms: Option<u64>,
}

impl Summary {
    pub fn tally(conjecture: ConjectureId, records: &[Record]) -> Summary {
        let count = |s: Status| records.iter().filter(|r| r.status == s).count();
        let (holds, violated) = (count(Status::Holds), count(Status::Violated));
        Summary {
            conjecture,
            graphs: records.len(),
            applicable: holds + violated,
            holds,
            violated,
            not_applicable: count(Status::NotApplicable),
            filtered_out: 0,
            parse_errors: 0,
            wall_ms: None,
        }
    }

    /// 0 when nothing was violated, 2 otherwise.
    pub fn exit_status(&self) -> i32 {
        if self.violated > 0 {
            2
        } else {
            0
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Report {
    pub records: Vec<Record>,
    pub summary: Summary,
}

#[derive(Serialize)]
struct SummaryLine<'a> {
    summary: &'a Summary,
}

#[derive(Debug, thiserror::Error)]
pub enum ReportError {
    #[error("{0}")]
    Io(#[from] io::Error),
    #[error("line {line}: {message}")]
    Line { line: usize, message: String },
}

pub fn write_record<W: Write + ?Sized>(w: &mut W, r: &Record) -> io::Result<()> {
    serde_json::to_writer(&mut *w, r)?;
    w.write_all(b"\n")
}

pub fn write_summary<W: Write + ?Sized>(w: &mut W, s: &Summary) -> io::Result<()> {
    serde_json::to_writer(&mut *w, &SummaryLine { summary: s })?;
    w.write_all(b"\n")
}

pub fn write_report<W: Write>(mut w: W, report: &Report) -> io::Result<()> {
    for r in &report.records {
        write_record(&mut w, r)?;
    }
    write_summary(&mut w, &report.summary)?;
    w.flush()
}

/// Inverse of [`write_report`]. The summary must be the last line and its
/// tallies must match the records.
pub fn read_report<R: BufRead>(r: R) -> Result<Report, ReportError> {
    let mut records = Vec::new();
    let mut summary = None;
    let mut last = 0;
    for (i, text) in r.lines().enumerate() {
        let line = i + 1;
        last = line;
        let text = text?;
        let err = |message: String| ReportError::Line { line, message };
        if summary.is_some() {
            return Err(err("content after the summary line".into()));
        }
        let value: serde_json::Value =
            serde_json::from_str(&text).map_err(|e| err(e.to_string()))?;
        match value.get("summary") {
            Some(s) => {
                if value.as_object().is_some_and(|o| o.len() != 1) {
                    return Err(err("unexpected fields beside the summary".into()));
                }
                summary = Some(Summary::deserialize(s).map_err(|e| err(e.to_string()))?);
            }
            None => records.push(Record::deserialize(&value).map_err(|e| err(e.to_string()))?),
        }
    }
    let summary = summary.ok_or(ReportError::Line {
        line: last + 1,
        message: "missing summary line".into(),
    })?;
    let expect = Summary::tally(summary.conjecture, &records);
    let counts = |s: &Summary| {
        (
            s.graphs,
            s.applicable,
            s.holds,
            s.violated,
            s.not_applicable,
        )
    };
    if counts(&expect) != counts(&summary) {
        return Err(ReportError::Line {
            line: last,
            message: "summary tallies differ from the records".into(),
        });
    }
    Ok(Report { records, summary })
}

pub fn write_report_file(path: &Path, report: &Report) -> io::Result<()> {
    write_report(BufWriter::new(File::create(path)?), report)
}

pub fn read_report_file(path: &Path) -> Result<Report, ReportError> {
    read_report(BufReader::new(File::open(path)?))
}
