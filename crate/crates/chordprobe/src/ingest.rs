//! Graph sources: graph6 text from a reader, or the internal generator.

use std::fs::File;
use std::io::{self, BufRead, BufReader};
use std::ops::RangeInclusive;
use std::path::PathBuf;
use std::str::FromStr;

use chordprobe_core::generate::{enumerate_graphs, ClassFilter, EnumError, OrderlyGenerator};
use chordprobe_core::graph::Graph;
use chordprobe_core::graph6::{parse_graph6, Graph6Error, HEADER};

#[derive(Debug, thiserror::Error)]
pub enum IngestError {
    #[error("cannot read {path}: {source}")]
    Open { path: PathBuf, source: io::Error },
    #[error("read error after line {line}: {source}")]
    Io { line: usize, source: io::Error },
    #[error("line {line}: {source}")]
    Parse { line: usize, source: Graph6Error },
    #[error(transparent)]
    Generate(#[from] EnumError),
}

/// What to do with a line that does not decode.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum ParsePolicy {
    #[default]
    Abort,
    Skip,
}

impl FromStr for ParsePolicy {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "abort" => Ok(ParsePolicy::Abort),
            "skip" => Ok(ParsePolicy::Skip),
            _ => Err(format!(
                "unknown parse-error policy `{s}` (expected abort or skip)"
            )),
        }
    }
}

/// Decodes one graph per line, numbering lines from 1. Blank lines and bare
/// `>>graph6<<` header lines are skipped.
pub struct Graph6Lines<R> {
    reader: R,
    line: usize,
    buf: String,
}

impl<R: BufRead> Graph6Lines<R> {
    pub fn new(reader: R) -> Self {
        Graph6Lines {
            reader,
            line: 0,
            buf: String::new(),
        }
    }
}

impl<R: BufRead> Iterator for Graph6Lines<R> {
    type Item = Result<(usize, Graph), IngestError>;

    fn next(&mut self) -> Option<Self::Item> {
        loop {
            self.buf.clear();
            match self.reader.read_line(&mut self.buf) {
                Ok(0) => return None,
                Ok(_) => self.line += 1,
                Err(source) => {
                    return Some(Err(IngestError::Io {
                        line: self.line,
                        source,
                    }))
                }
            }
            let text = self.buf.trim_end_matches(['\n', '\r']);
            if text.trim().is_empty() || text == HEADER {
                continue;
            }
            let line = self.line;
            return Some(
                parse_graph6(text)
                    .map(|g| (line, g))
                    .map_err(|source| IngestError::Parse { line, source }),
            );
        }
    }
}

/// Where graphs come from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Source {
    /// The orderly generator, run over the configured order range.
    Internal,
    File(PathBuf),
    Stdin,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StreamItem {
    pub graph: Graph,
    /// Source line for text input.
    pub line: Option<usize>,
}

enum Inner {
    Internal {
        orders: RangeInclusive<usize>,
        filter: ClassFilter,
        current: Option<OrderlyGenerator>,
    },
    Text(Graph6Lines<Box<dyn BufRead + Send>>),
}

/// A uniform stream over either source. Internal generation applies the
/// class filter while generating; text input is passed through unfiltered.
pub struct GraphStream {
    inner: Inner,
}

impl GraphStream {
    pub fn internal(
        orders: RangeInclusive<usize>,
        filter: ClassFilter,
    ) -> Result<Self, IngestError> {
        if !orders.is_empty() {
            enumerate_graphs(*orders.start(), filter)?;
            enumerate_graphs(*orders.end(), filter)?;
        }
        Ok(GraphStream {
            inner: Inner::Internal {
                orders,
                filter,
                current: None,
            },
        })
    }

    pub fn from_reader(reader: Box<dyn BufRead + Send>) -> Self {
        GraphStream {
            inner: Inner::Text(Graph6Lines::new(reader)),
        }
    }

    pub fn open(
        source: &Source,
        orders: RangeInclusive<usize>,
        filter: ClassFilter,
    ) -> Result<Self, IngestError> {
        match source {
            Source::Internal => GraphStream::internal(orders, filter),
            Source::Stdin => Ok(GraphStream::from_reader(Box::new(BufReader::new(
                io::stdin(),
            )))),
            Source::File(path) => {
                let file = File::open(path).map_err(|source| IngestError::Open {
                    path: path.clone(),
                    source,
                })?;
                Ok(GraphStream::from_reader(Box::new(BufReader::new(file))))
            }
        }
    }

    pub fn is_internal(&self) -> bool {
        matches!(self.inner, Inner::Internal { .. })
    }
}

impl Iterator for GraphStream {
    type Item = Result<StreamItem, IngestError>;

    fn next(&mut self) -> Option<Self::Item> {
        match &mut self.inner {
            Inner::Text(lines) => Some(lines.next()?.map(|(line, graph)| StreamItem {
                graph,
                line: Some(line),
            })),
            Inner::Internal {
                orders,
                filter,
                current,
            } => loop {
                if let Some(graph) = current.as_mut().and_then(Iterator::next) {
                    return Some(Ok(StreamItem { graph, line: None }));
                }
                let n = orders.next()?;
                match enumerate_graphs(n, *filter) {
                    Ok(g) => *current = Some(g),
                    Err(e) => return Some(Err(e.into())),
                }
            },
        }
    }
}
