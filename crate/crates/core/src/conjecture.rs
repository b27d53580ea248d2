//! Per-graph decision procedures and counterexample certificates.
//!
//! Every checker quantifies over all vertex pairs and all optima (all
//! longest cycles for the chord statements) and stops at the first
//! violation, which it returns as a [`Certificate`] that
//! [`verify_certificate`] re-checks from the graph alone.

use alloc::boxed::Box;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::bound::{
    cycle_chords, internal_bound_vertices, path_bound_vertices, theorem5_extract,
    validate_st_instance, StError, StInstance,
};
use crate::connectivity::vertex_connectivity;
use crate::graph::{Graph, VertexSet};
use crate::graph6::{encode_graph6, parse_graph6};
use crate::path::{Cycle, Path};
use crate::search::{
    enumerate_longest_cycles, enumerate_longest_xy_paths, longest_cycle, longest_path,
    longest_xy_path,
};

/// The statement being checked. Parses from and prints as the tokens
/// `1`, `2`, `3`, `4`, `6` and `thm5`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub enum ConjectureId {
    /// Every longest cycle of a 3-connected graph has a chord.
    #[cfg_attr(feature = "serde", serde(rename = "1"))]
    ChordThreeConnected,
    /// Every longest cycle of a 2-connected graph with δ ≥ 3 has a chord.
    #[cfg_attr(feature = "serde", serde(rename = "2"))]
    ChordMinDegree,
    /// In a k-connected graph (k ≥ 2) every longest (x,y)-path has at least
    /// k - 1 internal bound vertices.
    #[cfg_attr(feature = "serde", serde(rename = "3"))]
    InternalBound,
    /// In a 2-connected graph every longest (x,y)-path has a bound vertex.
    #[cfg_attr(feature = "serde", serde(rename = "4"))]
    AnyBound,
    /// In an S/T instance the path on S is not a longest (x,y)-path.
    #[cfg_attr(feature = "serde", serde(rename = "6"))]
    StPath,
    /// A longest path in a graph of minimum degree d ≥ 2 has d - 1 internal
    /// bound vertices (and d + 1 bound vertices in all when d ≥ 1).
    #[cfg_attr(feature = "serde", serde(rename = "thm5"))]
    Rotation,
}

impl ConjectureId {
    pub const ALL: [ConjectureId; 6] = [
        ConjectureId::ChordThreeConnected,
        ConjectureId::ChordMinDegree,
        ConjectureId::InternalBound,
        ConjectureId::AnyBound,
        ConjectureId::StPath,
        ConjectureId::Rotation,
    ];

    pub fn token(self) -> &'static str {
        match self {
            ConjectureId::ChordThreeConnected => "1",
            ConjectureId::ChordMinDegree => "2",
            ConjectureId::InternalBound => "3",
            ConjectureId::AnyBound => "4",
            ConjectureId::StPath => "6",
            ConjectureId::Rotation => "thm5",
        }
    }

    fn is_cycle_statement(self) -> bool {
        matches!(
            self,
            ConjectureId::ChordThreeConnected | ConjectureId::ChordMinDegree
        )
    }
}

impl fmt::Display for ConjectureId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.token())
    }
}

impl FromStr for ConjectureId {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "6-instance" => Ok(ConjectureId::StPath),
            _ => ConjectureId::ALL
                .into_iter()
                .find(|c| c.token() == s)
                .ok_or_else(|| {
                    alloc::format!("unknown conjecture `{s}` (expected 1, 2, 3, 4, 6 or thm5)")
                }),
        }
    }
}

/// A hypothesis that failed, making a statement vacuous for a graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Gate {
    Connectivity {
        required: usize,
        actual: usize,
    },
    MinDegree {
        required: usize,
        actual: usize,
    },
    Disconnected,
    /// No S/T partition of the graph satisfies the three conditions.
    NoStInstance,
    /// The path on S does not satisfy an S/T condition.
    StCondition {
        condition: u8,
        vertex: usize,
    },
}

impl fmt::Display for Gate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Gate::Connectivity { required, actual } => {
                write!(f, "connectivity {actual} below {required}")
            }
            Gate::MinDegree { required, actual } => {
                write!(f, "minimum degree {actual} below {required}")
            }
            Gate::Disconnected => f.write_str("graph is disconnected"),
            Gate::NoStInstance => f.write_str("no S/T instance in graph"),
            Gate::StCondition { condition, vertex } => {
                write!(f, "S/T condition ({condition}) fails at vertex {vertex}")
            }
        }
    }
}

/// A claimed counterexample, re-checkable from `graph6` alone.
///
/// `claimed_len` is the path length in edges, or the cycle length for the
/// chord statements. `evidence` lists the bound vertices the statement
/// counts (internal ones for [`ConjectureId::InternalBound`] and
/// [`ConjectureId::Rotation`], all of them otherwise) or, for the chord
/// statements, the cycle vertices incident to a chord.
#[derive(Clone, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct Certificate {
    pub conjecture: ConjectureId,
    pub graph6: String,
    pub x: Option<usize>,
    pub y: Option<usize>,
    pub sequence: Vec<usize>,
    pub claimed_len: usize,
    pub evidence: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Outcome {
    Holds,
    Violated(Box<Certificate>),
    NotApplicable(Gate),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "snake_case"))]
pub enum Status {
    Holds,
    Violated,
    NotApplicable,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct Stats {
    pub pairs_examined: usize,
    /// Optimal paths, longest cycles or S/T instances looked at.
    pub optima_examined: usize,
    /// Smallest evidence count seen: internal bound vertices for statement
    /// 3 and thm5, bound vertices for 4, chords for 1 and 2.
    pub min_bound: Option<usize>,
}

impl Stats {
    fn observe(&mut self, count: usize) {
        self.optima_examined += 1;
        self.min_bound = Some(self.min_bound.map_or(count, |m| m.min(count)));
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Verdict {
    pub outcome: Outcome,
    pub stats: Stats,
    /// A path showing the statement at work where one exists: the longer
    /// path for an S/T instance, the longest path for thm5.
    pub witness: Option<Path>,
}

impl Verdict {
    pub fn status(&self) -> Status {
        match self.outcome {
            Outcome::Holds => Status::Holds,
            Outcome::Violated(_) => Status::Violated,
            Outcome::NotApplicable(_) => Status::NotApplicable,
        }
    }

    pub fn certificate(&self) -> Option<&Certificate> {
        match &self.outcome {
            Outcome::Violated(c) => Some(c),
            _ => None,
        }
    }

    fn not_applicable(gate: Gate) -> Verdict {
        Verdict {
            outcome: Outcome::NotApplicable(gate),
            stats: Stats::default(),
            witness: None,
        }
    }
}

fn path_certificate(
    id: ConjectureId,
    g: &Graph,
    p: &Path,
    evidence: VertexSet,
) -> Box<Certificate> {
    Box::new(Certificate {
        conjecture: id,
        graph6: encode_graph6(g),
        x: Some(p.start()),
        y: Some(p.end()),
        sequence: p.vertices().to_vec(),
        claimed_len: p.len(),
        evidence: evidence.to_vec(),
    })
}

fn connectivity_gate(g: &Graph, required: usize) -> Result<usize, Gate> {
    let k = vertex_connectivity(g);
    if k < required {
        Err(Gate::Connectivity {
            required,
            actual: k,
        })
    } else {
        Ok(k)
    }
}

/// Shared loop of statements 3 and 4: over all pairs and all maximum
/// paths, count bound vertices and demand at least `need`.
fn check_bound_statement(g: &Graph, id: ConjectureId, need: usize, internal: bool) -> Verdict {
    let mut stats = Stats::default();
    let n = g.order();
    for x in 0..n {
        for y in x + 1..n {
            stats.pairs_examined += 1;
            let optima = enumerate_longest_xy_paths(g, x, y).expect("distinct in-range pair");
            for p in optima {
                let bound = if internal {
                    internal_bound_vertices(g, &p)
                } else {
                    path_bound_vertices(g, &p)
                };
                stats.observe(bound.len());
                if bound.len() < need {
                    return Verdict {
                        outcome: Outcome::Violated(path_certificate(id, g, &p, bound)),
                        stats,
                        witness: None,
                    };
                }
            }
        }
    }
    Verdict {
        outcome: Outcome::Holds,
        stats,
        witness: None,
    }
}

/// With k = κ(G) ≥ 2, every longest (x,y)-path must carry at least k - 1
/// internal bound vertices. Smaller k ask for fewer, so k = κ decides all.
pub fn check_conjecture3(g: &Graph) -> Verdict {
    match connectivity_gate(g, 2) {
        Ok(k) => check_bound_statement(g, ConjectureId::InternalBound, k - 1, true),
        Err(gate) => Verdict::not_applicable(gate),
    }
}

/// Every longest (x,y)-path of a 2-connected graph has a bound vertex,
/// endpoints included.
pub fn check_conjecture4(g: &Graph) -> Verdict {
    match connectivity_gate(g, 2) {
        Ok(_) => check_bound_statement(g, ConjectureId::AnyBound, 1, false),
        Err(gate) => Verdict::not_applicable(gate),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ChordVariant {
    /// κ ≥ 3.
    ThreeConnected,
    /// κ ≥ 2 and δ ≥ 3.
    MinDegreeThree,
}

impl ChordVariant {
    fn id(self) -> ConjectureId {
        match self {
            ChordVariant::ThreeConnected => ConjectureId::ChordThreeConnected,
            ChordVariant::MinDegreeThree => ConjectureId::ChordMinDegree,
        }
    }

    fn gate(self, g: &Graph) -> Result<(), Gate> {
        match self {
            ChordVariant::ThreeConnected => connectivity_gate(g, 3).map(|_| ()),
            ChordVariant::MinDegreeThree => {
                let d = g.min_degree();
                if d < 3 {
                    return Err(Gate::MinDegree {
                        required: 3,
                        actual: d,
                    });
                }
                connectivity_gate(g, 2).map(|_| ())
            }
        }
    }
}

fn chord_endpoints(chords: &[(usize, usize)]) -> VertexSet {
    chords.iter().flat_map(|&(u, v)| [u, v]).collect()
}

/// Every longest cycle must have a chord.
pub fn check_chord_conjecture(g: &Graph, variant: ChordVariant) -> Verdict {
    if let Err(gate) = variant.gate(g) {
        return Verdict::not_applicable(gate);
    }
    let mut stats = Stats::default();
    for c in enumerate_longest_cycles(g) {
        let chords = cycle_chords(g, &c).expect("enumerated cycles are valid");
        stats.observe(chords.len());
        if chords.is_empty() {
            let cert = Certificate {
                conjecture: variant.id(),
                graph6: encode_graph6(g),
                x: None,
                y: None,
                claimed_len: c.len(),
                sequence: c.vertices().to_vec(),
                evidence: Vec::new(),
            };
            return Verdict {
                outcome: Outcome::Violated(Box::new(cert)),
                stats,
                witness: None,
            };
        }
    }
    Verdict {
        outcome: Outcome::Holds,
        stats,
        witness: None,
    }
}

/// Decides whether the path of a valid S/T instance is a longest
/// (x,y)-path. It holds when a strictly longer path exists, which is
/// returned as the witness.
pub fn check_conjecture6_instance(inst: &StInstance) -> Result<Verdict, StError> {
    let report = validate_st_instance(&inst.graph, &inst.path, inst.t_set)?;
    if !report.passes() {
        return Err(StError::Condition(report));
    }
    Ok(judge_st_path(&inst.graph, &inst.path, None))
}

fn judge_st_path(g: &Graph, p: &Path, known_max: Option<&PathSearchCache>) -> Verdict {
    let (x, y) = (p.start(), p.end());
    let best = match known_max {
        Some(cache) => cache.get(g, x, y),
        None => longest_xy_path(g, x, y)
            .expect("distinct endpoints")
            .map(|r| r.witness),
    };
    let mut stats = Stats {
        pairs_examined: 1,
        ..Stats::default()
    };
    stats.observe(path_bound_vertices(g, p).len());
    match best {
        Some(w) if w.len() > p.len() => Verdict {
            outcome: Outcome::Holds,
            stats,
            witness: Some(w),
        },
        _ => Verdict {
            outcome: Outcome::Violated(path_certificate(
                ConjectureId::StPath,
                g,
                p,
                path_bound_vertices(g, p),
            )),
            stats,
            witness: None,
        },
    }
}

/// Longest (x,y)-path per pair, computed on first use.
struct PathSearchCache {
    n: usize,
    slots: core::cell::RefCell<Vec<Option<Option<Path>>>>,
}

impl PathSearchCache {
    fn new(n: usize) -> Self {
        PathSearchCache {
            n,
            slots: core::cell::RefCell::new(alloc::vec![None; n * n]),
        }
    }

    fn get(&self, g: &Graph, x: usize, y: usize) -> Option<Path> {
        let key = x.min(y) * self.n + x.max(y);
        let mut slots = self.slots.borrow_mut();
        slots[key]
            .get_or_insert_with(|| {
                longest_xy_path(g, x.min(y), x.max(y))
                    .expect("distinct endpoints")
                    .map(|r| r.witness)
            })
            .clone()
    }
}

/// Induced paths `P` of `g` (listed once, from the smaller end) such that
/// `P` and the remaining vertices form an S/T instance.
pub fn st_instances(g: &Graph) -> Vec<Path> {
    fn grow(g: &Graph, path: &mut Vec<usize>, on: VertexSet, out: &mut Vec<Path>) {
        let tip = *path.last().expect("non-empty");
        if path.len() >= 2 && path[0] < tip {
            let p = Path::from_vec_unchecked(path.clone());
            let t = g.vertices() - on;
            if validate_st_instance(g, &p, t).is_ok_and(|r| r.passes()) {
                out.push(p);
            }
        }
        for v in g.neighbors(tip) - on {
            // induced: v sees no earlier path vertex but the tip
            if (g.neighbors(v) & on) == VertexSet::singleton(tip) {
                path.push(v);
                let mut next = on;
                next.insert(v);
                grow(g, path, next, out);
                path.pop();
            }
        }
    }
    let mut out = Vec::new();
    for s in 0..g.order() {
        grow(g, &mut alloc::vec![s], VertexSet::singleton(s), &mut out);
    }
    out
}

/// Searches `g` for S/T instances whose path is a longest (x,y)-path.
pub fn search_st_instances(g: &Graph) -> Verdict {
    let instances = st_instances(g);
    if instances.is_empty() {
        return Verdict::not_applicable(Gate::NoStInstance);
    }
    let cache = PathSearchCache::new(g.order());
    let mut stats = Stats::default();
    let mut pairs = Vec::new();
    for p in &instances {
        let v = judge_st_path(g, p, Some(&cache));
        let key = (p.start(), p.end());
        if !pairs.contains(&key) {
            pairs.push(key);
        }
        stats.optima_examined += 1;
        stats.min_bound = match (stats.min_bound, v.stats.min_bound) {
            (Some(a), Some(b)) => Some(a.min(b)),
            (a, b) => a.or(b),
        };
        stats.pairs_examined = pairs.len();
        if v.status() == Status::Violated {
            return Verdict { stats, ..v };
        }
    }
    Verdict {
        outcome: Outcome::Holds,
        stats,
        witness: None,
    }
}

/// Runs the rotation argument on one longest path of a connected graph and
/// checks its two conclusions: `d - 1` internal bound vertices when
/// `d ≥ 2`, and `d + 1` bound vertices in all when `d ≥ 1`. The statement is
/// a theorem, so a violation means a bug in the search or the extractor.
pub fn check_theorem5(g: &Graph) -> Verdict {
    if g.order() < 2 || !g.is_connected() {
        return Verdict::not_applicable(Gate::Disconnected);
    }
    let d = g.min_degree();
    let q = longest_path(g);
    let internal = internal_bound_vertices(g, &q);
    let all = path_bound_vertices(g, &q);
    let mut stats = Stats {
        pairs_examined: 0,
        optima_examined: 1,
        min_bound: Some(internal.len()),
    };
    let extracted_ok = d < 2
        || theorem5_extract(g, &q, false).is_ok_and(|w| {
            let f = w.f_set();
            f.len() == d - 1 && f.iter().all(|&v| internal.contains(v))
        });
    let holds = extracted_ok && internal.len() + 1 >= d && all.len() > d;
    stats.pairs_examined = 1;
    let outcome = if holds {
        Outcome::Holds
    } else {
        Outcome::Violated(path_certificate(ConjectureId::Rotation, g, &q, internal))
    };
    Verdict {
        outcome,
        stats,
        witness: Some(q),
    }
}

/// Dispatches to the checker for `id`; statement 6 searches the graph for
/// S/T instances.
pub fn check(g: &Graph, id: ConjectureId) -> Verdict {
    match id {
        ConjectureId::ChordThreeConnected => {
            check_chord_conjecture(g, ChordVariant::ThreeConnected)
        }
        ConjectureId::ChordMinDegree => check_chord_conjecture(g, ChordVariant::MinDegreeThree),
        ConjectureId::InternalBound => check_conjecture3(g),
        ConjectureId::AnyBound => check_conjecture4(g),
        ConjectureId::StPath => search_st_instances(g),
        ConjectureId::Rotation => check_theorem5(g),
    }
}

/// Why a certificate was refused.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Rejection {
    Malformed(String),
    GateFails(Gate),
    NotOptimal {
        claimed: usize,
        optimum: usize,
    },
    /// The recomputed evidence satisfies the statement.
    EvidenceNonempty {
        recomputed: Vec<usize>,
    },
}

impl Rejection {
    pub fn code(&self) -> &'static str {
        match self {
            Rejection::Malformed(_) => "malformed",
            Rejection::GateFails(_) => "gate-fails",
            Rejection::NotOptimal { .. } => "not-optimal",
            Rejection::EvidenceNonempty { .. } => "evidence-nonempty",
        }
    }
}

impl fmt::Display for Rejection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Rejection::Malformed(why) => write!(f, "malformed: {why}"),
            Rejection::GateFails(gate) => write!(f, "gate-fails: {gate}"),
            Rejection::NotOptimal { claimed, optimum } => {
                write!(
                    f,
                    "not-optimal: claimed length {claimed}, optimum {optimum}"
                )
            }
            Rejection::EvidenceNonempty { recomputed } => {
                write!(
                    f,
                    "evidence-nonempty: recomputed evidence {recomputed:?} satisfies the statement"
                )
            }
        }
    }
}

impl core::error::Error for Rejection {}

/// Re-derives a certificate from its graph: structure, hypotheses,
/// optimality of the claimed path or cycle by a fresh exact search, and the
/// evidence. Accepts only a genuine counterexample.
pub fn verify_certificate(cert: &Certificate) -> Result<(), Rejection> {
    let malformed = |why: &str| Rejection::Malformed(why.to_string());
    let g = parse_graph6(&cert.graph6).map_err(|e| Rejection::Malformed(e.to_string()))?;
    let id = cert.conjecture;
    let seq = cert.sequence.clone();

    if id.is_cycle_statement() {
        if cert.x.is_some() || cert.y.is_some() {
            return Err(malformed("cycle certificates carry no endpoint pair"));
        }
        let c = Cycle::new(&g, seq).map_err(|e| Rejection::Malformed(e.to_string()))?;
        if c.len() != cert.claimed_len {
            return Err(malformed("claimed length differs from the cycle"));
        }
        let variant = if id == ConjectureId::ChordThreeConnected {
            ChordVariant::ThreeConnected
        } else {
            ChordVariant::MinDegreeThree
        };
        variant.gate(&g).map_err(Rejection::GateFails)?;
        let optimum = longest_cycle(&g).map_or(0, |r| r.max_len);
        if optimum != c.len() {
            return Err(Rejection::NotOptimal {
                claimed: c.len(),
                optimum,
            });
        }
        let chords = cycle_chords(&g, &c).expect("validated");
        let recomputed = chord_endpoints(&chords).to_vec();
        if !recomputed.is_empty() {
            return Err(Rejection::EvidenceNonempty { recomputed });
        }
        return check_claimed_evidence(cert, &recomputed);
    }

    let p = Path::new(&g, seq).map_err(|e| Rejection::Malformed(e.to_string()))?;
    if p.vertices().len() < 2 {
        return Err(malformed("path has a single vertex"));
    }
    if p.len() != cert.claimed_len {
        return Err(malformed("claimed length differs from the path"));
    }
    match (cert.x, cert.y) {
        (Some(x), Some(y)) if x == p.start() && y == p.end() => {}
        _ => return Err(malformed("endpoint pair does not match the path")),
    }

    // hypotheses and the amount of evidence the statement asks for
    let (need, internal) = match id {
        ConjectureId::InternalBound => {
            let k = connectivity_gate(&g, 2).map_err(Rejection::GateFails)?;
            (k - 1, true)
        }
        ConjectureId::AnyBound => {
            connectivity_gate(&g, 2).map_err(Rejection::GateFails)?;
            (1, false)
        }
        ConjectureId::StPath => {
            let t = g.vertices() - p.vertex_set();
            let report =
                validate_st_instance(&g, &p, t).map_err(|e| Rejection::Malformed(e.to_string()))?;
            if let Some((condition, vertex)) = report.first_failure() {
                return Err(Rejection::GateFails(Gate::StCondition {
                    condition,
                    vertex,
                }));
            }
            (1, false)
        }
        ConjectureId::Rotation => {
            if !g.is_connected() {
                return Err(Rejection::GateFails(Gate::Disconnected));
            }
            let d = g.min_degree();
            if d < 2 {
                return Err(Rejection::GateFails(Gate::MinDegree {
                    required: 2,
                    actual: d,
                }));
            }
            (d - 1, true)
        }
        ConjectureId::ChordThreeConnected | ConjectureId::ChordMinDegree => unreachable!(),
    };

    let optimum = if id == ConjectureId::Rotation {
        longest_path(&g).len()
    } else {
        longest_xy_path(&g, p.start(), p.end())
            .expect("distinct endpoints")
            .map_or(0, |r| r.max_len)
    };
    if optimum != p.len() {
        return Err(Rejection::NotOptimal {
            claimed: p.len(),
            optimum,
        });
    }

    let recomputed = if internal {
        internal_bound_vertices(&g, &p)
    } else {
        path_bound_vertices(&g, &p)
    };
    if recomputed.len() >= need {
        return Err(Rejection::EvidenceNonempty {
            recomputed: recomputed.to_vec(),
        });
    }
    check_claimed_evidence(cert, &recomputed.to_vec())
}

fn check_claimed_evidence(cert: &Certificate, recomputed: &[usize]) -> Result<(), Rejection> {
    let mut claimed = cert.evidence.clone();
    claimed.sort_unstable();
    claimed.dedup();
    if claimed != recomputed {
        return Err(Rejection::Malformed(alloc::format!(
            "claimed evidence {:?} differs from recomputed {:?}",
            cert.evidence,
            recomputed
        )));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::fixtures::*;
    use alloc::vec;

    #[test]
    fn conjecture3_named_graphs() {
        let v = check_conjecture3(&complete(4));
        assert_eq!(v.status(), Status::Holds);
        assert_eq!(v.stats.min_bound, Some(2));
        assert_eq!(v.stats.pairs_examined, 6);
        // two Hamiltonian optima per pair
        assert_eq!(v.stats.optima_examined, 12);
        let v = check_conjecture3(&cycle(5));
        assert_eq!(v.status(), Status::Holds);
        assert!(v.stats.min_bound.unwrap() >= 1);
        let v = check_conjecture3(&path(5));
        assert_eq!(
            v.outcome,
            Outcome::NotApplicable(Gate::Connectivity {
                required: 2,
                actual: 1
            })
        );
    }

    #[test]
    fn conjecture3_adjacent_pair_on_c5_has_three_internal_bound() {
        let g = cycle(5);
        let p: Vec<Path> = enumerate_longest_xy_paths(&g, 0, 1).unwrap().collect();
        assert_eq!(internal_bound_vertices(&g, &p[0]).len(), 3);
    }

    #[test]
    fn conjecture4_named_graphs() {
        assert_eq!(check_conjecture4(&cycle(5)).status(), Status::Holds);
        assert_eq!(check_conjecture4(&complete(4)).status(), Status::Holds);
        assert_eq!(check_conjecture4(&petersen()).status(), Status::Holds);
    }

    #[test]
    fn chord_named_graphs() {
        let v = check_chord_conjecture(&complete(4), ChordVariant::ThreeConnected);
        assert_eq!(v.status(), Status::Holds);
        assert_eq!(v.stats.min_bound, Some(2));
        let v = check_chord_conjecture(&petersen(), ChordVariant::ThreeConnected);
        assert_eq!(v.status(), Status::Holds);
        assert_eq!(v.stats.min_bound, Some(3));
        let v = check_chord_conjecture(&cycle(4), ChordVariant::ThreeConnected);
        assert_eq!(
            v.outcome,
            Outcome::NotApplicable(Gate::Connectivity {
                required: 3,
                actual: 2
            })
        );
        let v = check_chord_conjecture(&cycle(5), ChordVariant::MinDegreeThree);
        assert_eq!(
            v.outcome,
            Outcome::NotApplicable(Gate::MinDegree {
                required: 3,
                actual: 2
            })
        );
    }

    fn st_fixture() -> Graph {
        Graph::new(5, [(0, 1), (1, 2), (3, 0), (3, 1), (4, 1), (4, 2)]).unwrap()
    }

    #[test]
    fn conjecture6_fixture_has_longer_path() {
        let g = st_fixture();
        let inst = StInstance {
            graph: g.clone(),
            path: Path::new(&g, vec![0, 1, 2]).unwrap(),
            t_set: [3, 4].into_iter().collect(),
            contraction: None,
        };
        let v = check_conjecture6_instance(&inst).unwrap();
        assert_eq!(v.status(), Status::Holds);
        let w = v.witness.unwrap();
        assert_eq!(w.vertices(), [0, 3, 1, 4, 2]);
        assert_eq!(w.len(), 4);
    }

    #[test]
    fn conjecture6_rejects_invalid_instance() {
        let g = Graph::new(5, [(0, 1), (1, 2), (4, 1), (4, 2), (3, 1)]).unwrap();
        let inst = StInstance {
            graph: g.clone(),
            path: Path::new(&g, vec![0, 1, 2]).unwrap(),
            t_set: [3, 4].into_iter().collect(),
            contraction: None,
        };
        assert!(matches!(
            check_conjecture6_instance(&inst),
            Err(StError::Condition(_))
        ));
    }

    #[test]
    fn st_instance_search() {
        let g = st_fixture();
        let found = st_instances(&g);
        assert!(found.iter().any(|p| p.vertices() == [0, 1, 2]));
        assert_eq!(search_st_instances(&g).status(), Status::Holds);
        assert_eq!(
            search_st_instances(&complete(4)).outcome,
            Outcome::NotApplicable(Gate::NoStInstance)
        );
    }

    #[test]
    fn theorem5_named_graphs() {
        let v = check_theorem5(&cycle(5));
        assert_eq!(v.status(), Status::Holds);
        let q = v.witness.unwrap();
        assert_eq!(internal_bound_vertices(&cycle(5), &q).len(), 3);
        assert_eq!(path_bound_vertices(&cycle(5), &q).len(), 5);
        let k4 = complete(4);
        let v = check_theorem5(&k4);
        assert_eq!(v.status(), Status::Holds);
        assert_eq!(v.stats.min_bound, Some(2));
        assert_eq!(check_theorem5(&path(4)).status(), Status::Holds);
        assert_eq!(
            check_theorem5(&Graph::empty(2).unwrap()).outcome,
            Outcome::NotApplicable(Gate::Disconnected)
        );
    }

    fn forged(id: ConjectureId, g: &Graph, seq: Vec<usize>, evidence: Vec<usize>) -> Certificate {
        let cyc = id.is_cycle_statement();
        Certificate {
            conjecture: id,
            graph6: encode_graph6(g),
            x: (!cyc).then(|| seq[0]),
            y: (!cyc).then(|| *seq.last().unwrap()),
            claimed_len: if cyc { seq.len() } else { seq.len() - 1 },
            sequence: seq,
            evidence,
        }
    }

    #[test]
    fn forged_certificates_are_rejected() {
        let k4 = complete(4);
        let c = forged(ConjectureId::InternalBound, &k4, vec![0, 1, 2, 3], vec![]);
        assert_eq!(
            verify_certificate(&c),
            Err(Rejection::EvidenceNonempty {
                recomputed: vec![1, 2]
            })
        );
        let c = forged(ConjectureId::InternalBound, &k4, vec![0, 1], vec![]);
        assert_eq!(
            verify_certificate(&c),
            Err(Rejection::NotOptimal {
                claimed: 1,
                optimum: 3
            })
        );
        let c = forged(ConjectureId::InternalBound, &path(3), vec![0, 1, 2], vec![]);
        assert_eq!(verify_certificate(&c).unwrap_err().code(), "gate-fails");
        let mut c = forged(ConjectureId::AnyBound, &k4, vec![0, 1, 2, 3], vec![]);
        c.graph6 = "C~~".into();
        assert_eq!(verify_certificate(&c).unwrap_err().code(), "malformed");
        let c = forged(ConjectureId::AnyBound, &k4, vec![0, 2, 1, 3], vec![]);
        assert_eq!(
            verify_certificate(&c).unwrap_err().code(),
            "evidence-nonempty"
        );
        let c = forged(
            ConjectureId::ChordThreeConnected,
            &k4,
            vec![0, 1, 2, 3],
            vec![],
        );
        assert_eq!(
            verify_certificate(&c).unwrap_err().code(),
            "evidence-nonempty"
        );
        let c = forged(
            ConjectureId::ChordMinDegree,
            &cycle(5),
            vec![0, 1, 2, 3, 4],
            vec![],
        );
        assert_eq!(verify_certificate(&c).unwrap_err().code(), "gate-fails");
        let c = forged(ConjectureId::Rotation, &k4, vec![0, 1, 2, 3], vec![]);
        assert_eq!(
            verify_certificate(&c).unwrap_err().code(),
            "evidence-nonempty"
        );
        let mut c = forged(ConjectureId::InternalBound, &k4, vec![0, 1, 2, 3], vec![]);
        c.claimed_len = 2;
        assert_eq!(verify_certificate(&c).unwrap_err().code(), "malformed");
    }

    #[test]
    fn st_certificate_needs_valid_instance() {
        // T = {4, 5} is not independent
        let c6 = cycle(6);
        let c = forged(ConjectureId::StPath, &c6, vec![0, 1, 2, 3], vec![]);
        assert_eq!(verify_certificate(&c).unwrap_err().code(), "gate-fails");
    }

    #[test]
    fn conjecture_tokens() {
        for id in ConjectureId::ALL {
            assert_eq!(id.token().parse::<ConjectureId>().unwrap(), id);
        }
        assert_eq!(
            "6-instance".parse::<ConjectureId>().unwrap(),
            ConjectureId::StPath
        );
        assert!("5".parse::<ConjectureId>().is_err());
    }
}
