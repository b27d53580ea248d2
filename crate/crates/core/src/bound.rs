//! Bound vertices, cycle chords, the rotation argument for longest paths,
//! and the contraction of a path's complement into an S/T instance.
//!
//! A vertex `v` of a subgraph `H` is *`H`-bound* when every neighbour of `v`
//! in the host graph lies in `H`.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::graph::{Graph, VertexSet};
use crate::path::{Cycle, Path, PathError};
use crate::search::longest_path;

/// `{ v ∈ h : N(v) ⊆ h }`.
pub fn bound_vertices(g: &Graph, h: VertexSet) -> VertexSet {
    h.iter().filter(|&v| g.neighbors(v).is_subset(h)).collect()
}

/// Path-bound vertices of `p`, endpoints included.
pub fn path_bound_vertices(g: &Graph, p: &Path) -> VertexSet {
    bound_vertices(g, p.vertex_set())
}

/// Path-bound vertices of `p` other than its two ends.
pub fn internal_bound_vertices(g: &Graph, p: &Path) -> VertexSet {
    path_bound_vertices(g, p) & p.internal_set()
}

/// Edges of `g` joining two vertices of `c` that are not consecutive on it,
/// as `(u, v)` with `u < v` in edge order.
pub fn cycle_chords(g: &Graph, c: &Cycle) -> Result<Vec<(usize, usize)>, PathError> {
    c.validate(g)?;
    let on = c.vertex_set();
    let k = c.len();
    let verts = c.vertices();
    // cycle neighbours of each vertex
    let mut ring = [0u64; 64];
    for i in 0..k {
        let (a, b) = (verts[i], verts[(i + 1) % k]);
        ring[a] |= 1 << b;
        ring[b] |= 1 << a;
    }
    Ok(g.edges()
        .filter(|&(u, v)| on.contains(u) && on.contains(v) && ring[u] >> v & 1 == 0)
        .collect())
}

/// One rotation: the path re-rooted at `f`, the predecessor of a neighbour
/// `w` of the first vertex, which covers the same vertex set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rotation {
    pub w: usize,
    pub f: usize,
    /// `f … u_1` backwards along the path, then the edge `u_1 w`, then on
    /// from `w` to the last vertex.
    pub rotated: Path,
}

/// Internal bound vertices certified by rotations of a longest path.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Theorem5Witness {
    pub q: Path,
    pub min_degree: usize,
    /// One rotation per neighbour of `u_1` past `u_2`, in path order. The
    /// first `min_degree - 1` form the witness.
    pub rotations: Vec<Rotation>,
}

impl Theorem5Witness {
    /// The first `d - 1` certified vertices by path position.
    pub fn f_set(&self) -> Vec<usize> {
        self.rotations
            .iter()
            .take(self.min_degree - 1)
            .map(|r| r.f)
            .collect()
    }

    /// Every certified vertex, including any beyond the first `d - 1`.
    pub fn all_f(&self) -> Vec<usize> {
        self.rotations.iter().map(|r| r.f).collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Theorem5Error {
    InvalidPath(PathError),
    MinDegreeTooSmall(usize),
    /// `u_1` has this neighbour off the path, so the path extends.
    StartNotBound {
        neighbor: usize,
    },
    /// A rotated path ends at a vertex with a neighbour off the path.
    RotationNotBound {
        vertex: usize,
    },
    NotLongest {
        len: usize,
        longest: usize,
    },
}

impl fmt::Display for Theorem5Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Theorem5Error::InvalidPath(e) => write!(f, "invalid path: {e}"),
            Theorem5Error::MinDegreeTooSmall(d) => write!(f, "minimum degree {d} is below 2"),
            Theorem5Error::StartNotBound { neighbor } => write!(
                f,
                "first vertex has neighbour {neighbor} off the path; not a longest path"
            ),
            Theorem5Error::RotationNotBound { vertex } => write!(
                f,
                "rotated path end {vertex} has a neighbour off the path; not a longest path"
            ),
            Theorem5Error::NotLongest { len, longest } => {
                write!(
                    f,
                    "path has length {len} but the longest path has length {longest}"
                )
            }
        }
    }
}

impl core::error::Error for Theorem5Error {}

/// Extracts `d - 1` internal bound vertices from a longest path `q` of a
/// graph with minimum degree `d ≥ 2`, each certified by a rotation of `q`.
///
/// With `verify` set, the length of `q` is first compared against an exact
/// longest-path search.
pub fn theorem5_extract(
    g: &Graph,
    q: &Path,
    verify: bool,
) -> Result<Theorem5Witness, Theorem5Error> {
    q.validate(g).map_err(Theorem5Error::InvalidPath)?;
    let d = g.min_degree();
    if d < 2 {
        return Err(Theorem5Error::MinDegreeTooSmall(d));
    }
    if verify {
        let longest = longest_path(g).len();
        if longest != q.len() {
            return Err(Theorem5Error::NotLongest {
                len: q.len(),
                longest,
            });
        }
    }
    let verts = q.vertices();
    let on = q.vertex_set();
    let u1 = verts[0];
    if let Some(neighbor) = (g.neighbors(u1) - on).min() {
        return Err(Theorem5Error::StartNotBound { neighbor });
    }
    let mut rotations = Vec::new();
    for (p, &w) in verts.iter().enumerate().skip(2) {
        if !g.has_edge(u1, w) {
            continue;
        }
        let f = verts[p - 1];
        let mut rotated: Vec<usize> = verts[..p].iter().rev().copied().collect();
        rotated.extend_from_slice(&verts[p..]);
        if !g.neighbors(f).is_subset(on) {
            return Err(Theorem5Error::RotationNotBound { vertex: f });
        }
        rotations.push(Rotation {
            w,
            f,
            rotated: Path::from_vec_unchecked(rotated),
        });
    }
    debug_assert_eq!(rotations.len(), g.degree(u1) - 1);
    Ok(Theorem5Witness {
        q: q.clone(),
        min_degree: d,
        rotations,
    })
}

/// The S/T instance built by contracting each component of `G - V(P)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Contraction {
    pub host: Graph,
    /// Host vertex of each S-vertex `0..|P|` of the contracted graph.
    pub s_map: Vec<usize>,
    /// Host component contracted into T-vertex `|P| + i`.
    pub components: Vec<VertexSet>,
}

/// A graph with an `(x,y)`-path `P` on the vertex set `S` and the remaining
/// vertices `T`. `contraction` is present when the instance was built from a
/// host graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StInstance {
    pub graph: Graph,
    pub path: Path,
    pub t_set: VertexSet,
    pub contraction: Option<Contraction>,
}

/// Outcome of each S/T condition: `None` if it holds, otherwise the first
/// offending vertex.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct StReport {
    /// `G[S]` is exactly the path and `T` is independent.
    pub induced_path: Option<usize>,
    /// Every S-vertex has a T-neighbour.
    pub s_has_t_neighbor: Option<usize>,
    /// Every T-vertex has at least two S-neighbours.
    pub t_has_two_s_neighbors: Option<usize>,
}

impl StReport {
    pub fn passes(&self) -> bool {
        self.first_failure().is_none()
    }

    /// `(condition number, vertex)` of the first failing condition.
    pub fn first_failure(&self) -> Option<(u8, usize)> {
        [
            self.induced_path,
            self.s_has_t_neighbor,
            self.t_has_two_s_neighbors,
        ]
        .iter()
        .zip(1u8..)
        .find_map(|(v, i)| v.map(|v| (i, v)))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum StError {
    InvalidPath(PathError),
    /// Path vertices and `T` do not partition the vertex set.
    NotPartition,
    /// The path has this bound vertex, so contraction does not apply.
    BoundVertex(usize),
    /// The contracted instance fails a condition.
    Condition(StReport),
    EndpointMismatch,
}

impl fmt::Display for StError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            StError::InvalidPath(e) => write!(f, "invalid path: {e}"),
            StError::NotPartition => f.write_str("path vertices and T do not partition the graph"),
            StError::BoundVertex(v) => write!(f, "path vertex {v} is bound"),
            StError::Condition(r) => match r.first_failure() {
                Some((c, v)) => write!(f, "condition ({c}) fails at vertex {v}"),
                None => f.write_str("instance conditions hold"),
            },
            StError::EndpointMismatch => f.write_str("path endpoints differ from the instance's"),
        }
    }
}

impl core::error::Error for StError {}

/// Checks the three S/T conditions for the path `s_path` and the set `t`.
pub fn validate_st_instance(g: &Graph, s_path: &Path, t: VertexSet) -> Result<StReport, StError> {
    let verts = s_path.vertices();
    if verts.is_empty() {
        return Err(StError::InvalidPath(PathError::Empty));
    }
    let mut s = VertexSet::EMPTY;
    for &v in verts {
        if v >= g.order() {
            return Err(StError::InvalidPath(PathError::OutOfRange(v)));
        }
        if s.contains(v) {
            return Err(StError::InvalidPath(PathError::Repeated(v)));
        }
        s.insert(v);
    }
    if s.intersects(t) || (s | t) != g.vertices() {
        return Err(StError::NotPartition);
    }
    let mut report = StReport::default();
    let k = verts.len();
    let path_chord = (0..k).find(|&i| {
        let mut expect = VertexSet::EMPTY;
        if i > 0 {
            expect.insert(verts[i - 1]);
        }
        if i + 1 < k {
            expect.insert(verts[i + 1]);
        }
        g.neighbors(verts[i]) & s != expect
    });
    report.induced_path = path_chord
        .map(|i| verts[i])
        .or_else(|| t.iter().find(|&v| g.neighbors(v).intersects(t)));
    report.s_has_t_neighbor = verts
        .iter()
        .copied()
        .find(|&v| !g.neighbors(v).intersects(t));
    report.t_has_two_s_neighbors = t.iter().find(|&v| (g.neighbors(v) & s).len() < 2);
    Ok(report)
}

/// Contracts every component of `G - V(p)` to a single T-vertex joined to
/// the path vertices adjacent to it. Requires that `p` has no bound vertex.
/// The report records the three conditions; condition (3) can only fail
/// when `g` is not 2-connected.
pub fn build_st_graph(g: &Graph, p: &Path) -> Result<(StInstance, StReport), StError> {
    p.validate(g).map_err(StError::InvalidPath)?;
    let on = p.vertex_set();
    if let Some(&v) = p.vertices().iter().find(|&&v| g.neighbors(v).is_subset(on)) {
        return Err(StError::BoundVertex(v));
    }
    contract_path_complement(g, p)
}

/// The contraction behind [`build_st_graph`] without the bound-vertex
/// precondition; bound path vertices then show up as condition (2)
/// failures.
pub fn contract_path_complement(g: &Graph, p: &Path) -> Result<(StInstance, StReport), StError> {
    p.validate(g).map_err(StError::InvalidPath)?;
    let on = p.vertex_set();
    let components = g.components_within(g.vertices() - on);
    let s = p.vertices().len();
    let mut h = Graph::empty(s + components.len()).expect("no larger than the host");
    for i in 1..s {
        h.add_edge(i - 1, i);
    }
    for (i, &u) in p.vertices().iter().enumerate() {
        for (c, comp) in components.iter().enumerate() {
            if g.neighbors(u).intersects(*comp) {
                h.add_edge(i, s + c);
            }
        }
    }
    let path = Path::from_vec_unchecked((0..s).collect());
    let t_set = h.vertices() - VertexSet::full(s);
    let report = validate_st_instance(&h, &path, t_set)?;
    let inst = StInstance {
        graph: h,
        path,
        t_set,
        contraction: Some(Contraction {
            host: g.clone(),
            s_map: p.vertices().to_vec(),
            components,
        }),
    };
    Ok((inst, report))
}

/// Shortest `a`–`b` path inside `within`, ties broken towards smaller
/// vertices.
fn shortest_path_within(g: &Graph, a: usize, b: usize, within: VertexSet) -> Option<Vec<usize>> {
    let mut parent = [usize::MAX; 64];
    parent[a] = a;
    let mut queue = vec![a];
    let mut head = 0;
    while head < queue.len() {
        let u = queue[head];
        head += 1;
        if u == b {
            break;
        }
        for v in g.neighbors(u) & within {
            if parent[v] == usize::MAX {
                parent[v] = u;
                queue.push(v);
            }
        }
    }
    if parent[b] == usize::MAX {
        return None;
    }
    let mut out = vec![b];
    let mut v = b;
    while v != a {
        v = parent[v];
        out.push(v);
    }
    out.reverse();
    Some(out)
}

/// Turns an `(x,y)`-path `w` of the instance graph into an `(x,y)`-path of
/// the host graph that is at least as long: each segment `r, C, f` through a
/// T-vertex becomes `r`, a shortest path inside component `C` between the
/// smallest neighbours of `r` and of `f` in `C`, then `f`.
pub fn lift_path(inst: &StInstance, w: &Path) -> Result<Path, StError> {
    w.validate(&inst.graph).map_err(StError::InvalidPath)?;
    if w.start() != inst.path.start() || w.end() != inst.path.end() {
        return Err(StError::EndpointMismatch);
    }
    let Some(con) = &inst.contraction else {
        return Ok(w.clone());
    };
    let s = con.s_map.len();
    let wv = w.vertices();
    let mut out = Vec::with_capacity(con.host.order());
    for (i, &h) in wv.iter().enumerate() {
        if h < s {
            out.push(con.s_map[h]);
            continue;
        }
        // endpoints are S-vertices and T is independent, so both
        // neighbours on w exist and are S-vertices
        let comp = con.components[h - s];
        let r = con.s_map[wv[i - 1]];
        let f = con.s_map[wv[i + 1]];
        let a = (con.host.neighbors(r) & comp).min().expect("r touches C");
        let b = (con.host.neighbors(f) & comp).min().expect("f touches C");
        let inner = shortest_path_within(&con.host, a, b, comp).expect("components are connected");
        out.extend(inner);
    }
    let lifted = Path::from_vec_unchecked(out);
    debug_assert!(lifted.validate(&con.host).is_ok());
    Ok(lifted)
}
