//! Exact longest `(x,y)`-paths, longest paths and longest cycles.
//!
//! All searches are depth-first over simple paths, trying neighbours in
//! ascending order. A partial path is cut when its tip can no longer reach
//! the target through unused vertices, or when the number of unused
//! vertices reachable from the tip cannot lift it above the incumbent (or,
//! when enumerating optima, up to the known optimum).

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::graph::{Graph, VertexSet};
use crate::path::{Cycle, Path};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SearchError {
    SameEndpoints(usize),
    VertexOutOfRange(usize),
}

impl fmt::Display for SearchError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SearchError::SameEndpoints(v) => write!(f, "endpoints coincide at vertex {v}"),
            SearchError::VertexOutOfRange(v) => write!(f, "vertex {v} not in graph"),
        }
    }
}

impl core::error::Error for SearchError {}

/// A maximum `(x,y)`-path and its length in edges.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PathSearchResult {
    pub max_len: usize,
    pub witness: Path,
}

/// A longest cycle and its number of vertices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CycleSearchResult {
    pub max_len: usize,
    pub witness: Cycle,
}

fn check_pair(g: &Graph, x: usize, y: usize) -> Result<(), SearchError> {
    for v in [x, y] {
        if v >= g.order() {
            return Err(SearchError::VertexOutOfRange(v));
        }
    }
    if x == y {
        return Err(SearchError::SameEndpoints(x));
    }
    Ok(())
}

struct XyBranchAndBound<'g> {
    g: &'g Graph,
    target: usize,
    /// No path can exceed this many edges.
    cap: usize,
    path: Vec<usize>,
    visited: u64,
    best_len: Option<usize>,
    best: Vec<usize>,
}

impl XyBranchAndBound<'_> {
    /// Returns true once the cap is reached.
    fn dfs(&mut self) -> bool {
        let tip = *self.path.last().expect("path starts at x");
        let cands = self.g.neighbors(tip).bits() & !self.visited;
        for v in VertexSet::from_bits(cands) {
            let len = self.path.len();
            if v == self.target {
                if self.best_len.is_none_or(|b| len > b) {
                    self.best_len = Some(len);
                    self.best.clone_from(&self.path);
                    self.best.push(v);
                    if len == self.cap {
                        return true;
                    }
                }
                continue;
            }
            self.visited |= 1 << v;
            let reach = self
                .g
                .component_of(v, VertexSet::from_bits(!self.visited | 1 << v));
            // edges so far, plus at most one per reachable unused vertex
            let bound = len + reach.len() - 1;
            if reach.contains(self.target) && self.best_len.is_none_or(|b| bound > b) {
                self.path.push(v);
                let done = self.dfs();
                self.path.pop();
                if done {
                    self.visited &= !(1 << v);
                    return true;
                }
            }
            self.visited &= !(1 << v);
        }
        false
    }
}

/// Maximum `(x,y)`-path, or `None` when `x` and `y` lie in different
/// components. The witness is the lexicographically first optimum.
pub fn longest_xy_path(
    g: &Graph,
    x: usize,
    y: usize,
) -> Result<Option<PathSearchResult>, SearchError> {
    check_pair(g, x, y)?;
    let comp = g.component_of(x, g.vertices());
    if !comp.contains(y) {
        return Ok(None);
    }
    let mut bb = XyBranchAndBound {
        g,
        target: y,
        cap: comp.len() - 1,
        path: vec![x],
        visited: 1 << x,
        best_len: None,
        best: Vec::new(),
    };
    bb.dfs();
    Ok(bb.best_len.map(|max_len| PathSearchResult {
        max_len,
        witness: Path::from_vec_unchecked(bb.best),
    }))
}

/// Every maximum `(x,y)`-path, each once, in lexicographic order of vertex
/// sequence. Dropping the iterator early stops the search.
pub fn enumerate_longest_xy_paths(
    g: &Graph,
    x: usize,
    y: usize,
) -> Result<LongestPaths<'_>, SearchError> {
    let max_len = longest_xy_path(g, x, y)?.map(|r| r.max_len);
    Ok(LongestPaths::new(g, x, y, max_len))
}

/// Lazy enumeration of `(x,y)`-paths of one fixed length.
pub struct LongestPaths<'g> {
    g: &'g Graph,
    target: usize,
    max_len: Option<usize>,
    path: Vec<usize>,
    /// Untried neighbours of each path vertex.
    cands: Vec<u64>,
    visited: u64,
}

impl<'g> LongestPaths<'g> {
    fn new(g: &'g Graph, x: usize, y: usize, max_len: Option<usize>) -> Self {
        let started = max_len.is_some();
        LongestPaths {
            g,
            target: y,
            max_len,
            path: if started { vec![x] } else { Vec::new() },
            cands: if started {
                vec![g.neighbors(x).bits()]
            } else {
                Vec::new()
            },
            visited: 1 << x,
        }
    }

    /// Length in edges of every yielded path, `None` if there are none.
    pub fn max_len(&self) -> Option<usize> {
        self.max_len
    }
}

impl Iterator for LongestPaths<'_> {
    type Item = Path;

    fn next(&mut self) -> Option<Path> {
        let want = self.max_len?;
        loop {
            let top = self.cands.last_mut()?;
            if *top == 0 {
                self.cands.pop();
                let v = self.path.pop().expect("one path vertex per frame");
                self.visited &= !(1 << v);
                continue;
            }
            let v = top.trailing_zeros() as usize;
            *top &= *top - 1;
            let len = self.path.len();
            if v == self.target {
                if len == want {
                    let mut out = self.path.clone();
                    out.push(v);
                    return Some(Path::from_vec_unchecked(out));
                }
                continue;
            }
            if len >= want {
                continue;
            }
            let visited = self.visited | 1 << v;
            let reach = self
                .g
                .component_of(v, VertexSet::from_bits(!visited | 1 << v));
            if reach.contains(self.target) && len + reach.len() > want {
                self.visited = visited;
                self.path.push(v);
                self.cands.push(self.g.neighbors(v).bits() & !visited);
            }
        }
    }
}

struct LongestPathSearch<'g> {
    g: &'g Graph,
    cap: usize,
    path: Vec<usize>,
    visited: u64,
    best: Vec<usize>,
}

impl LongestPathSearch<'_> {
    fn dfs(&mut self) -> bool {
        if self.path.len() > self.best.len() {
            self.best.clone_from(&self.path);
            if self.best.len() - 1 == self.cap {
                return true;
            }
        }
        let tip = *self.path.last().expect("non-empty");
        for v in VertexSet::from_bits(self.g.neighbors(tip).bits() & !self.visited) {
            self.visited |= 1 << v;
            let reach = self
                .g
                .component_of(v, VertexSet::from_bits(!self.visited | 1 << v));
            // vertices on the finished path, at most
            if self.path.len() + reach.len() > self.best.len() {
                self.path.push(v);
                let done = self.dfs();
                self.path.pop();
                if done {
                    return true;
                }
            }
            self.visited &= !(1 << v);
        }
        false
    }
}

/// A longest path anywhere in `g` (the first found in ascending start /
/// neighbour order).
pub fn longest_path(g: &Graph) -> Path {
    let cap = g
        .connected_components()
        .iter()
        .map(|c| c.len() - 1)
        .max()
        .unwrap_or(0);
    let mut search = LongestPathSearch {
        g,
        cap,
        path: Vec::new(),
        visited: 0,
        best: vec![0],
    };
    for start in 0..g.order() {
        search.path = vec![start];
        search.visited = 1 << start;
        if search.dfs() {
            break;
        }
    }
    Path::from_vec_unchecked(search.best)
}

/// Longest-cycle search state for one anchor: cycles whose minimum vertex is
/// `anchor`, grown from it through larger vertices only. A cycle closes at a
/// neighbour of the anchor larger than the second vertex, so each cycle is
/// produced once, already in canonical order.
struct Anchored {
    anchor: usize,
    allowed: u64,
    path: Vec<usize>,
    visited: u64,
}

impl Anchored {
    fn new(g: &Graph, anchor: usize) -> Self {
        Anchored {
            anchor,
            allowed: g.vertices().bits() & !((2u64 << anchor).wrapping_sub(1)),
            path: vec![anchor],
            visited: 1 << anchor,
        }
    }

    /// Neighbours of the anchor that may close the cycle, given its second
    /// vertex.
    fn closers(&self, g: &Graph, second: usize) -> u64 {
        g.neighbors(self.anchor).bits() & self.allowed & !((2u64 << second).wrapping_sub(1))
    }

    /// Upper bound on the cycle order after pushing `v`, or `None` when the
    /// cycle can no longer close.
    fn bound_after(&self, g: &Graph, v: usize) -> Option<usize> {
        let visited = self.visited | 1 << v;
        let second = if self.path.len() == 1 {
            v
        } else {
            self.path[1]
        };
        let reach = g.component_of(v, VertexSet::from_bits(self.allowed & !visited | 1 << v));
        if reach.bits() & self.closers(g, second) == 0 {
            return None;
        }
        Some(self.path.len() + reach.len())
    }
}

fn longest_cycle_len(g: &Graph) -> Option<usize> {
    struct Bnb<'g> {
        g: &'g Graph,
        state: Anchored,
        best: usize,
    }
    impl Bnb<'_> {
        fn dfs(&mut self) -> bool {
            let g = self.g;
            let tip = *self.state.path.last().expect("non-empty");
            let cands = g.neighbors(tip).bits() & self.state.allowed & !self.state.visited;
            for v in VertexSet::from_bits(cands) {
                let Some(bound) = self.state.bound_after(g, v) else {
                    continue;
                };
                if bound <= self.best {
                    continue;
                }
                self.state.visited |= 1 << v;
                self.state.path.push(v);
                let k = self.state.path.len();
                if k >= 3
                    && self.state.closers(g, self.state.path[1]) >> v & 1 == 1
                    && k > self.best
                {
                    self.best = k;
                    if k == g.order() {
                        return true;
                    }
                }
                let done = self.dfs();
                self.state.path.pop();
                self.state.visited &= !(1 << v);
                if done {
                    return true;
                }
            }
            false
        }
    }
    let mut best = 0;
    for anchor in 0..g.order() {
        // cycles anchored here use only vertices >= anchor
        if g.order() - anchor <= best {
            break;
        }
        let mut bnb = Bnb {
            g,
            state: Anchored::new(g, anchor),
            best,
        };
        let done = bnb.dfs();
        best = bnb.best;
        if done {
            break;
        }
    }
    (best >= 3).then_some(best)
}

/// One longest cycle, the first in canonical order, or `None` for forests.
pub fn longest_cycle(g: &Graph) -> Option<CycleSearchResult> {
    let mut all = enumerate_longest_cycles(g);
    let max_len = all.max_len()?;
    let witness = all.next().expect("a longest cycle exists");
    Some(CycleSearchResult { max_len, witness })
}

/// Every longest cycle exactly once, in canonical form, ordered by minimum
/// vertex and then lexicographically.
pub fn enumerate_longest_cycles(g: &Graph) -> LongestCycles<'_> {
    let max_len = longest_cycle_len(g);
    LongestCycles {
        g,
        max_len,
        state: max_len.map(|_| Anchored::new(g, 0)),
        cands: vec![g.neighbors(0).bits() & !1],
    }
}

pub struct LongestCycles<'g> {
    g: &'g Graph,
    max_len: Option<usize>,
    state: Option<Anchored>,
    cands: Vec<u64>,
}

impl LongestCycles<'_> {
    /// Number of vertices on each yielded cycle, `None` for forests.
    pub fn max_len(&self) -> Option<usize> {
        self.max_len
    }
}

impl Iterator for LongestCycles<'_> {
    type Item = Cycle;

    fn next(&mut self) -> Option<Cycle> {
        let want = self.max_len?;
        let g = self.g;
        loop {
            let state = self.state.as_mut()?;
            let Some(top) = self.cands.last_mut() else {
                let anchor = state.anchor + 1;
                if g.order() - anchor.min(g.order()) < want {
                    self.state = None;
                    return None;
                }
                *state = Anchored::new(g, anchor);
                self.cands.push(g.neighbors(anchor).bits() & state.allowed);
                continue;
            };
            if *top == 0 {
                self.cands.pop();
                let v = state.path.pop().expect("one path vertex per frame");
                state.visited &= !(1 << v);
                continue;
            }
            let v = top.trailing_zeros() as usize;
            *top &= *top - 1;
            let k = state.path.len() + 1;
            if k > want {
                continue;
            }
            if k == want {
                if k >= 3 && state.closers(g, state.path[1]) >> v & 1 == 1 {
                    let mut out = state.path.clone();
                    out.push(v);
                    return Some(Cycle::from_canonical(out));
                }
                continue;
            }
            match state.bound_after(g, v) {
                Some(bound) if bound >= want => {
                    state.visited |= 1 << v;
                    state.path.push(v);
                    self.cands
                        .push(g.neighbors(v).bits() & state.allowed & !state.visited);
                }
                _ => {}
            }
        }
    }
}
