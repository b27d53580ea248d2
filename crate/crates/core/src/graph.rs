//! Small simple undirected graphs with one `u64` adjacency row per vertex.

use alloc::vec::Vec;
use core::fmt;
use core::ops::{BitAnd, BitAndAssign, BitOr, BitOrAssign, Not, Sub};

/// Largest supported order.
pub const MAX_ORDER: usize = 64;

/// A set of vertex indices in `0..64`.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(transparent))]
pub struct VertexSet(u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    #[inline]
    pub const fn from_bits(bits: u64) -> Self {
        VertexSet(bits)
    }

    #[inline]
    pub const fn bits(self) -> u64 {
        self.0
    }

    /// `{0, 1, ..., n-1}`.
    #[inline]
    pub const fn full(n: usize) -> Self {
        if n >= 64 {
            VertexSet(u64::MAX)
        } else {
            VertexSet((1u64 << n) - 1)
        }
    }

    #[inline]
    pub const fn singleton(v: usize) -> Self {
        VertexSet(1u64 << v)
    }

    #[inline]
    pub const fn contains(self, v: usize) -> bool {
        v < 64 && self.0 >> v & 1 == 1
    }

    #[inline]
    pub fn insert(&mut self, v: usize) {
        self.0 |= 1u64 << v;
    }

    #[inline]
    pub fn remove(&mut self, v: usize) {
        self.0 &= !(1u64 << v);
    }

    #[inline]
    pub const fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    #[inline]
    pub const fn is_empty(self) -> bool {
        self.0 == 0
    }

    #[inline]
    pub const fn is_subset(self, other: VertexSet) -> bool {
        self.0 & !other.0 == 0
    }

    #[inline]
    pub const fn intersects(self, other: VertexSet) -> bool {
        self.0 & other.0 != 0
    }

    /// Smallest member, if any.
    #[inline]
    pub const fn min(self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            Some(self.0.trailing_zeros() as usize)
        }
    }

    /// Members in ascending order.
    #[inline]
    pub fn iter(self) -> VertexIter {
        VertexIter(self.0)
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = VertexSet::EMPTY;
        for v in iter {
            s.insert(v);
        }
        s
    }
}

impl IntoIterator for VertexSet {
    type Item = usize;
    type IntoIter = VertexIter;
    fn into_iter(self) -> VertexIter {
        self.iter()
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl BitAnd for VertexSet {
    type Output = VertexSet;
    fn bitand(self, rhs: VertexSet) -> VertexSet {
        VertexSet(self.0 & rhs.0)
    }
}

impl BitOr for VertexSet {
    type Output = VertexSet;
    fn bitor(self, rhs: VertexSet) -> VertexSet {
        VertexSet(self.0 | rhs.0)
    }
}

impl Sub for VertexSet {
    type Output = VertexSet;
    fn sub(self, rhs: VertexSet) -> VertexSet {
        VertexSet(self.0 & !rhs.0)
    }
}

impl Not for VertexSet {
    type Output = VertexSet;
    fn not(self) -> VertexSet {
        VertexSet(!self.0)
    }
}

impl BitAndAssign for VertexSet {
    fn bitand_assign(&mut self, rhs: VertexSet) {
        self.0 &= rhs.0;
    }
}

impl BitOrAssign for VertexSet {
    fn bitor_assign(&mut self, rhs: VertexSet) {
        self.0 |= rhs.0;
    }
}

/// Ascending iterator over the members of a [`VertexSet`].
#[derive(Clone, Debug)]
pub struct VertexIter(u64);

impl Iterator for VertexIter {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(v)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let k = self.0.count_ones() as usize;
        (k, Some(k))
    }
}

impl ExactSizeIterator for VertexIter {}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GraphError {
    OrderOutOfRange(usize),
    SelfLoop(usize),
    VertexOutOfRange { vertex: usize, order: usize },
    EmptyVertexSet,
    Asymmetric { u: usize, v: usize },
}

impl fmt::Display for GraphError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GraphError::OrderOutOfRange(n) => {
                write!(f, "order {n} outside supported range 1..={MAX_ORDER}")
            }
            GraphError::SelfLoop(v) => write!(f, "self-loop at vertex {v}"),
            GraphError::VertexOutOfRange { vertex, order } => {
                write!(f, "vertex {vertex} out of range for order {order}")
            }
            GraphError::EmptyVertexSet => f.write_str("vertex set is empty"),
            GraphError::Asymmetric { u, v } => {
                write!(f, "adjacency not symmetric between {u} and {v}")
            }
        }
    }
}

impl core::error::Error for GraphError {}

/// Immutable simple undirected graph on `1..=64` vertices.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: [u64; MAX_ORDER],
}

impl Graph {
    /// Builds a graph from an edge list. Duplicate pairs collapse.
    pub fn new<I>(n: usize, edges: I) -> Result<Graph, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Graph::empty(n)?;
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(GraphError::VertexOutOfRange {
                    vertex: u.max(v),
                    order: n,
                });
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            g.add_edge(u, v);
        }
        Ok(g)
    }

    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Graph, GraphError> {
        if n == 0 || n > MAX_ORDER {
            return Err(GraphError::OrderOutOfRange(n));
        }
        Ok(Graph {
            n,
            adj: [0; MAX_ORDER],
        })
    }

    /// Builds a graph from raw adjacency rows, checking every invariant.
    pub fn from_rows(rows: &[u64]) -> Result<Graph, GraphError> {
        let n = rows.len();
        let mut g = Graph::empty(n)?;
        let all = VertexSet::full(n).bits();
        for (v, &row) in rows.iter().enumerate() {
            if row & !all != 0 {
                return Err(GraphError::VertexOutOfRange {
                    vertex: (row & !all).trailing_zeros() as usize,
                    order: n,
                });
            }
            if row >> v & 1 == 1 {
                return Err(GraphError::SelfLoop(v));
            }
            for u in VertexSet(row) {
                if rows[u] >> v & 1 == 0 {
                    return Err(GraphError::Asymmetric { u: v, v: u });
                }
            }
            g.adj[v] = row;
        }
        Ok(g)
    }

    pub(crate) fn add_edge(&mut self, u: usize, v: usize) {
        debug_assert!(u != v && u < self.n && v < self.n);
        self.adj[u] |= 1 << v;
        self.adj[v] |= 1 << u;
    }

    /// Same graph with one extra vertex `n` joined to `nbrs`.
    pub(crate) fn with_vertex(&self, nbrs: VertexSet) -> Graph {
        debug_assert!(self.n < MAX_ORDER && nbrs.is_subset(self.vertices()));
        let mut g = self.clone();
        let v = g.n;
        g.n += 1;
        g.adj[v] = nbrs.bits();
        for u in nbrs {
            g.adj[u] |= 1 << v;
        }
        g
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> VertexSet {
        VertexSet(self.adj[v])
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u] >> v & 1 == 1
    }

    pub fn rows(&self) -> &[u64] {
        &self.adj[..self.n]
    }

    pub fn edge_count(&self) -> usize {
        self.rows()
            .iter()
            .map(|r| r.count_ones() as usize)
            .sum::<usize>()
            / 2
    }

    /// Edges `(u, v)` with `u < v`, ordered by `u` then `v`.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| {
            VertexSet(self.adj[u] & !((2u64 << u).wrapping_sub(1)))
                .iter()
                .map(move |v| (u, v))
        })
    }

    pub fn min_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn is_complete(&self) -> bool {
        (0..self.n).all(|v| self.degree(v) == self.n - 1)
    }

    /// Vertices reachable from `v` inside `within`. `v` itself is always
    /// included.
    pub fn component_of(&self, v: usize, within: VertexSet) -> VertexSet {
        let within = within.bits() | 1 << v;
        let mut seen = 1u64 << v;
        let mut frontier = seen;
        while frontier != 0 {
            let mut next = 0u64;
            for u in VertexSet(frontier) {
                next |= self.adj[u];
            }
            next &= within & !seen;
            seen |= next;
            frontier = next;
        }
        VertexSet(seen)
    }

    /// Components of the subgraph induced by `within`, ordered by their
    /// minimum vertex.
    pub fn components_within(&self, within: VertexSet) -> Vec<VertexSet> {
        let mut rest = within & self.vertices();
        let mut out = Vec::new();
        while let Some(v) = rest.min() {
            let c = self.component_of(v, rest);
            rest = rest - c;
            out.push(c);
        }
        out
    }

    pub fn connected_components(&self) -> Vec<VertexSet> {
        self.components_within(self.vertices())
    }

    pub fn is_connected(&self) -> bool {
        self.component_of(0, self.vertices()) == self.vertices()
    }

    /// `G[s]`, relabelled by ascending old index. The returned map sends an
    /// old index to its new index, or `None` when it is not in `s`.
    pub fn induced_subgraph(
        &self,
        s: VertexSet,
    ) -> Result<(Graph, Vec<Option<usize>>), GraphError> {
        if s.is_empty() {
            return Err(GraphError::EmptyVertexSet);
        }
        if let Some(v) = (s - self.vertices()).min() {
            return Err(GraphError::VertexOutOfRange {
                vertex: v,
                order: self.n,
            });
        }
        let mut map = alloc::vec![None; self.n];
        for (new, old) in s.iter().enumerate() {
            map[old] = Some(new);
        }
        let mut h = Graph::empty(s.len())?;
        for (u, v) in self.edges() {
            if let (Some(a), Some(b)) = (map[u], map[v]) {
                h.add_edge(a, b);
            }
        }
        Ok((h, map))
    }

    pub fn class_profile(&self) -> ClassProfile {
        let mut triangle_free = true;
        let mut c4_free = true;
        for u in 0..self.n {
            for v in u + 1..self.n {
                let common = (self.adj[u] & self.adj[v]).count_ones();
                if common >= 2 {
                    c4_free = false;
                }
                if common >= 1 && self.has_edge(u, v) {
                    triangle_free = false;
                }
            }
        }
        ClassProfile {
            min_degree: self.min_degree(),
            max_degree: self.max_degree(),
            triangle_free,
            c4_free,
        }
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges=", self.n)?;
        f.debug_list().entries(self.edges()).finish()?;
        f.write_str(")")
    }
}

/// Degree bounds and forbidden-subgraph flags used by search-class filters.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ClassProfile {
    pub min_degree: usize,
    pub max_degree: usize,
    pub triangle_free: bool,
    /// No two vertices share two or more neighbours.
    pub c4_free: bool,
}

impl ClassProfile {
    pub fn is_regular(&self, d: usize) -> bool {
        self.min_degree == d && self.max_degree == d
    }
}
