//! Isomorph-free graph generation by orderly vertex addition.
//!
//! The canonical code of a labelled graph is its upper-triangle bit string
//! read column by column, `x(0,1), x(0,2), x(1,2), x(0,3), ...`, with earlier
//! bits more significant. A labelled graph is canonical when no relabelling
//! yields a smaller code. Deleting the last vertex of a canonical graph
//! leaves a canonical graph (its code is a prefix), so every class on `n`
//! vertices is reached exactly once by extending canonical graphs on `n - 1`
//! vertices with one new vertex and keeping only canonical results.
//!
//! Children of a parent are tried in increasing order of their last column,
//! so the stream comes out sorted by canonical code.

use alloc::vec::Vec;
use core::fmt;

use crate::connectivity::vertex_connectivity;
use crate::graph::{Graph, VertexSet};

/// Largest order the internal generator accepts.
pub const MAX_GENERATED_ORDER: usize = 12;

/// Search-class restrictions. The default admits every graph.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct ClassFilter {
    pub min_connectivity: usize,
    pub regular_degree: Option<usize>,
    pub triangle_free: bool,
    pub c4_free: bool,
    pub min_degree: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum EnumError {
    OrderOutOfRange(usize),
    /// `min_degree` exceeds `regular_degree`.
    InconsistentFilter,
}

impl fmt::Display for EnumError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EnumError::OrderOutOfRange(n) => write!(
                f,
                "internal generation supports orders 1..={MAX_GENERATED_ORDER}, got {n}"
            ),
            EnumError::InconsistentFilter => {
                f.write_str("minimum degree exceeds the regular degree")
            }
        }
    }
}

impl core::error::Error for EnumError {}

impl ClassFilter {
    pub fn validate(&self) -> Result<(), EnumError> {
        match self.regular_degree {
            Some(d) if self.min_degree > d => Err(EnumError::InconsistentFilter),
            _ => Ok(()),
        }
    }

    pub fn accepts(&self, g: &Graph) -> bool {
        let p = g.class_profile();
        if p.min_degree < self.min_degree
            || self.regular_degree.is_some_and(|d| !p.is_regular(d))
            || (self.triangle_free && !p.triangle_free)
            || (self.c4_free && !p.c4_free)
        {
            return false;
        }
        self.min_connectivity == 0 || vertex_connectivity(g) >= self.min_connectivity
    }

    /// Degree every vertex of an accepted graph must reach. κ ≥ k forces
    /// δ ≥ k.
    fn required_degree(&self) -> usize {
        self.min_degree
            .max(self.regular_degree.unwrap_or(0))
            .max(self.min_connectivity)
    }
}

/// Whether no relabelling of `g` has a smaller canonical code.
pub fn is_canonical(g: &Graph) -> bool {
    let n = g.order();
    let mut cols = [0u64; 64];
    for (j, col) in cols.iter_mut().enumerate().take(n) {
        *col = g.neighbors(j).bits() & ((1u64 << j) - 1);
    }
    let mut search = CanonSearch {
        g,
        cols,
        pos: [0; 64],
        used: 0,
    };
    search.extend(0)
}

struct CanonSearch<'g> {
    g: &'g Graph,
    cols: [u64; 64],
    /// Position assigned to each already placed vertex.
    pos: [usize; 64],
    used: u64,
}

impl CanonSearch<'_> {
    /// Returns false as soon as some relabelling beats the identity.
    fn extend(&mut self, depth: usize) -> bool {
        let n = self.g.order();
        if depth == n {
            return true;
        }
        let target = self.cols[depth];
        let mut free = !self.used & VertexSet::full(n).bits();
        while free != 0 {
            let v = free.trailing_zeros() as usize;
            free &= free - 1;
            let mut col = 0u64;
            for u in VertexSet::from_bits(self.g.neighbors(v).bits() & self.used) {
                col |= 1 << self.pos[u];
            }
            let diff = col ^ target;
            if diff != 0 {
                // earliest differing row decides; a 0 there is smaller
                if target >> diff.trailing_zeros() & 1 == 1 {
                    return false;
                }
                continue;
            }
            self.pos[v] = depth;
            self.used |= 1 << v;
            let ok = self.extend(depth + 1);
            self.used &= !(1 << v);
            if !ok {
                return false;
            }
        }
        true
    }
}

/// Every isomorphism class of graphs on `n` vertices passing `filter`, once
/// each, in increasing canonical-code order.
pub fn enumerate_graphs(n: usize, filter: ClassFilter) -> Result<OrderlyGenerator, EnumError> {
    if n == 0 || n > MAX_GENERATED_ORDER {
        return Err(EnumError::OrderOutOfRange(n));
    }
    filter.validate()?;
    Ok(OrderlyGenerator::new(n, filter))
}

struct Frame {
    graph: Graph,
    /// Next last-column value to try, as a bit string with vertex 0 most
    /// significant.
    next: u64,
}

/// Lazy depth-first orderly generator; see [`enumerate_graphs`].
pub struct OrderlyGenerator {
    order: usize,
    filter: ClassFilter,
    stack: Vec<Frame>,
    emitted: usize,
}

impl OrderlyGenerator {
    fn new(order: usize, filter: ClassFilter) -> Self {
        let root = Graph::empty(1).expect("order 1 is valid");
        OrderlyGenerator {
            order,
            filter,
            stack: alloc::vec![Frame {
                graph: root,
                next: 0,
            }],
            emitted: 0,
        }
    }

    /// Graphs yielded so far.
    pub fn position(&self) -> usize {
        self.emitted
    }

    /// Hereditary restrictions and degree look-ahead for a new vertex joined
    /// to `nbrs` in `parent`.
    fn admissible(&self, parent: &Graph, nbrs: VertexSet) -> bool {
        let f = &self.filter;
        if f.triangle_free && nbrs.iter().any(|u| parent.neighbors(u).intersects(nbrs)) {
            return false;
        }
        if f.c4_free && (0..parent.order()).any(|w| (parent.neighbors(w) & nbrs).len() > 1) {
            return false;
        }
        if let Some(d) = f.regular_degree {
            if nbrs.len() > d || nbrs.iter().any(|u| parent.degree(u) >= d) {
                return false;
            }
        }
        let need = f.required_degree();
        if need > 0 {
            let remaining = self.order - parent.order() - 1;
            if nbrs.len() + remaining < need {
                return false;
            }
            for v in 0..parent.order() {
                let gain = nbrs.contains(v) as usize;
                if parent.degree(v) + gain + remaining < need {
                    return false;
                }
            }
        }
        true
    }
}

impl Iterator for OrderlyGenerator {
    type Item = Graph;

    fn next(&mut self) -> Option<Graph> {
        if self.order == 1 {
            // the root itself is the only graph
            let frame = self.stack.pop()?;
            if self.filter.accepts(&frame.graph) {
                self.emitted += 1;
                return Some(frame.graph);
            }
            return None;
        }
        loop {
            let frame = self.stack.last_mut()?;
            let m = frame.graph.order();
            if frame.next == 1u64 << m {
                self.stack.pop();
                continue;
            }
            let code = frame.next;
            frame.next += 1;
            let nbrs = VertexSet::from_bits(code.reverse_bits() >> (64 - m));
            let parent = &self.stack.last().expect("frame exists").graph;
            if !self.admissible(parent, nbrs) {
                continue;
            }
            let child = parent.with_vertex(nbrs);
            if !is_canonical(&child) {
                continue;
            }
            if m + 1 == self.order {
                if self.filter.accepts(&child) {
                    self.emitted += 1;
                    return Some(child);
                }
            } else {
                self.stack.push(Frame {
                    graph: child,
                    next: 0,
                });
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::fixtures::*;

    #[test]
    fn small_counts() {
        let counts: Vec<usize> = (1..=6)
            .map(|n| enumerate_graphs(n, ClassFilter::default()).unwrap().count())
            .collect();
        assert_eq!(counts, [1, 2, 4, 11, 34, 156]);
    }

    #[test]
    fn rejects_unsupported_orders() {
        assert_eq!(
            enumerate_graphs(0, ClassFilter::default()).err(),
            Some(EnumError::OrderOutOfRange(0))
        );
        assert_eq!(
            enumerate_graphs(13, ClassFilter::default()).err(),
            Some(EnumError::OrderOutOfRange(13))
        );
        let bad = ClassFilter {
            regular_degree: Some(2),
            min_degree: 3,
            ..ClassFilter::default()
        };
        assert_eq!(
            enumerate_graphs(5, bad).err(),
            Some(EnumError::InconsistentFilter)
        );
    }

    #[test]
    fn canonical_codes() {
        // the edgeless and complete graphs are canonical under any labelling
        assert!(is_canonical(&Graph::empty(5).unwrap()));
        assert!(is_canonical(&complete(5)));
        // path 0-1-2 has x(0,1) = 1, but a labelling with the two ends first
        // starts with 0
        assert!(!is_canonical(&path(3)));
        assert!(is_canonical(&Graph::new(3, [(0, 2), (1, 2)]).unwrap()));
    }

    #[test]
    fn stream_is_sorted_by_code() {
        let graphs: Vec<Graph> = enumerate_graphs(5, ClassFilter::default())
            .unwrap()
            .collect();
        let codes: Vec<Vec<bool>> = graphs
            .iter()
            .map(|g| {
                (1..5)
                    .flat_map(|j| (0..j).map(move |i| (i, j)))
                    .map(|(i, j)| g.has_edge(i, j))
                    .collect()
            })
            .collect();
        assert!(codes.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn class_filters() {
        let cubic = ClassFilter {
            regular_degree: Some(3),
            ..ClassFilter::default()
        };
        assert_eq!(enumerate_graphs(4, cubic).unwrap().count(), 1);
        assert_eq!(enumerate_graphs(6, cubic).unwrap().count(), 2);
        assert_eq!(enumerate_graphs(8, cubic).unwrap().count(), 6);
        assert_eq!(enumerate_graphs(5, cubic).unwrap().count(), 0);
        let tf = ClassFilter {
            triangle_free: true,
            ..ClassFilter::default()
        };
        let tf_counts: Vec<usize> = (1..=7)
            .map(|n| enumerate_graphs(n, tf).unwrap().count())
            .collect();
        assert_eq!(tf_counts, [1, 2, 3, 7, 14, 38, 107]);
        let k2 = ClassFilter {
            min_connectivity: 2,
            ..ClassFilter::default()
        };
        for g in enumerate_graphs(6, k2).unwrap() {
            assert!(vertex_connectivity(&g) >= 2);
        }
    }
}
