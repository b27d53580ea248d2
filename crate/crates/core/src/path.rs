//! Paths and cycles as vertex sequences over a host [`Graph`].

use alloc::vec::Vec;
use core::fmt;

use crate::graph::{Graph, VertexSet};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PathError {
    Empty,
    TooShort { len: usize, min: usize },
    OutOfRange(usize),
    Repeated(usize),
    NotAdjacent(usize, usize),
}

impl fmt::Display for PathError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PathError::Empty => f.write_str("empty vertex sequence"),
            PathError::TooShort { len, min } => {
                write!(f, "sequence has {len} vertices, need at least {min}")
            }
            PathError::OutOfRange(v) => write!(f, "vertex {v} not in graph"),
            PathError::Repeated(v) => write!(f, "vertex {v} repeated"),
            PathError::NotAdjacent(u, v) => write!(f, "{u} and {v} are not adjacent"),
        }
    }
}

impl core::error::Error for PathError {}

fn check_sequence(g: &Graph, verts: &[usize], closed: bool) -> Result<VertexSet, PathError> {
    let mut seen = VertexSet::EMPTY;
    for (i, &v) in verts.iter().enumerate() {
        if v >= g.order() {
            return Err(PathError::OutOfRange(v));
        }
        if seen.contains(v) {
            return Err(PathError::Repeated(v));
        }
        seen.insert(v);
        if i > 0 && !g.has_edge(verts[i - 1], v) {
            return Err(PathError::NotAdjacent(verts[i - 1], v));
        }
    }
    if closed {
        let (first, last) = (verts[0], verts[verts.len() - 1]);
        if !g.has_edge(last, first) {
            return Err(PathError::NotAdjacent(last, first));
        }
    }
    Ok(seen)
}

/// A simple path, stored as its vertex sequence from one end to the other.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(transparent))]
pub struct Path(Vec<usize>);

impl Path {
    /// Checks the sequence against `g` before wrapping it.
    pub fn new(g: &Graph, verts: Vec<usize>) -> Result<Path, PathError> {
        let p = Path(verts);
        p.validate(g)?;
        Ok(p)
    }

    /// Wraps a sequence without checking it; see [`Path::validate`].
    pub fn from_vec_unchecked(verts: Vec<usize>) -> Path {
        Path(verts)
    }

    pub fn validate(&self, g: &Graph) -> Result<(), PathError> {
        if self.0.is_empty() {
            return Err(PathError::Empty);
        }
        check_sequence(g, &self.0, false).map(|_| ())
    }

    pub fn vertices(&self) -> &[usize] {
        &self.0
    }

    pub fn into_vec(self) -> Vec<usize> {
        self.0
    }

    /// Length in edges.
    pub fn len(&self) -> usize {
        self.0.len().saturating_sub(1)
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn start(&self) -> usize {
        self.0[0]
    }

    pub fn end(&self) -> usize {
        self.0[self.0.len() - 1]
    }

    pub fn vertex_set(&self) -> VertexSet {
        self.0.iter().copied().collect()
    }

    /// Vertices other than the two ends.
    pub fn internal_set(&self) -> VertexSet {
        let mut s = self.vertex_set();
        if let (Some(&a), Some(&b)) = (self.0.first(), self.0.last()) {
            s.remove(a);
            s.remove(b);
        }
        s
    }

    pub fn position(&self, v: usize) -> Option<usize> {
        self.0.iter().position(|&u| u == v)
    }

    pub fn reversed(&self) -> Path {
        let mut v = self.0.clone();
        v.reverse();
        Path(v)
    }
}

impl fmt::Debug for Path {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_joined(f, &self.0)
    }
}

fn write_joined(f: &mut fmt::Formatter<'_>, verts: &[usize]) -> fmt::Result {
    for (i, v) in verts.iter().enumerate() {
        if i > 0 {
            f.write_str("-")?;
        }
        write!(f, "{v}")?;
    }
    Ok(())
}

/// A cycle on at least three vertices, stored canonically: it starts at its
/// minimum vertex and the smaller of that vertex's two cycle neighbours comes
/// second.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(transparent))]
pub struct Cycle(Vec<usize>);

impl Cycle {
    pub fn new(g: &Graph, verts: Vec<usize>) -> Result<Cycle, PathError> {
        let c = Cycle::canonical(verts);
        c.validate(g)?;
        Ok(c)
    }

    /// Rotates and possibly reflects `verts` into canonical order without
    /// checking adjacency.
    pub fn canonical(mut verts: Vec<usize>) -> Cycle {
        if let Some((pos, _)) = verts.iter().enumerate().min_by_key(|&(_, v)| *v) {
            verts.rotate_left(pos);
            let k = verts.len();
            if k >= 3 && verts[k - 1] < verts[1] {
                verts[1..].reverse();
            }
        }
        Cycle(verts)
    }

    /// Wraps an already canonical sequence.
    pub(crate) fn from_canonical(verts: Vec<usize>) -> Cycle {
        debug_assert_eq!(Cycle::canonical(verts.clone()).0, verts);
        Cycle(verts)
    }

    pub fn validate(&self, g: &Graph) -> Result<(), PathError> {
        if self.0.len() < 3 {
            return Err(PathError::TooShort {
                len: self.0.len(),
                min: 3,
            });
        }
        check_sequence(g, &self.0, true).map(|_| ())
    }

    pub fn vertices(&self) -> &[usize] {
        &self.0
    }

    /// Number of vertices, which equals the number of edges.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn vertex_set(&self) -> VertexSet {
        self.0.iter().copied().collect()
    }

    /// Whether `u` and `v` are next to each other around the cycle.
    pub fn are_consecutive(&self, u: usize, v: usize) -> bool {
        let k = self.0.len();
        (0..k).any(|i| {
            let (a, b) = (self.0[i], self.0[(i + 1) % k]);
            (a == u && b == v) || (a == v && b == u)
        })
    }
}

impl fmt::Debug for Cycle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        write_joined(f, &self.0)?;
        f.write_str(")")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::fixtures::*;
    use alloc::vec;

    #[test]
    fn path_invariants() {
        let c5 = cycle(5);
        let p = Path::new(&c5, vec![0, 1, 2, 3]).unwrap();
        assert_eq!(p.len(), 3);
        assert_eq!(p.internal_set().to_vec(), [1, 2]);
        assert_eq!(
            Path::new(&c5, vec![0, 2]),
            Err(PathError::NotAdjacent(0, 2))
        );
        assert_eq!(Path::new(&c5, vec![0, 1, 0]), Err(PathError::Repeated(0)));
        assert_eq!(Path::new(&c5, vec![]), Err(PathError::Empty));
        assert_eq!(Path::new(&c5, vec![7]), Err(PathError::OutOfRange(7)));
        assert_eq!(Path::new(&c5, vec![4]).unwrap().len(), 0);
    }

    #[test]
    fn cycle_canonical_form() {
        let c = Cycle::canonical(vec![3, 2, 1, 0]);
        assert_eq!(c.vertices(), [0, 1, 2, 3]);
        let c = Cycle::canonical(vec![2, 0, 3, 1]);
        assert_eq!(c.vertices(), [0, 2, 1, 3]);
        let c = Cycle::canonical(vec![4, 1, 3, 2]);
        assert_eq!(c.vertices(), [1, 3, 2, 4]);
        let k4 = complete(4);
        assert!(Cycle::new(&k4, vec![0, 2, 1, 3]).is_ok());
        assert_eq!(
            Cycle::new(&path(3), vec![0, 1, 2]),
            Err(PathError::NotAdjacent(2, 0))
        );
        assert!(matches!(
            Cycle::new(&k4, vec![0, 1]),
            Err(PathError::TooShort { .. })
        ));
    }

    #[test]
    fn consecutive() {
        let c = Cycle::canonical(vec![0, 1, 2, 3]);
        assert!(c.are_consecutive(3, 0));
        assert!(c.are_consecutive(1, 2));
        assert!(!c.are_consecutive(0, 2));
    }
}
