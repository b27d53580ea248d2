//! Vertex connectivity by unit-capacity max flow on the vertex-split network.

use alloc::vec;
use alloc::vec::Vec;

use crate::graph::Graph;

/// Residual network where vertex `v` becomes `in(v) = 2v` and
/// `out(v) = 2v + 1`, joined by a unit arc. Each edge `uv` gives arcs
/// `out(u) -> in(v)` and `out(v) -> in(u)`.
struct SplitNetwork<'g> {
    g: &'g Graph,
    nodes: usize,
    /// Flow on arc (a, b), antisymmetric.
    flow: Vec<i8>,
}

impl<'g> SplitNetwork<'g> {
    fn new(g: &'g Graph) -> Self {
        let nodes = 2 * g.order();
        SplitNetwork {
            g,
            nodes,
            flow: vec![0; nodes * nodes],
        }
    }

    #[inline]
    fn residual(&self, a: usize, b: usize, s: usize, t: usize) -> i8 {
        let cap = if a / 2 == b / 2 {
            // internal arc in(v) -> out(v); source and sink are uncapped
            if a.is_multiple_of(2) {
                if a / 2 == s || a / 2 == t {
                    i8::MAX
                } else {
                    1
                }
            } else {
                0
            }
        } else if !a.is_multiple_of(2) && b.is_multiple_of(2) {
            1
        } else {
            0
        };
        cap - self.flow[a * self.nodes + b]
    }

    /// One BFS augmentation from `out(s)` to `in(t)`.
    fn augment(&mut self, s: usize, t: usize) -> bool {
        let source = 2 * s + 1;
        let sink = 2 * t;
        let mut parent = vec![usize::MAX; self.nodes];
        parent[source] = source;
        let mut queue = vec![source];
        let mut head = 0;
        while head < queue.len() {
            let a = queue[head];
            head += 1;
            let v = a / 2;
            let twin = a ^ 1;
            let mut try_push = |b: usize, queue: &mut Vec<usize>| {
                if parent[b] == usize::MAX && self.residual(a, b, s, t) > 0 {
                    parent[b] = a;
                    queue.push(b);
                }
            };
            try_push(twin, &mut queue);
            for u in self.g.neighbors(v) {
                // out(v) -> in(u) forward, in(v) -> out(u) along a reverse arc
                let b = if a % 2 == 1 { 2 * u } else { 2 * u + 1 };
                try_push(b, &mut queue);
            }
            if parent[sink] != usize::MAX {
                break;
            }
        }
        if parent[sink] == usize::MAX {
            return false;
        }
        let mut b = sink;
        while b != source {
            let a = parent[b];
            self.flow[a * self.nodes + b] += 1;
            self.flow[b * self.nodes + a] -= 1;
            b = a;
        }
        true
    }
}

/// Maximum number of internally vertex-disjoint `(s, t)`-paths, capped at
/// `cap`. `s` and `t` must be distinct and non-adjacent.
pub fn local_connectivity(g: &Graph, s: usize, t: usize, cap: usize) -> usize {
    debug_assert!(s != t && !g.has_edge(s, t));
    let mut net = SplitNetwork::new(g);
    let mut paths = 0;
    while paths < cap && net.augment(s, t) {
        paths += 1;
    }
    paths
}

/// κ(G): `n - 1` for complete graphs, 0 when disconnected or `n = 1`,
/// otherwise the smallest local connectivity over non-adjacent pairs.
pub fn vertex_connectivity(g: &Graph) -> usize {
    let n = g.order();
    if n == 1 || !g.is_connected() {
        return 0;
    }
    if g.is_complete() {
        return n - 1;
    }
    // A minimum separator misses one of v_0..v_κ, so sources beyond the
    // current bound never need trying.
    let mut best = g.min_degree();
    let mut i = 0;
    while i <= best && i < n {
        for j in 0..n {
            if j != i && !g.has_edge(i, j) {
                best = best.min(local_connectivity(g, i, j, best));
            }
        }
        i += 1;
    }
    best
}
