//! Independent brute-force oracles. Nothing here calls into the search,
//! connectivity or generation code under test.
#![allow(dead_code, clippy::needless_range_loop, clippy::manual_is_multiple_of)]

use chordprobe_core::graph::Graph;
use rand::Rng;

pub fn random_graph<R: Rng>(rng: &mut R, n: usize, p: f64) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::new(n, edges).unwrap()
}

/// Random graph with at least `min_deg` at every vertex, made connected by
/// joining a random spanning tree first.
pub fn random_connected<R: Rng>(rng: &mut R, n: usize, p: f64, min_deg: usize) -> Graph {
    let mut adj = vec![vec![false; n]; n];
    for v in 1..n {
        let u = rng.gen_range(0..v);
        adj[u][v] = true;
        adj[v][u] = true;
    }
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                adj[u][v] = true;
                adj[v][u] = true;
            }
        }
    }
    for u in 0..n {
        while adj[u].iter().filter(|&&b| b).count() < min_deg.min(n - 1) {
            let v = rng.gen_range(0..n);
            if v != u {
                adj[u][v] = true;
                adj[v][u] = true;
            }
        }
    }
    let edges = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
    let edges: Vec<_> = edges.filter(|&(u, v)| adj[u][v]).collect();
    Graph::new(n, edges).unwrap()
}

/// Every simple (x,y)-path, by unpruned depth-first search.
pub fn all_xy_paths(g: &Graph, x: usize, y: usize) -> Vec<Vec<usize>> {
    fn go(g: &Graph, y: usize, path: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        let tip = *path.last().unwrap();
        if tip == y {
            out.push(path.clone());
            return;
        }
        for v in 0..g.order() {
            if g.has_edge(tip, v) && !path.contains(&v) {
                path.push(v);
                go(g, y, path, out);
                path.pop();
            }
        }
    }
    let mut out = Vec::new();
    go(g, y, &mut vec![x], &mut out);
    out
}

/// All (x,y)-paths of maximum length, sorted.
pub fn longest_xy_paths(g: &Graph, x: usize, y: usize) -> Vec<Vec<usize>> {
    let all = all_xy_paths(g, x, y);
    let best = all.iter().map(Vec::len).max().unwrap_or(0);
    let mut out: Vec<_> = all.into_iter().filter(|p| p.len() == best).collect();
    out.sort();
    out
}

/// Every cycle, each once, as a sorted list of rotated/reflected-minimal
/// vertex sequences.
pub fn all_cycles(g: &Graph) -> Vec<Vec<usize>> {
    let n = g.order();
    let mut out = Vec::new();
    for s in 0..n {
        for p in (0..n).flat_map(|t| {
            if t > s && g.has_edge(s, t) {
                all_xy_paths(g, s, t)
            } else {
                vec![]
            }
        }) {
            if p.len() >= 3 && p.iter().all(|&v| v >= s) {
                let mut c = p.clone();
                // closing edge t-s; canonical: second < last
                if c[1] < c[c.len() - 1] {
                    out.push(c);
                } else {
                    c[1..].reverse();
                    out.push(c);
                }
            }
        }
    }
    out.sort();
    out.dedup();
    out
}

pub fn longest_cycles(g: &Graph) -> Vec<Vec<usize>> {
    let all = all_cycles(g);
    let best = all.iter().map(Vec::len).max().unwrap_or(0);
    all.into_iter().filter(|c| c.len() == best).collect()
}

fn connected_after_removing(g: &Graph, removed: u64) -> bool {
    let n = g.order();
    let alive: Vec<usize> = (0..n).filter(|&v| removed >> v & 1 == 0).collect();
    if alive.len() <= 1 {
        return true;
    }
    let mut seen = vec![false; n];
    let mut stack = vec![alive[0]];
    seen[alive[0]] = true;
    while let Some(u) = stack.pop() {
        for &v in &alive {
            if !seen[v] && g.has_edge(u, v) {
                seen[v] = true;
                stack.push(v);
            }
        }
    }
    alive.iter().all(|&v| seen[v])
}

/// κ(G) by trying every vertex subset as a separator.
pub fn brute_connectivity(g: &Graph) -> usize {
    let n = g.order();
    if n <= 1 {
        return 0;
    }
    let mut best = n - 1;
    for mask in 0u64..1 << n {
        let k = mask.count_ones() as usize;
        if k < best && n - k >= 2 && !connected_after_removing(g, mask) {
            best = k;
        }
    }
    best
}

/// Smallest adjacency code over all n! relabellings, bits in any fixed
/// pair order.
pub fn brute_canonical_code(g: &Graph) -> u64 {
    let n = g.order();
    let mut perm: Vec<usize> = (0..n).collect();
    let mut best = u64::MAX;
    heap_permute(&mut perm, n, &mut |p| {
        let mut code = 0u64;
        let mut bit = 0;
        for j in 1..n {
            for i in 0..j {
                if g.has_edge(p[i], p[j]) {
                    code |= 1 << bit;
                }
                bit += 1;
            }
        }
        best = best.min(code);
    });
    best
}

fn heap_permute(a: &mut Vec<usize>, k: usize, f: &mut impl FnMut(&[usize])) {
    if k <= 1 {
        f(a);
        return;
    }
    for i in 0..k - 1 {
        heap_permute(a, k - 1, f);
        if k % 2 == 0 {
            a.swap(i, k - 1);
        } else {
            a.swap(0, k - 1);
        }
    }
    heap_permute(a, k - 1, f);
}

/// Isomorphism classes on `n` vertices by exhaustive labelling (n ≤ 6), or
/// by extending the `n - 1` classes with one vertex and deduplicating by
/// the brute-force canonical code.
pub fn brute_classes(n: usize) -> Vec<Graph> {
    if n == 1 {
        return vec![Graph::empty(1).unwrap()];
    }
    let mut seen = std::collections::BTreeMap::new();
    for parent in brute_classes(n - 1) {
        for mask in 0u64..1 << (n - 1) {
            let mut edges: Vec<(usize, usize)> = parent.edges().collect();
            edges.extend(
                (0..n - 1)
                    .filter(|&u| mask >> u & 1 == 1)
                    .map(|u| (u, n - 1)),
            );
            let g = Graph::new(n, edges).unwrap();
            seen.entry(brute_canonical_code(&g)).or_insert(g);
        }
    }
    seen.into_values().collect()
}
