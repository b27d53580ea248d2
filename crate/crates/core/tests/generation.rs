mod common;

use chordprobe_core::generate::{enumerate_graphs, is_canonical, ClassFilter};
use chordprobe_core::graph::Graph;
use common::{brute_canonical_code, brute_classes, brute_connectivity};
use std::collections::BTreeSet;

fn all(n: usize) -> Vec<Graph> {
    enumerate_graphs(n, ClassFilter::default())
        .unwrap()
        .collect()
}

#[test]
fn counts_match_permutation_dedup_oracle() {
    let oracle: Vec<usize> = (1..=7).map(|n| brute_classes(n).len()).collect();
    let got: Vec<usize> = (1..=7).map(|n| all(n).len()).collect();
    assert_eq!(got, oracle);
    assert_eq!(got, [1, 2, 4, 11, 34, 156, 1044]);
}

#[test]
fn generated_graphs_are_pairwise_non_isomorphic() {
    for n in 1..=7 {
        let graphs = all(n);
        let codes: BTreeSet<u64> = graphs.iter().map(brute_canonical_code).collect();
        assert_eq!(codes.len(), graphs.len(), "order {n}");
    }
}

#[test]
fn order_eight_is_complete() {
    // 12346 classes; each emitted graph is canonical and the stream is
    // strictly increasing, so no class repeats
    let mut count = 0;
    let mut last: Option<Vec<bool>> = None;
    for g in enumerate_graphs(8, ClassFilter::default()).unwrap() {
        let code: Vec<bool> = (1..8)
            .flat_map(|j| (0..j).map(move |i| (i, j)))
            .map(|(i, j)| g.has_edge(i, j))
            .collect();
        if let Some(prev) = &last {
            assert!(prev < &code);
        }
        last = Some(code);
        count += 1;
    }
    assert_eq!(count, 12346);
}

#[test]
fn canonicity_agrees_with_brute_force() {
    // a labelled graph is canonical iff its own code is the minimum; the
    // oracle code uses the same column order with the first pair least
    // significant, so compare through reversed bit strings
    for n in 1..=6 {
        let code_of = |g: &Graph| -> u64 {
            let mut bits = Vec::new();
            for j in 1..n {
                for i in 0..j {
                    bits.push(g.has_edge(i, j));
                }
            }
            bits.iter().fold(0u64, |acc, &b| acc << 1 | b as u64)
        };
        let pairs: Vec<(usize, usize)> = (1..n).flat_map(|j| (0..j).map(move |i| (i, j))).collect();
        for mask in 0u64..1 << pairs.len() {
            let edges = pairs
                .iter()
                .enumerate()
                .filter(|(k, _)| mask >> k & 1 == 1)
                .map(|(_, e)| *e);
            let g = Graph::new(n, edges).unwrap();
            let mine = code_of(&g);
            let mut min = u64::MAX;
            permutations(n, &mut |p| {
                let mut h = Vec::new();
                for (u, v) in g.edges() {
                    h.push((p[u], p[v]));
                }
                min = min.min(code_of(&Graph::new(n, h).unwrap()));
            });
            assert_eq!(is_canonical(&g), mine == min, "{g:?}");
        }
    }
}

fn permutations(n: usize, f: &mut impl FnMut(&[usize])) {
    fn go(p: &mut Vec<usize>, used: &mut Vec<bool>, n: usize, f: &mut impl FnMut(&[usize])) {
        if p.len() == n {
            f(p);
            return;
        }
        for v in 0..n {
            if !used[v] {
                used[v] = true;
                p.push(v);
                go(p, used, n, f);
                p.pop();
                used[v] = false;
            }
        }
    }
    go(&mut Vec::new(), &mut vec![false; n], n, f);
}

fn brute_accepts(g: &Graph, f: &ClassFilter) -> bool {
    let n = g.order();
    let deg: Vec<usize> = (0..n)
        .map(|v| (0..n).filter(|&u| g.has_edge(u, v)).count())
        .collect();
    let triangle = (0..n).any(|a| {
        (a + 1..n)
            .any(|b| (b + 1..n).any(|c| g.has_edge(a, b) && g.has_edge(b, c) && g.has_edge(a, c)))
    });
    let square = (0..n).any(|a| {
        (a + 1..n).any(|b| {
            (0..n)
                .filter(|&w| g.has_edge(a, w) && g.has_edge(b, w))
                .count()
                >= 2
        })
    });
    deg.iter().all(|&d| d >= f.min_degree)
        && f.regular_degree.is_none_or(|r| deg.iter().all(|&d| d == r))
        && !(f.triangle_free && triangle)
        && !(f.c4_free && square)
        && brute_connectivity(g) >= f.min_connectivity
}

#[test]
fn filters_are_sound_and_complete() {
    let filters = [
        ClassFilter {
            min_connectivity: 2,
            ..Default::default()
        },
        ClassFilter {
            min_connectivity: 3,
            ..Default::default()
        },
        ClassFilter {
            triangle_free: true,
            ..Default::default()
        },
        ClassFilter {
            c4_free: true,
            ..Default::default()
        },
        ClassFilter {
            regular_degree: Some(3),
            ..Default::default()
        },
        ClassFilter {
            regular_degree: Some(2),
            ..Default::default()
        },
        ClassFilter {
            min_degree: 3,
            ..Default::default()
        },
        ClassFilter {
            min_connectivity: 2,
            triangle_free: true,
            min_degree: 2,
            ..Default::default()
        },
    ];
    for n in 1..=7 {
        let classes = all(n);
        for f in &filters {
            let expect: Vec<&Graph> = classes.iter().filter(|g| brute_accepts(g, f)).collect();
            let got: Vec<Graph> = enumerate_graphs(n, *f).unwrap().collect();
            assert_eq!(got.len(), expect.len(), "order {n} {f:?}");
            assert!(
                got.iter().zip(expect).all(|(a, b)| a == b),
                "order {n} {f:?}"
            );
        }
    }
}

#[test]
fn larger_class_counts() {
    let tf = ClassFilter {
        triangle_free: true,
        ..Default::default()
    };
    assert_eq!(enumerate_graphs(8, tf).unwrap().count(), 410);
    let cubic = ClassFilter {
        regular_degree: Some(3),
        ..Default::default()
    };
    assert_eq!(enumerate_graphs(10, cubic).unwrap().count(), 21);
    let k3 = ClassFilter {
        min_connectivity: 3,
        ..Default::default()
    };
    assert_eq!(enumerate_graphs(8, k3).unwrap().count(), 2388);
}
