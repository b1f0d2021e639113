//! Independent brute-force oracles. Nothing here calls the closed forms
//! under test.
#![allow(dead_code)]

use veronese_koszul::{Edge, Graph, Vertex};

/// Does a loopless multigraph with degree sequence `a` exist? Exhaustive:
/// the first vertex with remaining degree must be joined to some other
/// vertex with remaining degree.
pub fn multigraph_exists(a: &mut [u32]) -> bool {
    let Some(first) = a.iter().position(|d| *d > 0) else {
        return true;
    };
    for other in first + 1..a.len() {
        if a[other] == 0 {
            continue;
        }
        a[first] -= 1;
        a[other] -= 1;
        let found = multigraph_exists(a);
        a[first] += 1;
        a[other] += 1;
        if found {
            return true;
        }
    }
    false
}

/// All vectors of length `n` with entries summing to at most `max_sum`.
pub fn vectors_up_to(n: usize, max_sum: u32) -> Vec<Vec<u32>> {
    fn go(n: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if cur.len() == n {
            out.push(cur.clone());
            return;
        }
        for x in 0..=left {
            cur.push(x);
            go(n, left - x, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, max_sum, &mut Vec::new(), &mut out);
    out
}

/// Whether the graph contains a chordless cycle of length >= 4, by DFS over
/// simple paths starting at their smallest vertex.
pub fn has_chordless_long_cycle(g: &Graph) -> bool {
    let support = g.support();
    let adj = |a: Vertex, b: Vertex| g.has_edge(&Edge::new(a, b).unwrap());
    fn extend(
        path: &mut Vec<Vertex>,
        support: &[Vertex],
        adj: &dyn Fn(Vertex, Vertex) -> bool,
    ) -> bool {
        let start = path[0];
        let last = *path.last().unwrap();
        if path.len() >= 4 && adj(last, start) && is_chordless(path, adj) {
            return true;
        }
        for &w in support {
            if w > start && !path.contains(&w) && adj(last, w) {
                path.push(w);
                if extend(path, support, adj) {
                    return true;
                }
                path.pop();
            }
        }
        false
    }
    fn is_chordless(cycle: &[Vertex], adj: &dyn Fn(Vertex, Vertex) -> bool) -> bool {
        let len = cycle.len();
        for a in 0..len {
            for b in a + 2..len {
                if a == 0 && b == len - 1 {
                    continue;
                }
                if adj(cycle[a], cycle[b]) {
                    return false;
                }
            }
        }
        true
    }
    support
        .iter()
        .any(|&s| extend(&mut vec![s], &support, &adj))
}

/// Every labelled subgraph of `K_n`.
pub fn all_subgraphs(n: usize) -> Vec<Graph> {
    let all = Graph::complete(n).unwrap().edges();
    (0..1u64 << all.len())
        .map(|mask| {
            let chosen: Vec<Edge> = all
                .iter()
                .enumerate()
                .filter(|(b, _)| mask & (1 << b) != 0)
                .map(|(_, e)| *e)
                .collect();
            Graph::from_edges(n, chosen).unwrap()
        })
        .collect()
}

pub fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    (0..k).fold(1, |acc, t| acc * (n - t) / (t + 1))
}
