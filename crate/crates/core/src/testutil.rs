//! Brute-force reference implementations backing the test suites. Everything
//! here is deliberately written against the problem statements directly and
//! shares no code with the library algorithms it checks.

use rand::Rng;

use crate::instance::{Edge, RawInstance, INF};
use crate::rng::rng_from_seed;

/// Random edge list (no demands, no normalization).
pub fn random_edge_list(seed: u64, n: usize, m: usize, max_len: u64) -> (usize, Vec<Edge>) {
    let mut rng = rng_from_seed(seed ^ 0x7e57);
    let mut edges = Vec::new();
    while edges.len() < m {
        let u = rng.gen_range(0..n);
        let v = rng.gen_range(0..n);
        if u == v {
            continue;
        }
        edges.push(Edge { u, v, len: rng.gen_range(1..=max_len) });
    }
    (n, edges)
}

/// Random raw instance without demands, for closure tests.
pub fn random_raw_graph(seed: u64, n: usize, m: usize) -> RawInstance {
    let (n, edges) = random_edge_list(seed, n, m, 9);
    RawInstance { n, directed: true, edges, demands: Vec::new(), beta: 3 }
}

/// Minimum length over all walks from `s` with at most `beta` hops, by plain
/// depth-first enumeration of walks.
pub fn enumerate_hop_walk_distances(n: usize, edges: &[Edge], s: usize, beta: usize) -> Vec<u64> {
    let mut best = vec![INF; n];
    let mut adj = vec![Vec::new(); n];
    for e in edges {
        adj[e.u].push((e.v, e.len));
    }
    fn walk(adj: &[Vec<(usize, u64)>], u: usize, left: usize, len: u64, best: &mut [u64]) {
        if len < best[u] {
            best[u] = len;
        }
        if left == 0 {
            return;
        }
        for &(v, w) in &adj[u] {
            if len.saturating_add(w) < INF {
                walk(adj, v, left - 1, len + w, best);
            }
        }
    }
    walk(&adj, s, beta, 0, &mut best);
    best
}

/// All simple s->t paths with at most `beta` hops and length at most
/// `budget`, as edge-index lists into `edges`. Enumeration stops with `None`
/// once `cap` paths have been produced.
pub fn enumerate_valid_paths(
    n: usize,
    edges: &[Edge],
    s: usize,
    t: usize,
    beta: usize,
    budget: u64,
    cap: usize,
) -> Option<Vec<Vec<usize>>> {
    let mut adj: Vec<Vec<(usize, usize)>> = vec![Vec::new(); n];
    for (i, e) in edges.iter().enumerate() {
        adj[e.u].push((e.v, i));
    }
    let mut out = Vec::new();
    let mut visited = vec![false; n];
    let mut stack = Vec::new();

    fn dfs(
        adj: &[Vec<(usize, usize)>],
        edges: &[Edge],
        u: usize,
        t: usize,
        hops_left: usize,
        len_left: u64,
        visited: &mut [bool],
        stack: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
        cap: usize,
    ) -> bool {
        if u == t {
            out.push(stack.clone());
            return out.len() <= cap;
        }
        if hops_left == 0 {
            return true;
        }
        visited[u] = true;
        for &(v, idx) in &adj[u] {
            if visited[v] || edges[idx].len > len_left {
                continue;
            }
            stack.push(idx);
            let ok = dfs(adj, edges, v, t, hops_left - 1, len_left - edges[idx].len, visited, stack, out, cap);
            stack.pop();
            if !ok {
                visited[u] = false;
                return false;
            }
        }
        visited[u] = false;
        true
    }

    if dfs(&adj, edges, s, t, beta, budget, &mut visited, &mut stack, &mut out, cap) {
        Some(out)
    } else {
        None
    }
}

/// Vertices on any valid (<= beta hops, length <= budget) walk from s to t.
/// This is the defining characterization of the local neighborhood.
pub fn enumerate_valid_walk_vertices(
    n: usize,
    edges: &[Edge],
    s: usize,
    t: usize,
    beta: usize,
    budget: u64,
) -> Vec<usize> {
    let mut adj: Vec<Vec<(usize, u64)>> = vec![Vec::new(); n];
    for e in edges {
        adj[e.u].push((e.v, e.len));
    }
    let mut members = vec![false; n];
    let mut prefix = Vec::new();

    fn walk(
        adj: &[Vec<(usize, u64)>],
        u: usize,
        t: usize,
        hops_left: usize,
        len: u64,
        budget: u64,
        prefix: &mut Vec<usize>,
        members: &mut [bool],
    ) {
        prefix.push(u);
        if u == t && len <= budget {
            for &w in prefix.iter() {
                members[w] = true;
            }
        }
        if hops_left > 0 {
            for &(v, w) in &adj[u] {
                if len + w <= budget {
                    walk(adj, v, t, hops_left - 1, len + w, budget, prefix, members);
                }
            }
        }
        prefix.pop();
    }

    walk(&adj, s, t, beta, 0, budget, &mut prefix, &mut members);
    (0..n).filter(|&v| members[v]).collect()
}
