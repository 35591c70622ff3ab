//! Hop-bounded distances: minimum path length subject to an edge-count
//! budget, computed by rounds of edge relaxation.

use crate::instance::{add_len, Edge, INF};

/// d^(i)(s, v) for i in 0..=beta, one row per hop budget.
#[derive(Debug, Clone)]
pub struct HopDistanceTable {
    pub source: usize,
    /// rows[i][v] = minimum length of an s->v path with at most i hops.
    pub rows: Vec<Vec<u64>>,
}

impl HopDistanceTable {
    pub fn dist(&self, hops: usize, v: usize) -> u64 {
        self.rows[hops.min(self.rows.len() - 1)][v]
    }
}

/// Forward table of hop-bounded distances from `s`.
pub fn hop_distance_table(n: usize, edges: &[Edge], s: usize, beta: usize) -> HopDistanceTable {
    let mut rows = Vec::with_capacity(beta + 1);
    let mut cur = vec![INF; n];
    cur[s] = 0;
    rows.push(cur.clone());
    for _ in 0..beta {
        let prev = rows.last().unwrap().clone();
        let mut next = prev.clone();
        for e in edges {
            let cand = add_len(prev[e.u], e.len);
            if cand < next[e.v] {
                next[e.v] = cand;
            }
        }
        rows.push(next);
    }
    HopDistanceTable { source: s, rows }
}

/// Backward table: rows[j][v] = minimum length of a v->t path with <= j hops.
pub fn hop_distance_table_rev(n: usize, edges: &[Edge], t: usize, beta: usize) -> HopDistanceTable {
    let reversed: Vec<Edge> = edges
        .iter()
        .map(|e| Edge { u: e.v, v: e.u, len: e.len })
        .collect();
    let mut table = hop_distance_table(n, &reversed, t, beta);
    table.source = t;
    table
}

/// Minimum length of an s->t path with at most `beta` hops, INF when none.
pub fn hop_bounded_distance(n: usize, edges: &[Edge], s: usize, t: usize, beta: usize) -> u64 {
    if s == t {
        return 0;
    }
    let mut cur = vec![INF; n];
    cur[s] = 0;
    for _ in 0..beta {
        let mut next = cur.clone();
        let mut changed = false;
        for e in edges {
            let cand = add_len(cur[e.u], e.len);
            if cand < next[e.v] {
                next[e.v] = cand;
                changed = true;
            }
        }
        cur = next;
        if !changed {
            break;
        }
    }
    cur[t]
}
