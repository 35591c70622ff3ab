//! The weighted transitive closure G_M: every reachable ordered pair becomes
//! an edge weighted by the exact shortest-path distance. Edges absent from
//! the input form the candidate set; they cost 1, input edges cost 0.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::instance::{all_pairs, HopsetInstance, INF};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClosureEdge {
    pub u: usize,
    pub v: usize,
    pub len: u64,
    /// True when the edge was present in the input (cost 0).
    pub input: bool,
}

/// Closure edges are kept in lexicographic (u,v) order; their index in that
/// order is the edge id used everywhere else (solutions, LP variables, RNG
/// sampling order).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightedClosure {
    edges: Vec<ClosureEdge>,
    by_pair: HashMap<(usize, usize), usize>,
    candidates: Vec<usize>,
    dist: Vec<Vec<u64>>,
}

impl WeightedClosure {
    pub fn edges(&self) -> &[ClosureEdge] {
        &self.edges
    }

    /// Ids of the candidate edges (closure minus input), ascending.
    pub fn candidate_ids(&self) -> &[usize] {
        &self.candidates
    }

    pub fn edge_id(&self, u: usize, v: usize) -> Option<usize> {
        self.by_pair.get(&(u, v)).copied()
    }

    pub fn is_candidate(&self, id: usize) -> bool {
        !self.edges[id].input
    }

    /// Exact shortest-path distance table of the underlying instance.
    pub fn dist(&self) -> &[Vec<u64>] {
        &self.dist
    }

    /// Cost of an edge set: the number of candidate members in it.
    pub fn cost_of(&self, ids: &[usize]) -> usize {
        ids.iter().filter(|&&id| self.is_candidate(id)).count()
    }
}

/// Build the weighted transitive closure of a normalized instance.
pub fn weighted_transitive_closure(inst: &HopsetInstance) -> WeightedClosure {
    let n = inst.n();
    let dist = all_pairs(n, inst.edges());
    let mut input = HashMap::new();
    for e in inst.edges() {
        input.insert((e.u, e.v), ());
    }
    let mut edges = Vec::new();
    for u in 0..n {
        for v in 0..n {
            if u != v && dist[u][v] != INF {
                edges.push(ClosureEdge {
                    u,
                    v,
                    len: dist[u][v],
                    input: input.contains_key(&(u, v)),
                });
            }
        }
    }
    edges.sort_by_key(|e| (e.u, e.v));
    let by_pair = edges
        .iter()
        .enumerate()
        .map(|(i, e)| ((e.u, e.v), i))
        .collect();
    let candidates = edges
        .iter()
        .enumerate()
        .filter(|(_, e)| !e.input)
        .map(|(i, _)| i)
        .collect();
    WeightedClosure { edges, by_pair, candidates, dist }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::instance::{normalize_instance, DistSpec, Edge, RawInstance};
    use crate::testutil::random_raw_graph;

    fn inst(n: usize, edges: &[(usize, usize, u64)], beta: usize) -> HopsetInstance {
        normalize_instance(RawInstance {
            n,
            directed: true,
            edges: edges.iter().map(|&(u, v, len)| Edge { u, v, len }).collect(),
            demands: Vec::new(),
            beta,
        })
        .unwrap()
    }

    #[test]
    fn path_graph_closure() {
        let closure = weighted_transitive_closure(&inst(3, &[(0, 1, 1), (1, 2, 1)], 2));
        assert_eq!(closure.edges().len(), 3);
        let id = closure.edge_id(0, 2).unwrap();
        assert!(closure.is_candidate(id));
        assert_eq!(closure.edges()[id].len, 2);
        assert_eq!(closure.candidate_ids(), &[id]);
    }

    #[test]
    fn single_edge_has_no_candidates() {
        let closure = weighted_transitive_closure(&inst(2, &[(0, 1, 4)], 2));
        assert!(closure.candidate_ids().is_empty());
    }

    // Floyd-Warshall oracle, independent of the Dijkstra used by the library.
    fn floyd_warshall(n: usize, edges: &[Edge]) -> Vec<Vec<u64>> {
        let mut d = vec![vec![INF; n]; n];
        for (i, row) in d.iter_mut().enumerate() {
            row[i] = 0;
        }
        for e in edges {
            d[e.u][e.v] = d[e.u][e.v].min(e.len);
        }
        for k in 0..n {
            for i in 0..n {
                for j in 0..n {
                    if d[i][k] != INF && d[k][j] != INF {
                        d[i][j] = d[i][j].min(d[i][k] + d[k][j]);
                    }
                }
            }
        }
        d
    }

    #[test]
    fn closure_matches_floyd_warshall_on_random_digraphs() {
        for seed in 0..20u64 {
            let raw = random_raw_graph(seed, 8, 14);
            let inst = normalize_instance(raw).unwrap();
            let closure = weighted_transitive_closure(&inst);
            let oracle = floyd_warshall(inst.n(), inst.edges());
            for u in 0..inst.n() {
                for v in 0..inst.n() {
                    if u == v {
                        continue;
                    }
                    match closure.edge_id(u, v) {
                        Some(id) => assert_eq!(closure.edges()[id].len, oracle[u][v]),
                        None => assert_eq!(oracle[u][v], INF),
                    }
                }
            }
        }
    }

    #[test]
    fn demand_always_has_direct_closure_edge() {
        let raw = RawInstance {
            n: 3,
            directed: true,
            edges: vec![Edge { u: 0, v: 1, len: 1 }, Edge { u: 1, v: 2, len: 1 }],
            demands: vec![(0, 2, DistSpec::Exact)],
            beta: 1,
        };
        let inst = normalize_instance(raw).unwrap();
        let closure = weighted_transitive_closure(&inst);
        assert!(closure.edge_id(0, 2).is_some());
    }
}
