//! Problem instances: a directed graph with integer lengths, demand pairs
//! with per-demand distance bounds, and a hopbound.
//!
//! Instances are normalized at construction: duplicate edges collapse to the
//! minimum length, every edge length is replaced by the shortest-path
//! distance between its endpoints, and demands that cannot be satisfied are
//! rejected outright so that every downstream contract is total.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Unreachable / undefined distance sentinel. Lengths are capped well below
/// this so sums of up to `n` edge lengths stay finite in 64 bits.
pub const INF: u64 = u64::MAX;

/// Largest admissible edge length.
pub const MAX_LEN: u64 = (1 << 32) - 2;

pub fn add_len(a: u64, b: u64) -> u64 {
    if a == INF || b == INF {
        INF
    } else {
        a + b
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Edge {
    pub u: usize,
    pub v: usize,
    pub len: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Demand {
    pub s: usize,
    pub t: usize,
    /// Resolved distance bound; always >= d_G(s,t).
    pub dist: u64,
}

/// A distance bound as written in an input file, before resolution against
/// the shortest-path metric.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DistSpec {
    /// `-1`: bound equals the exact distance.
    Exact,
    /// Explicit bound, rejected when below the distance.
    Bound(u64),
    /// `x<r>`: bound is floor(r * d_G(s,t)), r given as num/den.
    Stretch { num: u64, den: u64 },
}

/// Un-normalized input, as parsed or as assembled by a generator.
#[derive(Debug, Clone)]
pub struct RawInstance {
    pub n: usize,
    pub directed: bool,
    pub edges: Vec<Edge>,
    pub demands: Vec<(usize, usize, DistSpec)>,
    pub beta: usize,
}

/// A normalized problem instance. Immutable after construction; all
/// operations on it are pure.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HopsetInstance {
    n: usize,
    directed: bool,
    /// Sorted by (u,v), one arc per ordered pair, len = d_G(u,v).
    edges: Vec<Edge>,
    demands: Vec<Demand>,
    beta: usize,
}

impl HopsetInstance {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn directed(&self) -> bool {
        self.directed
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn demands(&self) -> &[Demand] {
        &self.demands
    }

    pub fn beta(&self) -> usize {
        self.beta
    }

    pub fn to_raw(&self) -> RawInstance {
        RawInstance {
            n: self.n,
            directed: true, // already symmetrized if it was undirected
            edges: self.edges.clone(),
            demands: self
                .demands
                .iter()
                .map(|d| (d.s, d.t, DistSpec::Bound(d.dist)))
                .collect(),
            beta: self.beta,
        }
    }
}

/// Single-source shortest paths by Dijkstra over an adjacency list.
pub fn dijkstra(n: usize, adj: &[Vec<(usize, u64)>], s: usize) -> Vec<u64> {
    use std::cmp::Reverse;
    use std::collections::BinaryHeap;
    let mut dist = vec![INF; n];
    dist[s] = 0;
    let mut heap = BinaryHeap::new();
    heap.push(Reverse((0u64, s)));
    while let Some(Reverse((d, u))) = heap.pop() {
        if d > dist[u] {
            continue;
        }
        for &(v, w) in &adj[u] {
            let nd = d + w;
            if nd < dist[v] {
                dist[v] = nd;
                heap.push(Reverse((nd, v)));
            }
        }
    }
    dist
}

pub fn adjacency(n: usize, edges: &[Edge]) -> Vec<Vec<(usize, u64)>> {
    let mut adj = vec![Vec::new(); n];
    for e in edges {
        adj[e.u].push((e.v, e.len));
    }
    adj
}

/// All-pairs shortest paths of a normalized edge list (row per source).
pub fn all_pairs(n: usize, edges: &[Edge]) -> Vec<Vec<u64>> {
    let adj = adjacency(n, edges);
    (0..n).map(|s| dijkstra(n, &adj, s)).collect()
}

/// Normalize a raw instance into a [`HopsetInstance`].
///
/// Undirected inputs are symmetrized into two arcs per edge and everything
/// downstream runs on the directed representation.
pub fn normalize_instance(raw: RawInstance) -> Result<HopsetInstance> {
    let RawInstance { n, directed, edges, demands, beta } = raw;
    if n == 0 {
        return Err(Error::MalformedInput("vertex count must be positive".into()));
    }
    if beta == 0 {
        return Err(Error::MalformedInput("hopbound must be at least 1".into()));
    }

    let mut dedup: BTreeMap<(usize, usize), u64> = BTreeMap::new();
    let mut insert = |u: usize, v: usize, len: u64| -> Result<()> {
        if u >= n || v >= n {
            return Err(Error::MalformedInput(format!(
                "edge ({u},{v}) has a vertex id outside [0,{n})"
            )));
        }
        if u == v {
            return Err(Error::MalformedInput(format!("self-loop at vertex {u}")));
        }
        if len > MAX_LEN {
            return Err(Error::MalformedInput(format!(
                "edge ({u},{v}) length {len} exceeds cap {MAX_LEN}"
            )));
        }
        let slot = dedup.entry((u, v)).or_insert(len);
        *slot = (*slot).min(len);
        Ok(())
    };
    for e in &edges {
        insert(e.u, e.v, e.len)?;
        if !directed {
            insert(e.v, e.u, e.len)?;
        }
    }
    let mut norm_edges: Vec<Edge> = dedup
        .iter()
        .map(|(&(u, v), &len)| Edge { u, v, len })
        .collect();

    // Relabel every edge with the true shortest-path distance between its
    // endpoints, making each input edge a shortest path.
    let dist = all_pairs(n, &norm_edges);
    for e in &mut norm_edges {
        e.len = dist[e.u][e.v];
    }

    let mut norm_demands = Vec::with_capacity(demands.len());
    for &(s, t, spec) in &demands {
        if s >= n || t >= n {
            return Err(Error::MalformedInput(format!(
                "demand ({s},{t}) has a vertex id outside [0,{n})"
            )));
        }
        if s == t {
            return Err(Error::MalformedInput(format!(
                "demand ({s},{t}) is a self-pair"
            )));
        }
        let d = dist[s][t];
        if d == INF {
            return Err(Error::InfeasibleDemand { s, t, dist: None, shortest: None });
        }
        let bound = match spec {
            DistSpec::Exact => d,
            DistSpec::Bound(b) => b,
            DistSpec::Stretch { num, den } => {
                if den == 0 {
                    return Err(Error::MalformedInput("stretch with zero denominator".into()));
                }
                ((d as u128) * (num as u128) / (den as u128)) as u64
            }
        };
        if bound < d {
            return Err(Error::InfeasibleDemand {
                s,
                t,
                dist: Some(bound),
                shortest: Some(d),
            });
        }
        norm_demands.push(Demand { s, t, dist: bound });
    }

    Ok(HopsetInstance {
        n,
        directed: true,
        edges: norm_edges,
        demands: norm_demands,
        beta,
    })
}

/// Parse the plain-text instance format:
///
/// ```text
/// HOPSET 1 <directed|undirected>
/// <n> <m> <k> <beta>
/// <u> <v> <len>          (m lines)
/// <s> <t> <dist>         (k lines; dist is an integer, -1 for exact,
///                         or x<r> for a stretch bound floor(r * d_G))
/// ```
pub fn parse_instance(text: &str) -> Result<HopsetInstance> {
    let raw = parse_raw_instance(text)?;
    normalize_instance(raw)
}

pub fn parse_raw_instance(text: &str) -> Result<RawInstance> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

    let (ln, header) = lines
        .next()
        .ok_or_else(|| Error::MalformedInput("empty instance file".into()))?;
    let parts: Vec<&str> = header.split_whitespace().collect();
    if parts.len() != 3 || parts[0] != "HOPSET" || parts[1] != "1" {
        return Err(Error::MalformedInput(format!(
            "line {ln}: expected 'HOPSET 1 <directed|undirected>'"
        )));
    }
    let directed = match parts[2] {
        "directed" => true,
        "undirected" => false,
        other => {
            return Err(Error::MalformedInput(format!(
                "line {ln}: unknown orientation '{other}'"
            )))
        }
    };

    let (ln, counts) = lines
        .next()
        .ok_or_else(|| Error::MalformedInput("missing counts line".into()))?;
    let nums: Vec<&str> = counts.split_whitespace().collect();
    if nums.len() != 4 {
        return Err(Error::MalformedInput(format!(
            "line {ln}: expected '<n> <m> <k> <beta>'"
        )));
    }
    let parse_usize = |s: &str, ln: usize, what: &str| -> Result<usize> {
        s.parse()
            .map_err(|_| Error::MalformedInput(format!("line {ln}: bad {what} '{s}'")))
    };
    let n = parse_usize(nums[0], ln, "n")?;
    let m = parse_usize(nums[1], ln, "m")?;
    let k = parse_usize(nums[2], ln, "k")?;
    let beta = parse_usize(nums[3], ln, "beta")?;

    let mut edges = Vec::with_capacity(m);
    for _ in 0..m {
        let (ln, line) = lines
            .next()
            .ok_or_else(|| Error::MalformedInput("missing edge line".into()))?;
        let f: Vec<&str> = line.split_whitespace().collect();
        if f.len() != 3 {
            return Err(Error::MalformedInput(format!(
                "line {ln}: expected '<u> <v> <len>'"
            )));
        }
        let u = parse_usize(f[0], ln, "u")?;
        let v = parse_usize(f[1], ln, "v")?;
        let len: u64 = f[2]
            .parse()
            .map_err(|_| Error::MalformedInput(format!("line {ln}: bad length '{}'", f[2])))?;
        edges.push(Edge { u, v, len });
    }

    let mut demands = Vec::with_capacity(k);
    for _ in 0..k {
        let (ln, line) = lines
            .next()
            .ok_or_else(|| Error::MalformedInput("missing demand line".into()))?;
        let f: Vec<&str> = line.split_whitespace().collect();
        if f.len() != 3 {
            return Err(Error::MalformedInput(format!(
                "line {ln}: expected '<s> <t> <dist>'"
            )));
        }
        let s = parse_usize(f[0], ln, "s")?;
        let t = parse_usize(f[1], ln, "t")?;
        let spec = parse_dist_spec(f[2], ln)?;
        demands.push((s, t, spec));
    }

    if let Some((ln, _)) = lines.next() {
        return Err(Error::MalformedInput(format!("line {ln}: trailing content")));
    }

    Ok(RawInstance { n, directed, edges, demands, beta })
}

fn parse_dist_spec(tok: &str, ln: usize) -> Result<DistSpec> {
    if tok == "-1" {
        return Ok(DistSpec::Exact);
    }
    if let Some(r) = tok.strip_prefix('x') {
        // Decimal stretch factor, kept exact as num/den.
        let (int_part, frac_part) = match r.split_once('.') {
            Some((i, f)) => (i, f),
            None => (r, ""),
        };
        if int_part.is_empty() && frac_part.is_empty() {
            return Err(Error::MalformedInput(format!("line {ln}: bad stretch '{tok}'")));
        }
        let digits_ok = |s: &str| s.chars().all(|c| c.is_ascii_digit());
        if !digits_ok(int_part) || !digits_ok(frac_part) || frac_part.len() > 9 {
            return Err(Error::MalformedInput(format!("line {ln}: bad stretch '{tok}'")));
        }
        let int_val: u64 = if int_part.is_empty() { 0 } else { int_part.parse().unwrap() };
        let den = 10u64.pow(frac_part.len() as u32);
        let frac_val: u64 = if frac_part.is_empty() { 0 } else { frac_part.parse().unwrap() };
        return Ok(DistSpec::Stretch { num: int_val * den + frac_val, den });
    }
    let b: u64 = tok
        .parse()
        .map_err(|_| Error::MalformedInput(format!("line {ln}: bad dist '{tok}'")))?;
    Ok(DistSpec::Bound(b))
}

/// Write a normalized instance in the text format (explicit integer bounds,
/// directed form). Parsing the output reproduces the instance exactly.
pub fn write_instance(inst: &HopsetInstance) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "HOPSET 1 directed");
    let _ = writeln!(
        out,
        "{} {} {} {}",
        inst.n,
        inst.edges.len(),
        inst.demands.len(),
        inst.beta
    );
    for e in &inst.edges {
        let _ = writeln!(out, "{} {} {}", e.u, e.v, e.len);
    }
    for d in &inst.demands {
        let _ = writeln!(out, "{} {} {}", d.s, d.t, d.dist);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn raw(n: usize, edges: &[(usize, usize, u64)], demands: &[(usize, usize, DistSpec)], beta: usize) -> RawInstance {
        RawInstance {
            n,
            directed: true,
            edges: edges.iter().map(|&(u, v, len)| Edge { u, v, len }).collect(),
            demands: demands.to_vec(),
            beta,
        }
    }

    #[test]
    fn normalization_relabels_to_shortest_path() {
        // (a,c) gets relabeled from 5 to 2 via a->b->c.
        let inst = normalize_instance(raw(
            3,
            &[(0, 1, 1), (1, 2, 1), (0, 2, 5)],
            &[],
            2,
        ))
        .unwrap();
        let ac = inst.edges().iter().find(|e| e.u == 0 && e.v == 2).unwrap();
        assert_eq!(ac.len, 2);
    }

    #[test]
    fn demand_below_distance_is_rejected() {
        let err = normalize_instance(raw(
            3,
            &[(0, 1, 1), (1, 2, 1), (0, 2, 5)],
            &[(0, 2, DistSpec::Bound(1))],
            2,
        ))
        .unwrap_err();
        assert!(matches!(err, Error::InfeasibleDemand { .. }));
    }

    #[test]
    fn unreachable_demand_is_rejected() {
        let err = normalize_instance(raw(2, &[(0, 1, 1)], &[(1, 0, DistSpec::Exact)], 2)).unwrap_err();
        assert!(matches!(err, Error::InfeasibleDemand { .. }));
    }

    #[test]
    fn normalization_is_idempotent() {
        let inst = normalize_instance(raw(
            4,
            &[(0, 1, 2), (1, 2, 3), (2, 3, 1), (0, 3, 9)],
            &[(0, 3, DistSpec::Bound(7))],
            3,
        ))
        .unwrap();
        let again = normalize_instance(inst.to_raw()).unwrap();
        assert_eq!(inst, again);
    }

    #[test]
    fn undirected_becomes_symmetric() {
        let mut r = raw(2, &[(0, 1, 3)], &[], 1);
        r.directed = false;
        let inst = normalize_instance(r).unwrap();
        assert_eq!(inst.edges().len(), 2);
        assert!(inst.edges().iter().any(|e| e.u == 1 && e.v == 0 && e.len == 3));
    }

    #[test]
    fn duplicate_edges_collapse_to_minimum() {
        let inst = normalize_instance(raw(2, &[(0, 1, 7), (0, 1, 3)], &[], 1)).unwrap();
        assert_eq!(inst.edges(), &[Edge { u: 0, v: 1, len: 3 }]);
    }

    #[test]
    fn self_loops_and_bad_ids_are_malformed() {
        assert!(matches!(
            normalize_instance(raw(2, &[(0, 0, 1)], &[], 1)),
            Err(Error::MalformedInput(_))
        ));
        assert!(matches!(
            normalize_instance(raw(2, &[(0, 5, 1)], &[], 1)),
            Err(Error::MalformedInput(_))
        ));
        assert!(matches!(
            normalize_instance(raw(2, &[(0, 1, 1)], &[(0, 0, DistSpec::Exact)], 1)),
            Err(Error::MalformedInput(_))
        ));
    }

    #[test]
    fn parse_header_only() {
        let inst = parse_instance("HOPSET 1 directed\n1 0 0 2\n").unwrap();
        assert_eq!(inst.n(), 1);
        assert!(inst.edges().is_empty());
        assert!(inst.demands().is_empty());
    }

    #[test]
    fn parse_resolves_exact_and_stretch() {
        let text = "HOPSET 1 directed\n3 2 2 2\n0 1 2\n1 2 2\n0 2 -1\n0 2 x1.5\n";
        let inst = parse_instance(text).unwrap();
        assert_eq!(inst.demands()[0].dist, 4);
        assert_eq!(inst.demands()[1].dist, 6);
    }

    #[test]
    fn write_then_parse_round_trips() {
        let inst = parse_instance("HOPSET 1 undirected\n4 3 2 3\n0 1 1\n1 2 4\n2 3 2\n0 3 -1\n3 0 x2\n").unwrap();
        let text = write_instance(&inst);
        let back = parse_instance(&text).unwrap();
        assert_eq!(inst, back);
    }

    #[test]
    fn parse_errors_carry_line_numbers() {
        let err = parse_instance("HOPSET 1 directed\n2 1 0 1\n0 bad 1\n").unwrap_err();
        match err {
            Error::MalformedInput(msg) => assert!(msg.contains("line 3")),
            other => panic!("unexpected error {other:?}"),
        }
    }
}
