//! Seeded random instance generation, shared by the CLI and the test
//! harnesses. Demands are always drawn among reachable pairs so generated
//! instances normalize without rejection.

use rand::Rng;

use crate::instance::{
    all_pairs, normalize_instance, DistSpec, Edge, HopsetInstance, RawInstance, INF,
};
use crate::rng::rng_from_seed;

#[derive(Debug, Clone)]
pub struct RandomInstanceConfig {
    pub n: usize,
    pub m: usize,
    pub demands: usize,
    pub beta: usize,
    pub max_len: u64,
    pub directed: bool,
    /// Fraction of demands that get a stretch bound instead of an exact one;
    /// the rest use Dist = d_G(s,t).
    pub stretch_fraction: f64,
    /// Stretch factor in tenths (15 -> x1.5).
    pub stretch_tenths: u64,
}

impl Default for RandomInstanceConfig {
    fn default() -> Self {
        RandomInstanceConfig {
            n: 8,
            m: 14,
            demands: 4,
            beta: 3,
            max_len: 8,
            directed: true,
            stretch_fraction: 0.5,
            stretch_tenths: 15,
        }
    }
}

/// Generate a normalized random instance. The same (config, seed) always
/// yields the same instance.
pub fn random_instance(cfg: &RandomInstanceConfig, seed: u64) -> HopsetInstance {
    let mut rng = rng_from_seed(seed);
    let n = cfg.n.max(2);
    let mut edges = Vec::new();
    // A random spine keeps most of the graph reachable.
    let mut order: Vec<usize> = (0..n).collect();
    for i in (1..n).rev() {
        let j = rng.gen_range(0..=i);
        order.swap(i, j);
    }
    for w in order.windows(2) {
        edges.push(Edge { u: w[0], v: w[1], len: rng.gen_range(1..=cfg.max_len) });
    }
    while edges.len() < cfg.m {
        let u = rng.gen_range(0..n);
        let v = rng.gen_range(0..n);
        if u == v {
            continue;
        }
        edges.push(Edge { u, v, len: rng.gen_range(1..=cfg.max_len) });
    }

    // Resolve reachable pairs on the symmetrized-or-directed edge set.
    let resolved: Vec<Edge> = if cfg.directed {
        edges.clone()
    } else {
        let mut sym = edges.clone();
        sym.extend(edges.iter().map(|e| Edge { u: e.v, v: e.u, len: e.len }));
        sym
    };
    let dist = all_pairs(n, &resolved);
    let mut pairs = Vec::new();
    for s in 0..n {
        for t in 0..n {
            if s != t && dist[s][t] != INF {
                pairs.push((s, t));
            }
        }
    }

    let mut demands = Vec::new();
    if !pairs.is_empty() {
        for _ in 0..cfg.demands {
            let &(s, t) = &pairs[rng.gen_range(0..pairs.len())];
            let spec = if rng.gen_bool(cfg.stretch_fraction.clamp(0.0, 1.0)) {
                DistSpec::Stretch { num: cfg.stretch_tenths, den: 10 }
            } else {
                DistSpec::Exact
            };
            demands.push((s, t, spec));
        }
    }

    normalize_instance(RawInstance {
        n,
        directed: cfg.directed,
        edges,
        demands,
        beta: cfg.beta.max(1),
    })
    .expect("generator picks reachable demands with bounds >= d_G")
}

/// All-pairs exact-demand variant: one demand per reachable ordered pair,
/// each with Dist = d_G(s,t).
pub fn with_all_pairs_exact_demands(inst: &HopsetInstance) -> HopsetInstance {
    let dist = all_pairs(inst.n(), inst.edges());
    let mut demands = Vec::new();
    for s in 0..inst.n() {
        for t in 0..inst.n() {
            if s != t && dist[s][t] != INF {
                demands.push((s, t, DistSpec::Exact));
            }
        }
    }
    normalize_instance(RawInstance {
        n: inst.n(),
        directed: true,
        edges: inst.edges().to_vec(),
        demands,
        beta: inst.beta(),
    })
    .expect("all reachable pairs with exact bounds are feasible")
}

/// Same instance with a different hopbound.
pub fn with_beta(inst: &HopsetInstance, beta: usize) -> HopsetInstance {
    let mut raw = inst.to_raw();
    raw.beta = beta;
    normalize_instance(raw).expect("rebound of a normalized instance")
}
