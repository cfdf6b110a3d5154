use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::extremal::moore_order;
use crate::graph::{girth, Graph};

/// Parameters for [`random_min_degree_girth`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GeneratorConfig {
    pub n: usize,
    pub delta: usize,
    /// Lower bound on the girth of the output.
    pub g: usize,
    pub seed: u64,
    pub max_restarts: usize,
    pub max_edge_attempts_per_restart: usize,
    /// Vertices stop accepting new edges at degree `delta + degree_slack`
    /// (connecting edges between components may exceed this).
    pub degree_slack: usize,
}

impl GeneratorConfig {
    pub fn new(n: usize, delta: usize, g: usize, seed: u64) -> Self {
        GeneratorConfig {
            n,
            delta,
            g,
            seed,
            max_restarts: 50,
            max_edge_attempts_per_restart: 50 * n,
            degree_slack: 1,
        }
    }

    /// `n >= moore order` is necessary for success. Not sufficient.
    pub fn meets_moore_order(&self) -> bool {
        moore_order(self.delta, self.g).is_none_or(|m| self.n >= m)
    }

    /// Edge-list text followed by a provenance comment line.
    pub fn annotate(&self, g: &Graph) -> String {
        let mut s = g.to_edge_list();
        s.push_str(&format!(
            "# seed={} delta={} g={}\n",
            self.seed, self.delta, self.g
        ));
        s
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum FailureReason {
    InvalidConfig(String),
    Exhausted,
}

/// Returned when no graph could be produced. Carries attempt statistics.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GenerationFailure {
    pub reason: FailureReason,
    pub restarts: usize,
    pub edges_attempted: usize,
    /// Smallest number of degree-deficient vertices left over any restart.
    pub best_deficit: usize,
}

impl fmt::Display for GenerationFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.reason {
            FailureReason::InvalidConfig(m) => write!(f, "invalid generator config: {m}"),
            FailureReason::Exhausted => write!(
                f,
                "generation failed after {} restarts ({} edge attempts, best deficit {})",
                self.restarts, self.edges_attempted, self.best_deficit
            ),
        }
    }
}

impl std::error::Error for GenerationFailure {}

/// Random connected graph with minimum degree `>= delta` and girth `>= g`.
///
/// Edges are added one at a time between a uniformly chosen degree-deficient
/// vertex `u` and a uniformly chosen vertex `v` that still has degree budget
/// and satisfies `d(u, v) >= g - 1`, so no cycle shorter than `g` can close.
/// Because the graph only grows, a deficient vertex with no admissible
/// partner stays stuck, which triggers a restart on a fresh stream derived
/// from the seed. Output properties are re-measured before returning.
pub fn random_min_degree_girth(cfg: &GeneratorConfig) -> Result<Graph, GenerationFailure> {
    let invalid = |m: String| GenerationFailure {
        reason: FailureReason::InvalidConfig(m),
        restarts: 0,
        edges_attempted: 0,
        best_deficit: cfg.n,
    };
    if cfg.delta < 2 {
        return Err(invalid(format!("delta must be >= 2, got {}", cfg.delta)));
    }
    if cfg.g < 3 {
        return Err(invalid(format!("g must be >= 3, got {}", cfg.g)));
    }
    if cfg.n < cfg.delta + 1 {
        return Err(invalid(format!("n={} < delta+1", cfg.n)));
    }

    let mut attempted = 0;
    let mut best_deficit = cfg.n;
    for restart in 0..cfg.max_restarts.max(1) {
        let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
        rng.set_stream(restart as u64);
        match grow(cfg, &mut rng, &mut attempted) {
            Ok(g) => return Ok(g),
            Err(deficit) => best_deficit = best_deficit.min(deficit),
        }
    }
    Err(GenerationFailure {
        reason: FailureReason::Exhausted,
        restarts: cfg.max_restarts.max(1),
        edges_attempted: attempted,
        best_deficit,
    })
}

/// One restart. `Err` carries the number of vertices still below `delta`.
fn grow(
    cfg: &GeneratorConfig,
    rng: &mut ChaCha8Rng,
    attempted: &mut usize,
) -> Result<Graph, usize> {
    let n = cfg.n;
    let cap = cfg.delta + cfg.degree_slack;
    let mut adj: Vec<Vec<usize>> = vec![Vec::new(); n];
    let mut dist = vec![usize::MAX; n];
    let mut queue = std::collections::VecDeque::new();
    let deficit = |adj: &Vec<Vec<usize>>| adj.iter().filter(|a| a.len() < cfg.delta).count();

    for _ in 0..cfg.max_edge_attempts_per_restart {
        let deficient: Vec<usize> = (0..n).filter(|&v| adj[v].len() < cfg.delta).collect();
        if deficient.is_empty() {
            break;
        }
        *attempted += 1;
        let u = deficient[rng.gen_range(0..deficient.len())];

        // Ball of radius g-2 around u: forbidden partners.
        dist.iter_mut().for_each(|d| *d = usize::MAX);
        dist[u] = 0;
        queue.clear();
        queue.push_back(u);
        while let Some(x) = queue.pop_front() {
            if dist[x] + 2 >= cfg.g {
                continue;
            }
            for &y in &adj[x] {
                if dist[y] == usize::MAX {
                    dist[y] = dist[x] + 1;
                    queue.push_back(y);
                }
            }
        }
        let candidates: Vec<usize> = (0..n)
            .filter(|&v| dist[v] == usize::MAX && adj[v].len() < cap)
            .collect();
        if candidates.is_empty() {
            return Err(deficit(&adj));
        }
        let v = candidates[rng.gen_range(0..candidates.len())];
        adj[u].push(v);
        adj[v].push(u);
    }
    let left = deficit(&adj);
    if left > 0 {
        return Err(left);
    }

    // Joining components never closes a cycle.
    let comps = components(&adj);
    for pair in comps.windows(2) {
        let a = pair[0][rng.gen_range(0..pair[0].len())];
        let b = pair[1][rng.gen_range(0..pair[1].len())];
        adj[a].push(b);
        adj[b].push(a);
    }

    let edges = adj
        .iter()
        .enumerate()
        .flat_map(|(u, nb)| nb.iter().filter(move |&&v| u < v).map(move |&v| (u, v)));
    let graph = Graph::from_edges(n, edges).expect("generated edges are valid");
    let girth_ok = girth(&graph).is_none_or(|gg| gg >= cfg.g);
    if graph.min_degree() >= cfg.delta && girth_ok && crate::graph::is_connected(&graph) {
        Ok(graph)
    } else {
        Err(0)
    }
}

fn components(adj: &[Vec<usize>]) -> Vec<Vec<usize>> {
    let mut seen = vec![false; adj.len()];
    let mut out = Vec::new();
    for s in 0..adj.len() {
        if seen[s] {
            continue;
        }
        seen[s] = true;
        let mut comp = vec![s];
        let mut i = 0;
        while i < comp.len() {
            let x = comp[i];
            i += 1;
            for &y in &adj[x] {
                if !seen[y] {
                    seen[y] = true;
                    comp.push(y);
                }
            }
        }
        comp.sort_unstable();
        out.push(comp);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::is_connected;

    #[test]
    fn petersen_sized_request() {
        let cfg = GeneratorConfig::new(20, 3, 5, 1);
        let g = random_min_degree_girth(&cfg).unwrap();
        assert!(g.min_degree() >= 3);
        assert!(girth(&g).unwrap() >= 5);
        assert!(is_connected(&g));
    }

    #[test]
    fn impossible_instance_fails() {
        let cfg = GeneratorConfig::new(4, 3, 4, 0);
        let err = random_min_degree_girth(&cfg).unwrap_err();
        assert_eq!(err.reason, FailureReason::Exhausted);
        assert_eq!(err.restarts, 50);
        assert!(err.best_deficit > 0);
    }

    #[test]
    fn six_vertices_girth_four_is_k33() {
        for seed in 0..5 {
            let g = random_min_degree_girth(&GeneratorConfig::new(6, 3, 4, seed)).unwrap();
            // Triangle-free with min degree 3 on 6 vertices forces K_{3,3}.
            assert_eq!(g.size(), 9);
            let side = crate::graph::bfs_distances(&g, 0);
            assert!(g.edges().iter().all(|&(u, v)| side[u] % 2 != side[v] % 2));
            assert_eq!(side.iter().filter(|&&d| d % 2 == 0).count(), 3);
        }
    }

    #[test]
    fn deterministic_per_seed() {
        let cfg = GeneratorConfig::new(60, 3, 6, 42);
        let a = random_min_degree_girth(&cfg).unwrap();
        let b = random_min_degree_girth(&cfg).unwrap();
        assert_eq!(cfg.annotate(&a), cfg.annotate(&b));
        assert!(cfg.annotate(&a).ends_with("# seed=42 delta=3 g=6\n"));
    }

    #[test]
    fn invalid_configs() {
        for cfg in [
            GeneratorConfig::new(10, 1, 4, 0),
            GeneratorConfig::new(10, 3, 2, 0),
            GeneratorConfig::new(3, 3, 4, 0),
        ] {
            let e = random_min_degree_girth(&cfg).unwrap_err();
            assert!(matches!(e.reason, FailureReason::InvalidConfig(_)));
        }
    }
}
