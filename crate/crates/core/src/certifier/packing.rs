use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::graph::{is_connected, Graph, UNREACHABLE};

/// Distances to a growing vertex set, with a shortest-path parent for
/// every vertex outside it.
struct GrowingBfs {
    dist: Vec<usize>,
    parent: Vec<Option<usize>>,
}

impl GrowingBfs {
    fn new(n: usize) -> Self {
        GrowingBfs {
            dist: vec![UNREACHABLE; n],
            parent: vec![None; n],
        }
    }

    /// Adds `s` to the set; only vertices that get strictly closer are
    /// revisited.
    fn add(&mut self, g: &Graph, s: usize) {
        self.dist[s] = 0;
        self.parent[s] = None;
        let mut queue = VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            for &w in g.neighbors(u) {
                if self.dist[u] + 1 < self.dist[w] {
                    self.dist[w] = self.dist[u] + 1;
                    self.parent[w] = Some(u);
                    queue.push_back(w);
                }
            }
        }
    }

    /// Shortest path from the set to `v`, listed from the set side.
    fn path_to(&self, v: usize) -> Vec<usize> {
        let mut path = vec![v];
        let mut cur = v;
        while let Some(p) = self.parent[cur] {
            path.push(p);
            cur = p;
        }
        path.reverse();
        path
    }
}

/// Greedy `(g-1)`-packing together with the middle edges of the paths along
/// which its members were discovered.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Packing {
    /// In insertion order; the start vertex comes first.
    pub members: Vec<usize>,
    pub connectors: Vec<(usize, usize)>,
}

fn check_input(g: &Graph, girth: usize) -> Result<()> {
    if girth < 2 {
        return Err(Error::Domain(format!(
            "spacing parameter {girth} too small"
        )));
    }
    if g.order() == 0 || !is_connected(g) {
        return Err(Error::Disconnected);
    }
    Ok(())
}

/// Starting from `{start}`, repeatedly adds the lowest-id vertex at distance
/// exactly `girth` until every vertex is within `girth - 1` of the set.
pub fn build_packing(g: &Graph, girth: usize, start: usize) -> Result<Packing> {
    check_input(g, girth)?;
    if start >= g.order() {
        return Err(Error::Domain(format!("start vertex {start} not in graph")));
    }
    let mut bfs = GrowingBfs::new(g.order());
    bfs.add(g, start);
    let mut members = vec![start];
    let mut connectors = Vec::new();
    let r = (girth - 1) / 2;
    while bfs.dist.iter().any(|&d| d >= girth) {
        let a = (0..g.order())
            .find(|&v| bfs.dist[v] == girth)
            .expect("a vertex at distance exactly g lies on any longer shortest path");
        let path = bfs.path_to(a);
        connectors.push((path[r], path[r + 1]));
        bfs.add(g, a);
        members.push(a);
    }
    Ok(Packing {
        members,
        connectors,
    })
}

/// Greedy matching with pairwise edge distance at least `girth - 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpacedMatching {
    pub edges: Vec<(usize, usize)>,
    pub connectors: Vec<(usize, usize)>,
}

impl SpacedMatching {
    /// `V(M)` in insertion order.
    pub fn vertices(&self) -> Vec<usize> {
        self.edges.iter().flat_map(|&(u, v)| [u, v]).collect()
    }
}

/// Starting from `{start}`, repeatedly adds the lexicographically least edge
/// at edge distance exactly `girth - 1` from `V(M)` until every edge is within
/// `girth - 2`. The edge distance is the least distance between endpoints.
pub fn build_spaced_matching(
    g: &Graph,
    girth: usize,
    start: (usize, usize),
) -> Result<SpacedMatching> {
    check_input(g, girth)?;
    let start = (start.0.min(start.1), start.0.max(start.1));
    if !g.has_edge(start.0, start.1) {
        return Err(Error::Domain(format!("start edge {start:?} not in graph")));
    }
    let mut bfs = GrowingBfs::new(g.order());
    bfs.add(g, start.0);
    bfs.add(g, start.1);
    let mut edges = vec![start];
    let mut connectors = Vec::new();
    let s = (girth - 2) / 2;
    let edge_dist = |bfs: &GrowingBfs, (u, v): (usize, usize)| bfs.dist[u].min(bfs.dist[v]);
    while g.edges().iter().any(|&e| edge_dist(&bfs, e) >= girth - 1) {
        let e = *g
            .edges()
            .iter()
            .find(|&&e| edge_dist(&bfs, e) == girth - 1)
            .expect("an edge at distance exactly g-1 lies beyond any farther edge");
        let near = if bfs.dist[e.0] <= bfs.dist[e.1] {
            e.0
        } else {
            e.1
        };
        let path = bfs.path_to(near);
        connectors.push((path[s], path[s + 1]));
        bfs.add(g, e.0);
        bfs.add(g, e.1);
        edges.push(e);
    }
    Ok(SpacedMatching { edges, connectors })
}
