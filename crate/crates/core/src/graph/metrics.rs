use std::collections::VecDeque;

use super::Graph;
use crate::error::{Error, Result};
use crate::scalar::Rational;

/// Distance sentinel for vertices not reachable from the source.
pub const UNREACHABLE: usize = usize::MAX;

/// Hop distances from `source`; unreachable vertices hold [`UNREACHABLE`].
pub fn bfs_distances(g: &Graph, source: usize) -> Vec<usize> {
    bfs_bounded(g, source, usize::MAX)
}

/// BFS that stops expanding past `limit` hops.
pub(crate) fn bfs_bounded(g: &Graph, source: usize, limit: usize) -> Vec<usize> {
    let mut dist = vec![UNREACHABLE; g.order()];
    let mut queue = VecDeque::new();
    dist[source] = 0;
    queue.push_back(source);
    while let Some(u) = queue.pop_front() {
        if dist[u] >= limit {
            continue;
        }
        for &w in g.neighbors(u) {
            if dist[w] == UNREACHABLE {
                dist[w] = dist[u] + 1;
                queue.push_back(w);
            }
        }
    }
    dist
}

pub fn is_connected(g: &Graph) -> bool {
    g.order() == 0 || bfs_distances(g, 0).iter().all(|&d| d != UNREACHABLE)
}

/// Shortest-path forest grown simultaneously from a set of roots.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultiSourceBfs {
    /// Distance to the nearest root.
    pub dist: Vec<usize>,
    /// Nearest root; ties go to the lowest root id.
    pub root: Vec<usize>,
    /// Forest parent (`None` for roots and unreachable vertices). Among
    /// candidate parents the one with the lowest root wins, then lowest id.
    pub parent: Vec<Option<usize>>,
}

pub fn multi_source_bfs(g: &Graph, roots: &[usize]) -> MultiSourceBfs {
    let n = g.order();
    let mut dist = vec![UNREACHABLE; n];
    let mut queue = VecDeque::new();
    for &r in roots {
        if dist[r] == UNREACHABLE {
            dist[r] = 0;
            queue.push_back(r);
        }
    }
    while let Some(u) = queue.pop_front() {
        for &w in g.neighbors(u) {
            if dist[w] == UNREACHABLE {
                dist[w] = dist[u] + 1;
                queue.push_back(w);
            }
        }
    }

    let mut order: Vec<usize> = (0..n).filter(|&v| dist[v] != UNREACHABLE).collect();
    order.sort_by_key(|&v| (dist[v], v));
    let mut root = vec![UNREACHABLE; n];
    let mut parent = vec![None; n];
    for &v in &order {
        if dist[v] == 0 {
            root[v] = v;
            continue;
        }
        let p = g
            .neighbors(v)
            .iter()
            .copied()
            .filter(|&y| dist[y] + 1 == dist[v])
            .min_by_key(|&y| (root[y], y))
            .expect("BFS layer has a predecessor");
        parent[v] = Some(p);
        root[v] = root[p];
    }
    MultiSourceBfs { dist, root, parent }
}

/// Per-vertex eccentricities and their aggregates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EccentricityProfile {
    pub ecc: Vec<usize>,
    /// Total eccentricity `EX(G)`.
    pub total: u64,
    /// `EX(G)/n`, exact.
    pub avec: Rational,
    pub radius: usize,
    pub diameter: usize,
}

/// Runs one BFS per vertex. Fails on disconnected or empty graphs.
pub fn eccentricity_profile(g: &Graph) -> Result<EccentricityProfile> {
    let n = g.order();
    if n == 0 {
        return Err(Error::Domain("empty graph".into()));
    }
    let mut ecc = Vec::with_capacity(n);
    for v in 0..n {
        ecc.push(eccentricity(g, v)?);
    }
    let total: u64 = ecc.iter().map(|&e| e as u64).sum();
    Ok(EccentricityProfile {
        avec: Rational::new(total as i128, n as i128),
        radius: *ecc.iter().min().unwrap(),
        diameter: *ecc.iter().max().unwrap(),
        total,
        ecc,
    })
}

pub(crate) fn eccentricity(g: &Graph, v: usize) -> Result<usize> {
    let d = bfs_distances(g, v);
    if d.contains(&UNREACHABLE) {
        return Err(Error::Disconnected);
    }
    Ok(d.into_iter().max().unwrap_or(0))
}

/// Length of a shortest cycle, `None` for forests.
///
/// Each root runs a BFS; a non-tree edge `uw` seen from `u` closes a closed
/// walk of length `d(u) + d(w) + 1` through the root, and the minimum of
/// these over all roots is exactly the girth.
pub fn girth(g: &Graph) -> Option<usize> {
    let n = g.order();
    let mut best = usize::MAX;
    let mut dist = vec![UNREACHABLE; n];
    let mut parent = vec![UNREACHABLE; n];
    let mut queue = VecDeque::new();
    for root in 0..n {
        dist.iter_mut().for_each(|d| *d = UNREACHABLE);
        queue.clear();
        dist[root] = 0;
        parent[root] = UNREACHABLE;
        queue.push_back(root);
        'bfs: while let Some(u) = queue.pop_front() {
            // Any cycle closed from here on is at least 2*d(u) long.
            if 2 * dist[u] >= best {
                break;
            }
            for &w in g.neighbors(u) {
                if dist[w] == UNREACHABLE {
                    dist[w] = dist[u] + 1;
                    parent[w] = u;
                    queue.push_back(w);
                } else if parent[u] != w {
                    best = best.min(dist[u] + dist[w] + 1);
                    if best == 3 {
                        break 'bfs;
                    }
                }
            }
        }
        if best == 3 {
            break;
        }
    }
    (best != usize::MAX).then_some(best)
}
