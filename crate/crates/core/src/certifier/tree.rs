use std::collections::VecDeque;

use super::packing::{Packing, SpacedMatching};
use crate::error::{Error, Result};
use crate::graph::{is_connected, multi_source_bfs, Graph, WeightFunction};
use crate::scalar::Rational;

/// Spanning tree of `G` that keeps every vertex's distance to a root set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpanningTree {
    pub tree: Graph,
    /// Parent pointers with the first root as the tree root.
    pub parent: Vec<Option<usize>>,
    /// Closest root of each vertex (lowest id on ties).
    pub assignment: Vec<usize>,
    /// Distance of each vertex to the root set, in `G` and in the tree.
    pub dist: Vec<usize>,
    /// Edges that joined two BFS cells, in insertion order.
    pub joins: Vec<(usize, usize)>,
    /// How many of those came from the quotient fallback.
    pub fallback_joins: usize,
}

struct UnionFind(Vec<usize>);

impl UnionFind {
    fn find(&mut self, x: usize) -> usize {
        let mut r = x;
        while self.0[r] != r {
            r = self.0[r];
        }
        let mut c = x;
        while self.0[c] != r {
            let next = self.0[c];
            self.0[c] = r;
            c = next;
        }
        r
    }

    fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        self.0[ra.max(rb)] = ra.min(rb);
        true
    }
}

/// Multi-source BFS forest from `roots`, then the `forced` edges, then the
/// `connectors` that still join distinct components, then the cheapest
/// remaining cross edges (by `d(x) + d(y) + 1`, then lexicographically).
/// Distance preservation and the assignment are re-verified on the result.
pub fn build_spanning_tree(
    g: &Graph,
    roots: &[usize],
    forced: &[(usize, usize)],
    connectors: &[(usize, usize)],
) -> Result<SpanningTree> {
    let n = g.order();
    if roots.is_empty() || roots.iter().any(|&r| r >= n) {
        return Err(Error::Domain(
            "root set must be a nonempty set of vertices".into(),
        ));
    }
    if !is_connected(g) {
        return Err(Error::Disconnected);
    }
    let bfs = multi_source_bfs(g, roots);
    let mut uf = UnionFind((0..n).collect());
    let mut edges = Vec::with_capacity(n.saturating_sub(1));
    for (v, p) in bfs.parent.iter().enumerate() {
        if let Some(p) = *p {
            uf.union(v, p);
            edges.push((v, p));
        }
    }
    for &(u, v) in forced {
        if !g.has_edge(u, v) || !uf.union(u, v) {
            return Err(Error::InvariantViolated(format!(
                "forced edge ({u},{v}) missing or closes a cycle"
            )));
        }
        edges.push((u, v));
    }
    let mut joins = Vec::new();
    for &(u, v) in connectors {
        if !g.has_edge(u, v) {
            return Err(Error::InvariantViolated(format!(
                "connector ({u},{v}) not an edge"
            )));
        }
        if uf.union(u, v) {
            joins.push((u, v));
        }
    }
    let primary = joins.len();
    let mut cross: Vec<(usize, (usize, usize))> = g
        .edges()
        .iter()
        .filter(|&&(u, v)| bfs.root[u] != bfs.root[v])
        .map(|&(u, v)| (bfs.dist[u] + bfs.dist[v] + 1, (u, v)))
        .collect();
    cross.sort_unstable();
    for (_, (u, v)) in cross {
        if uf.union(u, v) {
            joins.push((u, v));
        }
    }
    let fallback_joins = joins.len() - primary;
    edges.extend(joins.iter().copied());
    let tree = Graph::from_edges(n, edges)?;

    if tree.size() + 1 != n || !is_connected(&tree) {
        return Err(Error::InvariantViolated(
            "result is not a spanning tree".into(),
        ));
    }
    let check = multi_source_bfs(&tree, roots);
    if check.dist != bfs.dist {
        return Err(Error::InvariantViolated(
            "distance to the root set not preserved in the tree".into(),
        ));
    }
    if check.root != bfs.root {
        return Err(Error::InvariantViolated(
            "closest root differs between graph and tree".into(),
        ));
    }
    Ok(SpanningTree {
        parent: rooted_parents(&tree, roots[0]),
        tree,
        assignment: bfs.root,
        dist: bfs.dist,
        joins,
        fallback_joins,
    })
}

fn rooted_parents(tree: &Graph, root: usize) -> Vec<Option<usize>> {
    let mut parent = vec![None; tree.order()];
    let mut seen = vec![false; tree.order()];
    seen[root] = true;
    let mut queue = VecDeque::from([root]);
    while let Some(u) = queue.pop_front() {
        for &w in tree.neighbors(u) {
            if !seen[w] {
                seen[w] = true;
                parent[w] = Some(u);
                queue.push_back(w);
            }
        }
    }
    parent
}

pub fn build_spanning_tree_from_packing(g: &Graph, packing: &Packing) -> Result<SpanningTree> {
    build_spanning_tree(g, &packing.members, &[], &packing.connectors)
}

pub fn build_spanning_tree_from_matching(g: &Graph, m: &SpacedMatching) -> Result<SpanningTree> {
    build_spanning_tree(g, &m.vertices(), &m.edges, &m.connectors)
}

/// `c(u)` = number of vertices assigned to `u`; zero off the root set.
pub fn weight_function(assignment: &[usize]) -> WeightFunction<Rational> {
    let mut counts = vec![0i128; assignment.len()];
    for &a in assignment {
        counts[a] += 1;
    }
    WeightFunction::new(counts.into_iter().map(Rational::from).collect())
        .expect("counts are nonnegative")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::certifier::packing::{build_packing, build_spaced_matching};
    use crate::generators::{named, NamedGraph};

    #[test]
    fn petersen_bfs_tree() {
        let g = named(NamedGraph::Petersen).unwrap();
        let t = build_spanning_tree(&g, &[0], &[], &[]).unwrap();
        assert_eq!((t.tree.order(), t.tree.size()), (10, 9));
        assert!(t.dist.iter().all(|&d| d <= 2));
        assert!(t.assignment.iter().all(|&a| a == 0));
        assert_eq!(t.parent[0], None);
        let c = weight_function(&t.assignment);
        assert_eq!(*c.get(0), Rational::from(10));
        assert_eq!(*c.total(), Rational::from(10));
    }

    #[test]
    fn path_is_its_own_tree() {
        let p = named(NamedGraph::Path(12)).unwrap();
        let pk = build_packing(&p, 3, 0).unwrap();
        let t = build_spanning_tree_from_packing(&p, &pk).unwrap();
        assert_eq!(t.tree, p);
        assert_eq!(t.fallback_joins, 0);
        let m = build_spaced_matching(&p, 4, (0, 1)).unwrap();
        let t = build_spanning_tree_from_matching(&p, &m).unwrap();
        assert_eq!(t.tree, p);
    }

    #[test]
    fn fallback_joins_cells() {
        // No connectors offered: the quotient fallback must connect the cells.
        let c = named(NamedGraph::Cycle(9)).unwrap();
        let t = build_spanning_tree(&c, &[0, 3, 6], &[], &[]).unwrap();
        assert_eq!(t.tree.size(), 8);
        assert_eq!(t.fallback_joins, 2);
    }

    #[test]
    fn rejects_bad_forced_edges() {
        let c = named(NamedGraph::Cycle(5)).unwrap();
        assert!(matches!(
            build_spanning_tree(&c, &[0, 1], &[(0, 2)], &[]),
            Err(Error::InvariantViolated(_))
        ));
    }
}
