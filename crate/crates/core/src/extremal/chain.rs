use serde::{Deserialize, Serialize};

use super::catalog::{moore_catalog, MooreGraph};
use crate::error::{Error, Result};
use crate::graph::Graph;

/// `k` copies of a Moore graph joined in a path: in copy `i` (1-based) the
/// edge `a_i b_i` is removed for `2 <= i <= k-1`, and `a_{i+1} b_i` is added
/// for `1 <= i <= k-1`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChainSpec {
    pub delta: usize,
    pub g: usize,
    pub k: usize,
    /// The edge `ab` of the base graph used in every copy.
    pub base_edge: (usize, usize),
    pub link_edges: Vec<(usize, usize)>,
    pub deleted_edges: Vec<(usize, usize)>,
}

impl ChainSpec {
    /// Uses the lexicographically least edge of the catalog graph.
    pub fn canonical(delta: usize, g: usize, k: usize) -> Result<Self> {
        let base = base(delta, g)?;
        let edge = *base
            .graph
            .edges()
            .first()
            .ok_or_else(|| Error::Domain("base graph has no edges".into()))?;
        Self::with_edge(delta, g, k, edge)
    }

    /// Same construction with a caller-chosen base edge.
    pub fn with_edge(delta: usize, g: usize, k: usize, edge: (usize, usize)) -> Result<Self> {
        if k == 0 {
            return Err(Error::Domain("chain needs k >= 1 copies".into()));
        }
        let base = base(delta, g)?;
        if !base.graph.has_edge(edge.0, edge.1) {
            return Err(Error::Domain(format!(
                "{edge:?} is not an edge of the base graph"
            )));
        }
        let m = base.spec.order;
        let (a, b) = edge;
        let a_i = |i: usize| (i - 1) * m + a;
        let b_i = |i: usize| (i - 1) * m + b;
        Ok(ChainSpec {
            delta,
            g,
            k,
            base_edge: edge,
            link_edges: (1..k).map(|i| (a_i(i + 1), b_i(i))).collect(),
            deleted_edges: (2..k).map(|i| (a_i(i), b_i(i))).collect(),
        })
    }

    pub fn order(&self) -> Result<usize> {
        Ok(self.k * base(self.delta, self.g)?.spec.order)
    }
}

fn base(delta: usize, g: usize) -> Result<MooreGraph> {
    moore_catalog(delta, g)?.ok_or(Error::NotInCatalog { delta, g })
}

/// Builds `G_{n,δ,k}` from its spec.
pub fn chain_graph(spec: &ChainSpec) -> Result<Graph> {
    let base = base(spec.delta, spec.g)?;
    let mut g = Graph::empty(0);
    for _ in 0..spec.k {
        g = g.disjoint_union(&base.graph);
    }
    for &(u, v) in &spec.deleted_edges {
        if !g.has_edge(u, v) {
            return Err(Error::Domain(format!("deleted edge ({u},{v}) not present")));
        }
    }
    let kept = g
        .edges()
        .iter()
        .copied()
        .filter(|&(u, v)| {
            !spec
                .deleted_edges
                .iter()
                .any(|&(x, y)| (x.min(y), x.max(y)) == (u, v))
        })
        .chain(spec.link_edges.iter().copied())
        .collect::<Vec<_>>();
    Graph::from_edges(g.order(), kept)
}
