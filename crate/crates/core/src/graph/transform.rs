use super::metrics::{bfs_bounded, UNREACHABLE};
use super::Graph;
use crate::error::{Error, Result};

/// `G^k`: same vertices, `u ~ v` iff `1 <= d(u, v) <= k`.
pub fn power_graph(g: &Graph, k: usize) -> Result<Graph> {
    if k == 0 {
        return Err(Error::Domain("graph power needs k >= 1".into()));
    }
    if k == 1 {
        return Ok(g.clone());
    }
    let mut edges = Vec::new();
    for u in 0..g.order() {
        let d = bfs_bounded(g, u, k);
        edges.extend(
            d.iter()
                .enumerate()
                .filter(|&(v, &dv)| v > u && dv != UNREACHABLE && dv <= k)
                .map(|(v, _)| (u, v)),
        );
    }
    Graph::from_edges(g.order(), edges)
}

/// `G^k[S]` computed without forming `G^k`: BFS to depth `k` from each
/// member of `vertices`. Vertex `i` of the result is `vertices[i]`.
pub fn power_subgraph(g: &Graph, k: usize, vertices: &[usize]) -> Result<Graph> {
    if k == 0 {
        return Err(Error::Domain("graph power needs k >= 1".into()));
    }
    induced_subgraph(g, vertices)?;
    let mut edges = Vec::new();
    for (i, &u) in vertices.iter().enumerate() {
        let d = bfs_bounded(g, u, k);
        for (j, &v) in vertices.iter().enumerate().skip(i + 1) {
            if d[v] != UNREACHABLE && d[v] <= k {
                edges.push((i, j));
            }
        }
    }
    Graph::from_edges(vertices.len(), edges)
}

/// Line graph together with the vertex-to-edge table: vertex `i` of
/// `graph` is edge `edges[i]` of the source graph (lexicographic order).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LineGraph {
    pub graph: Graph,
    pub edges: Vec<(usize, usize)>,
}

impl LineGraph {
    pub fn vertex_of(&self, u: usize, v: usize) -> Option<usize> {
        self.edges.binary_search(&(u.min(v), u.max(v))).ok()
    }
}

pub fn line_graph(g: &Graph) -> LineGraph {
    let edges = g.edges().to_vec();
    let mut adj = Vec::new();
    // Edges at a common vertex form a clique in L(G).
    for v in 0..g.order() {
        let incident: Vec<usize> = g
            .neighbors(v)
            .iter()
            .map(|&w| g.edge_index(v, w).expect("incident edge exists"))
            .collect();
        for (i, &a) in incident.iter().enumerate() {
            for &b in &incident[i + 1..] {
                adj.push((a, b));
            }
        }
    }
    LineGraph {
        graph: Graph::from_edges(edges.len(), adj).expect("line graph edges are valid"),
        edges,
    }
}

/// Subgraph induced by `vertices`, relabelled `0..len` in the given order.
/// Returns the graph and the new-to-old id table.
pub fn induced_subgraph(g: &Graph, vertices: &[usize]) -> Result<(Graph, Vec<usize>)> {
    if vertices.is_empty() {
        return Err(Error::Domain(
            "induced subgraph of an empty vertex set".into(),
        ));
    }
    let mut new_id = vec![UNREACHABLE; g.order()];
    for (i, &v) in vertices.iter().enumerate() {
        if v >= g.order() {
            return Err(Error::Domain(format!("vertex {v} not in graph")));
        }
        if new_id[v] != UNREACHABLE {
            return Err(Error::Domain(format!("vertex {v} listed twice")));
        }
        new_id[v] = i;
    }
    let edges = g
        .edges()
        .iter()
        .filter(|&&(u, v)| new_id[u] != UNREACHABLE && new_id[v] != UNREACHABLE)
        .map(|&(u, v)| (new_id[u], new_id[v]));
    Ok((Graph::from_edges(vertices.len(), edges)?, vertices.to_vec()))
}
