use serde::{Deserialize, Serialize};

use super::field::FiniteField;
use crate::bounds::int_pow;
use crate::error::{Error, Result};
use crate::generators::{named, NamedGraph};
use crate::graph::{eccentricity_profile, girth, Graph};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum MooreSource {
    Complete,
    CompleteBipartite,
    Petersen,
    HoffmanSingleton,
    Heawood,
    ProjectivePlaneIncidence(usize),
    Cycle,
}

/// Parameters of a catalog Moore graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct MooreSpec {
    pub delta: usize,
    pub g: usize,
    /// `K` for odd `g`, `L` for even `g`.
    pub order: usize,
    /// `(g-1)/2` for odd `g`, `g/2` for even `g`.
    pub diameter_d: usize,
    pub source: MooreSource,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MooreGraph {
    pub spec: MooreSpec,
    pub graph: Graph,
}

/// Exact Moore order: `K` (odd g) or `L` (even g) for `δ >= 3`, and `g` for
/// cycles (`δ = 2`). `None` when undefined or too large.
pub fn moore_order(delta: usize, g: usize) -> Option<usize> {
    if g < 3 || delta < 2 {
        return None;
    }
    if delta == 2 {
        return Some(g);
    }
    let geo = |e: usize| {
        int_pow(delta - 1, e)
            .ok()
            .map(|x| (x as usize - 1) / (delta - 2))
    };
    if g % 2 == 1 {
        Some(1 + delta * geo((g - 1) / 2)?)
    } else {
        Some(2 * geo(g / 2)?)
    }
}

/// Point/line incidence graph of PG(2, q). Points take ids `0..q²+q+1`,
/// lines follow. Both are normalised vectors of GF(q)^3 (first nonzero
/// coordinate equal to 1), listed in lexicographic order.
pub fn projective_plane_incidence(q: usize) -> Result<Graph> {
    let f = FiniteField::new(q)?;
    let mut pts = Vec::new();
    for a in 0..q {
        for b in 0..q {
            pts.push([1, a, b]);
        }
    }
    for a in 0..q {
        pts.push([0, 1, a]);
    }
    pts.push([0, 0, 1]);
    let m = pts.len();
    let dot =
        |x: &[usize; 3], y: &[usize; 3]| (0..3).fold(0, |acc, i| f.add(acc, f.mul(x[i], y[i])));
    let mut edges = Vec::new();
    for (i, p) in pts.iter().enumerate() {
        for (j, l) in pts.iter().enumerate() {
            if dot(p, l) == 0 {
                edges.push((i, m + j));
            }
        }
    }
    Graph::from_edges(2 * m, edges)
}

/// Returns a verified Moore graph for `(delta, g)` when one is catalogued:
/// `K_{δ+1}` (g=3), `K_{δ,δ}` (g=4), cycles (δ=2), Petersen (3,5),
/// Hoffman–Singleton (7,5), and PG(2,q) incidence graphs (q+1, 6) for prime
/// powers q ≤ 8. `Ok(None)` means not in the catalog.
pub fn moore_catalog(delta: usize, g: usize) -> Result<Option<MooreGraph>> {
    if delta < 2 || g < 3 {
        return Ok(None);
    }
    let (graph, source) = match (delta, g) {
        (d, 3) => (named(NamedGraph::Complete(d + 1))?, MooreSource::Complete),
        (d, 4) => (
            named(NamedGraph::CompleteBipartite(d, d))?,
            MooreSource::CompleteBipartite,
        ),
        (2, g) => (named(NamedGraph::Cycle(g))?, MooreSource::Cycle),
        (3, 5) => (named(NamedGraph::Petersen)?, MooreSource::Petersen),
        (7, 5) => (
            named(NamedGraph::HoffmanSingleton)?,
            MooreSource::HoffmanSingleton,
        ),
        (3, 6) => (named(NamedGraph::Heawood)?, MooreSource::Heawood),
        (d, 6) if matches!(d - 1, 3 | 4 | 5 | 7 | 8) => (
            projective_plane_incidence(d - 1)?,
            MooreSource::ProjectivePlaneIncidence(d - 1),
        ),
        _ => return Ok(None),
    };
    let order = moore_order(delta, g).expect("catalog entries have a Moore order");
    let spec = MooreSpec {
        delta,
        g,
        order,
        diameter_d: if g % 2 == 1 { (g - 1) / 2 } else { g / 2 },
        source,
    };
    verify(&graph, &spec)?;
    Ok(Some(MooreGraph { spec, graph }))
}

fn verify(graph: &Graph, spec: &MooreSpec) -> Result<()> {
    let fail = |what: String| {
        Err(Error::InvariantViolated(format!(
            "{:?}: {what}",
            spec.source
        )))
    };
    if graph.order() != spec.order {
        return fail(format!("order {} != {}", graph.order(), spec.order));
    }
    if graph.min_degree() != spec.delta || graph.max_degree() != spec.delta {
        return fail("not regular of the catalogued degree".into());
    }
    if girth(graph) != Some(spec.g) {
        return fail(format!("girth {:?} != {}", girth(graph), spec.g));
    }
    let diam = eccentricity_profile(graph)?.diameter;
    // Moore graphs of even girth are bipartite with diameter g/2.
    if diam != spec.diameter_d {
        return fail(format!("diameter {diam} != {}", spec.diameter_d));
    }
    Ok(())
}
