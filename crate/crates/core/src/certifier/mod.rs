//! Constructive versions of the girth-bound proofs. Each certificate holds
//! the objects the proof builds (packing or spaced matching, spanning tree,
//! weights) and the exact value of every intermediate quantity, with each
//! inequality recomputed rather than assumed.

mod chain;
mod even;
mod odd;
mod packing;
mod tree;

use std::collections::BTreeMap;

use serde::Serialize;

pub use chain::{Chain, ChainStep, Check, Relation};
pub use even::certify_even;
pub use odd::certify_odd;
pub use packing::{build_packing, build_spaced_matching, Packing, SpacedMatching};
pub use tree::{
    build_spanning_tree, build_spanning_tree_from_matching, build_spanning_tree_from_packing,
    weight_function, SpanningTree,
};

use crate::bounds::{BoundId, GraphParams};
use crate::error::{Error, Result};
use crate::graph::{
    bfs_distances, eccentricity_profile, is_connected, multi_source_bfs, path_avec_closed_form,
    Graph, LineGraph, WeightFunction,
};
use crate::scalar::{fmt_ratio, serde_ratio_map, Rational};

/// Odd-girth certificate built around a `(g-1)`-packing `A`.
#[derive(Debug, Clone, PartialEq)]
pub struct PackingCertificate {
    pub max_degree_variant: bool,
    pub girth: usize,
    /// The packing, `a1` first.
    pub members: Vec<usize>,
    pub connectors: Vec<(usize, usize)>,
    pub tree: SpanningTree,
    /// `c` on all vertices of `G`, zero off `A`.
    pub weights: WeightFunction<Rational>,
    /// `c'` indexed like `members`.
    pub normalized_weights: WeightFunction<Rational>,
    /// `T^g[A]`; vertex `i` is `members[i]`.
    pub power: Graph,
    pub chain: Chain,
    pub checks: Vec<Check>,
    pub bound_id: BoundId,
}

/// Even-girth certificate built around a spaced matching `M`.
#[derive(Debug, Clone, PartialEq)]
pub struct MatchingCertificate {
    pub max_degree_variant: bool,
    pub girth: usize,
    /// The matching, `e1` first.
    pub matching: Vec<(usize, usize)>,
    /// `V(M)` in matching order.
    pub matched_vertices: Vec<usize>,
    pub connectors: Vec<(usize, usize)>,
    pub tree: SpanningTree,
    /// `c` on all vertices of `G`, zero off `V(M)`.
    pub vertex_weights: WeightFunction<Rational>,
    /// `L(T)` with its vertex-to-edge table.
    pub line_graph: LineGraph,
    /// `c̄` on the vertices of `L(T)`, zero off `M`.
    pub edge_weights: WeightFunction<Rational>,
    /// `c̄'` indexed like `matching`.
    pub normalized_weights: WeightFunction<Rational>,
    /// `L(T)^g[M]`; vertex `i` is `matching[i]`.
    pub power: Graph,
    pub chain: Chain,
    pub checks: Vec<Check>,
    pub bound_id: BoundId,
}

/// Either kind of certificate, chosen by the parity of the girth.
#[derive(Debug, Clone, PartialEq)]
pub enum Certificate {
    Odd(PackingCertificate),
    Even(MatchingCertificate),
}

/// Dispatches to [`certify_odd`] or [`certify_even`].
pub fn certify(g: &Graph, use_max_deg: bool) -> Result<Certificate> {
    let params = check_input(g)?;
    if params.girth.expect("checked") % 2 == 1 {
        certify_odd(g, use_max_deg).map(Certificate::Odd)
    } else {
        certify_even(g, use_max_deg).map(Certificate::Even)
    }
}

impl Certificate {
    pub fn chain(&self) -> &Chain {
        match self {
            Certificate::Odd(c) => &c.chain,
            Certificate::Even(c) => &c.chain,
        }
    }

    pub fn checks(&self) -> &[Check] {
        match self {
            Certificate::Odd(c) => &c.checks,
            Certificate::Even(c) => &c.checks,
        }
    }

    pub fn tree(&self) -> &SpanningTree {
        match self {
            Certificate::Odd(c) => &c.tree,
            Certificate::Even(c) => &c.tree,
        }
    }

    pub fn bound_id(&self) -> BoundId {
        match self {
            Certificate::Odd(c) => c.bound_id,
            Certificate::Even(c) => c.bound_id,
        }
    }

    pub fn all_steps_hold(&self) -> bool {
        self.chain().all_hold()
    }

    pub fn structure_ok(&self) -> bool {
        self.checks().iter().all(|c| c.holds)
    }

    pub fn final_bound(&self) -> Rational {
        self.chain()
            .get("finalBound")
            .expect("every chain sets finalBound")
    }

    pub fn to_json(&self) -> CertificateJson {
        let tree = self.tree();
        let chain = self.chain();
        let (variant, max_deg, a, m, weights) = match self {
            Certificate::Odd(c) => (
                "odd",
                c.max_degree_variant,
                Some(c.members.clone()),
                None,
                c.members
                    .iter()
                    .map(|&u| (u.to_string(), *c.weights.get(u)))
                    .collect(),
            ),
            Certificate::Even(c) => (
                "even",
                c.max_degree_variant,
                None,
                Some(c.matching.iter().map(|&(u, v)| [u, v]).collect()),
                c.matching
                    .iter()
                    .map(|&(u, v)| {
                        let i = c.line_graph.vertex_of(u, v).expect("matching edge in tree");
                        (format!("{u}-{v}"), *c.edge_weights.get(i))
                    })
                    .collect(),
            ),
        };
        CertificateJson {
            variant: variant.to_string(),
            max_degree: max_deg,
            a,
            m,
            tree_edges: tree.tree.edges().iter().map(|&(u, v)| [u, v]).collect(),
            assignment: tree.assignment.iter().copied().enumerate().collect(),
            weights,
            chain: chain.values.clone(),
            steps: chain.steps.clone(),
            checks: self.checks().to_vec(),
            all_steps_hold: self.all_steps_hold(),
            structure_ok: self.structure_ok(),
            bound_id: self.bound_id(),
        }
    }

    /// One-line outcome.
    pub fn summary(&self) -> String {
        let chain = self.chain();
        let variant = match self {
            Certificate::Odd(_) => "odd",
            Certificate::Even(_) => "even",
        };
        let mut line = format!(
            "{variant} {}: avecG={} finalBound={} allStepsHold={}",
            self.bound_id(),
            fmt_ratio(&chain.get("avecG").expect("set")),
            fmt_ratio(&self.final_bound()),
            self.all_steps_hold()
        );
        if let Some(s) = chain.failed().next() {
            line.push_str(&format!(" firstFailure=\"{}\"", s.label));
        }
        line
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CertificateJson {
    pub variant: String,
    #[serde(rename = "maxDegree")]
    pub max_degree: bool,
    #[serde(rename = "A", skip_serializing_if = "Option::is_none")]
    pub a: Option<Vec<usize>>,
    #[serde(rename = "M", skip_serializing_if = "Option::is_none")]
    pub m: Option<Vec<[usize; 2]>>,
    #[serde(rename = "treeEdges")]
    pub tree_edges: Vec<[usize; 2]>,
    pub assignment: BTreeMap<usize, usize>,
    #[serde(with = "serde_ratio_map")]
    pub weights: BTreeMap<String, Rational>,
    #[serde(with = "serde_ratio_map")]
    pub chain: BTreeMap<String, Rational>,
    pub steps: Vec<ChainStep>,
    pub checks: Vec<Check>,
    #[serde(rename = "allStepsHold")]
    pub all_steps_hold: bool,
    #[serde(rename = "structureOk")]
    pub structure_ok: bool,
    #[serde(rename = "boundId")]
    pub bound_id: BoundId,
}

fn r(x: i128) -> Rational {
    Rational::from(x)
}

fn rc(x: usize) -> Rational {
    Rational::from(x as i128)
}

fn avec(g: &Graph) -> Result<Rational> {
    Ok(eccentricity_profile(g)?.avec)
}

/// Eccentricity of `v` in a connected graph.
fn eccentricity_in(g: &Graph, v: usize) -> Rational {
    rc(bfs_distances(g, v).into_iter().max().unwrap_or(0))
}

fn check_input(g: &Graph) -> Result<GraphParams> {
    if g.order() == 0 || !is_connected(g) {
        return Err(Error::Disconnected);
    }
    let params = GraphParams::measure(g);
    if params.girth.is_none() {
        return Err(Error::NotApplicable("graph is acyclic".into()));
    }
    if params.min_degree < 3 {
        return Err(Error::NotApplicable(format!(
            "minimum degree {} < 3",
            params.min_degree
        )));
    }
    Ok(params)
}

/// Path comparison for normalised weights of total `total`:
/// `avec <= avec(P_ceil(N)) <= 3 ceil(N)/4 - 1/2`. Returns the last bound.
fn path_steps(ch: &mut Chain, label: &str, avec: Rational, total: Rational) -> Result<Rational> {
    let m = total.ceil().to_integer();
    if m < 1 {
        return Err(Error::InvariantViolated(format!(
            "total weight {total} not positive"
        )));
    }
    let ap = ch.value("avecPath", path_avec_closed_form(m as usize)?);
    let pb = ch.value("pathBound", r(3) * r(m) / 4 - Rational::new(1, 2));
    ch.le(&format!("{label} <= avec(P_ceil(N))"), avec, ap);
    ch.le("avec(P_ceil(N)) <= 3 ceil(N)/4 - 1/2", ap, pb);
    Ok(pb)
}

const POWER_CONNECTED: &str = "power graph connected";

fn common_checks(
    g: &Graph,
    roots: &[usize],
    tree: &SpanningTree,
    c: &WeightFunction<Rational>,
    power: &Graph,
) -> Vec<Check> {
    let n = g.order();
    let t = &tree.tree;
    let kept = multi_source_bfs(t, roots).dist == multi_source_bfs(g, roots).dist;
    let edges_in_g = t.edges().iter().all(|&(u, v)| g.has_edge(u, v));
    vec![
        Check::new(
            "tree spans G",
            t.size() + 1 == n && is_connected(t) && edges_in_g,
            || format!("{} edges, connected={}", t.size(), is_connected(t)),
        ),
        Check::new("distance to roots preserved", kept, String::new),
        Check::new("weights sum to n", *c.total() == rc(n), || {
            format!("sum = {}", c.total())
        }),
        Check::new(POWER_CONNECTED, is_connected(power), String::new),
    ]
}

fn power_connected(checks: &[Check]) -> bool {
    checks.iter().any(|c| c.name == POWER_CONNECTED && c.holds)
}
