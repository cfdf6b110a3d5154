use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::extremal::projective_plane_incidence;
use crate::graph::Graph;

/// Fixture graphs with fixed, documented labelings.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum NamedGraph {
    Path(usize),
    Cycle(usize),
    Complete(usize),
    CompleteBipartite(usize, usize),
    /// Kneser graph K(5,2): 2-subsets of {0..4} in lexicographic order,
    /// adjacent when disjoint.
    Petersen,
    /// Point/line incidence graph of PG(2,2); points are `0..7`.
    Heawood,
    /// Robertson's pentagon/pentagram construction on 50 vertices.
    HoffmanSingleton,
}

pub fn named(which: NamedGraph) -> Result<Graph> {
    match which {
        NamedGraph::Path(n) => {
            if n == 0 {
                return Err(Error::Domain("path needs at least one vertex".into()));
            }
            Graph::from_edges(n, (1..n).map(|v| (v - 1, v)))
        }
        NamedGraph::Cycle(n) => {
            if n < 3 {
                return Err(Error::Domain(format!("cycle needs n >= 3, got {n}")));
            }
            Graph::from_edges(n, (0..n).map(|v| (v, (v + 1) % n)))
        }
        NamedGraph::Complete(n) => {
            if n == 0 {
                return Err(Error::Domain("complete graph needs n >= 1".into()));
            }
            Graph::from_edges(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))))
        }
        NamedGraph::CompleteBipartite(a, b) => {
            if a == 0 || b == 0 {
                return Err(Error::Domain(
                    "complete bipartite sides must be nonempty".into(),
                ));
            }
            Graph::from_edges(a + b, (0..a).flat_map(|u| (a..a + b).map(move |v| (u, v))))
        }
        NamedGraph::Petersen => Ok(petersen()),
        NamedGraph::Heawood => projective_plane_incidence(2),
        NamedGraph::HoffmanSingleton => Ok(hoffman_singleton()),
    }
}

fn petersen() -> Graph {
    let pairs: Vec<(usize, usize)> = (0..5)
        .flat_map(|a| (a + 1..5).map(move |b| (a, b)))
        .collect();
    let disjoint =
        |p: (usize, usize), q: (usize, usize)| p.0 != q.0 && p.0 != q.1 && p.1 != q.0 && p.1 != q.1;
    let mut edges = Vec::new();
    for i in 0..pairs.len() {
        for j in i + 1..pairs.len() {
            if disjoint(pairs[i], pairs[j]) {
                edges.push((i, j));
            }
        }
    }
    Graph::from_edges(10, edges).expect("Petersen edges are valid")
}

/// Pentagons `P_h` occupy ids `5h + j`, pentagrams `Q_i` occupy
/// `25 + 5i + j`, for `h, i, j` in Z_5.
fn hoffman_singleton() -> Graph {
    let p = |h: usize, j: usize| 5 * h + j % 5;
    let q = |i: usize, j: usize| 25 + 5 * i + j % 5;
    let mut edges = Vec::new();
    for h in 0..5 {
        for j in 0..5 {
            edges.push((p(h, j), p(h, j + 1)));
            edges.push((q(h, j), q(h, j + 2)));
        }
    }
    for h in 0..5 {
        for i in 0..5 {
            for j in 0..5 {
                edges.push((p(h, j), q(i, h * i + j)));
            }
        }
    }
    Graph::from_edges(50, edges).expect("Hoffman-Singleton edges are valid")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{eccentricity_profile, girth};
    use crate::scalar::Rational;

    #[test]
    fn fixtures() {
        let p5 = named(NamedGraph::Path(5)).unwrap();
        assert_eq!(
            eccentricity_profile(&p5).unwrap().avec,
            Rational::new(16, 5)
        );

        let k33 = named(NamedGraph::CompleteBipartite(3, 3)).unwrap();
        assert_eq!(girth(&k33), Some(4));
        assert_eq!(k33.size(), 9);

        let pet = named(NamedGraph::Petersen).unwrap();
        assert_eq!((pet.order(), pet.size()), (10, 15));
    }

    #[test]
    fn moore_fixtures_are_regular_with_right_girth() {
        for (which, n, d, g) in [
            (NamedGraph::Petersen, 10, 3, 5),
            (NamedGraph::Heawood, 14, 3, 6),
            (NamedGraph::HoffmanSingleton, 50, 7, 5),
        ] {
            let gr = named(which).unwrap();
            assert_eq!(gr.order(), n, "{which:?}");
            assert!((0..n).all(|v| gr.degree(v) == d), "{which:?}");
            assert_eq!(girth(&gr), Some(g), "{which:?}");
        }
    }

    #[test]
    fn invalid_sizes() {
        assert!(named(NamedGraph::Path(0)).is_err());
        assert!(named(NamedGraph::Cycle(2)).is_err());
        assert!(named(NamedGraph::CompleteBipartite(0, 3)).is_err());
    }
}
