use super::chain::{Chain, Check};
use super::packing::{build_spaced_matching, SpacedMatching};
use super::tree::{build_spanning_tree_from_matching, weight_function, SpanningTree};
use super::{
    avec, check_input, common_checks, eccentricity_in, path_steps, power_connected, r, rc,
    MatchingCertificate,
};
use crate::bounds::{
    bound_thm_girth, maxdeg_constants_even, moore_order_even, thm_girth_maxdeg_value, BoundId,
};
use crate::error::{Error, Result};
use crate::graph::{
    bfs_distances, line_graph, power_subgraph, weighted_avec, Graph, WeightFunction,
};
use crate::scalar::Rational;

/// Runs the even-girth proof on `g`: greedy spaced matching, distance
/// preserving spanning tree `T`, weights moved onto `V(M)` and then onto the
/// matching edges of `L(T)`, with every inequality recomputed exactly.
pub fn certify_even(g: &Graph, use_max_deg: bool) -> Result<MatchingCertificate> {
    let params = check_input(g)?;
    let gi = params.girth.expect("checked");
    if gi % 2 == 1 {
        return Err(Error::Domain(format!(
            "girth {gi} is odd: use the odd certifier"
        )));
    }
    let n = g.order();
    let start = if use_max_deg {
        let hub = g.max_degree_vertex().expect("nonempty");
        let w = *g.neighbors(hub).first().expect("δ >= 3");
        (hub.min(w), hub.max(w))
    } else {
        g.edges()[0]
    };
    let matching = build_spaced_matching(g, gi, start)?;
    let vm = matching.vertices();
    let tree = build_spanning_tree_from_matching(g, &matching)?;
    let c = weight_function(&tree.assignment);
    let lg = line_graph(&tree.tree);
    let m_ids: Vec<usize> = matching
        .edges
        .iter()
        .map(|&(u, v)| lg.vertex_of(u, v).expect("matching edges are tree edges"))
        .collect();
    let cbar_m: Vec<Rational> = matching
        .edges
        .iter()
        .map(|&(u, v)| *c.get(u) + *c.get(v))
        .collect();
    let cbar = WeightFunction::sparse(lg.graph.order(), m_ids.iter().copied().zip(cbar_m.clone()))?;
    let cbar_m = WeightFunction::new(cbar_m)?;
    let power = power_subgraph(&lg.graph, gi, &m_ids)?;

    let mut checks = matching_checks(g, gi, &matching, &tree);
    checks.extend(common_checks(g, &vm, &tree, &c, &power));
    checks.push(Check::new(
        "edge weights sum to n",
        *cbar.total() == rc(n),
        || format!("sum = {}", cbar.total()),
    ));
    if !power_connected(&checks) {
        return Err(Error::InvariantViolated("L(T)^g[M] is disconnected".into()));
    }

    let gg = rc(gi);
    let nn = rc(n);
    let mut ch = Chain::default();
    let avec_g = ch.value("avecG", avec(g)?);
    let avec_t = ch.value("avecT", avec(&tree.tree)?);
    let avec_ct = ch.value("avecC_T", weighted_avec(&tree.tree, &c)?);
    let avec_cl = ch.value("avecCbar_L", weighted_avec(&lg.graph, &cbar)?);
    let avec_cp = ch.value("avecCbar_power", weighted_avec(&power, &cbar_m)?);
    ch.le("avec(G) <= avec(T)", avec_g, avec_t);
    ch.le("avec(T) <= avec_c(T) + (g-2)", avec_t, avec_ct + gg - 2);
    ch.le("avec_c(T) <= avec_cbar(L) + 1", avec_ct, avec_cl + 1);
    ch.le(
        "avec_cbar(L) <= g avec_cbar(L^g[M]) + (g-1)",
        avec_cl,
        gg * avec_cp + gg - 1,
    );

    let (final_bound, bound_id, normalized) = if !use_max_deg {
        let l: Rational = moore_order_even(params.min_degree, gi)?;
        ch.value("L", l);
        let min_edge = cbar_m.weights().iter().min().copied().expect("nonempty");
        ch.le("min cbar(e) >= L", l, min_edge);
        let cp = cbar_m.scaled(&l)?;
        let nprime = ch.value("Nprime", *cp.total());
        ch.same("N' = n/L", nprime, nn / l);
        let avec_cpp = ch.value("avecCbarPrime_power", weighted_avec(&power, &cp)?);
        ch.same("avec_cbar'(L^g[M]) = avec_cbar(L^g[M])", avec_cpp, avec_cp);
        let pb = path_steps(&mut ch, "avec_cbar'(L^g[M])", avec_cpp, nprime)?;
        let final_bound = ch.value("finalBound", gg * pb + r(2) * (gg - 1));
        let thm = bound_thm_girth::<Rational>(&params)
            .value
            .ok_or_else(|| Error::NotApplicable("girth bound".into()))?;
        ch.same("g(3ceil(N')/4 - 1/2) + 2(g-1) = bound", final_bound, thm);
        (final_bound, BoundId::ThmGirthEven, cp)
    } else {
        let (l1, l2): (Rational, Rational) =
            maxdeg_constants_even(params.min_degree, params.max_degree, gi)?;
        ch.value("L1", l1);
        ch.value("L2", l2);
        let d = l2 - l1;
        let two_l1 = r(2) * l1;
        let y = ch.value("Y", (nn - l2) / two_l1);
        let w = cbar_m.weights();
        ch.le("cbar(e1) >= L1 + L2", l1 + l2, w[0]);
        if let Some(&m) = w[1..].iter().min() {
            ch.le("min cbar(e) >= 2 L1 off the hub edge", two_l1, m);
        }
        ch.le(
            "|M| <= (n-L2+L1)/(2 L1)",
            rc(matching.edges.len()),
            (nn - d) / two_l1,
        );
        let cp = WeightFunction::new(
            w.iter()
                .enumerate()
                .map(|(i, &x)| if i == 0 { (x - d) / two_l1 } else { x / two_l1 })
                .collect(),
        )
        .map_err(|_| Error::InvariantViolated("hub edge weight below L2 - L1".into()))?;
        let nprime = ch.value("Nprime", *cp.total());
        ch.same("N' = (n-L2)/(2 L1) + 1/2", nprime, y + Rational::new(1, 2));
        let avec_cpp = ch.value("avecCbarPrime_power", weighted_avec(&power, &cp)?);
        let hub_ecc = ch.value("hubEcc", eccentricity_in(&power, 0));
        ch.same(
            "avec_cbar(H) = ((n-L2+L1)/n) avec_cbar'(H) + ((L2-L1)/n) e_H(e1)",
            avec_cp,
            (nn - d) / nn * avec_cpp + d / nn * hub_ecc,
        );
        let hub_cap = y - Rational::new(1, 2);
        ch.le("e_H(e1) <= (n-L2)/(2 L1) - 1/2", hub_ecc, hub_cap);
        let pb = path_steps(&mut ch, "avec_cbar'(H)", avec_cpp, nprime)?;
        let mix = ch.value("mixture", (nn - d) / nn * pb + d / nn * hub_cap);
        ch.le("avec_cbar(H) <= mixture", avec_cp, mix);
        let power_bound = ch.value(
            "powerBound",
            r(3) / 4 * y * (r(1) + d / (r(3) * nn)) + Rational::new(5, 8),
        );
        ch.le(
            "mixture <= (3/4)Y(1 + (L2-L1)/(3n)) + 5/8",
            mix,
            power_bound,
        );
        let final_bound = ch.value("finalBound", gg * power_bound + r(2) * (gg - 1));
        let (thm, _) =
            thm_girth_maxdeg_value::<Rational>(n, params.min_degree, params.max_degree, gi)?;
        ch.same("g powerBound + 2(g-1) = bound", final_bound, thm);
        (final_bound, BoundId::ThmGirthMaxDegEven, cp)
    };
    ch.le("avec(G) <= bound", avec_g, final_bound);
    Ok(MatchingCertificate {
        max_degree_variant: use_max_deg,
        girth: gi,
        matching: matching.edges.clone(),
        matched_vertices: vm,
        connectors: matching.connectors,
        tree,
        vertex_weights: c,
        line_graph: lg,
        edge_weights: cbar,
        normalized_weights: normalized,
        power,
        chain: ch,
        checks,
        bound_id,
    })
}

fn matching_checks(g: &Graph, gi: usize, m: &SpacedMatching, tree: &SpanningTree) -> Vec<Check> {
    let vm = m.vertices();
    let mut sorted = vm.clone();
    sorted.sort_unstable();
    sorted.dedup();
    let is_matching = sorted.len() == vm.len();
    let mut spacing = None;
    'outer: for (i, &(a, b)) in m.edges.iter().enumerate() {
        let (da, db) = (bfs_distances(g, a), bfs_distances(g, b));
        for &(x, y) in &m.edges[i + 1..] {
            let d = da[x].min(da[y]).min(db[x]).min(db[y]);
            if d < gi - 1 {
                spacing = Some(((a, b), (x, y), d));
                break 'outer;
            }
        }
    }
    let uncovered = g
        .edges()
        .iter()
        .find(|&&(u, v)| tree.dist[u].min(tree.dist[v]) > gi - 2);
    vec![
        Check::new("M is a matching", is_matching, || {
            "edges share a vertex".into()
        }),
        Check::new("matching spacing >= g-1", spacing.is_none(), || {
            let (e, f, d) = spacing.expect("failed");
            format!("d({e:?},{f:?}) = {d}")
        }),
        Check::new("edge coverage <= g-2", uncovered.is_none(), || {
            format!("edge {:?}", uncovered.expect("failed"))
        }),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::extremal::{chain_graph, ChainSpec};
    use crate::generators::{named, NamedGraph};

    fn assert_holds(cert: &MatchingCertificate) {
        for s in &cert.chain.steps {
            assert!(s.holds, "{s}");
        }
        for c in &cert.checks {
            assert!(c.holds, "{c:?}");
        }
    }

    #[test]
    fn k33() {
        let cert =
            certify_even(&named(NamedGraph::CompleteBipartite(3, 3)).unwrap(), false).unwrap();
        assert_holds(&cert);
        assert_eq!(cert.matching.len(), 1);
        assert_eq!(cert.chain.get("avecG"), Some(Rational::from(2)));
        assert_eq!(cert.chain.get("finalBound"), Some(Rational::from(7)));
    }

    #[test]
    fn heawood() {
        let cert = certify_even(&named(NamedGraph::Heawood).unwrap(), false).unwrap();
        assert_holds(&cert);
        assert_eq!(cert.chain.get("avecG"), Some(Rational::from(3)));
        assert_eq!(cert.chain.get("finalBound"), Some(Rational::new(23, 2)));
    }

    #[test]
    fn heawood_chain() {
        let g = chain_graph(&ChainSpec::canonical(3, 6, 2).unwrap()).unwrap();
        let cert = certify_even(&g, false).unwrap();
        assert_holds(&cert);
        assert_eq!(cert.chain.get("finalBound"), Some(Rational::from(16)));
        assert!(cert.chain.get("avecG").unwrap() >= Rational::new(9, 2));
    }

    #[test]
    fn max_degree_variant_on_regular_graph() {
        let cert = certify_even(&named(NamedGraph::Heawood).unwrap(), true).unwrap();
        assert_eq!(cert.bound_id, BoundId::ThmGirthMaxDegEven);
        assert_eq!(cert.chain.get("L1"), cert.chain.get("L2"));
    }
}
