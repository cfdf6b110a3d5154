use super::chain::{Chain, Check};
use super::packing::build_packing;
use super::tree::{build_spanning_tree_from_packing, weight_function, SpanningTree};
use super::{
    avec, check_input, common_checks, eccentricity_in, path_steps, power_connected, r, rc,
    PackingCertificate,
};
use crate::bounds::{
    bound_thm_girth, maxdeg_constants_odd, moore_order_odd, thm_girth_maxdeg_value, BoundId,
};
use crate::error::{Error, Result};
use crate::graph::{bfs_distances, power_subgraph, weighted_avec, Graph, WeightFunction};
use crate::scalar::Rational;

/// Runs the odd-girth proof on `g`: greedy `(g-1)`-packing, distance
/// preserving spanning tree, weights moved onto the packing, and every
/// inequality of the resulting chain recomputed exactly.
pub fn certify_odd(g: &Graph, use_max_deg: bool) -> Result<PackingCertificate> {
    let params = check_input(g)?;
    let gi = params.girth.expect("checked");
    if gi % 2 == 0 {
        return Err(Error::Domain(format!(
            "girth {gi} is even: use the even certifier"
        )));
    }
    let n = g.order();
    let start = if use_max_deg {
        g.max_degree_vertex().expect("nonempty")
    } else {
        0
    };
    let packing = build_packing(g, gi, start)?;
    let members = packing.members.clone();
    let tree = build_spanning_tree_from_packing(g, &packing)?;
    let c = weight_function(&tree.assignment);
    let power = power_subgraph(&tree.tree, gi, &members)?;
    let c_a = WeightFunction::new(members.iter().map(|&u| *c.get(u)).collect())?;

    let mut checks = packing_checks(g, gi, &members, &tree);
    checks.extend(common_checks(g, &members, &tree, &c, &power));
    if !power_connected(&checks) {
        return Err(Error::InvariantViolated("T^g[A] is disconnected".into()));
    }

    let gg = rc(gi);
    let nn = rc(n);
    let mut ch = Chain::default();
    let avec_g = ch.value("avecG", avec(g)?);
    let avec_t = ch.value("avecT", avec(&tree.tree)?);
    let avec_ct = ch.value("avecC_T", weighted_avec(&tree.tree, &c)?);
    let avec_cp = ch.value("avecC_power", weighted_avec(&power, &c_a)?);
    ch.le("avec(G) <= avec(T)", avec_g, avec_t);
    ch.le("avec(T) <= avec_c(T) + (g-1)", avec_t, avec_ct + gg - 1);
    ch.le(
        "avec_c(T) <= g avec_c(T^g[A]) + (g-1)",
        avec_ct,
        gg * avec_cp + gg - 1,
    );
    let min_cell = c_a.weights().iter().min().copied().expect("nonempty");

    let (final_bound, bound_id, normalized) = if !use_max_deg {
        let k: Rational = moore_order_odd(params.min_degree, gi)?;
        ch.value("K", k);
        ch.le("min c(u) >= K", k, min_cell);
        let cp = c_a.scaled(&k)?;
        let nprime = ch.value("Nprime", *cp.total());
        ch.same("N' = n/K", nprime, nn / k);
        let avec_cpp = ch.value("avecCprime_power", weighted_avec(&power, &cp)?);
        ch.same("avec_c'(T^g[A]) = avec_c(T^g[A])", avec_cpp, avec_cp);
        let pb = path_steps(&mut ch, "avec_c'(T^g[A])", avec_cpp, nprime)?;
        let final_bound = ch.value("finalBound", gg * pb + r(2) * (gg - 1));
        let thm = bound_thm_girth::<Rational>(&params)
            .value
            .ok_or_else(|| Error::NotApplicable("girth bound".into()))?;
        ch.same("g(3ceil(N')/4 - 1/2) + 2(g-1) = bound", final_bound, thm);
        (final_bound, BoundId::ThmGirthOdd, cp)
    } else {
        let (k1, k2): (Rational, Rational) =
            maxdeg_constants_odd(params.min_degree, params.max_degree, gi)?;
        ch.value("K1", k1);
        ch.value("K2", k2);
        let d = k2 - k1;
        let x = ch.value("X", (nn - k2) / k1);
        let hub_w = c_a.weights()[0];
        let min_rest = c_a.weights()[1..].iter().min().copied();
        ch.le("c(a1) >= K2", k2, hub_w);
        if let Some(m) = min_rest {
            ch.le("min c(u) >= K1 off the hub", k1, m);
        }
        ch.le("|A| <= (n-K2)/K1 + 1", rc(members.len()), x + 1);
        let cp_w: Vec<Rational> = c_a
            .weights()
            .iter()
            .enumerate()
            .map(|(i, &w)| if i == 0 { (w - d) / k1 } else { w / k1 })
            .collect();
        let cp = WeightFunction::new(cp_w)
            .map_err(|_| Error::InvariantViolated("hub weight below K2 - K1".into()))?;
        let nprime = ch.value("Nprime", *cp.total());
        ch.same("N = (n-K2)/K1 + 1", nprime, x + 1);
        let avec_cpp = ch.value("avecCprime_power", weighted_avec(&power, &cp)?);
        let hub_ecc = ch.value("hubEcc", eccentricity_in(&power, 0));
        ch.same(
            "avec_c(H) = ((n-K2+K1)/n) avec_c'(H) + ((K2-K1)/n) e_H(a1)",
            avec_cp,
            (nn - d) / nn * avec_cpp + d / nn * hub_ecc,
        );
        ch.le("e_H(a1) <= (n-K2)/K1", hub_ecc, x);
        let pb = path_steps(&mut ch, "avec_c'(H)", avec_cpp, nprime)?;
        let mix = ch.value("mixture", (nn - d) / nn * pb + d / nn * x);
        ch.le("avec_c(H) <= mixture", avec_cp, mix);
        let power_bound = ch.value("powerBound", r(3) / 4 * x * (r(1) + d / (r(3) * nn)) + 1);
        ch.le("mixture <= (3/4)X(1 + (K2-K1)/(3n)) + 1", mix, power_bound);
        let final_bound = ch.value("finalBound", gg * power_bound + r(2) * (gg - 1));
        let (thm, _) =
            thm_girth_maxdeg_value::<Rational>(n, params.min_degree, params.max_degree, gi)?;
        ch.same("g powerBound + 2(g-1) = bound", final_bound, thm);
        (final_bound, BoundId::ThmGirthMaxDegOdd, cp)
    };
    ch.le("avec(G) <= bound", avec_g, final_bound);
    Ok(PackingCertificate {
        max_degree_variant: use_max_deg,
        girth: gi,
        members,
        connectors: packing.connectors,
        tree,
        weights: c,
        normalized_weights: normalized,
        power,
        chain: ch,
        checks,
        bound_id,
    })
}

fn packing_checks(g: &Graph, gi: usize, members: &[usize], tree: &SpanningTree) -> Vec<Check> {
    let mut spacing = None;
    for (i, &a) in members.iter().enumerate() {
        let d = bfs_distances(g, a);
        if let Some(&b) = members[i + 1..].iter().find(|&&b| d[b] < gi) {
            spacing = Some((a, b, d[b]));
            break;
        }
    }
    let far = tree.dist.iter().position(|&d| d > gi - 1);
    vec![
        Check::new("packing spacing >= g", spacing.is_none(), || {
            let (a, b, d) = spacing.expect("failed");
            format!("d({a},{b}) = {d}")
        }),
        Check::new("coverage <= g-1", far.is_none(), || {
            format!(
                "vertex {} at distance {}",
                far.unwrap(),
                tree.dist[far.unwrap()]
            )
        }),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::extremal::{chain_graph, ChainSpec};
    use crate::generators::{named, NamedGraph};

    fn assert_holds(cert: &PackingCertificate) {
        for s in &cert.chain.steps {
            assert!(s.holds, "{s}");
        }
        for c in &cert.checks {
            assert!(c.holds, "{c:?}");
        }
    }

    #[test]
    fn petersen() {
        let cert = certify_odd(&named(NamedGraph::Petersen).unwrap(), false).unwrap();
        assert_holds(&cert);
        assert_eq!(cert.members, vec![0]);
        assert_eq!(cert.chain.get("avecG"), Some(Rational::from(2)));
        assert_eq!(cert.chain.get("finalBound"), Some(Rational::new(37, 4)));
        assert_eq!(*cert.weights.get(0), Rational::from(10));
        assert_eq!(cert.tree.tree.size(), 9);
    }

    #[test]
    fn k4() {
        let cert = certify_odd(&named(NamedGraph::Complete(4)).unwrap(), false).unwrap();
        assert_holds(&cert);
        assert_eq!(cert.chain.get("K"), Some(Rational::from(4)));
        assert_eq!(cert.chain.get("finalBound"), Some(Rational::new(19, 4)));
    }

    #[test]
    fn k4_max_degree_variant() {
        let cert = certify_odd(&named(NamedGraph::Complete(4)).unwrap(), true).unwrap();
        assert_holds(&cert);
        assert_eq!(cert.bound_id, BoundId::ThmGirthMaxDegOdd);
        assert_eq!(cert.chain.get("K1"), Some(Rational::from(4)));
        assert_eq!(cert.chain.get("K2"), Some(Rational::from(4)));
    }

    #[test]
    fn petersen_chains() {
        for k in 2..=4 {
            let g = chain_graph(&ChainSpec::canonical(3, 5, k).unwrap()).unwrap();
            let cert = certify_odd(&g, false).unwrap();
            assert_holds(&cert);
            assert!(k < 3 || cert.members.len() >= 2);
            if k == 4 {
                assert_eq!(cert.chain.get("finalBound"), Some(Rational::new(41, 2)));
                assert!(cert.chain.get("avecG").unwrap() >= Rational::new(21, 2));
            }
        }
    }
}
