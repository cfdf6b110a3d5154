use std::collections::BTreeMap;

use super::{BoundId, BoundResult, GraphParams};
use crate::scalar::Scalar;

/// Evaluates one of the earlier bounds `Eq1..Eq8`.
///
/// Girth hypotheses (triangle-free, C4-free, girth ≥ 6, (C4,C5)-free) are
/// decided from the measured girth; all of them also need `δ ≥ 2`, and
/// `Eq6..Eq8` use the measured maximum degree.
pub fn bound_legacy<S: Scalar>(p: &GraphParams, which: BoundId) -> BoundResult<S> {
    let need_girth = match which {
        BoundId::Eq1 | BoundId::Eq6 => 3,
        BoundId::Eq2 | BoundId::Eq7 => 4,
        BoundId::Eq3 | BoundId::Eq8 => 5,
        BoundId::Eq4 | BoundId::Eq5 => 6,
        other => {
            return BoundResult::not_applicable(other, "not a legacy bound");
        }
    };
    if p.min_degree < 2 {
        return BoundResult::not_applicable(which, "minimum degree δ ≥ 2 required");
    }
    if !p.girth_at_least(need_girth) {
        return BoundResult::not_applicable(which, format!("girth ≥ {need_girth} required"));
    }

    let n = S::from_count(p.n);
    let d = p.min_degree as i64;
    let dd = p.max_degree as i64;
    let ceil_div = |den: i64| (n.clone() / S::from_int(den)).ceil();
    let correction = |excess: i64| S::one() + S::from_int(excess) / (S::from_int(3) * n.clone());
    let mut constants = BTreeMap::new();

    let value = match which {
        BoundId::Eq1 => S::from_int(9) * n.clone() / S::from_int(4 * (d + 1)) + S::ratio(15, 4),
        BoundId::Eq2 => S::from_int(3) * ceil_div(2 * d) + S::from_int(5),
        BoundId::Eq3 => S::ratio(15, 4) * ceil_div(eps(d, d)) + S::ratio(11, 2),
        BoundId::Eq4 => S::ratio(9, 2) * ceil_div(2 * d * d - 2 * d + 2) + S::from_int(8),
        BoundId::Eq5 => S::ratio(9, 2) * ceil_div(2 * d * d - 5 * d + 5) + S::from_int(8),
        BoundId::Eq6 => {
            S::from_int(9) * (n.clone() - S::from_int(dd + 1)) / S::from_int(4 * (d + 1))
                * correction(dd - d)
                + S::from_int(7)
        }
        BoundId::Eq7 => {
            S::from_int(3) * (n.clone() - S::from_int(dd)) / S::from_int(2 * d) * correction(dd - d)
                + S::ratio(19, 2)
        }
        BoundId::Eq8 => {
            let e_max = eps(dd, d);
            let e_min = eps(d, d);
            constants.insert("eps_Delta".to_string(), S::from_int(e_max));
            constants.insert("eps_delta".to_string(), S::from_int(e_min));
            S::ratio(15, 4) * (n.clone() - S::from_int(e_max) + S::from_int(e_min))
                / S::from_int(e_min)
                * correction(e_max - e_min)
                + S::ratio(37, 4)
        }
        _ => unreachable!(),
    };
    BoundResult::ok(which, value, constants)
}

/// `x·δ - 2⌊x/2⌋ + 1`; with `x = Δ` this is ε_Δ, with `x = δ` it is ε_δ.
fn eps(x: i64, delta: i64) -> i64 {
    x * delta - 2 * (x / 2) + 1
}
