//! Closed-form upper bounds on the average eccentricity, their constants, and
//! the lower bounds attained by Moore chains.
//!
//! All evaluators are generic over [`Scalar`]; certificates and reports use
//! the exact [`Rational`] instantiation, and ceilings are always taken on the
//! scalar itself so that `ceil(n / K)` is exact whenever the scalar is.

mod legacy;

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{eccentricity_profile, girth, is_connected, Graph};
use crate::scalar::{serde_ratio_map, serde_ratio_opt, Rational, Scalar};

pub use legacy::bound_legacy;

/// Order, extreme degrees and girth of a graph. `girth == None` means acyclic.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GraphParams {
    pub n: usize,
    pub min_degree: usize,
    pub max_degree: usize,
    pub girth: Option<usize>,
}

impl GraphParams {
    pub fn new(n: usize, min_degree: usize, max_degree: usize, girth: usize) -> Self {
        GraphParams {
            n,
            min_degree,
            max_degree,
            girth: Some(girth),
        }
    }

    /// Regular-degree shorthand (`max_degree == min_degree`).
    pub fn regular(n: usize, delta: usize, girth: usize) -> Self {
        Self::new(n, delta, delta, girth)
    }

    pub fn measure(g: &Graph) -> Self {
        GraphParams {
            n: g.order(),
            min_degree: g.min_degree(),
            max_degree: g.max_degree(),
            girth: girth(g),
        }
    }

    /// Girth as a lower bound on cycle length; forests satisfy every bound.
    fn girth_at_least(&self, k: usize) -> bool {
        self.girth.is_none_or(|g| g >= k)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum BoundId {
    Eq1,
    Eq2,
    Eq3,
    Eq4,
    Eq5,
    Eq6,
    Eq7,
    Eq8,
    ThmGirthOdd,
    ThmGirthEven,
    ThmGirthMaxDegOdd,
    ThmGirthMaxDegEven,
    LowerChainOdd,
    LowerChainEven,
}

impl BoundId {
    pub const LEGACY: [BoundId; 8] = [
        BoundId::Eq1,
        BoundId::Eq2,
        BoundId::Eq3,
        BoundId::Eq4,
        BoundId::Eq5,
        BoundId::Eq6,
        BoundId::Eq7,
        BoundId::Eq8,
    ];

    pub fn name(self) -> &'static str {
        match self {
            BoundId::Eq1 => "Eq1",
            BoundId::Eq2 => "Eq2",
            BoundId::Eq3 => "Eq3",
            BoundId::Eq4 => "Eq4",
            BoundId::Eq5 => "Eq5",
            BoundId::Eq6 => "Eq6",
            BoundId::Eq7 => "Eq7",
            BoundId::Eq8 => "Eq8",
            BoundId::ThmGirthOdd => "ThmGirthOdd",
            BoundId::ThmGirthEven => "ThmGirthEven",
            BoundId::ThmGirthMaxDegOdd => "ThmGirthMaxDegOdd",
            BoundId::ThmGirthMaxDegEven => "ThmGirthMaxDegEven",
            BoundId::LowerChainOdd => "LowerChainOdd",
            BoundId::LowerChainEven => "LowerChainEven",
        }
    }

    pub fn is_theorem(self) -> bool {
        matches!(
            self,
            BoundId::ThmGirthOdd
                | BoundId::ThmGirthEven
                | BoundId::ThmGirthMaxDegOdd
                | BoundId::ThmGirthMaxDegEven
        )
    }
}

impl fmt::Display for BoundId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for BoundId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        const ALL: [BoundId; 14] = [
            BoundId::Eq1,
            BoundId::Eq2,
            BoundId::Eq3,
            BoundId::Eq4,
            BoundId::Eq5,
            BoundId::Eq6,
            BoundId::Eq7,
            BoundId::Eq8,
            BoundId::ThmGirthOdd,
            BoundId::ThmGirthEven,
            BoundId::ThmGirthMaxDegOdd,
            BoundId::ThmGirthMaxDegEven,
            BoundId::LowerChainOdd,
            BoundId::LowerChainEven,
        ];
        ALL.into_iter()
            .find(|b| b.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::Domain(format!("unknown bound id {s:?}")))
    }
}

/// An evaluated bound. `value` is present iff `applicable`.
#[derive(Debug, Clone, PartialEq)]
pub struct BoundResult<S> {
    pub id: BoundId,
    pub value: Option<S>,
    pub constants: BTreeMap<String, S>,
    pub applicable: bool,
    pub reason: Option<String>,
    /// `avec <= value`, filled in by [`evaluate_all`].
    pub satisfied: Option<bool>,
}

impl<S> BoundResult<S> {
    fn ok(id: BoundId, value: S, constants: BTreeMap<String, S>) -> Self {
        BoundResult {
            id,
            value: Some(value),
            constants,
            applicable: true,
            reason: None,
            satisfied: None,
        }
    }

    fn not_applicable(id: BoundId, reason: impl Into<String>) -> Self {
        BoundResult {
            id,
            value: None,
            constants: BTreeMap::new(),
            applicable: false,
            reason: Some(reason.into()),
            satisfied: None,
        }
    }
}

/// JSON shape of an exact bound.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BoundJson {
    pub bound: BoundId,
    #[serde(with = "serde_ratio_opt")]
    pub value: Option<Rational>,
    #[serde(with = "serde_ratio_map")]
    pub constants: BTreeMap<String, Rational>,
    pub applicable: bool,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub reason: Option<String>,
    pub satisfied: Option<bool>,
}

impl From<&BoundResult<Rational>> for BoundJson {
    fn from(b: &BoundResult<Rational>) -> Self {
        BoundJson {
            bound: b.id,
            value: b.value,
            constants: b.constants.clone(),
            applicable: b.applicable,
            reason: b.reason.clone(),
            satisfied: b.satisfied,
        }
    }
}

pub(crate) fn int_pow(base: usize, exp: usize) -> Result<i64> {
    (base as i64)
        .checked_pow(exp as u32)
        .ok_or_else(|| Error::Domain(format!("{base}^{exp} overflows")))
}

fn check_delta(delta: usize) -> Result<()> {
    match delta {
        2 => Err(Error::Domain("formula singular at δ=2".into())),
        d if d < 2 => Err(Error::Domain(format!("δ={d} below 3"))),
        _ => Ok(()),
    }
}

/// `(δ-1)^e - 1` over `δ-2`, i.e. `1 + (δ-1) + … + (δ-1)^(e-1)`.
fn geometric<S: Scalar>(delta: usize, e: usize) -> Result<S> {
    Ok(S::ratio(int_pow(delta - 1, e)? - 1, delta as i64 - 2))
}

/// Moore order for odd girth: `K = 1 + δ/(δ-2) [(δ-1)^((g-1)/2) - 1]`.
pub fn moore_order_odd<S: Scalar>(delta: usize, g: usize) -> Result<S> {
    check_delta(delta)?;
    if g.is_multiple_of(2) || g < 3 {
        return Err(Error::Domain(format!("K needs odd g >= 3, got {g}")));
    }
    Ok(S::one() + S::from_count(delta) * geometric::<S>(delta, (g - 1) / 2)?)
}

/// Moore order for even girth: `L = 2/(δ-2) [(δ-1)^(g/2) - 1]`.
pub fn moore_order_even<S: Scalar>(delta: usize, g: usize) -> Result<S> {
    check_delta(delta)?;
    if g % 2 == 1 || g < 4 {
        return Err(Error::Domain(format!("L needs even g >= 4, got {g}")));
    }
    Ok(S::from_int(2) * geometric::<S>(delta, g / 2)?)
}

/// `(K1, K2)` of the maximum-degree refinement, odd girth.
pub fn maxdeg_constants_odd<S: Scalar>(
    delta: usize,
    max_degree: usize,
    g: usize,
) -> Result<(S, S)> {
    let k1 = moore_order_odd::<S>(delta, g)?;
    let k2 = S::one() + S::from_count(max_degree) * geometric::<S>(delta, (g - 1) / 2)?;
    Ok((k1, k2))
}

/// `(L1, L2)` of the maximum-degree refinement, even girth:
/// `L1 = ((δ-1)^(g/2) - 1)/(δ-2)`,
/// `L2 = Δ + (Δ-1)/(δ-2) [(δ-1)^((g-2)/2) - (δ-1)]`.
pub fn maxdeg_constants_even<S: Scalar>(
    delta: usize,
    max_degree: usize,
    g: usize,
) -> Result<(S, S)> {
    check_delta(delta)?;
    if g % 2 == 1 || g < 4 {
        return Err(Error::Domain(format!("L1/L2 need even g >= 4, got {g}")));
    }
    let l1 = geometric::<S>(delta, g / 2)?;
    let inner = int_pow(delta - 1, (g - 2) / 2)? - (delta as i64 - 1);
    let l2 = S::from_count(max_degree)
        + S::from_count(max_degree - 1) * S::ratio(inner, delta as i64 - 2);
    Ok((l1, l2))
}

/// `(3g/4) ceil(n/M) + 3g/2 - 2` for a Moore-type order `M`.
fn girth_formula<S: Scalar>(n: usize, g: usize, order: &S) -> S {
    let g = S::from_count(g);
    let ceil = (S::from_count(n) / order.clone()).ceil();
    S::ratio(3, 4) * g.clone() * ceil + S::ratio(3, 2) * g - S::from_int(2)
}

/// Upper bound in terms of order, minimum degree and girth.
pub fn bound_thm_girth<S: Scalar>(p: &GraphParams) -> BoundResult<S> {
    let Some(g) = p.girth else {
        return BoundResult::not_applicable(BoundId::ThmGirthOdd, "graph is acyclic");
    };
    let (id, name) = if g % 2 == 1 {
        (BoundId::ThmGirthOdd, "K")
    } else {
        (BoundId::ThmGirthEven, "L")
    };
    if p.min_degree < 3 {
        return BoundResult::not_applicable(id, "minimum degree δ ≥ 3 required");
    }
    let order = if g % 2 == 1 {
        moore_order_odd::<S>(p.min_degree, g)
    } else {
        moore_order_even::<S>(p.min_degree, g)
    };
    match order {
        Ok(m) => {
            let value = girth_formula(p.n, g, &m);
            let mut constants = BTreeMap::from([(name.to_string(), m)]);
            if g == 6 {
                if let Ok((mid, right)) = girth_six_forms::<S>(p.n, p.min_degree) {
                    constants.insert("girthSixMiddle".into(), mid);
                    constants.insert("girthSixRight".into(), right);
                }
            }
            BoundResult::ok(id, value, constants)
        }
        Err(e) => BoundResult::not_applicable(id, e.to_string()),
    }
}

/// Raw value of the maximum-degree refinement, without the `n > K2`
/// (resp. `n > L2`) applicability test. Returns the value and constants.
pub fn thm_girth_maxdeg_value<S: Scalar>(
    n: usize,
    delta: usize,
    max_degree: usize,
    g: usize,
) -> Result<(S, BTreeMap<String, S>)> {
    if max_degree < delta {
        return Err(Error::Domain(format!("Δ={max_degree} < δ={delta}")));
    }
    let nn = S::from_count(n);
    let gg = S::from_count(g);
    let three_quarter_g = S::ratio(3, 4) * gg.clone();
    if g % 2 == 1 {
        let (k1, k2) = maxdeg_constants_odd::<S>(delta, max_degree, g)?;
        let x = (nn.clone() - k2.clone()) / k1.clone();
        let corr = S::one() + (k2.clone() - k1.clone()) / (S::from_int(3) * nn);
        let value = three_quarter_g * x * corr + S::from_int(3) * gg - S::from_int(2);
        Ok((
            value,
            BTreeMap::from([("K1".into(), k1), ("K2".into(), k2)]),
        ))
    } else {
        let (l1, l2) = maxdeg_constants_even::<S>(delta, max_degree, g)?;
        let y = (nn.clone() - l2.clone()) / (S::from_int(2) * l1.clone());
        let corr = S::one() + (l2.clone() - l1.clone()) / (S::from_int(3) * nn);
        let value = three_quarter_g * y * corr + S::ratio(21, 8) * gg - S::from_int(2);
        Ok((
            value,
            BTreeMap::from([("L1".into(), l1), ("L2".into(), l2)]),
        ))
    }
}

/// Upper bound in terms of order, girth, minimum and maximum degree.
pub fn bound_thm_girth_maxdeg<S: Scalar>(p: &GraphParams) -> BoundResult<S> {
    let Some(g) = p.girth else {
        return BoundResult::not_applicable(BoundId::ThmGirthMaxDegOdd, "graph is acyclic");
    };
    let (id, hub) = if g % 2 == 1 {
        (BoundId::ThmGirthMaxDegOdd, "K2")
    } else {
        (BoundId::ThmGirthMaxDegEven, "L2")
    };
    if p.min_degree < 3 {
        return BoundResult::not_applicable(id, "minimum degree δ ≥ 3 required");
    }
    match thm_girth_maxdeg_value::<S>(p.n, p.min_degree, p.max_degree, g) {
        Ok((value, constants)) => {
            if S::from_count(p.n) > constants[hub] {
                BoundResult::ok(id, value, constants)
            } else {
                BoundResult::not_applicable(
                    id,
                    format!("n={} not above {hub}={}", p.n, constants[hub]),
                )
            }
        }
        Err(e) => BoundResult::not_applicable(id, e.to_string()),
    }
}

/// Lower bound on `avec` of the Moore chain with `k` copies:
/// `3gn/(4K) - g + 1/2` (odd) or `3gn/(4L) - g + 3/2` (even).
pub fn lower_bound_chain<S: Scalar>(p: &GraphParams, k: usize) -> Result<S> {
    let g = p
        .girth
        .ok_or_else(|| Error::Domain("chain lower bound needs a girth".into()))?;
    let order = crate::extremal::moore_order(p.min_degree, g)
        .ok_or_else(|| Error::Domain(format!("no Moore order for δ={}, g={g}", p.min_degree)))?;
    if k == 0 || p.n != k * order {
        return Err(Error::Domain(format!(
            "n={} is not {k} copies of the Moore order {order}",
            p.n
        )));
    }
    let gg = S::from_count(g);
    let main =
        S::from_int(3) * gg.clone() * S::from_count(p.n) / (S::from_int(4) * S::from_count(order));
    let tail = if g % 2 == 1 {
        S::ratio(1, 2)
    } else {
        S::ratio(3, 2)
    };
    Ok(main - gg + tail)
}

/// The two girth-6 forms `(9/2) ceil(n(δ-2)/(2[(δ-1)^3-1])) + 7` and
/// `(9/2) ceil(n/(2(δ²-δ+1))) + 7`.
pub fn girth_six_forms<S: Scalar>(n: usize, delta: usize) -> Result<(S, S)> {
    check_delta(delta)?;
    let d = delta as i64;
    let nn = n as i64;
    let middle = S::ratio(nn * (d - 2), 2 * ((d - 1).pow(3) - 1)).ceil();
    let right = S::ratio(nn, 2 * (d * d - d + 1)).ceil();
    let f = |c: S| S::ratio(9, 2) * c + S::from_int(7);
    Ok((f(middle), f(right)))
}

/// Measures `(n, δ, Δ, g)` and `avec` of a connected graph and evaluates
/// every bound on it, recording whether `avec <= value`.
pub fn evaluate_all(g: &Graph) -> Result<Vec<BoundResult<Rational>>> {
    if !is_connected(g) {
        return Err(Error::Disconnected);
    }
    let avec = eccentricity_profile(g)?.avec;
    Ok(evaluate_params(&GraphParams::measure(g), &avec))
}

/// As [`evaluate_all`] for already measured parameters.
pub fn evaluate_params(p: &GraphParams, avec: &Rational) -> Vec<BoundResult<Rational>> {
    let mut out: Vec<BoundResult<Rational>> = BoundId::LEGACY
        .iter()
        .map(|&id| bound_legacy(p, id))
        .collect();
    out.push(bound_thm_girth(p));
    out.push(bound_thm_girth_maxdeg(p));
    for b in &mut out {
        b.satisfied = b.value.as_ref().map(|v| avec <= v);
    }
    out
}
