use super::chain::{chain_graph, ChainSpec};
use crate::bounds::{bound_thm_girth, lower_bound_chain, GraphParams};
use crate::error::{Error, Result};
use crate::graph::eccentricity_profile;
use crate::scalar::{fmt_decimal, fmt_ratio, Rational};

/// One Moore-chain measurement.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SharpnessRow {
    pub k: usize,
    pub n: usize,
    pub avec: Rational,
    pub lower: Rational,
    pub upper: Rational,
    /// `upper - avec`.
    pub gap: Rational,
    pub diameter: usize,
    pub radius: usize,
    /// `gap <= allowed_gap`; only asserted for chains (`k >= 2`).
    pub gap_within: Option<bool>,
}

impl SharpnessRow {
    pub const CSV_HEADER: &'static str =
        "k,n,avec,avec_exact,lower,lower_exact,upper,upper_exact,gap,gap_exact";

    pub fn to_csv(&self) -> String {
        let pair = |r: &Rational| format!("{},{}", fmt_decimal(r), fmt_ratio(r));
        format!(
            "{},{},{},{},{},{}",
            self.k,
            self.n,
            pair(&self.avec),
            pair(&self.lower),
            pair(&self.upper),
            pair(&self.gap)
        )
    }
}

/// Largest distance between the chain's `avec` and the upper bound:
/// `5(g-1)/2` for odd girth, one less for even girth.
pub fn allowed_gap(g: usize) -> Rational {
    let base = Rational::new(5 * (g as i128 - 1), 2);
    if g % 2 == 1 {
        base
    } else {
        base - 1
    }
}

/// Measures `avec` of each chain `G_{n,δ,k}` and places it between the
/// chain lower bound and the girth upper bound.
pub fn sharpness_report(delta: usize, g: usize, ks: &[usize]) -> Result<Vec<SharpnessRow>> {
    ks.iter()
        .map(|&k| {
            let spec = ChainSpec::canonical(delta, g, k)?;
            let graph = chain_graph(&spec)?;
            let prof = eccentricity_profile(&graph)?;
            let params = GraphParams::regular(graph.order(), delta, g);
            let lower = lower_bound_chain::<Rational>(&params, k)?;
            let upper = bound_thm_girth::<Rational>(&params)
                .value
                .ok_or_else(|| Error::NotApplicable(format!("girth bound for δ={delta}")))?;
            let gap = upper - prof.avec;
            Ok(SharpnessRow {
                k,
                n: graph.order(),
                avec: prof.avec,
                lower,
                upper,
                gap,
                diameter: prof.diameter,
                radius: prof.radius,
                gap_within: (k >= 2).then(|| gap <= allowed_gap(g)),
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn petersen_rows() {
        let rows = sharpness_report(3, 5, &[1, 2]).unwrap();
        assert_eq!(rows[0].avec, Rational::from(2));
        assert_eq!(rows[0].upper, Rational::new(37, 4));
        assert_eq!(rows[0].gap_within, None);
        let r = &rows[1];
        assert_eq!(
            (r.n, r.lower, r.upper),
            (20, Rational::from(3), Rational::from(13))
        );
        assert!(r.lower <= r.avec && r.avec <= r.upper);
        assert_eq!(r.gap_within, Some(true));
    }

    #[test]
    fn heawood_row() {
        let r = &sharpness_report(3, 6, &[2]).unwrap()[0];
        assert_eq!(
            (r.n, r.lower, r.upper),
            (28, Rational::new(9, 2), Rational::from(16))
        );
        assert!(r.lower <= r.avec && r.avec <= r.upper);
    }

    #[test]
    fn csv_row_shape() {
        let r = &sharpness_report(3, 5, &[1]).unwrap()[0];
        assert_eq!(
            r.to_csv(),
            "1,10,2.000000,2/1,-0.750000,-3/4,9.250000,37/4,7.250000,29/4"
        );
    }

    #[test]
    fn allowed_gaps() {
        assert_eq!(allowed_gap(5), Rational::from(10));
        assert_eq!(allowed_gap(6), Rational::new(23, 2));
    }
}
