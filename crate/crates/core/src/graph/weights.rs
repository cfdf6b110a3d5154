use super::metrics::{eccentricity, is_connected};
use super::Graph;
use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Nonnegative vertex weights with their cached total.
#[derive(Debug, Clone, PartialEq)]
pub struct WeightFunction<S> {
    weights: Vec<S>,
    total: S,
}

impl<S: Scalar> WeightFunction<S> {
    pub fn new(weights: Vec<S>) -> Result<Self> {
        let mut total = S::zero();
        for (v, w) in weights.iter().enumerate() {
            if *w < S::zero() {
                return Err(Error::Domain(format!("negative weight {w} at vertex {v}")));
            }
            total = total + w.clone();
        }
        Ok(WeightFunction { weights, total })
    }

    pub fn uniform(n: usize) -> Self {
        WeightFunction {
            weights: vec![S::one(); n],
            total: S::from_count(n),
        }
    }

    /// Weights given only on some vertices; the rest are zero.
    pub fn sparse<I>(n: usize, entries: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, S)>,
    {
        let mut weights = vec![S::zero(); n];
        for (v, w) in entries {
            if v >= n {
                return Err(Error::Domain(format!("weight on missing vertex {v}")));
            }
            weights[v] = w;
        }
        Self::new(weights)
    }

    pub fn get(&self, v: usize) -> &S {
        &self.weights[v]
    }

    pub fn weights(&self) -> &[S] {
        &self.weights
    }

    pub fn total(&self) -> &S {
        &self.total
    }

    pub fn len(&self) -> usize {
        self.weights.len()
    }

    pub fn is_empty(&self) -> bool {
        self.weights.is_empty()
    }

    /// Every weight divided by `factor`. NaN factors are rejected.
    #[allow(clippy::neg_cmp_op_on_partial_ord)]
    pub fn scaled(&self, factor: &S) -> Result<Self> {
        if !(*factor > S::zero()) {
            return Err(Error::Domain("scale factor must be positive".into()));
        }
        Self::new(
            self.weights
                .iter()
                .map(|w| w.clone() / factor.clone())
                .collect(),
        )
    }
}

/// `avec_c(G) = sum c(x) e(x) / N`. Eccentricities are only evaluated on the
/// support of `c`.
#[allow(clippy::neg_cmp_op_on_partial_ord)]
pub fn weighted_avec<S: Scalar>(g: &Graph, c: &WeightFunction<S>) -> Result<S> {
    if c.len() != g.order() {
        return Err(Error::Domain(format!(
            "weight function has {} entries for {} vertices",
            c.len(),
            g.order()
        )));
    }
    if !(*c.total() > S::zero()) {
        return Err(Error::Domain("total weight must be positive".into()));
    }
    if !is_connected(g) {
        return Err(Error::Disconnected);
    }
    let mut ex = S::zero();
    for (v, w) in c.weights().iter().enumerate() {
        if !w.is_zero() {
            ex = ex + w.clone() * S::from_count(eccentricity(g, v)?);
        }
    }
    Ok(ex / c.total().clone())
}

/// `avec(P_n) = floor(3n^2/4 - n/2) / n`.
pub fn path_avec_closed_form<S: Scalar>(n: usize) -> Result<S> {
    if n == 0 {
        return Err(Error::Domain("path order must be positive".into()));
    }
    let n = n as i64;
    // floor((3n^2 - 2n) / 4); the numerator is nonnegative.
    let total = (3 * n * n - 2 * n) / 4;
    Ok(S::ratio(total, n))
}
