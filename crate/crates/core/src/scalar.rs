//! Scalar abstraction shared by the weight, bound and eccentricity code.
//!
//! Everything that produces a number from graph parameters is written against
//! [`Scalar`], so the same evaluator runs on exact rationals (the default used
//! by certificates and reports) and on `f32`/`f64` for quick estimates.

use std::fmt::{Debug, Display};

use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{FromPrimitive, Num, Signed, ToPrimitive};

/// Exact rational used throughout the crate.
pub type Rational = Ratio<i128>;

/// Ordered numeric field with rounding, as needed by the closed-form bounds.
pub trait Scalar: Num + Clone + PartialOrd + FromPrimitive + Debug + Display {
    fn ceil(&self) -> Self;
    fn floor(&self) -> Self;
    fn to_f64(&self) -> f64;

    /// `n` as a scalar. Every count the crate handles fits in `i64`.
    fn from_count(n: usize) -> Self {
        Self::from_usize(n).expect("count representable in scalar")
    }

    fn from_int(n: i64) -> Self {
        Self::from_i64(n).expect("integer representable in scalar")
    }

    fn ratio(num: i64, den: i64) -> Self {
        Self::from_int(num) / Self::from_int(den)
    }
}

macro_rules! float_scalar {
    ($t:ty) => {
        impl Scalar for $t {
            fn ceil(&self) -> Self {
                <$t>::ceil(*self)
            }
            fn floor(&self) -> Self {
                <$t>::floor(*self)
            }
            fn to_f64(&self) -> f64 {
                *self as f64
            }
        }
    };
}

float_scalar!(f32);
float_scalar!(f64);

impl<T> Scalar for Ratio<T>
where
    T: Integer + Clone + Signed + FromPrimitive + ToPrimitive + Debug + Display,
    Ratio<T>: FromPrimitive,
{
    fn ceil(&self) -> Self {
        Ratio::ceil(self)
    }
    fn floor(&self) -> Self {
        Ratio::floor(self)
    }
    fn to_f64(&self) -> f64 {
        let n = self.numer().to_f64().unwrap_or(f64::NAN);
        let d = self.denom().to_f64().unwrap_or(f64::NAN);
        n / d
    }
}

/// Renders a rational as `p/q`, always with an explicit denominator.
pub fn fmt_ratio(r: &Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// Fixed six-decimal rendering used by report columns.
pub fn fmt_decimal(r: &Rational) -> String {
    format!("{:.6}", Scalar::to_f64(r))
}

/// Human form: `16/5 (3.2)`, or just `7` for integers.
pub fn fmt_human(r: &Rational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{} ({})", r, Scalar::to_f64(r))
    }
}

/// Serde adapter writing rationals as `"p/q"` strings.
pub mod serde_ratio {
    use super::{fmt_ratio, Rational};
    use serde::{de::Error, Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(r: &Rational, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&fmt_ratio(r))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Rational, D::Error> {
        let s = String::deserialize(d)?;
        s.parse::<Rational>().map_err(D::Error::custom)
    }
}

/// Same as [`serde_ratio`] for optional values.
pub mod serde_ratio_opt {
    use super::{fmt_ratio, Rational};
    use serde::{de::Error, Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(r: &Option<Rational>, s: S) -> Result<S::Ok, S::Error> {
        match r {
            Some(r) => s.serialize_str(&fmt_ratio(r)),
            None => s.serialize_none(),
        }
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Option<Rational>, D::Error> {
        Option::<String>::deserialize(d)?
            .map(|s| s.parse::<Rational>().map_err(D::Error::custom))
            .transpose()
    }
}

/// Same as [`serde_ratio`] for string-keyed maps.
pub mod serde_ratio_map {
    use std::collections::BTreeMap;

    use super::{fmt_ratio, Rational};
    use serde::{de::Error, ser::SerializeMap, Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(
        m: &BTreeMap<String, Rational>,
        s: S,
    ) -> Result<S::Ok, S::Error> {
        let mut map = s.serialize_map(Some(m.len()))?;
        for (k, v) in m {
            map.serialize_entry(k, &fmt_ratio(v))?;
        }
        map.end()
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(
        d: D,
    ) -> Result<BTreeMap<String, Rational>, D::Error> {
        BTreeMap::<String, String>::deserialize(d)?
            .into_iter()
            .map(|(k, v)| Ok((k, v.parse::<Rational>().map_err(D::Error::custom)?)))
            .collect()
    }
}
