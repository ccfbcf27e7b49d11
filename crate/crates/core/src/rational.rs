//! Exact rationals confined to the unit interval.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::Error;

/// An exact rational number in `[0, 1]`, kept in lowest terms.
///
/// Serialized as a `"p/q"` string; the denominator is always written, so
/// one is `"1/1"`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct UnitRational(BigRational);

impl UnitRational {
    pub fn new(value: BigRational) -> Result<Self, Error> {
        if value.is_negative() || value > BigRational::one() {
            return Err(Error::OutOfUnitInterval(value.to_string()));
        }
        Ok(UnitRational(value))
    }

    /// `numer / denom`. Panics when the quotient leaves `[0, 1]` or the
    /// denominator is zero; meant for literals.
    pub fn frac(numer: u64, denom: u64) -> Self {
        assert!(denom != 0, "zero denominator");
        assert!(numer <= denom, "{numer}/{denom} is not in [0,1]");
        UnitRational(BigRational::new(BigInt::from(numer), BigInt::from(denom)))
    }

    pub(crate) fn from_rational_unchecked(value: BigRational) -> Self {
        debug_assert!(!value.is_negative() && value <= BigRational::one());
        UnitRational(value)
    }

    pub fn zero() -> Self {
        UnitRational(BigRational::zero())
    }

    pub fn one() -> Self {
        UnitRational(BigRational::one())
    }

    pub fn half() -> Self {
        UnitRational::frac(1, 2)
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_one()
    }

    pub fn as_rational(&self) -> &BigRational {
        &self.0
    }

    pub fn into_rational(self) -> BigRational {
        self.0
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn meet(&self, other: &Self) -> Self {
        if self <= other {
            self.clone()
        } else {
            other.clone()
        }
    }

    pub fn join(&self, other: &Self) -> Self {
        if self >= other {
            self.clone()
        } else {
            other.clone()
        }
    }

    /// Midpoint of two values; stays in `[0, 1]`.
    pub fn midpoint(&self, other: &Self) -> Self {
        let two = BigRational::from_integer(BigInt::from(2));
        UnitRational((&self.0 + &other.0) / two)
    }

    /// Lossy conversion for display and benchmarks only.
    pub fn to_f64(&self) -> f64 {
        use num_traits::ToPrimitive;
        self.0.to_f64().unwrap_or(f64::NAN)
    }
}

impl fmt::Display for UnitRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.0.numer(), self.0.denom())
    }
}

impl fmt::Debug for UnitRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for UnitRational {
    type Err = Error;

    /// Accepts `"p/q"` or a bare integer `"p"`. Decimals are rejected.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        let parse_int = |t: &str| {
            t.trim()
                .parse::<BigInt>()
                .map_err(|_| Error::Parse(format!("not an exact rational: {s:?}")))
        };
        let value = match s.split_once('/') {
            Some((n, d)) => {
                let (n, d) = (parse_int(n)?, parse_int(d)?);
                if d.is_zero() {
                    return Err(Error::Parse(format!("zero denominator in {s:?}")));
                }
                BigRational::new(n, d)
            }
            None => BigRational::from_integer(parse_int(s)?),
        };
        UnitRational::new(value)
    }
}

impl Serialize for UnitRational {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for UnitRational {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Shorthand for [`UnitRational::frac`].
pub fn q(numer: u64, denom: u64) -> UnitRational {
    UnitRational::frac(numer, denom)
}
