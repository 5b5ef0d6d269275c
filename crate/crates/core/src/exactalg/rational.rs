//! Surgery coefficients: reduced fractions on the extended rational line.

use std::fmt;
use std::str::FromStr;

use num_integer::Integer;

use crate::error::{Error, Result};

/// A reduced fraction `num/den` with `∞ = 1/0`.
///
/// Canonical form: `gcd(num, den) = 1`, `num >= 0`, zero is `0/1` and
/// infinity is `1/0`. The sign therefore lives on the denominator, so
/// `-3` is stored as `3/-1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Rational {
    num: i64,
    den: i64,
}

impl Rational {
    pub fn new(num: i64, den: i64) -> Result<Self> {
        if num == 0 && den == 0 {
            return Err(Error::IndeterminateRational);
        }
        if den == 0 {
            return Ok(Self::INFINITY);
        }
        if num == 0 {
            return Ok(Self { num: 0, den: 1 });
        }
        let g = num.gcd(&den);
        let (mut num, mut den) = (num / g, den / g);
        if num < 0 {
            num = num.checked_neg().ok_or(Error::Overflow("rational sign"))?;
            den = -den;
        }
        Ok(Self { num, den })
    }

    pub const INFINITY: Rational = Rational { num: 1, den: 0 };

    pub fn integer(k: i64) -> Self {
        Self::new(k, 1).expect("k/1 is always defined")
    }

    pub fn num(&self) -> i64 {
        self.num
    }

    pub fn den(&self) -> i64 {
        self.den
    }

    pub fn is_infinite(&self) -> bool {
        self.den == 0
    }

    /// `-(p/q)`; infinity is its own negative.
    pub fn neg(&self) -> Self {
        Self::new(self.num, -self.den).expect("nonzero pair")
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.den {
            0 => write!(f, "inf"),
            1 => write!(f, "{}", self.num),
            d => write!(f, "{}/{}", self.num, d),
        }
    }
}

impl FromStr for Rational {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = || Error::ParseRational(s.to_string());
        if s.eq_ignore_ascii_case("inf") || s == "∞" {
            return Ok(Self::INFINITY);
        }
        match s.split_once('/') {
            Some((n, d)) => {
                let n: i64 = n.trim().parse().map_err(|_| bad())?;
                let d: i64 = d.trim().parse().map_err(|_| bad())?;
                Self::new(n, d)
            }
            None => Ok(Self::integer(s.parse().map_err(|_| bad())?)),
        }
    }
}
