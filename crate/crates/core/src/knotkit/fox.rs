use std::fmt;

use num_bigint::BigInt;
use num_traits::One;

use super::twobridge::{two_bridge_presentation, TwoBridge};
use crate::error::Result;
use crate::exactalg::{IntPoly, LaurentPoly};
use crate::grouppres::Word;

/// Alexander polynomial of a knot, normalized up to `±t^k`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct AlexanderPoly(IntPoly);

impl AlexanderPoly {
    pub fn new(p: &IntPoly) -> Self {
        Self(p.normalize_up_to_units())
    }

    pub fn poly(&self) -> &IntPoly {
        &self.0
    }

    pub fn unknot() -> Self {
        Self(IntPoly::one())
    }

    /// `Δ(1)`, which is `±1` for every knot.
    pub fn at_one(&self) -> BigInt {
        self.0.eval(&BigInt::one())
    }
}

impl fmt::Display for AlexanderPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Fox derivative `∂w/∂x_gen` pushed through the map sending every
/// generator to `t`.
///
/// Uses `∂(uv) = ∂u + ū ∂v` letter by letter, where `ū` is `t` raised to
/// the exponent sum of the prefix.
pub fn fox_derivative_abelianized(w: &Word, generator: usize) -> LaurentPoly {
    let mut acc = LaurentPoly::zero();
    let mut prefix = 0i64;
    for &(g, e) in w.letters() {
        if g == generator {
            let term = if e > 0 {
                (0..e).fold(LaurentPoly::zero(), |s, k| &s + &LaurentPoly::monomial(1, prefix + k))
            } else {
                (1..=-e).fold(LaurentPoly::zero(), |s, k| &s - &LaurentPoly::monomial(1, prefix - k))
            };
            acc = &acc + &term;
        }
        prefix += e;
    }
    acc
}

/// Alexander polynomial of a two-bridge knot from the Fox derivative of its
/// one-relator presentation.
pub fn alexander_two_bridge(k: TwoBridge) -> Result<AlexanderPoly> {
    let pres = two_bridge_presentation(k)?;
    match pres.relators().first() {
        None => Ok(AlexanderPoly::unknot()),
        Some(r) => Ok(AlexanderPoly(fox_derivative_abelianized(r, 0).normalize_up_to_units())),
    }
}
