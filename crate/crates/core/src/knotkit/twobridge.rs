use std::fmt;

use num_integer::Integer;

use crate::error::{Error, Result};
use crate::exactalg::Rational;
use crate::grouppres::{Presentation, Word};

/// Schubert normal form `b(alpha, beta)` of a two-bridge knot or link.
///
/// Normalized: `gcd(alpha, beta) = 1` and `0 < beta < alpha` for
/// `alpha >= 2`; `b(1, 0)` is the unknot and `b(0, 1)` the two-component
/// unlink. Odd `alpha` is a knot, even `alpha` a link.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TwoBridge {
    alpha: i64,
    beta: i64,
}

impl TwoBridge {
    pub const UNKNOT: TwoBridge = TwoBridge { alpha: 1, beta: 0 };

    pub fn alpha(&self) -> i64 {
        self.alpha
    }

    pub fn beta(&self) -> i64 {
        self.beta
    }

    pub fn is_knot(&self) -> bool {
        self.alpha % 2 == 1
    }

    pub fn mirror(&self) -> TwoBridge {
        normalize_two_bridge(self.alpha, -self.beta).expect("normalized input stays coprime")
    }

    /// The tangle fraction `alpha/beta` as a rational.
    pub fn fraction(&self) -> Rational {
        Rational::new(self.alpha, self.beta).expect("alpha and beta never both vanish")
    }
}

impl fmt::Display for TwoBridge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "b({},{})", self.alpha, self.beta)
    }
}

/// `b(|num|, den mod |num|)`, with the unknot and unlink collapsed to
/// `b(1,0)` and `b(0,1)`.
///
/// The sign of `num` is discarded; callers holding a fraction with
/// negative numerator should move the sign to the denominator first, as
/// [`Rational`] does.
pub fn normalize_two_bridge(num: i64, den: i64) -> Result<TwoBridge> {
    if num.gcd(&den) != 1 {
        return Err(Error::NotCoprime(num, den));
    }
    let alpha = num.checked_abs().ok_or(Error::Overflow("two-bridge alpha"))?;
    Ok(match alpha {
        0 => TwoBridge { alpha: 0, beta: 1 },
        1 => TwoBridge::UNKNOT,
        _ => TwoBridge { alpha, beta: den.rem_euclid(alpha) },
    })
}

pub fn two_bridge_from_fraction(r: Rational) -> Result<TwoBridge> {
    normalize_two_bridge(r.num(), r.den())
}

/// Schubert classification: equal `alpha` and `beta' ≡ beta^{±1} (mod alpha)`.
/// With `allow_mirror`, `beta' ≡ -beta^{±1}` also counts.
pub fn two_bridge_equivalent(k1: TwoBridge, k2: TwoBridge, allow_mirror: bool) -> bool {
    if k1.alpha != k2.alpha {
        return false;
    }
    let a = k1.alpha;
    if a <= 2 {
        return true;
    }
    let (b1, b2) = (k1.beta as i128, k2.beta as i128);
    let a = a as i128;
    let same = |x: i128| x.rem_euclid(a) == b2.rem_euclid(a);
    let product = |x: i128| (x * b2).rem_euclid(a) == 1;
    if same(b1) || product(b1) {
        return true;
    }
    allow_mirror && (same(-b1) || product(-b1))
}

/// A Conway normal form `[a_1, …, a_m]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ConwayForm(pub Vec<i64>);

impl fmt::Display for ConwayForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<String> = self.0.iter().map(i64::to_string).collect();
        write!(f, "[{}]", terms.join(","))
    }
}

/// Continued fraction `a_m + 1/(a_{m-1} + 1/(… + 1/a_1))`.
///
/// Evaluated projectively, so intermediate infinities are fine; only the
/// empty form is undefined.
pub fn conway_to_fraction(c: &ConwayForm) -> Result<Rational> {
    let (first, rest) = c.0.split_first().ok_or(Error::EmptyConwayForm)?;
    let (mut num, mut den) = (*first, 1i64);
    for &a in rest {
        let next = a
            .checked_mul(num)
            .and_then(|x| x.checked_add(den))
            .ok_or(Error::Overflow("Conway form evaluation"))?;
        (num, den) = (next, num);
    }
    Rational::new(num, den)
}

/// Signs `ε_i = (-1)^{⌊iβ/α⌋}` for `i = 1..α-1`, where `β` is taken as
/// the odd one of `beta`, `beta - alpha`.
///
/// With `β` odd the sequence is palindromic; an even `β` does not give a
/// knot group.
pub fn epsilon_sequence(k: TwoBridge) -> Vec<i64> {
    let (a, b) = (k.alpha as i128, k.beta as i128);
    let b = if b % 2 == 0 { b - a } else { b };
    (1..a).map(|i| if (i * b).div_euclid(a) % 2 == 0 { 1 } else { -1 }).collect()
}

/// `⟨a, b | w a w⁻¹ b⁻¹⟩` with `w = a^{ε_1} b^{ε_2} a^{ε_3} … b^{ε_{α-1}}`.
///
/// The unknot gets the one-generator presentation with no relators.
pub fn two_bridge_presentation(k: TwoBridge) -> Result<Presentation> {
    if !k.is_knot() {
        return Err(Error::NotAKnotTwoBridge(k.alpha, k.beta));
    }
    if k.alpha == 1 {
        return Presentation::new(1, vec![]);
    }
    let mut w = Word::empty();
    for (i, e) in epsilon_sequence(k).into_iter().enumerate() {
        w.push(i % 2, e);
    }
    let relator = w.concat(&Word::power_of(0, 1)).concat(&w.inverse()).concat(&Word::power_of(1, -1));
    Presentation::new(2, vec![relator])
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tb(a: i64, b: i64) -> TwoBridge {
        normalize_two_bridge(a, b).unwrap()
    }

    #[test]
    fn normalization() {
        assert_eq!(tb(-5, -2), TwoBridge { alpha: 5, beta: 3 });
        assert_eq!(tb(3, 5), TwoBridge { alpha: 3, beta: 2 });
        assert_eq!(tb(1, 7), TwoBridge::UNKNOT);
        assert_eq!(tb(0, -1), TwoBridge { alpha: 0, beta: 1 });
        assert_eq!(normalize_two_bridge(6, 4), Err(Error::NotCoprime(6, 4)));
        assert_eq!(normalize_two_bridge(0, 0), Err(Error::NotCoprime(0, 0)));
    }

    #[test]
    fn conway_evaluation() {
        let r = conway_to_fraction(&ConwayForm(vec![-2, -2])).unwrap();
        assert_eq!(r, Rational::new(-5, 2).unwrap());
        assert_eq!(two_bridge_from_fraction(r).unwrap(), tb(5, 3));
        assert_eq!(conway_to_fraction(&ConwayForm(vec![3])).unwrap(), Rational::integer(3));
        assert_eq!(conway_to_fraction(&ConwayForm(vec![2, 2])).unwrap(), Rational::new(5, 2).unwrap());
        assert_eq!(conway_to_fraction(&ConwayForm(vec![])), Err(Error::EmptyConwayForm));
        // intermediate values may pass through 0 and infinity
        assert_eq!(conway_to_fraction(&ConwayForm(vec![3, 0, 2])).unwrap(), Rational::integer(5));
        assert_eq!(conway_to_fraction(&ConwayForm(vec![0, 3])).unwrap(), Rational::INFINITY);
    }

    #[test]
    fn equivalence() {
        assert!(two_bridge_equivalent(tb(5, 3), tb(5, 2), false));
        assert!(!two_bridge_equivalent(tb(7, 2), tb(7, 3), false));
        assert!(two_bridge_equivalent(tb(7, 2), tb(7, 3), true));
        assert!(!two_bridge_equivalent(tb(3, 1), tb(5, 1), true));
        // trefoil and its mirror
        assert!(!two_bridge_equivalent(tb(3, 1), tb(3, 2), false));
        assert!(two_bridge_equivalent(tb(3, 1), tb(3, 2), true));
        assert!(two_bridge_equivalent(TwoBridge::UNKNOT, TwoBridge::UNKNOT, false));
    }

    #[test]
    fn epsilons() {
        assert_eq!(epsilon_sequence(tb(3, 1)), vec![1, 1]);
        // b(3,2) uses beta = -1
        assert_eq!(epsilon_sequence(tb(3, 2)), vec![-1, -1]);
        assert_eq!(epsilon_sequence(tb(5, 3)), vec![1, -1, -1, 1]);
        for alpha in (3..40).step_by(2) {
            for beta in 1..alpha {
                if num_integer::gcd(alpha, beta) == 1 {
                    let e = epsilon_sequence(tb(alpha, beta));
                    assert!(e.iter().eq(e.iter().rev()), "b({alpha},{beta})");
                }
            }
        }
    }

    #[test]
    fn presentations() {
        let unknot = two_bridge_presentation(TwoBridge::UNKNOT).unwrap();
        assert_eq!(unknot.generator_count(), 1);
        assert!(unknot.relators().is_empty());
        let trefoil = two_bridge_presentation(tb(3, 1)).unwrap();
        // a b a (a b)^-1 b^-1, i.e. aba = bab
        assert_eq!(trefoil.relators()[0].free_reduce().letters(), &[(0, 1), (1, 1), (0, 1), (1, -1), (0, -1), (1, -1)]);
        // abelianization identifies a and b
        assert_eq!(trefoil.h1().free_rank(), 1);
        assert!(trefoil.h1().torsion().is_empty());
        assert_eq!(two_bridge_presentation(tb(4, 1)), Err(Error::NotAKnotTwoBridge(4, 1)));
    }
}
