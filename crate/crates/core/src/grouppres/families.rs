//! The two presentation families of periodic Takahashi manifolds.
//!
//! Generators are 0-based internally; the usual 1-based subscripts mod `2n`
//! (or mod `n`) map to `(k - 1).rem_euclid(2n)`.

use num_bigint::BigInt;

use super::presentation::Presentation;
use super::word::Word;
use crate::error::{Error, Result};
use crate::exactalg::{IntPoly, Rational};

/// The `2n`-generator presentation of `π_1(M_n(p/q, r/s))` with relators
///
/// ```text
/// x_{2i-1}^q x_{2i}^{-r} x_{2i+1}^{-q},   x_{2i}^s x_{2i+1}^p x_{2i+2}^{-s},   i = 1..n
/// ```
///
/// Subscripts wrap mod `2n`. Zero exponents (from `q = 0`, `r = 0`, …) are
/// omitted and words are left unreduced.
pub fn takahashi_presentation(n: usize, pq: Rational, rs: Rational) -> Result<Presentation> {
    if n == 0 {
        return Err(Error::ZeroModulus);
    }
    let (p, q) = (pq.num(), pq.den());
    let (r, s) = (rs.num(), rs.den());
    let m = 2 * n as i64;
    let x = |k: i64| (k - 1).rem_euclid(m) as usize;

    let mut relators = Vec::with_capacity(2 * n);
    for i in 1..=n as i64 {
        let mut a = Word::empty();
        a.push(x(2 * i - 1), q);
        a.push(x(2 * i), -r);
        a.push(x(2 * i + 1), -q);
        let mut b = Word::empty();
        b.push(x(2 * i), s);
        b.push(x(2 * i + 1), p);
        b.push(x(2 * i + 2), -s);
        relators.push(a);
        relators.push(b);
    }
    Presentation::new(2 * n, relators)
}

/// Neighbour indices `(i, i+1, i-1)` mod `n`, 0-based.
fn neighbours(i: usize, n: usize) -> (usize, usize, usize) {
    (i, (i + 1) % n, (i + n - 1) % n)
}

/// Relator of the cyclic presentation of `π_1(M_n(p/q, 1/s))` at index `i`:
/// `z_i^p (z_i^{-q} z_{i+1}^q)^s (z_i^{-q} z_{i-1}^q)^s`.
pub fn cyclic_relator(n: usize, i: usize, p: i64, q: i64, s: i64) -> Word {
    let (z, next, prev) = neighbours(i, n);
    let mut up = Word::power_of(z, -q);
    up.push(next, q);
    let mut down = Word::power_of(z, -q);
    down.push(prev, q);
    Word::power_of(z, p).concat(&up.pow(s)).concat(&down.pow(s))
}

/// The rewritten relator: for `s > 0`
/// `z_i^{p-q} (z_{i+1}^q z_i^{-q})^s (z_{i-1}^q z_i^{-q})^{s-1} z_{i-1}^q`,
/// and for `s < 0`
/// `z_i^{p+q} (z_{i+1}^{-q} z_i^q)^{-s} (z_{i-1}^{-q} z_i^q)^{-s-1} z_{i-1}^{-q}`.
pub fn rewritten_cyclic_relator(n: usize, i: usize, p: i64, q: i64, s: i64) -> Result<Word> {
    if s == 0 {
        return Err(Error::ZeroTwist);
    }
    // The s < 0 form is the s > 0 form with (q, s) replaced by (-q, -s).
    let (q, s) = if s > 0 { (q, s) } else { (-q, -s) };
    let (z, next, prev) = neighbours(i, n);
    let mut up = Word::power_of(next, q);
    up.push(z, -q);
    let mut down = Word::power_of(prev, q);
    down.push(z, -q);
    let mut w = Word::power_of(z, p - q).concat(&up.pow(s)).concat(&down.pow(s - 1));
    w.push(prev, q);
    Ok(w)
}

/// Cyclic presentation of `π_1(M_n(p/q, 1/s))` on `n` generators.
pub fn cyclic_presentation(n: usize, p: i64, q: i64, s: i64) -> Result<Presentation> {
    if n == 0 {
        return Err(Error::ZeroModulus);
    }
    Presentation::new(n, (0..n).map(|i| cyclic_relator(n, i, p, q, s)).collect())
}

/// The same group presented by the rewritten relators.
pub fn cyclic_presentation_rewritten(n: usize, p: i64, q: i64, s: i64) -> Result<Presentation> {
    if n == 0 {
        return Err(Error::ZeroModulus);
    }
    let relators = (0..n).map(|i| rewritten_cyclic_relator(n, i, p, q, s)).collect::<Result<_>>()?;
    Presentation::new(n, relators)
}

/// How a rewritten relator relates to the original one.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RelatorMatch {
    /// Equal after free reduction.
    Identical,
    /// Equal only up to conjugation, so both define the same normal closure.
    Conjugate,
    Different,
}

pub fn relator_match(n: usize, i: usize, p: i64, q: i64, s: i64) -> Result<RelatorMatch> {
    let original = cyclic_relator(n, i, p, q, s);
    let rewritten = rewritten_cyclic_relator(n, i, p, q, s)?;
    Ok(if original.free_reduce() == rewritten.free_reduce() {
        RelatorMatch::Identical
    } else if original.is_conjugate_to(&rewritten) {
        RelatorMatch::Conjugate
    } else {
        RelatorMatch::Different
    })
}

/// True iff for every index the rewritten relator equals the original
/// relator in the free group, up to conjugation.
///
/// For `s > 0` the two are identical words after free reduction; for
/// `s < 0` the rewritten relator is the original conjugated by `z_i^q`.
pub fn relator_identity_check(n: usize, p: i64, q: i64, s: i64) -> Result<bool> {
    if n == 0 {
        return Err(Error::ZeroModulus);
    }
    for i in 0..n {
        if relator_match(n, i, p, q, s)? == RelatorMatch::Different {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Abelianized exponent pattern of the cyclic relator as a polynomial.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RepresenterPoly {
    /// Reduced modulo `t^n - 1`, then normalized up to `±t^k`.
    pub poly: IntPoly,
    pub modulus: usize,
}

impl RepresenterPoly {
    /// Before reduction modulo `t^n - 1`: `qs t^2 + (p - 2qs) t + qs`,
    /// normalized up to units.
    pub fn unreduced(p: i64, q: i64, s: i64) -> IntPoly {
        let qs = BigInt::from(q) * BigInt::from(s);
        let mid = BigInt::from(p) - BigInt::from(2) * &qs;
        IntPoly::new(vec![qs.clone(), mid, qs]).normalize_up_to_units()
    }
}

/// Exponent sums of the cyclic relator by generator offset: offset 0 gives
/// `p - 2qs`, offsets ±1 give `qs`. Offset -1 is placed at `t^0`.
pub fn representer_polynomial(n: usize, p: i64, q: i64, s: i64) -> Result<RepresenterPoly> {
    if n == 0 {
        return Err(Error::ZeroModulus);
    }
    let poly = RepresenterPoly::unreduced(p, q, s).rem_x_pow_minus_one(n)?.normalize_up_to_units();
    Ok(RepresenterPoly { poly, modulus: n })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::BigIntMatrix;

    fn rat(s: &str) -> Rational {
        s.parse().unwrap()
    }

    #[test]
    fn takahashi_n1_wraps() {
        // x_3 wraps to x_1 when n = 1
        let pres = takahashi_presentation(1, rat("5/2"), rat("3/-4")).unwrap();
        assert_eq!(pres.generator_count(), 2);
        assert_eq!(pres.relators()[0].letters(), &[(0, 2), (1, -3), (0, -2)]);
        assert_eq!(pres.relators()[1].letters(), &[(1, -4), (0, 5), (1, 4)]);
        assert_eq!(pres.abelianize(), BigIntMatrix::from_rows(&[[0, -3], [5, 0]]));
    }

    #[test]
    fn takahashi_drops_zero_exponents() {
        let pres = takahashi_presentation(2, rat("0/1"), rat("0/1")).unwrap();
        assert_eq!(pres.relators().len(), 4);
        assert_eq!(pres.relators()[0].letters(), &[(0, 1), (2, -1)]);
        assert_eq!(pres.relators()[1].letters(), &[(1, 1), (3, -1)]);
        let h1 = pres.h1();
        assert_eq!(h1.free_rank(), 2);
        assert!(h1.torsion().is_empty());
    }

    #[test]
    fn takahashi_infinity_coefficient() {
        let pres = takahashi_presentation(3, Rational::INFINITY, rat("1/2")).unwrap();
        assert!(pres.h1().is_trivial());
    }

    #[test]
    fn cyclic_n1_abelianizes_to_p() {
        let pres = cyclic_presentation(1, 7, 2, -3).unwrap();
        assert_eq!(pres.abelianize(), BigIntMatrix::from_rows(&[[7]]));
    }

    #[test]
    fn rewritten_examples() {
        let w = rewritten_cyclic_relator(3, 0, 1, 1, 1).unwrap().free_reduce();
        assert_eq!(w.letters(), &[(1, 1), (0, -1), (2, 1)]);
        // s = 1: the middle block is empty and the word ends in z_{i-1}^q
        let w = rewritten_cyclic_relator(5, 0, 2, 3, 1).unwrap();
        assert_eq!(w.letters(), &[(0, -1), (1, 3), (0, -3), (4, 3)]);
        // s = -1, q = 1, p = 1: leading block z_i^{p+q}
        let w = rewritten_cyclic_relator(4, 0, 1, 1, -1).unwrap();
        assert_eq!(w.letters(), &[(0, 2), (1, -1), (0, 1), (3, -1)]);
        assert_eq!(rewritten_cyclic_relator(4, 0, 1, 1, 0), Err(Error::ZeroTwist));
    }

    #[test]
    fn identity_examples() {
        assert!(relator_identity_check(3, 1, 1, 1).unwrap());
        assert!(relator_identity_check(5, 2, 3, 2).unwrap());
        assert!(relator_identity_check(4, 1, 1, -2).unwrap());
        assert_eq!(relator_match(5, 0, 2, 3, 2).unwrap(), RelatorMatch::Identical);
        assert_eq!(relator_match(4, 0, 1, 1, -2).unwrap(), RelatorMatch::Conjugate);
    }

    #[test]
    fn representer_examples() {
        assert_eq!(representer_polynomial(5, 1, 1, -1).unwrap().poly, IntPoly::from_i64s(&[1, -3, 1]));
        assert_eq!(representer_polynomial(5, 1, 1, 1).unwrap().poly, IntPoly::from_i64s(&[1, -1, 1]));
        assert_eq!(representer_polynomial(5, 4, 3, 0).unwrap().poly, IntPoly::from_i64s(&[4]));
        // n = 2 folds t^2 onto 1
        assert_eq!(representer_polynomial(2, 1, 1, -1).unwrap().poly, IntPoly::from_i64s(&[2, -3]));
    }

    #[test]
    fn fibonacci_relator_shape() {
        let pres = cyclic_presentation(3, 1, 1, -1).unwrap();
        assert_eq!(pres.relators()[0].letters(), &[(0, 1), (1, -1), (0, 1), (2, -1), (0, 1)]);
    }
}
