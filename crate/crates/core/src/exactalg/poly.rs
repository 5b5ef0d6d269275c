//! Integer polynomials and integer Laurent polynomials in one variable `t`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Integer polynomial, coefficients lowest degree first.
///
/// The zero polynomial is the empty coefficient vector; otherwise the
/// leading coefficient is nonzero.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::new(vec![c.into()])
    }

    /// `c * t^k`
    pub fn monomial(c: impl Into<BigInt>, k: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); k + 1];
        coeffs[k] = c.into();
        Self::new(coeffs)
    }

    /// `t^n - 1`
    pub fn x_pow_minus_one(n: usize) -> Self {
        &Self::monomial(1, n) - &Self::one()
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Coefficient of `t^k`, zero past the end.
    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Result<usize> {
        self.coeffs.len().checked_sub(1).ok_or(Error::ZeroPolynomial)
    }

    pub fn leading(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * x + c)
    }

    pub fn pow(&self, k: u32) -> Self {
        (0..k).fold(Self::one(), |acc, _| &acc * self)
    }

    /// Division by a divisor with leading coefficient `±1`, which keeps
    /// the quotient integral.
    pub fn div_rem_monic(&self, divisor: &IntPoly) -> Result<(IntPoly, IntPoly)> {
        let d = divisor.degree()?;
        let lead = divisor.leading().unwrap();
        if !lead.abs().is_one() {
            return Err(Error::NonMonicDivisor);
        }
        if self.coeffs.len() <= d {
            return Ok((IntPoly::zero(), self.clone()));
        }
        let mut rem = self.coeffs.clone();
        let mut quot = vec![BigInt::zero(); rem.len() - d];
        for k in (d..rem.len()).rev() {
            let c = &rem[k] * lead;
            if c.is_zero() {
                continue;
            }
            for (j, dc) in divisor.coeffs.iter().enumerate() {
                rem[k - d + j] -= &c * dc;
            }
            quot[k - d] = c;
        }
        rem.truncate(d);
        Ok((IntPoly::new(quot), IntPoly::new(rem)))
    }

    /// Exact quotient by a `±1`-leading divisor, `None` if it does not divide.
    pub fn exact_div(&self, divisor: &IntPoly) -> Result<Option<IntPoly>> {
        let (q, r) = self.div_rem_monic(divisor)?;
        Ok(r.is_zero().then_some(q))
    }

    /// Reduction modulo `t^n - 1` by folding exponents.
    pub fn rem_x_pow_minus_one(&self, n: usize) -> Result<IntPoly> {
        if n == 0 {
            return Err(Error::ZeroModulus);
        }
        let mut out = vec![BigInt::zero(); n];
        for (k, c) in self.coeffs.iter().enumerate() {
            out[k % n] += c;
        }
        Ok(IntPoly::new(out))
    }

    /// Multiply by `±t^k` so the constant term is positive.
    ///
    /// Alexander-type polynomials are only defined up to these units; the
    /// zero polynomial is returned unchanged. Idempotent.
    pub fn normalize_up_to_units(&self) -> IntPoly {
        let shift = self.coeffs.iter().take_while(|c| c.is_zero()).count();
        let mut coeffs: Vec<BigInt> = self.coeffs[shift..].to_vec();
        if coeffs.first().is_some_and(Signed::is_negative) {
            coeffs.iter_mut().for_each(|c| *c = -&*c);
        }
        IntPoly::new(coeffs)
    }

    pub fn is_palindromic_up_to_sign(&self) -> bool {
        let rev: Vec<BigInt> = self.coeffs.iter().rev().cloned().collect();
        let neg: Vec<BigInt> = rev.iter().map(|c| -c).collect();
        rev == self.coeffs || neg == self.coeffs
    }
}

impl fmt::Display for IntPoly {
    /// Descending powers, e.g. `t^2 - 3t + 1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if c.is_negative() { '-' } else { '+' })?;
            }
            first = false;
            if !mag.is_one() || k == 0 {
                write!(f, "{mag}")?;
            }
            match k {
                0 => {}
                1 => write!(f, "t")?,
                _ => write!(f, "t^{k}")?,
            }
        }
        Ok(())
    }
}

impl Add for &IntPoly {
    type Output = IntPoly;
    fn add(self, rhs: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        IntPoly::new((0..n).map(|k| self.coeff(k) + rhs.coeff(k)).collect())
    }
}

impl Sub for &IntPoly {
    type Output = IntPoly;
    fn sub(self, rhs: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        IntPoly::new((0..n).map(|k| self.coeff(k) - rhs.coeff(k)).collect())
    }
}

impl Mul for &IntPoly {
    type Output = IntPoly;
    fn mul(self, rhs: &IntPoly) -> IntPoly {
        if self.is_zero() || rhs.is_zero() {
            return IntPoly::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPoly::new(out)
    }
}

impl Neg for &IntPoly {
    type Output = IntPoly;
    fn neg(self) -> IntPoly {
        IntPoly::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

/// `t^low * body`, with the body's constant term nonzero (or the body zero).
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentPoly {
    low: i64,
    body: IntPoly,
}

impl LaurentPoly {
    pub fn new(low: i64, body: IntPoly) -> Self {
        if body.is_zero() {
            return Self::default();
        }
        let shift = body.coeffs.iter().take_while(|c| c.is_zero()).count();
        Self {
            low: low + shift as i64,
            body: IntPoly::new(body.coeffs[shift..].to_vec()),
        }
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(1, 0)
    }

    /// `c * t^k` for any integer `k`.
    pub fn monomial(c: impl Into<BigInt>, k: i64) -> Self {
        Self::new(k, IntPoly::constant(c))
    }

    pub fn is_zero(&self) -> bool {
        self.body.is_zero()
    }

    /// Lowest exponent with a nonzero coefficient (0 for the zero polynomial).
    pub fn low(&self) -> i64 {
        self.low
    }

    pub fn body(&self) -> &IntPoly {
        &self.body
    }

    /// Coefficient of `t^k`.
    pub fn coeff(&self, k: i64) -> BigInt {
        if k < self.low {
            BigInt::zero()
        } else {
            self.body.coeff((k - self.low) as usize)
        }
    }

    pub fn normalize_up_to_units(&self) -> IntPoly {
        self.body.normalize_up_to_units()
    }

    fn aligned(&self, rhs: &Self, op: impl Fn(BigInt, BigInt) -> BigInt) -> Self {
        if self.is_zero() && rhs.is_zero() {
            return Self::zero();
        }
        let low = match (self.is_zero(), rhs.is_zero()) {
            (true, _) => rhs.low,
            (_, true) => self.low,
            _ => self.low.min(rhs.low),
        };
        let high = (self.low + self.body.coeffs.len() as i64).max(rhs.low + rhs.body.coeffs.len() as i64);
        let coeffs = (low..high).map(|k| op(self.coeff(k), rhs.coeff(k))).collect();
        Self::new(low, IntPoly::new(coeffs))
    }
}

impl From<IntPoly> for LaurentPoly {
    fn from(p: IntPoly) -> Self {
        LaurentPoly::new(0, p)
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.low == 0 || self.is_zero() {
            write!(f, "{}", self.body)
        } else {
            write!(f, "t^{} * ({})", self.low, self.body)
        }
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        self.aligned(rhs, |a, b| a + b)
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        self.aligned(rhs, |a, b| a - b)
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        LaurentPoly::new(self.low + rhs.low, &self.body * &rhs.body)
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly::new(self.low, -&self.body)
    }
}

/// `(t^n - 1)/(t - 1) = 1 + t + ... + t^(n-1)`.
pub fn cyclotomic_quotient(n: usize) -> Result<IntPoly> {
    if n == 0 {
        return Err(Error::ZeroModulus);
    }
    Ok(IntPoly::new(vec![BigInt::one(); n]))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> IntPoly {
        IntPoly::from_i64s(c)
    }

    #[test]
    fn zero_is_empty() {
        assert!(p(&[0, 0]).is_zero());
        assert_eq!(p(&[]).degree(), Err(Error::ZeroPolynomial));
        assert_eq!(p(&[1, 2, 0]).degree(), Ok(1));
    }

    #[test]
    fn normalize_examples() {
        assert_eq!(p(&[-1, 3, -1]).normalize_up_to_units(), p(&[1, -3, 1]));
        assert_eq!(p(&[0, 0, 0, 1, -1]).normalize_up_to_units(), p(&[1, -1]));
        let f = p(&[1, -3, 1]);
        assert_eq!(f.normalize_up_to_units(), f);
        assert_eq!(IntPoly::zero().normalize_up_to_units(), IntPoly::zero());
    }

    #[test]
    fn cyclotomic_quotients() {
        assert_eq!(cyclotomic_quotient(1).unwrap(), p(&[1]));
        assert_eq!(cyclotomic_quotient(2).unwrap(), p(&[1, 1]));
        assert_eq!(cyclotomic_quotient(3).unwrap(), p(&[1, 1, 1]));
        assert_eq!(cyclotomic_quotient(0), Err(Error::ZeroModulus));
    }

    #[test]
    fn division() {
        let f = &p(&[-1, 0, 0, 1]) * &p(&[2, 5]);
        let (q, r) = f.div_rem_monic(&p(&[-1, 1])).unwrap();
        assert!(r.is_zero());
        assert_eq!(q, &p(&[1, 1, 1]) * &p(&[2, 5]));
        let (_, r) = p(&[3, 0, 1]).div_rem_monic(&p(&[1, 1])).unwrap();
        assert_eq!(r, p(&[4]));
        assert_eq!(p(&[1, 2]).div_rem_monic(&p(&[1, 2])), Err(Error::NonMonicDivisor));
        assert_eq!(p(&[1, 1, 1]).rem_x_pow_minus_one(2).unwrap(), p(&[2, 1]));
    }

    #[test]
    fn display() {
        assert_eq!(p(&[1, -3, 1]).to_string(), "t^2 - 3t + 1");
        assert_eq!(p(&[-1, 0, 2]).to_string(), "2t^2 - 1");
        assert_eq!(p(&[0, -1]).to_string(), "-t");
        assert_eq!(IntPoly::zero().to_string(), "0");
    }

    #[test]
    fn laurent_arithmetic() {
        let t_inv = LaurentPoly::monomial(1, -1);
        let t = LaurentPoly::monomial(1, 1);
        assert_eq!(&t_inv * &t, LaurentPoly::one());
        let s = &t_inv + &t;
        assert_eq!(s.low(), -1);
        assert_eq!(s.body(), &p(&[1, 0, 1]));
        assert!((&s - &s).is_zero());
        assert_eq!(LaurentPoly::new(2, p(&[0, 3])).low(), 3);
    }
}
