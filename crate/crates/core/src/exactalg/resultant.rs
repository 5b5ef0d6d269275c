use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::matrix::BigIntMatrix;
use super::poly::IntPoly;
use crate::error::{Error, Result};

/// Sylvester matrix of `f` (degree m) and `g` (degree k): `k` shifted rows
/// of `f`'s coefficients above `m` shifted rows of `g`'s, highest degree
/// first.
pub fn sylvester_matrix(f: &IntPoly, g: &IntPoly) -> Result<BigIntMatrix> {
    let m = f.degree()?;
    let k = g.degree()?;
    let size = m + k;
    let mut s = BigIntMatrix::zeros(size, size);
    for row in 0..k {
        for (d, c) in f.coeffs().iter().enumerate() {
            s[(row, row + m - d)] = c.clone();
        }
    }
    for row in 0..m {
        for (d, c) in g.coeffs().iter().enumerate() {
            s[(k + row, row + k - d)] = c.clone();
        }
    }
    Ok(s)
}

/// `Res(f, g)` as the determinant of the Sylvester matrix.
///
/// Sign convention: `Res(f, g) = lc(f)^deg(g) * prod g(roots of f)`, so
/// `Res(g, f) = (-1)^(deg f * deg g) Res(f, g)`. A zero argument gives 0
/// against a nonconstant partner and 1 against a nonzero constant (the
/// empty Sylvester determinant). Both zero is an error.
pub fn resultant(f: &IntPoly, g: &IntPoly) -> Result<BigInt> {
    match (f.is_zero(), g.is_zero()) {
        (true, true) => Err(Error::BothZero),
        (true, false) | (false, true) => {
            let other = if f.is_zero() { g } else { f };
            Ok(if other.degree()? == 0 { BigInt::one() } else { BigInt::zero() })
        }
        (false, false) => sylvester_matrix(f, g)?.determinant(),
    }
}

/// Matrix of multiplication by `f` on `Z[t]/(t^n - 1)` in the basis
/// `1, t, …, t^(n-1)`; row `i` holds the coefficients of `t^i f mod (t^n - 1)`.
pub fn circulant_of_poly(f: &IntPoly, n: usize) -> Result<BigIntMatrix> {
    if n == 0 {
        return Err(Error::ZeroModulus);
    }
    let folded = f.rem_x_pow_minus_one(n)?;
    let mut m = BigIntMatrix::zeros(n, n);
    for i in 0..n {
        for j in 0..n {
            m[(i, j)] = folded.coeff((j + n - i) % n);
        }
    }
    Ok(m)
}

/// Matrix of multiplication by `f` on `Z[t]/(modulus)` for a `±1`-leading
/// modulus of degree d, basis `1, …, t^(d-1)`, one row per basis image.
pub fn multiplication_matrix(f: &IntPoly, modulus: &IntPoly) -> Result<BigIntMatrix> {
    let d = modulus.degree()?;
    let mut m = BigIntMatrix::zeros(d, d);
    let mut power = f.div_rem_monic(modulus)?.1;
    let t = IntPoly::monomial(1, 1);
    for i in 0..d {
        for j in 0..d {
            m[(i, j)] = power.coeff(j);
        }
        power = (&power * &t).div_rem_monic(modulus)?.1;
    }
    Ok(m)
}
