//! Reduced Burau representation of the three-strand braid group.

use std::fmt;
use std::str::FromStr;

use super::fox::AlexanderPoly;
use crate::error::{Error, Result};
use crate::exactalg::{cyclotomic_quotient, IntPoly, LaurentPoly};

/// A word in `σ_1^{±1}, σ_2^{±1}`, letters encoded as `±1`, `±2`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct BraidWord3 {
    letters: Vec<i8>,
}

impl BraidWord3 {
    pub fn new(letters: Vec<i8>) -> Result<Self> {
        if let Some(bad) = letters.iter().find(|l| !matches!(l, 1 | -1 | 2 | -2)) {
            return Err(Error::BadBraidLetter(bad.to_string()));
        }
        Ok(Self { letters })
    }

    pub fn letters(&self) -> &[i8] {
        &self.letters
    }

    pub fn concat(&self, other: &BraidWord3) -> Self {
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Self { letters }
    }

    pub fn pow(&self, k: usize) -> Self {
        Self { letters: self.letters.repeat(k) }
    }

    /// Image in `S_3`: `perm[i]` is where strand `i` ends up.
    pub fn permutation(&self) -> [usize; 3] {
        let mut perm = [0, 1, 2];
        for &l in &self.letters {
            let (a, b) = if l.abs() == 1 { (0, 1) } else { (1, 2) };
            for p in perm.iter_mut() {
                if *p == a {
                    *p = b;
                } else if *p == b {
                    *p = a;
                }
            }
        }
        perm
    }

    /// Cycle lengths of the permutation, descending.
    pub fn cycle_type(&self) -> Vec<usize> {
        let perm = self.permutation();
        let mut seen = [false; 3];
        let mut cycles = Vec::new();
        for start in 0..3 {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                i = perm[i];
                len += 1;
            }
            cycles.push(len);
        }
        cycles.sort_unstable_by(|a, b| b.cmp(a));
        cycles
    }

    /// The closure is a knot exactly when the permutation is a 3-cycle.
    pub fn closure_is_knot(&self) -> bool {
        self.cycle_type() == [3]
    }
}

impl FromStr for BraidWord3 {
    type Err = Error;

    /// Whitespace-separated signed generator indices: `"1 1 1 -2"`.
    fn from_str(s: &str) -> Result<Self> {
        let letters = s
            .split_whitespace()
            .map(|tok| match tok.parse::<i8>() {
                Ok(l @ (1 | -1 | 2 | -2)) => Ok(l),
                _ => Err(Error::BadBraidLetter(tok.to_string())),
            })
            .collect::<Result<_>>()?;
        Ok(Self { letters })
    }
}

impl fmt::Display for BraidWord3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.letters.iter().map(i8::to_string).collect();
        write!(f, "{}", parts.join(" "))
    }
}

/// 2×2 matrix over `Z[t, t^-1]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LaurentMatrix2(pub [[LaurentPoly; 2]; 2]);

impl LaurentMatrix2 {
    pub fn identity() -> Self {
        Self([[LaurentPoly::one(), LaurentPoly::zero()], [LaurentPoly::zero(), LaurentPoly::one()]])
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        let (a, b) = (&self.0, &rhs.0);
        let entry = |i: usize, j: usize| &(&a[i][0] * &b[0][j]) + &(&a[i][1] * &b[1][j]);
        Self([[entry(0, 0), entry(0, 1)], [entry(1, 0), entry(1, 1)]])
    }

    pub fn determinant(&self) -> LaurentPoly {
        let m = &self.0;
        &(&m[0][0] * &m[1][1]) - &(&m[0][1] * &m[1][0])
    }

    pub fn minus_identity(&self) -> Self {
        let mut m = self.clone();
        for i in 0..2 {
            m.0[i][i] = &m.0[i][i] - &LaurentPoly::one();
        }
        m
    }
}

fn generator_image(letter: i8) -> LaurentMatrix2 {
    let t = |c: i64, k: i64| LaurentPoly::monomial(c, k);
    let zero = LaurentPoly::zero;
    match letter {
        // σ1 = [[-t, 1], [0, 1]]
        1 => LaurentMatrix2([[t(-1, 1), t(1, 0)], [zero(), t(1, 0)]]),
        -1 => LaurentMatrix2([[t(-1, -1), t(1, -1)], [zero(), t(1, 0)]]),
        // σ2 = [[1, 0], [t, -t]]
        2 => LaurentMatrix2([[t(1, 0), zero()], [t(1, 1), t(-1, 1)]]),
        -2 => LaurentMatrix2([[t(1, 0), zero()], [t(1, 0), t(-1, -1)]]),
        _ => unreachable!("BraidWord3 letters are validated"),
    }
}

/// Product of the generator images, left to right.
pub fn reduced_burau3(b: &BraidWord3) -> LaurentMatrix2 {
    b.letters.iter().fold(LaurentMatrix2::identity(), |acc, &l| acc.mul(&generator_image(l)))
}

/// `det(ρ(b) - I) / (1 + t + t^2)`, normalized; the Alexander polynomial
/// of the closure when that closure is a knot.
pub fn alexander_from_braid3(b: &BraidWord3) -> Result<AlexanderPoly> {
    if !b.closure_is_knot() {
        return Err(Error::BraidNotKnot { permutation: b.permutation(), cycle_type: b.cycle_type() });
    }
    let det = reduced_burau3(b).minus_identity().determinant().normalize_up_to_units();
    let nu3 = cyclotomic_quotient(3)?;
    let quotient = det
        .exact_div(&nu3)?
        .expect("det(ρ(b) - I) is divisible by 1 + t + t^2 for knot closures");
    Ok(AlexanderPoly::new(&quotient))
}

/// Polynomial `det(ρ(b) - I)` before division, normalized up to units.
pub fn burau_characteristic(b: &BraidWord3) -> IntPoly {
    reduced_burau3(b).minus_identity().determinant().normalize_up_to_units()
}
