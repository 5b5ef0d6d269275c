use std::fmt;

use crate::error::{Error, Result};

/// A word in a free group: letters `(generator, exponent)` with nonzero
/// exponents. Adjacent letters on the same generator are allowed until the
/// word is reduced.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Word {
    letters: Vec<(usize, i64)>,
}

impl Word {
    pub fn empty() -> Self {
        Self::default()
    }

    /// Rejects zero exponents.
    pub fn from_letters(letters: Vec<(usize, i64)>) -> Result<Self> {
        if let Some(&(g, _)) = letters.iter().find(|(_, e)| *e == 0) {
            return Err(Error::ZeroExponent(g));
        }
        Ok(Self { letters })
    }

    /// `x_gen^exp`, the empty word when `exp == 0`.
    pub fn power_of(generator: usize, exp: i64) -> Self {
        let mut w = Self::empty();
        w.push(generator, exp);
        w
    }

    /// Append `x_gen^exp`; a zero exponent appends nothing.
    pub fn push(&mut self, generator: usize, exp: i64) {
        if exp != 0 {
            self.letters.push((generator, exp));
        }
    }

    pub fn letters(&self) -> &[(usize, i64)] {
        &self.letters
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn max_generator(&self) -> Option<usize> {
        self.letters.iter().map(|&(g, _)| g).max()
    }

    pub fn inverse(&self) -> Self {
        Self { letters: self.letters.iter().rev().map(|&(g, e)| (g, -e)).collect() }
    }

    pub fn concat(&self, other: &Word) -> Self {
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Self { letters }
    }

    /// `w^k`; a negative `k` expands as `(w^-1)^(-k)`.
    pub fn pow(&self, k: i64) -> Self {
        let base = if k < 0 { self.inverse() } else { self.clone() };
        let mut letters = Vec::with_capacity(base.letters.len() * k.unsigned_abs() as usize);
        for _ in 0..k.unsigned_abs() {
            letters.extend_from_slice(&base.letters);
        }
        Self { letters }
    }

    /// Free reduction: merge equal neighbours and drop cancelled letters.
    pub fn free_reduce(&self) -> Self {
        let mut out: Vec<(usize, i64)> = Vec::with_capacity(self.letters.len());
        for &(g, e) in &self.letters {
            match out.last_mut() {
                Some((lg, le)) if *lg == g => {
                    *le += e;
                    if *le == 0 {
                        out.pop();
                    }
                }
                _ => out.push((g, e)),
            }
        }
        Self { letters: out }
    }

    pub fn exponent_sum(&self, generator: usize) -> i64 {
        self.letters.iter().filter(|(g, _)| *g == generator).map(|(_, e)| e).sum()
    }

    /// Reduced word as a sequence of unit letters `(generator, ±1)`.
    fn unit_letters(&self) -> Vec<(usize, i64)> {
        self.free_reduce()
            .letters
            .iter()
            .flat_map(|&(g, e)| std::iter::repeat_n((g, e.signum()), e.unsigned_abs() as usize))
            .collect()
    }

    /// Cyclic reduction in unit-letter form: strip inverse pairs at the ends.
    fn cyclic_unit_letters(&self) -> Vec<(usize, i64)> {
        let units = self.unit_letters();
        let (mut lo, mut hi) = (0, units.len());
        while hi - lo >= 2 && units[lo].0 == units[hi - 1].0 && units[lo].1 == -units[hi - 1].1 {
            lo += 1;
            hi -= 1;
        }
        units[lo..hi].to_vec()
    }

    /// Whether the two words are conjugate in the free group.
    pub fn is_conjugate_to(&self, other: &Word) -> bool {
        let a = self.cyclic_unit_letters();
        let b = other.cyclic_unit_letters();
        if a.len() != b.len() {
            return false;
        }
        if a.is_empty() {
            return true;
        }
        (0..a.len()).any(|r| a[r..].iter().chain(&a[..r]).eq(b.iter()))
    }

    /// Textual form with generators named `{prefix}1, {prefix}2, …`.
    pub fn display_with<'a>(&'a self, prefix: &'a str) -> impl fmt::Display + 'a {
        WordDisplay { word: self, prefix }
    }
}

struct WordDisplay<'a> {
    word: &'a Word,
    prefix: &'a str,
}

impl fmt::Display for WordDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.word.is_empty() {
            return write!(f, "1");
        }
        for (k, &(g, e)) in self.word.letters.iter().enumerate() {
            if k > 0 {
                write!(f, " ")?;
            }
            write!(f, "{}{}", self.prefix, g + 1)?;
            if e != 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.display_with("x"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(letters: &[(usize, i64)]) -> Word {
        Word::from_letters(letters.to_vec()).unwrap()
    }

    #[test]
    fn reduction_examples() {
        assert_eq!(w(&[(0, 1), (0, -1)]).free_reduce(), Word::empty());
        assert_eq!(w(&[(0, 2), (0, 3)]).free_reduce(), w(&[(0, 5)]));
        assert_eq!(Word::from_letters(vec![(0, 2), (1, 0), (0, 3)]), Err(Error::ZeroExponent(1)));
        // z0 (z0^-1 z1)(z0^-1 z2) with z1 = z_{i+1}, z2 = z_{i-1}
        let relator = w(&[(0, 1), (0, -1), (1, 1), (0, -1), (2, 1)]);
        assert_eq!(relator.free_reduce(), w(&[(1, 1), (0, -1), (2, 1)]));
    }

    #[test]
    fn nested_cancellation() {
        let word = w(&[(0, 1), (1, 2), (2, 1), (2, -1), (1, -2), (0, 2)]);
        assert_eq!(word.free_reduce(), w(&[(0, 3)]));
    }

    #[test]
    fn powers() {
        let base = w(&[(0, 1), (1, -2)]);
        assert_eq!(base.pow(0), Word::empty());
        assert_eq!(base.pow(2).letters(), &[(0, 1), (1, -2), (0, 1), (1, -2)]);
        assert_eq!(base.pow(-1), w(&[(1, 2), (0, -1)]));
        assert!(base.concat(&base.inverse()).free_reduce().is_empty());
    }

    #[test]
    fn conjugacy() {
        let a = w(&[(0, 2), (1, -1), (0, 1), (2, -1)]);
        let b = w(&[(0, 1), (0, 2), (1, -1), (0, 1), (2, -1), (0, -1)]);
        assert!(a.is_conjugate_to(&b));
        let rotated = w(&[(0, 1), (2, -1), (0, 2), (1, -1)]);
        assert!(a.is_conjugate_to(&rotated));
        assert!(!a.is_conjugate_to(&a.inverse()));
        assert!(Word::empty().is_conjugate_to(&w(&[(3, 1), (3, -1)])));
    }

    #[test]
    fn display() {
        assert_eq!(w(&[(0, 2), (1, -3), (2, 1)]).to_string(), "x1^2 x2^-3 x3");
        assert_eq!(Word::empty().display_with("z").to_string(), "1");
    }
}
