use std::fmt;

use num_bigint::BigInt;

use super::word::Word;
use crate::error::{Error, Result};
use crate::exactalg::{AbelianGroup, BigIntMatrix};

/// Finite group presentation `<x_1, …, x_g | r_1, …, r_m>`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Presentation {
    generator_count: usize,
    relators: Vec<Word>,
}

impl Presentation {
    pub fn new(generator_count: usize, relators: Vec<Word>) -> Result<Self> {
        for r in &relators {
            if let Some(g) = r.max_generator().filter(|&g| g >= generator_count) {
                return Err(Error::GeneratorOutOfRange { index: g, count: generator_count });
            }
        }
        Ok(Self { generator_count, relators })
    }

    pub fn generator_count(&self) -> usize {
        self.generator_count
    }

    pub fn relators(&self) -> &[Word] {
        &self.relators
    }

    /// Relation matrix: one row per relator, one column per generator,
    /// entries the exponent sums.
    pub fn abelianize(&self) -> BigIntMatrix {
        let mut m = BigIntMatrix::zeros(self.relators.len(), self.generator_count);
        for (i, r) in self.relators.iter().enumerate() {
            for &(g, e) in r.letters() {
                m[(i, g)] += BigInt::from(e);
            }
        }
        m
    }

    /// First homology of the presented group (its abelianization).
    pub fn h1(&self) -> AbelianGroup {
        AbelianGroup::cokernel(&self.abelianize())
    }

    pub fn display_with<'a>(&'a self, prefix: &'a str) -> impl fmt::Display + 'a {
        PresentationDisplay { p: self, prefix }
    }
}

pub fn h1_from_presentation(p: &Presentation) -> AbelianGroup {
    p.h1()
}

struct PresentationDisplay<'a> {
    p: &'a Presentation,
    prefix: &'a str,
}

impl fmt::Display for PresentationDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let gens: Vec<String> = (1..=self.p.generator_count).map(|i| format!("{}{i}", self.prefix)).collect();
        writeln!(f, "generators: {}", gens.join(", "))?;
        for (i, r) in self.p.relators.iter().enumerate() {
            writeln!(f, "r{}: {}", i + 1, r.display_with(self.prefix))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_presentation_is_free() {
        let p = Presentation::new(3, vec![]).unwrap();
        assert_eq!(p.abelianize().rows(), 0);
        assert_eq!(p.abelianize().cols(), 3);
        assert_eq!(p.h1(), AbelianGroup::free(3));
    }

    #[test]
    fn cyclic_group() {
        let p = Presentation::new(1, vec![Word::power_of(0, 3)]).unwrap();
        assert_eq!(p.abelianize(), BigIntMatrix::from_rows(&[[3]]));
        assert_eq!(p.h1().order(), Some(BigInt::from(3)));
    }

    #[test]
    fn generator_range_checked() {
        let err = Presentation::new(2, vec![Word::power_of(2, 1)]).unwrap_err();
        assert_eq!(err, Error::GeneratorOutOfRange { index: 2, count: 2 });
    }
}
