//! Smith normal form over the integers and finitely generated abelian groups.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::matrix::BigIntMatrix;

/// Diagonal of the Smith normal form.
///
/// `invariant_factors` has `min(rows, cols)` entries; nonzero entries come
/// first and each divides the next.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SnfResult {
    pub invariant_factors: Vec<BigInt>,
    pub rank: usize,
}

/// Smith normal form by gcd-reduction pivoting.
///
/// At each stage the smallest nonzero entry of the trailing block becomes
/// the pivot; Euclidean row and column reductions repeat until the pivot
/// row and column are clear and the pivot divides the whole block.
pub fn smith_normal_form(m: &BigIntMatrix) -> SnfResult {
    let (rows, cols) = (m.rows(), m.cols());
    let mut a = m.to_rows();
    let steps = rows.min(cols);
    let mut factors = Vec::with_capacity(steps);

    for k in 0..steps {
        while let Some((pi, pj)) = min_nonzero(&a, k) {
            a.swap(k, pi);
            for row in a.iter_mut() {
                row.swap(k, pj);
            }

            let mut dirty = false;
            for i in k + 1..rows {
                if a[i][k].is_zero() {
                    continue;
                }
                let q = &a[i][k] / &a[k][k];
                let (head, tail) = a.split_at_mut(i);
                for (x, y) in tail[0][k..].iter_mut().zip(&head[k][k..]) {
                    *x -= &q * y;
                }
                dirty |= !a[i][k].is_zero();
            }
            for j in k + 1..cols {
                if a[k][j].is_zero() {
                    continue;
                }
                let q = &a[k][j] / &a[k][k];
                for row in a[k..].iter_mut() {
                    let y = row[k].clone();
                    row[j] -= &q * y;
                }
                dirty |= !a[k][j].is_zero();
            }
            if dirty {
                continue;
            }

            // Pivot row and column are clear; enforce divisibility on the block.
            let pivot = a[k][k].clone();
            let offender = (k + 1..rows).find(|&i| a[i][k + 1..].iter().any(|x| !x.is_multiple_of(&pivot)));
            match offender {
                Some(i) => {
                    let (head, tail) = a.split_at_mut(i);
                    for (x, y) in head[k][k..].iter_mut().zip(&tail[0][k..]) {
                        *x += y;
                    }
                }
                None => break,
            }
        }
        factors.push(a[k][k].abs());
    }

    let rank = factors.iter().take_while(|f| !f.is_zero()).count();
    debug_assert!(factors[rank..].iter().all(Zero::is_zero));
    SnfResult { invariant_factors: factors, rank }
}

fn min_nonzero(a: &[Vec<BigInt>], k: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize, BigInt)> = None;
    for (i, row) in a.iter().enumerate().skip(k) {
        for (j, x) in row.iter().enumerate().skip(k) {
            if x.is_zero() {
                continue;
            }
            let ax = x.abs();
            if best.as_ref().is_none_or(|(_, _, b)| ax < *b) {
                let unit = ax.is_one();
                best = Some((i, j, ax));
                if unit {
                    return best.map(|(i, j, _)| (i, j));
                }
            }
        }
    }
    best.map(|(i, j, _)| (i, j))
}

/// A finitely generated abelian group `Z^free_rank ⊕ Z/d_1 ⊕ … ⊕ Z/d_k`
/// with `1 < d_1 | d_2 | … | d_k`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct AbelianGroup {
    torsion: Vec<BigInt>,
    free_rank: usize,
}

impl AbelianGroup {
    pub fn trivial() -> Self {
        Self::default()
    }

    pub fn free(rank: usize) -> Self {
        Self { torsion: Vec::new(), free_rank: rank }
    }

    /// Cokernel of a relation matrix: rows are relations, columns generators.
    pub fn cokernel(relations: &BigIntMatrix) -> Self {
        let snf = smith_normal_form(relations);
        Self::from_snf(&snf, relations.cols())
    }

    pub fn from_snf(snf: &SnfResult, generators: usize) -> Self {
        let torsion = snf.invariant_factors[..snf.rank].iter().filter(|d| !d.is_one()).cloned().collect();
        Self { torsion, free_rank: generators - snf.rank }
    }

    /// `Z/o_1 ⊕ Z/o_2 ⊕ …`, where an order of 0 contributes a copy of `Z`.
    pub fn direct_sum_of_cyclic(orders: &[BigInt]) -> Self {
        Self::cokernel(&BigIntMatrix::diagonal(orders))
    }

    pub fn torsion(&self) -> &[BigInt] {
        &self.torsion
    }

    pub fn free_rank(&self) -> usize {
        self.free_rank
    }

    pub fn is_trivial(&self) -> bool {
        self.torsion.is_empty() && self.free_rank == 0
    }

    pub fn is_finite(&self) -> bool {
        self.free_rank == 0
    }

    /// Group order, `None` when infinite.
    pub fn order(&self) -> Option<BigInt> {
        self.is_finite().then(|| self.torsion.iter().product())
    }
}

impl fmt::Display for AbelianGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_trivial() {
            return write!(f, "0");
        }
        let mut parts = Vec::new();
        match self.free_rank {
            0 => {}
            1 => parts.push("Z".to_string()),
            r => parts.push(format!("Z^{r}")),
        }
        parts.extend(self.torsion.iter().map(|d| format!("Z/{d}")));
        write!(f, "{}", parts.join(" + "))
    }
}
