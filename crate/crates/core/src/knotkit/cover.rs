use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use super::fox::AlexanderPoly;
use crate::error::Result;
use crate::exactalg::{cyclotomic_quotient, multiplication_matrix, resultant, AbelianGroup};

/// First homology of the `n`-fold cyclic branched cover of a knot with
/// Alexander polynomial `delta`: the cokernel of multiplication by `delta`
/// on `Z[t]/(1 + t + … + t^(n-1))`.
pub fn branched_cover_homology(delta: &AlexanderPoly, n: usize) -> Result<AbelianGroup> {
    let nu = cyclotomic_quotient(n)?;
    if n == 1 {
        return Ok(AbelianGroup::trivial());
    }
    Ok(AbelianGroup::cokernel(&multiplication_matrix(delta.poly(), &nu)?))
}

/// `|Res(delta, 1 + t + … + t^(n-1))|`, the cover's order when nonzero
/// (zero means the cover has positive first Betti number).
pub fn branched_cover_order(delta: &AlexanderPoly, n: usize) -> Result<BigInt> {
    let nu = cyclotomic_quotient(n)?;
    if delta.poly().is_zero() {
        return Ok(BigInt::zero());
    }
    Ok(resultant(delta.poly(), &nu)?.abs())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::IntPoly;
    use num_traits::One;

    fn alex(c: &[i64]) -> AlexanderPoly {
        AlexanderPoly::new(&IntPoly::from_i64s(c))
    }

    #[test]
    fn first_cover_is_trivial() {
        assert!(branched_cover_homology(&alex(&[1, -3, 1]), 1).unwrap().is_trivial());
        assert_eq!(branched_cover_order(&alex(&[1, -3, 1]), 1).unwrap(), BigInt::one());
    }

    #[test]
    fn trefoil_covers() {
        let trefoil = alex(&[1, -1, 1]);
        let h = branched_cover_homology(&trefoil, 2).unwrap();
        assert_eq!(h.order(), Some(BigInt::from(3)));
        let h6 = branched_cover_homology(&trefoil, 6).unwrap();
        assert_eq!(h6.free_rank(), 2);
        assert_eq!(branched_cover_order(&trefoil, 6).unwrap(), BigInt::zero());
    }

    #[test]
    fn figure_eight_three_fold() {
        let h = branched_cover_homology(&alex(&[1, -3, 1]), 3).unwrap();
        assert_eq!(h.torsion(), &[BigInt::from(4), BigInt::from(4)]);
        assert_eq!(branched_cover_order(&alex(&[1, -3, 1]), 3).unwrap(), BigInt::from(16));
    }
}
