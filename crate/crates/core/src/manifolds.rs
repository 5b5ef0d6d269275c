//! Periodic Takahashi manifolds `M_n(p/q, r/s)`: normalized surgery data,
//! the presentation routes to `H_1`, and homology-level cross-checks
//! against the lens-space base and the genus-one branching knots.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::exactalg::{resultant, AbelianGroup, IntPoly, Rational};
use crate::grouppres::{cyclic_presentation, representer_polynomial, takahashi_presentation};
use crate::knotkit::{
    alexander_two_bridge, branched_cover_homology, conway_to_fraction, normalize_two_bridge, two_bridge_equivalent,
    two_bridge_from_fraction, ConwayForm, TwoBridge,
};

/// Surgery data of `M_n(p/q, r/s)`, coefficients in canonical [`Rational`] form.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct TakahashiSpec {
    pub n: usize,
    pub pq: Rational,
    pub rs: Rational,
}

impl TakahashiSpec {
    /// Parameter images under the symmetries `(p/q, r/s) ↦ (-p/q, -r/s)`,
    /// `(r/s, p/q)` and `(-r/s, -p/q)`, starting with `self`.
    pub fn symmetric_images(&self) -> [TakahashiSpec; 4] {
        let Self { n, pq, rs } = *self;
        [
            Self { n, pq, rs },
            Self { n, pq: pq.neg(), rs: rs.neg() },
            Self { n, pq: rs, rs: pq },
            Self { n, pq: rs.neg(), rs: pq.neg() },
        ]
    }
}

impl fmt::Display for TakahashiSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "M_{}({}, {})", self.n, self.pq, self.rs)
    }
}

/// Canonicalize surgery data: reduced fractions with nonnegative numerators
/// and `∞ = 1/0`.
pub fn normalize_spec(n: usize, a: Rational, b: Rational) -> Result<TakahashiSpec> {
    if n == 0 {
        return Err(Error::ZeroModulus);
    }
    let pq = Rational::new(a.num(), a.den())?;
    let rs = Rational::new(b.num(), b.den())?;
    Ok(TakahashiSpec { n, pq, rs })
}

/// `normalize_spec` from raw integer pairs; `(0, 0)` is rejected.
pub fn normalize_spec_raw(n: usize, a: (i64, i64), b: (i64, i64)) -> Result<TakahashiSpec> {
    normalize_spec(n, Rational::new(a.0, a.1)?, Rational::new(b.0, b.1)?)
}

/// `H_1` from the `2n`-generator presentation.
pub fn h1_takahashi(spec: &TakahashiSpec) -> Result<AbelianGroup> {
    Ok(takahashi_presentation(spec.n, spec.pq, spec.rs)?.h1())
}

/// `H_1` from the `n`-generator cyclic presentation; needs `r/s = 1/s`.
pub fn h1_cyclic_route(spec: &TakahashiSpec) -> Result<AbelianGroup> {
    let s = cyclic_twist(spec)?;
    Ok(cyclic_presentation(spec.n, spec.pq.num(), spec.pq.den(), s)?.h1())
}

fn cyclic_twist(spec: &TakahashiSpec) -> Result<i64> {
    if spec.rs.num() != 1 {
        return Err(Error::NotCyclicCoefficient(spec.rs.to_string()));
    }
    Ok(spec.rs.den())
}

/// `|Res(f, t^n - 1)|` for the representer polynomial `f` of the cyclic
/// presentation; equals `|H_1|` when finite and 0 otherwise.
pub fn cyclic_resultant_order(spec: &TakahashiSpec) -> Result<BigInt> {
    let s = cyclic_twist(spec)?;
    let f = representer_polynomial(spec.n, spec.pq.num(), spec.pq.den(), s)?;
    if f.poly.is_zero() {
        return Ok(BigInt::zero());
    }
    Ok(resultant(&f.poly, &IntPoly::x_pow_minus_one(spec.n))?.abs())
}

/// `H_1(L(p,q) # L(r,s)) = Z/p ⊕ Z/r`, with `p = 0` contributing `Z`.
pub fn base_space_h1(pq: Rational, rs: Rational) -> AbelianGroup {
    AbelianGroup::direct_sum_of_cyclic(&[BigInt::from(pq.num()), BigInt::from(rs.num())])
}

/// Base space and (when `p = r = 1`) branching knot of `M_n(p/q, r/s)`
/// viewed as a cyclic branched cover.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BranchData {
    pub base_h1: AbelianGroup,
    pub branch_knot: Option<TwoBridge>,
}

pub fn branch_data(spec: &TakahashiSpec) -> BranchData {
    let branch_knot = (spec.pq.num() == 1 && spec.rs.num() == 1).then(|| branch_knot(spec.pq.den(), spec.rs.den()));
    BranchData { base_h1: base_space_h1(spec.pq, spec.rs), branch_knot }
}

/// The genus-one two-bridge knot `b(|4sq - 1|, 2s)` over which
/// `M_n(1/q, 1/s)` is the `n`-fold cyclic branched cover.
pub fn branch_knot(q: i64, s: i64) -> TwoBridge {
    let alpha = (4 * s * q - 1).abs();
    let k = normalize_two_bridge(alpha, 2 * s).expect("4sq - 1 is odd and coprime to 2s");
    debug_assert!(two_bridge_equivalent(k, conway_class(q, s), true));
    k
}

/// The Conway form `[-2q, 2s]` of the branching knot.
pub fn branch_conway_form(q: i64, s: i64) -> ConwayForm {
    ConwayForm(vec![-2 * q, 2 * s])
}

/// Two-bridge class of the Conway form `[-2q, 2s]`.
pub fn conway_class(q: i64, s: i64) -> TwoBridge {
    let r = conway_to_fraction(&branch_conway_form(q, s)).expect("two-term form is never empty");
    two_bridge_from_fraction(r).expect("continued fractions are reduced")
}

/// Both sides of the branched-cover description of `M_n(1/q, 1/s)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Prop4Comparison {
    pub manifold: AbelianGroup,
    pub cover: AbelianGroup,
    pub knot: TwoBridge,
}

impl Prop4Comparison {
    pub fn agrees(&self) -> bool {
        self.manifold == self.cover
    }
}

pub fn compare_prop4(q: i64, s: i64, n: usize) -> Result<Prop4Comparison> {
    let spec = normalize_spec_raw(n, (1, q), (1, s))?;
    let manifold = h1_takahashi(&spec)?;
    let knot = branch_knot(q, s);
    let cover = branched_cover_homology(&alexander_two_bridge(knot)?, n)?;
    Ok(Prop4Comparison { manifold, cover, knot })
}

/// `H_1(M_n(1/q, 1/s))` equals the homology of the `n`-fold cyclic
/// branched cover of `b(|4sq - 1|, 2s)`.
pub fn cross_check_prop4(q: i64, s: i64, n: usize) -> Result<bool> {
    Ok(compare_prop4(q, s, n)?.agrees())
}

/// `H_1` agrees across all four symmetric parameter images.
pub fn symmetry_check(spec: &TakahashiSpec) -> Result<bool> {
    let images = spec.symmetric_images();
    let first = h1_takahashi(&images[0])?;
    for image in &images[1..] {
        if h1_takahashi(image)? != first {
            return Ok(false);
        }
    }
    Ok(true)
}

/// All canonical coefficients `p/q` with `|p|, |q| <= bound`, including `∞`.
pub fn coefficient_grid(bound: i64) -> Vec<Rational> {
    let mut out: Vec<Rational> = (-bound..=bound)
        .flat_map(|p| (-bound..=bound).map(move |q| (p, q)))
        .filter(|&(p, q)| num_integer::gcd(p, q) == 1)
        .map(|(p, q)| Rational::new(p, q).expect("coprime pair"))
        .collect();
    out.sort();
    out.dedup();
    out
}

/// One row of a conjecture scan.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScanRow {
    pub spec: TakahashiSpec,
    pub h1: AbelianGroup,
}

/// `H_1` over `n in 2..=max_n` and all coefficient pairs with entries
/// bounded by `bound`. Data only: whether a fixed branching knot exists is
/// not decided here.
pub fn conjecture_scan(bound: i64, max_n: usize) -> Result<Vec<ScanRow>> {
    let coeffs = coefficient_grid(bound);
    let mut specs = Vec::new();
    for n in 2..=max_n {
        for &pq in &coeffs {
            specs.extend(coeffs.iter().map(|&rs| TakahashiSpec { n, pq, rs }));
        }
    }
    specs
        .into_par_iter()
        .map(|spec| Ok(ScanRow { spec, h1: h1_takahashi(&spec)? }))
        .collect()
}
