//! Two-bridge knots, Fox-calculus and Burau Alexander polynomials, and the
//! homology of cyclic branched covers.

mod burau;
mod cover;
mod fox;
mod twobridge;

pub use burau::{alexander_from_braid3, burau_characteristic, reduced_burau3, BraidWord3, LaurentMatrix2};
pub use cover::{branched_cover_homology, branched_cover_order};
pub use fox::{alexander_two_bridge, fox_derivative_abelianized, AlexanderPoly};
pub use twobridge::{
    conway_to_fraction, epsilon_sequence, normalize_two_bridge, two_bridge_equivalent, two_bridge_from_fraction,
    two_bridge_presentation, ConwayForm, TwoBridge,
};
