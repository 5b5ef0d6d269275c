//! Free-group words, finite presentations, and the Takahashi presentation
//! families.

mod families;
mod presentation;
mod word;

pub use families::{
    cyclic_presentation, cyclic_presentation_rewritten, cyclic_relator, relator_identity_check, relator_match,
    representer_polynomial, rewritten_cyclic_relator, takahashi_presentation, RelatorMatch, RepresenterPoly,
};
pub use presentation::{h1_from_presentation, Presentation};
pub use word::Word;
