//! Coefficient arithmetic: the abelian group `G` of colors and the field `B`
//! of fractions over `Q[G]`.

mod cyclo;
mod gcd;
mod group;
mod laurent;
mod scalar;

pub use cyclo::Cyclo;
pub use gcd::{exact_div, gcd};
pub use group::{GroupElement, PaletteSpec};
pub use laurent::Laurent;
pub use scalar::{d, group_monomial, Scalar};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PaletteError {
    #[error("bad generator name `{0}`")]
    BadGeneratorName(String),
    #[error("torsion order {0} is not an odd prime")]
    BadTorsionOrder(u32),
    #[error("elements belong to different palettes")]
    Mismatch,
    #[error("cannot parse group element `{0}`")]
    BadElement(String),
    #[error("cannot parse palette `{0}`")]
    BadPalette(String),
    #[error("division by zero")]
    DivisionByZero,
    #[error("color is not admissible (t^4 = 1)")]
    Inadmissible,
}
