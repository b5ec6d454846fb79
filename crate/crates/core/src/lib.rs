//! Exact evaluation of the gl(1|1) Alexander polynomial of colored framed
//! tangles and of the associated 3-manifold invariant.

pub mod diagram;
pub mod evaluator;
pub mod invariant;
pub mod palette;

pub use diagram::{Color, Coloring, ComponentColor, Diagram, DiagramError, MorseFile, Role, Sign};
pub use evaluator::{alexander, alexander_kirby, evaluate_tangle, EvalError};
pub use invariant::{
    check_compatible, enumerate_cohomology, invariant, lens_closed_form, sigma_plus, CohomologyClass,
    InvariantError, InvariantResult, Presentation,
};
pub use palette::{GroupElement, PaletteError, PaletteSpec, Scalar};
