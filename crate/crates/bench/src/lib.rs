//! Inputs shared by the benchmarks.

use gl11_core::diagram::lens_chain;
use gl11_core::{CohomologyClass, PaletteSpec, Presentation};

/// The (m, n) chain over the order-`l` palette with class `(xi^u, xi^v)`.
pub fn lens(m: i64, n: i64, l: u32, u: i64, v: i64) -> (Presentation, CohomologyClass) {
    let p = PaletteSpec::cyclotomic(l).expect("prime order");
    let free = vec![0; p.free_rank()];
    let w: CohomologyClass = [
        ("1".to_string(), p.element(free.clone(), u).expect("element")),
        ("2".to_string(), p.element(free, v).expect("element")),
    ]
    .into();
    (Presentation::new(p, lens_chain(m, n)), w)
}
