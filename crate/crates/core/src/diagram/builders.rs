//! Standard diagram families.

use super::{Boundary, Diagram, Rot, Sign, Slice};

/// Crossing sign used in the two-crossing clasp of [`hopf_with_twists`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum HopfVariant {
    /// Two negative crossings: linking number -1.
    Negative,
    /// Two positive crossings: linking number +1.
    Positive,
}

fn labels(n: usize) -> Vec<String> {
    (1..=n).map(|i| i.to_string()).collect()
}

/// A round unknot labeled `1`, framing 0.
pub fn unknot() -> Diagram {
    Diagram::new(
        labels(1),
        Boundary::Closed,
        vec![Slice::Cup { pos: 0, rot: Rot::Ccw, comp: 0 }, Slice::Cap { pos: 0, rot: Rot::Ccw }],
    )
    .expect("valid")
}

/// `n` unlinked unknots side by side, labeled `1..=n`.
pub fn split_unknots(n: usize) -> Diagram {
    let mut slices = Vec::new();
    for i in 0..n {
        slices.push(Slice::Cup { pos: 2 * i, rot: Rot::Ccw, comp: i });
    }
    for _ in 0..n {
        slices.push(Slice::Cap { pos: 0, rot: Rot::Ccw });
    }
    Diagram::new(labels(n), Boundary::Closed, slices).expect("valid")
}

/// The Hopf link with both clasp strands pointing up. Component `1` is the
/// left circle, `2` the right one.
pub fn hopf_with_twists(variant: HopfVariant) -> Diagram {
    let sign = match variant {
        HopfVariant::Negative => Sign::Neg,
        HopfVariant::Positive => Sign::Pos,
    };
    Diagram::new(
        labels(2),
        Boundary::Closed,
        vec![
            Slice::Cup { pos: 0, rot: Rot::Ccw, comp: 0 },
            Slice::Cup { pos: 2, rot: Rot::Cw, comp: 1 },
            Slice::Cross { pos: 1, sign },
            Slice::Cross { pos: 1, sign },
            Slice::Cap { pos: 0, rot: Rot::Ccw },
            Slice::Cap { pos: 0, rot: Rot::Cw },
        ],
    )
    .expect("valid")
}

/// Two-component chain with framings `m` and `n` and linking number -1:
/// surgery on it gives the lens space `L(mn - 1, n)`.
pub fn lens_chain(m: i64, n: i64) -> Diagram {
    let mut d = hopf_with_twists(HopfVariant::Negative);
    let curl = |d: Diagram, level: usize, pos: usize, k: i64| {
        let sign = if k >= 0 { Sign::Pos } else { Sign::Neg };
        (0..k.unsigned_abs()).fold(d, |d, _| d.insert_curl(level, pos, sign).expect("strand exists"))
    };
    // Later level first so the earlier insertion point stays put.
    d = curl(d, 2, 2, n);
    curl(d, 1, 1, m)
}

/// A 1-1 tangle: an upward strand with `k` kinks of sign `sign(k)`, i.e.
/// `k` full twists of its framing. `twist_region(0)` is a bare strand.
pub fn twist_region(k: i64) -> Diagram {
    let strand = Diagram::new(
        labels(1),
        Boundary::Tangle { comp: 0, orient: super::Orient::Up },
        Vec::new(),
    )
    .expect("valid");
    let sign = if k >= 0 { Sign::Pos } else { Sign::Neg };
    (0..k.unsigned_abs()).fold(strand, |d, _| d.insert_curl(0, 0, sign).expect("strand exists"))
}
