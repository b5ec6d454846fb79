use crate::diagram::{Color, Rot, Sign};
use crate::palette::{group_monomial, GroupElement, Laurent, PaletteSpec};

/// Boltzmann weights of the elementary fragments for a fixed palette.
#[derive(Clone, Debug)]
pub struct WeightTable {
    palette: PaletteSpec,
}

impl WeightTable {
    pub fn new(palette: &PaletteSpec) -> Self {
        Self { palette: palette.clone() }
    }

    pub fn palette(&self) -> &PaletteSpec {
        &self.palette
    }

    pub fn one(&self) -> Laurent {
        group_monomial(&self.palette, &self.palette.identity())
    }

    pub fn zero(&self) -> Laurent {
        self.one().sub(&self.one())
    }

    /// `prod g_i^{k_i}` as a monomial.
    fn mono(&self, factors: &[(&GroupElement, i64)]) -> Laurent {
        let mut g = self.palette.identity();
        for (h, k) in factors {
            g = g.mul(&h.pow(*k)).expect("colors come from this palette");
        }
        group_monomial(&self.palette, &g)
    }

    /// `[e0, e1]` amplitudes of a cup creating the pair `e_i (x) e_i`.
    pub fn cup(&self, rot: Rot, c: &Color) -> [Laurent; 2] {
        let u = &c.mul;
        match rot {
            Rot::Ccw => [self.mono(&[(u, -2)]), self.one()],
            Rot::Cw => [self.one(), self.mono(&[(u, 2)]).neg()],
        }
    }

    /// `[e0, e1]` amplitudes of a cap closing `e_i (x) e_i`.
    pub fn cap(&self, rot: Rot, c: &Color) -> [Laurent; 2] {
        let u = &c.mul;
        match rot {
            Rot::Ccw => [self.one(), self.mono(&[(u, -2)]).neg()],
            Rot::Cw => [self.mono(&[(u, 2)]), self.one()],
        }
    }

    /// Matrix of an upward crossing, `m[input][output]` over states
    /// `|ab>` = `2a + b` with `a` the left strand. `left` colors the strand
    /// entering at the bottom left, `right` the one at the bottom right.
    pub fn crossing(&self, sign: Sign, left: &Color, right: &Color) -> [[Option<Laurent>; 4]; 4] {
        let (v, vw) = (&left.mul, left.weight);
        let (u, uw) = (&right.mul, right.weight);
        let mut m: [[Option<Laurent>; 4]; 4] = Default::default();
        match sign {
            Sign::Pos => {
                m[0][0] = Some(self.mono(&[(v, 1 - uw), (u, 1 - vw)]));
                m[1][2] = Some(self.mono(&[(v, -1 - uw), (u, 1 - vw)]));
                let ex = self.mono(&[(v, 4)]).sub(&self.one());
                m[1][1] = Some(ex.mul(&self.mono(&[(v, -1 - uw), (u, -1 - vw)])));
                m[2][1] = Some(self.mono(&[(v, 1 - uw), (u, -1 - vw)]));
                m[3][3] = Some(self.mono(&[(v, -1 - uw), (u, -1 - vw)]).neg());
            }
            Sign::Neg => {
                m[0][0] = Some(self.mono(&[(v, uw - 1), (u, vw - 1)]));
                m[1][2] = Some(self.mono(&[(v, uw + 1), (u, vw - 1)]));
                m[2][1] = Some(self.mono(&[(v, uw - 1), (u, vw + 1)]));
                let ex = self.one().sub(&self.mono(&[(u, 4)]));
                m[2][2] = Some(ex.mul(&self.mono(&[(v, uw - 1), (u, vw - 1)])));
                m[3][3] = Some(self.mono(&[(v, uw + 1), (u, vw + 1)]).neg());
            }
        }
        m
    }
}
