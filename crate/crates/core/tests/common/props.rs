//! Properties shared by the `properties` and `acceptance` targets. Each one
//! drives its own runner so the caller picks the case count and seed.

use gl11_core::diagram::{lens_chain, twist_region, Boundary, Color, Orient, Rot, Slice, Strand};
use gl11_core::evaluator::{alexander, alexander_kirby, trace_tangle, transfer, StateVector, WeightTable};
use gl11_core::invariant::{clk, enumerate_cohomology, Presentation};
use gl11_core::palette::group_monomial;
use gl11_core::{Coloring, ComponentColor, Diagram, PaletteSpec, Scalar, Sign};
use proptest::prelude::*;
use proptest::test_runner::{Config, RngAlgorithm, TestCaseError, TestRng, TestRunner};

use super::*;

type Outcome = Result<(), TestCaseError>;

pub fn runner(cases: u32, seeded: bool) -> TestRunner {
    let config = Config { cases, failure_persistence: None, ..Config::default() };
    if seeded {
        TestRunner::new_with_rng(config, TestRng::deterministic_rng(RngAlgorithm::ChaCha))
    } else {
        TestRunner::new(config)
    }
}

fn report<T: std::fmt::Debug>(r: Result<(), proptest::test_runner::TestError<T>>) -> Result<(), String> {
    r.map_err(|e| e.to_string())
}

pub fn palette_at(i: usize) -> PaletteSpec {
    palettes()[i % palettes().len()].clone()
}

/// Applies crossings to upward strands of components `0..width`.
pub fn braid(table: &WeightTable, colors: &[Color], word: &[(usize, Sign)], input: u64) -> StateVector {
    let width = colors.len();
    let mut below: Vec<Strand> = (0..width).map(|comp| Strand { comp, orient: Orient::Up }).collect();
    let mut v = StateVector::basis(width, input, table.one());
    for &(pos, sign) in word {
        v = transfer(table, &Slice::Cross { pos, sign }, &below, colors, &v);
        below.swap(pos, pos + 1);
    }
    v
}

fn colors_from(p: &PaletteSpec, seed: &ColorSeed) -> Vec<Color> {
    seed.iter().map(|(f, t, w)| Color { mul: admissible(p, f, *t), weight: *w }).collect()
}

pub fn shift_weight(c: &Coloring, label: &str, j: i64) -> Coloring {
    let mut c = c.clone();
    let col = c[label].color().clone();
    c.insert(label.to_string(), ComponentColor::plain(col.mul, col.weight + j));
    c
}

/// Every `(level, position)` of a strand.
pub fn strand_sites(d: &Diagram) -> Vec<(usize, usize)> {
    d.levels().iter().enumerate().flat_map(|(l, s)| (0..s.len()).map(move |i| (l, i))).collect()
}

pub fn yang_baxter(r: &mut TestRunner) -> Result<(), String> {
    report(r.run(&(0usize..4, color_seed(3), any::<bool>()), |(pi, seed, neg)| -> Outcome {
        let p = palette_at(pi);
        let table = WeightTable::new(&p);
        let colors = colors_from(&p, &seed);
        let s = if neg { Sign::Neg } else { Sign::Pos };
        for input in 0..8 {
            let lhs = braid(&table, &colors, &[(0, s), (1, s), (0, s)], input);
            let rhs = braid(&table, &colors, &[(1, s), (0, s), (1, s)], input);
            prop_assert_eq!(lhs, rhs);
        }
        Ok(())
    }))
}

pub fn inverse_crossings(r: &mut TestRunner) -> Result<(), String> {
    report(r.run(&(0usize..4, color_seed(2), any::<bool>()), |(pi, seed, pos_first)| -> Outcome {
        let p = palette_at(pi);
        let table = WeightTable::new(&p);
        let colors = colors_from(&p, &seed);
        let (a, b) = if pos_first { (Sign::Pos, Sign::Neg) } else { (Sign::Neg, Sign::Pos) };
        for input in 0..4 {
            let v = braid(&table, &colors, &[(0, a), (0, b)], input);
            prop_assert_eq!(v, StateVector::basis(2, input, table.one()));
        }
        Ok(())
    }))
}

pub fn zig_zag_is_identity(r: &mut TestRunner) -> Result<(), String> {
    report(r.run(&(0usize..4, color_seed(1), any::<bool>(), any::<bool>()), |(pi, seed, up, right)| -> Outcome {
        let p = palette_at(pi);
        let o = if up { Orient::Up } else { Orient::Down };
        // `right`: the detour goes to the right of the strand.
        let slices = if right {
            vec![Slice::Cup { pos: 1, rot: Rot::for_cup(o.flip()), comp: 0 }, Slice::Cap { pos: 0, rot: Rot::for_cap(o) }]
        } else {
            vec![Slice::Cup { pos: 0, rot: Rot::for_cup(o), comp: 0 }, Slice::Cap { pos: 1, rot: Rot::for_cap(o.flip()) }]
        };
        let d = Diagram::new(vec!["1".into()], Boundary::Tangle { comp: 0, orient: o }, slices).unwrap();
        let c = coloring(&p, &d, &seed);
        let one = WeightTable::new(&p).one();
        for input in 0..2 {
            let last = trace_tangle(&p, &d, &c, input).unwrap().pop().unwrap();
            prop_assert_eq!(last, StateVector::basis(1, input, one.clone()));
        }
        Ok(())
    }))
}

pub fn both_channels_give_the_same_scalar(r: &mut TestRunner) -> Result<(), String> {
    report(r.run(&(0usize..4, 0usize..12, color_seed(3)), |(pi, k, seed)| -> Outcome {
        let p = palette_at(pi);
        let (_, d) = &corpus()[k];
        let c = coloring(&p, d, &seed);
        for comp in d.outer_components() {
            let t = d.cut_open(d.label(comp)).unwrap().normalize_crossings();
            let e0 = trace_tangle(&p, &t, &c, 0).unwrap().pop().unwrap();
            let e1 = trace_tangle(&p, &t, &c, 1).unwrap().pop().unwrap();
            // split links evaluate to zero, so the image may be empty
            prop_assert!(e0.amplitudes().keys().all(|&k| k == 0));
            prop_assert!(e1.amplitudes().keys().all(|&k| k == 1));
            prop_assert_eq!(e0.get(0), e1.get(1));
        }
        Ok(())
    }))
}

pub fn cut_independence(r: &mut TestRunner) -> Result<(), String> {
    report(r.run(&(0usize..4, 0usize..12, color_seed(3)), |(pi, k, seed)| -> Outcome {
        let p = palette_at(pi);
        let (_, d) = &corpus()[k];
        let c = coloring(&p, d, &seed);
        let values: Vec<Scalar> =
            d.outer_components().iter().map(|&i| alexander(&p, d, &c, d.label(i)).unwrap()).collect();
        for v in &values[1..] {
            prop_assert_eq!(v, &values[0]);
        }
        Ok(())
    }))
}

pub fn weight_shift_covariance(r: &mut TestRunner) -> Result<(), String> {
    let strategy = (0usize..4, 0usize..12, color_seed(3), 0usize..3, -2i64..=2);
    report(r.run(&strategy, |(pi, k, seed, which, j)| -> Outcome {
        let p = palette_at(pi);
        let (_, d) = &corpus()[k];
        let c = coloring(&p, d, &seed);
        let label = d.label(which % d.components().len()).to_string();
        let cut = d.label(d.outer_components()[0]).to_string();
        let before = alexander(&p, d, &c, &cut).unwrap();
        let after = alexander(&p, d, &shift_weight(&c, &label, j), &cut).unwrap();
        let g = clk(&p, d, &c, &label).unwrap().pow(-2 * j);
        prop_assert_eq!(after, before.mul(&Scalar::monomial(&p, &g)));
        Ok(())
    }))
}

pub fn weight_shift_is_invisible_when_clk_is_trivial(r: &mut TestRunner) -> Result<(), String> {
    let strategy = (0usize..4, 0usize..6, (-3i64..=3, -3i64..=3), 0usize..2, -3i64..=3);
    report(r.run(&strategy, |(chain, class_idx, w, which, j)| -> Outcome {
        let (m, n, l) = [(4, 2, 7), (8, 1, 7), (3, 2, 5), (-2, 3, 7)][chain];
        let p = PaletteSpec::cyclotomic(l).unwrap();
        let d = lens_chain(m, n);
        let classes = enumerate_cohomology(&Presentation::new(p.clone(), d.clone())).unwrap();
        let omega = &classes[class_idx % classes.len()];
        let c: Coloring = [("1", w.0), ("2", w.1)]
            .iter()
            .map(|(l, wt)| (l.to_string(), ComponentColor::plain(omega[*l].clone(), *wt)))
            .collect();
        let label = ["1", "2"][which];
        prop_assert!(clk(&p, &d, &c, label).unwrap().is_identity());
        prop_assert_eq!(alexander(&p, &d, &shift_weight(&c, label, j), "1").unwrap(), alexander(&p, &d, &c, "1").unwrap());
        Ok(())
    }))
}

pub fn full_twist_factor(r: &mut TestRunner) -> Result<(), String> {
    let strategy = (0usize..4, 0usize..12, color_seed(3), any::<prop::sample::Index>(), any::<bool>());
    report(r.run(&strategy, |(pi, k, seed, site, neg)| -> Outcome {
        let p = palette_at(pi);
        let (_, d) = &corpus()[k];
        let c = coloring(&p, d, &seed);
        let (level, pos) = *site.get(&strand_sites(d));
        let strand = d.levels()[level][pos];
        let sign = if neg { Sign::Neg } else { Sign::Pos };
        let twisted = d.insert_curl(level, pos, sign).unwrap();
        let col = c[d.label(strand.comp)].color();
        let factor = Scalar::monomial(&p, &col.mul.pow(-2 * col.weight * sign.value()));
        let cut = d.label(d.outer_components()[0]);
        prop_assert_eq!(alexander(&p, &twisted, &c, cut).unwrap(), alexander(&p, d, &c, cut).unwrap().mul(&factor));
        Ok(())
    }))
}

pub fn twist_region_tangle(r: &mut TestRunner) -> Result<(), String> {
    report(r.run(&(0usize..4, color_seed(1), -3i64..=3), |(pi, seed, k)| -> Outcome {
        let p = palette_at(pi);
        let d = twist_region(k);
        let c = coloring(&p, &d, &seed);
        let col = c["1"].color();
        let lambda = gl11_core::evaluate_tangle(&p, &d, &c).unwrap();
        prop_assert_eq!(lambda, group_monomial(&p, &col.mul.pow(-2 * col.weight * k)));
        Ok(())
    }))
}

pub fn kirby_reversal_symmetry(r: &mut TestRunner) -> Result<(), String> {
    report(r.run(&(0usize..4, 0usize..12, color_seed(3), 0usize..3), |(pi, k, seed, which)| -> Outcome {
        let p = palette_at(pi);
        let (_, d) = &corpus()[k];
        let c = coloring(&p, d, &seed);
        let label = d.label(which % d.components().len()).to_string();
        let col = c[&label].color().clone();
        let mut forward = c.clone();
        forward.insert(label.clone(), ComponentColor::kirby(col.mul.clone(), col.weight));
        let mut backward = c.clone();
        backward.insert(label.clone(), ComponentColor::kirby(col.mul.inv(), 2 - col.weight));
        let reversed = d.reverse_component(&label).unwrap();
        prop_assert_eq!(
            alexander_kirby(&p, d, &forward, None).unwrap(),
            alexander_kirby(&p, &reversed, &backward, None).unwrap()
        );
        Ok(())
    }))
}

pub type Property = fn(&mut TestRunner) -> Result<(), String>;

/// The structural invariants of the evaluator, by name.
pub fn evaluator_properties() -> Vec<(&'static str, Property)> {
    vec![
        ("yang-baxter", yang_baxter),
        ("inverse crossings", inverse_crossings),
        ("zig-zag", zig_zag_is_identity),
        ("closure scalar", both_channels_give_the_same_scalar),
        ("cut independence", cut_independence),
        ("weight shift", weight_shift_covariance),
        ("trivial clk", weight_shift_is_invisible_when_clk_is_trivial),
        ("full twist", full_twist_factor),
        ("twist region", twist_region_tangle),
        ("kirby reversal", kirby_reversal_symmetry),
    ]
}
