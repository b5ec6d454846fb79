//! The golden Kirby-move suite: generation of the shipped files and the
//! invariance runner behind `gl11 verify-kirby`.

use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};

use anyhow::{anyhow, bail, Context, Result};
use gl11_core::diagram::{lens_chain, parse_morse, render, unknot, Boundary, Diagram, MorseFile, Role};
use gl11_core::invariant::{blow_up_presentation, check_compatible, invariant};
use gl11_core::{CohomologyClass, Coloring, ComponentColor, PaletteSpec, Presentation, Sign};

pub const PRESENTATIONS: &str = "presentations";
pub const SLIDES: &str = "handle_slides";
const HEADER: &str = "# generated by `cargo run -p gl11-cli --example gen_suite`; do not edit\n";

/// Directory of the suite shipped with the source tree.
pub fn default_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../suite")
}

/// A presentation file: every component is a surgery component colored
/// `Omega(omega, 1)`.
pub fn presentation_file(p: &Presentation, omega: &CohomologyClass) -> MorseFile {
    let coloring: Coloring =
        omega.iter().map(|(l, g)| (l.clone(), ComponentColor::kirby(g.clone(), 1))).collect();
    let roles: BTreeMap<String, Role> =
        p.diagram.components().iter().map(|l| (l.clone(), Role::Surgery)).collect();
    MorseFile {
        palette: p.palette.clone(),
        diagram: p.diagram.clone(),
        coloring,
        roles,
        omega: omega.clone(),
    }
}

fn class(p: &PaletteSpec, exps: &[(&str, i64)]) -> Result<CohomologyClass> {
    let free = vec![0; p.free_rank()];
    exps.iter().map(|(l, e)| Ok((l.to_string(), p.element(free.clone(), *e)?))).collect()
}

fn free_class(p: &PaletteSpec, exps: &[(&str, i64)]) -> Result<CohomologyClass> {
    exps.iter().map(|(l, e)| Ok((l.to_string(), p.element(vec![*e], 0)?))).collect()
}

/// The base presentations, by name.
pub fn base_presentations() -> Result<Vec<(String, Presentation, CohomologyClass)>> {
    let xi7 = PaletteSpec::cyclotomic(7)?;
    let xi5 = PaletteSpec::cyclotomic(5)?;
    let qt = PaletteSpec::rational_functions();
    let unknot3 = Diagram::new(vec!["3".into()], Boundary::Closed, unknot().slices().to_vec())?;
    let sum = lens_chain(4, 2).disjoint_union(&unknot3)?;
    let out = vec![
        ("lens_7_1".into(), Presentation::new(xi7.clone(), lens_chain(8, 1)), class(&xi7, &[("1", 1), ("2", 1)])?),
        ("lens_7_2".into(), Presentation::new(xi7.clone(), lens_chain(4, 2)), class(&xi7, &[("1", 2), ("2", 1)])?),
        ("lens_5_2".into(), Presentation::new(xi5.clone(), lens_chain(3, 2)), class(&xi5, &[("1", 1), ("2", 3)])?),
        ("chain_neg".into(), Presentation::new(xi7.clone(), lens_chain(-2, 3)), class(&xi7, &[("1", 1), ("2", 5)])?),
        ("chain_1_1_qt".into(), Presentation::new(qt.clone(), lens_chain(1, 1)), free_class(&qt, &[("1", 1), ("2", 1)])?),
        (
            "lens_7_2_with_s1xs2".into(),
            Presentation::new(xi7.clone(), sum),
            class(&xi7, &[("1", 2), ("2", 1), ("3", 3)])?,
        ),
    ];
    for (name, p, w) in &out {
        let r = check_compatible(p, w);
        if !r.is_ok() {
            bail!("base presentation {name} is incompatible: {r}");
        }
    }
    Ok(out)
}

/// Slides `u` over `v`: `u` is banded to a reversed blackboard pushoff of
/// `v` at the first place where the two run side by side, `u` on the left.
/// The class changes by `omega'(v) = omega(v) omega(u)`.
pub fn handle_slide(
    p: &Presentation,
    omega: &CohomologyClass,
    u: &str,
    v: &str,
    left: bool,
) -> Result<(Presentation, CohomologyClass)> {
    const COPY: &str = "__copy";
    let doubled = p.diagram.pushoff(v, COPY, left)?;
    let ui = doubled.component_index(u)?;
    let ci = doubled.component_index(COPY)?;
    let site = doubled.levels().iter().enumerate().find_map(|(level, strands)| {
        strands.windows(2).position(|w| w[0].comp == ui && w[1].comp == ci && w[0].orient != w[1].orient).map(|pos| (level, pos))
    });
    let (level, pos) = site.ok_or_else(|| anyhow!("{u} never runs next to the pushoff of {v}"))?;
    let slid = doubled.band_sum(level, pos)?;
    let mut w = omega.clone();
    w.insert(v.to_string(), omega[v].mul(&omega[u])?);
    let q = Presentation { palette: p.palette.clone(), diagram: slid, roles: p.roles.clone() };
    let r = check_compatible(&q, &w);
    if !r.is_ok() {
        bail!("slide of {u} over {v} broke compatibility: {r}");
    }
    Ok((q, w))
}

/// Relative paths and contents of every shipped suite file.
pub fn generate() -> Result<Vec<(PathBuf, String)>> {
    let mut files = Vec::new();
    let bases = base_presentations()?;
    for (name, p, w) in &bases {
        files.push((Path::new(PRESENTATIONS).join(format!("{name}.morse")), HEADER.to_string() + &render(&presentation_file(p, w))));
    }
    let slides: &[(&str, &str, &str, bool)] = &[
        ("lens_7_1", "1", "2", true),
        ("lens_7_1", "2", "1", true),
        ("lens_7_2", "1", "2", true),
        ("lens_7_2", "1", "2", false),
        ("lens_7_2", "2", "1", true),
        ("lens_5_2", "1", "2", true),
        ("chain_neg", "2", "1", true),
        ("chain_1_1_qt", "1", "2", true),
    ];
    for &(base, u, v, left) in slides {
        let (_, p, w) = bases.iter().find(|(n, ..)| n == base).expect("known base");
        let (q, w2) = handle_slide(p, w, u, v, left)?;
        let side = if left { "l" } else { "r" };
        let stem = format!("{base}_slide_{u}_over_{v}_{side}");
        files.push((Path::new(SLIDES).join(format!("{stem}.before.morse")), HEADER.to_string() + &render(&presentation_file(p, w))));
        files.push((Path::new(SLIDES).join(format!("{stem}.after.morse")), HEADER.to_string() + &render(&presentation_file(&q, &w2))));
    }
    Ok(files)
}

/// Outcome of one invariance check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CaseResult {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

fn load(path: &Path) -> Result<(Presentation, CohomologyClass)> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    let file = parse_morse(&text).with_context(|| format!("parsing {}", path.display()))?;
    Ok((Presentation::from_file(&file), file.omega))
}

fn sorted_files(dir: &Path, suffix: &str) -> Result<Vec<PathBuf>> {
    if !dir.is_dir() {
        return Ok(Vec::new());
    }
    let mut out: Vec<PathBuf> = fs::read_dir(dir)?
        .map(|e| e.map(|e| e.path()))
        .collect::<std::io::Result<_>>()?;
    out.retain(|p| p.to_string_lossy().ends_with(suffix));
    out.sort();
    Ok(out)
}

/// Up to three strand sites spread over the diagram.
fn blow_up_sites(d: &Diagram) -> Vec<(usize, usize)> {
    let all: Vec<(usize, usize)> = d
        .levels()
        .iter()
        .enumerate()
        .flat_map(|(l, s)| (0..s.len()).map(move |i| (l, i)))
        .collect();
    if all.is_empty() {
        return all;
    }
    let mut picks = vec![all[0], all[all.len() / 2], all[all.len() - 1]];
    picks.dedup();
    picks
}

fn check_blow_ups(name: &str, p: &Presentation, w: &CohomologyClass) -> Vec<CaseResult> {
    let base = match invariant(p, w) {
        Ok(r) => r.value,
        Err(e) => return vec![CaseResult { name: name.to_string(), passed: false, detail: e.to_string() }],
    };
    let mut out = Vec::new();
    for (level, pos) in blow_up_sites(&p.diagram) {
        for sign in [Sign::Pos, Sign::Neg] {
            let case = format!("{name} blow-up {:+} at level {level} strand {pos}", sign.value());
            let res = blow_up_presentation(p, w, level, pos, sign, "blowup")
                .and_then(|(q, w2)| invariant(&q, &w2));
            out.push(match res {
                Ok(r) if r.value == base => CaseResult { name: case, passed: true, detail: String::new() },
                Ok(_) => CaseResult { name: case, passed: false, detail: "invariant changed".into() },
                Err(e) => CaseResult { name: case, passed: false, detail: e.to_string() },
            });
        }
    }
    out
}

/// Runs every blow-up case and handle-slide pair under `dir`.
pub fn verify(dir: &Path) -> Result<Vec<CaseResult>> {
    let mut results = Vec::new();
    for path in sorted_files(&dir.join(PRESENTATIONS), ".morse")? {
        let name = path.file_stem().unwrap().to_string_lossy().to_string();
        match load(&path) {
            Ok((p, w)) => results.extend(check_blow_ups(&name, &p, &w)),
            Err(e) => results.push(CaseResult { name, passed: false, detail: format!("{e:#}") }),
        }
    }
    for before in sorted_files(&dir.join(SLIDES), ".before.morse")? {
        let file = before.file_name().unwrap().to_string_lossy().to_string();
        let stem = file.trim_end_matches(".before.morse").to_string();
        let after = before.with_file_name(format!("{stem}.after.morse"));
        let pair = || -> Result<bool> {
            let (p, w) = load(&before)?;
            let (q, w2) = load(&after)?;
            Ok(invariant(&p, &w)?.value == invariant(&q, &w2)?.value)
        };
        results.push(match pair() {
            Ok(true) => CaseResult { name: format!("{stem} handle slide"), passed: true, detail: String::new() },
            Ok(false) => CaseResult { name: format!("{stem} handle slide"), passed: false, detail: "invariants differ".into() },
            Err(e) => CaseResult { name: format!("{stem} handle slide"), passed: false, detail: format!("{e:#}") },
        });
    }
    Ok(results)
}
