use std::fs;
use std::path::Path;

use anyhow::{bail, Context, Result};
use gl11_core::diagram::{lens_chain, parse_morse_with, MorseFile};
use gl11_core::evaluator::alexander_kirby_terms;
use gl11_core::invariant::{
    check_compatible, enumerate_cohomology, invariant_with_cut, lens_closed_form, sigma_plus, InvariantError,
};
use gl11_core::{CohomologyClass, GroupElement, PaletteSpec, Presentation};

use crate::report::RunReport;
use crate::suite;

fn read(path: &Path, palette: &PaletteSpec, report: &mut RunReport) -> Result<MorseFile> {
    let text = fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))?;
    report.digest_of(text.as_bytes());
    parse_morse_with(&text, palette).with_context(|| format!("{}", path.display()))
}

/// `gl11 eval`: the (Kirby-expanded) invariant of a closed colored diagram.
pub fn eval(path: &Path, cut: Option<&str>, palette: &PaletteSpec) -> Result<RunReport> {
    let mut report = RunReport::new(format!("eval {}", path.display()));
    let file = read(path, palette, &mut report)?;
    let (value, terms) = alexander_kirby_terms(&file.palette, &file.diagram, &file.coloring, cut)?;
    report.line(format!("palette: {}", file.palette));
    report.line(format!("value: {}", value.display(&file.palette)));
    if terms > 1 {
        report.line(format!("terms: {terms}"));
    }
    Ok(report)
}

/// `gl11 invariant`: the normalized 3-manifold invariant of a presentation.
pub fn invariant(path: &Path, cut: Option<&str>, palette: &PaletteSpec) -> Result<RunReport> {
    let mut report = RunReport::new(format!("invariant {}", path.display()));
    let file = read(path, palette, &mut report)?;
    let p = Presentation::from_file(&file);
    let graph = p.graph_components();
    if !graph.is_empty() {
        bail!(InvariantError::GraphVertices(graph));
    }
    let compat = check_compatible(&p, &file.omega);
    if !compat.is_ok() {
        for v in &compat.violations {
            report.check(v.clone(), false);
        }
        return Ok(report);
    }
    let res = invariant_with_cut(&p, &file.omega, cut)?;
    report.line(format!("palette: {}", p.palette));
    report.line(format!("value: {}", res.value.display(&p.palette)));
    report.line(format!("r: {}", res.r));
    report.line(format!("sigma_plus: {}", res.sigma_plus));
    report.line(format!("terms: {}", res.terms));
    Ok(report)
}

fn closed_form_text(p: &PaletteSpec, m: i64, n: i64, u: &GroupElement, v: &GroupElement) -> String {
    let sp = sigma_plus(&[vec![m, -1], vec![-1, n]]).expect("symmetric");
    let sign = if sp % 2 == 0 { "-" } else { "" };
    format!("{sign}d({}) d({})", u.display(p), v.display(p))
}

fn class_text(p: &PaletteSpec, w: &CohomologyClass) -> String {
    let parts: Vec<String> = w.values().map(|g| g.display(p).to_string()).collect();
    format!("({})", parts.join(", "))
}

/// `gl11 lens`: state sum against the closed form, one row per class.
pub fn lens(m: i64, n: i64, palette: &PaletteSpec, omega: Option<&str>) -> Result<RunReport> {
    let p = Presentation::new(palette.clone(), lens_chain(m, n));
    let mut report = RunReport::new(format!("lens {m} {n} --palette {palette}"));
    let classes = match omega {
        Some(text) => {
            let parts: Vec<&str> = text.split(',').map(str::trim).collect();
            if parts.len() != 2 {
                bail!("--omega expects two elements `u,v`, got `{text}`");
            }
            let u = palette.parse_element(parts[0])?;
            let v = palette.parse_element(parts[1])?;
            vec![[("1".to_string(), u), ("2".to_string(), v)].into()]
        }
        None => enumerate_cohomology(&p)?,
    };
    report.line(format!("linking matrix: [[{m}, -1], [-1, {n}]]"));
    report.line(format!("classes: {}", classes.len()));
    for w in &classes {
        let (u, v) = (&w["1"], &w["2"]);
        let label = format!("omega={}", class_text(palette, w));
        let closed = match lens_closed_form(palette, m, n, u, v) {
            Ok(c) => c,
            Err(e) => {
                report.check(format!("{label}: {e}"), false);
                continue;
            }
        };
        let value = match invariant_with_cut(&p, w, None) {
            Ok(r) => r.value,
            Err(e) => {
                report.check(format!("{label}: {e}"), false);
                continue;
            }
        };
        report.line(format!("{label} state-sum: {}", value.display(palette)));
        report.line(format!(
            "{label} closed-form: {} = {}",
            closed_form_text(palette, m, n, u, v),
            closed.display(palette)
        ));
        report.check(format!("{label} agree"), value == closed);
    }
    Ok(report)
}

/// `gl11 verify-kirby`: every blow-up case and handle-slide pair under `dir`.
pub fn verify_kirby(dir: &Path) -> Result<RunReport> {
    let mut report = RunReport::new(format!("verify-kirby {}", dir.display()));
    if !dir.is_dir() {
        bail!("suite directory {} does not exist", dir.display());
    }
    let results = suite::verify(dir)?;
    if results.is_empty() {
        report.line("warning: 0 cases");
        return Ok(report);
    }
    let failed = results.iter().filter(|r| !r.passed).count();
    for r in results.iter() {
        let name = if r.detail.is_empty() { r.name.clone() } else { format!("{}: {}", r.name, r.detail) };
        report.check(name, r.passed);
    }
    report.footer.push(format!("{} cases, {failed} failed", results.len()));
    Ok(report)
}

/// `gl11 distinguish`: the L(7,1) value against all six L(7,2) values.
pub fn distinguish() -> Result<RunReport> {
    let pal = PaletteSpec::cyclotomic(7)?;
    let xi = pal.xi().expect("torsion palette");
    let mut report = RunReport::new("distinguish");
    let l71 = Presentation::new(pal.clone(), lens_chain(8, 1));
    let w0: CohomologyClass = [("1".to_string(), xi.clone()), ("2".to_string(), xi.clone())].into();
    let v0 = invariant_with_cut(&l71, &w0, None)?.value;
    report.line(format!(
        "L(7,1) omega0={}: {} = {}",
        class_text(&pal, &w0),
        closed_form_text(&pal, 8, 1, &xi, &xi),
        v0.display(&pal)
    ));
    let l72 = Presentation::new(pal.clone(), lens_chain(4, 2));
    let classes = enumerate_cohomology(&l72)?;
    let mut distinct = true;
    for (i, w) in classes.iter().enumerate() {
        let v = invariant_with_cut(&l72, w, None)?.value;
        let closed = lens_closed_form(&pal, 4, 2, &w["1"], &w["2"])?;
        report.line(format!(
            "L(7,2) omega{}={}: {} = {}",
            i + 1,
            class_text(&pal, w),
            closed_form_text(&pal, 4, 2, &w["1"], &w["2"]),
            v.display(&pal)
        ));
        report.check(format!("L(7,2) omega{} matches its closed form", i + 1), v == closed);
        let differs = v != v0;
        distinct &= differs;
        report.check(format!("L(7,2) omega{} differs from L(7,1) omega0", i + 1), differs);
    }
    report.footer.push(format!("verdict: {}", if distinct { "distinct" } else { "not distinguished" }));
    Ok(report)
}
