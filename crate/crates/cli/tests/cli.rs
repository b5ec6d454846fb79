use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn gl11(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_gl11")).args(args).env_remove("GL11_SUITE_DIR").output().unwrap()
}

fn data(name: &str) -> String {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("data").join(name).to_string_lossy().into_owned()
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn stderr(o: &Output) -> String {
    String::from_utf8_lossy(&o.stderr).into_owned()
}

#[test]
fn shipped_suite_matches_generator() {
    let dir = gl11_cli::suite::default_dir();
    let files = gl11_cli::suite::generate().unwrap();
    for (rel, text) in &files {
        let on_disk = fs::read_to_string(dir.join(rel)).unwrap_or_default();
        assert_eq!(&on_disk, text, "{} is stale; rerun the gen_suite example", rel.display());
    }
    let mut shipped = 0;
    for sub in [gl11_cli::suite::PRESENTATIONS, gl11_cli::suite::SLIDES] {
        shipped += fs::read_dir(dir.join(sub)).unwrap().count();
    }
    assert_eq!(shipped, files.len(), "suite holds files the generator does not produce");
}

#[test]
fn eval_hopf_and_unknot() {
    let o = gl11(&["eval", &data("hopf.morse")]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("value: -u^6*v^4\n"), "{}", stdout(&o));
    let o = gl11(&["eval", &data("unknot.morse")]);
    assert!(stdout(&o).contains("value: t^2/(t^4 - 1)\n"));
    let o = gl11(&["eval", "--cut", "2", &data("hopf.morse")]);
    assert!(stdout(&o).contains("value: -u^6*v^4\n"));
}

#[test]
fn malformed_input_exits_2_with_line() {
    let o = gl11(&["eval", &data("malformed.morse")]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("line 2, column 6"), "{}", stderr(&o));
    let o = gl11(&["eval", "/nonexistent/file.morse"]);
    assert_eq!(o.status.code(), Some(2));
    let o = gl11(&["eval", "--palette", "xi4", &data("unknot.morse")]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn invariant_of_shipped_lens_spaces() {
    let suite = gl11_cli::suite::default_dir().join("presentations");
    let o = gl11(&["invariant", &suite.join("lens_7_1.morse").to_string_lossy()]);
    assert!(o.status.success());
    let out = stdout(&o);
    let expected = gl11(&["lens", "8", "1", "--palette", "xi7", "--omega", "xi,xi"]);
    let closed = stdout(&expected)
        .lines()
        .find(|l| l.contains("closed-form"))
        .and_then(|l| l.rsplit(" = ").next())
        .unwrap()
        .to_string();
    assert!(out.contains(&format!("value: {closed}\n")), "{out}");
    assert!(out.contains("r: 2\nsigma_plus: 2\nterms: 4\n"));
}

#[test]
fn invariant_rejects_trivial_meridian() {
    let o = gl11(&["invariant", &data("not_computable.morse")]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("presentation is not computable"));
}

#[test]
fn lens_tables() {
    let o = gl11(&["lens", "8", "1", "--palette", "xi7", "--enumerate"]);
    assert!(o.status.success());
    let out = stdout(&o);
    assert_eq!(out.lines().filter(|l| l.starts_with("PASS") && l.ends_with("agree")).count(), 6);
    assert!(out.contains("omega=(xi, xi) state-sum"));
    let o = gl11(&["lens", "4", "2", "--palette", "xi7"]);
    let out = stdout(&o);
    for class in ["(xi^2, xi)", "(xi^4, xi^2)", "(xi^6, xi^3)", "(xi, xi^4)", "(xi^3, xi^5)", "(xi^5, xi^6)"] {
        assert!(out.contains(&format!("PASS omega={class} agree")), "{class}\n{out}");
    }
    let o = gl11(&["lens", "4", "2", "--palette", "xi7", "--omega", "xi,xi"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("u^4*v^-1 = 1 fails"));
    let o = gl11(&["lens", "2", "1", "--palette", "xi7"]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("classes: 0"));
}

#[test]
fn distinguish_verdict() {
    let o = gl11(&["distinguish"]);
    assert!(o.status.success());
    let out = stdout(&o);
    assert!(out.ends_with("verdict: distinct\n"));
    assert_eq!(out.lines().filter(|l| l.starts_with("PASS")).count(), 12);
}

#[test]
fn output_is_deterministic() {
    let a = gl11(&["lens", "3", "2", "--palette", "xi5"]);
    let b = gl11(&["lens", "3", "2", "--palette", "xi5"]);
    assert_eq!(a.stdout, b.stdout);
}

fn copy_pair(dst: &Path, stem: &str) -> PathBuf {
    let src = gl11_cli::suite::default_dir().join("handle_slides");
    let dir = dst.join("handle_slides");
    fs::create_dir_all(&dir).unwrap();
    for end in ["before", "after"] {
        let name = format!("{stem}.{end}.morse");
        fs::copy(src.join(&name), dir.join(&name)).unwrap();
    }
    dir.join(format!("{stem}.after.morse"))
}

#[test]
fn verify_kirby_negative_control_and_empty_dir() {
    let tmp = tempfile::tempdir().unwrap();
    let after = copy_pair(tmp.path(), "lens_7_2_slide_1_over_2_l");
    let o = Command::new(env!("CARGO_BIN_EXE_gl11"))
        .arg("verify-kirby")
        .env("GL11_SUITE_DIR", tmp.path())
        .output()
        .unwrap();
    assert!(o.status.success(), "{}", stdout(&o));
    assert!(stdout(&o).contains("PASS lens_7_2_slide_1_over_2_l handle slide"));
    // one extra kink on the after side changes a framing
    let text = fs::read_to_string(&after).unwrap().replacen("cap> 0\n", "cup> 1 1\nx+ 0\ncap< 1\ncap> 0\n", 1);
    fs::write(&after, text).unwrap();
    let o = gl11(&["verify-kirby", &tmp.path().to_string_lossy()]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("FAIL lens_7_2_slide_1_over_2_l handle slide"), "{}", stdout(&o));

    let empty = tempfile::tempdir().unwrap();
    let o = gl11(&["verify-kirby", &empty.path().to_string_lossy()]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("warning: 0 cases"));
}

#[test]
fn verify_kirby_shipped_suite() {
    let o = gl11(&["verify-kirby"]);
    assert!(o.status.success(), "{}", stdout(&o));
    assert!(!stdout(&o).contains("FAIL"));
    assert!(stdout(&o).ends_with(" cases, 0 failed\n"));
}
