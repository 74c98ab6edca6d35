use std::path::{Path, PathBuf};
use std::process::Command as Process;

use doublealg::cli::print::print_model;
use doublealg::cli::report::Report;
use doublealg::cli::run::RunOptions;
use doublealg::cli::{emit_report, parse_model, run, Command, Format, Object};
use doublealg::Error;

fn examples() -> Vec<PathBuf> {
    let dir = Path::new(env!("CARGO_MANIFEST_DIR")).join("examples");
    let mut v: Vec<PathBuf> = std::fs::read_dir(dir)
        .unwrap()
        .map(|e| e.unwrap().path())
        .filter(|p| matches!(p.extension().and_then(|e| e.to_str()), Some("pass" | "fail")))
        .collect();
    v.sort();
    assert!(v.len() >= 10);
    v
}

fn verb(text: &str) -> Command {
    let line = text.lines().next().unwrap();
    let v = line.strip_prefix("# verb:").expect("verb header");
    let parts: Vec<&str> = v.split_whitespace().collect();
    Command::parse(parts[0], parts[1]).unwrap()
}

fn run_file(path: &Path, seed: u64) -> Report {
    let text = std::fs::read_to_string(path).unwrap();
    let model = parse_model(&text).unwrap();
    run(&verb(&text), &model, text.as_bytes(), RunOptions { seed, timings: false }).unwrap()
}

#[test]
fn examples_match_their_suffix() {
    for p in examples() {
        let r = run_file(&p, 0);
        let want = p.extension().unwrap() == "pass";
        assert_eq!(r.passed(), want, "{}: {}", p.display(), emit_report(&r, Format::Text));
        if !want {
            let failed = r.checks.iter().find(|c| c.verdict == "fail").unwrap();
            assert!(failed.witness.is_some(), "{}", p.display());
        }
    }
}

#[test]
fn binary_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_doublealg");
    for p in examples() {
        let text = std::fs::read_to_string(&p).unwrap();
        let words: Vec<&str> = text.lines().next().unwrap()["# verb:".len()..].split_whitespace().collect();
        let out = Process::new(bin).args([words[0], words[1]]).arg(&p).output().unwrap();
        let want = if p.extension().unwrap() == "pass" { 0 } else { 1 };
        assert_eq!(out.status.code(), Some(want), "{}", p.display());
    }
    let any = &examples()[0];
    let out = Process::new(bin).args(["frobnicate", "double"]).arg(any).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
    let out = Process::new(bin).args(["check", "nothing"]).arg(any).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
    let out = Process::new(bin).args(["check", "double", "/nonexistent/model"]).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn reports_are_deterministic() {
    for p in examples() {
        for format in [Format::Text, Format::Json] {
            let a = emit_report(&run_file(&p, 3), format);
            let b = emit_report(&run_file(&p, 3), format);
            assert_eq!(a, b, "{}", p.display());
        }
    }
}

#[test]
fn json_reports_round_trip() {
    for p in examples() {
        let r = run_file(&p, 0);
        let s = emit_report(&r, Format::Json);
        let back: Report = serde_json::from_str(&s).unwrap();
        assert_eq!(back, r);
        assert_eq!(emit_report(&back, Format::Json), s);
    }
}

#[test]
fn printed_models_reparse_to_equal_objects() {
    for p in examples() {
        let text = std::fs::read_to_string(&p).unwrap();
        let model = parse_model(&text).unwrap();
        let printed = print_model(&model);
        let again = parse_model(&printed).unwrap_or_else(|e| panic!("{}: {e}\n{printed}", p.display()));
        for (name, o) in &model.items {
            assert_eq!(again.get(name), Some(o), "{}: {name}", p.display());
        }
        assert_eq!(print_model(&again), printed);
    }
}

#[test]
fn build_outputs_are_models() {
    for p in examples() {
        let r = run_file(&p, 0);
        let text: String = r.outputs.iter().map(|o| o.text.clone() + "\n").collect();
        parse_model(&text).unwrap_or_else(|e| panic!("{}: {e}\n{text}", p.display()));
        // The text report of a build is itself a model file.
        parse_model(&emit_report(&r, Format::Text)).unwrap();
    }
}

#[test]
fn drinfeld_output_passes_check_manin() {
    let p = Path::new(env!("CARGO_MANIFEST_DIR")).join("examples/solvable_drinfeld.pass");
    let text = std::fs::read_to_string(p).unwrap();
    let model = parse_model(&text).unwrap();
    let built = run(&Command::parse("build", "drinfeld").unwrap(), &model, text.as_bytes(), RunOptions::default()).unwrap();
    let out = emit_report(&built, Format::Text);
    let m = parse_model(&out).unwrap();
    let r = run(&Command::parse("check", "manin").unwrap(), &m, out.as_bytes(), RunOptions::default()).unwrap();
    assert!(r.passed());
    assert_eq!(r.checks.len(), 1);
}

#[test]
fn perturbed_tangent_square_fails_at_the_bialgebroid_check() {
    let p = Path::new(env!("CARGO_MANIFEST_DIR")).join("examples/tangent_square_perturbed.fail");
    let r = run_file(&p, 0);
    let ids: Vec<(&str, &str)> = r.checks.iter().map(|c| (c.id.as_str(), c.verdict.as_str())).collect();
    assert_eq!(
        ids,
        [
            ("double T2M: vertical lavb", "pass"),
            ("double T2M: horizontal lavb", "pass"),
            ("double T2M: bialgebroid", "fail"),
        ]
    );
}

#[test]
fn empty_file_is_an_empty_model() {
    assert!(parse_model("").unwrap().is_empty());
    assert!(parse_model("# only a comment\n\n").unwrap().is_empty());
}

#[test]
fn bialgebra_example_parses_to_a_bialgebra() {
    let p = Path::new(env!("CARGO_MANIFEST_DIR")).join("examples/solvable_bialgebra.pass");
    let model = parse_model(&std::fs::read_to_string(p).unwrap()).unwrap();
    match model.get("delta") {
        Some(Object::Cobracket(b)) => {
            assert_eq!(b, &doublealg::catalog::solvable_bialgebra());
        }
        other => panic!("{other:?}"),
    }
}

fn parse_error(text: &str) -> (usize, usize, String) {
    match parse_model(text) {
        Err(Error::Parse { line, column, message }) => (line, column, message),
        other => panic!("{other:?}"),
    }
}

#[test]
fn diagonal_bracket_is_a_schema_error() {
    let (line, col, msg) = parse_error("[lie_algebra g]\nbasis = e1, e2\nbracket(e1,e1) = e2\n");
    assert_eq!((line, col), (3, 18));
    assert!(msg.contains("antisymmetry"), "{msg}");
    let (line, _, msg) = parse_error("[chart M]\ncoords = x\n[algebroid L]\nchart = M\nframes = e1, e2\nbracket(e1, e1) = x * e2\n");
    assert_eq!(line, 6);
    assert!(msg.contains("antisymmetry"), "{msg}");
}

#[test]
fn inconsistent_duplicate_brackets_are_rejected() {
    let (line, _, msg) = parse_error("[lie_algebra g]\nbasis = e1, e2\nbracket(e1, e2) = e2\nbracket(e2, e1) = e2\n");
    assert_eq!(line, 4);
    assert!(msg.contains("inconsistent"), "{msg}");
    // The same bracket written both ways is fine.
    parse_model("[lie_algebra g]\nbasis = e1, e2\nbracket(e1, e2) = e2\nbracket(e2, e1) = -e2\n").unwrap();
}

#[test]
fn errors_carry_positions() {
    assert_eq!(parse_error("coords = x\n").0, 1);
    let (line, col, msg) = parse_error("[chart M]\ncoords = x\n\n[algebroid L]\nchart = N\n");
    assert_eq!((line, col), (5, 9));
    assert!(msg.contains("unresolved reference"));
    let (line, col, _) = parse_error("[chart M]\ncoords = x\n[algebroid L]\nchart = M\nframes = e\nanchor(e) = x + * d/dx\n");
    assert_eq!((line, col), (6, 17));
    let (_, _, msg) = parse_error("[widget W]\n");
    assert!(msg.contains("unknown block kind"));
    let (line, _, msg) = parse_error("[chart M]\ncoords = x\ncolor = red\n");
    assert_eq!(line, 3);
    assert!(msg.contains("unknown key"));
}
