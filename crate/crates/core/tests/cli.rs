use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use nlie::cli::InputDocument;
use nlie::fixtures;
use serde_json::Value;

fn fixture(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures").join(name)
}

fn nlie(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_nlie")).args(args).output().unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8_lossy(&o.stderr).into_owned()
}

/// Write `doc` with one field replaced by `patch` and run `verify-algebra` on it.
fn run_patched(dir: &tempfile::TempDir, base: &str, patch: impl FnOnce(&mut Value)) -> Output {
    let mut doc: Value = serde_json::from_str(&std::fs::read_to_string(fixture(base)).unwrap()).unwrap();
    patch(&mut doc);
    let path = dir.path().join("in.json");
    std::fs::write(&path, serde_json::to_string(&doc).unwrap()).unwrap();
    let cmd = if doc.get("rep").is_some() { "verify-genrep" } else { "verify-algebra" };
    nlie(&[cmd, path.to_str().unwrap()])
}

#[test]
fn exit_codes() {
    let f = |n: &str| fixture(n).to_str().unwrap().to_owned();
    assert_eq!(code(&nlie(&["verify-algebra", &f("a4.json")])), 0);
    assert_eq!(code(&nlie(&["verify-algebra", &f("bad_jacobi.json")])), 1);
    assert_eq!(code(&nlie(&["verify-rep", &f("a4_adjoint.json")])), 0);
    assert_eq!(code(&nlie(&["verify-genrep", &f("trace_induced.json")])), 0);
    assert_eq!(code(&nlie(&["verify-rep", &f("a4.json")])), 2);
    assert_eq!(code(&nlie(&["verify-algebra", "/nonexistent/input.json"])), 2);
    assert_eq!(code(&nlie(&["cohomology", &f("a4_adjoint.json"), "--complex", "new", "--max-degree", "9"])), 2);
    assert_eq!(code(&nlie(&["cocycle-check", &f("so3_adjoint.json"), "--degree", "2"])), 2);
    assert_eq!(code(&nlie(&["cocycle-check", &f("a4_adjoint.json"), "--degree", "2", "--random", "1"])), 0);
    let printed = ["cocycle-check", &f("a4_adjoint.json"), "--degree", "2", "--random", "1", "--reading", "printed"];
    assert_eq!(code(&nlie(&printed)), 1);
    // clap usage errors
    assert_eq!(code(&nlie(&["bogus"])), 2);
    assert_eq!(code(&nlie(&["cocycle-check", &f("a4_adjoint.json"), "--degree", "3"])), 2);
    assert_eq!(code(&nlie(&["cohomology", &f("a4_adjoint.json")])), 2);
}

#[test]
fn cohomology_values_in_report() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("r.json");
    let o = nlie(&[
        "--quiet",
        "--out",
        out.to_str().unwrap(),
        "cohomology",
        fixture("so3_adjoint.json").to_str().unwrap(),
        "--complex",
        "classical",
    ]);
    assert_eq!(code(&o), 0);
    assert!(o.stdout.is_empty());
    let r: Value = serde_json::from_str(&std::fs::read_to_string(&out).unwrap()).unwrap();
    assert_eq!(r["format"], 1);
    assert_eq!(r["command"], "cohomology");
    assert_eq!(r["status"], "pass");
    let h: Vec<u64> = r["report"]["degrees"].as_array().unwrap().iter().map(|d| d["dim_h"].as_u64().unwrap()).collect();
    assert_eq!(h, vec![3, 0, 0]);
}

#[test]
fn field_path_errors() {
    let dir = tempfile::tempdir().unwrap();
    let cases: Vec<(&str, Box<dyn FnOnce(&mut Value)>, &str)> = vec![
        ("a4.json", Box::new(|d| d["format"] = 7.into()), "format: unsupported version 7"),
        ("a4.json", Box::new(|d| d["field"] = "real".into()), "field: unsupported field"),
        ("a4.json", Box::new(|d| d["arity"] = 1.into()), "arity: must be at least 2"),
        ("a4.json", Box::new(|d| d["brackets"][0]["args"] = serde_json::json!([1, 0, 2])), "brackets[0].args: non-increasing"),
        ("a4.json", Box::new(|d| d["brackets"][1]["args"] = serde_json::json!([0, 1, 9])), "brackets[1].args: index 9 out of range"),
        ("a4.json", Box::new(|d| d["brackets"][0]["args"] = serde_json::json!([0, 1])), "brackets[0].args: expected 3 indices"),
        ("a4.json", Box::new(|d| d["brackets"][0]["value"] = serde_json::json!({"x": 1})), "coordinate is not an index"),
        ("a4.json", Box::new(|d| d["brackets"][0]["value"] = serde_json::json!({"0": "1/0"})), "malformed scalar"),
        ("a4.json", Box::new(|d| {
            let first = d["brackets"][0].clone();
            d["brackets"].as_array_mut().unwrap().push(first);
        }), "duplicate bracket key"),
        ("a4_adjoint.json", Box::new(|d| d["rep"]["rho"][0]["matrix"] = serde_json::json!([[1]])), "rep.rho[0].matrix"),
        ("theta_example.json", Box::new(|d| d["theta"][0]["g"] = 5.into()), "theta[0].g"),
        ("a4.json", Box::new(|d| d["extra"] = 1.into()), "unknown field"),
    ];
    for (base, patch, needle) in cases {
        let o = run_patched(&dir, base, patch);
        assert_eq!(code(&o), 2, "{needle}: {}", stderr(&o));
        assert!(stderr(&o).contains(needle), "expected {needle:?} in {:?}", stderr(&o));
    }
}

#[test]
fn integer_and_text_scalars_agree() {
    let dir = tempfile::tempdir().unwrap();
    let o = run_patched(&dir, "a4.json", |d| {
        for b in d["brackets"].as_array_mut().unwrap() {
            for (_, v) in b["value"].as_object_mut().unwrap() {
                let n: i64 = v.as_str().unwrap().parse().unwrap();
                *v = n.into();
            }
        }
    });
    assert_eq!(code(&o), 0, "{}", stderr(&o));
}

#[test]
fn committed_fixtures_match_library() {
    let (a4, ad) = fixtures::a4_adjoint();
    let (ti, tg) = fixtures::trace_induced();
    let (th, thg) = fixtures::theta_example();
    let cases = [
        ("a4.json", InputDocument::from_structures(&fixtures::a4(), None)),
        ("bad_jacobi.json", InputDocument::from_structures(&fixtures::bad_jacobi(), None)),
        ("a4_adjoint.json", InputDocument::from_structures(&a4, Some(&ad))),
        ("trace_induced.json", InputDocument::from_structures(&ti, Some(&tg))),
        ("theta_example.json", InputDocument::from_structures(&th, Some(&thg))),
    ];
    for (name, doc) in cases {
        let text = std::fs::read_to_string(fixture(name)).unwrap();
        assert_eq!(text, doc.to_json(), "{name}");
        let parsed = InputDocument::from_json(&text).unwrap();
        assert_eq!(parsed, doc);
        let built = parsed.build().unwrap();
        assert_eq!(InputDocument::from_structures(&built.algebra, built.genrep.as_ref()), doc, "{name}");
    }
}

#[test]
fn seeds_are_deterministic_and_matter() {
    let dir = tempfile::tempdir().unwrap();
    let input = fixture("trace_induced.json");
    let run = |seed: &str, name: &str| {
        let out = dir.path().join(name);
        let o = nlie(&[
            "--quiet",
            "--out",
            out.to_str().unwrap(),
            "cocycle-check",
            input.to_str().unwrap(),
            "--degree",
            "1",
            "--random",
            "3",
            "--seed",
            seed,
        ]);
        assert_eq!(code(&o), 0);
        std::fs::read(out).unwrap()
    };
    let a = run("7", "a.json");
    assert_eq!(a, run("7", "b.json"));
    assert_ne!(a, run("8", "c.json"));
}

#[test]
fn summary_goes_to_stdout_unless_quiet() {
    let f = fixture("a4.json");
    let o = nlie(&["verify-algebra", f.to_str().unwrap()]);
    assert!(String::from_utf8_lossy(&o.stdout).starts_with("verify-algebra: PASS"));
    let o = nlie(&["-q", "verify-algebra", f.to_str().unwrap()]);
    assert!(o.stdout.is_empty());
    let o = nlie(&["--out", "/nonexistent/dir/r.json", "verify-algebra", f.to_str().unwrap()]);
    assert_eq!(code(&o), 2);
}
