use mcgkit::cli::run;
use serde_json::{json, Value};
use std::path::{Path, PathBuf};
use std::process::Command;

fn mcgkit(args: &[&str]) -> (i32, String) {
    let mut all = vec!["mcgkit"];
    all.extend_from_slice(args);
    let out = run(all);
    (out.code, out.stdout)
}

fn ok(args: &[&str]) -> Value {
    let (code, out) = mcgkit(args);
    assert_eq!(code, 0, "{args:?}: {out}");
    serde_json::from_str(&out).unwrap()
}

fn write(dir: &Path, name: &str, v: &Value) -> PathBuf {
    let p = dir.join(name);
    std::fs::write(&p, v.to_string()).unwrap();
    p
}

fn torus_curve(edge: usize) -> Value {
    json!({"surface": "canonical:1,0,0", "word": [{"edge": edge, "pos": 0, "dir": 1}]})
}

#[test]
fn documented_examples() {
    let (code, out) = mcgkit(&["centre", "--genus", "1", "--boundary", "1", "--punctures", "0"]);
    assert_eq!(code, 0);
    assert_eq!(out.trim(), r#"{"centre":{"type":"cyclic-infinite","generator":"rho"}}"#);
    let dir = tempfile::tempdir().unwrap();
    let a = write(dir.path(), "a.json", &torus_curve(0));
    let b = write(dir.path(), "b.json", &torus_curve(1));
    let (code, out) = mcgkit(&["isect", a.to_str().unwrap(), b.to_str().unwrap()]);
    assert_eq!((code, out.trim()), (0, r#"{"i":1}"#));
}

#[test]
fn verification_is_reproducible() {
    let args = ["verify", "twist-formula", "--trials", "50", "--seed", "7"];
    let (c1, first) = mcgkit(&args);
    let (c2, second) = mcgkit(&args);
    assert_eq!((c1, c2), (0, 0));
    assert_eq!(first, second);
    let v: Value = serde_json::from_str(&first).unwrap();
    assert_eq!(v["passed"], 50);
    assert_eq!(v["counterexample"], Value::Null);
    let other = ok(&["verify", "twist-formula", "--trials", "50", "--seed", "8"]);
    assert_eq!(other["seed"], 8);
}

#[test]
fn emitted_values_parse_back() {
    let dir = tempfile::tempdir().unwrap();
    let s = ok(&["surface", "--genus", "1", "--boundary", "1", "--punctures", "2"]);
    let f = write(dir.path(), "s.json", &s["surface"]);
    let again = ok(&["surface", "--file", f.to_str().unwrap()]);
    assert_eq!(again, s);
    assert_eq!(s["spec"], json!({"genus": 1, "boundary_count": 1, "puncture_count": 2}));

    let a = write(dir.path(), "a.json", &torus_curve(0));
    let b = write(dir.path(), "b.json", &torus_curve(1));
    let t = ok(&["twist", "--along", a.to_str().unwrap(), "--power", "-2", b.to_str().unwrap()]);
    let tc = write(dir.path(), "t.json", &t["curve"]);
    let described = ok(&["curve", tc.to_str().unwrap()]);
    assert_eq!(described["curve"], t["curve"]);
    assert_eq!(described["homology"], json!([-2, 1]));
    let i = ok(&["isect", tc.to_str().unwrap(), b.to_str().unwrap()]);
    assert_eq!(i["i"], 2);

    let listed = ok(&["curve", "--list", "2", "--genus", "1"]);
    for w in listed["curves"].as_array().unwrap() {
        let c = write(dir.path(), "c.json", &json!({"surface": listed["surface"], "word": w}));
        assert_eq!(ok(&["curve", c.to_str().unwrap()])["essential"], true);
    }
}

#[test]
fn twist_words_over_a_registry() {
    let dir = tempfile::tempdir().unwrap();
    let reg = json!({
        "surface": "canonical:1,0,0",
        "curves": {"A": [{"edge": 0, "pos": 0, "dir": 1}], "B": [{"edge": 1, "pos": 0, "dir": 1}]}
    });
    let r = write(dir.path(), "r.json", &reg);
    let r = r.to_str().unwrap();
    assert_eq!(ok(&["twist", "--registry", r, "--word", "A B A B^-1 A^-1 B^-1", "--identity"])["identity"], true);
    assert_eq!(ok(&["twist", "--registry", r, "--word", "A B", "--identity"])["identity"], false);
    let (code, out) = mcgkit(&["twist", "--registry", r, "--word", "Z", "--identity"]);
    assert_eq!(code, 1);
    assert_eq!(serde_json::from_str::<Value>(&out).unwrap()["error"]["kind"], "unknown-curve");
    let (code, _) = mcgkit(&["twist", "--registry", r, "--word", "A^x", "--identity"]);
    assert_eq!(code, 2);
}

#[test]
fn classify_symbolic_and_concrete() {
    let dir = tempfile::tempdir().unwrap();
    let sym = json!({
        "ambient": {"genus": 0, "boundary_count": 0, "puncture_count": 2},
        "sub": {"genus": 0, "boundary_count": 1, "puncture_count": 2},
        "complement_components": [{"genus": 0, "punctures": 0, "boundary_to_n": ["c"], "boundary_to_m": 0}]
    });
    let f = write(dir.path(), "sym.json", &sym);
    let v = ok(&["classify", f.to_str().unwrap()]);
    assert_eq!(v["injective"], false);

    // two parallel copies of a nonseparating curve on the punctured torus
    let w = json!([{"edge": 1, "pos": 0, "dir": 1}, {"edge": 0, "pos": 0, "dir": -1}]);
    let punctured = json!({"surface": "canonical:1,0,1", "boundary": [w, w], "side": {"left_of": 0}});
    let empty = json!({"surface": "canonical:1,0,1", "boundary": [w, w], "side": {"right_of": 0}});
    let p = write(dir.path(), "p.json", &punctured);
    let e = write(dir.path(), "e.json", &empty);
    let v = ok(&["classify", p.to_str().unwrap()]);
    assert_eq!(v["sub"], json!({"genus": 0, "boundary_count": 2, "puncture_count": 1}));
    assert_eq!(v["kernel"]["rank"], 1);
    let v = ok(&["classify", e.to_str().unwrap()]);
    assert_eq!(v["marked_injective"], true);
    assert_eq!(v["stabilizer"]["maps"], json!(["theta", "iota", "tau"]));
}

#[test]
fn exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let junk = dir.path().join("junk.json");
    std::fs::write(&junk, "{").unwrap();
    let (code, out) = mcgkit(&["curve", junk.to_str().unwrap()]);
    assert_eq!(code, 2);
    assert_eq!(serde_json::from_str::<Value>(&out).unwrap()["error"]["kind"], "malformed-input");
    let bad = write(dir.path(), "bad.json", &json!({"surface": "canonical:1,0,0", "word": [{"edge": 7, "pos": 0, "dir": 1}]}));
    let (code, out) = mcgkit(&["curve", bad.to_str().unwrap()]);
    assert_eq!(code, 1);
    assert_eq!(serde_json::from_str::<Value>(&out).unwrap()["error"]["kind"], "invalid-curve");
    assert_eq!(mcgkit(&["frobnicate"]).0, 2);
    assert_eq!(mcgkit(&["--help"]).0, 0);
}

#[test]
fn binary_reads_the_fixture_directory() {
    let dir = tempfile::tempdir().unwrap();
    let cwd = tempfile::tempdir().unwrap();
    write(dir.path(), "a.json", &torus_curve(0));
    write(dir.path(), "b.json", &torus_curve(1));
    let out = Command::new(env!("CARGO_BIN_EXE_mcgkit"))
        .args(["isect", "a.json", "b.json"])
        .env("MCGKIT_FIXTURES", dir.path())
        .current_dir(cwd.path())
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(String::from_utf8(out.stdout).unwrap().trim(), r#"{"i":1}"#);
    let missing = Command::new(env!("CARGO_BIN_EXE_mcgkit"))
        .args(["isect", "nope.json", "b.json"])
        .current_dir(cwd.path())
        .output().unwrap();
    assert_eq!(missing.status.code(), Some(2));
}
