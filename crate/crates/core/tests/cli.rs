use std::path::Path;

use cliffkit::cech::examples;
use cliffkit::cli;
use cliffkit::repr::{self, AnyRep};
use cliffkit::verify;
use serde_json::{json, Value};

struct Run {
    code: i32,
    out: String,
    err: String,
}

fn run(args: &[&str]) -> Run {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("cliffkit").chain(args.iter().copied());
    let code = cli::run(argv, &mut out, &mut err);
    Run { code, out: String::from_utf8(out).unwrap(), err: String::from_utf8(err).unwrap() }
}

fn write(dir: &Path, name: &str, v: &Value) -> String {
    let path = dir.join(name);
    std::fs::write(&path, v.to_string()).unwrap();
    path.to_str().unwrap().to_string()
}

fn read(path: &Path) -> Value {
    serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap()
}

#[test]
fn classify_prints_the_target() {
    let r = run(&["classify", "1", "3"]);
    assert_eq!((r.code, r.out.as_str()), (0, "Mat(2,H)\n"));
    assert_eq!(run(&["classify", "0", "3"]).out, "Mat(1,H)⊕Mat(1,H)\n");
}

#[test]
fn usage_errors_exit_with_two() {
    assert_eq!(run(&["classify", "1"]).code, 2);
    assert_eq!(run(&["classify", "1", "3", "--bogus"]).code, 2);
    assert_eq!(run(&["frobnicate"]).code, 2);
    assert_eq!(run(&["compile", "1", "1", "--complex", "2"]).code, 2);
    assert_eq!(run(&["compile", "--complex", "3"]).code, 2);
    assert_eq!(run(&["zeta", "--sig", "2;0", "--versor", "x.json"]).code, 2);
    let missing = run(&["cech", "betti", "/nonexistent/complex.json", "--k", "2"]);
    assert_eq!(missing.code, 2);
    assert!(missing.err.contains("cannot read"));
    assert_eq!(run(&["--help"]).code, 0);
}

#[test]
fn compile_verifies_and_writes_a_readable_model() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("rep.json");
    let r = run(&["compile", "3", "1", "--verify", "--json", path.to_str().unwrap()]);
    assert_eq!(r.code, 0, "{}", r.err);
    assert!(r.out.starts_with("C(3,1) -> Mat(4,R)\n"));
    assert!(r.out.contains("relations: verified\n"));
    let v = read(&path);
    assert_eq!(v["ok"], true);
    let rep = AnyRep::from_json(&v["result"]).unwrap();
    assert_eq!(rep.to_json(), repr::compile_rep(cliffkit::algebra::Signature::new(3, 1)).to_json());

    let c = run(&["compile", "--complex", "4", "--verify"]);
    assert_eq!(c.code, 0);
    assert!(c.out.starts_with("CC(4) -> Mat(4,C)\n"));
}

#[test]
fn zeta_decompose_and_lift() {
    let dir = tempfile::tempdir().unwrap();
    let vec_json = |c: &[(usize, &str)]| {
        let terms: Vec<Value> = c.iter().map(|&(b, x)| json!({"blade": [b], "coeff": x})).collect();
        json!({"signature": [1, 1], "ring": "rational", "terms": terms})
    };
    let versor = write(dir.path(), "versor.json", &json!([vec_json(&[(1, "1")]), vec_json(&[(1, "2"), (2, "1")])]));
    let r = run(&["zeta", "--sig", "1,1", "--versor", &versor]);
    assert_eq!(r.code, 0, "{}", r.err);
    assert!(r.out.contains("det = 1"));

    let boost = write(dir.path(), "boost.json", &json!([["5/3", "4/3"], ["4/3", "5/3"]]));
    let out = dir.path().join("d.json");
    let d = run(&["decompose", "--sig", "1,1", "--matrix", &boost, "--json", out.to_str().unwrap()]);
    assert_eq!(d.code, 0, "{}", d.err);
    assert!(d.out.contains("recomposition: exact"));
    assert_eq!(read(&out)["result"]["vectors"].as_array().unwrap().len(), 2);

    let l = run(&["lift", "--sig", "1,1", "--matrix", &boost]);
    assert_eq!(l.code, 0);
    assert!(l.out.contains("zeta(g) = M: verified"));
    assert!(l.out.contains("parity: even"));

    let shear = write(dir.path(), "shear.json", &json!([["1", "1"], ["0", "1"]]));
    let bad = run(&["decompose", "--sig", "2,0", "--matrix", &shear]);
    assert_eq!(bad.code, 1);
    assert!(bad.out.starts_with("fail at "));
    assert_eq!(run(&["lift", "--sig", "2,1", "--matrix", &shear]).code, 2);
}

#[test]
fn spinor_spaces() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("s.json");
    let r = run(&["spinor", "--complex", "4", "--model", "--json", out.to_str().unwrap()]);
    assert_eq!(r.code, 0, "{}", r.err);
    assert!(r.out.contains("dim = 4 (minimal)"));
    assert!(r.out.contains("intertwiner to column model: verified"));
    let v = read(&out);
    assert_eq!(v["result"]["dim"], 4);
    assert_eq!(v["result"]["basis"].as_array().unwrap().len(), 4);

    let half = json!({"complex_dim": 4, "ring": "gaussian", "terms": [{"blade": [], "coeff": "1/2"}, {"blade": [1], "coeff": "1/2"}]});
    let file = write(dir.path(), "p.json", &half);
    let r = run(&["spinor", "--complex", "4", "--idempotent", &file]);
    assert_eq!(r.code, 0, "{}", r.err);
    assert!(r.out.contains("dim = 8 (not minimal)"));
    assert_eq!(run(&["spinor", "--complex", "2", "--idempotent", &file]).code, 2);
}

#[test]
fn cech_commands() {
    let dir = tempfile::tempdir().unwrap();
    let rp2 = examples::projective_plane();
    let file = write(dir.path(), "rp2.json", &rp2.to_json());
    let r = run(&["cech", "betti", &file, "--k", "2"]);
    assert_eq!((r.code, r.out.as_str()), (0, "1\n"));
    assert_eq!(run(&["cech", "betti", &file, "--k", "1"]).out, "1\n");

    let c = cliffkit::cech::cohomology_representatives(&rp2, 1).remove(0);
    let twisted = verify::sign_twisted_cocycle(&rp2, &c);
    let file = write(dir.path(), "twisted.json", &twisted.to_json());
    assert_eq!(run(&["cech", "check", &file]).code, 0);
    let out = dir.path().join("lift.json");
    let l = run(&["cech", "lift", &file, "--json", out.to_str().unwrap()]);
    assert_eq!(l.code, 1);
    assert!(l.out.contains("obstructed"));
    let v = read(&out);
    assert_eq!(v["ok"], false);
    assert_eq!(v["result"]["lifted"], false);

    let sphere = cliffkit::cech::GroupCocycle::trivial(examples::tetrahedron_boundary(), cliffkit::algebra::Signature::new(2, 0));
    let file = write(dir.path(), "sphere.json", &sphere.to_json());
    let l = run(&["cech", "lift", &file]);
    assert_eq!(l.code, 0);
    assert!(l.out.starts_with("lift exists; 1 inequivalent lifts"));

    // break the cocycle condition on one edge
    let mut broken = sphere.to_json();
    broken["edges"][0]["matrix"] = json!([["-1", "0"], ["0", "1"]]);
    let file = write(dir.path(), "broken.json", &broken);
    let b = run(&["cech", "check", &file]);
    assert_eq!(b.code, 1);
    assert!(b.out.contains("fail at triangle"));
}

#[test]
fn verify_all_is_deterministic_and_passes() {
    let first = run(&["verify-all", "--seed", "0"]);
    assert_eq!(first.code, 0, "{}", first.out);
    assert_eq!(first.out.lines().filter(|l| l.contains("  pass  ")).count(), 11);
    assert!(first.out.ends_with("11/11 criteria passed\n"));
    let second = run(&["verify-all", "--seed", "0"]);
    assert_eq!(first.out, second.out);
}

#[test]
fn seed_falls_back_to_the_environment() {
    use clap::Parser;
    std::env::set_var("CLIFFKIT_SEED", "17");
    let cli = cli::Cli::try_parse_from(["cliffkit", "classify", "1", "1"]).unwrap();
    assert_eq!(cli.seed, 17);
    let cli = cli::Cli::try_parse_from(["cliffkit", "--seed", "3", "classify", "1", "1"]).unwrap();
    assert_eq!(cli.seed, 3);
    std::env::remove_var("CLIFFKIT_SEED");
}
