//! End-to-end tests against the built binary: exit codes, output layout,
//! determinism, and the construct/verify/fgdelta file round trip.

use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn bin() -> Command {
    let mut c = Command::new(env!("CARGO_BIN_EXE_lieforge"));
    c.env_remove("LIEFORGE_MAX_DIM");
    c
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).expect("utf8 output")
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("no signal")
}

/// The JSON document after the `---` separator.
fn machine(o: &Output) -> Value {
    let text = stdout(o);
    let (_, tail) = text.split_once("\n---\n").expect("separator present");
    serde_json::from_str(tail).expect("machine block is json")
}

#[test]
fn check_reports_structure_of_sl2() {
    let o = run(&["check", "sl2"]);
    assert_eq!(code(&o), 0);
    let text = stdout(&o);
    assert!(text.contains("perfect: true"));
    assert!(text.contains("radical dim: 0"));
    let m = machine(&o);
    assert_eq!(m["status"], "ok");
    assert_eq!(m["result"]["perfect"], true);
    assert_eq!(m["result"]["killing_rank"], 3);
    assert_eq!(m["inputs"][0]["role"], "algebra");
    assert_eq!(m["inputs"][0]["source"], "fixture:sl2");
    assert!(m["inputs"][0]["sha256"].as_str().unwrap().len() == 64);
}

#[test]
fn check_reports_structure_of_aff1() {
    let o = run(&["check", "aff1"]);
    assert_eq!(code(&o), 0);
    let text = stdout(&o);
    assert!(text.contains("perfect: false"));
    assert!(text.contains("radical dim: 2"));
}

#[test]
fn malformed_bracket_order_is_a_parse_error() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.json");
    std::fs::write(
        &path,
        r#"{"name":"bad","dim":2,"basis":["x","y"],"brackets":[{"i":1,"j":0,"coeffs":[[0,"1"]]}]}"#,
    )
    .unwrap();
    let o = run(&["check", path.to_str().unwrap()]);
    assert_eq!(code(&o), 2);
    let text = stdout(&o);
    assert!(text.contains("brackets[0]"), "position missing: {text}");
    assert!(text.contains("i < j"), "rule missing: {text}");
    assert_eq!(machine(&o)["status"], "error");
}

#[test]
fn unknown_fixture_is_an_input_error() {
    let o = run(&["check", "no-such-fixture"]);
    assert_eq!(code(&o), 2);
    assert!(stdout(&o).contains("unknown fixture"));
}

#[test]
fn bider_dimensions_match_known_cases() {
    let cases = [("sl2-vm:2", 0), ("abelian:2", 6), ("aff1", 3)];
    for (name, dim) in cases {
        let o = run(&["bider", name, "--adjoint", "--symmetric"]);
        assert_eq!(code(&o), 0, "{name}");
        assert_eq!(machine(&o)["result"]["dimension"], dim, "{name}");
    }
}

#[test]
fn bider_oracle_agrees_on_aff1() {
    let o = run(&["bider", "aff1", "--adjoint", "--symmetric", "--oracle"]);
    assert_eq!(code(&o), 0);
    let m = machine(&o);
    assert_eq!(m["result"]["oracle"]["agrees"], true);
    assert_eq!(m["result"]["oracle"]["dimension"], 3);
}

#[test]
fn bider_basis_dump_lists_members() {
    let o = run(&["bider", "abelian:2", "--adjoint", "--symmetric", "--basis"]);
    assert_eq!(code(&o), 0);
    let m = machine(&o);
    let basis = m["result"]["basis"].as_array().unwrap();
    assert_eq!(basis.len(), 6);
    assert_eq!(basis[0]["left_dim"], 2);
    assert_eq!(basis[0]["module_dim"], 2);
}

#[test]
fn reruns_are_byte_identical() {
    let args = ["bider", "aff1", "--adjoint", "--symmetric", "--oracle", "--basis"];
    let first = run(&args);
    let second = run(&args);
    assert_eq!(code(&first), 0);
    assert_eq!(first.stdout, second.stdout);
}

#[test]
fn construct_oscillator_writes_a_checkable_algebra() {
    let dir = tempfile::tempdir().unwrap();
    let o = run(&["construct", "oscillator", "--out", dir.path().to_str().unwrap()]);
    assert_eq!(code(&o), 0);
    let written = machine(&o)["result"]["written"].clone();
    assert_eq!(written.as_array().unwrap().len(), 1);
    let path = dir.path().join("oscillator.algebra.json");
    assert!(path.is_file());
    let check = run(&["check", path.to_str().unwrap()]);
    assert_eq!(code(&check), 0);
    let text = stdout(&check);
    assert!(text.contains("perfect: true"));
    assert!(text.contains("levi-shaped: true"));
}

#[test]
fn construct_semidirect_fixture_includes_the_module_file() {
    let dir = tempfile::tempdir().unwrap();
    let o = run(&["construct", "sl2-vm:3", "--out", dir.path().to_str().unwrap()]);
    assert_eq!(code(&o), 0);
    assert!(dir.path().join("sl2-vm-3.algebra.json").is_file());
    let module = dir.path().join("sl2-vm-3.module.json");
    assert!(module.is_file());
    // The module file pairs with the plain Levi algebra.
    let o = run(&["bider", "sl2", "--module", module.to_str().unwrap(), "--symmetric"]);
    assert_eq!(code(&o), 0);
    assert_eq!(machine(&o)["result"]["dimension"], 0);
}

fn construct_delta(dir: &Path) -> (String, String) {
    let o = run(&["construct", "nonperfect-delta", "--out", dir.to_str().unwrap()]);
    assert_eq!(code(&o), 0);
    let algebra = dir.join("nonperfect-delta.algebra.json");
    let product = dir.join("nonperfect-delta.product.json");
    assert!(algebra.is_file() && product.is_file());
    (
        algebra.to_str().unwrap().to_string(),
        product.to_str().unwrap().to_string(),
    )
}

#[test]
fn constructed_product_passes_verify() {
    let dir = tempfile::tempdir().unwrap();
    let (algebra, product) = construct_delta(dir.path());
    let o = run(&["verify", &algebra, &product, "--adjoint", "--symmetric"]);
    assert_eq!(code(&o), 0);
    assert_eq!(machine(&o)["result"]["clean"], true);
}

#[test]
fn fgdelta_round_trips_through_files() {
    let dir = tempfile::tempdir().unwrap();
    let (algebra, product) = construct_delta(dir.path());

    let o = run(&["fgdelta", &algebra, &product, "--decompose"]);
    assert_eq!(code(&o), 0);
    let m = machine(&o);
    assert_eq!(m["result"]["conditions"]["abelian_variant"], true);
    assert!(stdout(&o).contains("all pass"));
    assert!(stdout(&o).contains("nonzero entries: F 0, G 0, Delta 1"));

    // Feed the emitted block triple back through --compose.
    let triple = dir.path().join("triple.json");
    std::fs::write(&triple, serde_json::to_string_pretty(&m["result"]["fgdelta"]).unwrap())
        .unwrap();
    let o = run(&["fgdelta", &algebra, triple.to_str().unwrap(), "--compose"]);
    assert_eq!(code(&o), 0);
    let recomposed = machine(&o)["result"]["product"].clone();
    let original: Value =
        serde_json::from_str(&std::fs::read_to_string(&product).unwrap()).unwrap();
    assert_eq!(recomposed, original);
}

#[test]
fn broken_g_block_names_the_failed_condition() {
    let dir = tempfile::tempdir().unwrap();
    let o = run(&["construct", "sl2-vm:2", "--out", dir.path().to_str().unwrap()]);
    assert_eq!(code(&o), 0);
    let algebra = dir.path().join("sl2-vm-2.algebra.json");
    // G = identity cannot satisfy the mixed compatibility condition.
    let z = ["0", "0", "0"];
    let triple = serde_json::json!({
        "s_dim": 3,
        "r_dim": 3,
        "abelian_radical": true,
        "f": [z, z, z],
        "g": [["1", "0", "0"], ["0", "1", "0"], ["0", "0", "1"]],
        "delta": [[z, z, z], [z, z, z], [z, z, z]],
    });
    let path = dir.path().join("broken.json");
    std::fs::write(&path, serde_json::to_string_pretty(&triple).unwrap()).unwrap();
    let o = run(&["fgdelta", algebra.to_str().unwrap(), path.to_str().unwrap(), "--compose"]);
    assert_eq!(code(&o), 1);
    assert!(stdout(&o).contains("G-compatible: FAIL"));
    assert_eq!(machine(&o)["status"], "violated");
}

#[test]
fn fgdelta_requires_split_metadata() {
    let dir = tempfile::tempdir().unwrap();
    let (_, product) = construct_delta(dir.path());
    let o = run(&["fgdelta", "sl2", &product, "--decompose"]);
    assert_eq!(code(&o), 2);
    assert!(stdout(&o).contains("no semisimple/radical splitting"));
}

#[test]
fn verify_flags_an_asymmetric_map() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("asym.json");
    std::fs::write(
        &path,
        r#"{"left_dim":2,"right_dim":2,"module_dim":2,"values":[{"i":0,"j":1,"coeffs":[[0,"1"]]}]}"#,
    )
    .unwrap();
    let o = run(&["verify", "abelian:2", path.to_str().unwrap(), "--symmetric"]);
    assert_eq!(code(&o), 1);
    assert!(stdout(&o).contains("symmetry fails at basis pair (0, 1)"));
    // Without the symmetry requirement the same map is a fine biderivation.
    let o = run(&["verify", "abelian:2", path.to_str().unwrap()]);
    assert_eq!(code(&o), 0);
}

#[test]
fn verify_flags_a_non_biderivation() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.json");
    // Constant nonzero product on sl2: the slot identities cannot hold.
    std::fs::write(
        &path,
        r#"{"left_dim":3,"right_dim":3,"module_dim":3,"values":[{"i":0,"j":0,"coeffs":[[0,"1"]]}]}"#,
    )
    .unwrap();
    let o = run(&["verify", "sl2", path.to_str().unwrap()]);
    assert_eq!(code(&o), 1);
    assert!(stdout(&o).contains("identity fails at basis triple"));
}

#[test]
fn cpa_accepts_the_constructed_delta_product() {
    let dir = tempfile::tempdir().unwrap();
    let (algebra, product) = construct_delta(dir.path());
    let o = run(&["verify", &algebra, &product, "--cpa"]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("compatible-product check: clean"));
}

#[test]
fn dimension_cap_env_var_is_enforced() {
    let o = bin()
        .env("LIEFORGE_MAX_DIM", "4")
        .args(["check", "oscillator"])
        .output()
        .unwrap();
    assert_eq!(code(&o), 2);
    assert!(stdout(&o).contains("LIEFORGE_MAX_DIM"));
}
