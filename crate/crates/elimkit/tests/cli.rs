//! Command-line behaviour through `cli::run`, plus one real process spawn.

use elimkit::cli::{run, EXIT_FAILURE, EXIT_OK, EXIT_USAGE};
use std::process::Command;

fn call_env(args: &[&str], env_seed: Option<&str>) -> (i32, String, String) {
    let argv = std::iter::once("elimkit").chain(args.iter().copied()).map(std::ffi::OsString::from);
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let code = run(argv, env_seed.map(String::from), &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn call(args: &[&str]) -> (i32, String, String) {
    call_env(args, None)
}

fn ok(args: &[&str]) -> String {
    let (code, out, err) = call(args);
    assert_eq!(code, EXIT_OK, "{args:?}: {err}");
    out.trim().to_string()
}

#[test]
fn sylvester_resultant() {
    assert_eq!(ok(&["res", "--var", "z", "--deg", "1", "--deg", "1", "y^2+z+x", "-y^2+z"]), "-2*X2^2 - x");
    assert_eq!(ok(&["res", "--var", "z", "--deg", "1", "--deg", "1", "y^2+z+x", "y^2+z"]), "-x");
}

#[test]
fn declared_degree_chain() {
    let r12 = ok(&["res", "--var", "z", "--deg", "1", "--deg", "1", "y^2+z+x", "-y^2+z"]);
    let r13 = ok(&["res", "--var", "z", "--deg", "1", "--deg", "1", "y^2+z+x", "y^2+z"]);
    assert_eq!(ok(&["res", "--var", "y", "--deg", "2", "--deg", "2", &r12, &r13]), "4*x^2");

    let r12 = ok(&["res", "--var", "z", "--deg", "2", "--deg", "2", "y^2+z+x", "-y^2+z"]);
    let r13 = ok(&["res", "--var", "z", "--deg", "2", "--deg", "2", "y^2+z+x", "y^2+z"]);
    assert_eq!(ok(&["res", "--var", "y", "--deg", "4", "--deg", "4", &r12, &r13]), "0");
}

#[test]
fn discriminants_and_delta() {
    assert_eq!(ok(&["disc", "--var", "z", "--deg", "2", "3*z^2 + 2*z + 5"]), "56");
    assert_eq!(ok(&["disc3", "--deg", "2", "X1^2 + y^2 + z^2"]), "4");
    assert_eq!(ok(&["delta", "--k", "2", "z^3"]), "2*X3 + X4");
    assert_eq!(ok(&["sres1", "--var", "z", "--deg", "2", "--deg", "2", "X1^2+y*z", "z^2"]), "-X2");
    assert_eq!(ok(&["mres", "--deg", "1", "--deg", "1", "--deg", "1", "X1", "z", "y"]), "-1");
}

#[test]
fn mres_with_parameter() {
    assert_eq!(ok(&["mres", "--deg", "1", "--deg", "1", "--deg", "1", "x*X1", "y", "z"]), "x");
    let (code, _, _) = call(&["mres", "--deg", "1", "--deg", "1", "--deg", "1", "t*X1", "y", "z"]);
    assert_eq!(code, EXIT_USAGE);
}

#[test]
fn polynomial_from_file() {
    let dir = std::env::temp_dir().join(format!("elimkit-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let f = dir.join("f.txt");
    std::fs::write(&f, "y^2+z+x\n").unwrap();
    let arg = format!("@{}", f.display());
    assert_eq!(ok(&["res", "--var", "z", "--deg", "1", "--deg", "1", &arg, "-y^2+z"]), "-2*X2^2 - x");
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn verify_json_summary() {
    let out = ok(&["verify", "I1", "--degrees", "1,1,1,1", "--trials", "20", "--seed", "42", "--json"]);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["failures"].as_array().unwrap().len(), 0);
    assert_eq!(v["trials"], 20);
    assert_eq!(v["seed"], 42);
    assert!(v["timings_ms"].is_null());
}

#[test]
fn json_is_byte_identical() {
    let args = ["verify", "I8", "--degrees", "2,2", "--trials", "5", "--seed", "3", "--json"];
    assert_eq!(call(&args).1, call(&args).1);
    let jobs = ["verify", "I8", "--degrees", "2,2", "--trials", "5", "--seed", "3", "--json", "--jobs", "3"];
    assert_eq!(call(&args).1, call(&jobs).1);
}

#[test]
fn verify_text_line() {
    let out = ok(&["verify", "I10", "--degrees", "3", "--trials", "2"]);
    assert!(out.starts_with("I10 "), "{out}");
    assert!(out.contains("failures=0"), "{out}");
    assert!(out.ends_with("OK"), "{out}");
}

#[test]
fn probe_modes() {
    ok(&["verify", "I5", "--degrees", "3,1", "--trials", "1", "--mode", "t-probe:1"]);
    let out = ok(&["verify", "I4", "--degrees", "2,2", "--trials", "1", "--mode", "t", "--json"]);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["trials"], 2, "one trial per component");
    assert_eq!(v["mode"], "t-probe");
}

#[test]
fn seed_resolution() {
    let base = ["verify", "I2", "--degrees", "2,1,1", "--trials", "2", "--json"];
    let seed_of = |env: Option<&str>, extra: &[&str]| {
        let mut args = base.to_vec();
        args.extend_from_slice(extra);
        let (code, out, _) = call_env(&args, env);
        assert_eq!(code, EXIT_OK);
        serde_json::from_str::<serde_json::Value>(&out).unwrap()["seed"].as_u64().unwrap()
    };
    assert_eq!(seed_of(None, &[]), 1);
    assert_eq!(seed_of(Some("99"), &[]), 99);
    assert_eq!(seed_of(Some("99"), &["--seed", "5"]), 5);
    let (code, _, err) = call_env(&base, Some("not-a-number"));
    assert_eq!(code, EXIT_USAGE);
    assert!(!err.is_empty());
}

#[test]
fn usage_errors_exit_2() {
    for args in [
        vec!["res", "--var", "z", "--deg", "1", "z", "z"],
        vec!["res", "--var", "z", "--deg", "1", "--deg", "1", "z^2", "z"],
        vec!["res", "--var", "q", "--deg", "1", "--deg", "1", "z", "z"],
        vec!["disc3", "--deg", "2", "X1^2 + z"],
        vec!["verify", "I99", "--degrees", "1"],
        vec!["verify", "I11", "--degrees", "3"],
        vec!["verify", "I1", "--degrees", "1,1"],
        vec!["verify", "I1", "--degrees", "1,1,1,1", "--mode", "fast"],
        vec!["verify", "I1", "--degrees", "1,1,1,1", "--coeff-bound", "1"],
        vec!["delta", "z^+"],
        vec!["frobnicate"],
    ] {
        let (code, _, err) = call(&args);
        assert_eq!(code, EXIT_USAGE, "{args:?}");
        assert!(!err.is_empty(), "{args:?} printed no diagnostic");
    }
}

#[test]
fn help_and_version_exit_0() {
    assert_eq!(call(&["--help"]).0, EXIT_OK);
    assert_eq!(call(&["--version"]).0, EXIT_OK);
}

#[test]
fn failing_computation_exits_1() {
    // zero denominator in the pair discriminant is a runtime failure, not a usage error
    let (code, _, err) = call(&["disc2", "--deg", "2", "--deg", "1", "y*z", "y"]);
    assert_eq!(code, EXIT_FAILURE, "{err}");
}

#[test]
fn quartic_example() {
    let out = ok(&["example-quartic"]);
    assert!(out.contains("5540271966595842048"));
    assert!(out.contains("product reassembles exactly: true"));
    let v: serde_json::Value = serde_json::from_str(&ok(&["example-quartic", "--json"])).unwrap();
    assert_eq!(v["reassembles"], true);
    let mults: Vec<u64> = v["factors"].as_array().unwrap().iter().map(|f| f["multiplicity"].as_u64().unwrap()).collect();
    assert_eq!(mults, vec![1, 1, 2, 2, 3]);
}

#[test]
fn binary_reads_seed_from_environment() {
    let out = Command::new(env!("CARGO_BIN_EXE_elimkit"))
        .args(["verify", "I1", "--degrees", "1,1,1,1", "--trials", "2", "--json"])
        .env("ELIMKIT_SEED", "17")
        .output()
        .unwrap();
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["seed"], 17);
}
