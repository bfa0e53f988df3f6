use std::path::PathBuf;
use std::process::Command;

use eqrank_cli::{parse_algebra, run};
use eqrank_core::rootsys::{SemisimpleAlgebra, SimpleType};
use proptest::prelude::*;
use serde_json::Value;

fn eqrank(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("eqrank").chain(args.iter().copied());
    let code = run(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn golden(name: &str) -> Value {
    let p = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden").join(name);
    serde_json::from_str(&std::fs::read_to_string(p).unwrap()).unwrap()
}

fn check_golden(args: &[&str], name: &str) {
    let mut a = args.to_vec();
    a.extend(["--format", "json"]);
    let (_, out, err) = eqrank(&a);
    assert!(err.is_empty(), "{err}");
    let got: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(got, golden(name), "{args:?}");
}

#[test]
fn golden_outputs() {
    check_golden(&["invariant", "A10xE8xA4"], "invariant_a10_e8_a4.json");
    check_golden(&["equiv", "A4xA4", "A8", "--certify-depth", "6"], "equiv_a4a4_a8.json");
    check_golden(&["equiv", "A4", "A2xA2"], "equiv_a4_a2a2.json");
    check_golden(&["solve-d"], "solve_d.json");
    check_golden(&["gram", "A2", "--adjoint"], "gram_a2_adjoint.json");
    check_golden(&["reduce", "B2xE8"], "reduce_b2_e8.json");
    check_golden(&["subalgebras", "E8"], "subalgebras_e8.json");
    check_golden(&["char", "G2", "--highest-weight", "1,0"], "char_g2_10.json");
}

#[test]
fn equiv_exit_codes() {
    assert_eq!(eqrank(&["equiv", "A4xA4", "A2xA2xA2xA2"]).0, 0);
    assert_eq!(eqrank(&["equiv", "A4", "A2xA2"]).0, 1);
    assert_eq!(eqrank(&["equiv", "A6", "A3xA3"]).0, 1);
}

#[test]
fn errors_exit_at_least_two() {
    let (code, _, err) = eqrank(&["invariant", "D2"]);
    assert_eq!(code, 2);
    assert!(err.contains("A1xA1"), "{err}");
    let (code, _, err) = eqrank(&["invariant", "A4xQ3", "--format", "json"]);
    assert_eq!(code, 2);
    assert!(err.contains("byte 3"), "{err}");
    assert!(eqrank(&["char", "A2", "--highest-weight", "1"]).0 >= 2);
    assert!(eqrank(&["char", "A2"]).0 >= 2);
    assert!(eqrank(&["frobnicate"]).0 >= 2);
}

#[test]
fn branch_restricts_the_adjoint() {
    let (code, out, _) = eqrank(&["branch", "E8", "A4xA4", "--restrict-adjoint", "--format", "json"]);
    assert_eq!(code, 0);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["character"]["dim"], 248);
    assert_eq!(v["sub"], "A4xA4");
    assert!(eqrank(&["branch", "E8", "A3xA5"]).0 >= 2);
}

#[test]
fn binary_runs() {
    let out = Command::new(env!("CARGO_BIN_EXE_eqrank"))
        .args(["canonical", "E8xA4"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(String::from_utf8_lossy(&out.stdout).trim(), canonical_e8_a4());
    let bad = Command::new(env!("CARGO_BIN_EXE_eqrank")).args(["equiv", "A4", "A2xA2"]).output().unwrap();
    assert_eq!(bad.status.code(), Some(1));
}

fn canonical_e8_a4() -> String {
    eqrank_core::equiv::canonical_form(&parse_algebra("E8xA4").unwrap()).to_string()
}

fn algebra() -> impl Strategy<Value = SemisimpleAlgebra> {
    prop::collection::vec(prop::sample::select(SimpleType::all_up_to_rank(12)), 1..=5)
        .prop_map(|f| SemisimpleAlgebra::new(f).unwrap())
}

proptest! {
    #[test]
    fn display_parse_round_trip(g in algebra(), lower in any::<bool>(), spaced in any::<bool>()) {
        let mut s = g.to_string();
        if lower {
            s = s.to_lowercase();
        }
        if spaced {
            s = s.replace('x', " x ");
        }
        prop_assert_eq!(parse_algebra(&s).unwrap(), g);
    }

    #[test]
    fn parser_never_panics(s in "[A-Ha-hxX0-9 ]{0,12}") {
        let _ = parse_algebra(&s);
    }
}
