use std::fs;
use std::process::Command as Proc;

use qwalled_cli::{
    parse_args, render_json, BcCommand, Command, EXIT_MISSING_FLAG, EXIT_OUT_OF_RANGE,
    EXIT_UNKNOWN_FLAG,
};
use qwalled_core::diagram::BeadDiagram;
use qwalled_core::report::Report;
use qwalled_core::scalar::Scalar;
use qwalled_core::superlinalg::GradedOperator;
use serde_json::Value;

fn argv(s: &str) -> Vec<String> {
    std::iter::once("qwalled")
        .chain(s.split_whitespace())
        .map(String::from)
        .collect()
}

fn qwalled(args: &str) -> (i32, String) {
    let out = Proc::new(env!("CARGO_BIN_EXE_qwalled"))
        .args(args.split_whitespace())
        .output()
        .unwrap();
    (
        out.status.code().unwrap(),
        String::from_utf8(out.stdout).unwrap(),
    )
}

fn json_of(args: &str) -> (i32, Value) {
    let (code, out) = qwalled(&format!("{args} --json"));
    (code, serde_json::from_str(&out).unwrap())
}

#[test]
fn parses_bc_check() {
    let cli = parse_args(argv("bc check --n 2 --r 1 --s 1")).unwrap();
    let Command::Bc(BcCommand::Check { shape }) = cli.command else {
        panic!("wrong command")
    };
    assert_eq!((shape.n, shape.walls.r, shape.walls.s), (2, 1, 1));
    assert!(!cli.json);
}

#[test]
fn usage_errors_have_distinct_codes() {
    assert_eq!(
        parse_args(argv("bc check --n 2 --r 1 --s 1 --frob 3"))
            .unwrap_err()
            .code,
        EXIT_UNKNOWN_FLAG
    );
    assert_eq!(
        parse_args(argv("bc check --n 2 --r 1")).unwrap_err().code,
        EXIT_MISSING_FLAG
    );
    assert_eq!(
        parse_args(argv("bc check --n 0 --r 1 --s 1"))
            .unwrap_err()
            .code,
        EXIT_OUT_OF_RANGE
    );
    assert_eq!(
        parse_args(argv("bc rep --n 2 --r 2 --s 1 --gen tstar1"))
            .unwrap_err()
            .code,
        EXIT_OUT_OF_RANGE
    );
    assert_eq!(
        parse_args(argv("bc basis --r 0 --s 0")).unwrap_err().code,
        EXIT_OUT_OF_RANGE
    );
    assert_eq!(
        parse_args(argv("cent dim --n 2 --r 1 --s 1 --side nope"))
            .unwrap_err()
            .code,
        EXIT_OUT_OF_RANGE
    );
    assert_eq!(parse_args(argv("--help")).unwrap_err().code, 0);
}

#[test]
fn binary_exit_codes() {
    assert_eq!(
        qwalled("bc check --n 2 --r 1 --s 1 --frob").0,
        EXIT_UNKNOWN_FLAG
    );
    assert_eq!(qwalled("aq dual").0, EXIT_MISSING_FLAG);
    assert_eq!(qwalled("aq dual --n 7").0, EXIT_OUT_OF_RANGE);
    assert_eq!(qwalled("bc check --n 2 --r 1 --s 1").0, 0);
}

#[test]
fn stats_of_the_example_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("d.json");
    assert_eq!(
        qwalled(&format!("bd example --out {}", path.display())).0,
        0
    );
    let (code, v) = json_of(&format!("bd stats --in {}", path.display()));
    assert_eq!(code, 0);
    assert_eq!(v["data"]["beta"], 15);
    assert_eq!(v["data"]["gamma"], 16);
    assert_eq!(v["schema"], "qwalled/v1");
}

#[test]
fn dimension_of_3_2_1() {
    let (code, v) = json_of("bc dim --n 3 --r 2 --s 1 --mode probabilistic");
    assert_eq!(code, 0);
    assert_eq!(v["data"]["count"], 48);
    assert_eq!(v["data"]["rank"], 48);
    assert_eq!(v["data"]["points"].as_array().unwrap().len(), 3);
}

#[test]
fn product_of_generators() {
    let dir = tempfile::tempdir().unwrap();
    let e = dir.path().join("e.json");
    // e on (1,1) composed with itself closes a loop
    fs::write(
        &e,
        r#"{"r":1,"s":1,"edges":[["t",1,"t",2],["b",1,"b",2]],"beads":[]}"#,
    )
    .unwrap();
    let (code, v) = json_of(&format!("bd mul --a {0} --b {0}", e.display()));
    assert_eq!(code, 0);
    assert!(v["data"].is_null());
}

#[test]
fn artifacts_round_trip_byte_for_byte() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path().join("d.json");
    let nd = dir.path().join("nd.json");
    let rep = dir.path().join("rep.json");
    assert_eq!(qwalled(&format!("bd example --out {}", d.display())).0, 0);
    assert_eq!(
        qwalled(&format!(
            "bd normalize --in {} --out {}",
            d.display(),
            nd.display()
        ))
        .0,
        0
    );
    assert_eq!(
        qwalled(&format!(
            "bc rep --n 2 --r 1 --s 1 --gen e --out {}",
            rep.display()
        ))
        .0,
        0
    );
    for p in [&d, &nd] {
        let text = fs::read_to_string(p).unwrap();
        let back = BeadDiagram::from_json(&serde_json::from_str(&text).unwrap()).unwrap();
        assert_eq!(render_json(&back.to_json()), text);
    }
    let text = fs::read_to_string(&rep).unwrap();
    let back = GradedOperator::<Scalar>::from_json(&serde_json::from_str(&text).unwrap()).unwrap();
    assert_eq!(render_json(&back.to_json().unwrap()), text);
}

#[test]
fn reports_round_trip() {
    let (_, out) = qwalled("aq dual --n 1 --json");
    let mut v: Value = serde_json::from_str(&out).unwrap();
    v.as_object_mut().unwrap().remove("data");
    let report = Report::from_json(&v.to_string()).unwrap();
    assert!(report.passed());
    assert_eq!(serde_json::to_value(&report).unwrap(), v);
}

#[test]
fn quick_selftest_passes() {
    let (code, v) = json_of("selftest --quick");
    assert_eq!(code, 0, "{v:#}");
    assert_eq!(v["status"], "pass");
    assert_eq!(v["data"].as_array().unwrap().len(), 11);
}
