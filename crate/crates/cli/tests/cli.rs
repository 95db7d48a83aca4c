use std::process::{Command, Output};

use jack_core::jack::JackFamily;
use jack_core::{Composition, Parallelism, SparsePoly};

fn jack(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_jack"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = jack(args);
    assert!(
        out.status.success(),
        "{args:?} failed: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout)
        .unwrap()
        .trim_end()
        .to_string()
}

#[test]
fn build_examples() {
    assert_eq!(
        stdout(&["build", "F", "--n", "2", "--comp", "0,1", "--format", "text"]),
        "(α+2)·x2"
    );
    assert_eq!(stdout(&["build", "E", "--n", "2", "--comp", "0,0"]), "1");
    assert_eq!(
        stdout(&[
            "build",
            "J",
            "--n",
            "2",
            "--partition",
            "1,0",
            "--format",
            "latex"
        ]),
        "x_{1}+x_{2}"
    );
    assert_eq!(
        stdout(&["build", "m", "--n", "3", "--partition", "1"]),
        "x1+x2+x3"
    );
}

#[test]
fn constants_examples() {
    assert_eq!(
        stdout(&["constants", "--n", "2", "--comp", "0,1"]),
        "d=α+2\nd'=α+1\ne=α+2\nf=α^2+3α+2"
    );
    let zero = stdout(&["constants", "--n", "2", "--comp", "0,0"]);
    assert!(zero.lines().all(|l| l.ends_with("=1")), "{zero}");
    assert_eq!(
        stdout(&["constants", "--n", "2", "--comp", "1,0"]),
        "d=α+1\nd'=α\ne=α+2\nf=α^2+α\nb=2\nc=1\nc'=α\nj=α"
    );
}

#[test]
fn verify_examples_exit_zero() {
    for args in [
        vec!["verify", "orthogonality", "--n", "2", "--degree", "3"],
        vec!["verify", "recursions", "--n", "4", "--degree", "6"],
        vec!["verify", "las", "--n", "2", "--degree", "2", "--r", "1"],
        vec!["verify", "lemma31", "--n", "2", "--degree", "3"],
    ] {
        let out = jack(&args);
        assert_eq!(out.status.code(), Some(0), "{args:?}");
        let report: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
        let entries = report.as_array().unwrap();
        assert!(!entries.is_empty());
        assert!(entries.iter().all(|e| e["status"] == "pass"));
    }
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        vec!["build", "J", "--comp", "0,1"],
        vec!["build", "F", "--n", "3", "--comp", "0,1"],
        vec!["build", "F", "--comp", "0,x"],
        vec!["build", "E", "--comp", "1,0", "--alpha", "-1"],
        vec!["verify", "nonsense", "--n", "2", "--degree", "2"],
        vec!["verify", "cauchy", "--n", "0", "--degree", "2"],
    ] {
        assert_eq!(jack(&args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn alpha_specialization() {
    assert_eq!(
        stdout(&["build", "F", "--comp", "1,0", "--alpha", "1/2"]),
        "3/2·x1+x2"
    );
    assert_eq!(
        stdout(&["eval", "E", "--comp", "1,0", "--alpha", "-2"]),
        "0"
    );
    assert_eq!(stdout(&["eval", "F", "--comp", "0,1"]), "α+2");
}

#[test]
fn pairing_examples() {
    assert_eq!(stdout(&["pair", "--n", "2", "F:1,0", "F:0,1"]), "0");
    assert_eq!(stdout(&["pair", "--n", "2", "F:1,0", "F:1,0"]), "α^2+α");
    assert_eq!(
        stdout(&["pair", "--n", "2", "--symmetric", "J:1,0", "J:1,0"]),
        "α"
    );
}

#[test]
fn json_round_trip() {
    let text = stdout(&[
        "build", "F", "--n", "3", "--comp", "1,0,2", "--format", "json",
    ]);
    let parsed = SparsePoly::from_json(&text).unwrap();
    let eta: Composition = "1,0,2".parse().unwrap();
    let expected = JackFamily::build(3, 3, Parallelism::Sequential)
        .f(&eta)
        .unwrap();
    assert_eq!(parsed, expected);

    let path = std::env::temp_dir().join(format!("jack-cli-{}.json", std::process::id()));
    std::fs::write(&path, &text).unwrap();
    let spec = format!("@{}", path.display());
    let norm = stdout(&["pair", "--n", "3", &spec, "F:1,0,2"]);
    std::fs::remove_file(&path).ok();
    assert_eq!(norm, eta.constants().f.to_string());
}

#[test]
fn output_is_independent_of_threads() {
    let one = stdout(&[
        "verify",
        "eigen",
        "--n",
        "3",
        "--degree",
        "3",
        "--threads",
        "1",
    ]);
    let four = stdout(&[
        "verify",
        "eigen",
        "--n",
        "3",
        "--degree",
        "3",
        "--threads",
        "4",
    ]);
    assert_eq!(one, four);
    let a = stdout(&["build", "J", "--n", "3", "--partition", "2,1"]);
    let b = stdout(&["build", "J", "--n", "3", "--partition", "2,1,0"]);
    assert_eq!(a, b);
}

#[test]
fn report_written_to_file() {
    let path = std::env::temp_dir().join(format!("jack-report-{}.json", std::process::id()));
    let out = jack(&[
        "verify",
        "cauchy",
        "--n",
        "1",
        "--degree",
        "2",
        "--output",
        path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let body = std::fs::read_to_string(&path).unwrap();
    std::fs::remove_file(&path).ok();
    assert_eq!(
        serde_json::from_str::<serde_json::Value>(&body)
            .unwrap()
            .as_array()
            .unwrap()
            .len(),
        3
    );
}
