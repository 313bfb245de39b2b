use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_macwheel")).args(args).output().expect("binary runs")
}

fn json(args: &[&str]) -> (Value, i32) {
    let out = run(args);
    let v = serde_json::from_slice(&out.stdout).unwrap_or_else(|e| {
        panic!("{args:?}: {e}\nstdout: {}\nstderr: {}", String::from_utf8_lossy(&out.stdout), String::from_utf8_lossy(&out.stderr))
    });
    (v, out.status.code().unwrap())
}

#[test]
fn wheel_dim_example() {
    let (v, code) = json(&["wheel", "dim", "--k", "1", "--r", "2", "--n", "2", "--d", "1"]);
    assert_eq!(code, 0);
    assert_eq!(v["dim_J"], 0);
}

#[test]
fn macd_compute_two_row() {
    let (v, code) = json(&["macd", "compute", "--n", "2", "--lambda", "2"]);
    assert_eq!(code, 0);
    let terms = v["coefficients"].as_array().unwrap();
    assert_eq!(terms.len(), 2);
    let c11 = terms.iter().find(|t| t["partition"] == "1,1").unwrap()["coefficient"].as_str().unwrap();
    let parsed: macwheel::scalars::BiRatFunc = c11.parse().unwrap();
    assert_eq!(parsed, "(1 + q)*(1 - t)/(1 - q*t)".parse().unwrap());
}

#[test]
fn theorem1_small_grid_passes() {
    let (v, code) = json(&["verify", "theorem1", "--k", "1", "--r", "2", "--n-max", "4", "--d-max", "8"]);
    assert_eq!(code, 0);
    assert_eq!(v["ok"], true);
    assert_eq!(v["reports"].as_array().unwrap().len(), 5 * 9);
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(run(&["wheel", "dim", "--k", "0", "--r", "2", "--n", "2", "--d", "1"]).status.code(), Some(2));
    assert_eq!(run(&["wheel", "dim", "--k", "1", "--r", "1", "--n", "2", "--d", "1"]).status.code(), Some(2));
    assert_eq!(run(&["macd", "compute", "--n", "2", "--lambda", "1,2"]).status.code(), Some(2));
    assert_eq!(run(&["char", "chi", "--k", "1", "--r", "3", "--b", "2,1", "--n-max", "2", "--d-max", "2"]).status.code(), Some(2));
}

#[test]
fn failed_checks_exit_1() {
    // Over K the relations at (2,3) do not contain e_1^3.
    let (v, code) = json(&["verify", "prop302", "--k", "2", "--r", "3", "--b", "2,2", "--n-max", "3", "--d-max", "3"]);
    assert_eq!(code, 1);
    assert_eq!(v["reports"][0]["mismatches"][0]["dim_W"], 0);
    let (_, code) = json(&[
        "verify", "prop302", "--k", "2", "--r", "3", "--b", "2,2", "--n-max", "3", "--d-max", "3", "--relations", "root-of-unity",
    ]);
    assert_eq!(code, 0);
    let (v, code) = json(&["verify", "lemma21", "--k", "1", "--r", "2", "--n-max", "2", "--d-max", "2"]);
    assert_eq!(code, 1);
    assert_eq!(v["failures"][0]["lambda"], "2,0");
}

#[test]
fn probe_agrees_with_exact() {
    let args = ["wheel", "dim", "--k", "2", "--r", "3", "--n", "4", "--d", "8"];
    let (exact, _) = json(&args);
    let mut probe_args = args.to_vec();
    probe_args.extend(["--probe", "--recheck", "--seed", "7"]);
    let (probe, code) = json(&probe_args);
    assert_eq!(code, 0);
    assert_eq!(probe["dim_J"], exact["dim_J"]);
}

#[test]
fn characters_and_relations() {
    let (v, _) = json(&["char", "chi", "--k", "1", "--r", "2", "--b", "1", "--n-max", "3", "--d-max", "6"]);
    let coeffs = v["coefficients"].as_array().unwrap();
    for d in 0..=6 {
        assert!(coeffs.contains(&serde_json::json!([d, 1, 1])), "d={d}");
    }
    let (v, code) = json(&["char", "recursion", "--k", "2", "--r", "3", "--b", "1,2", "--n-max", "6", "--d-max", "6"]);
    assert_eq!((v["ok"].as_bool(), code), (Some(true), 0));
    let (v, _) = json(&["current", "relation", "--k", "1", "--r", "2", "--d", "2", "--nu", "2"]);
    assert_eq!(v["terms"].as_array().unwrap().len(), 2);
    let (v, code) = json(&["current", "reduce", "--k", "1", "--r", "2", "--n", "2", "--lambda", "1,1"]);
    assert_eq!(code, 0);
    assert_eq!(v["input"], "1,1");
    assert!(v["terms"].as_array().unwrap().iter().all(|t| t["partition"] == "2,0"));
}

#[test]
fn cache_roundtrip() {
    let dir = std::env::temp_dir().join(format!("macwheel-cache-{}", std::process::id()));
    let args = ["macd", "compute", "--n", "3", "--lambda", "3,1", "--cache", dir.to_str().unwrap()];
    let (first, _) = json(&args);
    assert!(dir.join("macdonald_n3.json").exists());
    let (second, _) = json(&args);
    assert_eq!(first, second);
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn table_format() {
    let out = run(&["wheel", "dim", "--k", "1", "--r", "2", "--n", "3", "--d", "6", "--format", "table"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.lines().any(|l| l.split_whitespace().collect::<Vec<_>>() == ["dim_J", "1"]), "{text}");
}
