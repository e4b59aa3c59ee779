use std::process::Command;

fn andreev(args: &[&str]) -> std::process::Output {
    Command::new(env!("CARGO_BIN_EXE_andreev")).args(args).env("ANDREEV_THREADS", "2").output().unwrap()
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(andreev(&["no-such-command"]).status.code(), Some(2));
    assert_eq!(andreev(&["eval-jpdf", "--kind", "PRE", "--n", "2", "--m", "1", "--r", "0.2,0.4"]).status.code(), Some(2));
    assert_eq!(andreev(&["sample", "--kind", "XYZ", "--n", "1", "--m", "1"]).status.code(), Some(2));
}

#[test]
fn verify_passes_and_detects_fault() {
    let ok = andreev(&["verify", "--filter", "partitions"]);
    assert_eq!(ok.status.code(), Some(0));
    let report: serde_json::Value = serde_json::from_slice(&ok.stdout).unwrap();
    assert_eq!(report["result"]["checks"].as_array().unwrap().len(), 3);
    assert!(report["version"].as_str().unwrap().starts_with("andreev "));

    let bad = andreev(&["verify", "--filter", "symfunc.schur_jack", "--perturb-hook", "1e-6"]);
    assert_eq!(bad.status.code(), Some(1));
}

#[test]
fn eval_hfma_at_zero() {
    let out = andreev(&["eval-hfma", "--a", "-1.5", "--b", "2", "--c", "0.5", "--alpha", "2", "--x", "0,0"]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["result"]["value"], 1.0);
    assert_eq!(v["result"]["tail_estimate"], 0.0);
}

#[test]
fn eval_jpdf_reports_both_quaternion_routes() {
    let out = andreev(&["eval-jpdf", "--kind", "PQE", "--n", "2", "--m", "2", "--gamma", "0.5", "--r", "0.3,0.7"]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    let (series, pf) = (v["result"]["value"].as_f64().unwrap(), v["result"]["pfaffian"].as_f64().unwrap());
    assert!((series - pf).abs() < 1e-8 * series);
}

#[test]
fn sample_is_reproducible_and_carries_provenance() {
    let dir = tempfile::tempdir().unwrap();
    let run = |name: &str| {
        let path = dir.path().join(name);
        let args = ["sample", "--kind", "PRE", "--n", "2", "--m", "2", "--gamma", "0.4", "--samples", "3000", "--seed", "5", "-o"];
        let mut full: Vec<&str> = args.to_vec();
        full.push(path.to_str().unwrap());
        assert_eq!(andreev(&full).status.code(), Some(0));
        (std::fs::read_to_string(&path).unwrap(), std::fs::read_to_string(path.with_extension("csv.json")).unwrap())
    };
    let (a, sa) = run("a.csv");
    let (b, sb) = run("b.csv");
    assert!(a.starts_with("# version: andreev"));
    assert!(a.lines().nth(1).unwrap().starts_with("# config: "));
    // the spool paths differ, everything after the config line must not
    assert_eq!(a.lines().skip(2).collect::<Vec<_>>(), b.lines().skip(2).collect::<Vec<_>>());
    let (ja, jb): (serde_json::Value, serde_json::Value) = (serde_json::from_str(&sa).unwrap(), serde_json::from_str(&sb).unwrap());
    assert_eq!(ja["result"], jb["result"]);
}

#[test]
fn compare_pre_one_channel() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("cmp.csv");
    let out = andreev(&[
        "compare", "--kind", "PRE", "--n", "1", "--m", "2", "--gamma", "0.5", "--samples", "100000", "--thinning", "10",
        "-o", path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let summary: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(path.with_extension("csv.json")).unwrap()).unwrap();
    assert!(summary["result"]["fraction_within_3sigma"].as_f64().unwrap() >= 0.95);
    let rows = std::fs::read_to_string(&path).unwrap().lines().filter(|l| !l.starts_with('#')).count();
    assert_eq!(rows, 41);
}
