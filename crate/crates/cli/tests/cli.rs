use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_spherical-lab")).args(args).output().expect("binary runs")
}

fn code(args: &[&str]) -> i32 {
    run(args).status.code().expect("exit code")
}

fn stdout(args: &[&str]) -> String {
    let out = run(args);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(code(&["verify", "par", "--n", "2"]), 2);
    assert_eq!(code(&["ktypes", "--n", "4", "--max", "1"]), 2);
    assert_eq!(code(&["zonal", "--space", "sphere", "--n", "2", "--jmax", "1", "--grid", "0"]), 2);
    assert_eq!(code(&["verify", "weights", "--tol", "bogus=1"]), 2);
    assert_eq!(code(&["spherical", "--n", "2", "--tau", "1", "--delta", "so:0", "--g", "euler:0,0"]), 2);
    assert_eq!(code(&["frobnicate"]), 2);
}

#[test]
fn inadmissible_pair_exits_one() {
    assert_eq!(code(&["spherical", "--n", "3", "--tau", "1,0", "--delta", "so:2", "--g", "identity"]), 1);
    assert_eq!(code(&["verify", "par", "--n", "3", "--tau", "1,0", "--pi", "2"]), 1);
}

#[test]
fn failing_tolerance_exits_one() {
    assert_eq!(code(&["verify", "impar", "--l", "5", "--tol", "correspondence=1e-300"]), 1);
}

#[test]
fn verify_passes_and_is_deterministic() {
    let args = ["verify", "matrix", "--l", "2", "--deterministic"];
    let a = stdout(&args);
    let b = stdout(&args);
    assert_eq!(a, b);
    let doc: serde_json::Value = serde_json::from_str(&a).unwrap();
    assert_eq!(doc["command"], "verify matrix");
    assert_eq!(doc["passed"], true);
    assert!(doc.get("timestamp").is_none());
    assert_eq!(doc["reports"].as_array().unwrap().len(), 2);
}

#[test]
fn sequential_matches_parallel() {
    let par = stdout(&["verify", "par", "--tau", "2,1", "--pi", "1", "--format", "csv"]);
    let seq = stdout(&["verify", "par", "--tau", "2,1", "--pi", "1", "--format", "csv", "--sequential"]);
    assert_eq!(par, seq);
}

#[test]
fn zonal_sphere_column_is_cosine() {
    let text = stdout(&["zonal", "--space", "sphere", "--n", "2", "--jmax", "1", "--grid", "17"]);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("space,n,j,theta,value"));
    let mut seen = 0;
    for line in lines {
        let f: Vec<&str> = line.split(',').collect();
        if f[2] == "1" {
            let theta: f64 = f[3].parse().unwrap();
            let value: f64 = f[4].parse().unwrap();
            assert!((value - theta.cos()).abs() < 1e-12);
            seen += 1;
        }
    }
    assert_eq!(seen, 17);
}

#[test]
fn spherical_identity_is_identity() {
    let text = stdout(&["spherical", "--n", "3", "--tau", "2,1", "--delta", "o:1:eps", "--g", "identity"]);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("row,col,re,im"));
    for line in lines {
        let f: Vec<&str> = line.split(',').collect();
        let expect = if f[0] == f[1] { 1.0 } else { 0.0 };
        assert!((f[2].parse::<f64>().unwrap() - expect).abs() < 1e-10, "{line}");
        assert!(f[3].parse::<f64>().unwrap().abs() < 1e-10, "{line}");
    }
}

#[test]
fn spherical_scalar_on_two_sphere() {
    for theta in [0.3f64, 1.2, 2.9] {
        let g = format!("euler:0,{theta},0");
        let text = stdout(&["spherical", "--n", "2", "--tau", "1", "--delta", "so:0", "--g", &g]);
        let row = text.lines().nth(1).unwrap();
        let re: f64 = row.split(',').nth(2).unwrap().parse().unwrap();
        assert!((re - theta.cos()).abs() < 1e-10);
    }
}

#[test]
fn ktypes_rows() {
    let text = stdout(&["ktypes", "--n", "3", "--max", "2", "--format", "csv"]);
    assert_eq!(text.lines().count(), 7);
    let doc: serde_json::Value = serde_json::from_str(&stdout(&["ktypes", "--n", "2", "--max", "3"])).unwrap();
    assert_eq!(doc.as_array().unwrap().len(), 4);
}

#[test]
fn out_writes_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("k.json");
    let out = run(&["ktypes", "--n", "2", "--max", "1", "--out", path.to_str().unwrap()]);
    assert!(out.status.success());
    assert!(out.stdout.is_empty());
    let doc: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap();
    assert_eq!(doc.as_array().unwrap().len(), 2);
}
