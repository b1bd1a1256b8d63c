use std::process::{Command, Output};

fn icup(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_icup")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn rate_reports_a_weak_point() {
    let o = icup(&["rate", "--p", "6", "--a", "1", "--c12", "0.5"]);
    assert_eq!(o.status.code(), Some(0));
    let s = stdout(&o);
    assert!(s.contains("regime      Weak"), "{s}");
    assert!(s.contains("gap"));
}

#[test]
fn rate_json_has_sweep_fields() {
    let o = icup(&["rate", "--p", "100", "--a", "4", "--c12", "0.5", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["regime"], "StrongCase2");
    assert_eq!(v["scheme"], "CommonOnly");
    assert!(v["gap_bits"].as_f64().unwrap() <= 1.0);
}

#[test]
fn exit_codes() {
    assert_eq!(icup(&["rate", "--p", "-1", "--a", "1", "--c12", "0"]).status.code(), Some(2));
    assert_eq!(icup(&["rate", "--p", "1"]).status.code(), Some(2));
    assert_eq!(icup(&["bogus"]).status.code(), Some(2));
    assert_eq!(icup(&["verify", "--suite", "nope", "--grid", "coarse"]).status.code(), Some(2));
    assert_eq!(icup(&["sweep", "--p", "1:2", "--a", "1", "--c12", "0"]).status.code(), Some(2));
    let o = icup(&["rate", "--p", "10", "--a", "3", "--c12", "0", "--scheme", "UniversalPA"]);
    assert_eq!(o.status.code(), Some(3));
    let o = icup(&["sweep", "--p", "1", "--a", "1", "--c12", "0", "--output", "/nonexistent/dir/out.csv"]);
    assert_eq!(o.status.code(), Some(4));
}

#[test]
fn bad_thread_count_is_a_usage_error() {
    let o = Command::new(env!("CARGO_BIN_EXE_icup"))
        .args(["rate", "--p", "1", "--a", "1", "--c12", "0"])
        .env("ICUP_THREADS", "zero")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn sweep_rows_follow_grid_order() {
    let o = icup(&["sweep", "--p", "1:100:3:log", "--a", "0.5:2:2", "--c12", "0:1:2"]);
    assert_eq!(o.status.code(), Some(0));
    let s = stdout(&o);
    let lines: Vec<&str> = s.lines().collect();
    assert_eq!(lines[0], icup::format::SWEEP_HEADER);
    assert_eq!(lines.len(), 1 + 3 * 2 * 2);
    let keys: Vec<(f64, f64, f64)> = lines[1..]
        .iter()
        .map(|l| {
            let f: Vec<f64> = l.split(',').take(3).map(|x| x.parse().unwrap()).collect();
            (f[0], f[1], f[2])
        })
        .collect();
    let mut sorted = keys.clone();
    sorted.sort_by(|x, y| x.partial_cmp(y).unwrap());
    assert_eq!(keys, sorted);
}

#[test]
fn sweep_json_and_file_output() {
    let dir = std::env::temp_dir().join(format!("icup-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("s.json");
    let o = icup(&["sweep", "--p", "10", "--a", "0.1:1:2", "--c12", "1", "--format", "json", "--output", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v.as_array().unwrap().len(), 2);
    assert!(v[0]["P"].as_f64().is_some());
    std::fs::remove_dir_all(dir).ok();
}

#[test]
fn gdof_table() {
    let o = icup(&["gdof", "--beta", "0.25", "--alpha-min", "0", "--alpha-max", "1", "--step", "0.25"]);
    assert_eq!(o.status.code(), Some(0));
    let s = stdout(&o);
    let lines: Vec<&str> = s.lines().collect();
    assert_eq!(lines[0], "alpha,beta,d_formula");
    assert_eq!(lines.len(), 6);
    assert_eq!(lines[1], "0,0.25,2");
    let o = icup(&["gdof", "--beta", "0", "--alpha-min", "0", "--alpha-max", "0", "--step", "1", "--numeric-p", "1e6"]);
    assert!(stdout(&o).starts_with("alpha,beta,d_formula,d_numeric_ach,d_numeric_ub\n"));
}

#[test]
fn verify_coarse_passes() {
    let o = icup(&["verify", "--suite", "all", "--grid", "coarse"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    let s = stdout(&o);
    for suite in ["theorem1", "theorem2", "strong", "noise-limited", "appendix", "oracle", "soundness", "gdof"] {
        assert!(s.contains(&format!("suite {suite}: PASS")), "{suite}\n{s}");
    }
}
