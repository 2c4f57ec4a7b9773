use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_biharm")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(o: &Output) -> serde_json::Value {
    serde_json::from_slice(&o.stdout).expect("valid JSON")
}

#[test]
fn classify_d_type_json() {
    let o = run(&["classify", "--family", "cp-d", "--digits", "6", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stderr.is_empty());
    let s = stdout(&o);
    assert!(s.contains("0.278629"));
    let v = json(&o);
    assert_eq!(v["schema"], 1);
    assert_eq!(v["family"], "cp-d");
}

#[test]
fn classify_table_is_default() {
    let o = run(&["classify", "--family", "cp-a", "--p", "1", "--q", "3"]);
    assert_eq!(o.status.code(), Some(0));
    let s = stdout(&o);
    assert!(s.starts_with("family        cp-a(p=1,q=3)"));
    assert!(s.contains("nonminimal biharmonic at t = "));
}

#[test]
fn unknown_family_is_usage_error() {
    let o = run(&["classify", "--family", "cp-z"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("unknown family"));
    assert!(o.stdout.is_empty());
}

#[test]
fn missing_and_invalid_parameters() {
    assert_eq!(run(&["classify", "--family", "cp-b"]).status.code(), Some(2));
    assert_eq!(run(&["classify", "--family", "cp-a", "--p", "3", "--q", "1"]).status.code(), Some(2));
    assert_eq!(run(&["classify", "--family", "cp-d", "--digits", "0"]).status.code(), Some(2));
    assert_eq!(run(&["classify", "--family", "cp-d", "--digits", "51"]).status.code(), Some(2));
    assert_eq!(run(&["sweep", "--theorem", "5.5"]).status.code(), Some(2));
    assert_eq!(run(&["sweep", "--theorem", "4.1", "--n-min", "6", "--n-max", "5"]).status.code(), Some(2));
    assert_eq!(run(&["frobnicate"]).status.code(), Some(2));
}

#[test]
fn endpoint_root_exit_code() {
    let o = run(&["classify", "--family", "hp-hpk-tube", "--n", "3", "--k", "1"]);
    assert_eq!(o.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&o.stderr).contains("endpoint root"));
}

#[test]
fn sphere_sweep_rows() {
    let o = run(&["sweep", "--theorem", "4.1"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stderr.is_empty());
    let s = stdout(&o);
    assert!(s.contains("sphere-g1(n=3)"));
    assert!(s.contains("0.707107"));
    assert!(s.contains("sphere-g2(n=5,p=3)"));
    for g in ["sphere-g3", "sphere-g4", "sphere-g6"] {
        assert!(s.lines().any(|l| l.contains(g) && l.contains("certified nonexistent")), "{g}");
    }
}

#[test]
fn sweep_output_is_deterministic() {
    let a = run(&["sweep", "--theorem", "7.3", "--json"]);
    let b = run(&["sweep", "--theorem", "7.3", "--json"]);
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(json(&a)["schema"], 1);
}

#[test]
fn ambient_c_changes_threshold() {
    let o = run(&["classify", "--family", "cp-b", "--n", "3", "--ambient-c", "2", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(json(&o)["threshold"], "4");
    assert_eq!(run(&["classify", "--family", "cp-b", "--n", "3", "--ambient-c", "-1"]).status.code(), Some(2));
}

#[test]
fn catalog_dump_schema() {
    let o = run(&["catalog-dump"]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    assert_eq!(v["schema"], 1);
    let fams = v["families"].as_array().unwrap();
    assert!(fams.iter().any(|f| f["id"] == "cp-e"));
    for f in fams {
        for key in ["id", "params", "spectrum", "range", "threshold"] {
            assert!(!f[key].is_null(), "{key} missing in {}", f["id"]);
        }
    }
}

#[test]
fn quartic_verification_exit_codes() {
    let o = run(&["verify-example81", "--m", "1"]);
    assert_eq!(o.status.code(), Some(0));
    // The displayed gradient identity disagrees with the computation for m >= 2.
    let o = run(&["verify-example81", "--m", "4", "--json"]);
    assert_eq!(o.status.code(), Some(4));
    let v = json(&o);
    assert_eq!(v["all_equal"], false);
    let ids = v["identities"].as_array().unwrap();
    assert!(ids.iter().filter(|c| !c["name"].as_str().unwrap().starts_with("d:")).all(|c| c["equal"] == true));
    assert_eq!(run(&["verify-example81", "--m", "0"]).status.code(), Some(2));
}

#[test]
fn ym_check_clean_and_violating_runs() {
    let o = run(&["ym-check", "--m", "4", "--r", "3", "--trials", "1000", "--seed", "42", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    assert_eq!(v["identity_violations"], 0);
    assert!(v["first_counterexample"].is_null());

    let o = run(&["ym-check", "--m", "3", "--r", "4", "--trials", "100", "--seed", "42", "--json"]);
    assert_eq!(o.status.code(), Some(5));
    let v = json(&o);
    assert_eq!(v["bracket_bound_violations"], 1);
    assert!(v["first_counterexample"]["data"]["alpha"].is_object());
    assert_eq!(run(&["ym-check", "--m", "3", "--r", "3", "--trials", "0"]).status.code(), Some(2));
}
