use assert_cmd::Command;
use predicates::prelude::*;

fn griddom() -> Command {
    Command::cargo_bin("griddom").unwrap()
}

#[test]
fn construct_best_10x15_within_bound() {
    let out = griddom()
        .args(["construct", "--m", "10", "--n", "15", "--best"])
        .assert()
        .success();
    let doc: serde_json::Value =
        serde_json::from_slice(&out.get_output().stdout).unwrap();
    assert!(doc["vertices"].as_array().unwrap().len() <= 41);
}

#[test]
fn construct_1x1_single_vertex() {
    let out = griddom().args(["construct", "--m", "1", "--n", "1"]).assert().success();
    let doc: serde_json::Value = serde_json::from_slice(&out.get_output().stdout).unwrap();
    assert_eq!(doc["vertices"], serde_json::json!([[1, 1]]));
}

#[test]
fn construct_16x16_k2_within_bound() {
    let out = griddom()
        .args(["construct", "--m", "16", "--n", "16", "--k", "2", "--best"])
        .assert()
        .success();
    let doc: serde_json::Value = serde_json::from_slice(&out.get_output().stdout).unwrap();
    assert!(doc["vertices"].as_array().unwrap().len() <= 35);
}

#[test]
fn simulate_fig8_scenario_exits_zero() {
    griddom()
        .args(["simulate", "--m", "10", "--n", "15", "--agents", "41", "--seed", "7"])
        .assert()
        .success()
        .stderr(predicate::str::contains("dominated true"));
}

#[test]
fn simulate_too_few_agents_exits_one() {
    griddom()
        .args(["simulate", "--m", "10", "--n", "10", "--agents", "3", "--seed", "1"])
        .assert()
        .code(1);
}

#[test]
fn simulate_1x1_trivial() {
    griddom()
        .args(["simulate", "--m", "1", "--n", "1", "--agents", "1", "--seed", "0"])
        .assert()
        .success();
}

#[test]
fn simulate_writes_replayable_trace() {
    let dir = tempfile::tempdir().unwrap();
    let t1 = dir.path().join("a.jsonl");
    let t2 = dir.path().join("b.jsonl");
    for t in [&t1, &t2] {
        griddom()
            .args(["simulate", "--m", "8", "--n", "8", "--agents", "25", "--seed", "5"])
            .arg("--trace")
            .arg(t)
            .assert()
            .success();
    }
    let a = std::fs::read_to_string(&t1).unwrap();
    assert_eq!(a, std::fs::read_to_string(&t2).unwrap());
    // every line is a record with an epoch and a kind
    for line in a.lines() {
        let ev: serde_json::Value = serde_json::from_str(line).unwrap();
        assert!(ev["epoch"].is_u64());
        assert!(ev["kind"].is_string());
    }
}

#[test]
fn simulate_without_seed_prints_one() {
    griddom()
        .args(["simulate", "--m", "5", "--n", "5", "--agents", "12"])
        .assert()
        .stderr(predicate::str::is_match(r"seed \d+").unwrap());
}

#[test]
fn exact_4x4_reports_gamma() {
    griddom()
        .args(["exact", "--m", "4", "--n", "4"])
        .assert()
        .success()
        .stderr(predicate::str::contains("gamma 4"));
}

#[test]
fn exact_guard_requires_force() {
    griddom().args(["exact", "--m", "7", "--n", "7"]).assert().code(2);
}

#[test]
fn exact_budget_exhaustion_exits_three() {
    griddom()
        .args(["exact", "--m", "6", "--n", "6", "--timeout-sec", "0"])
        .assert()
        .code(3);
}

#[test]
fn bounds_16x16_k2() {
    griddom()
        .args(["bounds", "--m", "16", "--n", "16", "--k", "2"])
        .assert()
        .success()
        .stdout(predicate::str::contains("lower 20").and(predicate::str::contains("upper 35")));
}

#[test]
fn verify_round_trip_exits_zero() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("set.json");
    griddom()
        .args(["construct", "--m", "12", "--n", "9", "--best", "--out"])
        .arg(&path)
        .assert()
        .success();
    griddom().arg("verify").arg("--set").arg(&path).assert().success();
}

#[test]
fn verify_incomplete_set_exits_one() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("set.json");
    std::fs::write(&path, r#"{"m":3,"n":3,"k":1,"vertices":[[2,2]]}"#).unwrap();
    griddom().arg("verify").arg("--set").arg(&path).assert().code(1);
}

#[test]
fn verify_malformed_file_exits_two() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("set.json");
    std::fs::write(&path, "not json").unwrap();
    griddom().arg("verify").arg("--set").arg(&path).assert().code(2);
}

#[test]
fn render_marks_uncovered_corners() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("set.json");
    std::fs::write(&path, r#"{"m":3,"n":3,"k":1,"vertices":[[2,2]]}"#).unwrap();
    griddom()
        .arg("render")
        .arg("--set")
        .arg(&path)
        .assert()
        .success()
        .stdout(predicate::eq("!.!\n.D.\n!.!\n"));
}

#[test]
fn render_construct_output_has_no_bangs() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("set.json");
    griddom()
        .args(["construct", "--m", "10", "--n", "10", "--best", "--out"])
        .arg(&path)
        .assert()
        .success();
    let out = griddom().arg("render").arg("--set").arg(&path).assert().success();
    assert!(!String::from_utf8_lossy(&out.get_output().stdout).contains('!'));
}

#[test]
fn render_svg_is_self_contained() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("set.json");
    std::fs::write(&path, r#"{"m":2,"n":2,"k":1,"vertices":[[1,1]]}"#).unwrap();
    let out = griddom()
        .args(["render", "--format", "svg", "--set"])
        .arg(&path)
        .assert()
        .success();
    let svg = String::from_utf8_lossy(&out.get_output().stdout).to_string();
    assert!(svg.starts_with("<svg"));
    assert!(!svg.contains("href"));
}

#[test]
fn greedy_adversarial_9x9() {
    let out = griddom()
        .args(["greedy", "--m", "9", "--n", "9", "--tie-break", "adversarial"])
        .assert()
        .success();
    let doc: serde_json::Value = serde_json::from_slice(&out.get_output().stdout).unwrap();
    assert!(doc["vertices"].as_array().unwrap().len() >= 27);
}

#[test]
fn bad_flags_exit_two() {
    griddom().args(["construct", "--m", "10"]).assert().code(2);
    griddom().args(["construct", "--m", "0", "--n", "3"]).assert().code(2);
    griddom().args(["frobnicate"]).assert().code(2);
}

#[test]
fn explicit_placement_and_fixed_activation() {
    griddom()
        .args([
            "simulate", "--m", "1", "--n", "3", "--agents", "2", "--seed", "0",
            "--placement", "1,1;1,3", "--activation", "0,1",
        ])
        .assert()
        .code(predicate::in_iter([0, 1]));
}
