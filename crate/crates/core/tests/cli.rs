//! Command-line behaviour through the library entry point.

use copvis::cli::{run_args, Format};
use serde_json::Value;

fn run(args: &[&str]) -> (i32, Value) {
    let mut full = vec!["copvis"];
    full.extend_from_slice(args);
    full.extend_from_slice(&["--format", "structured"]);
    let (_, report) = run_args(full).expect("arguments parse");
    let v = serde_json::from_str(&report.render(Format::Structured)).unwrap();
    (report.code, v)
}

#[test]
fn four_cycle_needs_two_cops() {
    let (code, v) = run(&[
        "solve",
        "--recipe",
        "cycle:4",
        "--ell",
        "1",
        "--variant",
        "capture",
    ]);
    assert_eq!(code, 0);
    let r = &v["results"][0];
    assert_eq!(r["number"], 2);
    assert_eq!(r["graph_hash"].as_str().map(str::len), Some(64));
    assert_eq!(v["command"], "solve");
}

#[test]
fn rank_two_family_member() {
    let (code, v) = run(&["rank", "--recipe", "tfamily:k=2,ell=1"]);
    assert_eq!(code, 0);
    let r = &v["results"][0];
    assert_eq!(r["rank"], 2);
    assert_eq!(r["certificate_valid"], true);
    assert_eq!(r["certificate"]["branches"].as_array().unwrap().len(), 3);
}

#[test]
fn two_cop_script_recontaminates() {
    let (code, v) = run(&[
        "verify",
        "--recipe",
        "subdivided:3,3",
        "--script",
        "tell_2cop",
        "--ell",
        "1",
    ]);
    assert_eq!(code, 0);
    let r = &v["results"][0];
    assert_eq!(r["cleaned"], true);
    assert_eq!(r["monotone"], false);
    assert!(!r["recontamination"].as_array().unwrap().is_empty());
}

#[test]
fn solve_with_fixed_cops_reports_winner() {
    let (_, v) = run(&["solve", "--recipe", "cycle:5", "--ell", "1", "--cops", "1"]);
    assert_eq!(v["results"][0]["winner"], "ROBBER");
    let (_, v) = run(&["solve", "--recipe", "cycle:5", "--ell", "1", "--cops", "2"]);
    assert_eq!(v["results"][0]["winner"], "COPS");
}

#[test]
fn bad_input_exits_one() {
    let (code, v) = run(&["analyze", "--recipe", "hexagon:6"]);
    assert_eq!(code, 1);
    assert!(v["error"].as_str().unwrap().contains("hexagon"));
    let (code, _) = run(&["solve", "--ell", "1"]);
    assert_eq!(code, 1);
}

#[test]
fn budget_overrun_exits_two() {
    let (code, v) = run(&[
        "solve", "--recipe", "petersen", "--ell", "1", "--budget", "10",
    ]);
    assert_eq!(code, 2);
    assert_eq!(v["results"][0]["winner"], "INCONCLUSIVE");
}

#[test]
fn batches_keep_recipe_order() {
    let (_, v) = run(&[
        "analyze",
        "--recipe",
        "path:3",
        "--recipe",
        "cycle:5",
        "--recipe",
        "petersen",
        "--workers",
        "3",
    ]);
    let names: Vec<&str> = v["results"]
        .as_array()
        .unwrap()
        .iter()
        .map(|r| r["source"].as_str().unwrap())
        .collect();
    assert_eq!(names, ["path:3", "cycle:5", "petersen"]);
}

#[test]
fn script_round_trips_through_a_file() {
    let dir = std::env::temp_dir().join(format!("copvis-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("tree.script");
    let p = path.to_str().unwrap();
    let (code, first) = run(&[
        "verify",
        "--recipe",
        "spider:4,4,4",
        "--script",
        "rank",
        "--save-script",
        p,
    ]);
    assert_eq!(code, 0);
    let (code, second) = run(&["verify", "--recipe", "spider:4,4,4", "--script", p]);
    assert_eq!(code, 0);
    assert_eq!(
        first["results"][0]["cleaned_at"],
        second["results"][0]["cleaned_at"]
    );
    std::fs::remove_dir_all(dir).unwrap();
}

#[test]
fn monotone_search_on_cycle() {
    let (code, v) = run(&[
        "verify",
        "--recipe",
        "cycle:7",
        "--script",
        "search",
        "--cops",
        "2",
        "--monotone",
    ]);
    assert_eq!(code, 0);
    assert_eq!(v["results"][0]["found"], true);
    assert_eq!(v["results"][0]["monotone"], true);
}

#[test]
fn simulation_ends_in_capture() {
    for cop in ["solver", "shadow"] {
        let (code, v) = run(&[
            "simulate", "--recipe", "cycle:6", "--ell", "2", "--cop", cop, "--robber", "flee",
        ]);
        assert_eq!(code, 0);
        assert_eq!(v["results"][0]["outcome"], "CAPTURED", "{cop}");
    }
}

#[test]
fn profile_has_no_violations() {
    let (code, v) = run(&["profile", "--recipe", "kbip:2,3", "--delayed"]);
    assert_eq!(code, 0);
    let p = &v["results"][0]["profile"];
    assert_eq!(p["violations"].as_array().unwrap().len(), 0);
    assert_eq!(p["classical"], 2);
}

#[test]
fn generate_emits_annotations() {
    let (_, v) = run(&["generate", "--recipe", "subdivided:3,3"]);
    let r = &v["results"][0];
    assert_eq!(r["annotations"]["b"], 4);
    assert_eq!(r["graph"]["n"], 57);
}
