use std::io::Write;
use std::process::{Command, Output, Stdio};

use serde_json::Value;

fn data(name: &str) -> String {
    format!("{}/../../data/{name}", env!("CARGO_MANIFEST_DIR"))
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_subfit"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn report(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is one JSON report")
}

#[test]
fn intro_lattice_is_not_join_subfit() {
    let out = run(&["check", &data("intro.json")]);
    assert_eq!(out.status.code(), Some(0));
    let r = report(&out);
    assert_eq!(r["command"], "check");
    assert_eq!(r["results"]["join_subfit"], false);
    assert_eq!(r["results"]["is_lattice"], true);
    assert_eq!(r["results"]["is_distributive_lattice"], false);
    assert_eq!(r["inputs"]["sha256"].as_str().map(str::len), Some(64));
}

#[test]
fn singleton_has_every_structural_flag() {
    let r = report(&run(&["check", &data("singleton.json")]));
    for key in [
        "is_poset",
        "has_top",
        "has_bottom",
        "is_bounded",
        "is_join_semilattice",
        "is_meet_semilattice",
        "is_lattice",
        "is_distributive_lattice",
        "is_boolean",
        "join_subfit",
        "meet_subfit",
    ] {
        assert_eq!(r["results"][key], true, "{key}");
    }
}

#[test]
fn intro_subfit_elements_are_not_an_ideal() {
    let r = report(&run(&["subfit-elements", &data("intro.json")]));
    assert_eq!(
        r["results"]["subfit_set_labels"],
        serde_json::json!(["0", "a", "b", "t"])
    );
    assert_eq!(r["results"]["is_downset"], true);
    assert_eq!(r["results"]["is_ideal"], false);
    assert_eq!(
        r["results"]["offending_pair_labels"],
        serde_json::json!(["a", "b"])
    );
}

#[test]
fn witness_accepts_labels_and_indices() {
    let by_label = report(&run(&["witness", &data("cube.json"), "x", "yz", "xy", "z"]));
    let by_index = report(&run(&[
        "witness",
        &data("cube.json"),
        "#1",
        "#6",
        "#3",
        "#4",
    ]));
    let square = format!("{}/square.json", env!("CARGO_TARGET_TMPDIR"));
    std::fs::write(&square, r#"{"n":4,"covers":[[0,1],[0,2],[1,3],[2,3]]}"#).unwrap();
    let bare = report(&run(&["witness", &square, "1", "2", "1", "2"]));
    assert_eq!(bare["inputs"]["params"]["a"], 1);
    assert_eq!(bare["results"]["z"], 1);
    assert_eq!(by_label["pass"], true);
    assert_eq!(by_label["results"], by_index["results"]);
    assert_eq!(by_label["results"]["t_join_z_is_top"], true);
    assert_eq!(by_label["results"]["s_join_z_below_top"], true);
}

#[test]
fn witness_preconditions_are_input_errors() {
    // t <= s
    let out = run(&["witness", &data("cube.json"), "x", "yz", "xy", "x"]);
    assert_eq!(out.status.code(), Some(2));
    let out = run(&["witness", &data("intro.json"), "a", "b", "s", "t"]);
    assert_eq!(
        out.status.code(),
        Some(2),
        "intro lattice is not distributive"
    );
}

#[test]
fn envelope_reports_sizes_and_transfer() {
    let r = report(&run(&["envelope", &data("intro.json")]));
    assert_eq!(r["pass"], true);
    assert_eq!(r["results"]["size_e"], 12);
    assert_eq!(r["results"]["size_l"], 12);
    assert_eq!(r["results"]["join_subfit_l"], false);
}

#[test]
fn dualize_round_trips_and_rejects_non_distributive() {
    let r = report(&run(&["dualize", &data("cube.json")]));
    assert_eq!(r["pass"], true);
    assert_eq!(r["results"]["points"], 3);
    assert_eq!(r["results"]["space"]["covers"], serde_json::json!([]));
    assert_eq!(run(&["dualize", &data("m3.json")]).status.code(), Some(2));
}

#[test]
fn enumerate_thm42_passes_at_six() {
    let out = run(&[
        "--jobs",
        "2",
        "enumerate",
        "--max-n",
        "6",
        "--verify",
        "thm42",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let r = report(&out);
    assert_eq!(r["results"]["thm42"]["failures"], 0);
    assert!(r["results"]["thm42"]["instances"].as_u64().unwrap() > 20);
}

#[test]
fn counterexample_runs_are_deterministic() {
    let args = [
        "counterexample",
        "--claims",
        "1,3,6",
        "--samples",
        "300",
        "--seed",
        "7",
    ];
    let (a, b) = (report(&run(&args)), report(&run(&args)));
    assert_eq!(a["pass"], true);
    assert_eq!(a["results"], b["results"]);
    assert_eq!(a["results"]["claim3"]["exact"], true);
}

#[test]
fn stdin_input_matches_file_input() {
    let text = std::fs::read(data("intro.json")).unwrap();
    let mut child = Command::new(env!("CARGO_BIN_EXE_subfit"))
        .args(["check", "-"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(&text).unwrap();
    let out = child.wait_with_output().unwrap();
    let from_file = report(&run(&["check", &data("intro.json")]));
    let from_stdin = report(&out);
    assert_eq!(from_stdin["results"], from_file["results"]);
    assert_eq!(
        from_stdin["inputs"]["sha256"],
        from_file["inputs"]["sha256"]
    );
}

#[test]
fn bad_inputs_exit_with_two() {
    let dir = env!("CARGO_TARGET_TMPDIR");
    let cyclic = format!("{dir}/cyclic.json");
    std::fs::write(&cyclic, r#"{"n":2,"covers":[[0,1],[1,0]]}"#).unwrap();
    let garbage = format!("{dir}/garbage.json");
    std::fs::write(&garbage, "not json").unwrap();
    for args in [
        vec!["check", cyclic.as_str()],
        vec!["check", garbage.as_str()],
        vec!["check", "/definitely/missing.json"],
        vec!["enumerate", "--max-n", "4", "--verify", "nonsense"],
        vec!["counterexample", "--claims", "9"],
    ] {
        let out = run(&args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(out.stdout.is_empty());
    }
}
