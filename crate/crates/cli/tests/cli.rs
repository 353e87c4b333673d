use std::io::Write;
use std::process::{Command, Output, Stdio};

use serde_json::Value;

fn satake(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_satake"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn satake_stdin(args: &[&str], input: &[u8]) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_satake"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary runs");
    child.stdin.take().unwrap().write_all(input).unwrap();
    child.wait_with_output().unwrap()
}

fn json(out: &Output) -> Value {
    assert!(out.status.success(), "stderr: {}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

#[test]
fn dual_of_sc_a1_is_adjoint() {
    let v = json(&satake(&["dual", "--type", "A1", "--isogeny", "sc"]));
    assert_eq!(v["simple_roots"], serde_json::json!([[1]]));
    assert_eq!(v["simple_coroots"], serde_json::json!([[2]]));
}

#[test]
fn dual_twice_through_a_pipe_is_the_original() {
    let dual = satake(&["dual", "--type", "G2"]);
    let original = satake_stdin(&["dual", "--file", "-"], &dual.stdout);
    let v = json(&original);
    assert_eq!(v["name"], "G2 sc");
    assert_eq!(v["simple_coroots"], serde_json::json!([[1, 0], [0, 1]]));
    let twice = satake_stdin(&["dual", "--file", "-"], &satake_stdin(&["dual", "--file", "-"], &original.stdout).stdout);
    assert_eq!(twice.stdout, original.stdout);
}

#[test]
fn dual_from_file_transposes_b2() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("b2.json");
    let b2 = satake_stdin(&["dual", "--file", "-"], &satake(&["dual", "--type", "B2"]).stdout);
    std::fs::write(&path, &b2.stdout).unwrap();
    let dual = json(&satake(&["dual", "--file", path.to_str().unwrap()]));
    // B2 sc has roots = rows of the Cartan matrix; its dual has them as coroots.
    assert_eq!(dual["simple_coroots"], serde_json::json!([[2, -2], [-1, 2]]));
    assert_eq!(dual["simple_roots"], serde_json::json!([[1, 0], [0, 1]]));
}

#[test]
fn invalid_datum_exits_2_with_report() {
    let bad = br#"{"name":"bad","rank_lattice":1,"rank_semisimple":1,"simple_roots":[[3]],"simple_coroots":[[1]]}"#;
    let out = satake_stdin(&["dual", "--file", "-"], bad);
    assert_eq!(out.status.code(), Some(2));
    assert!(out.stdout.is_empty());
    assert!(!out.stderr.is_empty());

    let out = satake_stdin(&["dual", "--file", "-"], b"not json");
    assert_eq!(out.status.code(), Some(2));
    assert_eq!(satake(&["dual", "--type", "D3"]).status.code(), Some(2));
}

#[test]
fn mult_adjoint_zero_weight_in_a2() {
    let v = json(&satake(&["mult", "--type", "A2", "1,1", "0"]));
    assert_eq!(v["multiplicity"], 2);
    let text = satake(&["mult", "--type", "A2", "--format", "text", "1,1", "0"]);
    assert_eq!(String::from_utf8_lossy(&text.stdout), "2\n");
}

#[test]
fn mult_rejects_non_dominant_and_malformed() {
    assert_eq!(satake(&["mult", "--type", "A2", "-1,0", "0"]).status.code(), Some(2));
    assert_eq!(satake(&["mult", "--type", "A2", "1", "0"]).status.code(), Some(2));
    assert_eq!(satake(&["mult", "--type", "A2", "x,y", "0"]).status.code(), Some(2));
}

#[test]
fn weyl_cap_exceeded_exits_3() {
    let out = satake(&["mult", "--type", "E8", "0", "0"]);
    assert_eq!(out.status.code(), Some(3));
    let out = satake(&["mult", "--type", "B3", "--weyl-cap", "10", "0,0,0", "0,0,0"]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn table_footer_matches_dimension() {
    let v = json(&satake(&["table", "--type", "A2", "0"]));
    assert_eq!(v["weights"], serde_json::json!([{"nu": [0, 0], "multiplicity": 1}]));
    let v = json(&satake(&["table", "--type", "G2", "--isogeny", "adjoint", "0,1"]));
    assert_eq!(v["total"], v["weyl_dimension"]);
    let tsv = satake(&["table", "--type", "A2", "--format", "tsv", "1,1"]);
    let text = String::from_utf8(tsv.stdout).unwrap();
    assert!(text.starts_with("nu\tmultiplicity\n"));
    assert!(text.contains("# total\t8\n"));
    assert!(text.contains("# weyl_dimension\t8\n"));
}

#[test]
fn dims_render_empty_explicitly() {
    let v = json(&satake(&["dims", "--type", "A1", "--isogeny", "adjoint", "1", "-1"]));
    assert_eq!(v["s_intersection_dim"], 0);
    assert_eq!(v["t_intersection_dim"], 1);
    assert_eq!(v["mv_cycle_count"], 1);

    let v = json(&satake(&["dims", "--type", "A1", "--isogeny", "adjoint", "1", "1"]));
    assert_eq!(v["s_intersection_dim"], v["orbit_dim"]);
    assert_eq!(v["mv_cycle_count"], 1);

    let v = json(&satake(&["dims", "--type", "A1", "--isogeny", "adjoint", "1", "3"]));
    assert_eq!(v["s_intersection_dim"], "Empty");
    assert_eq!(v["t_intersection_dim"], "Empty");
    assert_eq!(v["mv_cycle_count"], 0);
}

#[test]
fn tensor_clebsch_gordan() {
    let v = json(&satake(&["tensor", "--type", "A1", "--isogeny", "adjoint", "1", "1"]));
    assert_eq!(v["decomposition"], serde_json::json!({"2": 1, "0": 1}));
    let v = json(&satake(&["tensor", "--type", "A2", "1,1", "0"]));
    assert_eq!(v["decomposition"], serde_json::json!({"1,1": 1}));
}

#[test]
fn report_a2_passes() {
    let out = satake(&["report", "--type", "A2", "--height-bound", "4"]);
    let v = json(&out);
    let checks = v["checks"].as_array().unwrap();
    assert!(!checks.is_empty());
    assert!(checks.iter().all(|c| c["passed"] == true));
    assert!(v["objects"].as_array().unwrap().iter().any(|o| o["dim"] == 8));
}

#[test]
fn check_passes_for_a1_and_g2() {
    for ty in ["A1", "G2"] {
        let v = json(&satake(&["check", "--type", ty, "--height-bound", "12"]));
        assert_eq!(v["passed"], true, "{ty}");
    }
}

#[test]
fn corrupted_cache_is_ignored() {
    let dir = tempfile::tempdir().unwrap();
    let cache = dir.path().join("partitions.json");
    let cache = cache.to_str().unwrap();
    let reference = satake(&["check", "--type", "B2", "--height-bound", "8", "--no-cache"]);
    assert!(reference.status.success());

    let warm = satake(&["check", "--type", "B2", "--height-bound", "8", "--cache", cache]);
    assert_eq!(warm.stdout, reference.stdout);
    let text = std::fs::read_to_string(cache).unwrap();
    assert!(text.contains("satake-partition-cache"));

    // Flip the stored values without fixing the checksum.
    let tampered = text.replacen("]],[[", "]],[[9,", 1).replace(",1]", ",7]");
    std::fs::write(cache, tampered).unwrap();
    let out = satake(&["check", "--type", "B2", "--height-bound", "8", "--cache", cache]);
    assert_eq!(out.stdout, reference.stdout);
    assert!(String::from_utf8_lossy(&out.stderr).contains("ignoring cache"));

    std::fs::write(cache, b"\x00\x01garbage").unwrap();
    let out = satake(&["check", "--type", "B2", "--height-bound", "8", "--cache", cache]);
    assert!(out.status.success());
    assert_eq!(out.stdout, reference.stdout);
}

#[test]
fn cache_from_another_datum_is_ignored() {
    let dir = tempfile::tempdir().unwrap();
    let cache = dir.path().join("c.json");
    let cache = cache.to_str().unwrap();
    assert!(satake(&["mult", "--type", "B2", "--cache", cache, "3,3", "0"]).status.success());
    let out = satake(&["mult", "--type", "C2", "--cache", cache, "3,3", "0"]);
    assert_eq!(json(&out), json(&satake(&["mult", "--type", "C2", "--no-cache", "3,3", "0"])));
    assert!(String::from_utf8_lossy(&out.stderr).contains("different root datum"));
}

#[test]
fn outputs_are_deterministic_and_cache_transparent() {
    let dir = tempfile::tempdir().unwrap();
    let cache = dir.path().join("c.json");
    let cache = cache.to_str().unwrap();
    for format in ["json", "tsv", "text"] {
        let args = ["report", "--type", "B2", "--isogeny", "adjoint", "--height-bound", "6", "--format", format];
        let a = satake(&args);
        let b = satake(&args);
        assert!(a.status.success());
        assert_eq!(a.stdout, b.stdout, "{format}");
        let mut cached = args.to_vec();
        cached.extend(["--cache", cache]);
        assert_eq!(satake(&cached).stdout, a.stdout, "{format} cold cache");
        assert_eq!(satake(&cached).stdout, a.stdout, "{format} warm cache");
    }
}

#[test]
fn datum_source_is_required_and_exclusive() {
    assert_eq!(satake(&["check"]).status.code(), Some(2));
    assert_eq!(satake(&["check", "--type", "A1", "--file", "x.json"]).status.code(), Some(2));
    assert_eq!(satake(&["check", "--type", "A1", "--height-bound", "-1"]).status.code(), Some(2));
    assert_eq!(satake(&["check", "--type", "A1", "--format", "xml"]).status.code(), Some(2));
}
