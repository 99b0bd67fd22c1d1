use std::path::PathBuf;
use std::process::{Command, Output};

fn cubepar(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cubepar"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn golden(name: &str) -> String {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden").join(name);
    std::fs::read_to_string(path).expect("golden file")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).expect("UTF-8 output")
}

#[test]
fn freethm_reports_match_goldens() {
    for (ty, file) in [
        ("forall X. X -> X", "freethm_identity.json"),
        ("forall X. X -> X -> X", "freethm_church_bool.json"),
        ("forall X. (X -> X) -> X", "freethm_empty.json"),
    ] {
        let o = cubepar(&["freethm", ty, "--json", "-"]);
        assert_eq!(o.status.code(), Some(0));
        assert_eq!(stdout(&o), golden(file), "{ty}");
    }
}

#[test]
fn interp_dumps_match_goldens() {
    let o = cubepar(&["interp", "Unit"]);
    assert_eq!(stdout(&o), golden("interp_unit.json"));
    let o = cubepar(&["interp", "/\\X. \\x:X. x"]);
    assert_eq!(stdout(&o), golden("interp_identity.json"));
}

#[test]
fn unit_is_a_singleton_at_every_level() {
    let o = cubepar(&["interp", "Unit", "--p", "2", "--size", "1"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    let cells = v["cells"].as_array().unwrap();
    assert_eq!(cells.len(), 3);
    for c in cells {
        assert!(c["carriers"].as_array().unwrap().iter().all(|n| n == 1));
    }
}

#[test]
fn identity_term_is_the_family_of_identities() {
    let o = cubepar(&["interp", "/\\X. \\x:X. x", "--size", "3"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["type"], "forall X. X -> X");
    assert_eq!(v["rendered"], "{0: [], 1: [0], 2: [0, 1], 3: [0, 1, 2]}");
}

#[test]
fn reports_are_deterministic() {
    let args = ["check", "lambda2", "--json", "-"];
    let (a, b) = (cubepar(&args), cubepar(&args));
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let v: serde_json::Value = serde_json::from_slice(&a.stdout).unwrap();
    assert_eq!(v["schema"], 1);
    assert_eq!(v["status"], "pass");
}

#[test]
fn exit_codes() {
    assert_eq!(cubepar(&["check", "cube", "--p", "3"]).status.code(), Some(0));
    assert_eq!(cubepar(&["check", "nonsense"]).status.code(), Some(2));
    assert_eq!(cubepar(&["check", "cube", "--p", "0"]).status.code(), Some(2));
    assert_eq!(cubepar(&["freethm", "forall X. X ->"]).status.code(), Some(2));
    assert_eq!(cubepar(&["freethm", "forall X. Y"]).status.code(), Some(2));
    let ill = cubepar(&["interp", "\\x:Unit. x x"]);
    assert_eq!(ill.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&ill.stderr).contains("type error"));
    let big = cubepar(&["freethm", "forall X. (X -> X) -> X -> X", "--size", "4"]);
    assert_eq!(big.status.code(), Some(3));
    let tight = cubepar(&["check", "algebra", "--budget", "10"]);
    assert_eq!(tight.status.code(), Some(3));
}

#[test]
fn suite_flag_and_file_input() {
    let o = cubepar(&["check", "--suite", "cube", "--json", "-"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["suite"], "cube");
    let dir = std::env::temp_dir().join(format!("cubepar-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let file = dir.join("ty.txt");
    std::fs::write(&file, "forall X. X -> X -> X\n").unwrap();
    let o = cubepar(&["freethm", "--file", file.to_str().unwrap()]);
    assert!(stdout(&o).starts_with("forall X. X -> X -> X: 2 elements"));
    std::fs::remove_dir_all(dir).ok();
}
