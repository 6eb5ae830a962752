use std::path::PathBuf;
use std::process::{Command, Output};

fn cuboid(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cuboid"))
        .args(args)
        .env_remove("CUBOID_OUT_DIR")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

const EXAMPLE1: [&str; 9] = ["1120", "840", "1035", "1400", "1525", "969", "1617", "1481", "1967"];

#[test]
fn family_json_has_exact_integers() {
    let o = cuboid(&["family", "--s1", "1/2", "--m", "1/3", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["integer"]["x"], "1120");
    assert_eq!(v["integer"]["d2"], "1967");
    assert_eq!(v["scaled"]["u2"], "207/224");
    assert_eq!(v["point"]["quad"]["s3"], "16/35");
    assert!(v.get("approximate").is_none());
}

#[test]
fn family_raw_matches_reduced_for_examples() {
    let a = cuboid(&["family", "--s1", "1/2", "--m", "1/3"]);
    let b = cuboid(&["family", "--s1", "1/2", "--m", "1/3", "--raw"]);
    assert_eq!(stdout(&a), stdout(&b));
}

#[test]
fn family_approx_is_marked() {
    let o = cuboid(&["family", "--s1", "1/2", "--m", "1/3", "--approx"]);
    let text = stdout(&o);
    assert!(text.contains("approximate u1~0.750000000"));
    let plain = stdout(&cuboid(&["family", "--s1", "1/2", "--m", "1/3"]));
    assert!(!plain.contains('~') && !plain.contains('.'));
}

#[test]
fn family_errors_exit_two() {
    let o = cuboid(&["family", "--s1", "1/2", "--m", "1/5"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("s2=119/80 out of (0,1)"));
    assert_eq!(cuboid(&["family", "--s1", "1/0", "--m", "1/3"]).status.code(), Some(2));
    assert_eq!(cuboid(&["family", "--s1", "1/2"]).status.code(), Some(2));
}

#[test]
fn verify_exit_codes() {
    let mut args = vec!["verify"];
    args.extend(EXAMPLE1);
    assert_eq!(cuboid(&args).status.code(), Some(0));
    args[7] = "1618";
    let o = cuboid(&args);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("body-diagonal-c2"));
    assert!(stderr(&o).contains("parallelogram-face"));
    assert_eq!(cuboid(&args[..9]).status.code(), Some(2));
    args[2] = "eight";
    assert_eq!(cuboid(&args).status.code(), Some(2));
}

#[test]
fn identities_summary_and_fault() {
    let o = cuboid(&["identities", "--seed", "7", "--cases", "1"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("all identities hold"));
    let o = cuboid(&[
        "identities",
        "--seed",
        "7",
        "--cases",
        "5",
        "--inject-fault",
        "par-beta-inverse",
    ]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).starts_with("par-beta-inverse fails in parallelogram case 0"));
}

#[test]
fn scan_formats() {
    let o = cuboid(&["scan", "--max-edge", "240", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    let found =
        v.as_array().unwrap().iter().any(|r| {
            r["t"] == 240 && r["legA"] == 44 && r["legW"] == 117 && r["hyp"] == 125 && r["kind"] == "euler-brick"
        });
    assert!(found);
    let o = cuboid(&["scan", "--max-edge", "520", "--format", "csv"]);
    assert!(stdout(&o)
        .lines()
        .any(|l| l == "520,756,117,765,Euler-only,Heron,Heron,face-cuboid"));
    let o = cuboid(&["scan", "--max-edge", "10"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).is_empty());
    assert_eq!(cuboid(&["scan"]).status.code(), Some(2));
    assert_eq!(cuboid(&["scan", "--max-edge", "ten"]).status.code(), Some(2));
}

#[test]
fn examples_are_byte_identical() {
    for format in ["text", "json", "csv"] {
        let a = cuboid(&["examples", "--format", format]);
        let b = cuboid(&["examples", "--format", format]);
        assert_eq!(a.status.code(), Some(0));
        assert_eq!(a.stdout, b.stdout, "format {format}");
    }
}

#[test]
fn lemma_scan_reports_trivial_sets() {
    let o = cuboid(&["lemma-scan", "--height", "20"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).matches("trivial only").count(), 4);
}

#[test]
fn out_dir_from_environment() {
    let dir: PathBuf = std::env::temp_dir().join(format!("cuboid-out-{}", std::process::id()));
    let o = Command::new(env!("CARGO_BIN_EXE_cuboid"))
        .args(["scan", "--max-edge", "240", "--format", "csv"])
        .env("CUBOID_OUT_DIR", &dir)
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(0));
    let written = std::fs::read_to_string(dir.join("scan.csv")).unwrap();
    assert_eq!(written.as_bytes(), o.stdout.as_slice());
    std::fs::remove_dir_all(&dir).unwrap();
}
