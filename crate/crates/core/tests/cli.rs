use std::process::{Command, Output};

fn descents(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_descents")).args(args).output().expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = descents(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

/// Data rows of a pretty table, split on whitespace, header dropped.
fn table_rows(text: &str) -> Vec<Vec<String>> {
    text.lines().skip(1).map(|l| l.split_whitespace().map(str::to_string).collect()).collect()
}

#[test]
fn matrix_a2_pretty() {
    assert_eq!(
        stdout(&["matrix", "A", "2", "--format", "pretty"]),
        "1  1  1  1\n1 -1  1 -1\n1  1 -1 -1\n1 -1  0  1\n"
    );
}

#[test]
fn matrix_am0_is_one() {
    assert_eq!(stdout(&["matrix", "AM", "0"]), "1\n");
}

#[test]
fn explicit_build_is_byte_identical() {
    for format in ["pretty", "csv", "json"] {
        assert_eq!(
            stdout(&["matrix", "AM", "3", "--explicit", "--format", format]),
            stdout(&["matrix", "AM", "3", "--format", format])
        );
    }
}

#[test]
fn matrix_json_round_trips() {
    let text = stdout(&["matrix", "AM", "2", "--inverse", "--format", "json"]);
    let rows: Vec<Vec<String>> = serde_json::from_str(&text).unwrap();
    assert_eq!(rows[3], ["1/6", "-1/3", "-1/6", "1/3"]);
}

#[test]
fn verify_suites_pass() {
    for args in [&["verify", "matrices", "6"][..], &["verify", "all", "0"], &["verify", "eigen", "--n-max", "5"]] {
        let report: serde_json::Value = serde_json::from_str(&stdout(args)).unwrap();
        assert_eq!(report["pass"], true, "{args:?}");
    }
    let eigen: serde_json::Value = serde_json::from_str(&stdout(&["verify", "eigen", "5"])).unwrap();
    assert!(eigen["checks"].as_array().unwrap().iter().any(|c| c["name"].as_str().unwrap().contains("charpoly")));
}

#[test]
fn character_table_s3() {
    let rows = table_rows(&stdout(&["character", "3", "--source", "mn"]));
    assert_eq!(rows.len(), 3);
    assert_eq!(rows[0], ["(3)", "1", "1", "1"]);
    assert_eq!(rows[1], ["(2,1)", "2", "0", "-1"]);
    assert_eq!(rows[2], ["(1,1,1)", "1", "-1", "1"]);
}

#[test]
fn character_sources_agree() {
    for source in ["knuth", "length", "involutions"] {
        let out = descents(&["character", "5", "--source", source, "--diff", "mn"]);
        assert!(out.status.success(), "{source}");
        assert!(table_rows(&String::from_utf8(out.stdout).unwrap()).is_empty(), "{source}");
    }
}

#[test]
fn descent_dist_involutions() {
    let rows = table_rows(&stdout(&["descent-dist", "involutions", "3", "--mode", "both"]));
    assert_eq!(rows.len(), 4);
    for r in rows {
        assert_eq!(&r[r.len() - 3..], ["1", "1", "0"]);
    }
}

#[test]
fn descent_dist_empty_is_zero() {
    let rows = table_rows(&stdout(&["descent-dist", "explicit", "--empty"]));
    assert!(!rows.is_empty());
    assert!(rows.iter().all(|r| r.last().unwrap() == "0"));
    let rows = table_rows(&stdout(&["descent-dist", "explicit", "4", "--empty", "--mode", "inverted"]));
    assert_eq!(rows.len(), 8);
    assert!(rows.iter().all(|r| r.last().unwrap() == "0"));
}

#[test]
fn descent_dist_syt_22() {
    let text = stdout(&["descent-dist", "syt", "4", "--shape", "2,2", "--mode", "both", "--format", "csv"]);
    let ones: Vec<&str> = text.lines().skip(1).filter(|l| l.contains(",1,1,0")).collect();
    assert_eq!(ones.len(), 2, "{text}");
    assert!(text.lines().skip(1).all(|l| l.ends_with(",0")));
}

#[test]
fn fineness_json() {
    let report: serde_json::Value = serde_json::from_str(&stdout(&["fineness", "knuth:3,2", "5"])).unwrap();
    assert_eq!(report["fine"], true);
    let report: serde_json::Value = serde_json::from_str(&stdout(&["fineness", "explicit:2,1,3", "3"])).unwrap();
    assert_eq!(report["fine"], false);
}

#[test]
fn identical_invocations_identical_bytes() {
    let args = ["character", "6", "--source", "length", "--format", "csv"];
    assert_eq!(descents(&args).stdout, descents(&args).stdout);
}

#[test]
fn out_writes_file() {
    let path = std::env::temp_dir().join(format!("descents-out-{}.csv", std::process::id()));
    let out = descents(&["matrix", "B", "1", "--format", "csv", "--out", path.to_str().unwrap()]);
    assert!(out.status.success());
    assert!(out.stdout.is_empty());
    assert_eq!(std::fs::read_to_string(&path).unwrap(), stdout(&["matrix", "B", "1", "--format", "csv"]));
    std::fs::remove_file(path).unwrap();
}

#[test]
fn usage_errors_exit_2() {
    for args in [
        &["matrix", "Q", "2"][..],
        &["matrix", "A", "13"],
        &["character", "9"],
        &["verify", "nonsense"],
        &["descent-dist", "knuth", "4"],
        &["fineness", "length:99", "4"],
    ] {
        assert_eq!(descents(args).status.code(), Some(2), "{args:?}");
    }
}
