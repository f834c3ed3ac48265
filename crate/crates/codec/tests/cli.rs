use std::process::Command;

use clap::CommandFactory;
use composite_codec::args::Cli;
use composite_codec::{run, OPERATIONS};

fn invoke(args: &[&str]) -> (i32, String, String) {
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let code = run(std::iter::once("composite-codec").chain(args.iter().copied()), &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn ok(args: &[&str]) -> String {
    let (code, out, err) = invoke(args);
    assert_eq!(code, 0, "{args:?}: {err}");
    out
}

fn split(line: &str) -> Vec<&str> {
    line.split_whitespace().collect()
}

#[test]
fn every_operation_is_reachable() {
    let names: Vec<String> = Cli::command().get_subcommands().map(|c| c.get_name().to_string()).collect();
    let mut used = std::collections::BTreeSet::new();
    for (op, example) in OPERATIONS {
        let args = split(example);
        assert!(names.contains(&args[0].to_string()), "{op}: no subcommand {}", args[0]);
        used.insert(args[0]);
        let (code, out, err) = invoke(&args);
        assert_eq!(code, 0, "{op}: {example}: {err}");
        assert!(!out.is_empty(), "{op}: no output");
    }
    for name in &names {
        assert!(used.contains(name.as_str()), "subcommand {name} has no listed operation");
    }
    for module in ["alphabet", "balls", "counting", "bounds", "substitution", "deletion", "oracle", "capacity"] {
        assert!(OPERATIONS.iter().any(|(op, _)| op.starts_with(module)), "{module} unreachable");
    }
}

#[test]
fn documented_examples() {
    assert_eq!(ok(&["decompose", "--k", "4", "012340"]), "000010\n000110\n001110\n011110\n");
    let zeros = "0".repeat(30);
    assert_eq!(ok(&["ball", "--k", "2", "--spec", "(1,0)", "--size", &zeros]), "1\n");
    let table = ok(&["bounds", "--table", "table4", "--n-max", "10"]);
    let lines: Vec<&str> = table.lines().collect();
    assert_eq!(lines.len(), 10);
    assert_eq!(lines[0], "n,gspb_d10,aspv_d10,aspv_d1");
    assert_eq!(lines[9], "10,23329,11809,5904");
    assert_eq!(ok(&["transform", "--k", "4", "--shift", "-1", "012340"]), "401234\n");
}

#[test]
fn exit_codes() {
    assert_eq!(invoke(&["frobnicate"]).0, 2);
    assert_eq!(invoke(&["decompose", "--k", "2", "--bogus", "01"]).0, 2);
    assert_eq!(invoke(&["decompose", "012"]).0, 2);
    let (code, _, err) = invoke(&["decompose", "--k", "2", "0130"]);
    assert_eq!(code, 1);
    assert!(err.contains("letter 3 exceeds k = 2"), "{err}");
    let (code, _, err) = invoke(&["reconstruct", "0101", "011"]);
    assert_eq!(code, 1);
    assert!(err.contains("dimension mismatch"), "{err}");
    assert_eq!(invoke(&["capacity", "--p", "0.7"]).0, 1);
    assert_eq!(invoke(&["--help"]).0, 0);
}

#[test]
fn outputs_are_deterministic() {
    for args in [
        vec!["search-optimal", "--n", "4", "--spec", "t:1"],
        vec!["--format", "json", "capacity", "--sweep", "--points", "6"],
        vec!["--format", "csv", "bounds", "--table", "summary8", "--n-max", "12"],
    ] {
        assert_eq!(ok(&args), ok(&args));
    }
}

#[test]
fn csv_and_json_schemas() {
    let csv = ok(&["--format", "csv", "capacity", "--sweep", "--points", "3"]);
    let mut lines = csv.lines();
    assert_eq!(lines.next(), Some("p,alpha_opt,cap_C_bits,cap_C2_bits"));
    assert_eq!(lines.count(), 3);

    let json = ok(&["--format", "json", "bounds", "--kind", "gspb", "--n", "5", "--spec", "d:(1,0)"]);
    let v: serde_json::Value = serde_json::from_str(json.trim()).unwrap();
    assert_eq!(v["kind"], "valid_upper");
    assert_eq!(v["value"], "388/3");
    assert_eq!(v["floor"], 129);

    let json = ok(&["--format", "json", "ball", "--k", "2", "--spec", "d:1", "--enumerate", "012"]);
    for line in json.lines() {
        let v: serde_json::Value = serde_json::from_str(line).unwrap();
        assert!(v["y0"].is_string() && v["y1"].is_string());
    }
}

#[test]
fn encode_decode_round_trip() {
    let enc = ok(&["--format", "csv", "encode", "--construction", "c6", "01201"]);
    let row: Vec<String> = enc.lines().nth(1).unwrap().split(',').map(String::from).collect();
    let mut y1 = row[2].clone();
    y1.remove(3);
    assert_eq!(ok(&["decode", "--construction", "c6", &row[1], &y1]), "01201\n");

    let enc = ok(&["encode", "--construction", "lee", "--k", "4", "--n", "5", "--a", "3", "7"]);
    let parts = split(&enc);
    let mut rows: Vec<String> = parts[1..].iter().map(|s| s.to_string()).collect();
    let flipped: String = rows[2].chars().enumerate().map(|(i, c)| if i == 1 { if c == '0' { '1' } else { '0' } } else { c }).collect();
    rows[2] = flipped;
    let mut args = vec!["decode", "--construction", "lee", "--k", "4", "--n", "5", "--a", "3"];
    args.extend(rows.iter().map(String::as_str));
    assert_eq!(ok(&args).trim(), parts[0]);
}

#[test]
fn verify_reports_codebook_and_sampling() {
    let dir = tempfile::tempdir().unwrap();
    let good = dir.path().join("good.txt");
    std::fs::write(&good, "# length-5 repetition\n00000\n11111\n22222\n").unwrap();
    let out = ok(&["verify", "--codebook", good.to_str().unwrap(), "--spec", "t:2"]);
    assert_eq!(split(&out)[1], "true");
    let bad = dir.path().join("bad.txt");
    std::fs::write(&bad, "001\n002\n").unwrap();
    assert_eq!(invoke(&["verify", "--codebook", bad.to_str().unwrap(), "--spec", "(1,0)"]).0, 1);

    let a = ok(&["verify", "--construction", "c3", "--n", "8", "--sample", "10", "--seed", "7"]);
    assert_eq!(a, ok(&["verify", "--construction", "c3", "--n", "8", "--sample", "10", "--seed", "7"]));
    assert_eq!(split(&a)[0], "10");
}

#[test]
fn caps_from_environment_and_flags() {
    let bin = env!("CARGO_BIN_EXE_composite-codec");
    let status = Command::new(bin)
        .args(["search-optimal", "--n", "4", "--spec", "t:1"])
        .env("COMPOSITE_CODEC_CAPS", "max_vertices=10")
        .output()
        .unwrap();
    assert_eq!(status.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&status.stderr).contains("size limit"));

    let status = Command::new(bin)
        .args(["--max-vertices", "100", "search-optimal", "--n", "4", "--spec", "t:1"])
        .env("COMPOSITE_CODEC_CAPS", "max_vertices=10")
        .output()
        .unwrap();
    assert_eq!(status.status.code(), Some(0));

    let status = Command::new(bin).args(["search-optimal", "--binary", "--n", "3"]).env("COMPOSITE_CODEC_CAPS", "nonsense").output().unwrap();
    assert_eq!(status.status.code(), Some(2));
}

#[test]
fn sweep_plot_is_written() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("cap.svg");
    ok(&["capacity", "--sweep", "--points", "11", "--plot", path.to_str().unwrap()]);
    let svg = std::fs::read_to_string(&path).unwrap();
    assert!(svg.starts_with("<svg"));
    assert!(svg.contains("alpha_opt(p) versus p"));
    assert!(svg.contains("cap(C2)"));
    assert_eq!(svg.matches("<polyline").count(), 3);
}
