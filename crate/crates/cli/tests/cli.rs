use std::process::{Command, Output};

use zhelobenko::report::{FiltrationItem, Item, OracleItem, Report, Verdict, VerifyItem};

fn bin(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_zhelobenko"))
        .args(args)
        .env_remove("ZHELOBENKO_WORKERS")
        .output()
        .expect("binary runs")
}

fn report(args: &[&str]) -> (Report, i32) {
    let out = bin(args);
    let r: Report = serde_json::from_slice(&out.stdout).expect("stdout is a report");
    (r, out.status.code().unwrap())
}

#[test]
fn solve_a2_finds_degrees_one_and_two() {
    let (r, code) = report(&["solve", "--type", "A2", "--c", "-1", "--dmax", "2"]);
    assert_eq!(code, 0);
    assert_eq!(r.command, "solve");
    let Item::Solve(s) = &r.results[0] else {
        panic!("not a solve item")
    };
    assert_eq!(s.generator_degrees, vec![1, 2]);
    assert_eq!(s.c, "-1");
    assert_eq!(s.verdict, Verdict::Pass);
}

#[test]
fn filtration_g2_exponents() {
    let (r, code) = report(&["filtration", "--type", "G2"]);
    assert_eq!(code, 0);
    let Item::Filtration(FiltrationItem {
        exponents, dims, ..
    }) = &r.results[0]
    else {
        panic!()
    };
    assert_eq!(exponents, &vec![1, 5]);
    assert_eq!(dims, &vec![0, 1, 1, 1, 1, 2]);
}

#[test]
fn verify_a2_passes() {
    let (r, code) = report(&["verify", "--type", "A2", "--s", "1", "--mmax", "2"]);
    assert_eq!(code, 0);
    let Item::Verify(VerifyItem { records, .. }) = &r.results[0] else {
        panic!()
    };
    assert!(records.iter().all(|d| d.equal));
    assert_eq!(records.len(), 3);
}

#[test]
fn rational_scalars_are_strings() {
    let out = bin(&["verify", "--type", "B2", "--s", "3/2"]);
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["results"][0]["s"], serde_json::json!("3/2"));
    assert_eq!(v["schema"], serde_json::json!(zhelobenko::SCHEMA));
}

#[test]
fn scan_records_zero_but_passes() {
    let (r, code) = report(&[
        "scan",
        "--type",
        "A2",
        "--candidates",
        "-2,0,1,2",
        "--mmax",
        "2",
    ]);
    assert_eq!(code, 0);
    let Item::Scan(s) = &r.results[0] else {
        panic!()
    };
    let order: Vec<&str> = s.entries.iter().map(|e| e.s.as_str()).collect();
    assert_eq!(order, ["-2", "0", "1", "2"]);
    assert_eq!(s.failing, vec!["0".to_string()]);
}

#[test]
fn oracle_passes() {
    let (r, code) = report(&["oracle", "--mmax", "3"]);
    assert_eq!(code, 0);
    let Item::Oracle(OracleItem {
        spin2_divisible, ..
    }) = &r.results[0]
    else {
        panic!()
    };
    assert!(spin2_divisible);
}

#[test]
fn usage_errors_exit_2() {
    for args in [
        &["solve", "--type", "Q2"][..],
        &["solve", "--type", "A0"],
        &["verify", "--type", "A2", "--s", "x"],
        &["filtration", "--type", "A2", "--bogus"],
        &["frobnicate"],
        &[],
    ] {
        let out = bin(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(out.stdout.is_empty());
    }
}

#[test]
fn output_is_deterministic() {
    let args = ["solve", "--type", "B2", "--workers", "3"];
    let a = bin(&args).stdout;
    let b = bin(&args).stdout;
    assert_eq!(a, b);
    let c = Command::new(env!("CARGO_BIN_EXE_zhelobenko"))
        .args(["solve", "--type", "B2"])
        .env("ZHELOBENKO_WORKERS", "1")
        .output()
        .unwrap()
        .stdout;
    assert_eq!(a, c);
}

#[test]
fn scan_order_independent_of_workers() {
    let a = bin(&["scan", "--type", "B2", "--workers", "1"]).stdout;
    let b = bin(&["scan", "--type", "B2", "--workers", "4"]).stdout;
    assert_eq!(a, b);
}

#[test]
fn timing_is_opt_in() {
    let plain = bin(&["filtration", "--type", "A3"]).stdout;
    assert!(!String::from_utf8(plain).unwrap().contains("timing_ms"));
    let timed = bin(&["filtration", "--type", "A3", "--timing"]).stdout;
    assert!(String::from_utf8(timed).unwrap().contains("timing_ms"));
}

#[test]
fn out_file_and_text_format() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("r.txt");
    let out = bin(&[
        "verify",
        "--type",
        "G2",
        "--output",
        "text",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let text = std::fs::read_to_string(&path).unwrap();
    assert!(text.starts_with("zhelobenko-report/1 verify: pass"));
    assert!(text.contains("verify G2 s = 1 mmax = 5: pass"));
}

#[test]
fn unwritable_out_is_an_internal_error() {
    let out = bin(&[
        "filtration",
        "--type",
        "A1",
        "--out",
        "/nonexistent/dir/r.json",
    ]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("error"));
}

#[test]
fn roots_debug_lists_brackets() {
    let (r, _) = report(&["roots", "--type", "A1", "--debug"]);
    let Item::Roots(x) = &r.results[0] else {
        panic!()
    };
    assert_eq!(x.dimension, 3);
    let b = x.brackets.as_ref().unwrap();
    assert!(b.iter().any(|b| b.value == "h1"));
    let (r, _) = report(&["roots", "--type", "E8"]);
    let Item::Roots(x) = &r.results[0] else {
        panic!()
    };
    assert_eq!(
        (x.positive_roots.len(), x.weyl_group_order),
        (120, 696_729_600)
    );
    assert!(x.brackets.is_none());
}

#[test]
fn all_covers_default_types() {
    let (r, code) = report(&["all"]);
    assert_eq!(code, 0);
    let types: Vec<String> = r
        .results
        .iter()
        .filter_map(|i| match i {
            Item::Filtration(f) => Some(f.lie_type.clone()),
            _ => None,
        })
        .collect();
    assert_eq!(types, zhelobenko::config::DEFAULT_TYPES);
    assert!(matches!(r.results.last(), Some(Item::Oracle(_))));
}

#[test]
fn empty_report_is_valid_and_passes() {
    let r = Report::new("all", vec![]);
    let v: serde_json::Value = serde_json::from_str(&r.to_json()).unwrap();
    assert_eq!(v["results"], serde_json::json!([]));
    assert_eq!(v["verdict"], serde_json::json!("pass"));
}

#[test]
fn one_failing_item_fails_the_report() {
    let (pass, _) = report(&["verify", "--type", "A1", "--s", "2"]);
    let mut item = pass.results[0].clone();
    if let Item::Verify(v) = &mut item {
        v.verdict = Verdict::Fail;
    }
    let r = Report::new("verify", vec![pass.results[0].clone(), item]);
    assert_eq!(r.verdict, Verdict::Fail);
    assert_eq!(zhelobenko::exit_code(&r), 1);
    let back: Report = serde_json::from_str(&r.to_json()).unwrap();
    assert_eq!(back, r);
}
