use std::process::{Command, Output};

use spinfib::cli::{run, EXIT_DATA, EXIT_DOMAIN, EXIT_FAILED, EXIT_OK, EXIT_USAGE};

fn spinfib(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_spinfib"))
        .args(args)
        .env_remove("SPINFIB_OEIS_BASE")
        .output()
        .expect("binary runs")
}

/// Runs the CLI in-process: (exit code, stdout, stderr).
fn call(args: &[&str]) -> (i32, String, String) {
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let argv = std::iter::once("spinfib").chain(args.iter().copied());
    let code = run(argv, &mut out, &mut err);
    (
        code,
        String::from_utf8(out).unwrap(),
        String::from_utf8(err).unwrap(),
    )
}

fn json(text: &str) -> serde_json::Value {
    serde_json::from_str(text).expect("valid json")
}

#[test]
fn grid_text_is_the_reference_grid() {
    let out = spinfib(&["grid", "--seeds", "0,1,1,1", "--size", "7"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    let rows: Vec<Vec<u64>> = text
        .lines()
        .map(|l| l.split_whitespace().map(|v| v.parse().unwrap()).collect())
        .collect();
    assert_eq!(rows.len(), 8);
    assert_eq!(rows[0], [13, 21, 18, 19, 19, 18, 21, 13]);
    assert_eq!(rows[7], [0, 1, 1, 2, 3, 5, 8, 13]);
    // rows[7 - n][m]
    assert_eq!(rows[7 - 4][7], 19);
    assert_eq!(rows[7 - 3][6], 12);
}

#[test]
fn grid_csv_and_json() {
    let (code, out, _) = call(&[
        "grid", "--seeds", "0,1,1,1", "--size", "1", "--format", "csv",
    ]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(out.trim_end(), "0,1\n1,1");

    let (code, out, _) = call(&[
        "grid", "--seeds", "2,1,3,4", "--size", "1", "--format", "json",
    ]);
    assert_eq!(code, EXIT_OK);
    let v = json(&out);
    assert_eq!(v["rows"], serde_json::json!([["2", "1"], ["1", "3"]]));
    assert_eq!(v["seeds"], serde_json::json!(["2", "1", "3", "4"]));
    assert_eq!(v["convention"], "b-wins");
}

#[test]
fn grid_usage_errors() {
    let out = spinfib(&["grid", "--seeds", "x", "--size", "3"]);
    assert_eq!(out.status.code(), Some(EXIT_USAGE));
    assert!(String::from_utf8(out.stderr).unwrap().contains("Usage"));
    for size in ["0", "501", "-3"] {
        let (code, _, err) = call(&["grid", "--size", size]);
        assert_eq!(code, EXIT_USAGE, "size {size}: {err}");
    }
}

#[test]
fn eval_methods() {
    for method in ["closed", "recurrence"] {
        let (code, out, _) = call(&["eval", "7", "4", "--seeds", "0,1,1,1", "--method", method]);
        assert_eq!((code, out.trim()), (EXIT_OK, "19"));
    }
    let (code, out, _) = call(&["eval", "0", "0", "--seeds", "5,0,0,0"]);
    assert_eq!((code, out.trim()), (EXIT_OK, "5"));
}

#[test]
fn literal_variant_warns_on_stderr() {
    let args = [
        "eval",
        "3",
        "5",
        "--seeds",
        "2,1,3,4",
        "--method",
        "prop3",
        "--variant",
        "paper-literal",
    ];
    let (code, out, err) = call(&args);
    assert_eq!((code, out.trim()), (EXIT_OK, "20"));
    assert!(err.contains("23"), "{err}");

    let (code, out, err) = call(&["eval", "3", "5", "--seeds", "2,1,3,4", "--method", "prop3"]);
    assert_eq!((code, out.trim(), err.as_str()), (EXIT_OK, "23", ""));
}

#[test]
fn decomposition_domain_error() {
    let (code, _, err) = call(&["eval", "4", "5", "--method", "prop3"]);
    assert_eq!(code, EXIT_DOMAIN);
    assert!(err.contains("|m - n| >= 2"), "{err}");
}

#[test]
fn eval_json_matches_text() {
    let args = [
        "eval",
        "150",
        "90",
        "--seeds",
        "3,-2,7,1",
        "--method",
        "recurrence",
    ];
    let (_, text, _) = call(&args);
    let mut with_json = args.to_vec();
    with_json.extend(["--format", "json"]);
    let (code, out, _) = call(&with_json);
    assert_eq!(code, EXIT_OK);
    let v = json(&out);
    assert_eq!(v["value"].as_str().unwrap(), text.trim());
    assert_eq!(v["method"], "recurrence");
    assert_eq!(v["m"], 150);
}

#[test]
fn sums() {
    let (code, out, _) = call(&[
        "sum",
        "--seeds",
        "0,1,1,1",
        "--region",
        "triangle-incl",
        "--n",
        "3",
        "--closed",
    ]);
    assert_eq!((code, out.trim()), (EXIT_OK, "16"));
    let (code, out, _) = call(&[
        "sum", "--seeds", "0,1,1,1", "--region", "square", "--n", "2",
    ]);
    assert_eq!((code, out.trim()), (EXIT_OK, "10"));
    let (code, out, _) = call(&[
        "sum", "--seeds", "2,1,3,4", "--region", "square", "--n", "0",
    ]);
    assert_eq!((code, out.trim()), (EXIT_OK, "2"));

    let (code, out, _) = call(&[
        "sum", "--region", "square", "--n", "40", "--verify", "--format", "json",
    ]);
    assert_eq!(code, EXIT_OK);
    let v = json(&out);
    assert_eq!(v["direct"], v["closed"]);
    assert_eq!(v["difference"], "0");

    let (_, text, _) = call(&[
        "sum",
        "--seeds",
        "1,2,3,4",
        "--region",
        "lower-strict",
        "--n",
        "60",
    ]);
    let (_, out, _) = call(&[
        "sum",
        "--seeds",
        "1,2,3,4",
        "--region",
        "lower-strict",
        "--n",
        "60",
        "--format",
        "json",
    ]);
    assert_eq!(json(&out)["value"].as_str().unwrap(), text.trim());
}

#[test]
fn closed_form_unavailable() {
    let (code, _, _) = call(&[
        "sum", "--seeds", "2,1,3,4", "--region", "square", "--n", "3", "--closed",
    ]);
    assert_eq!(code, EXIT_DOMAIN);
    let (code, _, _) = call(&["sum", "--region", "upper-incl", "--n", "3", "--closed"]);
    assert_eq!(code, EXIT_DOMAIN);
}

#[test]
fn verify_suites() {
    let (code, out, _) = call(&["verify", "--suite", "prop1", "--max", "200"]);
    assert_eq!(code, EXIT_OK, "{out}");
    let (code, out, _) = call(&["verify", "--suite", "prop3", "--max", "20"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("note:"), "{out}");
    let (code, _, _) = call(&["verify", "--suite", "identities", "--max", "1"]);
    assert_eq!(code, EXIT_OK);
    let (code, _, _) = call(&["verify", "--suite", "identities", "--max", "0"]);
    assert_eq!(code, EXIT_USAGE);
    let (code, _, _) = call(&["verify", "--suite", "prop9"]);
    assert_eq!(code, EXIT_USAGE);
}

#[test]
fn oeis_single_rows() {
    let base = ["oeis", "check", "--offline", "--count", "20"];
    let row = |extra: &[&str]| {
        let mut a = base.to_vec();
        a.extend_from_slice(extra);
        call(&a)
    };
    let (code, out, _) = row(&[
        "--row", "0,1,1,1", "--column", "upper", "--anum", "A178523", "--shift", "1",
    ]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("MATCH"), "{out}");

    let (code, out, _) = call(&[
        "oeis",
        "check",
        "--row",
        "0,0,0,0",
        "--column",
        "upper",
        "--anum",
        "A000045",
        "--shift",
        "0",
        "--count",
        "5",
        "--offline",
    ]);
    assert_eq!(code, EXIT_FAILED);
    assert!(out.contains("MISMATCH"), "{out}");

    let (code, _, _) = row(&["--row", "0,1,1,1", "--column", "upper", "--anum", "A999999"]);
    assert_eq!(code, EXIT_DATA);
    let (code, _, _) = row(&["--row", "0,1,1,1", "--column", "upper", "--anum", "B12"]);
    assert_eq!(code, EXIT_USAGE);
    let (code, _, _) = call(&[
        "oeis", "check", "--row", "0,1,1,1", "--column", "upper", "--anum", "A178523", "--count",
        "4",
    ]);
    assert_eq!(code, EXIT_USAGE);
}

#[test]
fn oeis_full_table_json() {
    let (code, out, _) = call(&[
        "oeis",
        "check",
        "--all",
        "--count",
        "20",
        "--both-conventions",
        "--offline",
        "--format",
        "json",
    ]);
    let v = json(&out);
    let reports = v.as_array().unwrap();
    assert_eq!(reports.len(), 50);
    // the A122491 and A190062 fixtures are not bundled
    assert_eq!(code, EXIT_DATA);
    let missing = reports.iter().filter(|r| r.get("error").is_some()).count();
    assert_eq!(missing, 6);
    let a014286 = reports
        .iter()
        .find(|r| r["anumber"] == "A014286" && r["claimed_shift"] == 11)
        .unwrap();
    assert_eq!(a014286["report"]["verdict"], "SHIFT_FOUND");
    assert_eq!(a014286["report"]["found_shift"], 1);
}

#[test]
fn bench() {
    let (code, out, _) = call(&["bench", "fib", "10"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("2 digits"), "{out}");
    let (code, out, _) = call(&["bench", "fib", "1000000", "--format", "json"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(json(&out)["digits"], 208988);
    assert_eq!(call(&["bench", "grid", "0"]).0, EXIT_USAGE);
    assert_eq!(call(&["bench", "fib", "20000000"]).0, EXIT_USAGE);
    assert_eq!(
        call(&["--max-index", "100", "bench", "fib", "101"]).0,
        EXIT_USAGE
    );
    assert_eq!(call(&["bench", "sums", "30"]).0, EXIT_OK);
}

#[test]
fn crossed_convention_flag() {
    let (code, out, _) = call(&[
        "--convention",
        "crossed",
        "grid",
        "--seeds",
        "2,1,3,4",
        "--size",
        "1",
        "--format",
        "csv",
    ]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(out.trim_end(), "2,1\n4,3");
}

#[test]
fn help_exits_zero() {
    let (code, out, _) = call(&["--help"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("oeis"));
}

#[test]
fn full_verify_suite_within_a_minute() {
    let start = std::time::Instant::now();
    let (code, out, _) = call(&["verify", "--suite", "all", "--max", "60", "--format", "csv"]);
    assert_eq!(code, EXIT_OK, "{out}");
    assert!(start.elapsed().as_secs() < 60);
    assert!(out.lines().skip(1).all(|l| l.contains(",true,")), "{out}");
}
