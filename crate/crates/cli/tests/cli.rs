use std::io::Write;
use std::process::{Command, Output, Stdio};

fn knotorder(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_knotorder"))
        .args(args)
        .output()
        .unwrap()
}

fn with_stdin(args: &[&str], input: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_knotorder"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(input.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn data(path: &str) -> String {
    format!("{}/data/{path}", env!("CARGO_MANIFEST_DIR"))
}

#[test]
fn analyze_from_file_and_stdin() {
    let trefoil = knotorder(&["analyze", "--seifert", &data("seifert/trefoil.seifert")]);
    assert_eq!(trefoil.status.code(), Some(0));
    assert!(stdout(&trefoil).contains("verdict: InfiniteOrder(3)"));

    let unknot = with_stdin(&["analyze"], "0\n");
    assert_eq!(unknot.status.code(), Some(5));
    let text = stdout(&unknot);
    assert!(text.contains("determinant: 1 "));
    assert!(text.contains("verdict: Inconclusive"));

    let dash = with_stdin(&["analyze", "--seifert", "-"], "2\n-1 1\n0 5\n");
    assert!(stdout(&dash).contains("5t^2 - 11t + 5"));
}

#[test]
fn analyze_reports_linking_data() {
    let out = with_stdin(&["analyze", "--format", "json"], "2\n-1 1\n0 -1\n");
    let json: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(json["homology"], serde_json::json!(["3"]));
    assert_eq!(json["linking"][0]["prime"], 3);
    assert_eq!(json["linking"][0]["self_linking_numerator"], 2);
    assert_eq!(json["linking"][0]["square_class"], -1);
    assert_eq!(json["linking"][0]["sigma_nonvanishing"], true);
}

#[test]
fn analyze_errors() {
    let bad = with_stdin(&["analyze"], "2\n-1 1\n0\n");
    assert_eq!(bad.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&bad.stderr).contains("line 3"));
    let missing = knotorder(&["analyze", "--seifert", "/nonexistent/file"]);
    assert_eq!(missing.status.code(), Some(1));
}

#[test]
fn certify_exit_codes() {
    let ok = knotorder(&["certify", "--prime", "7", "--copies", "4"]);
    assert_eq!(ok.status.code(), Some(0));
    assert!(stdout(&ok).contains("n = 28"));

    let none = knotorder(&["certify", "--prime", "3", "--copies", "2"]);
    assert_eq!(none.status.code(), Some(3));
    assert!(stdout(&none).contains("NoMetabolizerPossible"));
    let none_json = knotorder(&["certify", "--prime", "3", "--copies", "2", "--format", "json"]);
    assert_eq!(stdout(&none_json).trim(), "[]");

    let wrong_prime = knotorder(&["certify", "--prime", "5", "--copies", "4"]);
    assert_eq!(wrong_prime.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&wrong_prime.stderr).contains("not congruent to 3 mod 4"));

    let budget = knotorder(&["certify", "--prime", "7", "--copies", "4", "--budget", "100"]);
    assert_eq!(budget.status.code(), Some(4));

    let usage = knotorder(&["certify", "--prime", "7"]);
    assert_eq!(usage.status.code(), Some(2));
}

#[test]
fn table_from_stdin_and_empty() {
    let empty = with_stdin(&["table"], "name,crossings,alexander,determinant\n");
    assert_eq!(empty.status.code(), Some(0));
    assert_eq!(stdout(&empty), "no knots\n");

    let one = with_stdin(
        &["table"],
        "name,crossings,alexander,determinant\n7_7,7,1;-5;9;-5;1,21\n",
    );
    assert!(stdout(&one).contains("InfiniteOrder(3)"));

    let bad = with_stdin(
        &["table"],
        "name,crossings,alexander,determinant\n7_7,7,1;-5;9;-5;1,84\n",
    );
    assert_eq!(bad.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&bad.stderr).contains("line 2"));
}

#[test]
fn family_command() {
    let one = knotorder(&["family", "--count", "1", "--format", "json"]);
    let json: serde_json::Value = serde_json::from_slice(&one.stdout).unwrap();
    assert_eq!(json["members"][0]["primes"], serde_json::json!([3, 7]));
    assert_eq!(json["members"][0]["twist"], 5);
    assert_eq!(json["members"][0]["determinant"], 21);
    assert_eq!(json["passed"], true);

    let two = knotorder(&["family", "--count", "2", "--format", "json"]);
    let json: serde_json::Value = serde_json::from_slice(&two.stdout).unwrap();
    assert_eq!(json["members"][1]["primes"], serde_json::json!([11, 19]));
    assert_eq!(json["members"][1]["twist"], 52);

    let zero = knotorder(&["family", "--count", "0"]);
    assert_eq!(zero.status.code(), Some(2));
}

#[test]
fn ring_demo_command() {
    let out = knotorder(&["ring-demo"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("f = t + t^2 + 2t^4"));
    assert!(text.contains("1 + 2t^2 + t^8"));
    assert!(text.contains("t^7: agrees"));
}

#[test]
fn output_is_deterministic() {
    for args in [
        vec!["certify", "--prime", "11", "--copies", "4", "--format", "json"],
        vec!["certify", "--prime", "3", "--copies", "8"],
        vec!["family", "--count", "12"],
        vec!["ring-demo", "--format", "json"],
    ] {
        let a = knotorder(&args);
        let b = knotorder(&args);
        assert_eq!(a.stdout, b.stdout, "{args:?}");
    }
    let table = data("algebraic_order4_knots.csv");
    let a = knotorder(&["table", "--table", &table, "--format", "json"]);
    let b = knotorder(&["table", "--table", &table, "--format", "json"]);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn certify_output_reloads_from_disk() {
    let out = knotorder(&["certify", "--prime", "11", "--copies", "4", "--format", "json"]);
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("certs.json");
    std::fs::write(&path, &out.stdout).unwrap();
    let docs = knotorder_cli::load_documents(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert!(!docs.is_empty());
    assert!(docs.iter().all(|d| d.prime == 11 && d.copies == 4));
}
