use std::process::Command;

fn circint(args: &[&str]) -> std::process::Output {
    Command::new(env!("CARGO_BIN_EXE_circint"))
        .args(args)
        .output()
        .expect("run circint")
}

#[test]
fn output_flag_writes_file() {
    let dir = std::env::temp_dir().join(format!("circint-test-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("table.csv");
    let out = circint(&[
        "table",
        "--max-m",
        "2",
        "--max-n",
        "1",
        "--csv",
        "--output",
        path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let written = std::fs::read_to_string(&path).unwrap();
    assert_eq!(written, "m,n,S\n0,0,1\n0,1,2\n1,0,2\n1,1,2\n2,0,6\n2,1,4\n");
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn json_documents_parse() {
    let out = circint(&["--json", "psi", "--circle", "2,0,0", "x^4*y^2"]);
    assert_eq!(out.status.code(), Some(0));
    let doc: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(doc["command"], "psi");
    // 2·2⁶·Ω(2,1) = 128·(4/64) = 8 = 2S(2,1)
    assert_eq!(doc["result"], "8");

    let out = circint(&["ffcheck", "--all-primes-up-to", "23", "--json"]);
    assert_eq!(out.status.code(), Some(0));
    let doc: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(doc["passed"], true);
    assert_eq!(doc["result"].as_array().unwrap().len(), 8);
}

#[test]
fn diagnostics_go_to_stderr() {
    let out = circint(&["reduce", "x^^2"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(out.stdout.is_empty());
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("column 3"), "{err}");

    let out = circint(&["ffcheck", "--prime", "2000003"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8(out.stderr).unwrap().contains("budget"));
}

#[test]
fn help_exits_zero() {
    let out = circint(&["--help"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8(out.stdout).unwrap().contains("interpret"));
}

#[test]
fn reduce_text_output() {
    let out = circint(&["reduce", "x^2*y^2 - x^2 + x^4"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(
        String::from_utf8(out.stdout).unwrap(),
        "rho = 0\nomega = 0\nideal member: true\n"
    );
}
