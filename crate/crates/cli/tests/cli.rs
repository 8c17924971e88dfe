use std::path::PathBuf;
use std::process::{Command, Output};

fn bin() -> Command {
    let mut c = Command::new(env!("CARGO_BIN_EXE_saprealize"));
    c.env_remove("SAPREALIZE_DB");
    c
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn scratch(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("saprealize-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

#[test]
fn enumerate_prints_saps() {
    let o = run(&["enumerate", "--sp", "++++"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "(0,3),(0,2),(0,1)\n(0,1),(0,2),(0,1)\n(0,1),(0,0),(0,1)\n");

    let o = run(&["--json", "enumerate", "--sp", "+++"]);
    assert_eq!(
        stdout(&o).trim(),
        r#"{"sp":"+++","count":2,"saps":[[[0,2],[0,1]],[[0,0],[0,1]]]}"#
    );
}

#[test]
fn count_ends_with_728() {
    let o = run(&["count", "--all-plus", "--dmax", "10"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    let last = out.lines().last().unwrap();
    let cols: Vec<&str> = last.split('\t').collect();
    assert_eq!(&cols[..4], ["10", "728", "728", "728"]);
}

#[test]
fn verify_inline_file_and_json() {
    let o = run(&["verify", "--poly", "x^3+x^2-10x+8"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("sap (2,1),(1,1),(0,1)"), "{}", stdout(&o));

    let file = scratch("p.txt");
    std::fs::write(&file, "[8, -10, 1, 1]\n").unwrap();
    let o = run(&["verify", "--poly", file.to_str().unwrap(), "--sap", "(2,1),(1,1),(0,1)"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).ends_with("PASS\n"));

    let o = run(&["--json", "verify", "--poly", "x^2+2x+2", "--sap", "(0,2),(0,1)"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).starts_with(r#"{"pass":false,"#), "{}", stdout(&o));

    let o = run(&["verify", "--poly", "x^3-3x+2"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("multiple root"));
}

#[test]
fn usage_errors_exit_2() {
    for args in [
        &["enumerate", "--sp", "+0+"][..],
        &["mirror", "--sap", "(0,1),(9,9)"],
        &["search", "--sp", "+++", "--sap", "(1,1),(0,1)"],
        &["verify", "--poly", "x^^2"],
        &["classify", "--d", "6"],
        &["frobnicate"],
        &["certdb"],
    ] {
        let o = run(args);
        assert_eq!(o.status.code(), Some(2), "{args:?}: {}", stderr(&o));
    }
}

#[test]
fn classify_writes_rows_and_summary() {
    let out = scratch("rows4.jsonl");
    let o = run(&["classify", "--d", "4", "--out", out.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).is_empty());
    assert_eq!(
        stderr(&o).lines().next().unwrap(),
        r#"{"d":4,"total":41,"realizable":40,"nonrealizable":1,"unresolved":0}"#
    );
    let rows = std::fs::read_to_string(&out).unwrap();
    assert_eq!(rows.lines().count(), 41);
    let bad: Vec<&str> = rows
        .lines()
        .filter(|l| l.contains(r#""status":"nonrealizable""#))
        .collect();
    assert_eq!(bad.len(), 1);
    assert!(bad[0].starts_with(r#"{"d":4,"sp":"++-++","sap":[[2,0],[2,1],[1,1],[0,1]],"status":"nonrealizable","certificate":null,"paper_ref":"#));

    // deterministic bytes, regardless of strategy
    let again = run(&["--sequential", "classify", "--d", "4"]);
    assert_eq!(stdout(&again), rows);

    let mirrored = run(&["classify", "--d", "2", "--mirrors"]);
    assert_eq!(stdout(&mirrored).lines().count(), 6);
}

#[test]
fn classify_reports_unresolved_rows() {
    // no stored certificates and no sampling budget: constructions alone
    let empty = scratch("empty.jsonl");
    std::fs::write(&empty, "").unwrap();
    let o = run(&[
        "--db",
        empty.to_str().unwrap(),
        "classify",
        "--d",
        "5",
        "--max-iter",
        "0",
    ]);
    assert_eq!(o.status.code(), Some(1));
    let err = stderr(&o);
    assert_eq!(
        err.lines().next().unwrap(),
        r#"{"d":5,"total":170,"realizable":158,"nonrealizable":5,"unresolved":7}"#
    );
    assert_eq!(err.lines().filter(|l| l.starts_with("unresolved:")).count(), 7);
}

#[test]
fn search_found_and_not_found() {
    let o = run(&["search", "--sap", "(0,1),(0,0),(0,1)"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("FOUND stage 1"));

    let o = run(&[
        "--json",
        "search",
        "--sp",
        "++-++",
        "--sap",
        "(2,0),(2,1),(1,1),(0,1)",
        "--max-iter",
        "3000",
    ]);
    assert_eq!(o.status.code(), Some(1));
    assert_eq!(stdout(&o).trim(), r#"{"status":"not_found","iterations":3000}"#);

    let o = run(&[
        "search",
        "--sp",
        "++-++",
        "--sap",
        "(2,0),(2,1),(1,1),(0,1)",
        "--max-iter",
        "500",
    ]);
    assert_eq!(stdout(&o).trim(), "NOT_FOUND after 500 iterations");
}

#[test]
fn mirror_and_canonical_form() {
    let o = run(&["--json", "mirror", "--sap", "(1,2),(1,1),(1,0)"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(
        stdout(&o).trim(),
        r#"{"sap":[[1,2],[1,1],[1,0]],"sp":"+---","mirror":[[2,1],[1,1],[0,1]],"mirror_sp":"++-+","canonical":[[2,1],[1,1],[0,1]],"is_canonical":false}"#
    );
}

#[test]
fn certdb_verify_all_and_regenerate() {
    let o = run(&["certdb", "--verify-all"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "built-in: 219 certificates, 0 failed");

    let regenerated = scratch("db.jsonl");
    let o = run(&["certdb", "--regenerate", "--out", regenerated.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let text = std::fs::read_to_string(&regenerated).unwrap();
    assert_eq!(text.lines().count(), 219);

    // a forged line fails verification without stopping the scan
    let forged = scratch("forged.jsonl");
    let first = text
        .lines()
        .nth(5)
        .unwrap()
        .replacen(r#""coeffs":["#, r#""coeffs":["1/3","#, 1);
    std::fs::write(&forged, format!("{first}\n{}\n", text.lines().nth(6).unwrap())).unwrap();
    let o = run(&["--db", forged.to_str().unwrap(), "--json", "certdb", "--verify-all"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains(r#""total":2,"failed":1"#), "{}", stdout(&o));
    assert!(stderr(&o).contains("line 1"));

    // the environment variable is the fallback database
    let o = bin()
        .env("SAPREALIZE_DB", &forged)
        .args(["search", "--sap", "(0,1),(0,0),(0,1)"])
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("line 1"));
}
