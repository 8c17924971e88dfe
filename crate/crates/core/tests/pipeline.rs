mod common;

use saprealize_core::classify::{classify_rows, expand_mirrors, MAX_DEGREE};
use saprealize_core::known::{builtin_certificates, nonrealizable_catalog};
use saprealize_core::saps::canonical_couples;
use saprealize_core::{classify, search_realizer, Certificate, CertificateDb, Exec, SearchConfig, SearchOutcome};

fn config(exec: Exec) -> SearchConfig {
    SearchConfig {
        exec,
        ..SearchConfig::default()
    }
}

#[test]
fn embedded_database_verifies() {
    let db = CertificateDb::embedded();
    // 1 + 3 + 10 + 40 + 165 realizable canonical couples
    assert_eq!(db.len(), 219);
    assert!(db.verify_all(Exec::default()).iter().all(|r| r.pass));
    assert!(db.iter().all(|c| c.sp().is_canonical()));
}

#[test]
fn embedded_database_is_reproducible() {
    // regenerate with: saprealize certdb --regenerate --out crates/core/data/certificates.jsonl
    let rebuilt = saprealize_core::classify::build_database(&config(Exec::default())).unwrap();
    assert_eq!(rebuilt.to_jsonl(), CertificateDb::embedded_text());
}

#[test]
fn quartics_complete_without_sampling() {
    let mut db = CertificateDb::new(builtin_certificates(Exec::default()).unwrap());
    let cfg = SearchConfig {
        max_stage: 2,
        ..config(Exec::default())
    };
    for d in 1..=4 {
        let catalog = nonrealizable_catalog(d).unwrap();
        for c in canonical_couples(d) {
            if catalog.contains(&c) {
                continue;
            }
            match search_realizer(&c.sp, &c.sap, &db, &cfg).unwrap() {
                SearchOutcome::Found { certificate, stage } => {
                    assert!(stage <= 2);
                    db.insert(certificate);
                }
                SearchOutcome::NotFound { .. } => panic!("no certificate for {c}"),
            }
        }
    }
}

#[test]
fn canonical_couple_counts_match_the_oracle() {
    // golden totals: 41 and 170 canonical couples for d = 4, 5
    let golden = [1, 3, 10, 41, 170];
    for d in 1..=MAX_DEGREE {
        let oracle: usize = common::all_patterns(d)
            .into_iter()
            .filter(|s| s[1])
            .map(|s| common::brute_force_saps(&s).len())
            .sum();
        assert_eq!(canonical_couples(d).len(), oracle);
        assert_eq!(oracle, golden[d - 1]);
    }
}

#[test]
fn classification_is_deterministic_and_round_trips() {
    let db = CertificateDb::embedded();
    for d in 1..=MAX_DEGREE {
        let seq = classify_rows(d, db, &config(Exec::Sequential)).unwrap();
        let par = classify_rows(d, db, &config(Exec::Parallel)).unwrap();
        let text: String = seq.iter().map(|r| r.to_json_line() + "\n").collect();
        let again: String = par.iter().map(|r| r.to_json_line() + "\n").collect();
        assert_eq!(text, again);
        for line in text.lines() {
            let v: serde_json::Value = serde_json::from_str(line).unwrap();
            if v["status"] == "realizable" {
                let cert = Certificate::from_json_line(&v["certificate"].to_string()).unwrap();
                assert_eq!(cert.sp().to_string(), v["sp"]);
            } else {
                assert_eq!(v["status"], "nonrealizable");
                assert!(v["paper_ref"].as_str().is_some_and(|s| !s.is_empty()));
            }
        }
    }
}

#[test]
fn mirrored_rows_carry_mirrored_certificates() {
    let c = classify(3, CertificateDb::embedded(), &config(Exec::default())).unwrap();
    let all = expand_mirrors(&c.rows);
    assert_eq!(all.len(), 20);
    for row in all.iter().filter(|r| !r.canonical) {
        let cert = row.certificate().unwrap();
        assert_eq!(cert.couple(), &row.couple());
        assert!(cert.verify().pass);
        assert!(cert.provenance().starts_with("mirror:"));
    }
}

#[test]
fn sampling_does_not_depend_on_the_strategy() {
    let sp = "++-++".parse().unwrap();
    let sap = "(0,2),(2,1),(1,1),(0,1)".parse().unwrap();
    let base = SearchConfig {
        seed: 11,
        max_iterations: 20_000,
        max_stage: 3,
        ..SearchConfig::default()
    };
    let empty = CertificateDb::default();
    let a = search_realizer(
        &sp,
        &sap,
        &empty,
        &SearchConfig {
            exec: Exec::Sequential,
            ..base.clone()
        },
    )
    .unwrap();
    let b = search_realizer(
        &sp,
        &sap,
        &empty,
        &SearchConfig {
            exec: Exec::Parallel,
            ..base
        },
    )
    .unwrap();
    assert_eq!(a, b);
}
