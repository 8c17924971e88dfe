//! `saprealize`: enumerate, count, verify, search and classify sequences of
//! admissible pairs.

use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context};
use clap::{Args, Parser, Subcommand};
use saprealize_core::certificate::CertificateRecord;
use saprealize_core::classify::{build_database, classify_rows, expand_mirrors, RowStatus, Summary};
use saprealize_core::saps::{
    canonicalize, check_a047749_conjecture, check_growth_inequalities, count_saps_by_enumeration, sp_from_sap,
    z2_mirror,
};
use saprealize_core::{
    enumerate_saps, realized_sap, search_realizer, verify_certificate, CertificateDb, Error, Exec, Polynomial, Sap,
    SearchConfig, SearchOutcome, SignPattern,
};

#[derive(Parser)]
#[command(
    name = "saprealize",
    version,
    about = "Sign patterns and sequences of admissible pairs of real polynomials"
)]
struct Cli {
    /// Certificate database (JSON lines); defaults to $SAPREALIZE_DB, then
    /// the built-in database.
    #[arg(long, global = true)]
    db: Option<PathBuf>,
    /// Run every loop on one thread.
    #[arg(long, global = true)]
    sequential: bool,
    /// Machine-readable output.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List the SAPs compatible with a sign pattern.
    Enumerate {
        #[arg(long)]
        sp: String,
    },
    /// Count SAPs of the all-plus pattern and compare with the closed form.
    Count {
        /// Accepted for clarity; counting is always for all-plus patterns.
        #[arg(long)]
        all_plus: bool,
        #[arg(long, default_value_t = 10)]
        dmax: usize,
    },
    /// Report the couple a polynomial realizes, or check a claimed one.
    Verify {
        /// Polynomial expression, JSON coefficient array (ascending), or a
        /// file containing either.
        #[arg(long)]
        poly: String,
        #[arg(long, requires = "sap")]
        sp: Option<String>,
        #[arg(long)]
        sap: Option<String>,
    },
    /// Classify every canonical couple of degree d (1 to 5).
    Classify {
        #[arg(long)]
        d: usize,
        /// Write rows here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Also emit the mirrored (non-canonical) rows.
        #[arg(long)]
        mirrors: bool,
        #[command(flatten)]
        budget: Budget,
    },
    /// Search for a polynomial realizing a couple.
    Search {
        #[arg(long)]
        sp: Option<String>,
        #[arg(long)]
        sap: String,
        #[command(flatten)]
        budget: Budget,
    },
    /// Mirror a SAP under x -> -x and give its canonical form.
    Mirror {
        #[arg(long)]
        sap: String,
    },
    /// Check or rebuild the certificate database.
    Certdb {
        #[arg(long, conflicts_with = "regenerate", required_unless_present = "regenerate")]
        verify_all: bool,
        #[arg(long)]
        regenerate: bool,
        /// Output path for --regenerate (stdout if absent).
        #[arg(long, requires = "regenerate")]
        out: Option<PathBuf>,
    },
}

#[derive(Args)]
struct Budget {
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long = "max-iter", default_value_t = 100_000)]
    max_iter: u64,
}

const ENUMERATION_LIMIT: usize = 14;

/// Failures that are the caller's fault exit with 2.
struct Usage(String);

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => code,
        Err(e) => {
            let usage = e.downcast_ref::<Usage>().is_some()
                || matches!(
                    e.downcast_ref::<Error>(),
                    Some(
                        Error::Parse { .. } | Error::InvalidPattern(_) | Error::InvalidSap(_) | Error::InvalidTarget(_)
                    )
                );
            eprintln!("error: {e:#}");
            ExitCode::from(if usage { 2 } else { 1 })
        }
    }
}

impl std::fmt::Display for Usage {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::fmt::Debug for Usage {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for Usage {}

fn exec(cli: &Cli) -> Exec {
    if cli.sequential {
        Exec::Sequential
    } else {
        Exec::Parallel
    }
}

fn parse_sp(s: &str) -> anyhow::Result<SignPattern> {
    Ok(s.parse::<SignPattern>()?)
}

fn parse_sap(s: &str) -> anyhow::Result<Sap> {
    Ok(s.parse::<Sap>()?)
}

fn load_db(cli: &Cli) -> anyhow::Result<CertificateDb> {
    Ok(CertificateDb::resolve(cli.db.as_deref())?)
}

fn config(cli: &Cli, budget: &Budget) -> SearchConfig {
    SearchConfig {
        seed: budget.seed,
        max_iterations: budget.max_iter,
        exec: exec(cli),
        ..SearchConfig::default()
    }
}

fn print_json(v: &serde_json::Value) {
    println!("{}", serde_json::to_string(v).expect("serializable"));
}

fn run(cli: &Cli) -> anyhow::Result<ExitCode> {
    match &cli.command {
        Command::Enumerate { sp } => {
            let sp = parse_sp(sp)?;
            let saps = enumerate_saps(&sp);
            if cli.json {
                print_json(&serde_json::json!({ "sp": sp, "count": saps.len(), "saps": saps }));
            } else {
                for s in &saps {
                    println!("{s}");
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Count { dmax, .. } => count(cli, *dmax),
        Command::Verify { poly, sp, sap } => verify(cli, poly, sp.as_deref(), sap.as_deref()),
        Command::Classify {
            d,
            out,
            mirrors,
            budget,
        } => classify(cli, *d, out.as_deref(), *mirrors, budget),
        Command::Search { sp, sap, budget } => search(cli, sp.as_deref(), sap, budget),
        Command::Mirror { sap } => {
            let sap = parse_sap(sap)?;
            let sp = sp_from_sap(&sap);
            sap.validate(&sp)?;
            let mirror = z2_mirror(&sap);
            let (canonical, was_mirrored) = canonicalize(&sap);
            if cli.json {
                print_json(&serde_json::json!({
                    "sap": sap,
                    "sp": sp,
                    "mirror": mirror,
                    "mirror_sp": sp.mirror(),
                    "canonical": canonical,
                    "is_canonical": !was_mirrored,
                }));
            } else {
                println!("sap       {sp} {sap}");
                println!("mirror    {} {mirror}", sp.mirror());
                println!("canonical {} {canonical}", sp_from_sap(&canonical));
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Certdb { regenerate, out, .. } => {
            if *regenerate {
                regenerate_db(cli, out.as_deref())
            } else {
                verify_db(cli)
            }
        }
    }
}

fn count(cli: &Cli, dmax: usize) -> anyhow::Result<ExitCode> {
    if dmax == 0 {
        return Err(Usage("--dmax must be at least 1".into()).into());
    }
    let conjecture = check_a047749_conjecture(dmax);
    let growth = check_growth_inequalities(dmax);
    // brute-force enumeration cross-check, kept to sizes that stay quick
    let enumerated: Vec<Option<usize>> = (1..=dmax)
        .map(|d| (d <= ENUMERATION_LIMIT).then(|| count_saps_by_enumeration(d)))
        .collect();
    let enum_ok = conjecture
        .rows
        .iter()
        .zip(&enumerated)
        .all(|(r, e)| e.is_none_or(|n| n.to_string() == r.a_d));
    if cli.json {
        print_json(&serde_json::json!({
            "conjecture": conjecture,
            "growth": growth,
            "enumerated": enumerated,
        }));
    } else {
        println!("d\tA(d)\tA047749(d+1)\tenumerated\tgrowth");
        for (i, r) in conjecture.rows.iter().enumerate() {
            let e = enumerated[i].map_or("-".to_string(), |n| n.to_string());
            let g = if r.d == 1 {
                "-".to_string()
            } else {
                let g = &growth.rows[i - 1];
                format!("{} >= {} {}", g.a_d, g.bound, if g.holds { "ok" } else { "FAILS" })
            };
            let m = if r.matches { "" } else { " MISMATCH" };
            println!("{}\t{}\t{}{m}\t{e}\t{g}", r.d, r.a_d, r.a047749);
        }
    }
    let ok = conjecture.first_mismatch.is_none() && growth.all_hold && enum_ok;
    Ok(if ok { ExitCode::SUCCESS } else { ExitCode::from(1) })
}

fn read_poly(arg: &str) -> anyhow::Result<Polynomial> {
    let path = Path::new(arg);
    let text = if path.is_file() {
        std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?
    } else {
        arg.to_string()
    };
    Ok(text.trim().parse::<Polynomial>()?)
}

fn verify(cli: &Cli, poly: &str, sp: Option<&str>, sap: Option<&str>) -> anyhow::Result<ExitCode> {
    let p = read_poly(poly)?;
    match sap {
        Some(sap) => {
            let sap = parse_sap(sap)?;
            let sp = match sp {
                Some(s) => parse_sp(s)?,
                None => sp_from_sap(&sap),
            };
            let report = verify_certificate(&p, &sp, &sap);
            if cli.json {
                print_json(&serde_json::to_value(&report)?);
            } else {
                println!("polynomial {p}");
                println!("expected   {sp} {sap}");
                match &report.realized {
                    Some(c) => println!("realized   {} {}", c.sp, c.sap),
                    None => println!("realized   none ({})", report.error.as_deref().unwrap_or("?")),
                }
                println!("{}", if report.pass { "PASS" } else { "FAIL" });
            }
            Ok(if report.pass {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }
        None => match realized_sap(&p) {
            Ok(r) => {
                if cli.json {
                    print_json(&serde_json::json!({ "pass": true, "sp": r.sp, "sap": r.sap }));
                } else {
                    println!("sp  {}", r.sp);
                    println!("sap {}", r.sap);
                }
                Ok(ExitCode::SUCCESS)
            }
            Err(e) => {
                if cli.json {
                    print_json(&serde_json::json!({ "pass": false, "error": e.to_string() }));
                } else {
                    println!("FAIL: {e}");
                }
                Ok(ExitCode::from(1))
            }
        },
    }
}

fn classify(cli: &Cli, d: usize, out: Option<&Path>, mirrors: bool, budget: &Budget) -> anyhow::Result<ExitCode> {
    if !(1..=5).contains(&d) {
        return Err(Usage(format!("--d must be between 1 and 5, got {d}")).into());
    }
    let db = load_db(cli)?;
    let rows = classify_rows(d, &db, &config(cli, budget))?;
    let summary = Summary::of(&rows);
    let emitted = if mirrors { expand_mirrors(&rows) } else { rows.clone() };
    let mut text = String::new();
    for r in &emitted {
        text.push_str(&r.to_json_line());
        text.push('\n');
    }
    match out {
        Some(path) => std::fs::write(path, &text).with_context(|| format!("writing {}", path.display()))?,
        None => std::io::stdout().write_all(text.as_bytes())?,
    }
    eprintln!(
        "{}",
        serde_json::json!({
            "d": d,
            "total": summary.total,
            "realizable": summary.realizable,
            "nonrealizable": summary.nonrealizable,
            "unresolved": summary.unresolved,
        })
    );
    for r in rows.iter().filter(|r| r.status == RowStatus::Unresolved) {
        eprintln!("unresolved: {}", r.couple());
    }
    Ok(if summary.unresolved == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn search(cli: &Cli, sp: Option<&str>, sap: &str, budget: &Budget) -> anyhow::Result<ExitCode> {
    let sap = parse_sap(sap)?;
    let sp = match sp {
        Some(s) => parse_sp(s)?,
        None => sp_from_sap(&sap),
    };
    let db = load_db(cli)?;
    match search_realizer(&sp, &sap, &db, &config(cli, budget))? {
        SearchOutcome::Found { certificate, stage } => {
            if cli.json {
                print_json(&serde_json::json!({ "status": "found", "stage": stage, "certificate": certificate }));
            } else {
                println!("FOUND stage {stage}: {}", certificate.poly());
                println!("{}", certificate.to_json_line());
            }
            Ok(ExitCode::SUCCESS)
        }
        SearchOutcome::NotFound { iterations } => {
            if cli.json {
                print_json(&serde_json::json!({ "status": "not_found", "iterations": iterations }));
            } else {
                println!("NOT_FOUND after {iterations} iterations");
            }
            Ok(ExitCode::from(1))
        }
    }
}

fn db_text(cli: &Cli) -> anyhow::Result<(String, String)> {
    let path = cli.db.clone().or_else(|| {
        std::env::var_os(saprealize_core::certificate::DB_ENV)
            .filter(|p| !p.is_empty())
            .map(PathBuf::from)
    });
    Ok(match path {
        Some(p) => (
            std::fs::read_to_string(&p).with_context(|| format!("reading {}", p.display()))?,
            p.display().to_string(),
        ),
        None => (CertificateDb::embedded_text().to_string(), "built-in".to_string()),
    })
}

fn verify_db(cli: &Cli) -> anyhow::Result<ExitCode> {
    let (text, source) = db_text(cli)?;
    let mut total = 0;
    let mut failed = 0;
    for (n, line) in text.lines().enumerate() {
        if line.trim().is_empty() || line.trim_start().starts_with('#') {
            continue;
        }
        total += 1;
        let outcome = serde_json::from_str::<CertificateRecord>(line)
            .map_err(|e| e.to_string())
            .and_then(|r| r.into_certificate().map_err(|e| e.to_string()));
        if let Err(e) = outcome {
            failed += 1;
            eprintln!("line {}: {e}", n + 1);
        }
    }
    if cli.json {
        print_json(&serde_json::json!({ "source": source, "total": total, "failed": failed, "pass": failed == 0 }));
    } else {
        println!("{source}: {total} certificates, {failed} failed");
    }
    Ok(if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn regenerate_db(cli: &Cli, out: Option<&Path>) -> anyhow::Result<ExitCode> {
    let cfg = SearchConfig {
        exec: exec(cli),
        ..SearchConfig::default()
    };
    let db = build_database(&cfg)?;
    let text = db.to_jsonl();
    match out {
        Some(path) => std::fs::write(path, &text).with_context(|| format!("writing {}", path.display()))?,
        None => std::io::stdout().write_all(text.as_bytes())?,
    }
    eprintln!("{} certificates", db.len());
    if db.is_empty() {
        bail!("no certificates produced");
    }
    Ok(ExitCode::SUCCESS)
}
