//! Classification of all canonical couples of a degree `d <= 5`.

use serde::Serialize;

use crate::certificate::{Certificate, CertificateDb};
use crate::error::{Error, Result};
use crate::known::{builtin_certificates, nonrealizable_catalog, nonrealizable_reason};
use crate::saps::canonical_couples;
use crate::search::{search_realizer, SearchConfig, SearchOutcome};
use crate::sign::{Couple, Sap, SignPattern};

/// Largest degree with a complete classification.
pub const MAX_DEGREE: usize = 5;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RowStatus {
    Realizable(Certificate),
    NonrealizablePaper(String),
    Unresolved,
}

impl RowStatus {
    pub fn label(&self) -> &'static str {
        match self {
            RowStatus::Realizable(_) => "realizable",
            RowStatus::NonrealizablePaper(_) => "nonrealizable",
            RowStatus::Unresolved => "unresolved",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassificationRow {
    pub sp: SignPattern,
    pub sap: Sap,
    pub status: RowStatus,
    /// False for rows produced by [`expand_mirrors`].
    pub canonical: bool,
}

impl ClassificationRow {
    pub fn degree(&self) -> usize {
        self.sp.degree()
    }

    pub fn couple(&self) -> Couple {
        Couple::new(self.sp.clone(), self.sap.clone())
    }

    pub fn certificate(&self) -> Option<&Certificate> {
        match &self.status {
            RowStatus::Realizable(c) => Some(c),
            _ => None,
        }
    }

    /// Wire form with fields `d, sp, sap, status, certificate, paper_ref,
    /// canonical` in that order.
    pub fn to_record(&self) -> RowRecord<'_> {
        let (certificate, paper_ref) = match &self.status {
            RowStatus::Realizable(c) => (Some(c), None),
            RowStatus::NonrealizablePaper(r) => (None, Some(r.as_str())),
            RowStatus::Unresolved => (None, None),
        };
        RowRecord {
            d: self.degree(),
            sp: &self.sp,
            sap: &self.sap,
            status: self.status.label(),
            certificate,
            paper_ref,
            canonical: self.canonical,
        }
    }

    pub fn to_json_line(&self) -> String {
        serde_json::to_string(&self.to_record()).expect("serializable")
    }
}

#[derive(Serialize)]
pub struct RowRecord<'a> {
    pub d: usize,
    pub sp: &'a SignPattern,
    pub sap: &'a Sap,
    pub status: &'static str,
    pub certificate: Option<&'a Certificate>,
    pub paper_ref: Option<&'a str>,
    pub canonical: bool,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub total: usize,
    pub realizable: usize,
    pub nonrealizable: usize,
    pub unresolved: usize,
}

impl Summary {
    pub fn of(rows: &[ClassificationRow]) -> Self {
        let mut s = Summary {
            total: rows.len(),
            ..Summary::default()
        };
        for r in rows {
            match r.status {
                RowStatus::Realizable(_) => s.realizable += 1,
                RowStatus::NonrealizablePaper(_) => s.nonrealizable += 1,
                RowStatus::Unresolved => s.unresolved += 1,
            }
        }
        s
    }
}

#[derive(Clone, Debug)]
pub struct Classification {
    pub d: usize,
    pub rows: Vec<ClassificationRow>,
    pub summary: Summary,
}

impl Classification {
    pub fn nonrealizable(&self) -> Vec<Couple> {
        self.rows
            .iter()
            .filter(|r| matches!(r.status, RowStatus::NonrealizablePaper(_)))
            .map(ClassificationRow::couple)
            .collect()
    }

    pub fn to_jsonl(&self) -> String {
        self.rows.iter().map(|r| r.to_json_line() + "\n").collect()
    }
}

fn check_degree(d: usize) -> Result<()> {
    if (1..=MAX_DEGREE).contains(&d) {
        Ok(())
    } else {
        Err(Error::OutOfRange(d))
    }
}

fn classify_couple(c: Couple, db: &CertificateDb, config: &SearchConfig) -> Result<ClassificationRow> {
    let status = if let Some(reason) = nonrealizable_reason(&c) {
        RowStatus::NonrealizablePaper(reason)
    } else {
        match search_realizer(&c.sp, &c.sap, db, config)? {
            SearchOutcome::Found { certificate, .. } => RowStatus::Realizable(certificate),
            SearchOutcome::NotFound { .. } => RowStatus::Unresolved,
        }
    };
    Ok(ClassificationRow {
        sp: c.sp,
        sap: c.sap,
        status,
        canonical: true,
    })
}

/// One row per canonical couple, ordered by sign pattern and then SAP
/// enumeration order. Unresolved rows are returned, not raised.
pub fn classify_rows(d: usize, db: &CertificateDb, config: &SearchConfig) -> Result<Vec<ClassificationRow>> {
    check_degree(d)?;
    let rows = config
        .exec
        .map(canonical_couples(d), |c| classify_couple(c, db, config));
    rows.into_iter().collect()
}

/// Like [`classify_rows`] but fails with the list of unresolved couples if
/// any row lacks both a certificate and a catalogued exception.
pub fn classify(d: usize, db: &CertificateDb, config: &SearchConfig) -> Result<Classification> {
    let rows = classify_rows(d, db, config)?;
    let unresolved: Vec<String> = rows
        .iter()
        .filter(|r| r.status == RowStatus::Unresolved)
        .map(|r| r.couple().to_string())
        .collect();
    if !unresolved.is_empty() {
        return Err(Error::UnresolvedRows(unresolved));
    }
    let summary = Summary::of(&rows);
    Ok(Classification { d, rows, summary })
}

/// Adds the mirrored row after each canonical one.
pub fn expand_mirrors(rows: &[ClassificationRow]) -> Vec<ClassificationRow> {
    let mut out = Vec::with_capacity(rows.len() * 2);
    for r in rows {
        out.push(r.clone());
        let m = r.couple().mirror();
        let status = match &r.status {
            RowStatus::Realizable(c) => RowStatus::Realizable(c.mirrored()),
            other => other.clone(),
        };
        out.push(ClassificationRow {
            sp: m.sp,
            sap: m.sap,
            status,
            canonical: false,
        });
    }
    out
}

/// The shipped database: the built-in corpus plus one certificate for every
/// other realizable canonical couple of degree at most [`MAX_DEGREE`].
pub fn build_database(config: &SearchConfig) -> Result<CertificateDb> {
    let mut db = CertificateDb::new(builtin_certificates(config.exec)?);
    for d in 1..=MAX_DEGREE {
        let catalog = nonrealizable_catalog(d)?;
        let missing: Vec<Couple> = canonical_couples(d)
            .into_iter()
            .filter(|c| !catalog.contains(c) && db.lookup(c).is_none())
            .collect();
        // degree-d rows only depend on degree-(d-1) entries, already present
        let found = config
            .exec
            .map(missing, |c| search_realizer(&c.sp, &c.sap, &db, config));
        for outcome in found {
            if let SearchOutcome::Found { certificate, .. } = outcome? {
                db.insert(certificate);
            }
        }
    }
    Ok(db)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn config() -> SearchConfig {
        SearchConfig {
            max_iterations: 5_000,
            ..SearchConfig::default()
        }
    }

    #[test]
    fn low_degrees_from_an_empty_database() {
        let db = CertificateDb::default();
        for (d, n) in [(1, 1), (2, 3), (3, 10)] {
            let c = classify(d, &db, &config()).unwrap();
            assert_eq!(c.summary.total, n);
            assert_eq!(c.summary.nonrealizable, 0);
            assert_eq!(c.summary.realizable, n);
        }
        assert_eq!(classify(6, &db, &config()).unwrap_err(), Error::OutOfRange(6));
    }

    #[test]
    fn row_json_field_order() {
        let db = CertificateDb::default();
        let rows = classify_rows(1, &db, &config()).unwrap();
        let line = rows[0].to_json_line();
        assert!(
            line.starts_with(r#"{"d":1,"sp":"++","sap":[[0,1]],"status":"realizable","certificate":{"d":1,"#),
            "{line}"
        );
        assert!(line.ends_with(r#""paper_ref":null,"canonical":true}"#), "{line}");
        let both = expand_mirrors(&rows);
        assert_eq!(both.len(), 2);
        assert_eq!(both[1].sp.to_string(), "+-");
        assert!(!both[1].canonical);
    }
}
