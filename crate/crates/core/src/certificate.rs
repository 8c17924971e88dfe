//! Verified realizability certificates and the JSON-lines certificate
//! database.
//!
//! A [`Certificate`] can only be built through a constructor that runs the
//! exact verifier, so holding one means the couple is realized.

use std::collections::HashMap;
use std::path::Path;
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exec::Exec;
use crate::poly::Polynomial;
use crate::rational;
use crate::roots::{realized_sap, verify_certificate, VerificationReport};
use crate::sign::{Couple, Sap, SignPattern};

/// Environment variable naming a database file to use instead of the
/// embedded one.
pub const DB_ENV: &str = "SAPREALIZE_DB";

const EMBEDDED: &str = include_str!("../data/certificates.jsonl");

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Certificate {
    couple: Couple,
    poly: Polynomial,
    provenance: String,
}

impl Certificate {
    /// Checks that `poly` realizes `(sp, sap)` exactly.
    pub fn new(poly: Polynomial, sp: SignPattern, sap: Sap, provenance: impl Into<String>) -> Result<Self> {
        let report = verify_certificate(&poly, &sp, &sap);
        let couple = Couple::new(sp, sap);
        if !report.pass {
            return Err(Error::CertificateRejected {
                couple: couple.to_string(),
            });
        }
        Ok(Self {
            couple,
            poly,
            provenance: provenance.into(),
        })
    }

    /// Certificate for whatever couple `poly` realizes.
    pub fn from_realized(poly: Polynomial, provenance: impl Into<String>) -> Result<Self> {
        let r = realized_sap(&poly)?;
        Ok(Self {
            couple: r.couple(),
            poly,
            provenance: provenance.into(),
        })
    }

    pub fn degree(&self) -> usize {
        self.couple.degree()
    }

    pub fn sp(&self) -> &SignPattern {
        &self.couple.sp
    }

    pub fn sap(&self) -> &Sap {
        &self.couple.sap
    }

    pub fn couple(&self) -> &Couple {
        &self.couple
    }

    pub fn poly(&self) -> &Polynomial {
        &self.poly
    }

    pub fn provenance(&self) -> &str {
        &self.provenance
    }

    /// Certificate for the mirrored couple, from `(-1)^d P(-x)`.
    pub fn mirrored(&self) -> Certificate {
        let provenance = match self.provenance.strip_prefix("mirror:") {
            Some(p) => p.to_string(),
            None => format!("mirror:{}", self.provenance),
        };
        let cert = Certificate::new(
            self.poly.mirror(),
            self.couple.sp.mirror(),
            crate::saps::z2_mirror(&self.couple.sap),
            provenance,
        );
        cert.expect("mirroring preserves realization")
    }

    /// Re-runs the verifier.
    pub fn verify(&self) -> VerificationReport {
        verify_certificate(&self.poly, &self.couple.sp, &self.couple.sap)
    }

    pub fn to_record(&self) -> CertificateRecord {
        CertificateRecord {
            d: self.degree(),
            sp: self.couple.sp.clone(),
            sap: self.couple.sap.clone(),
            coeffs: self.poly.coeffs().iter().map(rational::to_wire).collect(),
            provenance: self.provenance.clone(),
        }
    }

    pub fn to_json_line(&self) -> String {
        serde_json::to_string(&self.to_record()).expect("serializable")
    }

    pub fn from_json_line(line: &str) -> Result<Self> {
        let rec: CertificateRecord = serde_json::from_str(line).map_err(|e| Error::Database(e.to_string()))?;
        rec.into_certificate()
    }
}

impl Serialize for Certificate {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_record().serialize(s)
    }
}

/// Wire form of a certificate: coefficients ascending as `"num/den"`.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CertificateRecord {
    pub d: usize,
    pub sp: SignPattern,
    pub sap: Sap,
    pub coeffs: Vec<String>,
    pub provenance: String,
}

impl CertificateRecord {
    pub fn into_certificate(self) -> Result<Certificate> {
        let poly = Polynomial::parse_coeffs(&self.coeffs)?;
        if poly.degree() != Some(self.d) || self.sp.degree() != self.d {
            return Err(Error::Database(format!(
                "degree field {} does not match the data for {}",
                self.d, self.sp
            )));
        }
        Certificate::new(poly, self.sp, self.sap, self.provenance)
    }
}

/// Immutable-after-load set of certificates keyed by couple. The first
/// certificate inserted for a couple wins.
#[derive(Clone, Debug, Default)]
pub struct CertificateDb {
    entries: Vec<Certificate>,
    index: HashMap<Couple, usize>,
}

impl CertificateDb {
    pub fn new(certs: impl IntoIterator<Item = Certificate>) -> Self {
        let mut db = Self::default();
        for c in certs {
            db.insert(c);
        }
        db
    }

    /// Returns false if the couple was already present.
    pub fn insert(&mut self, cert: Certificate) -> bool {
        if self.index.contains_key(cert.couple()) {
            return false;
        }
        self.index.insert(cert.couple().clone(), self.entries.len());
        self.entries.push(cert);
        true
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = &Certificate> {
        self.entries.iter()
    }

    pub fn get(&self, couple: &Couple) -> Option<&Certificate> {
        self.index.get(couple).map(|&i| &self.entries[i])
    }

    /// Direct hit, or the mirror of a stored certificate for the mirrored
    /// couple.
    pub fn lookup(&self, couple: &Couple) -> Option<Certificate> {
        if let Some(c) = self.get(couple) {
            return Some(c.clone());
        }
        self.get(&couple.mirror()).map(Certificate::mirrored)
    }

    /// Parses and verifies every line; blank lines and `#` comments are
    /// skipped.
    pub fn from_jsonl(text: &str) -> Result<Self> {
        Self::from_jsonl_with(text, Exec::default())
    }

    pub fn from_jsonl_with(text: &str, exec: Exec) -> Result<Self> {
        let lines: Vec<(usize, &str)> = text
            .lines()
            .enumerate()
            .filter(|(_, l)| !l.trim().is_empty() && !l.trim_start().starts_with('#'))
            .collect();
        let parsed = exec.map(lines, |(n, line)| {
            Certificate::from_json_line(line).map_err(|e| Error::Database(format!("line {}: {e}", n + 1)))
        });
        let certs = parsed.into_iter().collect::<Result<Vec<_>>>()?;
        Ok(Self::new(certs))
    }

    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path).map_err(|e| Error::Database(format!("{}: {e}", path.display())))?;
        Self::from_jsonl(&text)
    }

    /// Raw text of the database shipped with the crate.
    pub fn embedded_text() -> &'static str {
        EMBEDDED
    }

    /// The database shipped with the crate.
    pub fn embedded() -> &'static CertificateDb {
        static DB: OnceLock<CertificateDb> = OnceLock::new();
        DB.get_or_init(|| CertificateDb::from_jsonl(EMBEDDED).expect("embedded certificate database verifies"))
    }

    /// `path` if given, else `$SAPREALIZE_DB`, else the embedded database.
    pub fn resolve(path: Option<&Path>) -> Result<CertificateDb> {
        if let Some(p) = path {
            return Self::load(p);
        }
        match std::env::var_os(DB_ENV) {
            Some(p) if !p.is_empty() => Self::load(Path::new(&p)),
            _ => Ok(Self::embedded().clone()),
        }
    }

    /// One line per certificate, sorted by degree, pattern and SAP.
    pub fn to_jsonl(&self) -> String {
        let mut certs: Vec<&Certificate> = self.entries.iter().collect();
        certs.sort_by(|a, b| (a.degree(), a.couple()).cmp(&(b.degree(), b.couple())));
        let mut out = String::new();
        for c in certs {
            out.push_str(&c.to_json_line());
            out.push('\n');
        }
        out
    }

    /// Re-verifies every entry, in insertion order.
    pub fn verify_all(&self, exec: Exec) -> Vec<VerificationReport> {
        exec.map(self.entries.iter().collect(), Certificate::verify)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cert(coeffs: &[i64], sp: &str, sap: &str) -> Result<Certificate> {
        Certificate::new(Polynomial::from_ints(coeffs), sp.parse()?, sap.parse()?, "test")
    }

    #[test]
    fn construction_verifies() {
        assert!(cert(&[2, 3, 1], "+++", "(0,2),(0,1)").is_ok());
        assert!(matches!(
            cert(&[2, 2, 1], "+++", "(0,2),(0,1)"),
            Err(Error::CertificateRejected { .. })
        ));
    }

    #[test]
    fn json_round_trip() {
        let c = cert(&[8, -10, 1, 1], "++-+", "(2,1),(1,1),(0,1)").unwrap();
        let line = c.to_json_line();
        assert_eq!(
            line,
            r#"{"d":3,"sp":"++-+","sap":[[2,1],[1,1],[0,1]],"coeffs":["8/1","-10/1","1/1","1/1"],"provenance":"test"}"#
        );
        assert_eq!(Certificate::from_json_line(&line).unwrap(), c);
        let forged = line.replace("[2,1],[1,1]", "[0,1],[1,1]");
        assert!(Certificate::from_json_line(&forged).is_err());
    }

    #[test]
    fn mirror_lookup() {
        let c = cert(&[8, -10, 1, 1], "++-+", "(2,1),(1,1),(0,1)").unwrap();
        let db = CertificateDb::new([c.clone()]);
        let mirrored = c.couple().mirror();
        let hit = db.lookup(&mirrored).unwrap();
        assert_eq!(hit.couple(), &mirrored);
        assert_eq!(hit.provenance(), "mirror:test");
        assert_eq!(hit.mirrored(), c);
    }

    #[test]
    fn jsonl_errors_carry_line_numbers() {
        let good = cert(&[2, 3, 1], "+++", "(0,2),(0,1)").unwrap().to_json_line();
        let text = format!("# header\n{good}\n\n{{\"d\":1}}\n");
        let err = CertificateDb::from_jsonl(&text).unwrap_err().to_string();
        assert!(err.contains("line 4"), "{err}");
        let db = CertificateDb::from_jsonl(&format!("{good}\n{good}\n")).unwrap();
        assert_eq!(db.len(), 1);
    }
}
