//! Exact-arithmetic machinery for sequences of admissible pairs (SAPs) of real
//! univariate polynomials: sign-pattern combinatorics, Sturm-based root
//! counting, realizability certificates, constructive extensions, seeded
//! certificate search and the complete classification for degrees 1 to 5.
//!
//! All arithmetic is exact. Floating point never decides an outcome; where a
//! construction needs numeric hints (critical values, root locations) the hint
//! only proposes a candidate, which is then verified exactly.

pub mod certificate;
pub mod classify;
pub mod construct;
mod error;
pub mod exec;
mod intpoly;
pub mod known;
pub mod poly;
pub mod rational;
pub mod roots;
pub mod saps;
pub mod search;
pub mod sign;

pub use certificate::{Certificate, CertificateDb};
pub use classify::{classify, classify_rows, Classification, ClassificationRow, RowStatus};
pub use error::{Error, Result};
pub use exec::Exec;
pub use poly::Polynomial;
pub use rational::Rational;
pub use roots::{
    count_signed_roots, realized_sap, sturm_chain, verify_certificate, RealizedSap, RootCountReport, SturmChain,
    VerificationReport,
};
pub use saps::{
    admissible_pairs, count_saps_allplus, descartes_pair, enumerate_saps, rolle_compatible, sap_count_recurrence,
    sp_from_sap, truncations,
};
pub use search::{search_realizer, SearchConfig, SearchOutcome};
pub use sign::{AdmissiblePair, Couple, DescartesPair, Sap, Sign, SignPattern};
