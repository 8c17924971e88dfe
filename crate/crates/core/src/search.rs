//! Certificate search for a target couple:
//!
//! 1. database lookup, mirrored entries included;
//! 2. constructions from a certificate of the truncated couple (all-real
//!    root products, antiderivative shifts, vertical shifts);
//! 3. seeded sampling of monic polynomials with the target sign pattern.
//!
//! Identical configuration and target give identical outcomes regardless of
//! the execution strategy. Failure is not evidence of nonrealizability
//! beyond the budget spent.

use num_bigint::BigInt;
use num_traits::One;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::certificate::{Certificate, CertificateDb};
use crate::construct::{
    antiderivative_head, check_target, descartes_realizer, extend_by_antiderivative, large_ladder, small_ladder,
    vertical_shift, DEFAULT_K_MAX,
};
use crate::error::Result;
use crate::exec::Exec;
use crate::poly::Polynomial;
use crate::rational::Rational;
use crate::roots::realizes_sap;
use crate::saps::descartes_sap;
use crate::sign::{Couple, Sap, Sign, SignPattern};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchConfig {
    pub seed: u64,
    /// Stage-3 sample budget.
    pub max_iterations: u64,
    /// Sampled magnitudes are `(1 + k/denominator_bound) * 2^e`, `k` below
    /// the bound; must be a power of two.
    pub denominator_bound: u64,
    /// Small-parameter ladder, decreasing.
    pub epsilon_ladder: Vec<Rational>,
    /// Large-parameter ladder, increasing.
    pub large_ladder: Vec<Rational>,
    /// Inclusive exponent range for `e` in sampled magnitudes, applied to
    /// every non-leading coefficient.
    pub coefficient_box: (i32, i32),
    /// Highest stage run (1 to 3).
    pub max_stage: u8,
    pub exec: Exec,
}

impl Default for SearchConfig {
    fn default() -> Self {
        Self {
            seed: 0,
            max_iterations: 100_000,
            denominator_bound: 256,
            epsilon_ladder: small_ladder(DEFAULT_K_MAX),
            large_ladder: large_ladder(DEFAULT_K_MAX),
            coefficient_box: (-12, 8),
            max_stage: 3,
            exec: Exec::default(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SearchOutcome {
    Found { certificate: Certificate, stage: u8 },
    NotFound { iterations: u64 },
}

impl SearchOutcome {
    pub fn certificate(&self) -> Option<&Certificate> {
        match self {
            SearchOutcome::Found { certificate, .. } => Some(certificate),
            SearchOutcome::NotFound { .. } => None,
        }
    }
}

/// Runs the pipeline for `(sp, sap)`.
pub fn search_realizer(
    sp: &SignPattern,
    sap: &Sap,
    db: &CertificateDb,
    config: &SearchConfig,
) -> Result<SearchOutcome> {
    check_target(sp, sap)?;
    let target = Couple::new(sp.clone(), sap.clone());
    let found = db.lookup(&target).map(|c| (c, 1)).or_else(|| {
        (config.max_stage >= 2)
            .then(|| constructive(&target, db, config).map(|c| (c, 2)))
            .flatten()
    });
    if let Some((certificate, stage)) = found {
        return Ok(finish(certificate, stage));
    }
    if config.max_stage < 3 {
        return Ok(SearchOutcome::NotFound { iterations: 0 });
    }
    Ok(match sample(&target, config) {
        Some(certificate) => finish(certificate, 3),
        None => SearchOutcome::NotFound {
            iterations: config.max_iterations,
        },
    })
}

fn finish(certificate: Certificate, stage: u8) -> SearchOutcome {
    // mirroring re-verifies; a failure here would be a verifier bug
    let _ = certificate.mirrored();
    SearchOutcome::Found { certificate, stage }
}

/// Stage 2. Recurses on the truncated couple when the database has no
/// certificate for it.
pub fn constructive(target: &Couple, db: &CertificateDb, config: &SearchConfig) -> Option<Certificate> {
    let sp = &target.sp;
    if target.sap == descartes_sap(sp) {
        return descartes_realizer(sp, &config.epsilon_ladder, config.exec).ok();
    }
    let tail = Couple::new(sp.truncated()?, target.sap.tail()?);
    let mut bases: Vec<Certificate> = Vec::new();
    if let Some(c) = db.get(&tail) {
        bases.push(c.clone());
    }
    if let Some(c) = db.get(&tail.mirror()) {
        bases.push(c.mirrored());
    }
    if bases.is_empty() {
        bases.extend(constructive(&tail, db, config));
    }
    let side = sp.last();
    let d = sp.degree();
    for base in &bases {
        if target.sap.head() == antiderivative_head(d - 1, side) {
            if let Ok(c) = extend_by_antiderivative(base.poly(), side, &config.large_ladder, config.exec) {
                if c.couple() == target {
                    return Some(c);
                }
            }
        }
        if let Some(c) = vertical_shift(base, target) {
            return Some(c);
        }
    }
    None
}

/// The `i`-th stage-3 candidate for pattern `sp`.
pub fn sample_candidate(sp: &SignPattern, config: &SearchConfig, i: u64) -> Polynomial {
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    rng.set_stream(i);
    let (lo, hi) = config.coefficient_box;
    let bound = config.denominator_bound.max(1);
    let d = sp.degree();
    let mut coeffs = vec![Rational::one(); d + 1];
    for (j, c) in coeffs.iter_mut().enumerate().take(d) {
        let e = rng.random_range(lo..=hi);
        let k = rng.random_range(0..bound);
        let mut m = Rational::new(BigInt::from(bound + k), BigInt::from(bound)) * crate::rational::pow2(e);
        if sp.signs()[d - j] == Sign::Minus {
            m = -m;
        }
        *c = m;
    }
    Polynomial::new(coeffs)
}

fn sample(target: &Couple, config: &SearchConfig) -> Option<Certificate> {
    let hit = config.exec.find_first(0..config.max_iterations, |i| {
        let p = sample_candidate(&target.sp, config, i);
        realizes_sap(&p.to_int(), &target.sap).then_some(p)
    });
    let (i, p) = hit?;
    Certificate::new(
        p,
        target.sp.clone(),
        target.sap.clone(),
        format!("searched:seed={},sample={i}", config.seed),
    )
    .ok()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;

    fn small_config() -> SearchConfig {
        SearchConfig {
            max_iterations: 2_000,
            ..SearchConfig::default()
        }
    }

    #[test]
    fn rejects_invalid_targets() {
        let sp: SignPattern = "+++".parse().unwrap();
        let sap: Sap = "(1,1),(0,1)".parse().unwrap();
        assert!(matches!(
            search_realizer(&sp, &sap, &CertificateDb::default(), &small_config()),
            Err(Error::InvalidTarget(_))
        ));
    }

    #[test]
    fn database_hit_is_stage_one() {
        let c = Certificate::from_realized(Polynomial::from_ints(&[2, 2, 1]), "db").unwrap();
        let db = CertificateDb::new([c.clone()]);
        let out = search_realizer(c.sp(), c.sap(), &db, &small_config()).unwrap();
        assert_eq!(
            out,
            SearchOutcome::Found {
                certificate: c,
                stage: 1
            }
        );
    }

    #[test]
    fn descartes_targets_are_constructed() {
        let sp: SignPattern = "+-++-+".parse().unwrap();
        let out = search_realizer(&sp, &descartes_sap(&sp), &CertificateDb::default(), &small_config()).unwrap();
        assert!(matches!(out, SearchOutcome::Found { stage: 2, .. }));
    }

    #[test]
    fn sampling_is_deterministic() {
        let sp: SignPattern = "++-+-".parse().unwrap();
        let cfg = small_config();
        assert_eq!(sample_candidate(&sp, &cfg, 7), sample_candidate(&sp, &cfg, 7));
        assert_ne!(sample_candidate(&sp, &cfg, 7), sample_candidate(&sp, &cfg, 8));
        assert_eq!(sample_candidate(&sp, &cfg, 3).sign_pattern().unwrap(), sp);
        let target = Couple::new(sp.clone(), "(0,0),(2,1),(1,1),(0,1)".parse().unwrap());
        let seq = sample(
            &target,
            &SearchConfig {
                exec: Exec::Sequential,
                ..cfg.clone()
            },
        );
        let par = sample(
            &target,
            &SearchConfig {
                exec: Exec::Parallel,
                ..cfg
            },
        );
        assert_eq!(seq, par);
    }

    #[test]
    fn nonrealizable_quartic_is_not_found() {
        let sp: SignPattern = "++-++".parse().unwrap();
        let sap: Sap = "(2,0),(2,1),(1,1),(0,1)".parse().unwrap();
        let out = search_realizer(&sp, &sap, &CertificateDb::default(), &small_config()).unwrap();
        assert_eq!(out, SearchOutcome::NotFound { iterations: 2_000 });
    }
}
