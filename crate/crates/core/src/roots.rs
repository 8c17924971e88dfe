//! Exact counting of positive and negative real roots with Sturm chains, and
//! extraction of the SAP a concrete polynomial realizes.
//!
//! Signs at `±∞` are read off leading coefficients and degrees; the sign
//! variation at `0` skips zero entries. A root at `0` is divided out first and
//! reported through `has_zero_root`, never counted as positive or negative.

use num_traits::{Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::intpoly::{self, IntPoly};
use crate::poly::Polynomial;
use crate::rational::{self, Rational};
use crate::sign::{AdmissiblePair, Couple, Sap, SignPattern};

/// Sturm sequence of a polynomial, every element scaled to a primitive
/// integer polynomial (positive scaling only).
#[derive(Clone, Debug)]
pub struct SturmChain {
    chain: Vec<IntPoly>,
}

impl SturmChain {
    pub fn polynomials(&self) -> Vec<Polynomial> {
        self.chain.iter().map(Polynomial::from_int).collect()
    }

    pub fn len(&self) -> usize {
        self.chain.len()
    }

    pub fn is_empty(&self) -> bool {
        self.chain.is_empty()
    }

    /// The last element is a nonzero constant iff the input is square-free.
    pub fn is_square_free(&self) -> bool {
        self.chain.last().and_then(IntPoly::degree) == Some(0)
    }

    pub fn variations_at_pos_inf(&self) -> usize {
        intpoly::variations(self.chain.iter().map(IntPoly::sign_at_pos_inf))
    }

    pub fn variations_at_neg_inf(&self) -> usize {
        intpoly::variations(self.chain.iter().map(IntPoly::sign_at_neg_inf))
    }

    pub fn variations_at(&self, x: &Rational) -> usize {
        intpoly::variations(self.chain.iter().map(|p| p.sign_at(x)))
    }

    /// Distinct real roots in `(lo, hi]`.
    pub fn roots_in(&self, lo: &Rational, hi: &Rational) -> usize {
        intpoly::roots_in(&self.chain, lo, hi)
    }

    pub fn total_real_roots(&self) -> usize {
        self.variations_at_neg_inf() - self.variations_at_pos_inf()
    }
}

pub fn sturm_chain(p: &Polynomial) -> Result<SturmChain> {
    match p.degree() {
        None => Err(Error::ZeroPolynomial),
        Some(0) => Err(Error::ConstantPolynomial),
        Some(_) => Ok(SturmChain {
            chain: intpoly::sturm_sequence(&p.to_int()),
        }),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct RootCountReport {
    /// Distinct positive real roots.
    pub pos: usize,
    /// Distinct negative real roots.
    pub neg: usize,
    pub has_zero_root: bool,
    pub square_free: bool,
    pub total_real: usize,
}

impl RootCountReport {
    pub fn pair(&self) -> AdmissiblePair {
        AdmissiblePair::new(self.pos, self.neg)
    }
}

fn count_int(p: &IntPoly) -> RootCountReport {
    let (m, q) = p.strip_zero_root();
    let (pos, neg, q_square_free) = intpoly::signed_counts(&q);
    RootCountReport {
        pos,
        neg,
        has_zero_root: m > 0,
        square_free: m <= 1 && q_square_free,
        total_real: pos + neg + usize::from(m > 0),
    }
}

/// Distinct positive and negative root counts of a nonconstant polynomial.
/// Multiple roots do not raise an error; they clear `square_free`.
pub fn count_signed_roots(p: &Polynomial) -> Result<RootCountReport> {
    match p.degree() {
        None => return Err(Error::ZeroPolynomial),
        Some(0) => return Err(Error::ConstantPolynomial),
        Some(_) => {}
    }
    let report = count_int(&p.to_int());
    if report.square_free && !report.has_zero_root {
        // sgn a_0 = (-1)^pos relative to the leading sign
        let lead_positive = p.leading().is_some_and(Signed::is_positive);
        let c0_positive = p.constant_term().is_positive();
        debug_assert_eq!(
            (lead_positive == c0_positive),
            report.pos.is_multiple_of(2),
            "Sturm count contradicts the sign of the constant term"
        );
    }
    Ok(report)
}

/// A polynomial's sign pattern together with the SAP it realizes.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RealizedSap {
    pub sap: Sap,
    pub sp: SignPattern,
}

impl RealizedSap {
    pub fn couple(&self) -> Couple {
        Couple::new(self.sp.clone(), self.sap.clone())
    }
}

/// Root counts of `P^(k)` for `k = 0 .. d-1`.
fn level_reports(p: &IntPoly) -> Vec<RootCountReport> {
    let d = p.degree().unwrap_or(0);
    let mut level = p.clone();
    let mut out = Vec::with_capacity(d);
    for _ in 0..d {
        out.push(count_int(&level));
        level = level.derivative().primitive();
    }
    out
}

/// The SAP realized by `p`: every `P^(k)`, `k < d`, must be square-free with
/// no root at 0, and every coefficient of `p` must be nonzero.
pub fn realized_sap(p: &Polynomial) -> Result<RealizedSap> {
    match p.degree() {
        None => return Err(Error::ZeroPolynomial),
        Some(0) => return Err(Error::ConstantPolynomial),
        Some(_) => {}
    }
    if !p.leading().is_some_and(Signed::is_positive) {
        return Err(Error::NonPositiveLeading);
    }
    let reports = level_reports(&p.to_int());
    for (k, r) in reports.iter().enumerate() {
        if !r.square_free {
            return Err(Error::MultipleRoot(k));
        }
        if r.has_zero_root {
            return Err(Error::ZeroRoot(k));
        }
    }
    let sp = p.sign_pattern()?;
    let sap = Sap::new(reports.iter().map(RootCountReport::pair).collect())?;
    debug_assert!(sap.validate(&sp).is_ok(), "realized {sap} is not a SAP of {sp}");
    Ok(RealizedSap { sap, sp })
}

/// Fast exact membership test used by the samplers: checks levels from the
/// top derivative down and stops at the first mismatch. The sign pattern of
/// `p` is assumed to be right already.
pub(crate) fn realizes_sap(p: &IntPoly, sap: &Sap) -> bool {
    let Some(d) = p.degree() else { return false };
    if d != sap.degree() {
        return false;
    }
    let mut levels = Vec::with_capacity(d);
    let mut level = p.clone();
    for _ in 0..d {
        let next = level.derivative().primitive();
        levels.push(level);
        level = next;
    }
    levels.iter().zip(sap.pairs()).rev().all(|(q, want)| {
        if q.constant().is_zero() {
            return false;
        }
        let (pos, neg, square_free) = intpoly::signed_counts(q);
        square_free && pos == want.pos && neg == want.neg
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct LevelReport {
    pub k: usize,
    pub pos: usize,
    pub neg: usize,
    pub square_free: bool,
    pub zero_root: bool,
}

/// Outcome of checking a claimed couple against a polynomial.
#[derive(Clone, Debug, Serialize)]
pub struct VerificationReport {
    pub pass: bool,
    pub per_derivative: Vec<LevelReport>,
    pub expected: Couple,
    pub realized: Option<Couple>,
    /// Why no couple could be read off the polynomial, if so.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

pub fn verify_certificate(p: &Polynomial, sp: &SignPattern, sap: &Sap) -> VerificationReport {
    let per_derivative = match p.degree() {
        Some(d) if d >= 1 => level_reports(&p.to_int())
            .into_iter()
            .enumerate()
            .map(|(k, r)| LevelReport {
                k,
                pos: r.pos,
                neg: r.neg,
                square_free: r.square_free,
                zero_root: r.has_zero_root,
            })
            .collect(),
        _ => Vec::new(),
    };
    let expected = Couple::new(sp.clone(), sap.clone());
    let (realized, error) = match realized_sap(p) {
        Ok(r) => (Some(r.couple()), None),
        Err(e) => (None, Some(e.to_string())),
    };
    VerificationReport {
        pass: realized.as_ref() == Some(&expected),
        per_derivative,
        expected,
        realized,
        error,
    }
}

/// Disjoint isolating intervals `(lo, hi]` of width at most `width` for the
/// distinct real roots of `p`, in increasing order. An exact rational root is
/// returned as the degenerate interval `(r, r)`.
pub fn isolate_real_roots(p: &Polynomial, width: &Rational) -> Result<Vec<(Rational, Rational)>> {
    let chain = sturm_chain(p)?;
    let int = p.to_int();
    let lc = p.leading().expect("nonconstant").abs();
    // Cauchy bound
    let bound = p
        .coeffs()
        .iter()
        .map(|c| c.abs() / &lc)
        .fold(Rational::zero(), |m, c| if c > m { c } else { m })
        + rational::int(1);
    let mut out = Vec::new();
    let mut stack = vec![(-bound.clone(), bound)];
    while let Some((lo, hi)) = stack.pop() {
        let n = chain.roots_in(&lo, &hi);
        if n == 0 {
            continue;
        }
        if n == 1 && &hi - &lo <= *width {
            if int.sign_at(&hi) == 0 {
                out.push((hi.clone(), hi));
            } else {
                out.push((lo, hi));
            }
            continue;
        }
        let mid = (&lo + &hi) / rational::int(2);
        stack.push((mid.clone(), hi));
        stack.push((lo, mid));
    }
    out.sort();
    Ok(out)
}
