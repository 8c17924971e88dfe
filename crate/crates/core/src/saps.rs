//! Sign-pattern combinatorics: Descartes pairs, admissible pairs, SAP
//! enumeration, the Z2-action and the all-plus counting sequence `A(d)`.
//!
//! Enumeration output is sorted in decreasing lexicographic order of the
//! flattened pair sequence, i.e. `((0,4),...)` before `((0,2),...)`, which is
//! the order in which these chains are traditionally listed.

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};
use serde::Serialize;

use crate::exec::Exec;
use crate::rational::Rational;
use crate::sign::{AdmissiblePair, Couple, DescartesPair, Sap, Sign, SignPattern};

pub fn descartes_pair(sp: &SignPattern) -> DescartesPair {
    let c = sp.signs().windows(2).filter(|w| w[0] != w[1]).count();
    DescartesPair { c, p: sp.degree() - c }
}

/// Descartes' rule with Fourier's parity, applied to `x` and `-x`.
pub fn is_admissible(pair: AdmissiblePair, sp: &SignPattern) -> bool {
    let DescartesPair { c, p } = descartes_pair(sp);
    pair.pos <= c && (c - pair.pos).is_multiple_of(2) && pair.neg <= p && (p - pair.neg).is_multiple_of(2)
}

/// All admissible pairs for `sp`, in decreasing lexicographic order.
pub fn admissible_pairs(sp: &SignPattern) -> Vec<AdmissiblePair> {
    let DescartesPair { c, p } = descartes_pair(sp);
    let mut out = Vec::new();
    for pos in (0..=c).rev().step_by(2) {
        for neg in (0..=p).rev().step_by(2) {
            out.push(AdmissiblePair::new(pos, neg));
        }
    }
    out
}

/// `sigma_0 = sp, sigma_1, ..., sigma_{d-1}`: each drops the final sign.
pub fn truncations(sp: &SignPattern) -> Vec<SignPattern> {
    (2..=sp.degree() + 1).rev().map(|len| sp.prefix(len)).collect()
}

/// Rolle's inequalities between `P^(k)` (`prev`) and `P^(k+1)` (`next`),
/// together with the parity condition: `next.total() + 3 - prev.total()` must
/// be even and at least 2.
pub fn rolle_compatible(prev: AdmissiblePair, next: AdmissiblePair) -> bool {
    let (pp, pn) = (prev.pos as i64, prev.neg as i64);
    let (np, nn) = (next.pos as i64, next.neg as i64);
    let gap = np + nn + 3 - pp - pn;
    np >= pp - 1 && nn >= pn - 1 && np + nn >= pp + pn - 1 && gap >= 2 && gap % 2 == 0
}

/// Every SAP compatible with `sp`, in decreasing lexicographic order.
///
/// Built top-down from `k = d-1`, where the pair is forced by the second
/// sign, extending towards `k = 0` and pruning with [`rolle_compatible`].
pub fn enumerate_saps(sp: &SignPattern) -> Vec<Sap> {
    let d = sp.degree();
    let options: Vec<Vec<AdmissiblePair>> = truncations(sp).iter().map(admissible_pairs).collect();
    let mut out = Vec::new();
    let mut chain = vec![AdmissiblePair::new(0, 0); d];
    extend(&options, d - 1, &mut chain, &mut out);
    out.sort_by(|a, b| b.cmp(a));
    out
}

fn extend(options: &[Vec<AdmissiblePair>], k: usize, chain: &mut Vec<AdmissiblePair>, out: &mut Vec<Sap>) {
    for &pair in &options[k] {
        if k + 1 < chain.len() && !rolle_compatible(pair, chain[k + 1]) {
            continue;
        }
        chain[k] = pair;
        if k == 0 {
            out.push(Sap::new(chain.clone()).expect("nonempty"));
        } else {
            extend(options, k - 1, chain, out);
        }
    }
}

/// Every canonical couple of degree `d` (patterns with second sign `+`),
/// ordered by pattern and then by [`enumerate_saps`] order.
pub fn canonical_couples(d: usize) -> Vec<Couple> {
    SignPattern::all(d)
        .into_iter()
        .filter(SignPattern::is_canonical)
        .flat_map(|sp| {
            enumerate_saps(&sp)
                .into_iter()
                .map(move |sap| Couple::new(sp.clone(), sap))
        })
        .collect()
}

/// The sign pattern a SAP determines: `(+, (-1)^{pos_{d-1}}, ..., (-1)^{pos_0})`.
pub fn sp_from_sap(sap: &Sap) -> SignPattern {
    let mut signs = vec![Sign::Plus];
    signs.extend(sap.pairs().iter().rev().map(|p| Sign::parity(p.pos)));
    SignPattern::new(signs).expect("length >= 2")
}

/// The unique SAP with `pos_0 + neg_0 = d`: every level carries the
/// Descartes pair of its truncation.
pub fn descartes_sap(sp: &SignPattern) -> Sap {
    Sap::new(
        truncations(sp)
            .iter()
            .map(|t| {
                let DescartesPair { c, p } = descartes_pair(t);
                AdmissiblePair::new(c, p)
            })
            .collect(),
    )
    .expect("nonempty")
}

/// Swaps `pos` and `neg` at every level (the effect of `P(x) -> ±P(-x)`).
pub fn z2_mirror(sap: &Sap) -> Sap {
    Sap::new(sap.pairs().iter().map(|p| p.swapped()).collect()).expect("nonempty")
}

/// Canonical representative (last pair `(0,1)`) and whether it was mirrored.
pub fn canonicalize(sap: &Sap) -> (Sap, bool) {
    let last = *sap.pairs().last().expect("nonempty");
    if last == AdmissiblePair::new(0, 1) {
        (sap.clone(), false)
    } else {
        (z2_mirror(sap), true)
    }
}

/// `h_{d,m}` for `0 <= m <= d+2`, built row by row up to `d_max`:
/// `h_{d,d} = 1`, `h_{d,m} = 0` for `m > d` or wrong parity,
/// `h_{d,0} = h_{d,2}` for even `d`, otherwise
/// `h_{d,m} = h_{d,m+2} + h_{d-1,m-1}`.
fn recurrence_table(d_max: usize) -> Vec<Vec<BigUint>> {
    let mut table: Vec<Vec<BigUint>> = Vec::with_capacity(d_max + 1);
    for d in 0..=d_max {
        let mut row = vec![BigUint::zero(); d + 3];
        row[d] = BigUint::one();
        for m in (0..d).rev() {
            if (d - m) % 2 != 0 {
                continue;
            }
            row[m] = if m == 0 {
                // d even: the derivative may have any odd root count >= 1
                row[2].clone()
            } else {
                &row[m + 2] + &table[d - 1][m - 1]
            };
        }
        table.push(row);
    }
    table
}

/// Number of SAPs of the all-plus pattern of length `d + 1` whose first pair
/// is `(0, m)`.
pub fn sap_count_recurrence(d: usize, m: usize) -> BigUint {
    if m > d || !(d - m).is_multiple_of(2) {
        return BigUint::zero();
    }
    recurrence_table(d)[d][m].clone()
}

/// `A(d)`, the number of SAPs of the all-plus pattern, via the recurrence.
pub fn count_saps_allplus(d: usize) -> BigUint {
    assert!(d >= 1, "A(d) is defined for d >= 1");
    let table = recurrence_table(d);
    (0..=d)
        .filter(|m| (d - m).is_multiple_of(2))
        .map(|m| &table[d][m])
        .sum()
}

fn binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    (0..k).fold(BigUint::one(), |acc, i| acc * (n - i) / (i + 1))
}

/// OEIS A047749: `C(3m, m)/(2m+1)` for `n = 2m`, `C(3m+1, m+1)/(2m+1)` for
/// `n = 2m+1`.
pub fn oeis_a047749(n: u64) -> BigUint {
    let m = n / 2;
    let top = if n.is_multiple_of(2) {
        binomial(3 * m, m)
    } else {
        binomial(3 * m + 1, m + 1)
    };
    top / (2 * m + 1)
}

#[derive(Clone, Debug, Serialize)]
pub struct ConjectureRow {
    pub d: usize,
    pub a_d: String,
    pub a047749: String,
    pub matches: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct ConjectureReport {
    pub rows: Vec<ConjectureRow>,
    pub first_mismatch: Option<usize>,
}

/// Compares `A(d)` with `a047749(d + 1)` for `d = 1 ..= d_max`.
pub fn check_a047749_conjecture(d_max: usize) -> ConjectureReport {
    let rows: Vec<ConjectureRow> = (1..=d_max)
        .map(|d| {
            let a = count_saps_allplus(d);
            let o = oeis_a047749(d as u64 + 1);
            ConjectureRow {
                d,
                matches: a == o,
                a_d: a.to_string(),
                a047749: o.to_string(),
            }
        })
        .collect();
    let first_mismatch = rows.iter().find(|r| !r.matches).map(|r| r.d);
    ConjectureReport { rows, first_mismatch }
}

#[derive(Clone, Debug, Serialize)]
pub struct GrowthRow {
    pub d: usize,
    pub a_d: String,
    pub bound: String,
    /// `A(d) - bound`, exact.
    pub margin: String,
    pub holds: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct GrowthReport {
    pub rows: Vec<GrowthRow>,
    pub all_hold: bool,
}

/// `A(d) >= 2 A(d-1)` for even `d`, `A(d) >= 3 A(d-1) / 2` for odd `d`,
/// for `2 <= d <= d_max`.
pub fn check_growth_inequalities(d_max: usize) -> GrowthReport {
    let a: Vec<BigInt> = std::iter::once(BigInt::zero())
        .chain((1..=d_max).map(|d| BigInt::from(count_saps_allplus(d))))
        .collect();
    let rows: Vec<GrowthRow> = (2..=d_max)
        .map(|d| {
            let prev = Rational::from_integer(a[d - 1].clone());
            let factor = if d % 2 == 0 {
                Rational::from_integer(2.into())
            } else {
                Rational::new(3.into(), 2.into())
            };
            let bound = prev * factor;
            let margin = Rational::from_integer(a[d].clone()) - &bound;
            GrowthRow {
                d,
                a_d: a[d].to_string(),
                holds: margin >= Rational::zero(),
                bound: crate::rational::to_short(&bound),
                margin: crate::rational::to_short(&margin),
            }
        })
        .collect();
    GrowthReport {
        all_hold: rows.iter().all(|r| r.holds),
        rows,
    }
}

/// Brute-force `A(d)`: the length of the all-plus enumeration.
pub fn count_saps_by_enumeration(d: usize) -> usize {
    enumerate_saps(&SignPattern::all_plus(d)).len()
}

/// SAP counts for every pattern of degree `d`, evaluated with `exec`.
pub fn sap_counts_by_pattern(d: usize, exec: Exec) -> Vec<(SignPattern, usize)> {
    exec.map(SignPattern::all(d), |sp| {
        let n = enumerate_saps(&sp).len();
        (sp, n)
    })
}
