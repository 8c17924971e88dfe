//! Constructive realizations: degree-raising operators, the two quintic
//! families with multiple roots, and the parameter ladders used to make
//! "sufficiently small / large" choices concrete.
//!
//! Every function here proposes candidates and returns only candidates that
//! pass the exact verifier.

use std::fmt;

use num_traits::{One, Signed, Zero};

use crate::certificate::Certificate;
use crate::error::{Error, Result};
use crate::exec::Exec;
use crate::poly::Polynomial;
use crate::rational::{self, frac, int, pow2, Rational};
use crate::roots::{isolate_real_roots, realized_sap};
use crate::saps::{descartes_sap, sp_from_sap};
use crate::sign::{AdmissiblePair, Couple, Sign, SignPattern};

/// Deepest rung of the default ladders.
pub const DEFAULT_K_MAX: u32 = 40;

/// `2^-1, 2^-2, ..., 2^-k_max`.
pub fn small_ladder(k_max: u32) -> Vec<Rational> {
    (1..=k_max as i32).map(|k| pow2(-k)).collect()
}

/// `2^0, 2^1, ..., 2^k_max`.
pub fn large_ladder(k_max: u32) -> Vec<Rational> {
    (0..=k_max as i32).map(pow2).collect()
}

/// Scans the product of `ladders` in lexicographic order (first ladder
/// outermost) and returns the first tuple accepted by `f`, with its value.
pub fn nested_ladder_search<T, F>(ladders: &[Vec<Rational>], exec: Exec, f: F) -> Option<(Vec<Rational>, T)>
where
    T: Send,
    F: Fn(&[Rational]) -> Option<T> + Sync + Send,
{
    if ladders.iter().any(Vec::is_empty) {
        return None;
    }
    let total: u64 = ladders.iter().map(|l| l.len() as u64).product();
    let decode = |mut i: u64| {
        let mut tuple = vec![Rational::zero(); ladders.len()];
        for (slot, ladder) in tuple.iter_mut().zip(ladders).rev() {
            let n = ladder.len() as u64;
            *slot = ladder[(i % n) as usize].clone();
            i /= n;
        }
        tuple
    };
    exec.find_first(0..total, |i| {
        let tuple = decode(i);
        f(&tuple).map(|v| (tuple, v))
    })
    .map(|(_, hit)| hit)
}

fn signed(sign: Sign, r: Rational) -> Rational {
    match sign {
        Sign::Plus => r,
        Sign::Minus => -r,
    }
}

/// `p(x)(x + ε)` for [`Sign::Plus`], `p(x)(x − ε)` for [`Sign::Minus`], with
/// the first `ε` on `ladder` for which the product realizes the predicted
/// couple: the pattern of `p` with one sign appended (the last sign of `p`
/// for `Plus`, its opposite for `Minus`) and one more negative (`Plus`) or
/// positive (`Minus`) root at level 0.
pub fn extend_by_root_product(p: &Polynomial, side: Sign, ladder: &[Rational], exec: Exec) -> Result<Certificate> {
    let base = realized_sap(p)?;
    let kappa = base.sp.last();
    let sp = base.sp.appended(if side == Sign::Plus { kappa } else { kappa.flip() });
    let head = base.sap.head();
    let head = match side {
        Sign::Plus => AdmissiblePair::new(head.pos, head.neg + 1),
        Sign::Minus => AdmissiblePair::new(head.pos + 1, head.neg),
    };
    let found = exec.find_first(0..ladder.len() as u64, |i| {
        let eps = &ladder[i as usize];
        let q = p * &Polynomial::linear_factor(signed(side.flip(), eps.clone()));
        let r = realized_sap(&q).ok()?;
        (r.sp == sp && r.sap.head() == head).then_some(q)
    });
    let (i, q) = found.ok_or_else(|| Error::LadderExhausted(format!("root product {side:?} on {}", base.couple())))?;
    let eps = rational::to_short(&ladder[i as usize]);
    let tag = if side == Sign::Plus { "+" } else { "-" };
    Certificate::from_realized(q, format!("constructed:root-product(x{tag}{eps})"))
}

/// Level-0 pair that `Q ± A` takes for large `A`, where `Q' ` has degree `d`.
pub fn antiderivative_head(d: usize, side: Sign) -> AdmissiblePair {
    match (d.is_multiple_of(2), side) {
        (true, Sign::Plus) => AdmissiblePair::new(0, 1),
        (true, Sign::Minus) => AdmissiblePair::new(1, 0),
        (false, Sign::Plus) => AdmissiblePair::new(0, 0),
        (false, Sign::Minus) => AdmissiblePair::new(1, 1),
    }
}

/// `Q ± A` with `Q` the monic antiderivative of `p` vanishing at 0 and `A`
/// the first value on `ladder` (increasing) for which the result realizes
/// `(σ±, (head, SAP(p)))`, `head` as in [`antiderivative_head`].
pub fn extend_by_antiderivative(p: &Polynomial, side: Sign, ladder: &[Rational], exec: Exec) -> Result<Certificate> {
    let base = realized_sap(p)?;
    let d = base.sap.degree();
    let target = Couple::new(base.sp.appended(side), base.sap.prepended(antiderivative_head(d, side)));
    let q = p.antiderivative_from(&Rational::zero()).monic();
    let found = exec.find_first(0..ladder.len() as u64, |i| {
        let cand = q.add_constant(&signed(side, ladder[i as usize].clone()));
        Certificate::new(cand, target.sp.clone(), target.sap.clone(), "").ok()
    });
    let (i, cert) =
        found.ok_or_else(|| Error::LadderExhausted(format!("antiderivative shift on {}", base.couple())))?;
    let tag = if side == Sign::Plus { "+" } else { "-" };
    let a = rational::to_short(&ladder[i as usize]);
    Certificate::new(
        cert.poly().clone(),
        target.sp,
        target.sap,
        format!("constructed:antiderivative({tag}{a})"),
    )
}

/// Certificate for the unique SAP of `sp` with all roots real, built as a
/// product of linear factors starting from `x ± 1`.
pub fn descartes_realizer(sp: &SignPattern, ladder: &[Rational], exec: Exec) -> Result<Certificate> {
    let signs = sp.signs();
    let mut p = Polynomial::linear_factor(signed(signs[1].flip(), Rational::one()));
    for w in signs.windows(2).skip(1) {
        let side = if w[0] == w[1] { Sign::Plus } else { Sign::Minus };
        p = extend_by_root_product(&p, side, ladder, exec)?.poly().clone();
    }
    Certificate::new(p, sp.clone(), descartes_sap(sp), "constructed:root-product chain")
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    /// `(x+1)^3 (x-a)^2`
    S,
    /// `(x+a)^2 (x-1)^3`
    T,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Family::S => "S",
            Family::T => "T",
        })
    }
}

/// The expanded quintic `S_a` or `T_a`.
pub fn st_family(a: &Rational, which: Family) -> Result<Polynomial> {
    if !a.is_positive() {
        return Err(Error::NonPositiveParameter(rational::to_short(a)));
    }
    if *a == frac(2, 3) || *a == frac(3, 2) {
        return Err(Error::BreakpointValue(rational::to_short(a)));
    }
    let one = Rational::one();
    let (triple, double) = match which {
        Family::S => (-one, a.clone()),
        Family::T => (one, -a.clone()),
    };
    let roots = [triple.clone(), triple.clone(), triple, double.clone(), double];
    Ok(Polynomial::from_roots(&roots))
}

/// A number `q + s·√6` with rational `q`, `s` given as `(num, den)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Surd {
    pub rational: (i64, i64),
    pub sqrt6: (i64, i64),
}

impl Surd {
    pub const fn new(rational: (i64, i64), sqrt6: (i64, i64)) -> Self {
        Self { rational, sqrt6 }
    }

    pub fn approx(&self) -> f64 {
        self.rational.0 as f64 / self.rational.1 as f64 + self.sqrt6.0 as f64 / self.sqrt6.1 as f64 * 6f64.sqrt()
    }
}

/// One row of the sign table for the families: for `a` strictly between
/// `lower` and `upper` (`None` = +∞) the coefficients have pattern `sp`.
#[derive(Clone, Copy, Debug)]
pub struct FamilyInterval {
    pub family: Family,
    pub lower: Surd,
    pub upper: Option<Surd>,
    pub sp: &'static str,
}

const ZERO: Surd = Surd::new((0, 1), (0, 1));
const R1: Surd = Surd::new((1, 1), (-1, 3));
const R2: Surd = Surd::new((3, 1), (-1, 1));
const TWO_THIRDS: Surd = Surd::new((2, 3), (0, 1));
const THREE_HALVES: Surd = Surd::new((3, 2), (0, 1));
const R3: Surd = Surd::new((1, 1), (1, 3));
const R4: Surd = Surd::new((3, 1), (1, 1));

pub const FAMILY_SIGN_TABLE: [FamilyInterval; 7] = [
    FamilyInterval {
        family: Family::S,
        lower: ZERO,
        upper: Some(R1),
        sp: "++++-+",
    },
    FamilyInterval {
        family: Family::S,
        lower: R1,
        upper: Some(R2),
        sp: "+++--+",
    },
    FamilyInterval {
        family: Family::S,
        lower: R2,
        upper: Some(TWO_THIRDS),
        sp: "++---+",
    },
    FamilyInterval {
        family: Family::S,
        lower: TWO_THIRDS,
        upper: Some(THREE_HALVES),
        sp: "++--++",
    },
    FamilyInterval {
        family: Family::T,
        lower: THREE_HALVES,
        upper: Some(R3),
        sp: "++-++-",
    },
    FamilyInterval {
        family: Family::T,
        lower: R3,
        upper: Some(R4),
        sp: "++--+-",
    },
    FamilyInterval {
        family: Family::T,
        lower: R4,
        upper: None,
        sp: "+++-+-",
    },
];

/// Simplest dyadic in the open interval `(lo, hi)`.
pub fn dyadic_between(lo: &Rational, hi: &Rational) -> Rational {
    assert!(lo < hi, "empty interval");
    let mut k = 0;
    loop {
        let step = pow2(-k);
        let c = ((lo / &step).floor() + Rational::one()) * &step;
        if c < *hi {
            return c;
        }
        k += 1;
    }
}

/// Constants `c` with sign `sign` such that the real roots of `base + c`
/// change in number between consecutive candidates: one per gap between the
/// negated critical values of `base` (and 0), plus one beyond each end.
fn shift_candidates(base: &Polynomial, sign: Sign) -> Vec<Rational> {
    let Ok(crit) = isolate_real_roots(&base.derivative(), &pow2(-64)) else {
        return Vec::new();
    };
    let mut cuts: Vec<Rational> = crit
        .iter()
        .map(|(lo, hi)| -base.evaluate(&((lo + hi) / int(2))))
        .collect();
    cuts.push(Rational::zero());
    cuts.sort();
    cuts.dedup();
    let mut out = Vec::new();
    let first = cuts[0].clone();
    let last = cuts[cuts.len() - 1].clone();
    out.push(dyadic_between(&(&first - (first.abs() + int(1))), &first));
    for w in cuts.windows(2) {
        out.push(dyadic_between(&w[0], &w[1]));
    }
    out.push(dyadic_between(&last, &(&last + (last.abs() + int(1)))));
    out.retain(|c| !c.is_zero() && (c.is_positive() == (sign == Sign::Plus)));
    out
}

/// Realizes `target` as `∫R + δx + c` where `R` is the polynomial of `tail`
/// (which must realize the target's truncated pattern and tail SAP). The
/// constant `c` is tried in every gap between critical values; `δ` starts at
/// 0 and otherwise tilts the linear coefficient by small relative amounts to
/// separate equal critical values.
pub fn vertical_shift(tail: &Certificate, target: &Couple) -> Option<Certificate> {
    if target.sp.truncated().as_ref() != Some(tail.sp()) || target.sap.tail().as_ref() != Some(tail.sap()) {
        return None;
    }
    let base = tail.poly().antiderivative_from(&Rational::zero()).monic();
    let a1 = base.coeff(1);
    let tilts = std::iter::once(Rational::zero()).chain((1..=12).flat_map(|k| {
        let t = &a1 * pow2(-k);
        [t.clone(), -t]
    }));
    for (n, delta) in tilts.enumerate() {
        let tilted = &base + &Polynomial::monomial(delta, 1);
        for c in shift_candidates(&tilted, target.sp.last()) {
            let cand = tilted.add_constant(&c);
            if let Ok(cert) = Certificate::new(cand, target.sp.clone(), target.sap.clone(), "") {
                let how = if n == 0 {
                    "vertical-shift"
                } else {
                    "tilted vertical-shift"
                };
                return Certificate::new(
                    cert.poly().clone(),
                    target.sp.clone(),
                    target.sap.clone(),
                    format!("constructed:{how}"),
                )
                .ok();
            }
        }
    }
    None
}

/// Convenience: the pattern a target SAP fixes must match the given one.
pub(crate) fn check_target(sp: &SignPattern, sap: &crate::sign::Sap) -> Result<()> {
    if sap.degree() != sp.degree() || sp_from_sap(sap) != *sp {
        return Err(Error::InvalidTarget(format!("{sap} does not fit {sp}")));
    }
    sap.validate(sp)
        .map_err(|e| Error::InvalidTarget(format!("{sap} for {sp}: {e}")))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ladder() -> Vec<Rational> {
        small_ladder(DEFAULT_K_MAX)
    }

    #[test]
    fn ladders() {
        assert_eq!(small_ladder(3), vec![frac(1, 2), frac(1, 4), frac(1, 8)]);
        assert_eq!(large_ladder(2), vec![int(1), int(2), int(4)]);
    }

    #[test]
    fn nested_order_is_outer_first() {
        let ladders = vec![vec![int(1), int(2)], vec![int(10), int(20), int(30)]];
        let hit = nested_ladder_search(&ladders, Exec::Sequential, |t| (t[1] == int(20)).then_some(()));
        assert_eq!(hit.unwrap().0, vec![int(1), int(20)]);
        let hit = nested_ladder_search(&ladders, Exec::Parallel, |t| (t[0] == int(2)).then_some(()));
        assert_eq!(hit.unwrap().0, vec![int(2), int(10)]);
    }

    #[test]
    fn root_product_examples() {
        let c =
            extend_by_root_product(&Polynomial::from_ints(&[1, 1]), Sign::Plus, &ladder(), Exec::Sequential).unwrap();
        assert_eq!(c.poly(), &Polynomial::parse_coeffs(&["1/2", "3/2", "1"]).unwrap());
        assert_eq!(c.sap().to_string(), "(0,2),(0,1)");
        let c = extend_by_root_product(
            &Polynomial::from_ints(&[2, 3, 1]),
            Sign::Minus,
            &ladder(),
            Exec::Parallel,
        )
        .unwrap();
        assert_eq!(c.sp().to_string(), "+++-");
        assert_eq!(c.sap().to_string(), "(1,2),(0,2),(0,1)");
        assert_eq!(
            extend_by_root_product(&Polynomial::zero(), Sign::Plus, &ladder(), Exec::Sequential),
            Err(Error::ZeroPolynomial)
        );
    }

    #[test]
    fn antiderivative_examples() {
        let big = large_ladder(DEFAULT_K_MAX);
        let c = extend_by_antiderivative(&Polynomial::from_ints(&[3, 2]), Sign::Plus, &big, Exec::Sequential).unwrap();
        assert_eq!(c.poly(), &Polynomial::from_ints(&[4, 3, 1]));
        assert_eq!(c.sap().to_string(), "(0,0),(0,1)");
        let p = Polynomial::from_ints(&[2, 3, 1]);
        let plus = extend_by_antiderivative(&p, Sign::Plus, &big, Exec::Parallel).unwrap();
        assert_eq!(plus.sap().head(), AdmissiblePair::new(0, 1));
        assert_eq!(plus.sp().to_string(), "++++");
        let minus = extend_by_antiderivative(&p, Sign::Minus, &big, Exec::Parallel).unwrap();
        assert_eq!(minus.sap().head(), AdmissiblePair::new(1, 0));
        assert_eq!(minus.sp().last(), Sign::Minus);
    }

    #[test]
    fn descartes_chain() {
        for sp in ["++", "+-", "+++-", "+-+-+", "++-+--"] {
            let sp: SignPattern = sp.parse().unwrap();
            let c = descartes_realizer(&sp, &ladder(), Exec::Sequential).unwrap();
            assert_eq!(c.sap(), &descartes_sap(&sp));
        }
    }

    #[test]
    fn family_examples() {
        let s = st_family(&frac(1, 10), Family::S).unwrap();
        assert_eq!(s.sign_pattern().unwrap().to_string(), "++++-+");
        let s = st_family(&int(1), Family::S).unwrap();
        assert_eq!(s.sign_pattern().unwrap().to_string(), "++--++");
        let t = st_family(&int(6), Family::T).unwrap();
        assert_eq!(t.sign_pattern().unwrap().to_string(), "+++-+-");
        assert!(matches!(
            st_family(&frac(3, 2), Family::T),
            Err(Error::BreakpointValue(_))
        ));
        assert!(matches!(
            st_family(&int(0), Family::S),
            Err(Error::NonPositiveParameter(_))
        ));
    }

    #[test]
    fn dyadics() {
        assert_eq!(dyadic_between(&frac(1, 3), &frac(2, 3)), frac(1, 2));
        assert_eq!(dyadic_between(&int(-3), &int(5)), int(-2));
        assert_eq!(dyadic_between(&frac(1, 100), &frac(1, 99)), frac(41, 4096));
    }

    #[test]
    fn shifts_reach_every_head() {
        // tail (0,2),(0,1) realized by x^2+3x+2; the cubics above it
        let tail = Certificate::from_realized(Polynomial::from_ints(&[2, 3, 1]), "t").unwrap();
        for (sp, sap) in [
            ("++++", "(0,3),(0,2),(0,1)"),
            ("++++", "(0,1),(0,2),(0,1)"),
            ("+++-", "(1,2),(0,2),(0,1)"),
            ("+++-", "(1,0),(0,2),(0,1)"),
        ] {
            let target = Couple::new(sp.parse().unwrap(), sap.parse().unwrap());
            let c = vertical_shift(&tail, &target).unwrap_or_else(|| panic!("{target}"));
            assert_eq!(c.couple(), &target);
        }
    }
}
