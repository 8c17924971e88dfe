//! Oracles written directly from the definitions, independent of the
//! library's implementation.
#![allow(dead_code)]

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub type Pair = (usize, usize);

/// Sign changes and sign preservations of a leading-first pattern
/// (`true` for `+`).
pub fn descartes(signs: &[bool]) -> Pair {
    let c = signs.windows(2).filter(|w| w[0] != w[1]).count();
    (c, signs.len() - 1 - c)
}

pub fn parse_signs(sp: &str) -> Vec<bool> {
    sp.chars().map(|ch| ch == '+').collect()
}

fn admissible(signs: &[bool], (pos, neg): Pair) -> bool {
    let (c, p) = descartes(signs);
    let last_sign_ok = signs[signs.len() - 1] == (pos % 2 == 0);
    pos <= c && (c - pos) % 2 == 0 && neg <= p && (p - neg) % 2 == 0 && last_sign_ok
}

fn rolle(prev: Pair, next: Pair) -> bool {
    let (s0, s1) = (prev.0 + prev.1, next.0 + next.1);
    next.0 + 1 >= prev.0 && next.1 + 1 >= prev.1 && s1 + 1 >= s0 && (s1 + 3 - s0) % 2 == 0
}

/// Checks every defining condition of a SAP for the pattern; `Err` names
/// the first one violated.
pub fn sap_conditions(signs: &[bool], sap: &[Pair]) -> Result<(), String> {
    let d = signs.len() - 1;
    if sap.len() != d {
        return Err(format!("length {} for degree {d}", sap.len()));
    }
    for (k, &pair) in sap.iter().enumerate() {
        if !admissible(&signs[..=d - k], pair) {
            return Err(format!("level {k}: {pair:?} not admissible"));
        }
        if k + 1 < d && !rolle(pair, sap[k + 1]) {
            return Err(format!("levels {k},{}: Rolle/parity", k + 1));
        }
    }
    Ok(())
}

/// Every SAP of the pattern, by exhaustive search over pairs level by level.
pub fn brute_force_saps(signs: &[bool]) -> Vec<Vec<Pair>> {
    let d = signs.len() - 1;
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn go(signs: &[bool], d: usize, cur: &mut Vec<Pair>, out: &mut Vec<Vec<Pair>>) {
        let k = cur.len();
        if k == d {
            out.push(cur.clone());
            return;
        }
        let deg = d - k;
        for pos in 0..=deg {
            for neg in 0..=deg - pos {
                let pair = (pos, neg);
                if !admissible(&signs[..=deg], pair) {
                    continue;
                }
                if k > 0 && !rolle(cur[k - 1], pair) {
                    continue;
                }
                cur.push(pair);
                go(signs, d, cur, out);
                cur.pop();
            }
        }
    }
    go(signs, d, &mut cur, &mut out);
    out
}

/// All patterns of degree `d` with leading `+`.
pub fn all_patterns(d: usize) -> Vec<Vec<bool>> {
    (0..1u32 << d)
        .map(|bits| {
            std::iter::once(true)
                .chain((0..d).map(|i| bits >> (d - 1 - i) & 1 == 0))
                .collect()
        })
        .collect()
}

pub fn show_signs(signs: &[bool]) -> String {
    signs.iter().map(|&s| if s { '+' } else { '-' }).collect()
}

pub fn show_sap(sap: &[Pair]) -> String {
    sap.iter()
        .map(|(p, n)| format!("({p},{n})"))
        .collect::<Vec<_>>()
        .join(",")
}

pub fn binomial(n: u128, k: u128) -> u128 {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// The closed form of A047749 at `n`.
pub fn a047749(n: u128) -> u128 {
    let m = n / 2;
    if n.is_multiple_of(2) {
        binomial(3 * m, m) / (2 * m + 1)
    } else {
        binomial(3 * m + 1, m + 1) / (2 * m + 1)
    }
}

// ---- root counting by Descartes bisection (Vincent-Collins-Akritas) ----

fn trim(mut p: Vec<BigInt>) -> Vec<BigInt> {
    while p.len() > 1 && p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
    p
}

fn variations(p: &[BigInt]) -> usize {
    let signs: Vec<bool> = p.iter().filter(|c| !c.is_zero()).map(Signed::is_positive).collect();
    signs.windows(2).filter(|w| w[0] != w[1]).count()
}

fn taylor_shift_one(p: &[BigInt]) -> Vec<BigInt> {
    let mut a = p.to_vec();
    let n = a.len();
    for i in 0..n {
        for j in (i..n - 1).rev() {
            let t = a[j + 1].clone();
            a[j] += t;
        }
    }
    a
}

fn reversed(p: &[BigInt]) -> Vec<BigInt> {
    p.iter().rev().cloned().collect()
}

/// `2^n p(x/2)`, ascending coefficients.
fn halve(p: &[BigInt]) -> Vec<BigInt> {
    let n = p.len() - 1;
    p.iter().enumerate().map(|(j, c)| c << (n - j)).collect()
}

fn eval(p: &[BigInt], x: &BigInt) -> BigInt {
    p.iter().rev().fold(BigInt::zero(), |acc, c| acc * x + c)
}

/// Roots in the open interval (0, 1) of a square-free polynomial.
fn roots_in_unit(p: &[BigInt], depth: u32) -> usize {
    assert!(depth < 400, "bisection did not terminate; input not square-free?");
    let v = variations(&taylor_shift_one(&reversed(p)));
    if v <= 1 {
        return v;
    }
    let left = halve(p);
    let right = taylor_shift_one(&left);
    let mid = usize::from(eval(&left, &BigInt::one()).is_zero());
    roots_in_unit(&left, depth + 1) + mid + roots_in_unit(&right, depth + 1)
}

fn positive_roots(p: &[BigInt]) -> usize {
    let at_one = usize::from(eval(p, &BigInt::one()).is_zero());
    roots_in_unit(p, 0) + at_one + roots_in_unit(&reversed(p), 0)
}

/// `(pos, neg, zero)` for a square-free integer polynomial, ascending.
pub fn signed_roots(p: &[BigInt]) -> (usize, usize, bool) {
    let mut p = trim(p.to_vec());
    let zero = p[0].is_zero();
    if zero {
        p.remove(0);
    }
    let neg: Vec<BigInt> = p
        .iter()
        .enumerate()
        .map(|(j, c)| if j % 2 == 1 { -c } else { c.clone() })
        .collect();
    (positive_roots(&p), positive_roots(&neg), zero)
}

/// Compares `x` with `q + s·√6` exactly.
pub fn cmp_surd(x: &BigRational, q: &BigRational, s: &BigRational) -> Ordering {
    // sign of (x - q) - s√6
    let a = x - q;
    let six = BigRational::from_integer(6.into());
    match (a.signum(), s.signum()) {
        (sa, ss) if ss.is_zero() => sa.cmp(&BigRational::zero()),
        (sa, ss) if sa.is_positive() && ss.is_negative() => Ordering::Greater,
        (sa, ss) if !sa.is_positive() && ss.is_positive() => Ordering::Less,
        (sa, _) => {
            // same sign: compare squares, reversing when both are negative
            let lhs = &a * &a;
            let rhs = s * s * six;
            let c = lhs.cmp(&rhs);
            if sa.is_positive() {
                c
            } else {
                c.reverse()
            }
        }
    }
}
