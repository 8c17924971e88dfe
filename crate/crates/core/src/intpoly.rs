//! Dense integer polynomials used internally for Sturm chains and gcds.
//!
//! Every remainder step works on primitive parts, so coefficients stay close
//! to the size of the input instead of growing like a naive rational
//! Euclidean sequence.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::rational::{common_denominator, Rational};

#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct IntPoly {
    /// Ascending degree, trimmed: last entry nonzero unless empty.
    pub(crate) coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub(crate) fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    /// Positive multiple of a rational polynomial with integer coefficients,
    /// reduced to its primitive part. Signs of all coefficients are kept.
    pub(crate) fn from_rationals(coeffs: &[Rational]) -> Self {
        let den = common_denominator(coeffs);
        let ints = coeffs.iter().map(|c| c.numer() * (&den / c.denom())).collect();
        Self::new(ints).primitive()
    }

    pub(crate) fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub(crate) fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub(crate) fn leading(&self) -> &BigInt {
        self.coeffs.last().expect("leading coefficient of zero polynomial")
    }

    pub(crate) fn constant(&self) -> BigInt {
        self.coeffs.first().cloned().unwrap_or_default()
    }

    /// Divides out the positive content.
    pub(crate) fn primitive(self) -> Self {
        let content = self.coeffs.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
        if content.is_zero() || content.is_one() {
            return self;
        }
        Self {
            coeffs: self.coeffs.into_iter().map(|c| c / &content).collect(),
        }
    }

    pub(crate) fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(j, c)| c * BigInt::from(j))
                .collect(),
        )
    }

    pub(crate) fn negated(self) -> Self {
        Self {
            coeffs: self.coeffs.into_iter().map(|c| -c).collect(),
        }
    }

    /// Number of trailing zero coefficients at the low end (multiplicity of
    /// the root at 0) and the quotient by that power of `x`.
    pub(crate) fn strip_zero_root(&self) -> (usize, IntPoly) {
        let m = self.coeffs.iter().take_while(|c| c.is_zero()).count();
        (m, IntPoly::new(self.coeffs[m..].to_vec()))
    }

    /// Remainder of `lc(b)^e * a` by `b`, where the multiplier is forced
    /// positive (the exponent is bumped to even when `lc(b) < 0`), so the
    /// result is a positive multiple of the true rational remainder.
    pub(crate) fn signed_prem(a: &IntPoly, b: &IntPoly) -> IntPoly {
        let db = b.degree().expect("division by zero polynomial");
        let Some(da) = a.degree() else {
            return IntPoly::new(Vec::new());
        };
        if da < db {
            return a.clone();
        }
        let lb = b.leading().clone();
        let mut rem = a.coeffs.clone();
        let mut steps = 0u32;
        let mut top = da;
        loop {
            // rem has degree <= top; eliminate x^top.
            let lr = rem[top].clone();
            if !lr.is_zero() {
                for c in rem.iter_mut() {
                    *c *= &lb;
                }
                let shift = top - db;
                for (j, bj) in b.coeffs.iter().enumerate() {
                    rem[shift + j] -= &lr * bj;
                }
                steps += 1;
            }
            if top == db {
                break;
            }
            top -= 1;
        }
        if lb.is_negative() && steps % 2 == 1 {
            for c in rem.iter_mut() {
                *c *= &lb;
            }
        }
        rem.truncate(db);
        IntPoly::new(rem)
    }

    pub(crate) fn sign_at_zero(&self) -> i8 {
        sign_of(&self.constant())
    }

    pub(crate) fn sign_at_pos_inf(&self) -> i8 {
        sign_of(self.leading())
    }

    pub(crate) fn sign_at_neg_inf(&self) -> i8 {
        let s = sign_of(self.leading());
        if self.degree().unwrap_or(0).is_multiple_of(2) {
            s
        } else {
            -s
        }
    }

    /// Sign at `num / den` (`den > 0`), via the homogenized sum
    /// `sum c_j num^j den^(n-j)`.
    pub(crate) fn sign_at(&self, x: &Rational) -> i8 {
        let Some(n) = self.degree() else { return 0 };
        let (num, den) = (x.numer(), x.denom());
        let mut acc = BigInt::zero();
        let mut num_pow = BigInt::one();
        let mut den_pows = Vec::with_capacity(n + 1);
        let mut d = BigInt::one();
        for _ in 0..=n {
            den_pows.push(d.clone());
            d *= den;
        }
        for (j, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                acc += c * &num_pow * &den_pows[n - j];
            }
            num_pow *= num;
        }
        sign_of(&acc)
    }

    pub(crate) fn to_rationals(&self) -> Vec<Rational> {
        self.coeffs.iter().map(|c| Rational::from_integer(c.clone())).collect()
    }
}

pub(crate) fn sign_of(x: &BigInt) -> i8 {
    if x.is_positive() {
        1
    } else if x.is_negative() {
        -1
    } else {
        0
    }
}

/// Primitive gcd of two integer polynomials (not both zero), positive leading
/// coefficient.
pub(crate) fn gcd(a: &IntPoly, b: &IntPoly) -> IntPoly {
    let (mut a, mut b) = (a.clone().primitive(), b.clone().primitive());
    if a.degree() < b.degree() {
        std::mem::swap(&mut a, &mut b);
    }
    while !b.is_zero() {
        let r = IntPoly::signed_prem(&a, &b).primitive();
        a = b;
        b = r;
    }
    if !a.is_zero() && a.leading().is_negative() {
        a = a.negated();
    }
    a
}

/// Sturm sequence `p, p', -rem, ...` with every element reduced to its
/// primitive part. Ends at the last nonzero remainder (a constant iff `p` is
/// square-free).
pub(crate) fn sturm_sequence(p: &IntPoly) -> Vec<IntPoly> {
    let mut chain = vec![p.clone(), p.derivative().primitive()];
    if chain[1].is_zero() {
        chain.pop();
        return chain;
    }
    loop {
        let n = chain.len();
        let r = IntPoly::signed_prem(&chain[n - 2], &chain[n - 1]);
        if r.is_zero() {
            break;
        }
        chain.push(r.primitive().negated());
    }
    chain
}

pub(crate) fn variations(signs: impl IntoIterator<Item = i8>) -> usize {
    let mut last = 0i8;
    let mut count = 0;
    for s in signs.into_iter().filter(|&s| s != 0) {
        if last != 0 && s != last {
            count += 1;
        }
        last = s;
    }
    count
}

/// Distinct positive and negative root counts of `q`, which must satisfy
/// `q(0) != 0`, plus whether `q` is square-free.
pub(crate) fn signed_counts(q: &IntPoly) -> (usize, usize, bool) {
    debug_assert!(!q.constant().is_zero());
    if q.degree() == Some(0) {
        return (0, 0, true);
    }
    let chain = sturm_sequence(q);
    let square_free = chain.last().and_then(IntPoly::degree) == Some(0);
    let v_zero = variations(chain.iter().map(IntPoly::sign_at_zero));
    let v_pos = variations(chain.iter().map(IntPoly::sign_at_pos_inf));
    let v_neg = variations(chain.iter().map(IntPoly::sign_at_neg_inf));
    (v_zero - v_pos, v_neg - v_zero, square_free)
}

/// Distinct real roots of `p` in `(lo, hi]`, from its Sturm chain.
pub(crate) fn roots_in(chain: &[IntPoly], lo: &Rational, hi: &Rational) -> usize {
    let va = variations(chain.iter().map(|p| p.sign_at(lo)));
    let vb = variations(chain.iter().map(|p| p.sign_at(hi)));
    va.saturating_sub(vb)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ip(c: &[i64]) -> IntPoly {
        IntPoly::new(c.iter().map(|&x| BigInt::from(x)).collect())
    }

    #[test]
    fn prem_keeps_remainder_sign() {
        // (x^2 + 1) mod (-2x + 1): true remainder 5/4
        let r = IntPoly::signed_prem(&ip(&[1, 0, 1]), &ip(&[1, -2]));
        assert_eq!(r.degree(), Some(0));
        assert!(r.leading().is_positive());
        // (x^3) mod (-x - 1): true remainder -1
        let r = IntPoly::signed_prem(&ip(&[0, 0, 0, 1]), &ip(&[-1, -1]));
        assert!(r.leading().is_negative());
    }

    #[test]
    fn counts_for_known_roots() {
        // (x-1)(x-2)(x+4) = x^3 + x^2 - 10x + 8
        assert_eq!(signed_counts(&ip(&[8, -10, 1, 1])), (2, 1, true));
        // (x-1)^2 (x+2)
        assert_eq!(signed_counts(&ip(&[2, -3, 0, 1])), (1, 1, false));
        assert_eq!(signed_counts(&ip(&[1, 0, 1])), (0, 0, true));
    }

    #[test]
    fn gcd_finds_common_factor() {
        // (x+1)^2 (x-2) and (x+1)(x-3)
        let a = ip(&[-2, -3, 0, 1]);
        let b = ip(&[-3, -2, 1]);
        assert_eq!(gcd(&a, &b), ip(&[1, 1]));
    }

    #[test]
    fn sign_at_rational_point() {
        let p = ip(&[-1, 0, 1]);
        assert_eq!(p.sign_at(&crate::rational::frac(1, 2)), -1);
        assert_eq!(p.sign_at(&crate::rational::frac(3, 2)), 1);
        assert_eq!(p.sign_at(&crate::rational::int(-1)), 0);
    }
}
