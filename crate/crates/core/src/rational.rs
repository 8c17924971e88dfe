//! Exact rationals.
//!
//! [`Rational`] is `num_rational::BigRational`, which keeps every value in
//! canonical reduced form with a positive denominator. This module adds the
//! text forms used on the wire: `"num/den"` fractions, integers and
//! terminating decimals such as `"-0.0073"` (read exactly as `-73/10000`).

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

pub type Rational = num_rational::BigRational;

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn frac(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// `2^exp` for any integer exponent.
pub fn pow2(exp: i32) -> Rational {
    let base = BigInt::one() << exp.unsigned_abs();
    if exp >= 0 {
        Rational::from_integer(base)
    } else {
        Rational::new(BigInt::one(), base)
    }
}

/// Parses `"p/q"`, `"n"` or a terminating decimal `"-12.0073"`.
pub fn parse(input: &str) -> Result<Rational> {
    let err = || Error::Parse {
        what: "rational",
        input: input.to_string(),
    };
    let s = input.trim().replace('\u{2212}', "-");
    if s.is_empty() {
        return Err(err());
    }
    if let Some((n, d)) = s.split_once('/') {
        let n: BigInt = n.trim().parse().map_err(|_| err())?;
        let d: BigInt = d.trim().parse().map_err(|_| err())?;
        if d.is_zero() {
            return Err(err());
        }
        return Ok(Rational::new(n, d));
    }
    let (negative, body) = match s.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, s.strip_prefix('+').unwrap_or(&s)),
    };
    let (whole, fraction) = body.split_once('.').unwrap_or((body, ""));
    if whole.is_empty() && fraction.is_empty() {
        return Err(err());
    }
    let all_digits = |t: &str| t.bytes().all(|b| b.is_ascii_digit());
    if !all_digits(whole) || !all_digits(fraction) {
        return Err(err());
    }
    let digits = format!("{whole}{fraction}");
    let numerator: BigInt = if digits.is_empty() {
        BigInt::zero()
    } else {
        digits.parse().map_err(|_| err())?
    };
    let denominator = num_traits::pow(BigInt::from(10), fraction.len());
    let value = Rational::new(numerator, denominator);
    Ok(if negative { -value } else { value })
}

/// Canonical wire form, always `"num/den"` (integers as `"n/1"`).
pub fn to_wire(r: &Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// Compact human form: `"n"` for integers, `"p/q"` otherwise.
pub fn to_short(r: &Rational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub fn to_f64(r: &Rational) -> f64 {
    match (r.numer().to_f64(), r.denom().to_f64()) {
        (Some(n), Some(d)) if n.is_finite() && d.is_finite() => n / d,
        _ => {
            // Very large parts: scale down by the bit-length difference.
            let shift = r.numer().bits() as i64 - r.denom().bits() as i64;
            let scaled = r / pow2(shift as i32);
            scaled.to_f64().unwrap_or(f64::NAN) * 2f64.powi(shift as i32)
        }
    }
}

/// Nearest dyadic rational `k / 2^bits` to `x` (finite `x` only).
pub fn dyadic_from_f64(x: f64, bits: u32) -> Rational {
    let scaled = (x * 2f64.powi(bits as i32)).round();
    let k = BigInt::from(scaled as i128);
    Rational::new(k, BigInt::one() << bits)
}

/// Least common multiple of the denominators.
pub fn common_denominator<'a>(values: impl IntoIterator<Item = &'a Rational>) -> BigInt {
    values.into_iter().fold(BigInt::one(), |acc, r| acc.lcm(r.denom()))
}

pub fn is_canonical(r: &Rational) -> bool {
    r.denom().is_positive() && r.numer().gcd(r.denom()).is_one()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn decimals_are_exact() {
        assert_eq!(parse("0.0073").unwrap(), frac(73, 10000));
        assert_eq!(parse("-1.5").unwrap(), frac(-3, 2));
        assert_eq!(parse("1.0166666666").unwrap(), frac(10166666666, 10000000000));
        assert_eq!(parse("36").unwrap(), int(36));
        assert_eq!(parse(".5").unwrap(), frac(1, 2));
        assert_eq!(parse("\u{2212}2").unwrap(), int(-2));
    }

    #[test]
    fn fractions_reduce() {
        let r = parse("6/-4").unwrap();
        assert_eq!(r, frac(-3, 2));
        assert!(is_canonical(&r));
        assert_eq!(to_wire(&r), "-3/2");
        assert_eq!(to_wire(&int(5)), "5/1");
    }

    #[test]
    fn rejects_garbage() {
        for bad in ["", "1/0", "1.2.3", "abc", "-", "1e5", "."] {
            assert!(parse(bad).is_err(), "{bad}");
        }
    }

    #[test]
    fn powers_of_two() {
        assert_eq!(pow2(3), int(8));
        assert_eq!(pow2(-2), frac(1, 4));
        assert_eq!(pow2(0), int(1));
    }

    #[test]
    fn f64_conversion_handles_huge_parts() {
        let tiny = pow2(-2000) * int(3);
        assert_eq!(to_f64(&tiny), 0.0);
        assert!((to_f64(&frac(1, 3)) - 1.0 / 3.0).abs() < 1e-15);
        assert_eq!(dyadic_from_f64(0.75, 4), frac(3, 4));
    }
}
