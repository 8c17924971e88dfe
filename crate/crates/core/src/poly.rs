//! Dense univariate polynomials with exact rational coefficients.
//!
//! Coefficients are stored in ascending degree: index `j` holds the
//! coefficient of `x^j`. This is also the only wire order.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::intpoly::{self, IntPoly};
use crate::rational::{self, Rational};
use crate::sign::{Sign, SignPattern};

#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Polynomial {
    coeffs: Vec<Rational>,
}

impl Polynomial {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn constant(c: Rational) -> Self {
        Self::new(vec![c])
    }

    /// `x`.
    pub fn x() -> Self {
        Self::monomial(Rational::one(), 1)
    }

    pub fn monomial(c: Rational, degree: usize) -> Self {
        let mut coeffs = vec![Rational::zero(); degree + 1];
        coeffs[degree] = c;
        Self::new(coeffs)
    }

    /// `x - root`.
    pub fn linear_factor(root: Rational) -> Self {
        Self::new(vec![-root, Rational::one()])
    }

    /// `prod (x - r)`.
    pub fn from_roots<'a>(roots: impl IntoIterator<Item = &'a Rational>) -> Self {
        roots.into_iter().fold(Self::constant(Rational::one()), |acc, r| {
            &acc * &Self::linear_factor(r.clone())
        })
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| rational::int(c)).collect())
    }

    /// Ascending coefficients given as `"p/q"` or exact decimal strings.
    pub fn parse_coeffs<S: AsRef<str>>(coeffs: &[S]) -> Result<Self> {
        coeffs
            .iter()
            .map(|s| rational::parse(s.as_ref()))
            .collect::<Result<Vec<_>>>()
            .map(Self::new)
    }

    /// Parses a JSON array of coefficient strings (numbers are accepted too).
    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Parse {
            what: "polynomial",
            input: format!("{text} ({e})"),
        })
    }

    /// Parses an expression such as `x^5 + 20x^4 + (3/5)x^3 - x + 1/2` or
    /// `x³ - 3*x + 2`. Coefficients are exact decimals or fractions; repeated
    /// powers are summed.
    pub fn parse_expr(text: &str) -> Result<Self> {
        let err = || Error::Parse {
            what: "polynomial",
            input: text.to_string(),
        };
        let mut s = insert_carets(text);
        s = s.replace("**", "^");
        if s.is_empty() {
            return Err(err());
        }
        let mut terms = Vec::new();
        let mut depth = 0i32;
        let mut start = 0;
        for (i, c) in s.char_indices() {
            match c {
                '(' => depth += 1,
                ')' => depth -= 1,
                '+' | '-' if depth == 0 && i > start && !s[..i].ends_with('^') => {
                    terms.push(&s[start..i]);
                    start = i;
                }
                _ => {}
            }
        }
        terms.push(&s[start..]);
        let mut coeffs: Vec<Rational> = Vec::new();
        for term in terms {
            let (negative, body) = match term.strip_prefix('-') {
                Some(rest) => (true, rest),
                None => (false, term.strip_prefix('+').unwrap_or(term)),
            };
            if body.is_empty() {
                return Err(err());
            }
            let (coef_text, power) = match body.split_once('x') {
                None => (body, 0usize),
                Some((c, rest)) => {
                    let power = if rest.is_empty() {
                        1
                    } else {
                        rest.strip_prefix('^').and_then(|e| e.parse().ok()).ok_or_else(err)?
                    };
                    (c.strip_suffix('*').unwrap_or(c), power)
                }
            };
            let coef_text = coef_text
                .strip_prefix('(')
                .and_then(|c| c.strip_suffix(')'))
                .unwrap_or(coef_text);
            let mut c = if coef_text.is_empty() {
                if power == 0 {
                    return Err(err());
                }
                Rational::one()
            } else {
                rational::parse(coef_text).map_err(|_| err())?
            };
            if negative {
                c = -c;
            }
            if coeffs.len() <= power {
                coeffs.resize(power + 1, Rational::zero());
            }
            coeffs[power] += c;
        }
        Ok(Self::new(coeffs))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("strings serialize")
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, j: usize) -> Rational {
        self.coeffs.get(j).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial (degree −1 by convention).
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    pub fn constant_term(&self) -> Rational {
        self.coeff(0)
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(j, c)| c * rational::int(j as i64))
                .collect(),
        )
    }

    pub fn nth_derivative(&self, k: usize) -> Self {
        (0..k).fold(self.clone(), |p, _| p.derivative())
    }

    /// `Q` with `Q' = self` and `Q(lower) = 0`.
    pub fn antiderivative_from(&self, lower: &Rational) -> Self {
        let mut coeffs = Vec::with_capacity(self.coeffs.len() + 1);
        coeffs.push(Rational::zero());
        coeffs.extend(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(j, c)| c / rational::int(j as i64 + 1)),
        );
        let q = Self::new(coeffs);
        let shift = q.evaluate(lower);
        q - Self::constant(shift)
    }

    /// Horner evaluation.
    pub fn evaluate(&self, x: &Rational) -> Rational {
        self.coeffs.iter().rev().fold(Rational::zero(), |acc, c| acc * x + c)
    }

    /// `p(-x)`.
    pub fn reflect(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(j, c)| if j % 2 == 1 { -c } else { c.clone() })
                .collect(),
        )
    }

    /// `(-1)^d p(-x)`: the Z2 image with the leading sign kept.
    pub fn mirror(&self) -> Self {
        match self.degree() {
            Some(d) if d % 2 == 1 => -self.reflect(),
            _ => self.reflect(),
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Divides by the leading coefficient.
    pub fn monic(&self) -> Self {
        match self.leading() {
            Some(lc) => self.scale(&lc.recip()),
            None => Self::zero(),
        }
    }

    pub fn add_constant(&self, c: &Rational) -> Self {
        self + &Self::constant(c.clone())
    }

    /// Signs of the coefficients, highest degree first, as a pattern.
    pub fn sign_pattern(&self) -> Result<SignPattern> {
        let d = self.degree().ok_or(Error::ZeroPolynomial)?;
        if d == 0 {
            return Err(Error::ConstantPolynomial);
        }
        if !self.coeffs[d].is_positive() {
            return Err(Error::NonPositiveLeading);
        }
        let mut signs = Vec::with_capacity(d + 1);
        for j in (0..=d).rev() {
            let c = &self.coeffs[j];
            if c.is_zero() {
                return Err(Error::ZeroCoefficient(j));
            }
            signs.push(if c.is_positive() { Sign::Plus } else { Sign::Minus });
        }
        SignPattern::new(signs)
    }

    pub(crate) fn to_int(&self) -> IntPoly {
        IntPoly::from_rationals(&self.coeffs)
    }

    pub(crate) fn from_int(p: &IntPoly) -> Self {
        Self::new(p.to_rationals())
    }

    /// Monic gcd via a primitive-part Euclidean remainder sequence.
    pub fn gcd(&self, other: &Self) -> Self {
        if self.is_zero() && other.is_zero() {
            return Self::zero();
        }
        Self::from_int(&intpoly::gcd(&self.to_int(), &other.to_int())).monic()
    }

    /// `gcd(p, p')` is constant. The zero polynomial is not square-free.
    pub fn is_square_free(&self) -> bool {
        match self.degree() {
            None => false,
            Some(0) => true,
            Some(_) => self.gcd(&self.derivative()).degree() == Some(0),
        }
    }

    /// Quotient and remainder of division by a nonzero polynomial.
    pub fn div_rem(&self, divisor: &Self) -> (Self, Self) {
        let dd = divisor.degree().expect("division by the zero polynomial");
        let lc = divisor.leading().expect("nonzero").clone();
        let mut rem = self.coeffs.clone();
        let Some(ds) = self.degree() else {
            return (Self::zero(), Self::zero());
        };
        if ds < dd {
            return (Self::zero(), self.clone());
        }
        let mut quot = vec![Rational::zero(); ds - dd + 1];
        for top in (dd..=ds).rev() {
            let q = &rem[top] / &lc;
            if q.is_zero() {
                continue;
            }
            for (j, c) in divisor.coeffs.iter().enumerate() {
                rem[top - dd + j] -= &q * c;
            }
            quot[top - dd] = q;
        }
        rem.truncate(dd);
        (Self::new(quot), Self::new(rem))
    }

    /// Float coefficients (for numeric hints only).
    pub fn to_f64(&self) -> Vec<f64> {
        self.coeffs.iter().map(rational::to_f64).collect()
    }

    /// Total bit length of all numerators and denominators.
    pub fn bit_size(&self) -> u64 {
        self.coeffs.iter().map(|c| c.numer().bits() + c.denom().bits()).sum()
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (j, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let negative = c.is_negative();
            let magnitude = c.abs();
            if first {
                if negative {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if negative { " - " } else { " + " })?;
            }
            first = false;
            let mag = rational::to_short(&magnitude);
            let show_coeff = j == 0 || !magnitude.is_one();
            if show_coeff {
                if magnitude.is_integer() || j == 0 {
                    f.write_str(&mag)?;
                } else {
                    write!(f, "({mag})")?;
                }
            }
            match j {
                0 => {}
                1 => f.write_str("x")?,
                _ => write!(f, "x^{j}")?,
            }
        }
        Ok(())
    }
}

impl Serialize for Polynomial {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_seq(self.coeffs.iter().map(rational::to_wire))
    }
}

#[derive(Deserialize)]
#[serde(untagged)]
enum CoeffRepr {
    Text(String),
    Int(i64),
}

impl<'de> Deserialize<'de> for Polynomial {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let raw = Vec::<CoeffRepr>::deserialize(deserializer)?;
        raw.into_iter()
            .map(|c| match c {
                CoeffRepr::Text(s) => rational::parse(&s),
                CoeffRepr::Int(n) => Ok(Rational::from_integer(BigInt::from(n))),
            })
            .collect::<Result<Vec<_>>>()
            .map(Polynomial::new)
            .map_err(serde::de::Error::custom)
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;

    fn add(self, rhs: &Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Polynomial::new((0..n).map(|j| self.coeff(j) + rhs.coeff(j)).collect())
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;

    fn sub(self, rhs: &Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Polynomial::new((0..n).map(|j| self.coeff(j) - rhs.coeff(j)).collect())
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;

    fn mul(self, rhs: &Polynomial) -> Polynomial {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Polynomial::new(out)
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;

    fn neg(self) -> Polynomial {
        Polynomial::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

macro_rules! forward_owned {
    ($tr:ident, $method:ident) => {
        impl $tr for Polynomial {
            type Output = Polynomial;

            fn $method(self, rhs: Polynomial) -> Polynomial {
                (&self).$method(&rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for Polynomial {
    type Output = Polynomial;

    fn neg(self) -> Polynomial {
        -&self
    }
}

fn superscript_digit(c: char) -> Option<u8> {
    match c {
        '\u{2070}' => Some(0),
        '\u{00B9}' => Some(1),
        '\u{00B2}' => Some(2),
        '\u{00B3}' => Some(3),
        '\u{2074}'..='\u{2079}' => Some(c as u32 as u8 - 0x70),
        _ => None,
    }
}

/// Rewrites superscript exponents as `^n`, dropping whitespace.
fn insert_carets(text: &str) -> String {
    let mut out = String::new();
    let mut in_sup = false;
    for c in text.chars().filter(|c| !c.is_whitespace()) {
        match superscript_digit(c) {
            Some(d) => {
                if !in_sup {
                    out.push('^');
                    in_sup = true;
                }
                out.push((b'0' + d) as char);
            }
            None => {
                in_sup = false;
                out.push(if c == '\u{2212}' { '-' } else { c });
            }
        }
    }
    out
}

impl std::str::FromStr for Polynomial {
    type Err = Error;

    /// A JSON coefficient array (ascending) or an expression.
    fn from_str(s: &str) -> Result<Self> {
        if s.trim_start().starts_with('[') {
            Self::from_json(s.trim())
        } else {
            Self::parse_expr(s)
        }
    }
}
