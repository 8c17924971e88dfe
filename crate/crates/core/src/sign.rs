//! Domain types for sign patterns and sequences of admissible pairs.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Sign of a nonzero real. `Plus < Minus`, so patterns sort with `+` first.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn flip(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }

    /// `(-1)^n`.
    pub fn parity(n: usize) -> Sign {
        if n.is_multiple_of(2) {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }

    pub fn as_char(self) -> char {
        match self {
            Sign::Plus => '+',
            Sign::Minus => '-',
        }
    }

    fn times(self, other: Sign) -> Sign {
        if self == other {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }
}

/// Signs of `(1, a_{d-1}, ..., a_0)`: highest degree first, always starting
/// with `+`, length `d + 1 >= 2`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SignPattern(Vec<Sign>);

impl SignPattern {
    pub fn new(signs: Vec<Sign>) -> Result<Self> {
        if signs.len() < 2 {
            return Err(Error::InvalidPattern(format!("length {} is below 2", signs.len())));
        }
        if signs[0] != Sign::Plus {
            return Err(Error::InvalidPattern("first sign must be +".into()));
        }
        Ok(Self(signs))
    }

    pub fn all_plus(d: usize) -> Self {
        assert!(d >= 1);
        Self(vec![Sign::Plus; d + 1])
    }

    /// Every pattern of length `d + 1` (first sign `+`), in increasing order.
    pub fn all(d: usize) -> Vec<SignPattern> {
        assert!(d >= 1);
        (0u64..1 << d)
            .map(|bits| {
                let mut signs = vec![Sign::Plus];
                signs.extend(
                    (0..d)
                        .rev()
                        .map(|i| if bits >> i & 1 == 1 { Sign::Minus } else { Sign::Plus }),
                );
                SignPattern(signs)
            })
            .collect()
    }

    pub fn signs(&self) -> &[Sign] {
        &self.0
    }

    /// Degree `d` of polynomials with this pattern.
    pub fn degree(&self) -> usize {
        self.0.len() - 1
    }

    pub fn last(&self) -> Sign {
        *self.0.last().expect("nonempty")
    }

    /// Pattern with the last sign removed; `None` at length 2.
    pub fn truncated(&self) -> Option<SignPattern> {
        (self.0.len() > 2).then(|| SignPattern(self.0[..self.0.len() - 1].to_vec()))
    }

    pub fn prefix(&self, len: usize) -> SignPattern {
        assert!((2..=self.0.len()).contains(&len));
        SignPattern(self.0[..len].to_vec())
    }

    pub fn appended(&self, sign: Sign) -> SignPattern {
        let mut signs = self.0.clone();
        signs.push(sign);
        SignPattern(signs)
    }

    /// Pattern of `(-1)^d P(-x)`: the entry for `x^{d-i}` picks up `(-1)^i`.
    pub fn mirror(&self) -> SignPattern {
        SignPattern(
            self.0
                .iter()
                .enumerate()
                .map(|(i, s)| s.times(Sign::parity(i)))
                .collect(),
        )
    }

    /// Canonical side of the Z2-action: `sgn(a_{d-1}) = +`.
    pub fn is_canonical(&self) -> bool {
        self.0[1] == Sign::Plus
    }
}

impl fmt::Display for SignPattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.iter().try_for_each(|s| write!(f, "{}", s.as_char()))
    }
}

impl FromStr for SignPattern {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let signs = s
            .trim()
            .chars()
            .filter(|c| !matches!(c, '(' | ')' | ',' | ' '))
            .map(|c| match c {
                '+' => Ok(Sign::Plus),
                '-' | '\u{2212}' => Ok(Sign::Minus),
                other => Err(Error::InvalidPattern(format!("unexpected {other:?} in {s:?}"))),
            })
            .collect::<Result<Vec<_>>>()?;
        SignPattern::new(signs)
    }
}

impl Serialize for SignPattern {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for SignPattern {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Counts of sign changes `c` and sign preservations `p`; `c + p = d`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct DescartesPair {
    pub c: usize,
    pub p: usize,
}

/// Numbers of positive and negative roots.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(into = "[usize; 2]", from = "[usize; 2]")]
pub struct AdmissiblePair {
    pub pos: usize,
    pub neg: usize,
}

impl AdmissiblePair {
    pub const fn new(pos: usize, neg: usize) -> Self {
        Self { pos, neg }
    }

    pub fn total(self) -> usize {
        self.pos + self.neg
    }

    pub fn swapped(self) -> Self {
        Self::new(self.neg, self.pos)
    }
}

impl From<AdmissiblePair> for [usize; 2] {
    fn from(p: AdmissiblePair) -> Self {
        [p.pos, p.neg]
    }
}

impl From<[usize; 2]> for AdmissiblePair {
    fn from([pos, neg]: [usize; 2]) -> Self {
        Self { pos, neg }
    }
}

impl fmt::Display for AdmissiblePair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.pos, self.neg)
    }
}

/// One admissible pair per derivative order `k = 0 .. d-1`.
///
/// The type only guarantees length `>= 1`; membership in
/// [`crate::enumerate_saps`] of its pattern is checked by [`Sap::validate`].
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<AdmissiblePair>", into = "Vec<AdmissiblePair>")]
pub struct Sap(Vec<AdmissiblePair>);

impl Sap {
    pub fn new(pairs: Vec<AdmissiblePair>) -> Result<Self> {
        if pairs.is_empty() {
            return Err(Error::InvalidSap("empty sequence".into()));
        }
        Ok(Self(pairs))
    }

    pub fn from_pairs(pairs: &[(usize, usize)]) -> Result<Self> {
        Self::new(pairs.iter().map(|&(p, n)| AdmissiblePair::new(p, n)).collect())
    }

    pub fn pairs(&self) -> &[AdmissiblePair] {
        &self.0
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    pub fn head(&self) -> AdmissiblePair {
        self.0[0]
    }

    /// The SAP of the derivative: pairs `1 .. d-1`.
    pub fn tail(&self) -> Option<Sap> {
        (self.0.len() > 1).then(|| Sap(self.0[1..].to_vec()))
    }

    pub fn prepended(&self, head: AdmissiblePair) -> Sap {
        let mut pairs = Vec::with_capacity(self.0.len() + 1);
        pairs.push(head);
        pairs.extend_from_slice(&self.0);
        Sap(pairs)
    }

    pub fn with_head(&self, head: AdmissiblePair) -> Sap {
        let mut pairs = self.0.clone();
        pairs[0] = head;
        Sap(pairs)
    }

    /// Checks every SAP condition against `sp`.
    pub fn validate(&self, sp: &SignPattern) -> Result<()> {
        if self.degree() != sp.degree() {
            return Err(Error::InvalidSap(format!(
                "{self} has {} pairs but {sp} has degree {}",
                self.degree(),
                sp.degree()
            )));
        }
        let truncs = crate::saps::truncations(sp);
        for (k, (pair, sigma)) in self.0.iter().zip(&truncs).enumerate() {
            if !crate::saps::is_admissible(*pair, sigma) {
                return Err(Error::InvalidSap(format!(
                    "pair {pair} at k={k} is not admissible for {sigma}"
                )));
            }
        }
        for (k, w) in self.0.windows(2).enumerate() {
            if !crate::saps::rolle_compatible(w[0], w[1]) {
                return Err(Error::InvalidSap(format!(
                    "pairs {} -> {} at k={k} violate Rolle's conditions",
                    w[0], w[1]
                )));
            }
        }
        Ok(())
    }
}

impl fmt::Display for Sap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

impl FromStr for Sap {
    type Err = Error;

    /// Accepts `"(2,0),(2,1),(1,1),(0,1)"`, optionally wrapped in an outer
    /// pair of parentheses or given as JSON `[[2,0],[2,1],...]`.
    fn from_str(s: &str) -> Result<Self> {
        let err = || Error::Parse {
            what: "SAP",
            input: s.to_string(),
        };
        let numbers = s
            .split(|c: char| !c.is_ascii_digit())
            .filter(|t| !t.is_empty())
            .map(|t| t.parse::<usize>().map_err(|_| err()))
            .collect::<Result<Vec<_>>>()?;
        if numbers.is_empty() || numbers.len() % 2 != 0 {
            return Err(err());
        }
        if s.chars().any(|c| !(c.is_ascii_digit() || "()[], \t\n".contains(c))) {
            return Err(err());
        }
        Sap::new(numbers.chunks(2).map(|c| AdmissiblePair::new(c[0], c[1])).collect())
    }
}

impl TryFrom<Vec<AdmissiblePair>> for Sap {
    type Error = Error;

    fn try_from(pairs: Vec<AdmissiblePair>) -> Result<Self> {
        Sap::new(pairs)
    }
}

impl From<Sap> for Vec<AdmissiblePair> {
    fn from(sap: Sap) -> Self {
        sap.0
    }
}

/// A (sign pattern, SAP) couple.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Couple {
    pub sp: SignPattern,
    pub sap: Sap,
}

impl Couple {
    pub fn new(sp: SignPattern, sap: Sap) -> Self {
        Self { sp, sap }
    }

    pub fn mirror(&self) -> Couple {
        Couple::new(self.sp.mirror(), crate::saps::z2_mirror(&self.sap))
    }

    pub fn degree(&self) -> usize {
        self.sp.degree()
    }
}

impl fmt::Display for Couple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.sp, self.sap)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pattern_text_round_trip() {
        let sp: SignPattern = "++-++".parse().unwrap();
        assert_eq!(sp.to_string(), "++-++");
        assert_eq!(sp.degree(), 4);
        assert_eq!("(+,+,\u{2212},+)".parse::<SignPattern>().unwrap().to_string(), "++-+");
        assert!("-+".parse::<SignPattern>().is_err());
        assert!("+".parse::<SignPattern>().is_err());
        assert!("+x".parse::<SignPattern>().is_err());
    }

    #[test]
    fn sap_text_round_trip() {
        let sap: Sap = "(2,0),(2,1),(1,1),(0,1)".parse().unwrap();
        assert_eq!(sap.to_string(), "(2,0),(2,1),(1,1),(0,1)");
        let json: Sap = "[[2,0],[2,1]]".parse().unwrap();
        assert_eq!(json.degree(), 2);
        assert!("(1,2),(3)".parse::<Sap>().is_err());
        assert!("".parse::<Sap>().is_err());
        assert!("(a,b)".parse::<Sap>().is_err());
    }

    #[test]
    fn serde_forms() {
        let sap: Sap = "(0,2),(0,1)".parse().unwrap();
        assert_eq!(serde_json::to_string(&sap).unwrap(), "[[0,2],[0,1]]");
        let sp: SignPattern = "++-".parse().unwrap();
        assert_eq!(serde_json::to_string(&sp).unwrap(), "\"++-\"");
    }

    #[test]
    fn mirror_pattern_flips_odd_positions() {
        let sp: SignPattern = "++-++".parse().unwrap();
        assert_eq!(sp.mirror().to_string(), "+---+");
        assert_eq!(sp.mirror().mirror(), sp);
    }

    #[test]
    fn all_patterns_are_sorted_and_complete() {
        let all = SignPattern::all(3);
        assert_eq!(all.len(), 8);
        assert_eq!(all[0].to_string(), "++++");
        assert_eq!(all[7].to_string(), "+---");
        assert!(all.windows(2).all(|w| w[0] < w[1]));
    }
}
