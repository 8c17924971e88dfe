//! The built-in corpus: explicit polynomials with the couples they are known
//! to realize, parametric constructions whose small/large parameters are
//! fixed by ladder search, and the catalog of nonrealizable couples for
//! degrees up to 5.

use num_traits::{One, Zero};

use crate::certificate::Certificate;
use crate::construct::{self, nested_ladder_search, st_family, Family};
use crate::error::{Error, Result};
use crate::exec::Exec;
use crate::poly::Polynomial;
use crate::rational::{self, frac, int, pow2, Rational};
use crate::roots::isolate_real_roots;
use crate::sign::{AdmissiblePair, Couple, Sap, SignPattern};

/// An explicit polynomial with the SAP it is claimed to realize.
#[derive(Clone, Debug)]
pub struct Transcribed {
    pub name: &'static str,
    /// Coefficients from the leading one down, as exact decimals.
    pub coeffs: &'static [&'static str],
    pub sap: &'static str,
}

macro_rules! t {
    ($name:expr, [$($c:expr),*], $sap:expr) => {
        Transcribed { name: $name, coeffs: &[$($c),*], sap: $sap }
    };
}

pub const TRANSCRIBED: &[Transcribed] = &[
    t!("d1", ["1", "1"], "(0,1)"),
    t!("d2-a", ["1", "3", "2"], "(0,2),(0,1)"),
    t!("d2-b", ["1", "2", "2"], "(0,0),(0,1)"),
    t!("d2-c", ["1", "1", "-2"], "(1,1),(0,1)"),
    t!("d3-a", ["1", "6", "11", "6"], "(0,3),(0,2),(0,1)"),
    t!("d3-b", ["1", "5", "8", "6"], "(0,1),(0,2),(0,1)"),
    t!("d3-c", ["1", "3", "13", "11"], "(0,1),(0,0),(0,1)"),
    t!("d3-d", ["1", "4", "1", "-6"], "(1,2),(0,2),(0,1)"),
    t!("d3-e", ["1", "3", "1", "-5"], "(1,0),(0,2),(0,1)"),
    t!("d3-f", ["1", "3", "4", "-8"], "(1,0),(0,0),(0,1)"),
    t!("d3-g", ["1", "1", "-10", "8"], "(2,1),(1,1),(0,1)"),
    t!("d3-h", ["1", "2", "-6", "8"], "(0,1),(1,1),(0,1)"),
    t!("d3-i", ["1", "1", "-4", "-4"], "(1,2),(1,1),(0,1)"),
    t!("d3-j", ["1", "1", "-0.5", "-1.5"], "(1,0),(1,1),(0,1)"),
    t!(
        "G",
        ["1", "2.40", "1.2999", "-0.50004", "-0.299950", "0.099990"],
        "(0,3),(1,3),(1,2),(0,2),(0,1)"
    ),
    t!(
        "H",
        ["1", "1.80", "-0.2301", "-1.48998", "-0.089917", "0.369963"],
        "(0,3),(1,3),(1,2),(1,1),(0,1)"
    ),
    t!(
        "K",
        ["1", "20", "0.6", "-5", "-1", "0.5"],
        "(2,1),(1,3),(1,2),(0,2),(0,1)"
    ),
    t!(
        "L",
        ["1", "1.80", "-0.2501", "-1.44998", "-0.269915", "0.384965"],
        "(2,1),(1,3),(1,2),(1,1),(0,1)"
    ),
    t!(
        "N",
        ["1", "2", "-60", "0.05", "1", "5"],
        "(2,1),(2,2),(2,1),(1,1),(0,1)"
    ),
    t!(
        "D",
        ["1", "0.01", "-1.9990", "0.059990", "0.99940005", "0.0000019999"],
        "(0,3),(2,2),(2,1),(1,1),(0,1)"
    ),
    t!(
        "Lambda",
        ["1", "0.2", "-6", "-0.05", "0.01", "0.5"],
        "(2,1),(2,2),(1,2),(1,1),(0,1)"
    ),
    t!(
        "Xi",
        ["1", "2.25", "1.0166666666", "-0.45", "0.025", "0.0015"],
        "(2,1),(2,2),(1,2),(0,2),(0,1)"
    ),
    t!(
        "Phi",
        ["1", "2.4", "0.481", "-0.8510", "0.08529", "0.01729"],
        "(0,3),(2,2),(1,2),(0,2),(0,1)"
    ),
    t!(
        "U",
        ["1", "1", "-9.01", "10.97", "-4.05", "-0.01"],
        "(1,2),(3,1),(2,1),(1,1),(0,1)"
    ),
    t!(
        "P-tilde",
        ["1", "20", "40", "5", "1", "0.5"],
        "(0,3),(0,2),(0,3),(0,2),(0,1)"
    ),
    t!(
        "P-star",
        ["1", "20", "40", "5", "1", "-0.5"],
        "(1,2),(0,2),(0,3),(0,2),(0,1)"
    ),
    t!(
        "Q-tilde",
        ["1", "100", "20", "0.5", "-1", "0.005"],
        "(2,1),(1,1),(0,3),(0,2),(0,1)"
    ),
    t!(
        "Q-star",
        ["1", "30", "20", "5", "-1", "-0.5"],
        "(1,2),(1,1),(0,3),(0,2),(0,1)"
    ),
    t!(
        "J-sharp",
        ["1", "9", "-0.8", "-0.0073", "96", "36"],
        "(0,3),(0,2),(1,2),(1,1),(0,1)"
    ),
    t!(
        "V-flat",
        ["1", "9", "-0.8", "-0.0073", "96", "-36"],
        "(1,2),(0,2),(1,2),(1,1),(0,1)"
    ),
    t!(
        "P-sharp",
        ["1", "0.2", "-6", "-0.05", "-0.1", "0.05"],
        "(2,1),(1,1),(1,2),(1,1),(0,1)"
    ),
    t!(
        "P-circ",
        ["1", "0.2", "-6", "-0.05", "-0.1", "-0.05"],
        "(1,2),(1,1),(1,2),(1,1),(0,1)"
    ),
    t!(
        "P-flat",
        ["1", "9", "3", "-0.73", "96", "36"],
        "(0,3),(0,2),(1,2),(0,2),(0,1)"
    ),
    t!(
        "T-flat",
        ["1", "20", "80", "-0.02", "1", "-0.5"],
        "(1,2),(0,2),(1,2),(0,2),(0,1)"
    ),
    t!(
        "S-flat",
        ["1", "9", "3", "-0.73", "-96", "36"],
        "(2,1),(1,1),(1,2),(0,2),(0,1)"
    ),
    t!(
        "U-flat",
        ["1", "20", "0.06", "-0.05", "-1", "-0.5"],
        "(1,2),(1,1),(1,2),(0,2),(0,1)"
    ),
    t!(
        "P-dagger",
        ["1", "0.2", "-6", "0.05", "-0.01", "-0.5"],
        "(1,2),(1,1),(2,1),(1,1),(0,1)"
    ),
    t!(
        "K-flat",
        ["1", "9", "-0.8", "0.0073", "-96", "36"],
        "(2,1),(1,1),(2,1),(1,1),(0,1)"
    ),
    t!(
        "J-flat",
        ["1", "9", "-0.8", "0.0073", "96", "36"],
        "(0,3),(0,2),(2,1),(1,1),(0,1)"
    ),
    t!(
        "K-sharp",
        ["1", "9", "-0.8", "0.0073", "96", "-36"],
        "(1,2),(0,2),(2,1),(1,1),(0,1)"
    ),
];

/// Builds a polynomial from coefficients given leading-first.
pub fn from_descending(coeffs: &[&str]) -> Result<Polynomial> {
    let mut c: Vec<&str> = coeffs.to_vec();
    c.reverse();
    Polynomial::parse_coeffs(&c)
}

impl Transcribed {
    pub fn poly(&self) -> Polynomial {
        from_descending(self.coeffs).expect("well-formed coefficients")
    }

    pub fn claimed_sap(&self) -> Sap {
        self.sap.parse().expect("well-formed SAP")
    }

    /// Verifies the claim; the pattern is read off the coefficients.
    pub fn certificate(&self) -> Result<Certificate> {
        let p = self.poly();
        let sp = p.sign_pattern()?;
        Certificate::new(p, sp, self.claimed_sap(), format!("transcribed:{}", self.name))
    }
}

/// Which ladder a parameter of a [`ParametricCase`] is scanned on.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Ladder {
    Small,
    Large,
}

type Builder = Box<dyn Fn(&[Rational]) -> Option<Polynomial> + Send + Sync>;

/// A construction with free small (or large) parameters and the couple it
/// is meant to realize.
pub struct ParametricCase {
    pub name: String,
    pub target: Couple,
    pub params: Vec<Ladder>,
    build: Builder,
}

impl std::fmt::Debug for ParametricCase {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("ParametricCase")
            .field("name", &self.name)
            .field("target", &self.target)
            .field("params", &self.params)
            .finish()
    }
}

impl ParametricCase {
    fn new(name: impl Into<String>, sp: &str, sap: &str, params: Vec<Ladder>, build: Builder) -> Self {
        let target = Couple::new(sp.parse().expect("pattern"), sap.parse().expect("SAP"));
        assert_eq!(crate::saps::sp_from_sap(&target.sap), target.sp, "pattern/SAP mismatch");
        Self {
            name: name.into(),
            target,
            params,
            build,
        }
    }

    /// The construction at explicit parameter values (outermost first).
    pub fn build(&self, params: &[Rational]) -> Option<Polynomial> {
        (self.build)(params)
    }

    /// First verifying parameter tuple on the given ladders.
    pub fn instantiate(&self, small: &[Rational], large: &[Rational], exec: Exec) -> Result<Certificate> {
        let ladders: Vec<Vec<Rational>> = self
            .params
            .iter()
            .map(|l| match l {
                Ladder::Small => small.to_vec(),
                Ladder::Large => large.to_vec(),
            })
            .collect();
        let sp = self.target.sp.clone();
        let sap = self.target.sap.clone();
        let hit = nested_ladder_search(&ladders, exec, |t| {
            let p = self.build(t)?.monic();
            if !crate::roots::realizes_sap(&p.to_int(), &sap) || p.sign_pattern().ok()? != sp {
                return None;
            }
            Certificate::new(p, sp.clone(), sap.clone(), "").ok()
        });
        let (tuple, cert) = hit.ok_or_else(|| Error::InstantiationFailure(self.name.clone()))?;
        let values: Vec<String> = tuple.iter().map(rational::to_short).collect();
        Certificate::new(
            cert.poly().clone(),
            self.target.sp.clone(),
            self.target.sap.clone(),
            format!("transcribed+searched:{}[{}]", self.name, values.join(",")),
        )
    }
}

fn p(coeffs: &[i64]) -> Polynomial {
    Polynomial::from_ints(coeffs)
}

fn q(coeffs_desc: &[&str]) -> Polynomial {
    from_descending(coeffs_desc).expect("coefficients")
}

fn cst(c: &Rational) -> Polynomial {
    Polynomial::constant(c.clone())
}

/// `(x + 1)^2 - ε` style quadratic `(x - r)^2 + s`.
fn shifted_square(r: Rational, s: Rational) -> Polynomial {
    let lin = Polynomial::linear_factor(r);
    &(&lin * &lin) + &cst(&s)
}

fn boxed<F>(f: F) -> Builder
where
    F: Fn(&[Rational]) -> Option<Polynomial> + Send + Sync + 'static,
{
    Box::new(f)
}

/// Quartic constructions, one per listed case.
fn quartic_cases() -> Vec<ParametricCase> {
    use Ladder::*;
    let half = frac(1, 2);
    let quarter = frac(1, 4);
    vec![
        ParametricCase::new(
            "quartic-1",
            "+++++",
            "(0,2),(0,1),(0,2),(0,1)",
            vec![Small, Small],
            boxed(|t| {
                let p2 = shifted_square(int(-1), -t[0].clone());
                let p1 = p2.antiderivative_from(&int(-2));
                Some(p1.antiderivative_from(&(int(-2) - &t[1])))
            }),
        ),
        ParametricCase::new(
            "quartic-2",
            "+++++",
            "(0,2),(0,1),(0,0),(0,1)",
            vec![Small],
            boxed(|t| {
                let quad = p(&[2, 3, 1]);
                Some(&quad * &(&p(&[1]) + &Polynomial::monomial(t[0].clone(), 2)))
            }),
        ),
        ParametricCase::new(
            "quartic-3",
            "+++-+",
            "(2,0),(1,2),(0,2),(0,1)",
            vec![Small, Small],
            boxed(move |t| {
                let p1 = &Polynomial::linear_factor(quarter.clone()) * &shifted_square(int(-1), -t[0].clone());
                Some(&p1.antiderivative_from(&quarter) - &cst(&t[1]))
            }),
        ),
        ParametricCase::new(
            "quartic-4",
            "+++-+",
            "(2,0),(1,0),(0,2),(0,1)",
            vec![Small, Small],
            boxed(|t| {
                let p2 = shifted_square(int(-1), -t[0].clone());
                let p1 = p2.antiderivative_from(&int(1));
                Some(&p1.antiderivative_from(&int(1)) - &cst(&t[1]))
            }),
        ),
        ParametricCase::new(
            "quartic-5",
            "+++-+",
            "(2,0),(1,0),(0,0),(0,1)",
            vec![Small, Small],
            boxed(|t| {
                let (e, h) = (&t[0], &t[1]);
                Some(Polynomial::new(vec![e.clone(), int(-1), h.clone(), h * h, int(1)]))
            }),
        ),
        ParametricCase::new(
            "quartic-6",
            "+++-+",
            "(0,2),(1,2),(0,2),(0,1)",
            vec![Large],
            boxed(move |t| {
                let p1 = &(&Polynomial::linear_factor(half.clone()) * &p(&[1, 1])) * &p(&[3, 1]);
                Some(p1.antiderivative_from(&Rational::zero()).add_constant(&t[0]))
            }),
        ),
        ParametricCase::new(
            "quartic-7",
            "++-++",
            "(0,2),(2,1),(1,1),(0,1)",
            vec![Small, Small],
            boxed(|t| {
                let p1 = &p(&[3, 1]) * &shifted_square(int(1), -t[0].clone());
                Some(p1.antiderivative_from(&(int(-3) - &t[1])))
            }),
        ),
        ParametricCase::new(
            "quartic-8",
            "++-++",
            "(0,2),(0,1),(1,1),(0,1)",
            vec![Small, Small],
            boxed(move |t| {
                let p1 = &p(&[1, 1]) * &shifted_square(frac(1, 4), t[0].clone());
                Some(&p1.antiderivative_from(&int(-1)) - &cst(&t[1]))
            }),
        ),
        ParametricCase::new(
            "quartic-9",
            "++--+",
            "(2,0),(1,2),(1,1),(0,1)",
            vec![Small, Small],
            boxed(|t| {
                let r = frac(3, 2);
                let p1 = &Polynomial::linear_factor(r.clone()) * &shifted_square(int(-1), -t[0].clone());
                Some(&p1.antiderivative_from(&r) - &cst(&t[1]))
            }),
        ),
        ParametricCase::new(
            "quartic-10",
            "++--+",
            "(2,0),(1,0),(1,1),(0,1)",
            vec![Small, Small],
            boxed(|t| {
                let p1 = &p(&[-1, 1]) * &shifted_square(int(-1), t[0].clone());
                Some(&p1.antiderivative_from(&int(1)) - &cst(&t[1]))
            }),
        ),
        ParametricCase::new(
            "quartic-11",
            "++--+",
            "(0,2),(1,2),(1,1),(0,1)",
            vec![Small, Small],
            boxed(|t| {
                let p1 = &(&p(&[-1, 1]) * &p(&[2, 1])) * &Polynomial::linear_factor(-t[0].clone());
                Some(p1.antiderivative_from(&(int(-2) - &t[1])))
            }),
        ),
    ]
}

/// A real root of `p` near `approx`, to within `2^-96`.
fn root_near(p: &Polynomial, approx: f64) -> Rational {
    let roots = isolate_real_roots(p, &pow2(-96)).expect("nonconstant");
    roots
        .into_iter()
        .map(|(lo, hi)| (&lo + &hi) / int(2))
        .min_by(|a, b| {
            let da = (rational::to_f64(a) - approx).abs();
            let db = (rational::to_f64(b) - approx).abs();
            da.total_cmp(&db)
        })
        .expect("a real root")
}

/// Quintics with `(pos_2, neg_2)` equal to `(1,0)` or `(0,1)`: integrate
/// `x^4/4 ∓ x ± 1/10` from one of its roots, shift by `±ε`, and add
/// `θ1 x^4 + θ2 x^3` to steer the two top derivative levels.
fn third_level_cases() -> Vec<ParametricCase> {
    use crate::sign::Sign::{self, Minus, Plus};
    // (name, sign of x in P', constant of P', root estimate, shift sign, head)
    let seeds: [(&str, i64, Rational, f64, Sign, &str); 8] = [
        ("lambda1", -1, frac(1, 10), 0.10, Plus, "(3,0),(2,0),(1,0)"),
        ("lambda2", -1, frac(1, 10), 1.55, Minus, "(2,1),(2,0),(1,0)"),
        ("mu2", -1, frac(-1, 10), 1.6, Minus, "(2,1),(1,1),(1,0)"),
        ("mu1", -1, frac(-1, 10), -0.099, Plus, "(1,2),(1,1),(1,0)"),
        ("nu1", 1, frac(-1, 10), -1.6, Plus, "(1,2),(1,1),(0,1)"),
        ("nu2", 1, frac(-1, 10), 0.09, Minus, "(2,1),(1,1),(0,1)"),
        ("rho1", 1, frac(1, 10), -1.5, Plus, "(1,2),(0,2),(0,1)"),
        ("rho2", 1, frac(1, 10), -0.1, Minus, "(0,3),(0,2),(0,1)"),
    ];
    // θ2 > 0 below 8θ1^2 keeps both roots of P''' negative; θ2 < 0 splits
    // them; θ2 above 8θ1^2 removes them. θ2 is scanned as a multiple of θ1^2.
    let tails: [(&str, Rational, &str); 3] = [
        ("(0,2),(0,1)", frac(1, 1), "a"),
        ("(1,1),(0,1)", frac(-1, 1), "b"),
        ("(0,0),(0,1)", frac(16, 1), "c"),
    ];
    let mut out = Vec::new();
    for (name, lin, c0, approx, shift, head) in seeds {
        let p1 = Polynomial::new(vec![c0.clone(), int(lin), int(0), int(0), frac(1, 4)]);
        let lambda = root_near(&p1, approx);
        let base = p1.antiderivative_from(&lambda);
        for (tail, ratio, tag) in &tails {
            let sap = format!("{head},{tail}");
            let sap_parsed: Sap = sap.parse().expect("SAP");
            let sp = crate::saps::sp_from_sap(&sap_parsed).to_string();
            let base = base.clone();
            let ratio = ratio.clone();
            out.push(ParametricCase::new(
                format!("third-level-{name}-{tag}"),
                &sp,
                &sap,
                vec![Ladder::Small, Ladder::Small],
                boxed(move |t| {
                    let eps = &t[0];
                    let th1 = &t[1] * eps;
                    let th2 = if ratio < Rational::zero() {
                        -(&th1 * &th1)
                    } else {
                        &th1 * &th1 * &ratio
                    };
                    let shifted = match shift {
                        Plus => base.add_constant(eps),
                        Minus => base.add_constant(&-eps.clone()),
                    };
                    Some(&(&shifted + &Polynomial::monomial(th1, 4)) + &Polynomial::monomial(th2, 3))
                }),
            ));
        }
    }
    out
}

/// Deformations of the families `S` and `T`.
fn family_cases() -> Vec<ParametricCase> {
    use Ladder::Small;
    let s = |a: Rational| st_family(&a, Family::S).expect("valid parameter");
    let s_small = s(frac(1, 10));
    let s_small2 = s_small.clone();
    let mut out = vec![
        ParametricCase::new(
            "S1[a=1/10]",
            "++++-+",
            "(0,3),(1,3),(0,3),(0,2),(0,1)",
            vec![Small],
            boxed(move |e| Some(&s_small + &Polynomial::new(vec![int(0), e[0].clone(), e[0].clone()]))),
        ),
        ParametricCase::new(
            "S3[a=1/10]",
            "++++-+",
            "(2,1),(1,3),(0,3),(0,2),(0,1)",
            vec![Small, Small],
            boxed(move |e| Some(&s_small2 - &Polynomial::new(vec![e[0].clone(), e[1].clone() * &e[0]]))),
        ),
        ParametricCase::new(
            "S_eps[a=1]",
            "++--++",
            "(0,3),(2,2),(1,2),(1,1),(0,1)",
            vec![Small],
            boxed(|e| {
                let eps = &e[0];
                let one = Rational::one();
                let cubic = Polynomial::from_roots(&[-(&one - eps), -one.clone(), -(&one + eps)]);
                Some(&cubic * &shifted_square(one, eps.clone()))
            }),
        ),
    ];
    // T_ε ± η for three values of a, one per tail
    for (a, tail) in [
        (frac(8, 5), "(2,2),(2,1),(1,1),(0,1)"),
        (int(6), "(2,2),(1,2),(0,2),(0,1)"),
        (int(3), "(2,2),(1,2),(1,1),(0,1)"),
    ] {
        let tag = rational::to_short(&a);
        for (head, sign) in [("(3,0)", -1i64), ("(1,2)", 1)] {
            let sap = format!("{head},{tail}");
            let sp = crate::saps::sp_from_sap(&sap.parse().expect("SAP")).to_string();
            let a = a.clone();
            out.push(ParametricCase::new(
                format!("T_eps{}eta[a={tag}]", if sign > 0 { "+" } else { "-" }),
                &sp,
                &sap,
                vec![Small, Small],
                boxed(move |e| {
                    let (eps, eta) = (&e[0], &e[1] * &e[0]);
                    let one = Rational::one();
                    let triple = Polynomial::from_roots(&[one.clone(), &one + eps, &one - eps]);
                    let double = Polynomial::from_roots(&[-a.clone(), -a.clone()]);
                    Some((&triple * &double).add_constant(&(eta * int(sign))))
                }),
            ));
        }
    }
    out
}

/// `W ± εx^3` for the two bases with a vanishing cubic coefficient.
fn w_cases() -> Vec<ParametricCase> {
    let w_flat = q(&["1", "4.4", "0", "-19.295", "13.22", "-1.1295"]);
    let w_sharp = q(&["1", "4.6", "0", "-17.495", "8.74", "1.0485"]);
    let mut out = Vec::new();
    for (name, base, head) in [("W-flat", w_flat, "(3,0),(2,0)"), ("W-sharp", w_sharp, "(2,1),(2,0)")] {
        for (sign, tail) in [(-1i64, "(1,2),(1,1),(0,1)"), (1, "(1,2),(0,2),(0,1)")] {
            let sap = format!("{head},{tail}");
            let sp = crate::saps::sp_from_sap(&sap.parse().expect("SAP")).to_string();
            let base = base.clone();
            out.push(ParametricCase::new(
                format!("{name}{}eps*x^3", if sign > 0 { "+" } else { "-" }),
                &sp,
                &sap,
                vec![Ladder::Small],
                boxed(move |e| Some(&base + &Polynomial::monomial(&e[0] * int(sign), 3))),
            ));
        }
    }
    out
}

/// Every parametric construction of the corpus.
pub fn parametric_cases() -> Vec<ParametricCase> {
    let mut v = quartic_cases();
    v.extend(third_level_cases());
    v.extend(family_cases());
    v.extend(w_cases());
    v
}

/// Transcribed certificates followed by instantiated parametric ones, on
/// the default ladders.
pub fn builtin_certificates(exec: Exec) -> Result<Vec<Certificate>> {
    let small = construct::small_ladder(construct::DEFAULT_K_MAX);
    let large = construct::large_ladder(construct::DEFAULT_K_MAX);
    let mut out: Vec<Certificate> = TRANSCRIBED
        .iter()
        .map(Transcribed::certificate)
        .collect::<Result<_>>()?;
    for case in parametric_cases() {
        out.push(case.instantiate(&small, &large, exec)?);
    }
    Ok(out)
}

fn couple(sp: &str, sap: &str) -> Couple {
    Couple::new(sp.parse().expect("pattern"), sap.parse().expect("SAP"))
}

/// Canonical nonrealizable couples of degree `d`, for `1 <= d <= 5`.
pub fn nonrealizable_catalog(d: usize) -> Result<Vec<Couple>> {
    match d {
        1..=3 => Ok(Vec::new()),
        4 => Ok(vec![couple("++-++", "(2,0),(2,1),(1,1),(0,1)")]),
        5 => Ok(vec![
            couple("++-+++", "(2,1),(2,0),(2,1),(1,1),(0,1)"),
            couple("++-+++", "(0,1),(2,0),(2,1),(1,1),(0,1)"),
            couple("++-++-", "(3,0),(2,0),(2,1),(1,1),(0,1)"),
            couple("++-++-", "(1,0),(2,0),(2,1),(1,1),(0,1)"),
            couple("++-+--", "(3,0),(3,1),(2,1),(1,1),(0,1)"),
        ]),
        _ => Err(Error::OutOfRange(d)),
    }
}

/// Nonrealizable (pattern, pair) couples behind the catalog.
pub fn couple_exceptions() -> Vec<(SignPattern, AdmissiblePair)> {
    [
        ("++-++", (2, 0)),
        ("+---+", (0, 2)),
        ("++-+--", (3, 0)),
        ("+----+", (0, 3)),
    ]
    .into_iter()
    .map(|(sp, (p, n))| (sp.parse().expect("pattern"), AdmissiblePair::new(p, n)))
    .collect()
}

/// Human-readable reason attached to a catalogued couple.
pub fn nonrealizable_reason(c: &Couple) -> Option<String> {
    let d = c.degree();
    if !nonrealizable_catalog(d).ok()?.contains(c) {
        return None;
    }
    let pairs = c.sap.pairs();
    // the exception sits at the level whose truncated pattern matches
    for (sp, ap) in couple_exceptions() {
        let k = d - sp.degree();
        if k < pairs.len() && pairs[k] == ap && c.sp.prefix(sp.degree() + 1) == sp {
            return Some(format!(
                "nonrealizable couple (SP, AP) ({}, {ap}) at derivative {k}",
                sp_paren(&sp)
            ));
        }
    }
    Some("nonrealizable".to_string())
}

fn sp_paren(sp: &SignPattern) -> String {
    let chars: Vec<String> = sp.signs().iter().map(|s| s.as_char().to_string()).collect();
    format!("({})", chars.join(","))
}
