//! Bounded-height searches for squares among Heron-angle trigonometric
//! values and for rational points on two congruent-number-type curves.
//!
//! The searches are consistency checks at finite height, not proofs.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use super::HeronAngle;
use crate::exactnum::{int, rational_sqrt, serde_rational, Rational};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum LemmaKind {
    /// `sin a = l^2` over Heron angles `0 <= a < pi`.
    SinSquare,
    /// `tan a = l^2` over Heron angles `0 <= a < pi/2`.
    TanSquare,
    /// `y^2 = x (1 - x^2)`.
    Curve1,
    /// `y^2 = 2x (1 - x^2)`.
    Curve2,
}

impl LemmaKind {
    pub const ALL: [LemmaKind; 4] = [
        LemmaKind::SinSquare,
        LemmaKind::TanSquare,
        LemmaKind::Curve1,
        LemmaKind::Curve2,
    ];

    pub fn name(self) -> &'static str {
        match self {
            LemmaKind::SinSquare => "sin-square",
            LemmaKind::TanSquare => "tan-square",
            LemmaKind::Curve1 => "curve1",
            LemmaKind::Curve2 => "curve2",
        }
    }
}

/// For the angle searches `x` is the generator and `y` the rational square
/// root found; for the curves `(x, y)` is the rational point.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct LemmaFinding {
    #[serde(with = "serde_rational")]
    pub x: Rational,
    #[serde(with = "serde_rational")]
    pub y: Rational,
}

impl LemmaFinding {
    fn new(x: Rational, y: Rational) -> Self {
        LemmaFinding { x, y }
    }
}

/// The solution sets expected from the classical results: angles `0` and
/// `pi/2` for the sine, `0` for the tangent, and the three points on the
/// x-axis for either curve.
pub fn trivial_solutions(kind: LemmaKind) -> Vec<LemmaFinding> {
    let zero = Rational::zero;
    match kind {
        LemmaKind::SinSquare => vec![LemmaFinding::new(zero(), zero()), LemmaFinding::new(int(1), int(1))],
        LemmaKind::TanSquare => vec![LemmaFinding::new(zero(), zero())],
        LemmaKind::Curve1 | LemmaKind::Curve2 => vec![
            LemmaFinding::new(int(-1), zero()),
            LemmaFinding::new(zero(), zero()),
            LemmaFinding::new(int(1), zero()),
        ],
    }
}

/// Rationals `p/q` in lowest terms with `1 <= q <= height` and
/// `|p| <= height`, restricted by `keep`.
fn bounded_rationals(height: u64, keep: impl Fn(i64, i64) -> bool) -> impl Iterator<Item = Rational> {
    let h = height as i64;
    (1..=h)
        .flat_map(move |q| (-h..=h).map(move |p| (p, q)))
        .filter(move |&(p, q)| p.gcd(&q) == 1 && keep(p, q))
        .map(|(p, q)| Rational::new(BigInt::from(p), BigInt::from(q)))
}

/// Rational points on `y^2 = scale * x * (1 - x^2)` with `x` of bounded height.
fn curve_points(scale: i64, height: u64) -> Vec<LemmaFinding> {
    let one = Rational::one();
    let scale = int(scale);
    bounded_rationals(height, |_, _| true)
        .flat_map(|x| {
            let rhs = &scale * &x * (&one - &x * &x);
            match rational_sqrt(&rhs) {
                Some(y) if y.is_positive() => {
                    vec![LemmaFinding::new(x.clone(), -&y), LemmaFinding::new(x, y)]
                }
                Some(y) => vec![LemmaFinding::new(x, y)],
                None => vec![],
            }
        })
        .collect()
}

/// Every solution found with generator (or x) of height at most `height`,
/// in ascending order of `x` then `y`.
pub fn lemma_scan(kind: LemmaKind, height: u64) -> Vec<LemmaFinding> {
    let height = height.max(1);
    let mut found: Vec<LemmaFinding> = match kind {
        LemmaKind::SinSquare => bounded_rationals(height, |p, _| p >= 0)
            .filter_map(|m| {
                let a = HeronAngle::from_generator(&m);
                rational_sqrt(a.sin()).map(|l| LemmaFinding::new(m, l))
            })
            .collect(),
        LemmaKind::TanSquare => bounded_rationals(height, |p, q| p >= 0 && p < q)
            .filter_map(|m| {
                let tan = HeronAngle::from_generator(&m).tan().ok()?;
                rational_sqrt(&tan).map(|l| LemmaFinding::new(m, l))
            })
            .collect(),
        LemmaKind::Curve1 => curve_points(1, height),
        LemmaKind::Curve2 => curve_points(2, height),
    };
    found.sort();
    found
}
