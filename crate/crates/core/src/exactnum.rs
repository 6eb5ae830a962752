//! Exact scalars.
//!
//! Rationals are `num_rational::BigRational`, which is kept in lowest terms
//! with a positive denominator after every operation. [`QuadExt`] adds the
//! elements `a + b*sqrt(d)` needed by identities whose two sides leave the
//! rationals but stay inside a single quadratic extension.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Roots;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

pub type Rational = num_rational::BigRational;

/// `n / d` from machine integers. Panics on `d == 0`.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Parses `"p/q"` or `"p"` into a canonical rational.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let bad = || Error::Parse(format!("expected \"p/q\" or \"p\", got {s:?}"));
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let num: BigInt = num.parse().map_err(|_| bad())?;
    let den: BigInt = den.parse().map_err(|_| bad())?;
    if den.is_zero() {
        return Err(Error::Parse(format!("zero denominator in {s:?}")));
    }
    Ok(Rational::new(num, den))
}

/// Canonical `"p/q"` rendering (`"p"` for integers).
pub fn format_rational(q: &Rational) -> String {
    q.to_string()
}

/// Decimal rendering for human reading only; never used in emitted data
/// unless the caller asks for it.
pub fn approx(q: &Rational) -> f64 {
    let n = q.numer().to_f64().unwrap_or(f64::NAN);
    let d = q.denom().to_f64().unwrap_or(f64::NAN);
    n / d
}

/// Exact integer square root of a non-negative integer, if it is a square.
pub fn exact_isqrt(n: &BigInt) -> Option<BigInt> {
    if n.is_negative() {
        return None;
    }
    let r = n.sqrt();
    (&r * &r == *n).then_some(r)
}

pub fn is_square_u64(n: u64) -> bool {
    let r = n.sqrt();
    r * r == n
}

/// Exact rational square root, if `q` is the square of a rational.
pub fn rational_sqrt(q: &Rational) -> Option<Rational> {
    // Canonical form: q is a square iff numerator and denominator both are.
    let n = exact_isqrt(q.numer())?;
    let d = exact_isqrt(q.denom())?;
    Some(Rational::new(n, d))
}

pub fn is_rational_square(q: &Rational) -> bool {
    rational_sqrt(q).is_some()
}

/// Radicand used to carry an element whose square root turned out to be
/// rational: the element is stored with zero irrational part.
pub const FALLBACK_RADICAND: i64 = 2;

/// `base + coeff * sqrt(radicand)` with `radicand > 0` not a rational square.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QuadExt {
    base: Rational,
    coeff: Rational,
    radicand: Rational,
}

impl QuadExt {
    pub fn new(base: Rational, coeff: Rational, radicand: Rational) -> Result<Self> {
        if !radicand.is_positive() || is_rational_square(&radicand) {
            return Err(Error::InvalidRadicand(radicand.to_string()));
        }
        Ok(Self::raw(base, coeff, radicand))
    }

    pub(crate) fn raw(base: Rational, coeff: Rational, radicand: Rational) -> Self {
        QuadExt { base, coeff, radicand }
    }

    /// Embeds a rational into the extension of `field`.
    pub fn embed(q: Rational, field: &QuadExt) -> Self {
        Self::raw(q, Rational::zero(), field.radicand.clone())
    }

    /// `sqrt(x)` for positive rational `x`. When `x` is already a square
    /// the result is rational and lives in `Q(sqrt(2))`.
    pub fn sqrt_of(x: &Rational) -> Result<Self> {
        if !x.is_positive() {
            return Err(Error::Domain(format!("sqrt of non-positive {x}")));
        }
        Ok(match rational_sqrt(x) {
            Some(r) => Self::raw(r, Rational::zero(), int(FALLBACK_RADICAND)),
            None => Self::raw(Rational::zero(), Rational::one(), x.clone()),
        })
    }

    pub fn base(&self) -> &Rational {
        &self.base
    }

    pub fn coeff(&self) -> &Rational {
        &self.coeff
    }

    pub fn radicand(&self) -> &Rational {
        &self.radicand
    }

    pub fn is_zero(&self) -> bool {
        self.base.is_zero() && self.coeff.is_zero()
    }

    pub fn to_rational(&self) -> Option<Rational> {
        self.coeff.is_zero().then(|| self.base.clone())
    }

    pub fn conjugate(&self) -> Self {
        Self::raw(self.base.clone(), -&self.coeff, self.radicand.clone())
    }

    /// Field norm `a^2 - b^2 d`.
    pub fn norm(&self) -> Rational {
        &self.base * &self.base - &self.coeff * &self.coeff * &self.radicand
    }

    pub fn scale(&self, q: &Rational) -> Self {
        Self::raw(&self.base * q, &self.coeff * q, self.radicand.clone())
    }

    pub fn signum(&self) -> Ordering {
        let sa = self.base.cmp(&Rational::zero());
        let sb = self.coeff.cmp(&Rational::zero());
        if sa == sb || sb == Ordering::Equal {
            return sa;
        }
        if sa == Ordering::Equal {
            return sb;
        }
        // Opposite signs: the larger magnitude wins.
        let a2 = &self.base * &self.base;
        let b2d = &self.coeff * &self.coeff * &self.radicand;
        match a2.cmp(&b2d) {
            Ordering::Greater => sa,
            Ordering::Less => sb,
            Ordering::Equal => Ordering::Equal,
        }
    }

    fn compatible(&self, other: &Self) -> Result<()> {
        if self.radicand == other.radicand {
            Ok(())
        } else {
            Err(Error::RadicandMismatch {
                left: self.radicand.to_string(),
                right: other.radicand.to_string(),
            })
        }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.compatible(other)?;
        Ok(Self::raw(
            &self.base + &other.base,
            &self.coeff + &other.coeff,
            self.radicand.clone(),
        ))
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.compatible(other)?;
        Ok(Self::raw(
            &self.base - &other.base,
            &self.coeff - &other.coeff,
            self.radicand.clone(),
        ))
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.compatible(other)?;
        let (a1, b1, a2, b2) = (&self.base, &self.coeff, &other.base, &other.coeff);
        Ok(Self::raw(
            a1 * a2 + b1 * b2 * &self.radicand,
            a1 * b2 + a2 * b1,
            self.radicand.clone(),
        ))
    }

    pub fn inverse(&self) -> Result<Self> {
        let n = self.norm();
        if n.is_zero() {
            return Err(Error::DivisionByZero("inverse of zero extension element"));
        }
        Ok(self.conjugate().scale(&n.recip()))
    }

    pub fn checked_div(&self, other: &Self) -> Result<Self> {
        self.compatible(other)?;
        self.checked_mul(&other.inverse()?)
    }
}

/// Product in a common extension; errors when the radicands differ.
pub fn quad_mul(x: &QuadExt, y: &QuadExt) -> Result<QuadExt> {
    x.checked_mul(y)
}

impl fmt::Display for QuadExt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} + {}*sqrt({})", self.base, self.coeff, self.radicand)
    }
}

// Operator forms panic on mismatched radicands; use the `checked_*`
// methods when the operands can come from different extensions.
impl Add for &QuadExt {
    type Output = QuadExt;
    fn add(self, rhs: &QuadExt) -> QuadExt {
        self.checked_add(rhs).expect("QuadExt add")
    }
}

impl Sub for &QuadExt {
    type Output = QuadExt;
    fn sub(self, rhs: &QuadExt) -> QuadExt {
        self.checked_sub(rhs).expect("QuadExt sub")
    }
}

impl Mul for &QuadExt {
    type Output = QuadExt;
    fn mul(self, rhs: &QuadExt) -> QuadExt {
        self.checked_mul(rhs).expect("QuadExt mul")
    }
}

impl Neg for &QuadExt {
    type Output = QuadExt;
    fn neg(self) -> QuadExt {
        QuadExt::raw(-&self.base, -&self.coeff, self.radicand.clone())
    }
}

pub fn biguint_from_rational(q: &Rational) -> Option<BigUint> {
    if !q.is_integer() || q.is_negative() {
        return None;
    }
    q.numer().to_biguint()
}

pub fn rational_from_biguint(n: &BigUint) -> Rational {
    Rational::from_integer(BigInt::from_biguint(Sign::Plus, n.clone()))
}

/// Serde adapter: rationals as `"p/q"` strings.
pub mod serde_rational {
    use super::{parse_rational, Rational};
    use serde::{de::Error as _, Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(q: &Rational, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&q.to_string())
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Rational, D::Error> {
        let s = String::deserialize(d)?;
        parse_rational(&s).map_err(D::Error::custom)
    }
}

/// Serde adapter: non-negative integers as decimal strings.
pub mod serde_biguint {
    use num_bigint::BigUint;
    use serde::{de::Error as _, Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(n: &BigUint, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&n.to_string())
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigUint, D::Error> {
        let s = String::deserialize(d)?;
        s.trim()
            .parse()
            .map_err(|_| D::Error::custom(format!("expected a non-negative integer, got {s:?}")))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Rational {
        rat(n, d)
    }

    fn ext(a: Rational, b: Rational, d: i64) -> QuadExt {
        QuadExt::new(a, b, int(d)).unwrap()
    }

    #[test]
    fn rational_squares() {
        assert!(is_rational_square(&q(49, 16)));
        assert!(!is_rational_square(&q(7, 25)));
        assert!(is_rational_square(&Rational::zero()));
        assert!(!is_rational_square(&q(-4, 9)));
        assert_eq!(rational_sqrt(&q(49, 16)), Some(q(7, 4)));
    }

    #[test]
    fn conjugate_product() {
        let x = ext(int(1), int(1), 2);
        let y = ext(int(1), int(-1), 2);
        assert_eq!(quad_mul(&x, &y).unwrap(), ext(int(-1), int(0), 2));
    }

    #[test]
    fn sqrt_two_squared() {
        let r2 = ext(int(0), int(1), 2);
        assert_eq!(quad_mul(&r2, &r2).unwrap(), ext(int(2), int(0), 2));
    }

    #[test]
    fn scalar_scaling() {
        let x = ext(q(1, 2), q(1, 3), 5);
        let y = ext(int(2), int(0), 5);
        assert_eq!(quad_mul(&x, &y).unwrap(), ext(int(1), q(2, 3), 5));
    }

    #[test]
    fn mismatched_radicands_error() {
        let x = ext(int(1), int(1), 2);
        let y = ext(int(1), int(1), 3);
        assert!(matches!(quad_mul(&x, &y), Err(Error::RadicandMismatch { .. })));
    }

    #[test]
    fn square_radicand_rejected() {
        assert!(QuadExt::new(int(1), int(1), q(9, 4)).is_err());
        assert!(QuadExt::new(int(1), int(1), int(-2)).is_err());
    }

    #[test]
    fn sqrt_of_square_falls_back_to_rational() {
        let r = QuadExt::sqrt_of(&q(9, 4)).unwrap();
        assert_eq!(r.to_rational(), Some(q(3, 2)));
        let s = QuadExt::sqrt_of(&int(3)).unwrap();
        assert_eq!((&s * &s).to_rational(), Some(int(3)));
    }

    #[test]
    fn signum_of_mixed_terms() {
        // 1 - sqrt(2) < 0, 2 - sqrt(2) > 0
        assert_eq!(ext(int(1), int(-1), 2).signum(), Ordering::Less);
        assert_eq!(ext(int(2), int(-1), 2).signum(), Ordering::Greater);
        assert_eq!(ext(int(0), int(0), 2).signum(), Ordering::Equal);
    }

    #[test]
    fn inverse_round_trip() {
        let x = ext(q(3, 7), q(-2, 5), 11);
        let one = &x * &x.inverse().unwrap();
        assert_eq!(one.to_rational(), Some(int(1)));
        assert!(QuadExt::embed(int(0), &x).inverse().is_err());
    }

    #[test]
    fn parse_and_format() {
        assert_eq!(parse_rational("6/8").unwrap(), q(3, 4));
        assert_eq!(parse_rational("-5").unwrap(), int(-5));
        assert_eq!(format_rational(&q(6, -8)), "-3/4");
        assert_eq!(format_rational(&int(1120)), "1120");
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("one/2").is_err());
    }
}
