//! Rational parallelograms: positive rational sides `u1, u2` and diagonals
//! `u3, u4` with `2 u1^2 + 2 u2^2 = u3^2 + u4^2`.
//!
//! Every rational parallelogram is `(1-mn, m+n, 1+mn-n+m, 1+mn+n-m) * u`
//! for a scale `u > 0` and generators `0 < m, n < 1`. The alternative
//! coordinates (one side plus a generator, the omega matrices, the two
//! Euler angles) all have exact inverses here.

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::angles::HeronAngle;
use crate::error::{Error, Result};
use crate::exactnum::{rational_sqrt, serde_rational, Rational};

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct RationalParallelogram {
    #[serde(with = "serde_rational")]
    pub u1: Rational,
    #[serde(with = "serde_rational")]
    pub u2: Rational,
    #[serde(with = "serde_rational")]
    pub u3: Rational,
    #[serde(with = "serde_rational")]
    pub u4: Rational,
}

fn two() -> Rational {
    Rational::from_integer(2.into())
}

fn in_unit_interval(x: &Rational) -> bool {
    x.is_positive() && x < &Rational::one()
}

impl RationalParallelogram {
    pub fn new(u1: Rational, u2: Rational, u3: Rational, u4: Rational) -> Result<Self> {
        for (name, v) in [("u1", &u1), ("u2", &u2), ("u3", &u3), ("u4", &u4)] {
            if !v.is_positive() {
                return Err(Error::out_of_range(name, v, "(0,inf)"));
            }
        }
        let p = RationalParallelogram { u1, u2, u3, u4 };
        let (lo, hi) = ((&p.u1 - &p.u2).abs(), &p.u1 + &p.u2);
        if [&p.u3, &p.u4].iter().any(|d| **d <= lo || **d >= hi) {
            return Err(Error::Degenerate(format!(
                "diagonals ({}, {}) violate triangle inequality with sides ({}, {})",
                p.u3, p.u4, p.u1, p.u2
            )));
        }
        if !p.satisfies_equation() {
            return Err(Error::Domain(format!(
                "2u1^2 + 2u2^2 != u3^2 + u4^2 for ({}, {}, {}, {})",
                p.u1, p.u2, p.u3, p.u4
            )));
        }
        Ok(p)
    }

    pub fn satisfies_equation(&self) -> bool {
        two() * (&self.u1 * &self.u1 + &self.u2 * &self.u2) == &self.u3 * &self.u3 + &self.u4 * &self.u4
    }

    /// The same parallelogram with its diagonals listed the other way round.
    pub fn swap_diagonals(&self) -> Self {
        RationalParallelogram {
            u1: self.u1.clone(),
            u2: self.u2.clone(),
            u3: self.u4.clone(),
            u4: self.u3.clone(),
        }
    }

    pub fn scaled(&self, k: &Rational) -> Self {
        RationalParallelogram {
            u1: &self.u1 * k,
            u2: &self.u2 * k,
            u3: &self.u3 * k,
            u4: &self.u4 * k,
        }
    }

    pub fn is_rectangle(&self) -> bool {
        self.u3 == self.u4
    }

    pub fn is_rhombus(&self) -> bool {
        self.u1 == self.u2
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct MnParams {
    #[serde(with = "serde_rational")]
    pub u: Rational,
    #[serde(with = "serde_rational")]
    pub m: Rational,
    #[serde(with = "serde_rational")]
    pub n: Rational,
}

impl MnParams {
    pub fn new(u: Rational, m: Rational, n: Rational) -> Result<Self> {
        if !u.is_positive() {
            return Err(Error::out_of_range("u", &u, "(0,inf)"));
        }
        if !in_unit_interval(&m) {
            return Err(Error::out_of_range("m", &m, "(0,1)"));
        }
        if !in_unit_interval(&n) {
            return Err(Error::out_of_range("n", &n, "(0,1)"));
        }
        Ok(MnParams { u, m, n })
    }
}

/// One side and the two Euler angles `s = (a+b)/2`, `d = (a-b)/2`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct EulerParams {
    #[serde(with = "serde_rational")]
    pub u1: Rational,
    #[serde(with = "serde_rational")]
    pub tan_sigma: Rational,
    #[serde(with = "serde_rational")]
    pub tan_delta: Rational,
}

impl EulerParams {
    pub fn new(u1: Rational, tan_sigma: Rational, tan_delta: Rational) -> Result<Self> {
        if !u1.is_positive() {
            return Err(Error::out_of_range("u1", &u1, "(0,inf)"));
        }
        if !tan_sigma.is_positive() {
            return Err(Error::out_of_range("tan_sigma", &tan_sigma, "(0,inf)"));
        }
        if tan_delta.abs() >= Rational::one() {
            return Err(Error::out_of_range("tan_delta", &tan_delta, "(-1,1)"));
        }
        Ok(EulerParams {
            u1,
            tan_sigma,
            tan_delta,
        })
    }
}

pub fn from_mn(p: &MnParams) -> RationalParallelogram {
    let one = Rational::one();
    let (u, m, n) = (&p.u, &p.m, &p.n);
    let mn = m * n;
    RationalParallelogram {
        u1: (&one - &mn) * u,
        u2: (m + n) * u,
        u3: (&one + &mn - n + m) * u,
        u4: (&one + &mn + n - m) * u,
    }
}

/// Inverse of [`from_mn`]. Fails when the diagonal order puts `m` or `n`
/// outside `(0,1)`; [`RationalParallelogram::swap_diagonals`] gives the
/// other order.
pub fn to_mn(p: &RationalParallelogram) -> Result<MnParams> {
    let four_u = two() * &p.u1 + &p.u3 + &p.u4;
    let u = &four_u / Rational::from_integer(4.into());
    let m = (two() * &p.u2 + &p.u3 - &p.u4) / &four_u;
    let n = (two() * &p.u2 - &p.u3 + &p.u4) / &four_u;
    if !in_unit_interval(&m) || !in_unit_interval(&n) {
        return Err(Error::Domain(format!(
            "m={m}, n={n} not both in (0,1): non-canonical diagonal order, swap u3 and u4"
        )));
    }
    Ok(MnParams { u, m, n })
}

/// `n` determined by the two sides and `m`.
pub fn n_from_m(u1: &Rational, u2: &Rational, m: &Rational) -> Rational {
    (u2 - m * u1) / (u1 + m * u2)
}

pub fn m_from_n(u1: &Rational, u2: &Rational, n: &Rational) -> Rational {
    (u2 - n * u1) / (u1 + n * u2)
}

fn checked_diagonals(u3: Rational, u4: Rational) -> Result<(Rational, Rational)> {
    if !u3.is_positive() {
        return Err(Error::out_of_range("u3", &u3, "(0,inf)"));
    }
    if !u4.is_positive() {
        return Err(Error::out_of_range("u4", &u4, "(0,inf)"));
    }
    Ok((u3, u4))
}

/// Diagonals from the sides and the generator `m` of the angle `a`.
pub fn diagonals_from_m(u1: &Rational, u2: &Rational, m: &Rational) -> Result<(Rational, Rational)> {
    let a = HeronAngle::from_generator(m);
    let (sum, diff) = (u2 + u1, u2 - u1);
    let u3 = &sum * a.sin() - &diff * a.cos();
    let u4 = &sum * a.cos() + &diff * a.sin();
    checked_diagonals(u3, u4)
}

/// Diagonals from the sides and the generator `n` of the angle `b`.
pub fn diagonals_from_n(u1: &Rational, u2: &Rational, n: &Rational) -> Result<(Rational, Rational)> {
    let b = HeronAngle::from_generator(n);
    let (sum, diff) = (u2 + u1, u2 - u1);
    let u3 = &diff * b.sin() + &sum * b.cos();
    let u4 = &sum * b.sin() - &diff * b.cos();
    checked_diagonals(u3, u4)
}

/// `(u3, u4) = [[w+(a), -w-(a)], [w-(a), w+(a)]] (u1, u2)`.
pub fn diagonals_by_alpha(a: &HeronAngle, u1: &Rational, u2: &Rational) -> (Rational, Rational) {
    let (wp, wm) = (a.omega_plus(), a.omega_minus());
    (&wp * u1 - &wm * u2, &wm * u1 + &wp * u2)
}

/// `2 (u1, u2) = [[w+(a), w-(a)], [-w-(a), w+(a)]] (u3, u4)`, returned
/// already halved.
pub fn sides_by_alpha(a: &HeronAngle, u3: &Rational, u4: &Rational) -> (Rational, Rational) {
    let (wp, wm) = (a.omega_plus(), a.omega_minus());
    ((&wp * u3 + &wm * u4) / two(), (&wp * u4 - &wm * u3) / two())
}

/// `(u3, u4) = [[w-(b), w+(b)], [w+(b), -w-(b)]] (u1, u2)`.
pub fn diagonals_by_beta(b: &HeronAngle, u1: &Rational, u2: &Rational) -> (Rational, Rational) {
    let (wp, wm) = (b.omega_plus(), b.omega_minus());
    (&wm * u1 + &wp * u2, &wp * u1 - &wm * u2)
}

/// The beta matrix squares to twice the identity; returned halved.
pub fn sides_by_beta(b: &HeronAngle, u3: &Rational, u4: &Rational) -> (Rational, Rational) {
    let (x, y) = diagonals_by_beta(b, u3, u4);
    (x / two(), y / two())
}

/// The Heron angles `a, b` whose generators are `to_mn`'s `m` and `n`,
/// recovered from the omega values of the sides and diagonals.
pub fn heron_angles_of(p: &RationalParallelogram) -> (HeronAngle, HeronAngle) {
    let norm = &p.u1 * &p.u1 + &p.u2 * &p.u2;
    let wpa = (&p.u1 * &p.u3 + &p.u2 * &p.u4) / &norm;
    let wma = (&p.u1 * &p.u4 - &p.u2 * &p.u3) / &norm;
    let wpb = (&p.u1 * &p.u4 + &p.u2 * &p.u3) / &norm;
    let wmb = (&p.u1 * &p.u3 - &p.u2 * &p.u4) / &norm;
    (from_omegas(wpa, wma), from_omegas(wpb, wmb))
}

fn from_omegas(wp: Rational, wm: Rational) -> HeronAngle {
    let cos = (&wp + &wm) / two();
    let sin = (wp - wm) / two();
    HeronAngle::raw(cos, sin)
}

pub fn euler_params_of(p: &RationalParallelogram) -> EulerParams {
    EulerParams {
        u1: p.u1.clone(),
        tan_sigma: &p.u2 / &p.u1,
        tan_delta: (&p.u3 - &p.u4) / (&p.u3 + &p.u4),
    }
}

/// Rebuilds the parallelogram from one side and its two Euler angles.
///
/// The route goes through the Heron angle `a = s + d`, whose cosine and
/// sine are proportional to `(1 - tan s tan d, tan s + tan d)`. Fails when
/// that direction is not rational, i.e. the parameters do not describe a
/// rational parallelogram.
pub fn from_euler(e: &EulerParams) -> Result<RationalParallelogram> {
    let c = Rational::one() - &e.tan_sigma * &e.tan_delta;
    let s = &e.tan_sigma + &e.tan_delta;
    let r = rational_sqrt(&(&c * &c + &s * &s)).ok_or_else(|| {
        Error::NotRational(format!(
            "direction of tan_sigma={}, tan_delta={}",
            e.tan_sigma, e.tan_delta
        ))
    })?;
    if r.is_zero() {
        return Err(Error::Degenerate("zero direction".into()));
    }
    let a = HeronAngle::raw(c / &r, s / &r);
    let u2 = &e.u1 * &e.tan_sigma;
    let (u3, u4) = diagonals_by_alpha(&a, &e.u1, &u2);
    RationalParallelogram::new(e.u1.clone(), u2, u3, u4)
}
