//! Symmetry parameters and the equivalent Euler-angle formulation of a
//! leaning box.
//!
//! The face parallelogram `(u1, u2, u3, u4)` and the inner parallelogram
//! `(u1, v2, v3, v4)` share the side `u1 = cot psi` for the Heron edge angle
//! `psi`. Writing each through its half-sum and half-difference Euler angles
//! gives `tan s = u2/u1`, `tan s1 = v2/u1` and the conditions
//! `tan^2 s1 - tan^2 s = tan^2 psi` and a matching sine-ratio condition.

use num_traits::{One, Signed, Zero};
use serde::Serialize;

use super::{interior_generators, two, ScaledBox};
use crate::angles::{add_generators, Generator, HeronAngle};
use crate::auxfn::{lambda_of, param_m};
use crate::error::{Error, Result};
use crate::exactnum::{serde_rational, Rational};
use crate::report::Report;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SymmetryParams {
    #[serde(with = "serde_rational")]
    pub m_alpha: Rational,
    #[serde(with = "serde_rational")]
    pub m_alpha1: Rational,
    #[serde(with = "serde_rational")]
    pub m_beta: Rational,
    #[serde(with = "serde_rational")]
    pub m_beta1: Rational,
    /// Generator of `a + a1`.
    #[serde(with = "serde_rational")]
    pub k: Rational,
    /// Generator of `b + b1`.
    #[serde(with = "serde_rational")]
    pub k_bar: Rational,
    #[serde(with = "serde_rational")]
    pub lambda: Rational,
    #[serde(with = "serde_rational")]
    pub lambda_bar: Rational,
}

fn lambda_from_k(k: &Rational) -> Result<Rational> {
    let den = Rational::one() + k;
    if den.is_zero() {
        return Err(Error::Degenerate("k = -1: angle sum is -pi/2".into()));
    }
    Ok((Rational::one() - k) / den)
}

pub fn symmetry_params(s: &ScaledBox) -> Result<SymmetryParams> {
    let two = two();
    let (m_alpha, m_alpha1, _) = interior_generators(s);
    let m_beta = (&two * &s.u2 - &s.u3 + &s.u4) / (&two * &s.u1 + &s.u3 + &s.u4);
    let m_beta1 = (&two * &s.v2 - &s.v3 + &s.v4) / (&two * &s.u1 + &s.v3 + &s.v4);
    let sum = |x: &Rational, y: &Rational| {
        add_generators(&Generator(x.clone()), &Generator(y.clone()))
            .map(|g| g.0)
            .map_err(|_| Error::Degenerate(format!("m={x}, m1={y} multiply to 1: angle sum is pi")))
    };
    let k = sum(&m_alpha, &m_alpha1)?;
    let k_bar = sum(&m_beta, &m_beta1)?;
    Ok(SymmetryParams {
        lambda: lambda_from_k(&k)?,
        lambda_bar: lambda_from_k(&k_bar)?,
        m_alpha,
        m_alpha1,
        m_beta,
        m_beta1,
        k,
        k_bar,
    })
}

/// How `f` was recovered from `r` and `r1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum FCase {
    /// `r1 != r`.
    Distinct,
    /// `r1 = r`, which forces `sin 2a = sin 2a1`.
    Equal,
    /// The recovery formula divides by zero.
    Degenerate,
}

#[derive(Debug, Clone, Serialize)]
pub struct EquivParams {
    /// `tan s = u2 / u1`.
    #[serde(with = "serde_rational")]
    pub tan_sigma: Rational,
    /// `tan s1 = v2 / u1`.
    #[serde(with = "serde_rational")]
    pub tan_sigma1: Rational,
    #[serde(with = "serde_rational")]
    pub tan_delta: Rational,
    #[serde(with = "serde_rational")]
    pub tan_delta1: Rational,
    #[serde(with = "serde_rational")]
    pub tan_alpha: Rational,
    #[serde(with = "serde_rational")]
    pub tan_alpha1: Rational,
    /// `tan` of the edge angle, `1 / u1`.
    #[serde(with = "serde_rational")]
    pub tan_psi_edge: Rational,
    #[serde(with = "serde_rational")]
    pub r: Rational,
    #[serde(with = "serde_rational")]
    pub r1: Rational,
    pub f_case: FCase,
    #[serde(skip_serializing_if = "Option::is_none", with = "opt_rational")]
    pub f: Option<Rational>,
    #[serde(with = "serde_rational")]
    pub sin2: Rational,
    #[serde(with = "serde_rational")]
    pub sin2_1: Rational,
    pub report: Report,
}

mod opt_rational {
    use serde::Serializer;

    use crate::exactnum::{format_rational, Rational};

    pub fn serialize<S: Serializer>(q: &Option<Rational>, s: S) -> Result<S::Ok, S::Error> {
        match q {
            Some(q) => s.serialize_str(&format_rational(q)),
            None => s.serialize_none(),
        }
    }
}

/// `tan d` from `tan s` and `tan(s + d)`.
fn tan_difference(tan_alpha: &Rational, tan_sigma: &Rational) -> Option<Rational> {
    let den = Rational::one() + tan_sigma * tan_alpha;
    (!den.is_zero()).then(|| (tan_alpha - tan_sigma) / den)
}

/// `(1 - M^2) sin 2a - 2 M cos 2a`.
fn quadratic_form(m: &Rational, a: &HeronAngle) -> Rational {
    (Rational::one() - m * m) * a.sin2() - two() * m * a.cos2()
}

/// Recovers `f` from `r, r1` and checks that it reproduces them.
fn recover_f(r: &Rational, r1: &Rational, s: &Rational, s1: &Rational) -> (FCase, Option<Rational>) {
    if r == r1 {
        let den = Rational::one() + r * s;
        if den.is_zero() {
            return (FCase::Degenerate, None);
        }
        (FCase::Equal, Some(r / den))
    } else {
        let den = r * s - r1 * s1;
        if den.is_zero() {
            return (FCase::Degenerate, None);
        }
        (FCase::Distinct, Some((r1 - r) / den))
    }
}

/// `(r, r1)` from `f`; `None` where the parameterization is singular.
pub fn r_pair_from_f(f: &Rational, s: &Rational, s1: &Rational) -> Option<(Rational, Rational)> {
    let den = Rational::one() - f * f * s * s1;
    if den.is_zero() {
        return None;
    }
    let one = Rational::one();
    Some((f * (&one + f * s1) / &den, f * (&one + f * s) / &den))
}

pub fn equiv_params(s: &ScaledBox) -> Result<EquivParams> {
    let one = Rational::one();
    let two = two();
    let mut report = Report::new();
    let (m, m1, _) = interior_generators(s);
    let alpha = HeronAngle::from_generator(&m);
    let alpha1 = HeronAngle::from_generator(&m1);
    let tan_alpha = alpha.tan()?;
    let tan_alpha1 = alpha1.tan()?;

    let tan_sigma = &s.u2 / &s.u1;
    let tan_sigma1 = &s.v2 / &s.u1;
    let tan_delta =
        tan_difference(&tan_alpha, &tan_sigma).ok_or_else(|| Error::Degenerate("1 + tan s tan a = 0".into()))?;
    let tan_delta1 =
        tan_difference(&tan_alpha1, &tan_sigma1).ok_or_else(|| Error::Degenerate("1 + tan s1 tan a1 = 0".into()))?;
    let tan_psi_edge = &one / &s.u1;

    report.record("equiv-positive", tan_sigma.is_positive() && tan_sigma1.is_positive());
    report.eq("equiv-delta-face", &tan_delta, &((&s.u3 - &s.u4) / (&s.u3 + &s.u4)));
    report.eq("equiv-delta-inner", &tan_delta1, &((&s.v3 - &s.v4) / (&s.v3 + &s.v4)));
    report.eq(
        "equiv-edge",
        &(&tan_sigma1 * &tan_sigma1 - &tan_sigma * &tan_sigma),
        &(&tan_psi_edge * &tan_psi_edge),
    );
    let ratio = |n: &Rational, m: &Rational| &two * n * (&one + m * m) / (&one + n * n);
    report.eq(
        "equiv-sine-ratio",
        &ratio(&tan_delta, &tan_sigma),
        &ratio(&tan_delta1, &tan_sigma1),
    );
    report.eq(
        "equiv-quadratic-forms",
        &quadratic_form(&tan_sigma, &alpha),
        &quadratic_form(&tan_sigma1, &alpha1),
    );

    // Diagonals through the Euler parameterization.
    let diag = |m: &Rational, a: &HeronAngle| {
        (
            &s.u1 * (a.omega_plus() - m * a.omega_minus()),
            &s.u1 * (a.omega_minus() + m * a.omega_plus()),
        )
    };
    let (u3, u4) = diag(&tan_sigma, &alpha);
    report.eq_pair("equiv-face-diagonals", (&u3, &u4), (&s.u3, &s.u4));
    let (v3, v4) = diag(&tan_sigma1, &alpha1);
    report.eq_pair("equiv-inner-diagonals", (&v3, &v4), (&s.v3, &s.v4));
    let sym = symmetry_params(s)?;
    let beta = HeronAngle::from_generator(&sym.m_beta);
    let (wpb, wmb) = (beta.omega_plus(), beta.omega_minus());
    report.eq_pair(
        "equiv-face-diagonals-beta",
        (
            &(&s.u1 * (&wmb + &tan_sigma * &wpb)),
            &(&s.u1 * (&wpb - &tan_sigma * &wmb)),
        ),
        (&s.u3, &s.u4),
    );

    let r = lambda_of(&alpha, &tan_sigma)?;
    let r1 = lambda_of(&alpha1, &tan_sigma1)?;
    let (sin2, sin2_1) = (alpha.sin2(), alpha1.sin2());
    let d = &r * (&one + &r * &sin2);
    let d1 = &r1 * (&one + &r1 * &sin2_1);
    report.eq("equiv-d-equal", &d, &d1);
    let reparam = param_m(&alpha, &r).map(|p| p.m_plus == tan_sigma && p.d == d);
    report.record("equiv-r-param", reparam.unwrap_or(false));
    let reparam1 = param_m(&alpha1, &r1).map(|p| p.m_plus == tan_sigma1 && p.d == d1);
    report.record("equiv-r1-param", reparam1.unwrap_or(false));

    let (f_case, f) = recover_f(&r, &r1, &sin2, &sin2_1);
    match &f {
        Some(f) => {
            let back = r_pair_from_f(f, &sin2, &sin2_1);
            report.record("equiv-f-roundtrip", back == Some((r.clone(), r1.clone())));
        }
        None => report.flag("equiv-f-roundtrip"),
    }
    if f_case == FCase::Equal {
        report.eq("equiv-equal-case-sines", &sin2, &sin2_1);
    }

    Ok(EquivParams {
        tan_sigma,
        tan_sigma1,
        tan_delta,
        tan_delta1,
        tan_alpha,
        tan_alpha1,
        tan_psi_edge,
        r,
        r1,
        f_case,
        f,
        sin2,
        sin2_1,
        report,
    })
}

/// `(tan s, tan s1)` of the boxes with `a + a1 = pi/2`, given the edge angle
/// and `a`. Requires `0 < a < pi/4`.
pub fn special_family_pi2(psi_edge: &HeronAngle, alpha: &HeronAngle) -> Result<(Rational, Rational)> {
    let (c2, s2) = (alpha.cos2(), alpha.sin2());
    if !c2.is_positive() || !s2.is_positive() {
        return Err(Error::Degenerate(format!(
            "angle with cos 2a={c2}, sin 2a={s2} outside (0, pi/4)"
        )));
    }
    let t = psi_edge.tan()?;
    let tan2 = &s2 / &c2;
    let cot2 = &c2 / &s2;
    let four = Rational::from_integer(4.into());
    let spread = &t * &t * &tan2;
    let m = (&spread - &four * &cot2) / &four;
    let m1 = (&four * &cot2 + &spread) / &four;
    debug_assert!(&m1 - &m == two() * &cot2 && &m1 + &m == spread / two());
    Ok((m, m1))
}

/// `F(r, r1) = r1/r - (1 + r sin 2a) / (1 + r1 sin 2a1)`, zero exactly when
/// the two quadratic parameters give the same `D`.
pub fn cuboid_limit_eval(r: &Rational, r1: &Rational, alpha: &HeronAngle, alpha1: &HeronAngle) -> Result<Rational> {
    if r.is_zero() {
        return Err(Error::Domain("r = 0".into()));
    }
    let den = Rational::one() + r1 * alpha1.sin2();
    if den.is_zero() {
        return Err(Error::Domain("1 + r1 sin 2a1 = 0".into()));
    }
    Ok(r1 / r - (Rational::one() + r * alpha.sin2()) / den)
}

#[cfg(test)]
mod tests {
    use super::super::fixtures::*;
    use super::*;
    use crate::exactnum::{int, rat};

    fn scaled1() -> ScaledBox {
        box1().to_scaled().unwrap()
    }

    #[test]
    fn symmetry_example1() {
        let p = symmetry_params(&scaled1()).unwrap();
        assert_eq!((p.m_alpha.clone(), p.m_alpha1.clone()), (rat(1, 3), rat(1, 2)));
        assert_eq!(p.m_beta, rat(151, 237));
        assert_eq!(p.m_beta1, rat(442, 641));
        assert_eq!((p.k, p.lambda), (int(1), int(0)));
        assert_eq!(p.lambda_bar, lambda_from_k(&p.k_bar).unwrap());
    }

    #[test]
    fn symmetry_example2() {
        let p = symmetry_params(&box2().to_scaled().unwrap()).unwrap();
        assert_eq!((p.k, p.lambda), (int(1), int(0)));
    }

    #[test]
    fn equiv_example1() {
        let e = equiv_params(&scaled1()).unwrap();
        assert!(e.report.all_hold(), "{}", e.report);
        assert_eq!(e.tan_sigma, rat(69, 56));
        assert_eq!(e.tan_sigma1, rat(305, 168));
        assert_eq!(e.tan_delta, rat(-108, 431));
        assert_eq!(&e.tan_sigma1 * &e.tan_sigma1 - &e.tan_sigma * &e.tan_sigma, rat(16, 9));
        assert_eq!((e.tan_alpha.clone(), e.tan_alpha1.clone()), (rat(3, 4), rat(4, 3)));
        assert_eq!((e.r.clone(), e.r1.clone()), (rat(27, 112), rat(27, 112)));
        assert_eq!(e.f_case, FCase::Equal);
        assert_eq!(e.f, Some(rat(675, 3448)));
        assert_eq!((e.sin2.clone(), e.sin2_1.clone()), (rat(24, 25), rat(24, 25)));
    }

    #[test]
    fn equiv_example2() {
        let e = equiv_params(&box2().to_scaled().unwrap()).unwrap();
        assert!(e.report.all_hold(), "{}", e.report);
        assert_eq!(e.f_case, FCase::Equal);
    }

    #[test]
    fn distinct_case_round_trip() {
        let (s, s1) = (rat(24, 25), rat(120, 169));
        let f = rat(1, 7);
        let (r, r1) = r_pair_from_f(&f, &s, &s1).unwrap();
        assert_ne!(r, r1);
        assert_eq!(&r * (int(1) + &r * &s), &r1 * (int(1) + &r1 * &s1));
        assert_eq!(recover_f(&r, &r1, &s, &s1), (FCase::Distinct, Some(f)));
    }

    #[test]
    fn degenerate_case_is_reported() {
        // r s = r1 s1 with r != r1.
        assert_eq!(
            recover_f(&rat(1, 2), &rat(1, 3), &rat(2, 5), &rat(3, 5)).0,
            FCase::Degenerate
        );
    }

    #[test]
    fn special_family_example() {
        let psi = HeronAngle::from_generator(&rat(1, 2));
        assert_eq!(psi.tan().unwrap(), rat(4, 3));
        let a = HeronAngle::from_generator(&rat(1, 3));
        let (m, m1) = special_family_pi2(&psi, &a).unwrap();
        assert_eq!((m.clone(), m1.clone()), (rat(69, 56), rat(305, 168)));
        assert_eq!(&m1 - &m, rat(7, 12));
    }

    #[test]
    fn special_family_domain() {
        let psi = HeronAngle::from_generator(&rat(1, 2));
        // m = 1/2 gives a in (pi/4, pi/2), so tan 2a < 0.
        assert!(special_family_pi2(&psi, &HeronAngle::from_generator(&rat(1, 2))).is_err());
        assert!(special_family_pi2(&psi, &HeronAngle::zero()).is_err());
    }

    #[test]
    fn limit_function_examples() {
        let a = HeronAngle::from_generator(&rat(1, 3));
        let a1 = HeronAngle::from_generator(&rat(1, 2));
        let r = rat(27, 112);
        assert_eq!(cuboid_limit_eval(&r, &r, &a, &a1).unwrap(), int(0));
        assert_eq!(cuboid_limit_eval(&rat(2, 9), &rat(2, 9), &a, &a).unwrap(), int(0));
        assert_eq!(cuboid_limit_eval(&rat(1, 2), &rat(1, 3), &a, &a1).unwrap(), rat(-5, 11));
        assert!(cuboid_limit_eval(&int(0), &r, &a, &a1).is_err());
    }
}
