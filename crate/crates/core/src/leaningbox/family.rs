//! The two-parameter family of rational leaning boxes with `lambda = 0`.

use num_traits::{One, Signed};
use serde::Serialize;

use super::{cot_csc, integer_from_scaled, scaled_from_generators, two, GeneratorQuad, IntegerBox, ScaledBox};
use crate::angles::HeronAngle;
use crate::error::{Error, Result};
use crate::exactnum::{is_rational_square, serde_rational, Rational};
use crate::report::Report;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FamilyPoint {
    #[serde(with = "serde_rational")]
    pub s1: Rational,
    #[serde(with = "serde_rational")]
    pub m: Rational,
    #[serde(with = "serde_rational")]
    pub u1: Rational,
    pub alpha: HeronAngle,
    pub quad: GeneratorQuad,
}

impl FamilyPoint {
    pub fn scaled(&self) -> Result<ScaledBox> {
        scaled_from_generators(&self.quad)
    }

    pub fn integer(&self) -> Result<IntegerBox> {
        self.scaled().map(|s| integer_from_scaled(&s))
    }
}

/// Whether `m` generates an angle in `(0, pi/4)`, i.e. `0 < m < sqrt2 - 1`.
pub fn family_m_in_range(m: &Rational) -> bool {
    m.is_positive() && m * m + &two() * m < Rational::one()
}

/// The family member with parameters `s1` and `m = m(a)`:
///
/// ```text
/// u1 = (1 - s1^2) / 2 s1,  s2 = 2 u1 cot 2a,  s3 = w-(a) / s2,  s4 = s2 / w+(a)
/// ```
///
/// Fails when a generator leaves `(0,1)` or when the face parallelogram's
/// second generator `n` leaves `(0,1)`.
pub fn family_lambda0(s1: &Rational, m: &Rational) -> Result<FamilyPoint> {
    let one = Rational::one();
    if !(s1.is_positive() && s1 < &one) {
        return Err(Error::out_of_range("s1", s1, "(0,1)"));
    }
    if !family_m_in_range(m) {
        return Err(Error::Domain(format!(
            "m={m} outside (0, sqrt2-1): need m > 0 and m^2 + 2m < 1"
        )));
    }
    let alpha = HeronAngle::from_generator(m);
    let (u1, _) = cot_csc(s1);
    let (wp, wm) = (alpha.omega_plus(), alpha.omega_minus());
    let s2 = &two() * &u1 * alpha.cos2() / alpha.sin2();
    let s3 = &wm / &s2;
    let s4 = &s2 / &wp;
    let quad = GeneratorQuad::new(s1.clone(), s2, s3, s4)?;

    let q = quad.q();
    let (s2, s3, s4) = (&quad.s2, &quad.s3, &quad.s4);
    let substituted = [s2 * s3 == wm, s2 * s3 == &q * &wp, s2 * &wp == &two() * &u1 * &wm + s4];
    if substituted.contains(&false) {
        return Err(Error::Degenerate(format!("family equations fail at s1={s1}, m={m}")));
    }

    let scaled = scaled_from_generators(&quad)?;
    let n = (&two() * &scaled.u2 - &scaled.u3 + &scaled.u4) / (&two() * &scaled.u1 + &scaled.u3 + &scaled.u4);
    if !(n.is_positive() && n < one) {
        return Err(Error::out_of_range("n", &n, "(0,1)"));
    }

    Ok(FamilyPoint {
        s1: s1.clone(),
        m: m.clone(),
        u1,
        alpha,
        quad,
    })
}

#[derive(Debug, Clone, Serialize)]
pub struct GapReport {
    pub report: Report,
    /// `s3 - s4`; never zero on the family.
    #[serde(with = "serde_rational")]
    pub gap: Rational,
    #[serde(with = "serde_rational")]
    pub cos2: Rational,
}

/// `s2^2 s3 = s4 cos 2a` with `cos 2a` never a rational square, so the
/// cuboid case `s3 = s4` does not occur.
pub fn cuboid_gap(p: &FamilyPoint) -> GapReport {
    let GeneratorQuad { s2, s3, s4, .. } = &p.quad;
    let cos2 = p.alpha.cos2();
    let mut report = Report::new();
    report.eq("gap-identity", &(s2 * s2 * s3), &(s4 * &cos2));
    report.record("gap-cos2-not-square", !is_rational_square(&cos2));
    report.record("gap-cos2-positive", cos2.is_positive());
    report.record("gap-distinct", s3 != s4);
    GapReport {
        report,
        gap: s3 - s4,
        cos2,
    }
}

#[cfg(test)]
mod tests {
    use super::super::fixtures::*;
    use super::*;
    use crate::exactnum::rat;

    #[test]
    fn family_examples() {
        let p = family_lambda0(&rat(1, 2), &rat(1, 3)).unwrap();
        assert_eq!(p.quad, quad1());
        assert_eq!(p.u1, rat(3, 4));
        assert_eq!(p.integer().unwrap(), box1());
        let p = family_lambda0(&rat(12, 25), &rat(1, 3)).unwrap();
        assert_eq!(p.quad, quad2());
        assert_eq!(p.integer().unwrap(), box2());
    }

    #[test]
    fn family_rejects_large_s2() {
        let e = family_lambda0(&rat(1, 2), &rat(1, 5)).unwrap_err();
        assert_eq!(e.to_string(), "s2=119/80 out of (0,1)");
    }

    #[test]
    fn family_rejects_parameters_outside_domain() {
        assert!(matches!(
            family_lambda0(&rat(1, 1), &rat(1, 3)),
            Err(Error::OutOfRange { .. })
        ));
        assert!(matches!(family_lambda0(&rat(1, 2), &rat(1, 2)), Err(Error::Domain(_))));
        assert!(matches!(family_lambda0(&rat(1, 2), &rat(0, 1)), Err(Error::Domain(_))));
        // 5/12 is just above sqrt2 - 1.
        assert!(matches!(family_lambda0(&rat(1, 2), &rat(5, 12)), Err(Error::Domain(_))));
    }

    #[test]
    fn gap_examples() {
        let g = cuboid_gap(&family_lambda0(&rat(1, 2), &rat(1, 3)).unwrap());
        assert!(g.report.all_hold(), "{}", g.report);
        assert_eq!(g.gap, rat(81, 560));
        assert_eq!(g.cos2, rat(7, 25));
        assert_eq!(&g.report.checks.len(), &4);
        let g = cuboid_gap(&family_lambda0(&rat(12, 25), &rat(1, 3)).unwrap());
        assert!(g.report.all_hold());
        assert_eq!(g.cos2, rat(7, 25));
    }

    #[test]
    fn gap_identity_value() {
        let p = family_lambda0(&rat(1, 2), &rat(1, 3)).unwrap();
        let GeneratorQuad { s2, s3, .. } = &p.quad;
        assert_eq!(s2 * s2 * s3, rat(7, 80));
    }
}
