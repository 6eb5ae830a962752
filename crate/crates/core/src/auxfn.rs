//! The auxiliary functions
//!
//! ```text
//! H = w- - Q w+    K = w- + Q w+    M = w+ - Q w-    N = w+ + Q w-
//! ```
//!
//! of a Heron angle and a rational `Q`, their identity suite, and the
//! rational parameterization of the quadratic
//! `(M^2 - 1) sin 2a + 2 M cos 2a = 4D`.

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::angles::{add_generators, EulerAngle, Generator, HalfAngles, HeronAngle, Vector};
use crate::error::{Error, Result};
use crate::exactnum::{rational_sqrt, serde_rational, QuadExt, Rational};
use crate::report::Report;

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct AuxParams {
    #[serde(with = "serde_rational")]
    pub q: Rational,
    pub angle: HeronAngle,
}

impl AuxParams {
    pub fn new(q: Rational, angle: HeronAngle) -> Self {
        AuxParams { q, angle }
    }

    fn at(&self, angle: HeronAngle) -> AuxParams {
        AuxParams::new(self.q.clone(), angle)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct AuxQuad {
    #[serde(with = "serde_rational")]
    pub h: Rational,
    #[serde(with = "serde_rational")]
    pub k: Rational,
    #[serde(with = "serde_rational")]
    pub m: Rational,
    #[serde(with = "serde_rational")]
    pub n: Rational,
}

impl AuxQuad {
    pub fn hn(&self) -> Vector {
        (self.h.clone(), self.n.clone())
    }

    pub fn km(&self) -> Vector {
        (self.k.clone(), self.m.clone())
    }
}

pub fn hkmn(p: &AuxParams) -> AuxQuad {
    let (wp, wm) = (p.angle.omega_plus(), p.angle.omega_minus());
    AuxQuad {
        h: &wm - &p.q * &wp,
        k: &wm + &p.q * &wp,
        m: &wp - &p.q * &wm,
        n: &wp + &p.q * &wm,
    }
}

/// `H, K, M, N` of an angle whose cosine and sine lie in a quadratic field.
pub(crate) fn hkmn_ext(q: &Rational, cos: &QuadExt, sin: &QuadExt) -> [QuadExt; 4] {
    let wp = cos + sin;
    let wm = cos - sin;
    [
        &wm - &wp.scale(q),
        &wm + &wp.scale(q),
        &wp - &wm.scale(q),
        &wp + &wm.scale(q),
    ]
}

fn two() -> Rational {
    Rational::from_integer(2.into())
}

type Matrix = [[Rational; 2]; 2];

fn mat_mul(a: &Matrix, b: &Matrix) -> Matrix {
    let cell = |i: usize, j: usize| &a[i][0] * &b[0][j] + &a[i][1] * &b[1][j];
    [[cell(0, 0), cell(0, 1)], [cell(1, 0), cell(1, 1)]]
}

fn rot_matrix(a: &HeronAngle) -> Matrix {
    [[a.cos().clone(), -a.sin()], [a.sin().clone(), a.cos().clone()]]
}

fn swap_matrix() -> Matrix {
    let (o, z) = (Rational::one(), Rational::zero());
    [[z.clone(), o.clone()], [o, z]]
}

fn identity_matrix() -> Matrix {
    let (o, z) = (Rational::one(), Rational::zero());
    [[o.clone(), z.clone()], [z, o]]
}

fn eq_vec(report: &mut Report, id: &'static str, lhs: &Vector, rhs: &Vector) {
    report.eq_pair(id, (&lhs.0, &lhs.1), (&rhs.0, &rhs.1));
}

fn eq_matrix(report: &mut Report, id: &'static str, lhs: &Matrix, rhs: &Matrix) {
    report.eq_all(id, lhs.as_flattened(), rhs.as_flattened());
}

/// Checks the full suite with `gamma` defaulting to the complement of `b`.
pub fn check_aux_lemmas(p: &AuxParams, b: &HeronAngle) -> Report {
    check_aux_lemmas_with(p, b, &b.complement())
}

/// `gamma` is the third angle in the sine-difference forms.
pub fn check_aux_lemmas_with(p: &AuxParams, b: &HeronAngle, gamma: &HeronAngle) -> Report {
    let mut report = Report::new();
    aux_lemmas_into(&mut report, p, b, gamma);
    report
}

pub fn aux_lemmas_into(report: &mut Report, p: &AuxParams, b: &HeronAngle, gamma: &HeronAngle) {
    let a = &p.angle;
    let q = &p.q;
    let one = Rational::one();
    let (wp, wm) = (a.omega_plus(), a.omega_minus());
    let x = hkmn(p);
    let xb = hkmn(&p.at(b.clone()));

    // Matrix forms.
    let ra = a.rotation();
    eq_vec(report, "aux-matrix-hn", &x.hn(), &ra.apply(&(&one - q, &one + q)));
    eq_vec(report, "aux-matrix-km", &x.km(), &ra.apply(&(&one + q, &one - q)));
    eq_vec(report, "aux-matrix-hn-omega", &x.hn(), &(&wm - &wp * q, &wp + &wm * q));
    eq_vec(report, "aux-matrix-km-omega", &x.km(), &(&wm + &wp * q, &wp - &wm * q));

    // Swap matrix.
    let t = swap_matrix();
    let r = rot_matrix(a);
    eq_matrix(report, "aux-swap-square", &mat_mul(&t, &t), &identity_matrix());
    eq_matrix(
        report,
        "aux-swap-conjugate",
        &mat_mul(&mat_mul(&t, &r), &t),
        &rot_matrix(&a.neg()),
    );
    let v = x.hn();
    let tv = (&t[0][0] * &v.0 + &t[0][1] * &v.1, &t[1][0] * &v.0 + &t[1][1] * &v.1);
    eq_vec(report, "aux-swap-vector", &tv, &(v.1.clone(), v.0.clone()));
    let (c2, s2) = (a.cos2(), a.sin2());
    eq_matrix(
        report,
        "aux-swap-reflection",
        &mat_mul(&mat_mul(&r, &t), &rot_matrix(&a.neg())),
        &[[-&s2, c2.clone()], [c2.clone(), s2.clone()]],
    );

    let twoq = &two() * q;
    report.eq("aux-l1-hn", &(&x.h * &wm + &x.n * &wp), &two());
    report.eq("aux-l1-km", &(&x.k * &wm + &x.m * &wp), &two());
    report.eq("aux-l1-nh", &(&x.n * &wm - &x.h * &wp), &twoq);
    report.eq("aux-l1-km-q", &(&x.k * &wp - &x.m * &wm), &twoq);

    let sum = hkmn(&p.at(a.add(b)));
    let rb = b.rotation();
    eq_vec(report, "aux-l2-hn-a", &sum.hn(), &ra.apply(&xb.hn()));
    eq_vec(report, "aux-l2-hn-b", &sum.hn(), &rb.apply(&x.hn()));
    eq_vec(report, "aux-l2-km-a", &sum.km(), &ra.apply(&xb.km()));
    eq_vec(report, "aux-l2-km-b", &sum.km(), &rb.apply(&x.km()));

    let bar = hkmn(&p.at(a.complement()));
    report.eq("aux-l3-h", &bar.h, &-&x.k);
    report.eq("aux-l3-n", &bar.n, &x.m);

    let r2 = a.double().rotation();
    eq_vec(report, "aux-l4-hn", &x.hn(), &r2.apply(&(x.m.clone(), x.k.clone())));
    eq_vec(report, "aux-l4-km", &x.km(), &r2.apply(&(x.n.clone(), x.h.clone())));

    let norm = &two() * (&one + q * q);
    report.eq("aux-l5-hn-norm", &(&x.h * &x.h + &x.n * &x.n), &norm);
    report.eq("aux-l5-km-norm", &(&x.k * &x.k + &x.m * &x.m), &norm);
    report.eq("aux-l5-cross", &(&x.k * &x.n - &x.h * &x.m), &(&two() * &twoq));
    report.eq("aux-l5-cos2", &(&x.k * &x.n + &x.h * &x.m), &(&norm * &c2));
    let ag = hkmn(&p.at(a.add(gamma)));
    let sine = &two() * &twoq * gamma.sub(b).sin();
    report.eq("aux-l5-kh-sine", &(&ag.k * &sum.h - &sum.k * &ag.h), &sine);
    report.eq("aux-l5-nm-sine", &(&sum.n * &ag.m - &ag.n * &sum.m), &sine);

    let (ca, sa) = (a.cos(), a.sin());
    report.eq("aux-l6-k-plus-h", &(&x.k + &x.h), &(&two() * &wm));
    report.eq("aux-l6-k-minus-h", &(&x.k - &x.h), &(&twoq * &wp));
    report.eq("aux-l6-n-plus-m", &(&x.n + &x.m), &(&two() * &wp));
    report.eq("aux-l6-n-minus-m", &(&x.n - &x.m), &(&twoq * &wm));
    report.eq("aux-l6-m-plus-h", &(&x.m + &x.h), &(&two() * ca * (&one - q)));
    report.eq("aux-l6-m-minus-h", &(&x.m - &x.h), &(&two() * sa * (&one + q)));
    report.eq("aux-l6-n-plus-k", &(&x.n + &x.k), &(&two() * ca * (&one + q)));
    report.eq("aux-l6-n-minus-k", &(&x.n - &x.k), &(&two() * sa * (&one - q)));

    psi_identities_into(report, p, b, &x, &xb);
}

const PSI_IDS: [&str; 24] = [
    "aux-sigma-delta-plus",
    "aux-sigma-delta-minus",
    "aux-sigma-psi-plus-square",
    "aux-sigma-psi-minus-square",
    "aux-sigma-psi-product",
    "aux-sigma-psi-signs",
    "aux-shift-psi-plus",
    "aux-shift-psi-minus",
    "aux-shift-delta-plus-square",
    "aux-shift-delta-minus-square",
    "aux-shift-delta-product",
    "aux-shift-delta-signs",
    "aux-l7-m-minus-n",
    "aux-l7-m-plus-n",
    "aux-l7-n-minus-m",
    "aux-l7-n-plus-m",
    "aux-l7-k-plus-h",
    "aux-l7-k-minus-h",
    "aux-l7-h-plus-k",
    "aux-l7-h-minus-k",
    "aux-psi-tan",
    "aux-psi-range",
    "aux-psi-cos-sign",
    "aux-psi-sin-sign",
];

fn square(x: &QuadExt) -> Option<Rational> {
    (x * x).to_rational()
}

fn product(x: &QuadExt, y: &QuadExt) -> Option<Rational> {
    (x * y).to_rational()
}

/// Identities involving `s = (a+b)/2`, `d = (a-b)/2` and `psi = pi/4 - s`.
///
/// `w+(s) = sqrt2 cos psi` relates numbers in `Q(sqrt(1 + tan^2 s))` to
/// numbers in `Q(sqrt(1 + tan^2 psi))`. Those are compared through their
/// squares and cross products, which are rational, together with signs.
/// Lemma-7-type relations have both sides in the `psi` field and compare
/// directly.
fn psi_identities_into(report: &mut Report, p: &AuxParams, b: &HeronAngle, x: &AuxQuad, xb: &AuxQuad) {
    let a = &p.angle;
    let one = Rational::one();
    let Ok(half) = HalfAngles::new(a, b) else {
        PSI_IDS.iter().for_each(|id| report.flag(id));
        return;
    };
    let Some(psi) = QuarterOffset::new(&half.tan_sigma) else {
        PSI_IDS.iter().for_each(|id| report.flag(id));
        return;
    };
    let shift = &one + &half.tan_sigma;
    let (cos_ap, sin_ap) = psi.shifted(a);
    let QuarterOffset {
        tan: tan_psi,
        cos: cos_psi,
        sin: sin_psi,
    } = psi;

    let sq2 = &two();
    let (wp_s, wm_s) = (half.omega_plus_sigma(), half.omega_minus_sigma());
    let (cd, sd) = (&half.cos_delta, &half.sin_delta);
    let (wpa, wma) = (a.omega_plus(), a.omega_minus());

    // (w+(s), w-(s)) = R(d) (w+(a), w-(a)).
    let e = |q: &Rational| QuadExt::embed(q.clone(), cd);
    report.eq_ext("aux-sigma-delta-plus", &wp_s, &(&(cd * &e(&wpa)) - &(sd * &e(&wma))));
    report.eq_ext("aux-sigma-delta-minus", &wm_s, &(&(sd * &e(&wpa)) + &(cd * &e(&wma))));
    // ... = R(psi) (sqrt2, 0).
    let opt_eq = |report: &mut Report, id, l: Option<Rational>, r: Option<Rational>| match (l, r) {
        (Some(l), Some(r)) => report.eq(id, &l, &r),
        _ => report.record(id, false),
    };
    opt_eq(
        report,
        "aux-sigma-psi-plus-square",
        square(&wp_s),
        square(&cos_psi).map(|c| sq2 * c),
    );
    opt_eq(
        report,
        "aux-sigma-psi-minus-square",
        square(&wm_s),
        square(&sin_psi).map(|s| sq2 * s),
    );
    opt_eq(
        report,
        "aux-sigma-psi-product",
        product(&wp_s, &wm_s),
        product(&cos_psi, &sin_psi).map(|s| sq2 * s),
    );
    report.record(
        "aux-sigma-psi-signs",
        wp_s.signum() == cos_psi.signum() && wm_s.signum() == sin_psi.signum(),
    );

    // a + psi, in the psi field.
    let ep = |q: &Rational| QuadExt::embed(q.clone(), &cos_psi);
    let (wp_ap, wm_ap) = (&cos_ap + &sin_ap, &cos_ap - &sin_ap);
    // (w+(a+psi), w-(a+psi)) = R(-psi) (w+(a), w-(a)).
    report.eq_ext(
        "aux-shift-psi-plus",
        &wp_ap,
        &(&(&cos_psi * &ep(&wpa)) + &(&sin_psi * &ep(&wma))),
    );
    report.eq_ext(
        "aux-shift-psi-minus",
        &wm_ap,
        &(&(&cos_psi * &ep(&wma)) - &(&sin_psi * &ep(&wpa))),
    );
    // ... = R(-d) (sqrt2, 0) = (sqrt2 cos d, -sqrt2 sin d).
    opt_eq(
        report,
        "aux-shift-delta-plus-square",
        square(&wp_ap),
        square(cd).map(|c| sq2 * c),
    );
    opt_eq(
        report,
        "aux-shift-delta-minus-square",
        square(&wm_ap),
        square(sd).map(|s| sq2 * s),
    );
    opt_eq(
        report,
        "aux-shift-delta-product",
        product(&wp_ap, &wm_ap),
        product(cd, sd).map(|s| -(sq2 * s)),
    );
    report.record(
        "aux-shift-delta-signs",
        wp_ap.signum() == cd.signum() && wm_ap.signum() == sd.signum().reverse(),
    );

    // Both sides in the psi field.
    let [h_ap, k_ap, m_ap, n_ap] = hkmn_ext(&p.q, &cos_ap, &sin_ap);
    let two_s = sin_psi.scale(sq2);
    let two_c = cos_psi.scale(sq2);
    report.eq_ext("aux-l7-m-minus-n", &ep(&(&x.m - &xb.n)), &-&(&two_s * &k_ap));
    report.eq_ext("aux-l7-m-plus-n", &ep(&(&x.m + &xb.n)), &(&two_c * &m_ap));
    report.eq_ext("aux-l7-n-minus-m", &ep(&(&x.n - &xb.m)), &-&(&two_s * &h_ap));
    report.eq_ext("aux-l7-n-plus-m", &ep(&(&x.n + &xb.m)), &(&two_c * &n_ap));
    report.eq_ext("aux-l7-k-plus-h", &ep(&(&x.k + &xb.h)), &(&two_s * &m_ap));
    report.eq_ext("aux-l7-k-minus-h", &ep(&(&x.k - &xb.h)), &(&two_c * &k_ap));
    report.eq_ext("aux-l7-h-plus-k", &ep(&(&x.h + &xb.k)), &(&two_s * &n_ap));
    report.eq_ext("aux-l7-h-minus-k", &ep(&(&x.h - &xb.k)), &(&two_c * &h_ap));

    // psi itself: tan psi = w-(s) / w+(s), and -pi/4 < psi < pi/4 for
    // first-quadrant inputs.
    let ratio = wm_s.checked_div(&wp_s).ok().and_then(|r| r.to_rational());
    report.record("aux-psi-tan", ratio.as_ref() == Some(&tan_psi));
    let first = a.in_first_quadrant() && b.in_first_quadrant();
    report.record("aux-psi-range", !first || tan_psi.abs() < one);
    report.record("aux-psi-cos-sign", cos_psi.signum() == shift.cmp(&Rational::zero()));
    report.record(
        "aux-psi-sin-sign",
        sin_psi.signum() == (&tan_psi * &shift).cmp(&Rational::zero()),
    );
}

/// The Euler angle `pi/4 - s` for an Euler angle `s` in `(-pi/2, pi/2)`,
/// so that `w+(s) = sqrt2 cos`, `w-(s) = sqrt2 sin`. Cosine and sine lie in
/// `Q(sqrt(1 + tan^2))`; `None` at `s = -pi/4`.
#[derive(Debug, Clone)]
pub struct QuarterOffset {
    pub tan: Rational,
    pub cos: QuadExt,
    pub sin: QuadExt,
}

impl QuarterOffset {
    pub fn new(tan_sigma: &Rational) -> Option<Self> {
        let one = Rational::one();
        let shift = &one + tan_sigma;
        if shift.is_zero() {
            return None;
        }
        let tan = (&one - tan_sigma) / &shift;
        let (mut cos, mut sin) = EulerAngle::new(tan.clone()).cos_sin();
        if shift.is_negative() {
            // s below -pi/4 puts the offset in the left half-plane.
            cos = -&cos;
            sin = -&sin;
        }
        Some(QuarterOffset { tan, cos, sin })
    }

    /// Cosine and sine of `a + offset`.
    pub fn shifted(&self, a: &HeronAngle) -> (QuadExt, QuadExt) {
        (
            &self.cos.scale(a.cos()) - &self.sin.scale(a.sin()),
            &self.cos.scale(a.sin()) + &self.sin.scale(a.cos()),
        )
    }
}

/// Generator of the Euler angle `psi = pi/4 - (a+b)/2`, i.e. its tangent.
pub fn tan_psi(a: &HeronAngle, b: &HeronAngle) -> Result<Rational> {
    let t = add_generators(&Generator(a.generator()?), &Generator(b.generator()?))?.0;
    let den = Rational::one() + &t;
    if den.is_zero() {
        return Err(Error::DivisionByZero("tan psi at (a+b)/2 = -pi/4"));
    }
    Ok((Rational::one() - t) / den)
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct QuadraticParam {
    pub alpha: HeronAngle,
    #[serde(with = "serde_rational")]
    pub lambda: Rational,
    #[serde(with = "serde_rational")]
    pub m_plus: Rational,
    #[serde(with = "serde_rational")]
    pub m_minus: Rational,
    #[serde(with = "serde_rational")]
    pub d: Rational,
    #[serde(with = "serde_rational")]
    pub delta: Rational,
}

impl QuadraticParam {
    /// `delta^2 = 1 + 4 sin(2a) D`.
    pub fn discriminant_holds(&self) -> bool {
        let four = Rational::from_integer(4.into());
        &self.delta * &self.delta == Rational::one() + four * self.alpha.sin2() * &self.d
    }
}

/// `(M^2 - 1) sin 2a + 2 M cos 2a - 4D`; zero exactly at the roots.
pub fn quadratic_residual(alpha: &HeronAngle, m: &Rational, d: &Rational) -> Rational {
    let four = Rational::from_integer(4.into());
    (m * m - Rational::one()) * alpha.sin2() + two() * m * alpha.cos2() - four * d
}

/// Both roots `M = (-cos 2a +- delta) / sin 2a`, the `+` root first.
pub fn solve_quadratic_m(alpha: &HeronAngle, d: &Rational) -> Result<(Rational, Rational)> {
    let s2 = alpha.sin2();
    if s2.is_zero() {
        return Err(Error::Degenerate("sin 2a = 0: equation is not quadratic".into()));
    }
    let four = Rational::from_integer(4.into());
    let disc = Rational::one() + four * &s2 * d;
    if disc.is_negative() {
        return Err(Error::NoRealRoot(format!("delta^2 = {disc} < 0")));
    }
    let delta = rational_sqrt(&disc).ok_or_else(|| Error::NotRational(format!("delta^2 = {disc} is not a square")))?;
    let c2 = alpha.cos2();
    let plus = (&delta - &c2) / &s2;
    let minus = (-&delta - &c2) / &s2;
    debug_assert!(quadratic_residual(alpha, &plus, d).is_zero());
    debug_assert!(quadratic_residual(alpha, &minus, d).is_zero());
    Ok((plus, minus))
}

/// Rational solutions of the quadratic, parameterized by `lambda`.
pub fn param_m(alpha: &HeronAngle, lambda: &Rational) -> Result<QuadraticParam> {
    let s2 = alpha.sin2();
    let shift = Rational::one() + lambda * &s2;
    if shift.is_zero() {
        return Err(Error::Domain(format!("1 + lambda sin 2a = 0 at lambda={lambda}")));
    }
    let tan = alpha.tan()?;
    let cot = alpha.cot()?;
    let twice = &two() * lambda;
    Ok(QuadraticParam {
        alpha: alpha.clone(),
        lambda: lambda.clone(),
        m_plus: &twice + tan,
        m_minus: -&twice - cot,
        d: lambda * &shift,
        delta: Rational::one() + &twice * &s2,
    })
}

/// Inverse of [`param_m`]: `lambda = (M+ - tan a) / 2`.
pub fn lambda_of(alpha: &HeronAngle, m_plus: &Rational) -> Result<Rational> {
    Ok((m_plus - alpha.tan()?) / two())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::{int, rat};

    fn h(n: i64, d: i64) -> HeronAngle {
        HeronAngle::from_generator(&rat(n, d))
    }

    fn quad(h: Rational, k: Rational, m: Rational, n: Rational) -> AuxQuad {
        AuxQuad { h, k, m, n }
    }

    #[test]
    fn hkmn_examples() {
        assert_eq!(
            hkmn(&AuxParams::new(rat(1, 7), h(1, 3))),
            quad(int(0), rat(2, 5), rat(48, 35), rat(10, 7))
        );
        let a = h(2, 9);
        let (wp, wm) = (a.omega_plus(), a.omega_minus());
        assert_eq!(hkmn(&AuxParams::new(int(0), a)), quad(wm.clone(), wm, wp.clone(), wp));
        assert_eq!(
            hkmn(&AuxParams::new(int(1), HeronAngle::zero())),
            quad(int(0), int(2), int(0), int(2))
        );
    }

    #[test]
    fn lemma_suite_holds_for_example() {
        let p = AuxParams::new(rat(1, 7), h(1, 3));
        let r = check_aux_lemmas(&p, &h(1, 2));
        assert!(r.all_hold(), "{r}");
        assert!(r.len() >= 20);
        assert!(r.checks.iter().all(|c| c.status == crate::report::Status::Holds));
    }

    #[test]
    fn lemma_suite_with_equal_angles() {
        for q in [rat(1, 7), rat(-3, 2), int(0)] {
            let a = h(2, 5);
            let r = check_aux_lemmas(&AuxParams::new(q, a.clone()), &a);
            assert!(r.all_hold(), "{r}");
        }
    }

    #[test]
    fn lemma_suite_with_complement_partner() {
        let a = h(1, 3);
        let p = AuxParams::new(rat(1, 7), a.clone());
        let r = check_aux_lemmas(&p, &a.complement());
        assert!(r.all_hold(), "{r}");
        let x = hkmn(&p);
        let bar = hkmn(&p.at(a.complement()));
        assert_eq!(bar.h, -x.k);
    }

    #[test]
    fn lemma_suite_outside_first_quadrant() {
        let p = AuxParams::new(rat(5, 3), h(-4, 3));
        let r = check_aux_lemmas_with(&p, &h(7, 2), &h(-1, 6));
        assert!(r.all_hold(), "{r}");
    }

    #[test]
    fn lemma_suite_detects_injected_fault() {
        let p = AuxParams::new(rat(1, 7), h(1, 3));
        let mut r = Report::with_fault(Some("aux-l7-k-minus-h"));
        aux_lemmas_into(&mut r, &p, &h(1, 2), &h(1, 4));
        assert_eq!(r.first_failure(), Some("aux-l7-k-minus-h"));
        let mut r = Report::with_fault(Some("aux-swap-reflection"));
        aux_lemmas_into(&mut r, &p, &h(1, 2), &h(1, 4));
        assert_eq!(r.first_failure(), Some("aux-swap-reflection"));
    }

    #[test]
    fn tan_psi_example() {
        // a+b has generator 1, so s = pi/4 and psi = 0.
        assert_eq!(tan_psi(&h(1, 3), &h(1, 2)).unwrap(), int(0));
        assert_eq!(tan_psi(&HeronAngle::zero(), &HeronAngle::zero()).unwrap(), int(1));
    }

    #[test]
    fn solve_quadratic_examples() {
        let a = h(1, 3);
        let (plus, minus) = solve_quadratic_m(&a, &rat(11637, 39200)).unwrap();
        assert_eq!(plus, rat(69, 56));
        assert!(quadratic_residual(&a, &minus, &rat(11637, 39200)).is_zero());
        assert_eq!(solve_quadratic_m(&a, &int(1)).unwrap().0, int(2));
        assert_eq!(
            solve_quadratic_m(&a, &int(0)).unwrap(),
            (a.tan().unwrap(), -a.cot().unwrap())
        );
    }

    #[test]
    fn solve_quadratic_errors() {
        let a = h(1, 3);
        assert!(matches!(
            solve_quadratic_m(&HeronAngle::zero(), &int(1)),
            Err(Error::Degenerate(_))
        ));
        assert!(matches!(solve_quadratic_m(&a, &int(-1)), Err(Error::NoRealRoot(_))));
        assert!(matches!(solve_quadratic_m(&a, &rat(1, 2)), Err(Error::NotRational(_))));
    }

    #[test]
    fn param_examples() {
        let a = h(1, 3);
        let p = param_m(&a, &rat(27, 112)).unwrap();
        assert_eq!(p.m_plus, rat(69, 56));
        assert_eq!(p.d, rat(11637, 39200));
        assert_eq!(p.delta, rat(256, 175));
        assert!(p.discriminant_holds());
        assert_eq!(lambda_of(&a, &p.m_plus).unwrap(), rat(27, 112));
        let z = param_m(&a, &int(0)).unwrap();
        assert_eq!((z.m_plus, z.m_minus, z.d), (rat(3, 4), rat(-4, 3), int(0)));
    }

    #[test]
    fn param_rejects_singular_lambda() {
        // sin 2a = 24/25, so lambda = -25/24 is excluded.
        assert!(param_m(&h(1, 3), &rat(-25, 24)).is_err());
    }
}
