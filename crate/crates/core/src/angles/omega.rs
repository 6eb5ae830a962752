//! The omega functions `w+(a) = cos a + sin a`, `w-(a) = cos a - sin a`
//! and their identity system.

use num_traits::One;

use super::{add_generators, EulerAngle, Generator, HeronAngle};
use crate::error::Result;
use crate::exactnum::{QuadExt, Rational};
use crate::report::Report;

pub fn omega(a: &HeronAngle) -> (Rational, Rational) {
    (a.omega_plus(), a.omega_minus())
}

/// Half-sum `s = (a+b)/2` and half-difference `d = (a-b)/2` of two Heron
/// angles.
///
/// `tan s` is the generator of `a+b`, so `s` is an Euler angle. Its cosine
/// and sine are carried in `Q(sqrt(1 + tan^2 s))`; `d = a - s` is then
/// computed by exact angle subtraction in the same extension.
#[derive(Debug, Clone)]
pub struct HalfAngles {
    pub tan_sigma: Rational,
    pub cos_sigma: QuadExt,
    pub sin_sigma: QuadExt,
    pub cos_delta: QuadExt,
    pub sin_delta: QuadExt,
}

impl HalfAngles {
    pub fn new(a: &HeronAngle, b: &HeronAngle) -> Result<Self> {
        let tan_sigma = add_generators(&Generator(a.generator()?), &Generator(b.generator()?))?.0;
        let (cos_sigma, sin_sigma) = EulerAngle::new(tan_sigma.clone()).cos_sin();
        let cos_delta = &cos_sigma.scale(a.cos()) + &sin_sigma.scale(a.sin());
        let sin_delta = &cos_sigma.scale(a.sin()) - &sin_sigma.scale(a.cos());
        Ok(HalfAngles {
            tan_sigma,
            cos_sigma,
            sin_sigma,
            cos_delta,
            sin_delta,
        })
    }

    pub fn omega_plus_sigma(&self) -> QuadExt {
        &self.cos_sigma + &self.sin_sigma
    }

    pub fn omega_minus_sigma(&self) -> QuadExt {
        &self.cos_sigma - &self.sin_sigma
    }

    pub fn omega_plus_delta(&self) -> QuadExt {
        &self.cos_delta + &self.sin_delta
    }

    pub fn omega_minus_delta(&self) -> QuadExt {
        &self.cos_delta - &self.sin_delta
    }

    fn embed(&self, q: Rational) -> QuadExt {
        QuadExt::embed(q, &self.cos_sigma)
    }
}

/// Evaluates both sides of every omega identity for the pair `(a, b)`.
pub fn check_omega_identities(a: &HeronAngle, b: &HeronAngle) -> Report {
    let mut report = Report::new();
    omega_identities_into(&mut report, a, b);
    report
}

pub fn omega_identities_into(report: &mut Report, a: &HeronAngle, b: &HeronAngle) {
    let two = Rational::from_integer(2.into());
    let one = Rational::one();
    let (wpa, wma) = omega(a);
    let (wpb, wmb) = omega(b);

    let neg = a.neg();
    report.eq("omega-neg-plus", &neg.omega_plus(), &wma);
    report.eq("omega-neg-minus", &neg.omega_minus(), &wpa);
    report.eq("omega-square-sum", &(&wpa * &wpa + &wma * &wma), &two);
    report.eq("omega-product-cos2", &(&wpa * &wma), &a.cos2());
    report.eq("omega-plus-square", &(&wpa * &wpa), &(&one + a.sin2()));
    report.eq("omega-minus-square", &(&wma * &wma), &(&one - a.sin2()));

    // 2s = a+b and 2d = a-b are Heron whenever a and b are.
    let sum = a.add(b);
    let diff = a.sub(b);
    report.eq("omega-pp-product", &(&wpa * &wpb), &(diff.cos() + sum.sin()));
    report.eq("omega-mm-product", &(&wma * &wmb), &(diff.cos() - sum.sin()));
    report.eq("omega-pm-product", &(&wpa * &wmb), &(sum.cos() + diff.sin()));

    let (wps, wms) = omega(&sum);
    let rotated = b.rotation().apply(&(wps.clone(), wms.clone()));
    report.eq_pair("omega-rotation-sum", (&rotated.0, &rotated.1), (&wpa, &wma));
    report.eq("omega-plus-sum-a", &wps, &(b.cos() * &wpa + b.sin() * &wma));
    report.eq("omega-plus-sum-b", &wps, &(a.cos() * &wpb + a.sin() * &wmb));
    report.eq("omega-minus-sum-a", &wms, &(-b.sin() * &wpa + b.cos() * &wma));
    report.eq("omega-minus-sum-b", &wms, &(-a.sin() * &wpb + a.cos() * &wmb));

    match HalfAngles::new(a, b) {
        Ok(h) => {
            let e = |q: &Rational| h.embed(q.clone());
            let twice = |x: &QuadExt, y: &QuadExt| (x * y).scale(&two);
            let (cd, sd, cs, ss) = (&h.cos_delta, &h.sin_delta, &h.cos_sigma, &h.sin_sigma);
            let (wp_s, wm_s) = (h.omega_plus_sigma(), h.omega_minus_sigma());
            let (wp_d, wm_d) = (h.omega_plus_delta(), h.omega_minus_delta());
            report.eq_ext("half-plus-plus-sum", &e(&(&wpa + &wpb)), &twice(cd, &wp_s));
            report.eq_ext("half-plus-plus-diff", &e(&(&wpa - &wpb)), &twice(sd, &wm_s));
            report.eq_ext("half-minus-minus-sum", &e(&(&wma + &wmb)), &twice(cd, &wm_s));
            report.eq_ext("half-minus-minus-diff", &e(&(&wma - &wmb)), &-&twice(sd, &wp_s));
            report.eq_ext("half-plus-minus-sum", &e(&(&wpa + &wmb)), &twice(cs, &wp_d));
            report.eq_ext("half-plus-minus-diff", &e(&(&wpa - &wmb)), &twice(ss, &wm_d));
            report.eq_ext("half-minus-plus-sum", &e(&(&wma + &wpb)), &twice(cs, &wm_d));
            report.eq_ext("half-minus-plus-diff", &e(&(&wma - &wpb)), &-&twice(ss, &wp_d));
        }
        Err(_) => {
            // a+b = pi: the half-sum has no finite tangent.
            for id in HALF_ANGLE_IDS {
                report.flag(id);
            }
        }
    }

    let double = a.double().rotation().apply(&(wpa.clone(), wma.clone()));
    report.eq_pair("omega-double-rotation", (&double.0, &double.1), (&wma, &wpa));
}

const HALF_ANGLE_IDS: [&str; 8] = [
    "half-plus-plus-sum",
    "half-plus-plus-diff",
    "half-minus-minus-sum",
    "half-minus-minus-diff",
    "half-plus-minus-sum",
    "half-plus-minus-diff",
    "half-minus-plus-sum",
    "half-minus-plus-diff",
];

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::{int, rat};

    fn h(n: i64, d: i64) -> HeronAngle {
        HeronAngle::from_generator(&rat(n, d))
    }

    #[test]
    fn omega_examples() {
        assert_eq!(omega(&h(1, 3)), (rat(7, 5), rat(1, 5)));
        assert_eq!(omega(&HeronAngle::zero()), (int(1), int(1)));
        assert_eq!(omega(&HeronAngle::right()), (int(1), int(-1)));
    }

    #[test]
    fn identities_hold_for_example_pair() {
        let r = check_omega_identities(&h(1, 3), &h(1, 2));
        assert!(r.all_hold(), "{r}");
        assert_eq!(r.len(), 23);
    }

    #[test]
    fn identities_hold_for_equal_angles() {
        let a = h(2, 7);
        let r = check_omega_identities(&a, &a);
        assert!(r.all_hold(), "{r}");
    }

    #[test]
    fn half_angle_with_zero_partner() {
        // b = 0: s = d = a/2, so w+(a) + 1 = 2 cos(a/2) w+(a/2).
        let a = h(1, 3);
        let r = check_omega_identities(&a, &HeronAngle::zero());
        assert!(r.all_hold(), "{r}");
        // Doubled input keeps the half angle Heron.
        let r = check_omega_identities(&a.double(), &HeronAngle::zero());
        assert!(r.all_hold(), "{r}");
        let hh = HalfAngles::new(&a.double(), &HeronAngle::zero()).unwrap();
        assert_eq!(hh.cos_sigma.to_rational(), Some(rat(4, 5)));
    }

    #[test]
    fn angles_summing_to_pi_are_flagged() {
        let a = h(1, 3);
        let b = h(3, 1);
        let r = check_omega_identities(&a, &b);
        assert!(r.all_hold());
        assert_eq!(r.status_of("half-plus-plus-sum"), Some(crate::report::Status::Flagged));
    }

    #[test]
    fn injected_fault_is_reported() {
        let mut r = Report::with_fault(Some("omega-pm-product"));
        omega_identities_into(&mut r, &h(1, 3), &h(1, 2));
        assert_eq!(r.first_failure(), Some("omega-pm-product"));
    }
}
