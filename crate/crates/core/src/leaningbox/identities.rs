//! Explicit identities relating a leaning box to the auxiliary functions of
//! its interior-parallelogram angles.
//!
//! With `Q = s3 s4` and `a, a1, a2` the first angles of the three
//! parallelograms, the angles `psi = pi/4 - (a+a1)/2` and
//! `phi = pi/4 - (a+a2)/2` are Euler angles. Quantities involving one of them
//! live in `Q(sqrt(1 + tan^2))` of that angle and compare there exactly.

use num_traits::{One, Zero};

use super::{interior_generators, two, FamilyPoint, ScaledBox};
use crate::angles::{add_generators, EulerAngle, Generator, HeronAngle};
use crate::auxfn::{hkmn, hkmn_ext, AuxParams, AuxQuad, QuarterOffset};
use crate::exactnum::{QuadExt, Rational};
use crate::report::Report;

const PSI_IDS: [&str; 13] = [
    "psi-k-shift",
    "psi-h-shift",
    "psi-m-shift",
    "psi-n-shift",
    "psi-row-zero",
    "psi-row-u1",
    "psi-row-s2",
    "psi-row-inv-s2",
    "psi-n-redundant",
    "psi-k-expanded",
    "psi-n-expanded",
    "psi-h-expanded",
    "psi-m-expanded",
];

const PHI_IDS: [&str; 9] = [
    "phi-k-shift",
    "phi-h-shift",
    "phi-m-shift",
    "phi-n-shift",
    "phi-row-zero",
    "phi-row-u2",
    "phi-row-s1",
    "phi-row-inv-s1",
    "phi-n-redundant",
];

struct Ctx<'a> {
    p: AuxParams,
    s: [Rational; 4],
    u1: &'a Rational,
    u2: &'a Rational,
}

impl Ctx<'_> {
    fn q(&self) -> &Rational {
        &self.p.q
    }

    fn aux(&self, a: &HeronAngle) -> AuxQuad {
        hkmn(&AuxParams::new(self.q().clone(), a.clone()))
    }
}

fn offset(m: &Rational, other: &Rational) -> Option<QuarterOffset> {
    let t = add_generators(&Generator(m.clone()), &Generator(other.clone())).ok()?;
    QuarterOffset::new(&t.0)
}

/// Evaluates every explicit identity for the box `s` at the family point
/// `p`. The generators come from the box (`s_k = v_k - u_k`) and the angle
/// `a` from the point, so a box inconsistent with `p` shows up as failures.
pub fn explicit_identity_suite(s: &ScaledBox, p: &FamilyPoint) -> Report {
    let mut r = Report::new();
    explicit_identities_into(&mut r, s, p);
    r
}

pub fn explicit_identities_into(r: &mut Report, s: &ScaledBox, p: &FamilyPoint) {
    let quad = s.generators();
    let a = &p.alpha;
    let (m, m1, m2) = interior_generators(s);
    r.record("generator-matches-box", m == p.m);

    let ctx = Ctx {
        p: AuxParams::new(quad.q(), a.clone()),
        s: quad.as_array().map(Rational::clone),
        u1: &s.u1,
        u2: &s.u2,
    };
    let [s1, s2, s3, s4] = &ctx.s;
    let q = ctx.q();
    let four_q = Rational::from_integer(4.into()) * q;
    let a1 = HeronAngle::from_generator(&m1);
    let a2 = HeronAngle::from_generator(&m2);
    let (x, x1, x2) = (ctx.aux(a), ctx.aux(&a1), ctx.aux(&a2));

    // Each parallelogram expressed through H, K, M, N of its angle.
    r.eq("rep-face-u1", &(&four_q * &s.u1), &(s4 * &x.m + s3 * &x.h));
    r.eq("rep-face-u2", &(&four_q * &s.u2), &(s3 * &x.n - s4 * &x.k));
    r.eq("rep-inner-u1", &(&four_q * &s.u1), &(s4 * &x1.n + s3 * &x1.k));
    r.eq("rep-inner-v2", &(&four_q * &s.v2), &(s3 * &x1.m - s4 * &x1.h));
    r.eq("rep-outer-v1", &(&four_q * &s.v1), &(s4 * &x2.n + s3 * &x2.k));
    r.eq("rep-outer-u2", &(&four_q * &s.u2), &(s3 * &x2.m - s4 * &x2.h));

    // Differences and sums of the face and inner representations.
    let eight_q = &two() * &four_q;
    let zero = Rational::zero();
    r.eq("cmp-inner-zero", &(s4 * (&x.m - &x1.n) + s3 * (&x.h - &x1.k)), &zero);
    r.eq(
        "cmp-inner-u1",
        &(s4 * (&x.m + &x1.n) + s3 * (&x.h + &x1.k)),
        &(&eight_q * &s.u1),
    );
    r.eq(
        "cmp-inner-s2",
        &(s4 * (&x.k - &x1.h) - s3 * (&x.n - &x1.m)),
        &(&four_q * s2),
    );
    r.eq(
        "cmp-inner-inv-s2",
        &(s3 * (&x.n + &x1.m) - s4 * (&x.k + &x1.h)),
        &(&four_q / s2),
    );
    r.eq("cmp-outer-zero", &(s3 * (&x.n - &x2.m) - s4 * (&x.k - &x2.h)), &zero);
    r.eq(
        "cmp-outer-u2",
        &(s3 * (&x.n + &x2.m) - s4 * (&x.k + &x2.h)),
        &(&eight_q * &s.u2),
    );
    r.eq(
        "cmp-outer-s1",
        &(s4 * (&x2.n - &x.m) + s3 * (&x2.k - &x.h)),
        &(&four_q * s1),
    );
    r.eq(
        "cmp-outer-inv-s1",
        &(s4 * (&x2.n + &x.m) + s3 * (&x2.k + &x.h)),
        &(&four_q / s1),
    );

    let psi = offset(&m, &m1);
    let phi = offset(&m, &m2);
    match &psi {
        Some(psi) => psi_identities(r, &ctx, psi),
        None => PSI_IDS.iter().for_each(|id| r.flag(id)),
    }
    match &phi {
        Some(phi) => phi_identities(r, &ctx, phi),
        None => PHI_IDS.iter().for_each(|id| r.flag(id)),
    }

    // tan(phi - psi) = s1 s2.
    match (&psi, &phi) {
        (Some(psi), Some(phi)) => {
            let diff = EulerAngle::new(phi.tan.clone()).sub(&EulerAngle::new(psi.tan.clone()));
            r.record(
                "tan-phi-minus-psi",
                diff.map(|d| d.tan() == &(s1 * s2)).unwrap_or(false),
            );
            cross_identity(r, &ctx, psi, phi);
        }
        _ => {
            r.flag("tan-phi-minus-psi");
            r.flag("cross-kh-sine");
            r.flag("cross-kh-cosine");
        }
    }

    // Reduced equations in lambda = tan psi, and their lambda = 0 forms.
    let lambda = psi.as_ref().map_or_else(Rational::zero, |p| p.tan.clone());
    let (wp, wm) = (a.omega_plus(), a.omega_minus());
    r.eq("reduced-first", &(&wm - &lambda * &wp), &(s2 * s3 + &lambda * s2 * s4));
    r.eq(
        "reduced-second",
        &(q * (&wp + &lambda * &wm)),
        &(s2 * s3 - &lambda * s2 * s4),
    );
    r.eq(
        "reduced-third",
        &(&two() * &s.u1 * (&wm - &lambda * &wp) + s4 - &lambda * s3),
        &(s2 * (&wp + &lambda * &wm)),
    );
    let ids = ["family-s2s3-omega", "family-s2s3-q", "family-s2-omega"];
    if lambda.is_zero() {
        r.eq(ids[0], &(s2 * s3), &wm);
        r.eq(ids[1], &(s2 * s3), &(q * &wp));
        r.eq(ids[2], &(s2 * &wp), &(&two() * &s.u1 * &wm + s4));
    } else {
        ids.iter().for_each(|id| r.flag(id));
    }
}

fn psi_identities(r: &mut Report, c: &Ctx, psi: &QuarterOffset) {
    let [_, s2, s3, s4] = &c.s;
    let q = c.q();
    let a = &c.p.angle;
    let (cos_ap, sin_ap) = psi.shifted(a);
    let [h, k, m, n] = hkmn_ext(q, &cos_ap, &sin_ap);
    let (cp, sp) = (&psi.cos, &psi.sin);
    let e = |x: Rational| QuadExt::embed(x, cp);
    let two = two();
    let four_u1 = &two * &two * c.u1;

    r.eq_ext("psi-k-shift", &k, &cp.scale(&(&two * s2 * s3)));
    r.eq_ext("psi-h-shift", &h, &sp.scale(&(&two * s2 * s4)));
    r.eq_ext(
        "psi-m-shift",
        &m,
        &(&cp.scale(&(&four_u1 * s3)) - &sp.scale(&(&two * s3 / s2))),
    );
    r.eq_ext(
        "psi-n-shift",
        &n,
        &(&sp.scale(&(&four_u1 * s4)) + &cp.scale(&(&two * s4 / s2))),
    );

    let two_q = &two * q;
    r.eq_ext(
        "psi-row-zero",
        &(&(&cp.scale(s3) * &h) - &(&sp.scale(s4) * &k)),
        &e(Rational::zero()),
    );
    r.eq_ext(
        "psi-row-u1",
        &(&(&cp.scale(s4) * &m) + &(&sp.scale(s3) * &n)),
        &e(&two * &two_q * c.u1),
    );
    r.eq_ext(
        "psi-row-s2",
        &(&(&cp.scale(s4) * &k) + &(&sp.scale(s3) * &h)),
        &e(&two_q * s2),
    );
    r.eq_ext(
        "psi-row-inv-s2",
        &(&(&cp.scale(s3) * &n) - &(&sp.scale(s4) * &m)),
        &e(&two_q / s2),
    );
    let four_q = &two * &two_q;
    let recomputed = (&e(four_q) + &(&h * &m)).checked_div(&k);
    r.record("psi-n-redundant", recomputed.map(|x| x == n).unwrap_or(false));

    // H, K, M, N of `a` itself from psi; only squares and products of the
    // psi cosine and sine enter, so both sides are rational.
    let t = &psi.tan;
    let sec2 = Rational::one() + t * t;
    let (cc, sc, ss) = (Rational::one() / &sec2, t / &sec2, t * t / &sec2);
    let x = c.aux(a);
    let two_u1 = &two * c.u1;
    r.eq(
        "psi-k-expanded",
        &x.k,
        &(&two * s3 * (s2 * &cc + &two_u1 * &sc - &ss / s2)),
    );
    r.eq(
        "psi-n-expanded",
        &x.n,
        &(&two * s4 * (-(s2 * &ss) + &two_u1 * &sc + &cc / s2)),
    );
    r.eq(
        "psi-h-expanded",
        &x.h,
        &(&two * s4 * (s2 * &sc + &two_u1 * &ss + &sc / s2)),
    );
    r.eq(
        "psi-m-expanded",
        &x.m,
        &(&two * s3 * (-(s2 * &sc) + &two_u1 * &cc - &sc / s2)),
    );
}

fn phi_identities(r: &mut Report, c: &Ctx, phi: &QuarterOffset) {
    let [s1, _, s3, s4] = &c.s;
    let q = c.q();
    let (cos_ap, sin_ap) = phi.shifted(&c.p.angle);
    let [h, k, m, n] = hkmn_ext(q, &cos_ap, &sin_ap);
    let (cf, sf) = (&phi.cos, &phi.sin);
    let e = |x: Rational| QuadExt::embed(x, cf);
    let two = two();
    let four_u2 = &two * &two * c.u2;

    r.eq_ext("phi-k-shift", &k, &sf.scale(&(&two * s1 * s3)));
    r.eq_ext("phi-h-shift", &h, &-&cf.scale(&(&two * s1 * s4)));
    r.eq_ext(
        "phi-m-shift",
        &m,
        &(&cf.scale(&(&two * s3 / s1)) - &sf.scale(&(&four_u2 * s3))),
    );
    r.eq_ext(
        "phi-n-shift",
        &n,
        &(&cf.scale(&(&four_u2 * s4)) + &sf.scale(&(&two * s4 / s1))),
    );

    let two_q = &two * q;
    r.eq_ext(
        "phi-row-zero",
        &-&(&(&cf.scale(s4) * &k) + &(&sf.scale(s3) * &h)),
        &e(Rational::zero()),
    );
    r.eq_ext(
        "phi-row-u2",
        &(&(&cf.scale(s3) * &n) - &(&sf.scale(s4) * &m)),
        &e(&two * &two_q * c.u2),
    );
    r.eq_ext(
        "phi-row-s1",
        &(&(&sf.scale(s4) * &k) - &(&cf.scale(s3) * &h)),
        &e(&two_q * s1),
    );
    r.eq_ext(
        "phi-row-inv-s1",
        &(&(&cf.scale(s4) * &m) + &(&sf.scale(s3) * &n)),
        &e(&two_q / s1),
    );
    let four_q = &two * &two_q;
    let recomputed = (&e(four_q) + &(&h * &m)).checked_div(&k);
    r.record("phi-n-redundant", recomputed.map(|x| x == n).unwrap_or(false));
}

/// `K(a+psi) H(a+phi) - K(a+phi) H(a+psi)` equals both `4Q sin(psi-phi)`
/// and `-4Q s1 s2 cos(phi-psi)`. Evaluated when psi has a rational cosine,
/// so that everything lives in the phi field.
fn cross_identity(r: &mut Report, c: &Ctx, psi: &QuarterOffset, phi: &QuarterOffset) {
    let (Some(cp), Some(sp)) = (psi.cos.to_rational(), psi.sin.to_rational()) else {
        r.flag("cross-kh-sine");
        r.flag("cross-kh-cosine");
        return;
    };
    let [s1, s2, ..] = &c.s;
    let q = c.q();
    let field = &phi.cos;
    let lift = |x: &QuadExt| QuadExt::embed(x.base().clone(), field);
    let (cos_psi, sin_psi) = (QuadExt::embed(cp.clone(), field), QuadExt::embed(sp.clone(), field));
    let (cos_aps, sin_aps) = psi.shifted(&c.p.angle);
    let [h_ps, k_ps, ..] = hkmn_ext(q, &lift(&cos_aps), &lift(&sin_aps));
    let (cos_aph, sin_aph) = phi.shifted(&c.p.angle);
    let [h_ph, k_ph, ..] = hkmn_ext(q, &cos_aph, &sin_aph);
    let lhs = &(&k_ps * &h_ph) - &(&k_ph * &h_ps);
    let four_q = Rational::from_integer(4.into()) * q;
    let sin_diff = &(&sin_psi * &phi.cos) - &(&cos_psi * &phi.sin);
    let cos_diff = &(&phi.cos * &cos_psi) + &(&phi.sin * &sin_psi);
    r.eq_ext("cross-kh-sine", &lhs, &sin_diff.scale(&four_q));
    r.eq_ext("cross-kh-cosine", &lhs, &-&cos_diff.scale(&(&four_q * s1 * s2)));
}
