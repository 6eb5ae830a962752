//! Rational leaning boxes.
//!
//! A leaning box has edges `x, y, z`, rectangular faces with diagonals
//! `a = |(x, y)|` and `b = |(x, z)|`, and a parallelogram face with
//! diagonals `c1, c2`. The body diagonals over those are `d1, d2`. Dividing
//! by `x` gives the scaled box `u_k, v_k` with `1 + u_k^2 = v_k^2`, and each
//! `u_k = cot psi_k` is fixed by a generator `s_k` of a Heron angle.

mod equiv;
mod family;
mod identities;

pub use equiv::{
    cuboid_limit_eval, equiv_params, special_family_pi2, symmetry_params, EquivParams, FCase, SymmetryParams,
};
pub use family::{cuboid_gap, family_lambda0, FamilyPoint, GapReport};
pub use identities::{explicit_identities_into, explicit_identity_suite};

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactnum::{biguint_from_rational, rational_from_biguint, serde_biguint, serde_rational, Rational};
use crate::parallelogram::RationalParallelogram;
use crate::report::Report;

fn two() -> Rational {
    Rational::from_integer(2.into())
}

fn in_unit_interval(x: &Rational) -> bool {
    x.is_positive() && x < &Rational::one()
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GeneratorQuad {
    #[serde(with = "serde_rational")]
    pub s1: Rational,
    #[serde(with = "serde_rational")]
    pub s2: Rational,
    #[serde(with = "serde_rational")]
    pub s3: Rational,
    #[serde(with = "serde_rational")]
    pub s4: Rational,
}

impl GeneratorQuad {
    pub fn new(s1: Rational, s2: Rational, s3: Rational, s4: Rational) -> Result<Self> {
        let quad = GeneratorQuad { s1, s2, s3, s4 };
        for (name, s) in quad.named() {
            if !in_unit_interval(s) {
                return Err(Error::out_of_range(name, s, "(0,1)"));
            }
        }
        Ok(quad)
    }

    fn named(&self) -> [(&'static str, &Rational); 4] {
        [("s1", &self.s1), ("s2", &self.s2), ("s3", &self.s3), ("s4", &self.s4)]
    }

    pub fn as_array(&self) -> [&Rational; 4] {
        [&self.s1, &self.s2, &self.s3, &self.s4]
    }

    /// `Q = s3 s4`.
    pub fn q(&self) -> Rational {
        &self.s3 * &self.s4
    }

    pub fn swap_34(&self) -> Self {
        GeneratorQuad {
            s1: self.s1.clone(),
            s2: self.s2.clone(),
            s3: self.s4.clone(),
            s4: self.s3.clone(),
        }
    }
}

/// `u = (1 - s^2) / 2s` and `v = (1 + s^2) / 2s`.
pub fn cot_csc(s: &Rational) -> (Rational, Rational) {
    let sq = s * s;
    let den = &two() * s;
    ((Rational::one() - &sq) / &den, (Rational::one() + sq) / den)
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ScaledBox {
    #[serde(with = "serde_rational")]
    pub u1: Rational,
    #[serde(with = "serde_rational")]
    pub u2: Rational,
    #[serde(with = "serde_rational")]
    pub u3: Rational,
    #[serde(with = "serde_rational")]
    pub u4: Rational,
    #[serde(with = "serde_rational")]
    pub v1: Rational,
    #[serde(with = "serde_rational")]
    pub v2: Rational,
    #[serde(with = "serde_rational")]
    pub v3: Rational,
    #[serde(with = "serde_rational")]
    pub v4: Rational,
}

impl ScaledBox {
    pub fn new(u: [Rational; 4], v: [Rational; 4]) -> Result<Self> {
        let [u1, u2, u3, u4] = u;
        let [v1, v2, v3, v4] = v;
        let b = ScaledBox {
            u1,
            u2,
            u3,
            u4,
            v1,
            v2,
            v3,
            v4,
        };
        for (k, (u, v)) in b.u().into_iter().zip(b.v()).enumerate() {
            if !u.is_positive() || !v.is_positive() {
                return Err(Error::NotLeaningBox(format!("non-positive entry at k={}", k + 1)));
            }
            if Rational::one() + u * u != v * v {
                return Err(Error::NotLeaningBox(format!("1 + u{0}^2 != v{0}^2", k + 1)));
            }
        }
        if !b.face_parallelogram_holds() {
            return Err(Error::NotLeaningBox(
                "2u1^2 + 2u2^2 != u3^2 + u4^2: the generators are not independent".into(),
            ));
        }
        Ok(b)
    }

    pub fn u(&self) -> [&Rational; 4] {
        [&self.u1, &self.u2, &self.u3, &self.u4]
    }

    pub fn v(&self) -> [&Rational; 4] {
        [&self.v1, &self.v2, &self.v3, &self.v4]
    }

    fn face_parallelogram_holds(&self) -> bool {
        two() * (&self.u1 * &self.u1 + &self.u2 * &self.u2) == &self.u3 * &self.u3 + &self.u4 * &self.u4
    }

    /// `s_k = v_k - u_k`.
    pub fn generators(&self) -> GeneratorQuad {
        let [s1, s2, s3, s4] = [0, 1, 2, 3].map(|k| self.v()[k] - self.u()[k]);
        GeneratorQuad { s1, s2, s3, s4 }
    }

    /// The face parallelogram `(u1, u2, u3, u4)`.
    pub fn face(&self) -> Result<RationalParallelogram> {
        RationalParallelogram::new(self.u1.clone(), self.u2.clone(), self.u3.clone(), self.u4.clone())
    }

    /// The two interior parallelograms `(u1, v2, v3, v4)` and `(v1, u2, v3, v4)`.
    pub fn interior(&self) -> Result<(RationalParallelogram, RationalParallelogram)> {
        Ok((
            RationalParallelogram::new(self.u1.clone(), self.v2.clone(), self.v3.clone(), self.v4.clone())?,
            RationalParallelogram::new(self.v1.clone(), self.u2.clone(), self.v3.clone(), self.v4.clone())?,
        ))
    }
}

pub fn scaled_from_generators(q: &GeneratorQuad) -> Result<ScaledBox> {
    let [(u1, v1), (u2, v2), (u3, v3), (u4, v4)] = q.as_array().map(cot_csc);
    ScaledBox::new([u1, u2, u3, u4], [v1, v2, v3, v4])
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct IntegerBox {
    #[serde(with = "serde_biguint")]
    pub x: BigUint,
    #[serde(with = "serde_biguint")]
    pub y: BigUint,
    #[serde(with = "serde_biguint")]
    pub z: BigUint,
    #[serde(with = "serde_biguint")]
    pub a: BigUint,
    #[serde(with = "serde_biguint")]
    pub b: BigUint,
    #[serde(with = "serde_biguint")]
    pub c1: BigUint,
    #[serde(with = "serde_biguint")]
    pub c2: BigUint,
    #[serde(with = "serde_biguint")]
    pub d1: BigUint,
    #[serde(with = "serde_biguint")]
    pub d2: BigUint,
}

pub const INTEGER_FIELDS: [&str; 9] = ["x", "y", "z", "a", "b", "c1", "c2", "d1", "d2"];

impl IntegerBox {
    pub fn from_array(v: [BigUint; 9]) -> Self {
        let [x, y, z, a, b, c1, c2, d1, d2] = v;
        IntegerBox {
            x,
            y,
            z,
            a,
            b,
            c1,
            c2,
            d1,
            d2,
        }
    }

    pub fn to_array(&self) -> [BigUint; 9] {
        [
            self.x.clone(),
            self.y.clone(),
            self.z.clone(),
            self.a.clone(),
            self.b.clone(),
            self.c1.clone(),
            self.c2.clone(),
            self.d1.clone(),
            self.d2.clone(),
        ]
    }

    pub fn gcd(&self) -> BigUint {
        self.to_array().iter().fold(BigUint::zero(), |g, n| g.gcd(n))
    }

    /// Divides out the common factor of all nine entries.
    pub fn normalized(&self) -> Self {
        let g = self.gcd();
        if g.is_zero() || g.is_one() {
            return self.clone();
        }
        Self::from_array(self.to_array().map(|n| n / &g))
    }

    /// Back to the scaled box by dividing through by `x`.
    pub fn to_scaled(&self) -> Result<ScaledBox> {
        if self.x.is_zero() {
            return Err(Error::NotLeaningBox("x = 0".into()));
        }
        let x = rational_from_biguint(&self.x);
        let f = |n: &BigUint| rational_from_biguint(n) / &x;
        ScaledBox::new(
            [f(&self.y), f(&self.z), f(&self.c1), f(&self.c2)],
            [f(&self.a), f(&self.b), f(&self.d1), f(&self.d2)],
        )
    }
}

/// [`integer_from_scaled_raw`] with any common factor divided out.
pub fn integer_from_scaled(s: &ScaledBox) -> IntegerBox {
    integer_from_scaled_raw(s).normalized()
}

/// Scales by the least common denominator of all eight entries.
pub fn integer_from_scaled_raw(s: &ScaledBox) -> IntegerBox {
    let entries: Vec<&Rational> = s.u().into_iter().chain(s.v()).collect();
    let lcm = entries.iter().fold(BigInt::one(), |l, q| l.lcm(q.denom()));
    let x = Rational::from_integer(lcm);
    let scale = |q: &Rational| biguint_from_rational(&(q * &x)).expect("positive integer after scaling");
    IntegerBox {
        x: scale(&Rational::one()),
        y: scale(&s.u1),
        z: scale(&s.u2),
        a: scale(&s.v1),
        b: scale(&s.v2),
        c1: scale(&s.u3),
        c2: scale(&s.u4),
        d1: scale(&s.v3),
        d2: scale(&s.v4),
    }
}

/// The five defining equations, checked on the integers.
pub fn verify_integer(b: &IntegerBox) -> Report {
    let sq = |n: &BigUint| rational_from_biguint(&(n * n));
    let mut r = Report::new();
    r.eq("edge-face-xy", &(sq(&b.x) + sq(&b.y)), &sq(&b.a));
    r.eq("edge-face-xz", &(sq(&b.x) + sq(&b.z)), &sq(&b.b));
    r.eq("body-diagonal-c1", &(sq(&b.x) + sq(&b.c1)), &sq(&b.d1));
    r.eq("body-diagonal-c2", &(sq(&b.x) + sq(&b.c2)), &sq(&b.d2));
    r.eq(
        "parallelogram-face",
        &(two() * (sq(&b.y) + sq(&b.z))),
        &(sq(&b.c1) + sq(&b.c2)),
    );
    r
}

/// Generators of the three interior-parallelogram angles `a, a1, a2`.
pub fn interior_generators(s: &ScaledBox) -> (Rational, Rational, Rational) {
    let two = two();
    let m = (&two * &s.u2 + &s.u3 - &s.u4) / (&two * &s.u1 + &s.u3 + &s.u4);
    let m1 = (&two * &s.v2 + &s.v3 - &s.v4) / (&two * &s.u1 + &s.v3 + &s.v4);
    let m2 = (&two * &s.u2 + &s.v3 - &s.v4) / (&two * &s.v1 + &s.v3 + &s.v4);
    (m, m1, m2)
}

#[cfg(test)]
pub(crate) mod fixtures {
    use super::*;
    use crate::exactnum::rat;

    pub fn quad1() -> GeneratorQuad {
        GeneratorQuad::new(rat(1, 2), rat(7, 16), rat(16, 35), rat(5, 16)).unwrap()
    }

    pub fn quad2() -> GeneratorQuad {
        GeneratorQuad::new(rat(12, 25), rat(3367, 7200), rat(1440, 3367), rat(2405, 7200)).unwrap()
    }

    pub fn ints(v: [u64; 9]) -> IntegerBox {
        IntegerBox::from_array(v.map(BigUint::from))
    }

    pub fn box1() -> IntegerBox {
        ints([1120, 840, 1035, 1400, 1525, 969, 1617, 1481, 1967])
    }

    pub fn box2() -> IntegerBox {
        ints([
            48484800, 38868648, 40503311, 62141352, 63176689, 46315445, 64478365, 67051445, 80673635,
        ])
    }
}

#[cfg(test)]
mod tests {
    use super::fixtures::*;
    use super::*;
    use crate::exactnum::{int, rat};

    #[test]
    fn scaled_example1() {
        let s = scaled_from_generators(&quad1()).unwrap();
        let d = 1120;
        assert_eq!(s.u(), [&rat(840, d), &rat(1035, d), &rat(969, d), &rat(1617, d)]);
        assert_eq!(s.v(), [&rat(1400, d), &rat(1525, d), &rat(1481, d), &rat(1967, d)]);
        assert_eq!(s.generators(), quad1());
    }

    #[test]
    fn scaled_example2() {
        let s = scaled_from_generators(&quad2()).unwrap();
        let d = 48484800;
        assert_eq!(s.u1, rat(38868648, d));
        assert_eq!(s.v4, rat(80673635, d));
    }

    #[test]
    fn symmetric_quad_is_not_a_leaning_box() {
        let h = rat(1, 2);
        let q = GeneratorQuad::new(h.clone(), h.clone(), h.clone(), h).unwrap();
        assert!(matches!(scaled_from_generators(&q), Err(Error::NotLeaningBox(_))));
    }

    #[test]
    fn quad_range_enforced() {
        let e = GeneratorQuad::new(rat(1, 2), int(1), rat(1, 2), rat(1, 2)).unwrap_err();
        assert_eq!(e.to_string(), "s2=1 out of (0,1)");
    }

    #[test]
    fn integer_examples() {
        let s1 = scaled_from_generators(&quad1()).unwrap();
        assert_eq!(integer_from_scaled(&s1), box1());
        let s2 = scaled_from_generators(&quad2()).unwrap();
        assert_eq!(integer_from_scaled(&s2), box2());
        assert_eq!(integer_from_scaled_raw(&s2), box2());
        assert_eq!(box1().gcd(), BigUint::one());
        assert_eq!(box2().to_scaled().unwrap(), s2);
    }

    #[test]
    fn rescaling_a_reduced_box_is_identity() {
        let s = box1().to_scaled().unwrap();
        let b = integer_from_scaled(&s);
        assert_eq!(b.x, BigUint::from(1120u32));
        let doubled = IntegerBox::from_array(box1().to_array().map(|n| n * 2u32));
        assert_eq!(doubled.normalized(), box1());
    }

    #[test]
    fn verify_examples() {
        assert!(verify_integer(&box1()).all_hold());
        assert!(verify_integer(&box2()).all_hold());
        let mut bad = box1();
        bad.d2 = BigUint::from(1968u32);
        let r = verify_integer(&bad);
        assert_eq!(r.first_failure(), Some("body-diagonal-c2"));
        assert_eq!(r.failures().count(), 1);
    }

    #[test]
    fn interior_generator_examples() {
        let s = box1().to_scaled().unwrap();
        assert_eq!(interior_generators(&s), (rat(1, 3), rat(1, 2), rat(18, 71)));
        let (two, three) = s.interior().unwrap();
        assert!(two.satisfies_equation() && three.satisfies_equation());
        let ints = (1400u64.pow(2) + 1035u64.pow(2)) * 2;
        assert_eq!(ints, 1481u64.pow(2) + 1967u64.pow(2));
    }

    #[test]
    fn json_shapes() {
        let j = serde_json::to_string(&box1()).unwrap();
        assert_eq!(
            j,
            r#"{"x":"1120","y":"840","z":"1035","a":"1400","b":"1525","c1":"969","c2":"1617","d1":"1481","d2":"1967"}"#
        );
        let s = box1().to_scaled().unwrap();
        let j = serde_json::to_value(&s).unwrap();
        assert_eq!(j["u1"], "3/4");
        let back: ScaledBox = serde_json::from_value(j).unwrap();
        assert_eq!(back, s);
    }
}
