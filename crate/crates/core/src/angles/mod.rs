//! Angles carried by exact rational data.
//!
//! A [`HeronAngle`] has rational cosine and sine, an [`EulerAngle`] only a
//! rational tangent. Sums of Heron angles go through rotation composition or
//! the generator addition law `m(a+b) = (m(a)+m(b)) / (1 - m(a) m(b))`; no
//! angle is ever evaluated transcendentally.

mod lemmas;
mod omega;

pub use lemmas::{lemma_scan, trivial_solutions, LemmaFinding, LemmaKind};
pub use omega::{check_omega_identities, omega, omega_identities_into, HalfAngles};

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactnum::{serde_rational, QuadExt, Rational};

/// Generator `m(a) = tan(a/2) = sin a / (1 + cos a)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Generator(#[serde(with = "serde_rational")] pub Rational);

impl Generator {
    pub fn new(m: Rational) -> Self {
        Generator(m)
    }

    pub fn value(&self) -> &Rational {
        &self.0
    }

    /// True for generators of angles strictly inside the first quadrant.
    pub fn in_first_quadrant(&self) -> bool {
        self.0.is_positive() && self.0 < Rational::one()
    }
}

impl From<Rational> for Generator {
    fn from(m: Rational) -> Self {
        Generator(m)
    }
}

pub fn heron_from_generator(m: &Generator) -> HeronAngle {
    HeronAngle::from_generator(&m.0)
}

pub fn generator_of(a: &HeronAngle) -> Result<Generator> {
    a.generator().map(Generator)
}

pub fn add_generators(m: &Generator, n: &Generator) -> Result<Generator> {
    let den = Rational::one() - &m.0 * &n.0;
    if den.is_zero() {
        return Err(Error::DivisionByZero("generator sum: angles add up to pi"));
    }
    Ok(Generator((&m.0 + &n.0) / den))
}

/// Angle with rational cosine and sine.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct HeronAngle {
    #[serde(with = "serde_rational")]
    cos: Rational,
    #[serde(with = "serde_rational")]
    sin: Rational,
}

impl HeronAngle {
    pub fn new(cos: Rational, sin: Rational) -> Result<Self> {
        if &cos * &cos + &sin * &sin != Rational::one() {
            return Err(Error::Domain(format!("cos^2 + sin^2 != 1 for cos={cos}, sin={sin}")));
        }
        Ok(HeronAngle { cos, sin })
    }

    pub(crate) fn raw(cos: Rational, sin: Rational) -> Self {
        debug_assert!(&cos * &cos + &sin * &sin == Rational::one());
        HeronAngle { cos, sin }
    }

    pub fn from_generator(m: &Rational) -> Self {
        let m2 = m * m;
        let den = Rational::one() + &m2;
        let cos = (Rational::one() - &m2) / &den;
        let sin = (m + m) / den;
        HeronAngle { cos, sin }
    }

    /// The angle of the lattice direction `(den, num)` when
    /// `num^2 + den^2` is a perfect square; `None` otherwise.
    pub fn from_tan(tan: &Rational) -> Option<Self> {
        let one = Rational::one();
        let hyp = crate::exactnum::rational_sqrt(&(&one + tan * tan))?;
        let cos = one / hyp;
        let sin = tan * &cos;
        Some(HeronAngle { cos, sin })
    }

    pub fn zero() -> Self {
        HeronAngle {
            cos: Rational::one(),
            sin: Rational::zero(),
        }
    }

    pub fn right() -> Self {
        HeronAngle {
            cos: Rational::zero(),
            sin: Rational::one(),
        }
    }

    pub fn cos(&self) -> &Rational {
        &self.cos
    }

    pub fn sin(&self) -> &Rational {
        &self.sin
    }

    pub fn tan(&self) -> Result<Rational> {
        if self.cos.is_zero() {
            return Err(Error::DivisionByZero("tan at cos = 0"));
        }
        Ok(&self.sin / &self.cos)
    }

    pub fn cot(&self) -> Result<Rational> {
        if self.sin.is_zero() {
            return Err(Error::DivisionByZero("cot at sin = 0"));
        }
        Ok(&self.cos / &self.sin)
    }

    pub fn generator(&self) -> Result<Rational> {
        let den = Rational::one() + &self.cos;
        if den.is_zero() {
            return Err(Error::DivisionByZero("generator undefined at pi"));
        }
        Ok(&self.sin / den)
    }

    pub fn add(&self, other: &HeronAngle) -> HeronAngle {
        HeronAngle {
            cos: &self.cos * &other.cos - &self.sin * &other.sin,
            sin: &self.sin * &other.cos + &self.cos * &other.sin,
        }
    }

    pub fn sub(&self, other: &HeronAngle) -> HeronAngle {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> HeronAngle {
        HeronAngle {
            cos: self.cos.clone(),
            sin: -&self.sin,
        }
    }

    pub fn double(&self) -> HeronAngle {
        self.add(self)
    }

    /// `pi/2 - a`.
    pub fn complement(&self) -> HeronAngle {
        HeronAngle {
            cos: self.sin.clone(),
            sin: self.cos.clone(),
        }
    }

    pub fn omega_plus(&self) -> Rational {
        &self.cos + &self.sin
    }

    pub fn omega_minus(&self) -> Rational {
        &self.cos - &self.sin
    }

    pub fn cos2(&self) -> Rational {
        &self.cos * &self.cos - &self.sin * &self.sin
    }

    pub fn sin2(&self) -> Rational {
        let two = Rational::from_integer(2.into());
        two * &self.sin * &self.cos
    }

    pub fn in_first_quadrant(&self) -> bool {
        self.cos.is_positive() && self.sin.is_positive()
    }

    pub fn rotation(&self) -> Rotation {
        Rotation {
            cos: self.cos.clone(),
            sin: self.sin.clone(),
        }
    }
}

/// Angle with rational tangent, strictly inside `(-pi/2, pi/2)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct EulerAngle {
    #[serde(with = "serde_rational")]
    tan: Rational,
}

impl EulerAngle {
    pub fn new(tan: Rational) -> Self {
        EulerAngle { tan }
    }

    pub fn tan(&self) -> &Rational {
        &self.tan
    }

    /// Twice an Euler angle is Heron; its generator is `tan a`.
    pub fn doubled(&self) -> HeronAngle {
        HeronAngle::from_generator(&self.tan)
    }

    /// `(cos a, sin a)` in `Q(sqrt(1 + tan^2 a))`, with `cos a > 0`.
    pub fn cos_sin(&self) -> (QuadExt, QuadExt) {
        let sec2 = Rational::one() + &self.tan * &self.tan;
        let root = QuadExt::sqrt_of(&sec2).expect("1 + t^2 > 0");
        let cos = root.inverse().expect("non-zero root");
        let sin = cos.scale(&self.tan);
        (cos, sin)
    }

    pub fn sub(&self, other: &EulerAngle) -> Result<EulerAngle> {
        let den = Rational::one() + &self.tan * &other.tan;
        if den.is_zero() {
            return Err(Error::DivisionByZero("tangent difference at right angle"));
        }
        Ok(EulerAngle::new((&self.tan - &other.tan) / den))
    }
}

/// Planar rotation `[[cos, -sin], [sin, cos]]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Rotation {
    cos: Rational,
    sin: Rational,
}

pub type Vector = (Rational, Rational);

impl Rotation {
    pub fn new(cos: Rational, sin: Rational) -> Result<Self> {
        HeronAngle::new(cos, sin).map(|a| a.rotation())
    }

    pub fn of(a: &HeronAngle) -> Self {
        a.rotation()
    }

    pub fn identity() -> Self {
        HeronAngle::zero().rotation()
    }

    pub fn cos(&self) -> &Rational {
        &self.cos
    }

    pub fn sin(&self) -> &Rational {
        &self.sin
    }

    pub fn angle(&self) -> HeronAngle {
        HeronAngle::raw(self.cos.clone(), self.sin.clone())
    }

    pub fn compose(&self, other: &Rotation) -> Rotation {
        self.angle().add(&other.angle()).rotation()
    }

    pub fn inverse(&self) -> Rotation {
        Rotation {
            cos: self.cos.clone(),
            sin: -&self.sin,
        }
    }

    pub fn apply(&self, v: &Vector) -> Vector {
        let (x, y) = v;
        (&self.cos * x - &self.sin * y, &self.sin * x + &self.cos * y)
    }

    /// Recovers `R` from `image = R * source`.
    pub fn recover(image: &Vector, source: &Vector) -> Result<Rotation> {
        let (x1, y1) = image;
        let (x2, y2) = source;
        let len2 = x2 * x2 + y2 * y2;
        if len2.is_zero() {
            return Err(Error::Domain("rotation angle of the zero vector".into()));
        }
        if x1 * x1 + y1 * y1 != len2 {
            return Err(Error::Domain(
                "vectors of different length are not related by a rotation".into(),
            ));
        }
        let cos = (x1 * x2 + y1 * y2) / &len2;
        let sin = (y1 * x2 - x1 * y2) / &len2;
        Ok(Rotation { cos, sin })
    }
}

pub fn rotate(r: &Rotation, v: &Vector) -> Vector {
    r.apply(v)
}

pub fn recover_angle(image: &Vector, source: &Vector) -> Result<HeronAngle> {
    Rotation::recover(image, source).map(|r| r.angle())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::{int, rat};

    fn g(n: i64, d: i64) -> Generator {
        Generator(rat(n, d))
    }

    #[test]
    fn heron_from_generator_examples() {
        let a = heron_from_generator(&g(1, 3));
        assert_eq!((a.cos(), a.sin()), (&rat(4, 5), &rat(3, 5)));
        assert_eq!(heron_from_generator(&g(0, 1)), HeronAngle::zero());
        assert_eq!(heron_from_generator(&g(1, 1)), HeronAngle::right());
    }

    #[test]
    fn generator_of_examples() {
        let a = HeronAngle::new(rat(4, 5), rat(3, 5)).unwrap();
        assert_eq!(generator_of(&a).unwrap(), g(1, 3));
        assert_eq!(generator_of(&HeronAngle::zero()).unwrap(), g(0, 1));
        assert_eq!(generator_of(&HeronAngle::right()).unwrap(), g(1, 1));
        let pi = HeronAngle::new(int(-1), int(0)).unwrap();
        assert!(generator_of(&pi).is_err());
    }

    #[test]
    fn add_generators_examples() {
        let double = add_generators(&g(1, 3), &g(1, 3)).unwrap();
        assert_eq!(double, g(3, 4));
        assert_eq!(heron_from_generator(&double).cos(), &rat(7, 25));
        assert_eq!(add_generators(&g(2, 7), &g(0, 1)).unwrap(), g(2, 7));
        assert_eq!(add_generators(&g(2, 7), &g(-2, 7)).unwrap(), g(0, 1));
        assert!(add_generators(&g(2, 3), &g(3, 2)).is_err());
    }

    #[test]
    fn non_unit_pair_rejected() {
        assert!(HeronAngle::new(rat(3, 5), rat(3, 5)).is_err());
    }

    #[test]
    fn rotate_examples() {
        let r = Rotation::of(&heron_from_generator(&g(1, 3)));
        assert_eq!(r.apply(&(int(1), int(0))), (rat(4, 5), rat(3, 5)));
        let v = (rat(7, 2), rat(-3, 11));
        assert_eq!(Rotation::identity().apply(&v), v);
        let back = Rotation::of(&heron_from_generator(&g(-1, 3)));
        assert_eq!(back.apply(&r.apply(&v)), v);
        assert_eq!(r.compose(&back), Rotation::identity());
        assert_eq!(r.inverse(), back);
    }

    #[test]
    fn recover_rotation() {
        let r = Rotation::of(&heron_from_generator(&g(2, 9)));
        let v = (rat(5, 3), int(2));
        let w = r.apply(&v);
        assert_eq!(&w.0 * &w.0 + &w.1 * &w.1, &v.0 * &v.0 + &v.1 * &v.1);
        assert_eq!(Rotation::recover(&w, &v).unwrap(), r);
        assert!(Rotation::recover(&w, &(int(0), int(0))).is_err());
    }

    #[test]
    fn euler_angle_views() {
        let e = EulerAngle::new(rat(3, 4));
        assert_eq!(e.doubled().sin(), &rat(24, 25));
        let (c, s) = e.cos_sin();
        assert_eq!(c.to_rational(), Some(rat(4, 5)));
        assert_eq!(s.to_rational(), Some(rat(3, 5)));
        let (c, s) = EulerAngle::new(rat(1, 2)).cos_sin();
        assert_eq!((&c * &c).to_rational(), Some(rat(4, 5)));
        assert_eq!((&s * &s).to_rational(), Some(rat(1, 5)));
    }

    #[test]
    fn complement_and_tan() {
        let a = heron_from_generator(&g(1, 3));
        assert_eq!(a.complement().generator().unwrap(), rat(1, 2));
        assert_eq!(a.tan().unwrap(), rat(3, 4));
        assert!(HeronAngle::right().tan().is_err());
        assert_eq!(HeronAngle::from_tan(&rat(44, 240)).unwrap().cos(), &rat(60, 61));
        assert!(HeronAngle::from_tan(&rat(125, 240)).is_none());
    }
}
