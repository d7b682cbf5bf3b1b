//! Exact triangle geometry.
//!
//! Everything here stays in exact rationals by working with the squared area
//! `s(s-f)(s-g)(s-h)` rather than the area itself. The angle report is the
//! only floating-point output.

use std::fmt;

use num_integer::Integer as _;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::arith::{common_denominator, rat_int, Integer, Rational};
use crate::error::{Error, Result};

/// Three nonzero integers, possibly negative: a representation of `R/r`
/// that need not be a real triangle.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Triple {
    pub f: Integer,
    pub g: Integer,
    pub h: Integer,
}

impl Triple {
    pub fn new(f: impl Into<Integer>, g: impl Into<Integer>, h: impl Into<Integer>) -> Self {
        Triple {
            f: f.into(),
            g: g.into(),
            h: h.into(),
        }
    }

    /// Clears denominators and divides out the common factor, keeping signs.
    pub fn from_rationals(f: &Rational, g: &Rational, h: &Rational) -> Self {
        let (f, g, h) = scale_to_primitive(f, g, h);
        Triple { f, g, h }
    }

    fn sides(&self) -> [&Integer; 3] {
        [&self.f, &self.g, &self.h]
    }
}

impl fmt::Display for Triple {
    fn fmt(&self, fm: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(fm, "({}, {}, {})", self.f, self.g, self.h)
    }
}

/// A genuine triangle: positive sides, strict triangle inequality, gcd 1.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Triangle {
    f: Integer,
    g: Integer,
    h: Integer,
}

impl Triangle {
    /// Validates and reduces to the primitive representative.
    pub fn new(
        f: impl Into<Integer>,
        g: impl Into<Integer>,
        h: impl Into<Integer>,
    ) -> Result<Self> {
        let t = Triple::new(f, g, h);
        if !is_valid_triangle(&t) {
            return Err(Error::NotATriangle(t.to_string()));
        }
        let d = t.f.gcd(&t.g).gcd(&t.h);
        Ok(Triangle {
            f: t.f / &d,
            g: t.g / &d,
            h: t.h / &d,
        })
    }

    pub fn f(&self) -> &Integer {
        &self.f
    }

    pub fn g(&self) -> &Integer {
        &self.g
    }

    pub fn h(&self) -> &Integer {
        &self.h
    }

    pub fn as_triple(&self) -> Triple {
        Triple {
            f: self.f.clone(),
            g: self.g.clone(),
            h: self.h.clone(),
        }
    }

    /// The same triangle with sides in ascending order; used as a
    /// deduplication key since similar triangles share `R/r`.
    pub fn sorted(&self) -> Triangle {
        let mut s = [self.f.clone(), self.g.clone(), self.h.clone()];
        s.sort();
        let [f, g, h] = s;
        Triangle { f, g, h }
    }

    pub fn is_equilateral(&self) -> bool {
        self.f == self.g && self.g == self.h
    }

    pub fn semiperimeter(&self) -> Rational {
        Rational::new(&self.f + &self.g + &self.h, Integer::from(2))
    }

    /// Heron: `s(s-f)(s-g)(s-h)`.
    pub fn area_sq(&self) -> Rational {
        let s = self.semiperimeter();
        let f = rat_int(self.f.clone());
        let g = rat_int(self.g.clone());
        let h = rat_int(self.h.clone());
        &s * (&s - f) * (&s - g) * (&s - h)
    }

    /// `r^2 = area^2 / s^2`.
    pub fn inradius_sq(&self) -> Rational {
        let s = self.semiperimeter();
        self.area_sq() / (&s * &s)
    }

    /// `R^2 = (fgh)^2 / (16 area^2)`.
    pub fn circumradius_sq(&self) -> Rational {
        let fgh = rat_int(&self.f * &self.g * &self.h);
        &fgh * &fgh / (self.area_sq() * rat_int(Integer::from(16)))
    }
}

impl fmt::Display for Triangle {
    fn fmt(&self, fm: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(fm, "({}, {}, {})", self.f, self.g, self.h)
    }
}

/// `2fgh / ((f+g-h)(f+h-g)(g+h-f))`, for any signed representation.
pub fn ratio(t: &Triple) -> Result<Rational> {
    let [f, g, h] = t.sides();
    let den: Integer = (f + g - h) * (f + h - g) * (g + h - f);
    if den.is_zero() {
        return Err(Error::DegenerateRepresentation);
    }
    Ok(Rational::new(f * g * h * 2u32, den))
}

/// `R/r = fghs / (4 area^2)` from the two radii formulas.
pub fn ratio_via_radii(t: &Triangle) -> Rational {
    let fgh = rat_int(&t.f * &t.g * &t.h);
    fgh * t.semiperimeter() / (t.area_sq() * rat_int(Integer::from(4)))
}

pub fn is_valid_triangle(t: &Triple) -> bool {
    let [f, g, h] = t.sides();
    f.is_positive() && g.is_positive() && h.is_positive() && f + g > *h && f + h > *g && g + h > *f
}

/// Scales positive rational sides to the primitive integer triangle.
pub fn to_primitive(f: &Rational, g: &Rational, h: &Rational) -> Result<Triangle> {
    let (fi, gi, hi) = scale_to_primitive(f, g, h);
    Triangle::new(fi, gi, hi)
}

fn scale_to_primitive(f: &Rational, g: &Rational, h: &Rational) -> (Integer, Integer, Integer) {
    let l = rat_int(common_denominator([f, g, h]));
    let (fi, gi, hi) = (
        (f * &l).to_integer(),
        (g * &l).to_integer(),
        (h * &l).to_integer(),
    );
    let d = fi.gcd(&gi).gcd(&hi);
    if d.is_zero() || d.is_one() {
        (fi, gi, hi)
    } else {
        (fi / &d, gi / &d, hi / &d)
    }
}

/// Squared incenter-circumcenter distance `R(R - 2r) = R^2 - 2Rr`.
/// `Rr = fgh / (4s)` is rational, so the whole expression is.
pub fn euler_distance_sq(t: &Triangle) -> Rational {
    let fgh = rat_int(&t.f * &t.g * &t.h);
    let r_times_r = fgh / (t.semiperimeter() * rat_int(Integer::from(4)));
    t.circumradius_sq() - r_times_r * rat_int(Integer::from(2))
}

/// Interior angles in degrees, opposite `f`, `g`, `h` respectively.
pub fn angles_degrees(t: &Triangle) -> [f64; 3] {
    let cos_opposite = |a: &Integer, b: &Integer, c: &Integer| {
        let cos = Rational::new(b * b + c * c - a * a, b * c * 2u32);
        cos.to_f64()
            .unwrap_or(f64::NAN)
            .clamp(-1.0, 1.0)
            .acos()
            .to_degrees()
    };
    [
        cos_opposite(&t.f, &t.g, &t.h),
        cos_opposite(&t.g, &t.f, &t.h),
        cos_opposite(&t.h, &t.f, &t.g),
    ]
}

/// If `q = 2 + 1/M` for a positive integer `M`, returns `M`.
pub fn near_equilateral_parameter(q: &Rational) -> Option<Integer> {
    let excess = q - rat_int(Integer::from(2));
    (excess.is_positive() && excess.numer().is_one()).then(|| excess.denom().clone())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{int, rat};
    use proptest::prelude::*;

    fn tri(f: i64, g: i64, h: i64) -> Triangle {
        Triangle::new(f, g, h).unwrap()
    }

    /// Independent oracle: R and r from floating Heron, for the 3-4-5 check.
    fn ratio_float(f: f64, g: f64, h: f64) -> f64 {
        let s = (f + g + h) / 2.0;
        let area = (s * (s - f) * (s - g) * (s - h)).sqrt();
        (f * g * h / (4.0 * area)) / (area / s)
    }

    #[test]
    fn ratio_examples() {
        assert_eq!(ratio(&Triple::new(1, 1, 1)).unwrap(), rat(2, 1));
        assert_eq!(ratio(&Triple::new(11, 39, 49)).unwrap(), rat(26, 1));
        assert_eq!(ratio(&Triple::new(-13, 63, 80)).unwrap(), rat(7, 1));
        assert!((ratio_float(3.0, 4.0, 5.0) - 2.5).abs() < 1e-12);
        assert_eq!(ratio(&Triple::new(3, 4, 5)).unwrap(), rat(5, 2));
        assert_eq!(
            ratio(&Triple::new(1, 2, 3)),
            Err(Error::DegenerateRepresentation)
        );
    }

    #[test]
    fn ratio_via_radii_examples() {
        assert_eq!(ratio_via_radii(&tri(1, 1, 1)), rat(2, 1));
        assert_eq!(ratio_via_radii(&tri(2, 3, 3)), rat(9, 4));
        assert_eq!(ratio_via_radii(&tri(11, 39, 49)), rat(26, 1));
    }

    #[test]
    fn validity_examples() {
        assert!(!is_valid_triangle(&Triple::new(-13, 63, 80)));
        assert!(is_valid_triangle(&Triple::new(1, 1, 1)));
        assert!(!is_valid_triangle(&Triple::new(1, 2, 3)));
        assert!(!is_valid_triangle(&Triple::new(0, 2, 2)));
    }

    #[test]
    fn to_primitive_examples() {
        assert_eq!(
            to_primitive(&rat(22, 3), &rat(26, 1), &rat(98, 3)).unwrap(),
            tri(11, 39, 49)
        );
        assert_eq!(
            to_primitive(&rat(1, 1), &rat(1, 1), &rat(1, 1)).unwrap(),
            tri(1, 1, 1)
        );
        assert_eq!(
            to_primitive(&rat(2, 1), &rat(2, 1), &rat(2, 1))
                .unwrap()
                .f(),
            &int(1)
        );
        assert!(to_primitive(&rat(-1, 1), &rat(2, 1), &rat(2, 1)).is_err());
        assert!(to_primitive(&rat(1, 2), &rat(1, 2), &rat(1, 1)).is_err());
    }

    #[test]
    fn euler_distance_examples() {
        assert_eq!(euler_distance_sq(&tri(1, 1, 1)), rat(0, 1));
        assert!(euler_distance_sq(&tri(2, 3, 3)).is_positive());
        let t = tri(11, 39, 49);
        let d2 = euler_distance_sq(&t);
        assert!(d2.is_positive());
        // d^2 = r^2 N (N - 2) with N = 26
        assert_eq!(d2, t.inradius_sq() * rat(26 * 24, 1));
    }

    #[test]
    fn angle_examples() {
        let a = angles_degrees(&tri(1, 1, 1));
        for x in a {
            assert!((x - 60.0).abs() < 1e-9);
        }
        let a = angles_degrees(&tri(3, 4, 5));
        let oracle = [
            (3f64 / 5.0).asin().to_degrees(),
            (4f64 / 5.0).asin().to_degrees(),
            90.0,
        ];
        for (x, y) in a.iter().zip(oracle) {
            assert!((x - y).abs() < 1e-9);
        }
        assert!(
            (a[0] - 36.87).abs() < 0.01
                && (a[1] - 53.13).abs() < 0.01
                && (a[2] - 90.0).abs() < 0.01
        );
        let m89 = Triangle::new(
            10_188_073_747_943i64,
            10_937_217_961_673i64,
            11_065_215_566_304i64,
        )
        .unwrap();
        let a = angles_degrees(&m89);
        for (x, y) in a.iter().zip([55.16, 61.78, 63.06]) {
            assert!((x - y).abs() < 0.01, "{x} vs {y}");
        }
        assert!((a.iter().sum::<f64>() - 180.0).abs() < 1e-9);
    }

    #[test]
    fn near_equilateral_detection() {
        assert_eq!(near_equilateral_parameter(&rat(9, 4)), Some(int(4)));
        assert_eq!(near_equilateral_parameter(&rat(179, 89)), Some(int(89)));
        assert_eq!(near_equilateral_parameter(&rat(5, 2)), Some(int(2)));
        assert_eq!(near_equilateral_parameter(&rat(26, 1)), None);
        assert_eq!(near_equilateral_parameter(&rat(2, 1)), None);
    }

    fn valid_sides() -> impl Strategy<Value = (i64, i64, i64)> {
        (1i64..=1000, 1i64..=1000, 1i64..=1000).prop_filter("triangle inequality", |&(f, g, h)| {
            f + g > h && f + h > g && g + h > f
        })
    }

    proptest! {
        #[test]
        fn two_routes_agree((f, g, h) in valid_sides()) {
            let t = tri(f, g, h);
            prop_assert_eq!(ratio(&t.as_triple()).unwrap(), ratio_via_radii(&t));
            let raw = Triple::new(f, g, h);
            prop_assert_eq!(ratio(&raw).unwrap(), ratio_via_radii(&t));
        }

        #[test]
        fn scale_invariant((f, g, h) in valid_sides(), k in 1i64..50) {
            prop_assert_eq!(
                ratio(&Triple::new(k * f, k * g, k * h)).unwrap(),
                ratio(&Triple::new(f, g, h)).unwrap()
            );
        }

        #[test]
        fn symmetric((f, g, h) in valid_sides()) {
            let base = ratio(&Triple::new(f, g, h)).unwrap();
            for (a, b, c) in [(f, h, g), (g, f, h), (g, h, f), (h, f, g), (h, g, f)] {
                prop_assert_eq!(ratio(&Triple::new(a, b, c)).unwrap(), base.clone());
            }
        }

        #[test]
        fn at_least_two((f, g, h) in valid_sides()) {
            let t = tri(f, g, h);
            let q = ratio_via_radii(&t);
            prop_assert!(q >= rat(2, 1));
            prop_assert_eq!(q == rat(2, 1), f == g && g == h);
        }

        #[test]
        fn euler_identity((f, g, h) in valid_sides()) {
            let t = tri(f, g, h);
            let n = ratio_via_radii(&t);
            let d2 = euler_distance_sq(&t);
            prop_assert!(!d2.is_negative());
            prop_assert_eq!(d2, t.inradius_sq() * &n * (&n - rat(2, 1)));
        }
    }
}
