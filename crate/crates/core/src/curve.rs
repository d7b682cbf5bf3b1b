//! Curves `v^2 = u^3 + a2 u^2 + a4 u` over the rationals.

use std::cmp::Ordering;
use std::fmt;

use num_integer::Integer as _;
use num_traits::{Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::arith::{int, is_perfect_square, rat_int, Factorization, Integer, Rational};
use crate::error::{Error, Result};

/// Which family a curve belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum CurveFamily {
    /// `E_N`, solutions of `R/r = N`.
    IntegerRatio(u64),
    /// `F_M`, solutions of `R/r = 2 + 1/M`.
    NearEquilateral(u64),
    Raw,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Curve {
    a2: Rational,
    a4: Rational,
    family: CurveFamily,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum CurvePoint {
    Infinity,
    Affine { u: Rational, v: Rational },
}

impl CurvePoint {
    pub fn affine(u: Rational, v: Rational) -> Self {
        CurvePoint::Affine { u, v }
    }

    pub fn from_ints(u: i64, v: i64) -> Self {
        CurvePoint::Affine {
            u: rat_int(int(u)),
            v: rat_int(int(v)),
        }
    }

    pub fn is_infinity(&self) -> bool {
        matches!(self, CurvePoint::Infinity)
    }

    pub fn u(&self) -> Option<&Rational> {
        match self {
            CurvePoint::Affine { u, .. } => Some(u),
            CurvePoint::Infinity => None,
        }
    }

    pub fn v(&self) -> Option<&Rational> {
        match self {
            CurvePoint::Affine { v, .. } => Some(v),
            CurvePoint::Infinity => None,
        }
    }

    pub fn is_integral(&self) -> bool {
        match self {
            CurvePoint::Infinity => true,
            CurvePoint::Affine { u, v } => u.is_integer() && v.is_integer(),
        }
    }

    /// Sort key: infinity first, then by u, then v.
    pub fn sort_key(&self) -> (bool, Rational, Rational) {
        match self {
            CurvePoint::Infinity => (false, Rational::zero(), Rational::zero()),
            CurvePoint::Affine { u, v } => (true, u.clone(), v.clone()),
        }
    }
}

impl fmt::Display for CurvePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CurvePoint::Infinity => write!(f, "O"),
            CurvePoint::Affine { u, v } => write!(f, "({u}, {v})"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Component {
    Egg,
    Infinite,
}

impl fmt::Display for Component {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Component::Egg => "EGG",
            Component::Infinite => "INFINITE",
        })
    }
}

/// A real number `center + sign * sqrt(radicand)` with rational center and
/// radicand, compared exactly against rationals.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuadraticSurd {
    pub center: Rational,
    pub negative: bool,
    pub radicand: Rational,
}

impl QuadraticSurd {
    pub fn to_f64(&self) -> f64 {
        let c = self.center.to_f64().unwrap_or(f64::NAN);
        let r = self.radicand.to_f64().unwrap_or(f64::NAN).sqrt();
        if self.negative {
            c - r
        } else {
            c + r
        }
    }

    /// Exact comparison of `self` against `x`.
    pub fn cmp_rational(&self, x: &Rational) -> Ordering {
        // self vs x  <=>  ±sqrt(radicand) vs x - center
        let w = x - &self.center;
        let w_sq = &w * &w;
        if self.negative {
            // -sqrt(r) vs w
            if !w.is_negative() {
                if self.radicand.is_zero() && w.is_zero() {
                    Ordering::Equal
                } else {
                    Ordering::Less
                }
            } else {
                // w < 0: -sqrt(r) < w  <=>  r > w^2
                self.radicand.cmp(&w_sq).reverse()
            }
        } else if w.is_negative() {
            Ordering::Greater
        } else {
            self.radicand.cmp(&w_sq)
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RealRoot {
    Exact(Rational),
    Surd(QuadraticSurd),
}

impl RealRoot {
    pub fn to_f64(&self) -> f64 {
        match self {
            RealRoot::Exact(q) => q.to_f64().unwrap_or(f64::NAN),
            RealRoot::Surd(s) => s.to_f64(),
        }
    }

    pub fn is_exact(&self) -> bool {
        matches!(self, RealRoot::Exact(_))
    }

    pub fn cmp_rational(&self, x: &Rational) -> Ordering {
        match self {
            RealRoot::Exact(q) => q.cmp(x),
            RealRoot::Surd(s) => s.cmp_rational(x),
        }
    }
}

impl fmt::Display for RealRoot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RealRoot::Exact(q) => write!(f, "{q}"),
            RealRoot::Surd(s) => {
                let sign = if s.negative { '-' } else { '+' };
                write!(f, "{} {} sqrt({})", s.center, sign, s.radicand)
            }
        }
    }
}

/// Real roots of `u^3 + a2 u^2 + a4 u`, ascending.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RealRoots {
    pub roots: Vec<RealRoot>,
}

impl RealRoots {
    pub fn has_egg(&self) -> bool {
        self.roots.len() == 3
    }

    /// The closed interval spanned by the egg, when it exists.
    pub fn egg_interval(&self) -> Option<(&RealRoot, &RealRoot)> {
        self.has_egg().then(|| (&self.roots[0], &self.roots[1]))
    }
}

impl Curve {
    pub fn new(a2: Rational, a4: Rational, family: CurveFamily) -> Result<Self> {
        let curve = Curve { a2, a4, family };
        if curve.discriminant().is_zero() {
            return Err(Error::SingularCurve);
        }
        Ok(curve)
    }

    pub fn raw(a2: Rational, a4: Rational) -> Result<Self> {
        Self::new(a2, a4, CurveFamily::Raw)
    }

    /// `E_N: v^2 = u^3 + 2(2N^2 - 2N - 1) u^2 + (4N + 1) u`.
    pub fn e_n(n: u64) -> Result<Self> {
        let n = Integer::from(n);
        let a2 = (&n * &n * 2u32 - &n * 2u32 - 1u32) * 2u32;
        let a4 = &n * 4u32 + 1u32;
        Self::new(
            rat_int(a2),
            rat_int(a4),
            CurveFamily::IntegerRatio(n.to_u64().unwrap()),
        )
    }

    /// `F_M: v^2 = u^3 + (6M^2 + 12M + 4) u^2 + (9M^4 + 4M^3) u`.
    pub fn f_m(m: u64) -> Result<Self> {
        let m = Integer::from(m);
        let m2 = &m * &m;
        let m3 = &m2 * &m;
        let a2 = &m2 * 6u32 + &m * 12u32 + 4u32;
        let a4 = &m3 * &m * 9u32 + &m3 * 4u32;
        Self::new(
            rat_int(a2),
            rat_int(a4),
            CurveFamily::NearEquilateral(m.to_u64().unwrap()),
        )
    }

    pub fn a2(&self) -> &Rational {
        &self.a2
    }

    pub fn a4(&self) -> &Rational {
        &self.a4
    }

    pub fn family(&self) -> CurveFamily {
        self.family
    }

    /// `16 a4^2 (a2^2 - 4 a4)`.
    pub fn discriminant(&self) -> Rational {
        let d = self.quadratic_discriminant();
        &self.a4 * &self.a4 * d * rat_int(int(16))
    }

    /// Discriminant of the quadratic factor `u^2 + a2 u + a4`.
    pub fn quadratic_discriminant(&self) -> Rational {
        &self.a2 * &self.a2 - &self.a4 * rat_int(int(4))
    }

    pub fn rhs(&self, u: &Rational) -> Rational {
        ((u + &self.a2) * u + &self.a4) * u
    }

    pub fn is_on_curve(&self, p: &CurvePoint) -> bool {
        match p {
            CurvePoint::Infinity => true,
            CurvePoint::Affine { u, v } => v * v == self.rhs(u),
        }
    }

    fn check(&self, p: &CurvePoint) -> Result<()> {
        if self.is_on_curve(p) {
            Ok(())
        } else {
            Err(Error::NotOnCurve)
        }
    }

    pub fn integral_coefficients(&self) -> Option<(Integer, Integer)> {
        (self.a2.is_integer() && self.a4.is_integer())
            .then(|| (self.a2.to_integer(), self.a4.to_integer()))
    }

    pub fn add(&self, p: &CurvePoint, q: &CurvePoint) -> Result<CurvePoint> {
        self.check(p)?;
        self.check(q)?;
        Ok(self.add_unchecked(p, q))
    }

    pub fn negate(&self, p: &CurvePoint) -> Result<CurvePoint> {
        self.check(p)?;
        Ok(negate_point(p))
    }

    /// `k * p` by double-and-add; negative `k` multiplies the negation.
    pub fn multiply(&self, k: i64, p: &CurvePoint) -> Result<CurvePoint> {
        self.check(p)?;
        Ok(self.multiply_unchecked(k, p))
    }

    pub(crate) fn multiply_unchecked(&self, k: i64, p: &CurvePoint) -> CurvePoint {
        let mut base = if k < 0 { negate_point(p) } else { p.clone() };
        let mut k = k.unsigned_abs();
        let mut acc = CurvePoint::Infinity;
        while k > 0 {
            if k & 1 == 1 {
                acc = self.add_unchecked(&acc, &base);
            }
            k >>= 1;
            if k > 0 {
                base = self.add_unchecked(&base, &base);
            }
        }
        acc
    }

    /// Chord-tangent addition; callers guarantee both points lie on the curve.
    pub(crate) fn add_unchecked(&self, p: &CurvePoint, q: &CurvePoint) -> CurvePoint {
        let (u1, v1, u2, v2) = match (p, q) {
            (CurvePoint::Infinity, _) => return q.clone(),
            (_, CurvePoint::Infinity) => return p.clone(),
            (CurvePoint::Affine { u: u1, v: v1 }, CurvePoint::Affine { u: u2, v: v2 }) => {
                (u1, v1, u2, v2)
            }
        };
        let slope = if u1 == u2 {
            // Vertical chord, or tangent at a 2-torsion point.
            if (v1 + v2).is_zero() {
                return CurvePoint::Infinity;
            }
            let three = rat_int(int(3));
            let two = rat_int(int(2));
            (three * u1 * u1 + two * &self.a2 * u1 + &self.a4) / (v1 * rat_int(int(2)))
        } else {
            (v2 - v1) / (u2 - u1)
        };
        let u3 = &slope * &slope - &self.a2 - u1 - u2;
        let v3 = slope * (u1 - &u3) - v1;
        CurvePoint::Affine { u: u3, v: v3 }
    }

    /// Real roots of the right-hand side cubic. Zero is always a root; the
    /// quadratic factor contributes `(-a2 ± sqrt(a2^2 - 4 a4)) / 2` when its
    /// discriminant is positive, as exact rationals when it is a square.
    pub fn real_roots(&self) -> RealRoots {
        let zero = RealRoot::Exact(Rational::zero());
        let d = self.quadratic_discriminant();
        if !d.is_positive() {
            // d == 0 would make the curve singular.
            return RealRoots { roots: vec![zero] };
        }
        let center = -&self.a2 / rat_int(int(2));
        let radicand = &d / rat_int(int(4));
        let (lo, hi) = match crate::arith::rational_sqrt(&radicand) {
            Some(r) => (RealRoot::Exact(&center - &r), RealRoot::Exact(&center + &r)),
            None => (
                RealRoot::Surd(QuadraticSurd {
                    center: center.clone(),
                    negative: true,
                    radicand: radicand.clone(),
                }),
                RealRoot::Surd(QuadraticSurd {
                    center,
                    negative: false,
                    radicand,
                }),
            ),
        };
        let mut roots = vec![lo, hi];
        let pos = roots
            .iter()
            .position(|r| r.cmp_rational(&Rational::zero()) == Ordering::Greater)
            .unwrap_or(2);
        roots.insert(pos, zero);
        RealRoots { roots }
    }

    /// Classifies a point as lying on the egg or on the unbounded branch.
    /// Infinity belongs to the unbounded branch.
    pub fn component_of(&self, p: &CurvePoint) -> Result<Component> {
        self.check(p)?;
        let roots = self.real_roots();
        let (_, egg_top) = roots.egg_interval().ok_or(Error::NoEgg)?;
        Ok(match p {
            CurvePoint::Infinity => Component::Infinite,
            CurvePoint::Affine { u, .. } => {
                // On-curve points with u at most the middle root are on the egg.
                if egg_top.cmp_rational(u) != Ordering::Less {
                    Component::Egg
                } else {
                    Component::Infinite
                }
            }
        })
    }

    /// Factorization of `|a4|` for integral curves. Uses the closed forms of
    /// the two families so that only small factors are trial-divided.
    pub fn a4_factorization(&self) -> Result<Factorization> {
        let (_, a4) = self
            .integral_coefficients()
            .ok_or(Error::NonIntegralCoefficients)?;
        Ok(match self.family {
            CurveFamily::IntegerRatio(n) => Factorization::of(&(Integer::from(n) * 4u32 + 1u32)),
            CurveFamily::NearEquilateral(m) => {
                let m = Integer::from(m);
                Factorization::of(&m)
                    .pow(3)
                    .times(&Factorization::of(&(&m * 9u32 + 4u32)))
            }
            CurveFamily::Raw => Factorization::of(&a4),
        })
    }

    /// Factorization of `|discriminant|` for integral curves.
    pub fn discriminant_factorization(&self) -> Result<Factorization> {
        let (a2, a4) = self
            .integral_coefficients()
            .ok_or(Error::NonIntegralCoefficients)?;
        let sixteen = Factorization::of(&int(16));
        let quad = match self.family {
            // a2^2 - 4 a4 = 16 N^3 (N - 2)
            CurveFamily::IntegerRatio(n) => {
                let n = Integer::from(n);
                sixteen
                    .clone()
                    .times(&Factorization::of(&n).pow(3))
                    .times(&Factorization::of(&(&n - 2u32)))
            }
            // a2^2 - 4 a4 = 16 (2M + 1)^3
            CurveFamily::NearEquilateral(m) => sixteen
                .clone()
                .times(&Factorization::of(&(Integer::from(m) * 2u32 + 1u32)).pow(3)),
            CurveFamily::Raw => Factorization::of(&(&a2 * &a2 - &a4 * 4u32)),
        };
        Ok(sixteen.times(&self.a4_factorization()?.pow(2)).times(&quad))
    }
}

pub(crate) fn negate_point(p: &CurvePoint) -> CurvePoint {
    match p {
        CurvePoint::Infinity => CurvePoint::Infinity,
        CurvePoint::Affine { u, v } => CurvePoint::Affine {
            u: u.clone(),
            v: -v,
        },
    }
}

impl fmt::Display for Curve {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "v^2 = u^3 + ({})u^2 + ({})u", self.a2, self.a4)
    }
}

/// Integer roots of the monic cubic `x^3 + b x^2 + c x + d`, ascending.
///
/// Splits the line at the critical points of the cubic and binary-searches
/// each monotone stretch, so it stays exact for arbitrarily large inputs.
pub(crate) fn integer_roots_monic_cubic(b: &Integer, c: &Integer, d: &Integer) -> Vec<Integer> {
    let eval = |x: &Integer| ((x + b) * x + c) * x + d;
    let bound: Integer = b.abs().max(c.abs()).max(d.abs()) + 1u32;
    let mut roots = Vec::new();
    let push = |x: Integer, roots: &mut Vec<Integer>| {
        if !roots.contains(&x) && eval(&x).is_zero() {
            roots.push(x);
        }
    };
    // derivative 3x^2 + 2bx + c; discriminant 4b^2 - 12c
    let dd: Integer = b * b * 4u32 - c * 12u32;
    if !dd.is_positive() {
        if let Some(x) = search_monotone(&eval, -bound.clone(), bound.clone(), true) {
            push(x, &mut roots);
        }
    } else {
        let s = crate::arith::isqrt(&dd);
        let lo_c = floor_div(&(-(b * 2u32) - &s - 1u32), &int(6));
        let hi_c = ceil_div(&(-(b * 2u32) + &s + 1u32), &int(6));
        let lo_c = lo_c.max(-bound.clone()).min(bound.clone());
        let hi_c = hi_c.max(-bound.clone()).min(bound.clone());
        for k in 0..3u32 {
            push(&lo_c + k, &mut roots);
            push(&hi_c - k, &mut roots);
        }
        if let Some(x) = search_monotone(&eval, -bound.clone(), lo_c.clone(), true) {
            push(x, &mut roots);
        }
        if &lo_c + 2u32 <= &hi_c - 2u32 {
            if let Some(x) = search_monotone(&eval, &lo_c + 2u32, &hi_c - 2u32, false) {
                push(x, &mut roots);
            }
        }
        if let Some(x) = search_monotone(&eval, hi_c, bound, true) {
            push(x, &mut roots);
        }
    }
    roots.sort();
    roots
}

fn search_monotone(
    eval: &impl Fn(&Integer) -> Integer,
    mut lo: Integer,
    mut hi: Integer,
    increasing: bool,
) -> Option<Integer> {
    while lo <= hi {
        let mid: Integer = (&lo + &hi) >> 1u32;
        let val = eval(&mid);
        if val.is_zero() {
            return Some(mid);
        }
        if val.is_positive() == increasing {
            hi = mid - 1u32;
        } else {
            lo = mid + 1u32;
        }
    }
    None
}

fn floor_div(a: &Integer, b: &Integer) -> Integer {
    a.div_floor(b)
}

fn ceil_div(a: &Integer, b: &Integer) -> Integer {
    -(-a).div_floor(b)
}

/// Integral points `(u, 0)`: zero and any integer roots of `u^2 + a2 u + a4`.
pub(crate) fn integral_two_torsion(a2: &Integer, a4: &Integer) -> Vec<Integer> {
    let mut out = vec![Integer::zero()];
    let d: Integer = a2 * a2 - a4 * 4u32;
    if let Some(s) = is_perfect_square(&d) {
        for num in [-a2 - &s, -a2 + &s] {
            if num.is_even() {
                let r = num / 2u32;
                if !out.contains(&r) {
                    out.push(r);
                }
            }
        }
    }
    out.sort();
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat;

    fn pt(u: (i64, i64), v: (i64, i64)) -> CurvePoint {
        CurvePoint::affine(rat(u.0, u.1), rat(v.0, v.1))
    }

    #[test]
    fn discriminant_examples() {
        let e3 = Curve::e_n(3).unwrap();
        assert_eq!(e3.a2(), &rat(22, 1));
        assert_eq!(e3.a4(), &rat(13, 1));
        assert_eq!(e3.discriminant(), rat(1_168_128, 1));
        assert_eq!(Curve::e_n(2), Err(Error::SingularCurve));
        // closed form 256 N^3 (N-2) (4N+1)^2 against 16 a4^2 (a2^2 - 4 a4)
        let e26 = Curve::e_n(26).unwrap();
        let closed = int(256) * int(26).pow(3) * int(24) * int(105).pow(2);
        assert_eq!(e26.discriminant(), rat_int(closed));
    }

    #[test]
    fn on_curve_examples() {
        let e7 = Curve::e_n(7).unwrap();
        assert!(e7.is_on_curve(&pt((29, 169), (6902, 2197))));
        assert!(e7.is_on_curve(&CurvePoint::from_ints(0, 0)));
        assert!(!e7.is_on_curve(&CurvePoint::from_ints(1, 15)));
        assert!(e7.is_on_curve(&CurvePoint::from_ints(1, 14)));
        assert!(e7.is_on_curve(&CurvePoint::Infinity));
    }

    #[test]
    fn add_examples() {
        let e7 = Curve::e_n(7).unwrap();
        let p = pt((29, 169), (6902, 2197));
        assert_eq!(e7.add(&p, &CurvePoint::Infinity).unwrap(), p);
        let o = CurvePoint::from_ints(0, 0);
        assert_eq!(e7.add(&o, &o).unwrap(), CurvePoint::Infinity);
        for n in [3u64, 7, 26] {
            let e = Curve::e_n(n).unwrap();
            let t = CurvePoint::from_ints(1, 2 * n as i64);
            assert_eq!(
                e.add(&t, &t).unwrap(),
                CurvePoint::from_ints(1, -2 * n as i64)
            );
        }
        assert_eq!(
            e7.add(&CurvePoint::from_ints(1, 15), &o),
            Err(Error::NotOnCurve)
        );
    }

    #[test]
    fn multiply_examples() {
        let e7 = Curve::e_n(7).unwrap();
        let p = pt((29, 169), (6902, 2197));
        assert_eq!(e7.multiply(0, &p).unwrap(), CurvePoint::Infinity);
        assert_eq!(e7.multiply(-1, &p).unwrap(), e7.negate(&p).unwrap());
        for n in [3i64, 7, 50] {
            let e = Curve::e_n(n as u64).unwrap();
            let six = CurvePoint::from_ints(4 * n + 1, 2 * n * (4 * n + 1));
            assert_eq!(e.multiply(6, &six).unwrap(), CurvePoint::Infinity);
            assert_ne!(e.multiply(3, &six).unwrap(), CurvePoint::Infinity);
            assert_eq!(
                e.multiply(3, &CurvePoint::from_ints(1, 2 * n)).unwrap(),
                CurvePoint::Infinity
            );
        }
        let p5 = e7.multiply(5, &p).unwrap();
        let mut acc = CurvePoint::Infinity;
        for _ in 0..5 {
            acc = e7.add(&acc, &p).unwrap();
        }
        assert_eq!(p5, acc);
        assert_eq!(e7.multiply(-5, &p).unwrap(), e7.negate(&acc).unwrap());
    }

    #[test]
    fn real_roots_examples() {
        // u^2 + 166u + 29 has roots -83 ± sqrt(6860) = -83 ± 14 sqrt(35)
        let roots = Curve::e_n(7).unwrap().real_roots();
        assert!(roots.has_egg());
        assert_eq!(roots.roots.len(), 3);
        match &roots.roots[0] {
            RealRoot::Surd(s) => {
                assert_eq!(s.center, rat(-83, 1));
                assert_eq!(s.radicand, rat(6860, 1));
                assert!(s.negative);
            }
            other => panic!("unexpected {other:?}"),
        }
        assert_eq!(roots.roots[2], RealRoot::Exact(rat(0, 1)));
        let lo = roots.roots[0].to_f64();
        let hi = roots.roots[1].to_f64();
        assert!((lo - (-83.0 - 14.0 * 35f64.sqrt())).abs() < 1e-9);
        assert!((hi - (-83.0 + 14.0 * 35f64.sqrt())).abs() < 1e-9);

        // E_1 shape: a2 = -2, a4 = 5, a2^2 - 4 a4 = 16 N (N - 2) = -16
        let e1 = Curve::raw(rat(-2, 1), rat(5, 1)).unwrap();
        assert_eq!(e1.quadratic_discriminant(), rat(-16, 1));
        assert!(!e1.real_roots().has_egg());

        // exact fast path: F_4 has u^2 + 148u + 2560 = (u + 20)(u + 128)
        let f4 = Curve::f_m(4).unwrap();
        let r = f4.real_roots();
        assert_eq!(
            r.roots,
            vec![
                RealRoot::Exact(rat(-128, 1)),
                RealRoot::Exact(rat(-20, 1)),
                RealRoot::Exact(rat(0, 1))
            ]
        );
    }

    #[test]
    fn roots_with_positive_egg() {
        // u(u - 1)(u - 4) = u^3 - 5u^2 + 4u: egg spans [0, 1]
        let c = Curve::raw(rat(-5, 1), rat(4, 1)).unwrap();
        let r = c.real_roots();
        assert_eq!(
            r.roots,
            vec![
                RealRoot::Exact(rat(0, 1)),
                RealRoot::Exact(rat(1, 1)),
                RealRoot::Exact(rat(4, 1))
            ]
        );
        assert_eq!(
            c.component_of(&CurvePoint::from_ints(0, 0)).unwrap(),
            Component::Egg
        );
        assert_eq!(
            c.component_of(&CurvePoint::from_ints(4, 0)).unwrap(),
            Component::Infinite
        );
    }

    #[test]
    fn surd_comparisons() {
        // 1 + sqrt(2) and 1 - sqrt(2)
        let plus = QuadraticSurd {
            center: rat(1, 1),
            negative: false,
            radicand: rat(2, 1),
        };
        let minus = QuadraticSurd {
            negative: true,
            ..plus.clone()
        };
        assert_eq!(plus.cmp_rational(&rat(241, 100)), Ordering::Greater);
        assert_eq!(plus.cmp_rational(&rat(242, 100)), Ordering::Less);
        assert_eq!(minus.cmp_rational(&rat(-41, 100)), Ordering::Less);
        assert_eq!(minus.cmp_rational(&rat(-42, 100)), Ordering::Greater);
        assert_eq!(minus.cmp_rational(&rat(5, 1)), Ordering::Less);
        assert_eq!(plus.cmp_rational(&rat(-5, 1)), Ordering::Greater);
    }

    #[test]
    fn component_examples() {
        let e7 = Curve::e_n(7).unwrap();
        assert_eq!(
            e7.component_of(&pt((29, 169), (6902, 2197))).unwrap(),
            Component::Infinite
        );
        assert_eq!(
            e7.component_of(&CurvePoint::from_ints(0, 0)).unwrap(),
            Component::Infinite
        );
        assert_eq!(
            e7.component_of(&CurvePoint::Infinity).unwrap(),
            Component::Infinite
        );
        let e1 = Curve::raw(rat(-2, 1), rat(5, 1)).unwrap();
        assert_eq!(
            e1.component_of(&CurvePoint::from_ints(0, 0)),
            Err(Error::NoEgg)
        );
    }

    #[test]
    fn cubic_integer_roots() {
        // (x - 3)(x + 5)(x - 7) = x^3 - 5x^2 - 29x + 105
        assert_eq!(
            integer_roots_monic_cubic(&int(-5), &int(-29), &int(105)),
            vec![int(-5), int(3), int(7)]
        );
        // x^3 + x + 1: one irrational root
        assert!(integer_roots_monic_cubic(&int(0), &int(1), &int(1)).is_empty());
        // (x - 2)^2 (x + 1) = x^3 - 3x^2 + 4
        assert_eq!(
            integer_roots_monic_cubic(&int(-3), &int(0), &int(4)),
            vec![int(-1), int(2)]
        );
        // u^3 + 166 u^2 + 29 u - 14^2 has root u = 1
        assert_eq!(
            integer_roots_monic_cubic(&int(166), &int(29), &int(-196)),
            vec![int(1)]
        );
        // brute-force oracle on a small grid
        for b in -6i64..=6 {
            for c in -6i64..=6 {
                for d in -12i64..=12 {
                    let expect: Vec<Integer> = (-40i64..=40)
                        .filter(|x| x * x * x + b * x * x + c * x + d == 0)
                        .map(int)
                        .collect();
                    assert_eq!(
                        integer_roots_monic_cubic(&int(b), &int(c), &int(d)),
                        expect,
                        "b={b} c={c} d={d}"
                    );
                }
            }
        }
    }

    #[test]
    fn discriminant_factorizations_match_values() {
        for c in [
            Curve::e_n(7).unwrap(),
            Curve::e_n(26).unwrap(),
            Curve::f_m(4).unwrap(),
            Curve::f_m(89).unwrap(),
        ] {
            let f = c.discriminant_factorization().unwrap();
            assert_eq!(rat_int(f.value()), c.discriminant().abs());
            assert_eq!(rat_int(c.a4_factorization().unwrap().value()), c.a4().abs());
        }
        let raw = Curve::raw(rat(-5, 1), rat(4, 1)).unwrap();
        assert_eq!(
            rat_int(raw.discriminant_factorization().unwrap().value()),
            raw.discriminant().abs()
        );
        let half = Curve::raw(rat(1, 2), rat(4, 1)).unwrap();
        assert_eq!(
            half.discriminant_factorization(),
            Err(Error::NonIntegralCoefficients)
        );
    }
}
