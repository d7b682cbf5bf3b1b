//! From curve points to triangles and back.
//!
//! A target ratio `rho = a/b` (either an integer `N`, or `2 + 1/M =
//! (2M+1)/M`) determines the curve
//!
//! ```text
//! v^2 = u^3 + 2(2a^2 - 2ab - b^2) u^2 + b^3 (4a + b) u
//! ```
//!
//! which is `E_N` for `b = 1` and `F_M` for `b = M`. A point maps to the side
//! ratio
//!
//! ```text
//! g/s = (v - b^2 (4a + b) + (2a + b) u) / ((u - b^2)(4a + b))
//! ```
//!
//! and the remaining two sides are the roots of a quadratic in `f`.

use std::fmt;

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::arith::{int, rat_int, rational_sqrt, Integer, Rational};
use crate::curve::{Component, Curve, CurveFamily, CurvePoint};
use crate::error::{Error, Result};
use crate::torsion::is_torsion;
use crate::triangle::{is_valid_triangle, ratio, to_primitive, Triangle, Triple};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum RatioTarget {
    /// `R/r = N`, `N >= 3`.
    Integer(u64),
    /// `R/r = 2 + 1/M`, `M >= 1`.
    NearEquilateral(u64),
}

impl RatioTarget {
    pub fn integer(n: u64) -> Result<Self> {
        match n {
            2 => Err(Error::SingularCurve),
            0 | 1 => Err(Error::InvalidTarget(format!(
                "R/r = {n} is impossible: R/r >= 2 for every triangle"
            ))),
            _ => Ok(RatioTarget::Integer(n)),
        }
    }

    pub fn near_equilateral(m: u64) -> Result<Self> {
        if m == 0 {
            return Err(Error::InvalidTarget("M must be a positive integer".into()));
        }
        Ok(RatioTarget::NearEquilateral(m))
    }

    /// `(a, b)` with `rho = a / b` in lowest terms.
    pub fn parts(&self) -> (Integer, Integer) {
        match *self {
            RatioTarget::Integer(n) => (Integer::from(n), Integer::one()),
            RatioTarget::NearEquilateral(m) => (Integer::from(2 * m + 1), Integer::from(m)),
        }
    }

    pub fn rho(&self) -> Rational {
        let (a, b) = self.parts();
        Rational::new(a, b)
    }

    pub fn residue_mod_8(&self) -> Option<u8> {
        match *self {
            RatioTarget::Integer(n) => Some((n % 8) as u8),
            RatioTarget::NearEquilateral(_) => None,
        }
    }

    /// `u` coordinate of the order-3 points, where the g/s map has its pole.
    pub fn pole_u(&self) -> Rational {
        let (_, b) = self.parts();
        rat_int(&b * &b)
    }

    pub fn curve(&self) -> Curve {
        curve_for(self).expect("validated targets give nonsingular curves")
    }
}

impl fmt::Display for RatioTarget {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RatioTarget::Integer(n) => write!(f, "N={n}"),
            RatioTarget::NearEquilateral(m) => write!(f, "M={m}"),
        }
    }
}

pub fn curve_for(target: &RatioTarget) -> Result<Curve> {
    let (a, b) = target.parts();
    let a2: Integer = (&a * &a * 2u32 - &a * &b * 2u32 - &b * &b) * 2u32;
    let a4: Integer = &b * &b * &b * (&a * 4u32 + &b);
    let family = match *target {
        RatioTarget::Integer(n) => CurveFamily::IntegerRatio(n),
        RatioTarget::NearEquilateral(m) => CurveFamily::NearEquilateral(m),
    };
    Curve::new(rat_int(a2), rat_int(a4), family)
}

pub fn point_to_g_over_s(target: &RatioTarget, p: &CurvePoint) -> Result<Rational> {
    let curve = target.curve();
    if !curve.is_on_curve(p) {
        return Err(Error::NotOnCurve);
    }
    let CurvePoint::Affine { u, v } = p else {
        return Err(Error::PointAtInfinity);
    };
    let (a, b) = target.parts();
    let four_a_b = rat_int(&a * 4u32 + &b);
    let pole = target.pole_u();
    if *u == pole {
        return Err(Error::Pole(u.to_string()));
    }
    let num = v - &pole * &four_a_b + rat_int(&a * 2u32 + &b) * u;
    Ok(num / ((u - pole) * four_a_b))
}

/// `A f^2 + B f + C = 0`, whose roots are the two sides other than `g`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuadraticInF {
    pub a: Rational,
    pub b: Rational,
    pub c: Rational,
    pub g: Rational,
    pub s: Rational,
}

impl QuadraticInF {
    pub fn discriminant(&self) -> Rational {
        &self.b * &self.b - &self.a * &self.c * rat_int(int(4))
    }
}

pub fn build_f_quadratic(target: &RatioTarget, g: &Rational, s: &Rational) -> QuadraticInF {
    let rho = target.rho();
    let k = |n: i64| rat_int(int(n));
    let four_rho_1 = &rho * k(4) + k(1);
    let a = (&rho * s * k(4) - g * &four_rho_1) * k(2);
    let b =
        -(g * g * &four_rho_1 - g * s * k(2) * (&rho * k(6) + k(1)) + &rho * s * s * k(8)) * k(2);
    let gs = g - s;
    let c = &rho * s * &gs * &gs * k(8);
    QuadraticInF {
        a,
        b,
        c,
        g: g.clone(),
        s: s.clone(),
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FRoots {
    /// Both roots, ascending.
    Two(Rational, Rational),
    /// `A = 0`: the equation is linear.
    One(Rational),
}

pub fn solve_f_quadratic(q: &QuadraticInF) -> Result<Option<FRoots>> {
    if q.a.is_zero() {
        if q.b.is_zero() {
            return Err(Error::DegenerateQuadratic);
        }
        return Ok(Some(FRoots::One(-&q.c / &q.b)));
    }
    let Some(d) = rational_sqrt(&q.discriminant()) else {
        return Ok(None);
    };
    let two_a = &q.a * rat_int(int(2));
    let r1 = (-&q.b - &d) / &two_a;
    let r2 = (-&q.b + &d) / &two_a;
    Ok(Some(if r1 <= r2 {
        FRoots::Two(r1, r2)
    } else {
        FRoots::Two(r2, r1)
    }))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SolutionOutcome {
    Triangle(Triangle),
    /// Satisfies the ratio equation but has a non-positive side.
    Signed(Triple),
    NoSolution(String),
}

impl SolutionOutcome {
    pub fn triangle(&self) -> Option<&Triangle> {
        match self {
            SolutionOutcome::Triangle(t) => Some(t),
            _ => None,
        }
    }
}

/// The triangle (or signed representation) a curve point encodes.
///
/// Torsion points on the unbounded branch map to `g/s` in `{0, 1}` or to
/// the pole and are rejected. Torsion points on the egg, which exist only
/// when all 2-torsion is rational, are mapped like any other point.
pub fn point_to_solution(target: &RatioTarget, p: &CurvePoint) -> Result<SolutionOutcome> {
    let curve = target.curve();
    if !curve.is_on_curve(p) {
        return Err(Error::NotOnCurve);
    }
    if is_torsion(&curve, p) && curve.component_of(p)? == Component::Infinite {
        return Err(Error::TorsionPoint);
    }
    let c = point_to_g_over_s(target, p)?;
    let s = rat_int(c.denom().clone());
    let g = rat_int(c.numer().clone());
    Ok(outcome_from_sides(target, &g, &s))
}

fn outcome_from_sides(target: &RatioTarget, g: &Rational, s: &Rational) -> SolutionOutcome {
    let q = build_f_quadratic(target, g, s);
    let roots = match solve_f_quadratic(&q) {
        Ok(Some(FRoots::Two(f, h))) => (f, h),
        Ok(Some(FRoots::One(_))) => {
            return SolutionOutcome::NoSolution("quadratic in f degenerates to linear".into())
        }
        Ok(None) => {
            return SolutionOutcome::NoSolution("discriminant is not a rational square".into())
        }
        Err(e) => return SolutionOutcome::NoSolution(e.to_string()),
    };
    let (f, h) = roots;
    let triple = Triple::from_rationals(&f, g, &h);
    if is_valid_triangle(&triple) {
        let t = to_primitive(&f, g, &h).expect("valid triple");
        debug_assert_eq!(ratio(&t.as_triple()).ok(), Some(target.rho()));
        SolutionOutcome::Triangle(t)
    } else if triple.f.is_zero() || triple.g.is_zero() || triple.h.is_zero() {
        SolutionOutcome::NoSolution(format!("zero side in {triple}"))
    } else {
        SolutionOutcome::Signed(triple)
    }
}

/// The open interval of `g/s` values that give positive sides:
/// `0 < g/s < 4 rho / (4 rho + 1)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OpenInterval {
    pub lo: Rational,
    pub hi: Rational,
}

impl OpenInterval {
    pub fn contains(&self, x: &Rational) -> bool {
        *x > self.lo && *x < self.hi
    }
}

pub fn positivity_window(target: &RatioTarget) -> OpenInterval {
    let four_rho = target.rho() * rat_int(int(4));
    let hi = &four_rho / (&four_rho + Rational::one());
    OpenInterval {
        lo: Rational::zero(),
        hi,
    }
}

/// All curve points mapping to `g/s = c`.
///
/// The level set of the map is the line through the order-3 pole point
/// `(b^2, 2b^2(2a+b))`. Substituting the line into the cubic leaves a cubic
/// in `u` with the known root `b^2`; the other two roots come from the
/// deflated quadratic.
pub fn g_over_s_to_points(target: &RatioTarget, c: &Rational) -> Vec<CurvePoint> {
    let curve = target.curve();
    let (a, b) = target.parts();
    let four_a_b = rat_int(&a * 4u32 + &b);
    let pole = target.pole_u();
    let slope = c * &four_a_b - rat_int(&a * 2u32 + &b);
    let intercept = &pole * &four_a_b * (Rational::one() - c);

    // u^3 + c2 u^2 + c1 u + c0 = (u - pole)(u^2 + q1 u + q0)
    let c2 = curve.a2() - &slope * &slope;
    let c1 = curve.a4() - &slope * &intercept * rat_int(int(2));
    let c0 = -(&intercept * &intercept);
    let q1 = &c2 + &pole;
    let q0 = &c1 + &q1 * &pole;
    debug_assert_eq!(&c0 + &q0 * &pole, Rational::zero());

    let disc = &q1 * &q1 - &q0 * rat_int(int(4));
    let Some(root) = rational_sqrt(&disc) else {
        return Vec::new();
    };
    let two = rat_int(int(2));
    let mut out: Vec<CurvePoint> = Vec::new();
    for u in [(-&q1 - &root) / &two, (-&q1 + &root) / &two] {
        if u == pole {
            continue;
        }
        let v = &slope * &u + &intercept;
        let p = CurvePoint::affine(u, v);
        debug_assert!(curve.is_on_curve(&p));
        if !out.contains(&p) {
            out.push(p);
        }
    }
    out
}

/// Curve points encoding a given triangle, one level set per choice of `g`.
pub fn triangle_to_points(target: &RatioTarget, t: &Triangle) -> Vec<CurvePoint> {
    let s = t.semiperimeter();
    let mut out: Vec<CurvePoint> = Vec::new();
    for g in [t.f(), t.g(), t.h()] {
        let c = rat_int(g.clone()) / &s;
        for p in g_over_s_to_points(target, &c) {
            if !out.contains(&p) {
                out.push(p);
            }
        }
    }
    out.sort_by_key(|p| p.sort_key());
    out
}

/// A small, deterministic height proxy used to pick representatives.
pub(crate) fn point_height(p: &CurvePoint) -> u64 {
    match p {
        CurvePoint::Infinity => 0,
        CurvePoint::Affine { u, .. } => (u.numer().abs().bits()).max(u.denom().bits()),
    }
}

/// Whether the triangle's `R/r` equals the target exactly.
pub fn matches_target(target: &RatioTarget, t: &Triangle) -> bool {
    ratio(&t.as_triple()).ok() == Some(target.rho())
}
