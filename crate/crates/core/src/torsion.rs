//! Torsion subgroups by Nagell–Lutz enumeration.
//!
//! For a curve with integral coefficients every torsion point other than the
//! identity is integral, and either `v = 0` or `v^2` divides the discriminant.
//! Candidates are generated from the discriminant's factorization and kept
//! when some multiple up to 12 (Mazur's bound) reaches the identity.

use std::fmt;

use rayon::prelude::*;

use crate::arith::{int, rat_int, Integer};
use crate::curve::{
    integer_roots_monic_cubic, integral_two_torsion, Curve, CurveFamily, CurvePoint,
};
use crate::error::{Error, Result};

/// Largest order a rational torsion point can have.
pub const MAX_TORSION_ORDER: u32 = 12;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TorsionStructure {
    /// `Z/n`.
    Cyclic(u32),
    /// `Z/2 x Z/2m`, stored as the order `2m` of the second factor.
    TwoByEven(u32),
    Other(u32),
}

impl TorsionStructure {
    pub fn order(&self) -> u32 {
        match *self {
            TorsionStructure::Cyclic(n) | TorsionStructure::Other(n) => n,
            TorsionStructure::TwoByEven(n) => 2 * n,
        }
    }

    /// Whether the group is on Mazur's list of torsion groups over Q.
    pub fn is_mazur_admissible(&self) -> bool {
        match *self {
            TorsionStructure::Cyclic(n) => (1..=10).contains(&n) || n == 12,
            TorsionStructure::TwoByEven(n) => matches!(n, 2 | 4 | 6 | 8),
            TorsionStructure::Other(_) => false,
        }
    }
}

impl fmt::Display for TorsionStructure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TorsionStructure::Cyclic(n) => write!(f, "Z/{n}"),
            TorsionStructure::TwoByEven(n) => write!(f, "Z/2 x Z/{n}"),
            TorsionStructure::Other(n) => write!(f, "unrecognised group of order {n}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TorsionReport {
    /// Every torsion point with its order, sorted by order then coordinates.
    pub points: Vec<(CurvePoint, u32)>,
    pub structure: TorsionStructure,
}

impl TorsionReport {
    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn contains(&self, p: &CurvePoint) -> bool {
        self.points.iter().any(|(q, _)| q == p)
    }

    pub fn order_of(&self, p: &CurvePoint) -> Option<u32> {
        self.points.iter().find(|(q, _)| q == p).map(|(_, k)| *k)
    }

    pub fn count_of_order(&self, k: u32) -> usize {
        self.points.iter().filter(|(_, o)| *o == k).count()
    }
}

/// Order of `p`, or `None` if no multiple up to 12 is the identity.
pub fn order_of(c: &Curve, p: &CurvePoint) -> Result<Option<u32>> {
    if !c.is_on_curve(p) {
        return Err(Error::NotOnCurve);
    }
    Ok(order_unchecked(c, p))
}

fn order_unchecked(c: &Curve, p: &CurvePoint) -> Option<u32> {
    let integral = c.integral_coefficients().is_some();
    let mut q = p.clone();
    for k in 1..=MAX_TORSION_ORDER {
        if q.is_infinity() {
            return Some(k);
        }
        if integral && !q.is_integral() {
            return None;
        }
        q = c.add_unchecked(&q, p);
    }
    None
}

/// Cheap torsion test: non-integral points on integral curves are never torsion.
pub fn is_torsion(c: &Curve, p: &CurvePoint) -> bool {
    if c.integral_coefficients().is_some() && !p.is_integral() {
        return false;
    }
    order_unchecked(c, p).is_some()
}

pub fn torsion_subgroup(c: &Curve) -> Result<TorsionReport> {
    let (a2, a4) = c
        .integral_coefficients()
        .ok_or(Error::NonIntegralCoefficients)?;
    let disc = c.discriminant_factorization()?;

    let mut candidates: Vec<CurvePoint> = integral_two_torsion(&a2, &a4)
        .into_iter()
        .map(|u| CurvePoint::affine(rat_int(u), rat_int(int(0))))
        .collect();
    let divisors = disc.square_divisors();
    let from_divisors: Vec<Vec<CurvePoint>> = divisors
        .par_iter()
        .map(|v| {
            let v_sq: Integer = v * v;
            integer_roots_monic_cubic(&a2, &a4, &-v_sq)
                .into_iter()
                .flat_map(|u| {
                    let u = rat_int(u);
                    [
                        CurvePoint::affine(u.clone(), rat_int(v.clone())),
                        CurvePoint::affine(u, rat_int(-v.clone())),
                    ]
                })
                .collect()
        })
        .collect();
    candidates.extend(from_divisors.into_iter().flatten());

    let mut points: Vec<(CurvePoint, u32)> = candidates
        .into_par_iter()
        .filter_map(|p| {
            debug_assert!(c.is_on_curve(&p));
            order_unchecked(c, &p).map(|k| (p, k))
        })
        .collect();
    points.push((CurvePoint::Infinity, 1));
    points.sort_by(|(p, a), (q, b)| a.cmp(b).then_with(|| p.sort_key().cmp(&q.sort_key())));
    points.dedup();

    let n = points.len() as u32;
    let two_torsion = points.iter().filter(|(_, k)| *k == 2).count();
    let max_order = points.iter().map(|(_, k)| *k).max().unwrap_or(1);
    let structure = match two_torsion {
        0 | 1 if max_order == n => TorsionStructure::Cyclic(n),
        3 if n.is_multiple_of(2) => TorsionStructure::TwoByEven(n / 2),
        _ => TorsionStructure::Other(n),
    };
    Ok(TorsionReport { points, structure })
}

/// The torsion points the closed forms predict for `E_N` and `F_M`:
/// `(0,0)` of order 2, a pair of order 3 and a pair of order 6.
pub fn closed_form_points(c: &Curve) -> Option<Vec<(CurvePoint, u32)>> {
    let (three, six) = match c.family() {
        CurveFamily::IntegerRatio(n) => {
            let n = Integer::from(n);
            let a4: Integer = &n * 4u32 + 1u32;
            let v3: Integer = &n * 2u32;
            let v6: Integer = &v3 * &a4;
            ((int(1), v3), (a4, v6))
        }
        CurveFamily::NearEquilateral(m) => {
            let m = Integer::from(m);
            let m2: Integer = &m * &m;
            let v3: Integer = &m2 * 2u32 * (&m * 2u32 + 1u32);
            let u6: Integer = &m2 * 9u32 + &m * 4u32;
            let v6: Integer = &m * 2u32 * (&m * 2u32 + 1u32) * (&m * 9u32 + 4u32);
            ((m2, v3), (u6, v6))
        }
        CurveFamily::Raw => return None,
    };
    let pt = |u: &Integer, v: Integer| CurvePoint::affine(rat_int(u.clone()), rat_int(v));
    Some(vec![
        (CurvePoint::Infinity, 1),
        (pt(&int(0), int(0)), 2),
        (pt(&three.0, three.1.clone()), 3),
        (pt(&three.0, -three.1), 3),
        (pt(&six.0, six.1.clone()), 6),
        (pt(&six.0, -six.1), 6),
    ])
}

/// Differences between the computed torsion and the closed-form prediction.
pub fn deviations_from_closed_form(c: &Curve, report: &TorsionReport) -> Vec<String> {
    let Some(expected) = closed_form_points(c) else {
        return Vec::new();
    };
    let mut out = Vec::new();
    for (p, k) in &expected {
        match report.order_of(p) {
            Some(found) if found == *k => {}
            Some(found) => out.push(format!("{p} has order {found}, expected {k}")),
            None => out.push(format!(
                "expected torsion point {p} of order {k} is missing"
            )),
        }
    }
    for (p, k) in &report.points {
        if !expected.iter().any(|(q, _)| q == p) {
            out.push(format!("extra torsion point {p} of order {k}"));
        }
    }
    out
}
