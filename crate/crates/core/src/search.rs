//! Height-bounded search for triangles.
//!
//! Three routes, all exact:
//!
//! * [`quartic_sieve`] walks `x = p/q` through the positivity window of the
//!   quartic `y^2 = x^4 - 4(2ρ+1)x^3 + 4(4ρ^2+8ρ+1)x^2 - 16ρ(4ρ+1)x`, where
//!   `x = (4ρ+1) g/s`, and keeps the `x` giving rational squares.
//! * [`egg_sieve`] walks `u = m/e^2` across the egg and keeps the `u` where
//!   the cubic is a rational square.
//! * [`saturate`] combines known points with torsion and small multiples.
//!
//! Sieves run denominator strata in parallel and merge in canonical order,
//! so output never depends on scheduling. A time budget is only checked
//! between batches of strata.

use std::collections::{BTreeMap, HashSet};
use std::fmt;
use std::time::{Duration, Instant};

use num_integer::Integer as _;
use num_traits::{ToPrimitive, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::arith::{is_perfect_square, rat_int, square_root_i128, Integer, Rational};
use crate::curve::{Component, Curve, CurvePoint};
use crate::error::{Error, Result};
use crate::torsion::torsion_subgroup;
use crate::transform::{
    g_over_s_to_points, point_height, point_to_solution, RatioTarget, SolutionOutcome,
};
use crate::triangle::{ratio, ratio_via_radii, Triangle, Triple};

/// Strata processed between time-budget checks.
const BATCH: u64 = 16;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchConfig {
    /// Largest `q` in `x = p/q`, or largest `e` in `u = m/e^2`.
    pub denominator_bound: u64,
    /// Largest `|n|` in `T + nG`.
    pub multiple_bound: u64,
    pub time_budget: Option<Duration>,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig {
            denominator_bound: 200,
            multiple_bound: 3,
            time_budget: None,
        }
    }
}

impl SearchConfig {
    pub fn with_bound(denominator_bound: u64) -> Self {
        SearchConfig {
            denominator_bound,
            ..Default::default()
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.denominator_bound == 0 {
            return Err(Error::InvalidConfig(
                "denominator bound must be at least 1".into(),
            ));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Provenance {
    QuarticSieve,
    EggSieve,
    Saturation,
    Torsion,
}

impl fmt::Display for Provenance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Provenance::QuarticSieve => "quartic-sieve",
            Provenance::EggSieve => "egg-sieve",
            Provenance::Saturation => "saturation",
            Provenance::Torsion => "torsion",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolutionRecord {
    pub target: RatioTarget,
    /// Present exactly when the point is on the egg.
    pub triangle: Option<Triangle>,
    /// Signed solution of the ratio equation, for points off the egg.
    pub representation: Option<Triple>,
    pub point: CurvePoint,
    pub component: Component,
    pub provenance: Provenance,
    pub residue_mod_8: Option<u8>,
}

impl SolutionRecord {
    /// Builds the record for a point, or `None` for torsion points that
    /// carry no solution.
    pub fn from_point(
        target: &RatioTarget,
        curve: &Curve,
        p: &CurvePoint,
        provenance: Provenance,
    ) -> Result<Option<Self>> {
        let component = curve.component_of(p)?;
        let outcome = match point_to_solution(target, p) {
            Err(Error::TorsionPoint) => return Ok(None),
            other => other?,
        };
        let (triangle, representation) = match outcome {
            SolutionOutcome::Triangle(t) => {
                // Re-checked through the radii route, independent of the map.
                assert_eq!(
                    ratio_via_radii(&t),
                    target.rho(),
                    "triangle {t} does not realise {target}"
                );
                assert_eq!(
                    component,
                    Component::Egg,
                    "triangle {t} from a point off the egg"
                );
                (Some(t), None)
            }
            SolutionOutcome::Signed(s) => {
                debug_assert_eq!(ratio(&s).ok(), Some(target.rho()));
                (None, Some(s))
            }
            SolutionOutcome::NoSolution(_) => (None, None),
        };
        Ok(Some(SolutionRecord {
            target: *target,
            triangle,
            representation,
            point: p.clone(),
            component,
            provenance,
            residue_mod_8: target.residue_mod_8(),
        }))
    }

    pub fn triangle_key(&self) -> Option<Triangle> {
        self.triangle.as_ref().map(Triangle::sorted)
    }
}

/// Keeps the first record for each triangle (sides sorted); records without
/// a triangle are dropped.
pub fn dedupe_by_triangle(
    records: impl IntoIterator<Item = SolutionRecord>,
) -> Vec<SolutionRecord> {
    let mut seen = HashSet::new();
    records
        .into_iter()
        .filter(|r| r.triangle_key().is_some_and(|k| seen.insert(k)))
        .collect()
}

/// Runs `stratum` for every denominator in `1..=bound`, in parallel batches,
/// stopping early once the time budget is spent. Results come back in
/// stratum order.
fn run_strata<T: Send>(
    cfg: &SearchConfig,
    stratum: impl Fn(u64) -> Vec<T> + Sync,
) -> Vec<(u64, Vec<T>)> {
    let start = Instant::now();
    let mut out = Vec::new();
    let mut lo = 1u64;
    while lo <= cfg.denominator_bound {
        let hi = (lo + BATCH - 1).min(cfg.denominator_bound);
        let batch: Vec<(u64, Vec<T>)> =
            (lo..=hi).into_par_iter().map(|q| (q, stratum(q))).collect();
        out.extend(batch);
        lo = hi + 1;
        if cfg.time_budget.is_some_and(|b| start.elapsed() >= b) {
            break;
        }
    }
    out
}

/// Coefficients of `Q(p, q) = k0 p^4 + k1 p^3 q + k2 p^2 q^2 + k3 p q^3`,
/// the quartic at `x = p/q` with denominators cleared. For `ρ = a/b` this
/// is `b^2 q^4` times the quartic, so it is a square exactly when the
/// quartic value is a rational square.
fn quartic_coefficients(target: &RatioTarget) -> [Integer; 4] {
    let (a, b) = target.parts();
    let k0: Integer = &b * &b;
    let k1: Integer = -(&b * (&a * 2u32 + &b) * 4u32);
    let k2: Integer = (&a * &a * 4u32 + &a * &b * 8u32 + &b * &b) * 4u32;
    let k3: Integer = -(&a * (&a * 4u32 + &b) * 16u32);
    [k0, k1, k2, k3]
}

pub fn quartic_value(target: &RatioTarget, p: &Integer, q: &Integer) -> Integer {
    let [k0, k1, k2, k3] = quartic_coefficients(target);
    (((k0 * p + k1 * q) * p + k2 * q * q) * p + k3 * q * q * q) * p
}

/// Numerators `p` with `p/q` inside the window and `Q(p, q)` a square.
fn quartic_stratum(
    coeffs: &[Integer; 4],
    a: &Integer,
    b: &Integer,
    q: u64,
    fast: Option<[i128; 4]>,
) -> Vec<u64> {
    // p b < 4 a q
    let p_max = ((a * 4u32 * q - 1u32) / b)
        .to_u64()
        .expect("window fits in u64");
    let mut hits = Vec::new();
    match fast {
        Some([k0, k1, k2, k3]) => {
            let qi = q as i128;
            let c1 = k1 * qi;
            let c2 = k2 * qi * qi;
            let c3 = k3 * qi * qi * qi;
            for p in 1..=p_max {
                let pi = p as i128;
                let val = (((k0 * pi + c1) * pi + c2) * pi + c3) * pi;
                if square_root_i128(val).is_some() && p.gcd(&q) == 1 {
                    hits.push(p);
                }
            }
        }
        None => {
            let qb = Integer::from(q);
            for p in 1..=p_max {
                if p.gcd(&q) != 1 {
                    continue;
                }
                let pb = Integer::from(p);
                let [k0, k1, k2, k3] = coeffs;
                let val = (((k0 * &pb + k1 * &qb) * &pb + k2 * &qb * &qb) * &pb
                    + k3 * &qb * &qb * &qb)
                    * &pb;
                if is_perfect_square(&val).is_some() {
                    hits.push(p);
                }
            }
        }
    }
    hits
}

/// Whether every intermediate of the quartic evaluation fits in i128.
fn quartic_fits_i128(coeffs: &[Integer; 4], p_max: f64, q_max: f64) -> Option<[i128; 4]> {
    let mut bound = 0f64;
    for (i, k) in coeffs.iter().enumerate() {
        let k = k.to_f64()?.abs();
        bound += k * p_max.powi(4 - i as i32) * q_max.powi(i as i32);
    }
    if bound * 4.0 < 1e37 {
        let c: Vec<i128> = coeffs.iter().map(|k| k.to_i128()).collect::<Option<_>>()?;
        Some([c[0], c[1], c[2], c[3]])
    } else {
        None
    }
}

/// Sieves the quartic over `x = p/q`, `1 <= q <= bound`, `0 < x < 4ρ`.
/// Records are deduplicated by triangle and ordered by the first `(q, p)`
/// that produced them.
pub fn quartic_sieve(target: &RatioTarget, cfg: &SearchConfig) -> Result<Vec<SolutionRecord>> {
    cfg.validate()?;
    let curve = target.curve();
    let (a, b) = target.parts();
    let coeffs = quartic_coefficients(target);
    let p_max = (a.to_f64().unwrap() * 4.0 / b.to_f64().unwrap()) * cfg.denominator_bound as f64;
    let fast = quartic_fits_i128(&coeffs, p_max, cfg.denominator_bound as f64);
    let strata = run_strata(cfg, |q| quartic_stratum(&coeffs, &a, &b, q, fast));

    let four_a_b = rat_int(&a * 4u32 + &b);
    let mut records = Vec::new();
    for (q, ps) in strata {
        for p in ps {
            // g/s = x / (4ρ + 1) = p b / (q (4a + b))
            let c = Rational::new(Integer::from(p) * &b, Integer::from(q)) / &four_a_b;
            let points = g_over_s_to_points(target, &c);
            let Some(rep) = representative(&points) else {
                continue;
            };
            if let Some(rec) =
                SolutionRecord::from_point(target, &curve, rep, Provenance::QuarticSieve)?
            {
                records.push(rec);
            }
        }
    }
    Ok(dedupe_by_triangle(records))
}

/// Lowest-height point, ties broken by coordinates.
fn representative(points: &[CurvePoint]) -> Option<&CurvePoint> {
    points.iter().min_by(|p, q| {
        point_height(p)
            .cmp(&point_height(q))
            .then_with(|| p.sort_key().cmp(&q.sort_key()))
    })
}

/// Precomputed data for sieving one curve's egg.
struct EggGrid {
    a2: Integer,
    a4: Integer,
    /// Sign of `u` on the egg.
    negative: bool,
    /// `|u|` range covered by the egg, widened slightly; exactness is
    /// restored by the membership test on each hit.
    abs_lo: f64,
    abs_hi: f64,
    squarefree: Vec<Integer>,
    zero_on_egg: bool,
}

impl EggGrid {
    fn new(curve: &Curve) -> Result<Self> {
        let roots = curve.real_roots();
        let (lo, hi) = roots.egg_interval().ok_or(Error::NoEgg)?;
        let (a2, a4) = curve
            .integral_coefficients()
            .ok_or(Error::NonIntegralCoefficients)?;
        let (lo, hi) = (lo.to_f64(), hi.to_f64());
        let negative = hi <= 0.0;
        let (abs_lo, abs_hi) = if negative { (-hi, -lo) } else { (lo, hi) };
        let zero = Rational::zero();
        let zero_on_egg = roots.roots[..2]
            .iter()
            .any(|r| r.cmp_rational(&zero).is_eq());
        Ok(EggGrid {
            a2,
            a4,
            negative,
            abs_lo: (abs_lo * (1.0 - 1e-9)).max(0.0),
            abs_hi: abs_hi * (1.0 + 1e-9),
            squarefree: curve.a4_factorization()?.squarefree_divisors(),
            zero_on_egg,
        })
    }

    /// Hits `(m, w)` with `u = m/e^2`, `v = ±w/e^3` on the curve.
    ///
    /// Writing `m = ±d t^2` with `d` squarefree, `w^2 = m K` where
    /// `K = m^2 + a2 e^2 m + a4 e^4`, and `gcd(m, K)` divides `a4` once
    /// `gcd(m, e) = 1`. So `d` must divide `a4`, and the test reduces to
    /// `±d K` being a square; enumerating `(d, t)` covers every candidate
    /// `m` in the egg with far fewer evaluations than walking `m` directly.
    fn stratum(&self, e: u64) -> Vec<(Integer, Integer)> {
        let mut hits = Vec::new();
        if e == 1 && self.zero_on_egg {
            hits.push((Integer::zero(), Integer::zero()));
        }
        let e_sq = (e as f64) * (e as f64);
        let eb = Integer::from(e);
        let e2: Integer = &eb * &eb;
        let e4: Integer = &e2 * &e2;
        let fast = (
            self.a2.to_i128(),
            self.a4.to_i128(),
            e2.to_i128(),
            e4.to_i128(),
        );
        for d in &self.squarefree {
            let df = d.to_f64().unwrap();
            let t_lo = ((e_sq * self.abs_lo / df).sqrt().floor() as u64)
                .saturating_sub(1)
                .max(1);
            let t_hi = (e_sq * self.abs_hi / df).sqrt().ceil() as u64 + 1;
            let d_mod_e = (d % &eb).to_u64().unwrap();
            let d_small = d.to_i128();
            for t in t_lo..=t_hi {
                if e > 1 && ((d_mod_e * (t % e)) % e).gcd(&e) != 1 {
                    continue;
                }
                let found = match (d_small, fast) {
                    (Some(di), (Some(a2), Some(a4), Some(e2i), Some(e4i))) => {
                        egg_candidate_i128(di, t as i128, self.negative, a2, a4, e2i, e4i)
                    }
                    _ => None,
                };
                let found = match found {
                    Some(r) => r,
                    None => egg_candidate_big(d, t, self.negative, &self.a2, &self.a4, &e2, &e4),
                };
                if let Some(hit) = found {
                    hits.push(hit);
                }
            }
        }
        hits
    }
}

/// `Some(result)` when the evaluation fit in i128, `None` on overflow.
#[inline]
fn egg_candidate_i128(
    d: i128,
    t: i128,
    negative: bool,
    a2: i128,
    a4: i128,
    e2: i128,
    e4: i128,
) -> Option<Option<(Integer, Integer)>> {
    let dt2 = d.checked_mul(t.checked_mul(t)?)?;
    let m = if negative { -dt2 } else { dt2 };
    let k = m
        .checked_mul(m)?
        .checked_add(a2.checked_mul(e2)?.checked_mul(m)?)?
        .checked_add(a4.checked_mul(e4)?)?;
    let dk = d.checked_mul(k)?;
    let signed = if negative { -dk } else { dk };
    Some(square_root_i128(signed).map(|r| (Integer::from(m), Integer::from(r) * Integer::from(t))))
}

fn egg_candidate_big(
    d: &Integer,
    t: u64,
    negative: bool,
    a2: &Integer,
    a4: &Integer,
    e2: &Integer,
    e4: &Integer,
) -> Option<(Integer, Integer)> {
    let tb = Integer::from(t);
    let dt2: Integer = d * &tb * &tb;
    let m = if negative { -dt2 } else { dt2 };
    let k: Integer = &m * &m + a2 * e2 * &m + a4 * e4;
    let dk: Integer = d * k;
    let signed = if negative { -dk } else { dk };
    is_perfect_square(&signed).map(|r| (m, r * tb))
}

/// Sieves the egg over `u = m/e^2`, `1 <= e <= bound`, keeping rational
/// points whose `v` has denominator `e^3`. Each hit contributes both `±v`.
pub fn egg_sieve(target: &RatioTarget, cfg: &SearchConfig) -> Result<Vec<SolutionRecord>> {
    cfg.validate()?;
    let curve = target.curve();
    let points = egg_points(&curve, cfg)?;
    let mut records = Vec::new();
    for p in &points {
        if let Some(rec) = SolutionRecord::from_point(target, &curve, p, Provenance::EggSieve)? {
            records.push(rec);
        }
    }
    Ok(dedupe_by_triangle(records))
}

/// All rational egg points with `u`-denominator `e^2`, `e <= bound`, in
/// `(e, u, v)` order.
pub fn egg_points(curve: &Curve, cfg: &SearchConfig) -> Result<Vec<CurvePoint>> {
    cfg.validate()?;
    let grid = EggGrid::new(curve)?;
    let strata = run_strata(cfg, |e| grid.stratum(e));
    let mut out = Vec::new();
    for (e, hits) in strata {
        let eb = Integer::from(e);
        let e2: Integer = &eb * &eb;
        let e3: Integer = &e2 * &eb;
        let mut stratum_points = Vec::new();
        for (m, w) in hits {
            let u = Rational::new(m, e2.clone());
            if *u.denom() != e2 && !(u.is_zero() && e == 1) {
                continue;
            }
            for v in [
                Rational::new(-w.clone(), e3.clone()),
                Rational::new(w.clone(), e3.clone()),
            ] {
                let p = CurvePoint::affine(u.clone(), v);
                debug_assert!(curve.is_on_curve(&p));
                if curve.component_of(&p)? == Component::Egg && !stratum_points.contains(&p) {
                    stratum_points.push(p);
                }
            }
        }
        stratum_points.sort_by_key(|p| p.sort_key());
        out.extend(stratum_points);
    }
    Ok(out)
}

/// Forms `T + nG` for every torsion point `T`, seed `G` and `|n| <= bound`,
/// in the order `n = 0, 1, -1, 2, -2, ...`. One record per distinct point;
/// torsion points without a solution are skipped.
pub fn saturate(
    target: &RatioTarget,
    seeds: &[CurvePoint],
    cfg: &SearchConfig,
) -> Result<Vec<SolutionRecord>> {
    let curve = target.curve();
    if seeds.iter().any(|p| !curve.is_on_curve(p)) {
        return Err(Error::NotOnCurve);
    }
    if seeds.is_empty() {
        return Ok(Vec::new());
    }
    let torsion: Vec<CurvePoint> = torsion_subgroup(&curve)?
        .points
        .into_iter()
        .map(|(p, _)| p)
        .collect();
    let bound = cfg.multiple_bound as i64;
    let mut seen = HashSet::new();
    let mut records = Vec::new();
    for seed in seeds {
        let mut multiples = vec![CurvePoint::Infinity];
        for _ in 0..bound {
            let next = curve.add_unchecked(multiples.last().unwrap(), seed);
            multiples.push(next);
        }
        for n in std::iter::once(0).chain((1..=bound).flat_map(|k| [k, -k])) {
            let ng = &multiples[n.unsigned_abs() as usize];
            let ng = if n < 0 {
                crate::curve::negate_point(ng)
            } else {
                ng.clone()
            };
            for t in &torsion {
                let p = curve.add_unchecked(t, &ng);
                if !seen.insert(p.clone()) {
                    continue;
                }
                if let Some(rec) =
                    SolutionRecord::from_point(target, &curve, &p, Provenance::Saturation)?
                {
                    records.push(rec);
                }
            }
        }
    }
    Ok(records)
}

/// Full search for one target: both sieves, then saturation seeded with the
/// lowest-height egg point of every triangle found. Returns one record per
/// distinct triangle.
pub fn solve(target: &RatioTarget, cfg: &SearchConfig) -> Result<Vec<SolutionRecord>> {
    let mut records = quartic_sieve(target, cfg)?;
    records.extend(egg_sieve(target, cfg)?);
    let records = dedupe_by_triangle(records);
    let seeds: Vec<CurvePoint> = records.iter().map(|r| r.point.clone()).collect();
    let mut all = records;
    all.extend(saturate(target, &seeds, cfg)?);
    Ok(dedupe_by_triangle(all))
}

/// Near-equilateral search. When `M = 2k^2 + 2k` the curve has three
/// rational 2-torsion points and the torsion points on the egg already give
/// triangles, including the isosceles `(2k, 2k+1, 2k+1)`; otherwise the egg
/// is sieved and the hits saturated.
pub fn near_equilateral(m: u64, cfg: &SearchConfig) -> Result<Vec<SolutionRecord>> {
    let target = RatioTarget::near_equilateral(m)?;
    let curve = target.curve();
    if isosceles_parameter(m).is_some() {
        let torsion = torsion_subgroup(&curve)?;
        let mut records = Vec::new();
        for (p, _) in &torsion.points {
            if let Some(rec) = SolutionRecord::from_point(&target, &curve, p, Provenance::Torsion)?
            {
                records.push(rec);
            }
        }
        return Ok(dedupe_by_triangle(records));
    }
    let found = egg_sieve(&target, cfg)?;
    let seeds: Vec<CurvePoint> = found.iter().map(|r| r.point.clone()).collect();
    let mut all = found;
    all.extend(saturate(&target, &seeds, cfg)?);
    Ok(dedupe_by_triangle(all))
}

/// `k` with `M = 2k^2 + 2k`, if any.
pub fn isosceles_parameter(m: u64) -> Option<u64> {
    // 2M + 1 = (2k + 1)^2
    let root = is_perfect_square(&Integer::from(2 * m + 1))?.to_u64()?;
    (root >= 3).then(|| (root - 1) / 2)
}

#[derive(Debug, Clone)]
pub struct ScanReport {
    pub from: u64,
    pub to: u64,
    pub records: Vec<SolutionRecord>,
    /// Values of `N` with at least one triangle, ascending.
    pub triangle_ns: Vec<u64>,
    /// `N mod 8` histogram over `triangle_ns`.
    pub residues: BTreeMap<u8, usize>,
}

impl ScanReport {
    /// Triangle-bearing `N` with `N mod 8 != 2`.
    pub fn residue_exceptions(&self) -> Vec<u64> {
        self.triangle_ns
            .iter()
            .copied()
            .filter(|n| n % 8 != 2)
            .collect()
    }
}

/// Runs the quartic sieve for every `N` in `from..=to`.
pub fn scan_range(from: u64, to: u64, cfg: &SearchConfig) -> Result<ScanReport> {
    if from < 3 || from > to {
        return Err(Error::InvalidRange { from, to });
    }
    cfg.validate()?;
    let per_n: Vec<Result<Vec<SolutionRecord>>> = (from..=to)
        .into_par_iter()
        .map(|n| quartic_sieve(&RatioTarget::Integer(n), cfg))
        .collect();
    let mut records = Vec::new();
    let mut triangle_ns = Vec::new();
    let mut residues = BTreeMap::new();
    for (n, recs) in (from..=to).zip(per_n) {
        let recs = recs?;
        if !recs.is_empty() {
            triangle_ns.push(n);
            *residues.entry((n % 8) as u8).or_insert(0) += 1;
        }
        records.extend(recs);
    }
    Ok(ScanReport {
        from,
        to,
        records,
        triangle_ns,
        residues,
    })
}
