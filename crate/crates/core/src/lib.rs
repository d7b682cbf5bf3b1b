//! Integer-sided triangles whose circumradius-to-inradius ratio `R/r` is a
//! prescribed integer `N` or `2 + 1/M`.
//!
//! Such triangles correspond to rational points on the egg component of the
//! elliptic curves
//!
//! ```text
//! E_N: v^2 = u^3 + 2(2N^2 - 2N - 1) u^2 + (4N + 1) u
//! F_M: v^2 = u^3 + (6M^2 + 12M + 4) u^2 + (9M^4 + 4M^3) u
//! ```
//!
//! The crate finds them by exact-arithmetic search: a sieve over the
//! equivalent quartic, a sieve over the egg itself, and saturation of found
//! points by torsion translates and small multiples.
//!
//! ```
//! use integer_triangles::{ratio, RatioTarget, Triple, point_to_solution, g_over_s_to_points};
//! use integer_triangles::arith::rat;
//!
//! assert_eq!(ratio(&Triple::new(11, 39, 49)).unwrap(), rat(26, 1));
//!
//! let target = RatioTarget::integer(26).unwrap();
//! let points = g_over_s_to_points(&target, &rat(26, 33));
//! let found = points
//!     .iter()
//!     .filter_map(|p| point_to_solution(&target, p).ok())
//!     .find_map(|out| out.triangle().cloned())
//!     .unwrap();
//! assert_eq!(found.sorted().to_string(), "(11, 39, 49)");
//! ```

pub mod arith;
pub mod cli;
pub mod curve;
pub mod error;
pub mod search;
pub mod table;
pub mod torsion;
pub mod transform;
pub mod triangle;

pub use arith::{Integer, Rational};
pub use curve::{Component, Curve, CurveFamily, CurvePoint, RealRoot, RealRoots};
pub use error::{Error, Result};
pub use search::{
    egg_sieve, quartic_sieve, saturate, scan_range, Provenance, ScanReport, SearchConfig,
    SolutionRecord,
};
pub use torsion::{order_of, torsion_subgroup, TorsionReport, TorsionStructure};
pub use transform::{
    build_f_quadratic, curve_for, g_over_s_to_points, point_to_g_over_s, point_to_solution,
    positivity_window, solve_f_quadratic, triangle_to_points, FRoots, QuadraticInF, RatioTarget,
    SolutionOutcome,
};
pub use triangle::{
    angles_degrees, euler_distance_sq, is_valid_triangle, ratio, ratio_via_radii, to_primitive,
    Triangle, Triple,
};
