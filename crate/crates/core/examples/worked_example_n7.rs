//! Follows one rational point on E_7 all the way to a signed solution.
//!
//! The point lies on the unbounded branch, so the sides it produces solve
//! the ratio equation but one of them is negative.

use integer_triangles::arith::rat;
use integer_triangles::{
    build_f_quadratic, point_to_g_over_s, point_to_solution, solve_f_quadratic, Curve, CurvePoint,
    FRoots, RatioTarget, SolutionOutcome,
};

fn main() -> integer_triangles::Result<()> {
    let target = RatioTarget::integer(7)?;
    let curve = Curve::e_n(7)?;
    println!("E_7: v^2 = u^3 + {} u^2 + {} u", curve.a2(), curve.a4());

    let p = CurvePoint::affine(rat(29, 169), rat(6902, 2197));
    println!(
        "P = {p}, on curve: {}, component: {}",
        curve.is_on_curve(&p),
        curve.component_of(&p)?
    );

    let c = point_to_g_over_s(&target, &p)?;
    println!("g/s = {c}");

    let q = build_f_quadratic(&target, &rat(63, 1), &rat(65, 1));
    println!("quadratic in f: {} f^2 + {} f + {} = 0", q.a, q.b, q.c);
    if let Some(FRoots::Two(f1, f2)) = solve_f_quadratic(&q)? {
        println!("roots: {f1}, {f2}");
    }

    match point_to_solution(&target, &p)? {
        SolutionOutcome::Signed(t) => println!("signed representation {t}: not a triangle"),
        SolutionOutcome::Triangle(t) => println!("triangle {t}"),
        SolutionOutcome::NoSolution(why) => println!("no solution: {why}"),
    }
    Ok(())
}
