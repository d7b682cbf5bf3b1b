//! Prints the torsion subgroup for a few curves of each family and flags
//! anything the closed-form prediction misses.

use integer_triangles::torsion::deviations_from_closed_form;
use integer_triangles::{torsion_subgroup, Curve};

fn main() -> integer_triangles::Result<()> {
    let curves = [3u64, 7, 26]
        .map(|n| (format!("E_{n}"), Curve::e_n(n)))
        .into_iter()
        .chain([1u64, 4, 5, 12].map(|m| (format!("F_{m}"), Curve::f_m(m))));
    for (name, curve) in curves {
        let curve = curve?;
        let report = torsion_subgroup(&curve)?;
        println!("{name}: {}", report.structure);
        for (p, k) in &report.points {
            println!("    order {k:>2}  {p}");
        }
        for d in deviations_from_closed_form(&curve, &report) {
            println!("    note: {d}");
        }
    }
    Ok(())
}
