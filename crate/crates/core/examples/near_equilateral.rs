//! Triangles with R/r = 2 + 1/M.
//!
//! For M = 2k^2 + 2k the torsion already gives the isosceles triangle
//! (2k, 2k+1, 2k+1). For other M the egg has to be searched; M = 89 needs
//! an egg denominator of 1813, which takes a few seconds in release mode:
//!
//!     cargo run --release --example near_equilateral -- 89 1813

use integer_triangles::search::{self, SearchConfig};
use integer_triangles::{angles_degrees, ratio_via_radii, RatioTarget, Triangle};

fn main() -> integer_triangles::Result<()> {
    for k in 1..=4u64 {
        let m = 2 * k * k + 2 * k;
        let found = search::near_equilateral(m, &SearchConfig::default())?;
        let sides: Vec<String> = found
            .iter()
            .map(|r| r.triangle.as_ref().unwrap().sorted().to_string())
            .collect();
        println!("M={m:>3}: {}", sides.join(" "));
    }

    let mut args = std::env::args().skip(1);
    let m: u64 = args
        .next()
        .map_or(89, |s| s.parse().expect("M must be an integer"));
    match args.next() {
        Some(bound) => {
            let cfg = SearchConfig::with_bound(bound.parse().expect("bound must be an integer"));
            for r in search::near_equilateral(m, &cfg)? {
                report(m, r.triangle.as_ref().unwrap());
            }
        }
        None if m == 89 => {
            // Known sides; pass a bound to search for them instead.
            let t = Triangle::new(10188073747943u64, 10937217961673u64, 11065215566304u64)?;
            report(m, &t);
        }
        None => println!("pass a denominator bound to search M={m}"),
    }
    Ok(())
}

fn report(m: u64, t: &Triangle) {
    let target = RatioTarget::NearEquilateral(m);
    let [a, b, c] = angles_degrees(t);
    println!(
        "M={m}: {t}  R/r={} (target {})  angles {a:.4} {b:.4} {c:.4}",
        ratio_via_radii(t),
        target.rho()
    );
}
