//! Searches for triangles with R/r = N using both sieves.
//!
//!     cargo run --release --example solve_search -- 74 200

use integer_triangles::search::{self, SearchConfig};
use integer_triangles::{egg_sieve, quartic_sieve, RatioTarget};

fn main() -> integer_triangles::Result<()> {
    let mut args = std::env::args().skip(1);
    let n: u64 = args
        .next()
        .map_or(26, |s| s.parse().expect("N must be an integer"));
    let bound: u64 = args
        .next()
        .map_or(200, |s| s.parse().expect("bound must be an integer"));
    let target = RatioTarget::integer(n)?;
    let cfg = SearchConfig::with_bound(bound);

    for (name, records) in [
        ("quartic sieve", quartic_sieve(&target, &cfg)?),
        ("egg sieve", egg_sieve(&target, &cfg)?),
    ] {
        println!("{name}:");
        for r in &records {
            println!(
                "  {}  from {}",
                r.triangle.as_ref().unwrap().sorted(),
                r.point
            );
        }
        if records.is_empty() {
            println!("  none up to bound {bound}");
        }
    }

    let all = search::solve(&target, &cfg)?;
    println!("after saturation: {} distinct triangles", all.len());
    for r in &all {
        println!(
            "  {} ({})",
            r.triangle.as_ref().unwrap().sorted(),
            r.provenance
        );
    }
    Ok(())
}
