//! Scans a range of N with the quartic sieve and tallies N mod 8 over the
//! values that produced triangles.
//!
//!     cargo run --release --example residue_scan -- 3 100

use integer_triangles::{scan_range, SearchConfig};

fn main() -> integer_triangles::Result<()> {
    let mut args = std::env::args().skip(1);
    let from: u64 = args.next().map_or(3, |s| s.parse().unwrap());
    let to: u64 = args.next().map_or(100, |s| s.parse().unwrap());
    let report = scan_range(from, to, &SearchConfig::default())?;
    println!(
        "N with triangles in {from}..={to}: {:?}",
        report.triangle_ns
    );
    println!("N mod 8 histogram: {:?}", report.residues);
    let odd_ones = report.residue_exceptions();
    if !odd_ones.is_empty() {
        println!("WARNING: N not congruent to 2 mod 8: {odd_ones:?}");
    }
    Ok(())
}
