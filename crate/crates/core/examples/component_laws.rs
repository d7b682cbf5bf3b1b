//! Shows which combinations of an egg point with torsion and its multiples
//! stay on the egg, and therefore which give real triangles.

use integer_triangles::search::{egg_points, SearchConfig};
use integer_triangles::{saturate, Curve, RatioTarget};

fn main() -> integer_triangles::Result<()> {
    let target = RatioTarget::integer(26)?;
    let curve = Curve::e_n(26)?;
    let seed = egg_points(&curve, &SearchConfig::with_bound(1))?.remove(0);
    println!("seed {seed} on the {}", curve.component_of(&seed)?);

    let cfg = SearchConfig {
        multiple_bound: 2,
        ..Default::default()
    };
    for r in saturate(&target, &[seed], &cfg)? {
        let what = match (&r.triangle, &r.representation) {
            (Some(t), _) => format!("triangle {}", t.sorted()),
            (None, Some(s)) => format!("signed {s}"),
            _ => "no solution".to_string(),
        };
        println!("{:>8}  {what}", r.component.to_string());
    }
    Ok(())
}
