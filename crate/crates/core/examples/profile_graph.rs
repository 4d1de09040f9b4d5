//! Cop numbers across all visibility radii, with the inequality checks.

use copvis::solver::{profile, ProfileOptions};
use copvis::Recipe;

fn main() -> copvis::Result<()> {
    let recipe = std::env::args()
        .nth(1)
        .unwrap_or_else(|| "randconn:n=8,p=0.3,seed=7".into());
    let g = recipe.parse::<Recipe>()?.generate()?.graph;
    let opts = ProfileOptions {
        monotone: true,
        delayed: true,
        ..ProfileOptions::default()
    };
    let p = profile(&g, &opts)?;
    println!(
        "{recipe}: classical {} zero-visibility {} gamma {}",
        p.classical, p.zero_visibility, p.gamma
    );
    for e in &p.entries {
        println!(
            "  ell={} capture={} see={} monotone={:?} domination={}",
            e.ell, e.capture, e.see, e.monotone, e.domination
        );
    }
    println!("  time-delayed {:?}", p.time_delayed);
    for b in &p.cut_bounds {
        println!(
            "  cut vertex {} at ell={}: bound {:?}",
            b.vertex, b.ell, b.bound
        );
    }
    println!("  violations: {}", p.violations.len());
    Ok(())
}
