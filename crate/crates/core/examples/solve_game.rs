//! Decide single games and compute cop numbers for each variant.

use copvis::engine::{GameSpec, Variant};
use copvis::solver::{cop_number, solve, DEFAULT_BUDGET};
use copvis::Recipe;

fn main() -> copvis::Result<()> {
    let g = Recipe::Cycle(7).generate()?.graph;
    for cops in 1..=2 {
        let spec = GameSpec::new(&g, 1, cops, Variant::Capture)?;
        let out = solve(&g, &spec, DEFAULT_BUDGET)?;
        println!(
            "C7, ell=1, {cops} cop(s): {:?} rounds={:?} states={}",
            out.winner, out.rounds, out.stats.states
        );
    }
    for variant in [
        Variant::Classical,
        Variant::ZeroVis,
        Variant::See,
        Variant::Capture,
        Variant::MonotoneCapture,
        Variant::TimeDelayed,
    ] {
        let k = cop_number(&g, 1, variant, DEFAULT_BUDGET)?;
        println!("C7 {variant:<16} {k}");
    }
    Ok(())
}
