//! Seeing cops plus a classical team that chases the robber's shadow.

use copvis::engine::{play_match, Concrete, GameSpec, RandomWalker, Variant};
use copvis::solver::{solve_full, DEFAULT_BUDGET};
use copvis::strategies::ShadowCapture;
use copvis::Recipe;

fn main() -> copvis::Result<()> {
    for recipe in ["cycle:9", "petersen", "kbip:3,3"] {
        let g = recipe.parse::<Recipe>()?.generate()?.graph;
        let mut cops = ShadowCapture::new(&g, 2, DEFAULT_BUDGET)?;
        let spec = GameSpec::new(&g, 2, cops.cops(), Variant::Capture)?;
        let mut best = solve_full(&g, &spec, DEFAULT_BUDGET)?;
        let trace = play_match(&g, &spec, &mut cops, &mut best, 200)?;
        println!(
            "{recipe:<9} {} cops vs optimal robber: {:?} in {} rounds",
            spec.cops, trace.outcome, trace.rounds
        );

        let mut cops = ShadowCapture::new(&g, 2, DEFAULT_BUDGET)?;
        let mut walker = Concrete::new(RandomWalker::seeded(1));
        let trace = play_match(&g, &spec, &mut cops, &mut walker, 200)?;
        println!(
            "{recipe:<9} {} cops vs random robber:  {:?} in {} rounds",
            spec.cops, trace.outcome, trace.rounds
        );
    }
    Ok(())
}
