//! One cop captures any robber it has seen on a chordal graph.

use copvis::engine::{play_match, Concrete, FleeWalker, GameSpec, Variant};
use copvis::graph::chordal_peo;
use copvis::solver::{cop_number, solve_full, DEFAULT_BUDGET};
use copvis::strategies::{verify_chordal_pursuit, SeeThenPursue};
use copvis::Recipe;

fn main() -> copvis::Result<()> {
    let g = Recipe::RandomChordal { n: 10, seed: 3 }.generate()?.graph;
    let peo = chordal_peo(&g)?;
    for ell in [1, 2] {
        let check = verify_chordal_pursuit(&g, &peo, ell)?;
        println!(
            "ell={ell}: {} first sightings, all captured {}, worst {:?} rounds",
            check.configurations, check.captures, check.max_rounds
        );
    }

    let see = cop_number(&g, 1, Variant::See, DEFAULT_BUDGET)?;
    let spec = GameSpec::new(&g, 1, see, Variant::Capture)?;
    let seeing = solve_full(
        &g,
        &GameSpec::new(&g, 1, see, Variant::See)?,
        DEFAULT_BUDGET,
    )?;
    let mut cops = SeeThenPursue::new(&g, &peo, 1, seeing)?;
    let mut robber = Concrete::new(FleeWalker);
    let trace = play_match(&g, &spec, &mut cops, &mut robber, 100)?;
    println!(
        "{see} cop(s) vs fleeing robber: {:?} after {} rounds",
        trace.outcome, trace.rounds
    );
    Ok(())
}
