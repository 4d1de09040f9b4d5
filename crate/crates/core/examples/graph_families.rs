//! Build graphs from recipes and print their basic structure.

use copvis::graph::{chordal_peo, copwin_ordering, k_domination_number};
use copvis::Recipe;

fn main() -> copvis::Result<()> {
    for recipe in [
        "cycle:6",
        "kbip:2,3",
        "petersen",
        "spider:4,4,4",
        "randchordal:n=9,seed=4",
    ] {
        let gen = recipe.parse::<Recipe>()?.generate()?;
        let g = &gen.graph;
        let m = g.metrics()?;
        println!(
            "{recipe:<24} n={:<3} m={:<3} radius={} diameter={} chordal={} copwin={} gamma={}",
            g.n(),
            g.edge_count(),
            m.radius,
            m.diameter,
            chordal_peo(g).is_ok(),
            copwin_ordering(g).is_ok(),
            k_domination_number(g, 1),
        );
    }
    // graphs round-trip through the plain edge-list format
    let g = Recipe::Cycle(5).generate()?.graph;
    let back = copvis::graph::parse_graph(&g.to_text())?;
    assert_eq!(g.hash(), back.hash());
    println!("cycle:5 hash {}", g.hash());
    Ok(())
}
