//! Constructed cleaning scripts for trees, verified by simulation.

use copvis::strategies::{
    rank_cleaning_script, t_family_script, tree_one_visibility_script, verify_seeing,
};
use copvis::treerank::rank;
use copvis::Recipe;

fn main() -> copvis::Result<()> {
    let gen = "tfamily:k=3,ell=1".parse::<Recipe>()?.generate()?;
    let script = t_family_script(&gen.graph, 1, gen.certificate.as_ref())?;
    println!(
        "T(3,1) on {} vertices: {} cops, {} rounds, verified {}",
        gen.graph.n(),
        script.cops(),
        script.rounds(),
        verify_seeing(&gen.graph, 1, &script)?
    );

    for seed in 0..5 {
        let t = Recipe::RandomTree { n: 20, seed }.generate()?.graph;
        let one = tree_one_visibility_script(&t)?;
        let ranked = rank_cleaning_script(&t, 1)?;
        println!(
            "randtree seed {seed}: radius {}, radius-based script {} cops, rank {} script {} cops",
            t.radius(),
            one.cops(),
            rank(&t, 1)?.k,
            ranked.cops()
        );
    }
    Ok(())
}
