//! Tree rank with its certificate, checked against the exact solver.

use copvis::engine::Variant;
use copvis::solver::{cop_number, DEFAULT_BUDGET};
use copvis::treerank::{height_bound, rank, verify_certificate};
use copvis::Recipe;

fn main() -> copvis::Result<()> {
    let t = "tfamily:k=2,ell=1".parse::<Recipe>()?.generate()?.graph;
    let cert = rank(&t, 1)?;
    println!(
        "rank {} with hub {} ({} vertices in the witness)",
        cert.k,
        cert.q,
        cert.vertices().len()
    );
    for b in &cert.branches {
        println!("  branch via {}: {:?}", b.direction, b.path);
    }
    assert!(verify_certificate(&t, 1, &cert));
    println!("height bounds {:?}", height_bound(&t, 1)?);

    for seed in 0..8 {
        let t = Recipe::RandomTree { n: 12, seed }.generate()?.graph;
        let k = rank(&t, 1)?.k;
        let c = cop_number(&t, 1, Variant::Capture, DEFAULT_BUDGET)?;
        println!("randtree seed {seed}: rank {k}, solver {c}");
    }
    Ok(())
}
