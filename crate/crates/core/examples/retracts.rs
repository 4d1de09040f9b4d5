//! Cop numbers never grow when passing to a retract.

use copvis::engine::Variant;
use copvis::graph::{find_retraction, VertexSet};
use copvis::solver::{cop_number, DEFAULT_BUDGET};
use copvis::Recipe;

fn main() -> copvis::Result<()> {
    // a pendant path on a 4-cycle retracts onto the cycle
    let g = copvis::Graph::new(6, &[(0, 1), (1, 2), (2, 3), (3, 0), (0, 4), (4, 5)])?;
    let image = VertexSet::from_iter(6, [0, 1, 2, 3]);
    let f = find_retraction(&g, &image).expect("the cycle is a retract");
    println!("retraction {f:?}");
    let h = g.induced(&image.to_vec());
    for ell in [1, 2] {
        for variant in [Variant::Capture, Variant::See] {
            println!(
                "ell={ell} {variant:<8} H={} G={}",
                cop_number(&h, ell, variant, DEFAULT_BUDGET)?,
                cop_number(&g, ell, variant, DEFAULT_BUDGET)?
            );
        }
    }
    // a retract is isometric: a path of length 3 in C6 qualifies, one of
    // length 4 does not
    let c6 = Recipe::Cycle(6).generate()?.graph;
    for len in [4, 5] {
        let path = VertexSet::from_iter(6, 0..len);
        let found = find_retraction(&c6, &path).is_some();
        println!("{len}-vertex path in C6 is a retract: {found}");
    }
    Ok(())
}
