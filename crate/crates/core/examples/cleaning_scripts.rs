//! Scripted strategies on the subdivided binary tree: two cops clean it
//! with recontamination, three clean it monotonically.

use copvis::engine::{simulate_script, GameSpec, Variant};
use copvis::strategies::t_ell_scripts;
use copvis::Recipe;

fn main() -> copvis::Result<()> {
    let t = "subdivided:3,3".parse::<Recipe>()?.generate()?.graph;
    let scripts = t_ell_scripts(&t, 1)?;
    for (name, script) in [
        ("two cops", &scripts.two_cop),
        ("three cops", &scripts.three_cop_monotone),
    ] {
        let spec = GameSpec::new(&t, 1, script.cops(), Variant::See)?;
        let r = simulate_script(&t, &spec, script)?;
        println!(
            "{name}: {} rounds, seen by round {:?}, monotone {}",
            script.rounds(),
            r.seen_guaranteed_at,
            r.monotone
        );
        for e in r.recontamination.iter().take(3) {
            println!("  vertex {} recontaminated in round {}", e.vertex, e.round);
        }
    }
    // scripts are plain text, one line per round
    let text = scripts.two_cop.to_text();
    println!(
        "first lines:\n{}",
        text.lines().take(3).collect::<Vec<_>>().join("\n")
    );
    Ok(())
}
