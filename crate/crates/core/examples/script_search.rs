//! Exhaustive search for cleaning scripts with a given number of cops.

use copvis::strategies::find_cleaning_script;
use copvis::Recipe;

fn main() -> copvis::Result<()> {
    for recipe in ["cycle:7", "spider:4,4,4", "petersen"] {
        let g = recipe.parse::<Recipe>()?.generate()?.graph;
        for cops in 1..=2 {
            for monotone in [false, true] {
                let found = find_cleaning_script(&g, 1, cops, monotone, 2_000_000)?;
                println!(
                    "{recipe:<14} cops={cops} monotone={monotone:<5} states={:<7} {}",
                    found.states,
                    match &found.script {
                        Some(s) => format!("script of {} rounds", s.rounds()),
                        None => "none".into(),
                    }
                );
            }
        }
    }
    Ok(())
}
