//! Look for a cop-win graph where one cop sees the robber but two are
//! needed to capture it.

use copvis::cli::{seeing_gap, witness_candidate};
use copvis::solver::DEFAULT_BUDGET;

fn main() -> copvis::Result<()> {
    for i in 0..100_000 {
        let g = witness_candidate(i, 8, 0);
        if let Some(nums) = seeing_gap(&g, 1, DEFAULT_BUDGET)? {
            println!("candidate {i}: {:?}", nums);
            println!("{}", g.to_text());
            return Ok(());
        }
    }
    println!("no witness found");
    Ok(())
}
